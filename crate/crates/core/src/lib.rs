//! Exact computer algebra for divisors on surfaces and curve singularities.
//!
//! The crate is organised bottom-up: [`poly`] supplies coefficient fields and
//! polynomial types, [`groebner`] the ideal engine, [`dsupp`] characteristic
//! polynomials of multiplication matrices, [`chow`] ideals of Chow equations
//! and [`deform`] the first-order deformation tests. [`expr`] parses and
//! prints the text syntax used by the command-line front end.

pub mod chow;
pub mod deform;
pub mod dsupp;
pub mod error;
pub mod expr;
pub mod groebner;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use groebner::Ideal;
pub use poly::{Dual, Field, LaurentPoly, MonomialOrder, Poly, Ring, Scalar};
