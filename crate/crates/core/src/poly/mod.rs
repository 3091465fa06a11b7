//! Coefficient fields, polynomial rings, Laurent polynomials and dual numbers.

pub mod dual;
pub mod field;
pub mod laurent;
pub mod monomial;
pub mod multinomial;
pub mod polynomial;
pub mod ring;

pub use dual::Dual;
pub use field::{Field, Scalar};
pub use laurent::LaurentPoly;
pub use monomial::{Exponent, MonomialOrder};
pub use multinomial::{multinomial, multinomial_nonzero};
pub use polynomial::{Poly, Ring};
pub use ring::CommRing;
