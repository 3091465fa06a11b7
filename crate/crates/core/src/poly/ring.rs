use std::fmt::Debug;

use super::field::Scalar;

/// A commutative ring element that knows its own ring, so neutral elements can be
/// produced without a separate context value. Implemented by scalars, polynomials,
/// Laurent polynomials and dual numbers over any of them.
pub trait CommRing: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl CommRing for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero_like(self)
    }
    fn one_like(&self) -> Self {
        Scalar::one_like(self)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
}
