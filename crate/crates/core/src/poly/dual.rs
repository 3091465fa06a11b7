//! Dual numbers `T[ε]/(ε²)` over any commutative ring.

use std::fmt;

use super::polynomial::Poly;
use super::ring::CommRing;
use crate::error::{Error, Result};

/// `body + eps·ε` with `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual<T> {
    pub body: T,
    pub eps: T,
}

impl<T: CommRing> Dual<T> {
    pub fn new(body: T, eps: T) -> Self {
        Dual { body, eps }
    }

    /// The constant `x + 0·ε`.
    pub fn lift(x: T) -> Self {
        let eps = x.zero_like();
        Dual { body: x, eps }
    }

    pub fn is_pure_body(&self) -> bool {
        self.eps.is_zero()
    }

    /// `(a₀ + a₁ε)(b₀ + b₁ε) = a₀b₀ + (a₀b₁ + a₁b₀)ε`.
    pub fn dual_mul(&self, other: &Self) -> Self {
        Dual {
            body: self.body.mul(&other.body),
            eps: self.body.mul(&other.eps).add(&self.eps.mul(&other.body)),
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Dual<U> {
        Dual { body: f(&self.body), eps: f(&self.eps) }
    }
}

impl Poly {
    /// Substitutes dual-number images for the variables; `ε²` terms vanish automatically.
    pub fn substitute_dual(&self, images: &[Dual<Poly>]) -> Result<Dual<Poly>> {
        if images.len() != self.ring().nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring().nvars()
            )));
        }
        let Some(target) = images.first().map(|d| d.body.ring().clone()) else {
            return Ok(Dual::lift(self.clone()));
        };
        for d in images {
            target.check_same(d.body.ring())?;
            target.check_same(d.eps.ring())?;
        }
        Ok(self.eval_with(images, |c| Dual::lift(target.constant(c.clone()))))
    }
}

impl<T: CommRing> CommRing for Dual<T> {
    fn zero_like(&self) -> Self {
        Dual { body: self.body.zero_like(), eps: self.body.zero_like() }
    }
    fn one_like(&self) -> Self {
        Dual { body: self.body.one_like(), eps: self.body.zero_like() }
    }
    fn is_zero(&self) -> bool {
        self.body.is_zero() && self.eps.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Dual { body: self.body.add(&other.body), eps: self.eps.add(&other.eps) }
    }
    fn mul(&self, other: &Self) -> Self {
        self.dual_mul(other)
    }
    fn neg(&self) -> Self {
        Dual { body: self.body.neg(), eps: self.eps.neg() }
    }
}

impl<T: fmt::Display> fmt::Display for Dual<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*eps", self.body, self.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Ring};

    #[test]
    fn conjugate_product_drops_eps() {
        let r = Ring::new(Field::Rationals, &["u", "v"]).unwrap();
        let f = r.var("v").unwrap();
        let g = &r.var("u").unwrap().pow(2) + &r.one();
        let a = Dual::new(f.clone(), g.clone());
        let b = Dual::new(f.clone(), -&g);
        assert_eq!(a.dual_mul(&b), Dual::new(f.pow(2), r.zero()));
        let one = Dual::new(r.one(), g.clone());
        let inv = Dual::new(r.one(), -&g);
        assert_eq!(one.dual_mul(&inv), Dual::lift(r.one()));
    }

    #[test]
    fn product_rule() {
        let r = Ring::new(Field::Rationals, &["u"]).unwrap();
        let u = r.var("u").unwrap();
        let x = Dual::new(u.clone(), r.one());
        assert_eq!(x.dual_mul(&x), Dual::new(u.pow(2), &r.from_i64(2) * &u));
    }

    #[test]
    fn substitution_truncates_at_eps_squared() {
        let r = Ring::new(Field::Rationals, &["x", "alpha"]).unwrap();
        let x = r.var("x").unwrap();
        let alpha = r.var("alpha").unwrap();
        let img = [Dual::new(x.clone(), alpha.clone()), Dual::lift(alpha.clone())];
        let out = x.pow(2).substitute_dual(&img).unwrap();
        assert_eq!(out, Dual::new(x.pow(2), &(&r.from_i64(2) * &x) * &alpha));
    }
}
