//! Laurent polynomials in one distinguished variable with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Scalar;
use super::polynomial::{write_monomial, write_terms, Poly, Ring};
use super::ring::CommRing;
use crate::error::{Error, Result};

/// `Σ_k c_k · var^k` with `k ∈ ℤ` and `c_k` in a polynomial ring not containing `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    var: String,
    coeff_ring: Ring,
    terms: BTreeMap<i64, Poly>,
}

impl LaurentPoly {
    pub fn zero(var: &str, coeff_ring: &Ring) -> Self {
        assert!(coeff_ring.var_index(var).is_err(), "Laurent variable must not be a coefficient variable");
        LaurentPoly { var: var.to_string(), coeff_ring: coeff_ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(var: &str, coeff_ring: &Ring) -> Self {
        Self::term(var, coeff_ring.one(), 0)
    }

    /// `c · var^k`.
    pub fn term(var: &str, c: Poly, k: i64) -> Self {
        let ring = c.ring().clone();
        let mut out = Self::zero(var, &ring);
        if !c.is_zero() {
            out.terms.insert(k, c);
        }
        out
    }

    /// `s · var^k` for a scalar `s`.
    pub fn monomial(var: &str, coeff_ring: &Ring, s: Scalar, k: i64) -> Self {
        Self::term(var, coeff_ring.constant(s), k)
    }

    /// Builds from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Poly)>>(var: &str, coeff_ring: &Ring, terms: I) -> Self {
        let mut out = Self::zero(var, coeff_ring);
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    /// Splits `p` along `var`; the coefficients land in `p`'s ring without `var`.
    pub fn from_poly(p: &Poly, var: &str) -> Result<Self> {
        let idx = p.ring().var_index(var)?;
        let coeff_ring = p.ring().without_var(var)?;
        let mut out = Self::zero(var, &coeff_ring);
        for (k, c) in p.coefficients_in(idx).into_iter().enumerate() {
            if !c.is_zero() {
                let c = c.to_ring(&coeff_ring).expect("variable was split off");
                out.terms.insert(k as i64, c);
            }
        }
        Ok(out)
    }

    /// Inverse of [`LaurentPoly::from_poly`]: requires no negative exponents.
    pub fn to_poly(&self, target: &Ring) -> Result<Poly> {
        if let Some(k) = self.ord().filter(|&k| k < 0) {
            return Err(Error::Precondition(format!("{} has a pole of order {}", self, -k)));
        }
        let v = target.var(&self.var)?;
        let mut acc = target.zero();
        for (&k, c) in &self.terms {
            acc = &acc + &(&c.to_ring(target)?.clone() * &v.pow(k as u32));
        }
        Ok(acc)
    }

    fn add_term(&mut self, k: i64, c: &Poly) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&k) {
            Some(x) => x + c,
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, s);
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeff_ring(&self) -> &Ring {
        &self.coeff_ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Poly {
        self.terms.get(&k).cloned().unwrap_or_else(|| self.coeff_ring.zero())
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Like [`LaurentPoly::ord`], but zero is an error.
    pub fn laurent_ord(&self) -> Result<i64> {
        self.ord().ok_or_else(|| Error::ZeroInput("order of the zero Laurent polynomial".into()))
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn pole_order(&self) -> u32 {
        self.ord().map_or(0, |k| (-k).max(0) as u32)
    }

    pub fn is_regular(&self) -> bool {
        self.pole_order() == 0
    }

    /// Coefficient of `var^-1`.
    pub fn residue(&self) -> Poly {
        self.coeff(-1)
    }

    /// Terms with negative exponent.
    pub fn polar_part(&self) -> Self {
        self.filter(|k| k < 0)
    }

    /// Terms with exponent ≥ 0.
    pub fn regular_part(&self) -> Self {
        self.filter(|k| k >= 0)
    }

    pub fn filter(&self, keep: impl Fn(i64) -> bool) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            coeff_ring: self.coeff_ring.clone(),
            terms: self.terms.iter().filter(|(k, _)| keep(**k)).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            coeff_ring: self.coeff_ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> Self {
        Self::from_terms(&self.var, &self.coeff_ring, self.terms.iter().map(|(k, x)| (*k, x * c)))
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        self.scale(&self.coeff_ring.constant(s.clone()))
    }

    /// Substitutes `var ↦ λ·var`, for `λ` a unit of the base field.
    pub fn rescale_var(&self, lambda: &Scalar) -> Result<Self> {
        let inv = lambda.inv()?;
        Ok(Self::from_terms(
            &self.var,
            &self.coeff_ring,
            self.terms.iter().map(|(k, c)| {
                let s = if *k >= 0 { lambda.pow(*k as u64) } else { inv.pow((-*k) as u64) };
                (*k, c.scale(&s))
            }),
        ))
    }

    /// Same data read in another variable name.
    pub fn rename(&self, var: &str) -> Self {
        let mut out = self.clone();
        out.var = var.to_string();
        out
    }

    /// All coefficients are constants; returns them as scalars keyed by exponent.
    pub fn scalar_terms(&self) -> Option<BTreeMap<i64, Scalar>> {
        self.terms.iter().map(|(k, c)| c.as_constant().map(|s| (*k, s))).collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.var, &self.coeff_ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            coeff_ring: self.coeff_ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::RingMismatch(format!("Laurent variable {} vs {}", self.var, other.var)));
        }
        self.coeff_ring.check_same(&other.coeff_ring)
    }
}

impl CommRing for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.var, &self.coeff_ring)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.var, &self.coeff_ring)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(&rhs.neg()).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<&str> = vec![self.var.as_str()];
        names.extend(self.coeff_ring.vars().iter().map(String::as_str));
        let order = self.coeff_ring.order();
        let mut terms = Vec::new();
        for (k, c) in self.terms.iter().rev() {
            for (e, s) in c.sorted_terms(order) {
                let mut exps = vec![*k];
                exps.extend(e.iter().map(|&x| x as i64));
                let mut mono = String::new();
                write_monomial(&mut mono, &names, &exps);
                terms.push((mono, s.clone()));
            }
        }
        write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn consts() -> Ring {
        Ring::new(Field::Rationals, &[] as &[&str]).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        let r = consts();
        LaurentPoly::from_terms("u", &r, terms.iter().map(|&(k, c)| (k, r.from_i64(c))))
    }

    #[test]
    fn orders() {
        assert_eq!(lp(&[(-1, 4), (0, 7)]).laurent_ord().unwrap(), -1);
        assert_eq!(lp(&[(3, 1)]).laurent_ord().unwrap(), 3);
        assert_eq!(lp(&[(-3, 1), (-1, 1)]).laurent_ord().unwrap(), -3);
        assert!(matches!(lp(&[]).laurent_ord(), Err(Error::ZeroInput(_))));
        assert_eq!(lp(&[(-3, 1), (-1, 1)]).pole_order(), 3);
    }

    #[test]
    fn multiplication_cancels_poles() {
        let a = lp(&[(-2, 1), (1, 3)]);
        let b = lp(&[(2, 1)]);
        assert_eq!(&a * &b, lp(&[(0, 1), (3, 3)]));
        assert!((&a * &b).is_regular());
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(-1, 1), (0, 3)]).to_string(), "3 + u^-1");
        assert_eq!(lp(&[(2, -2), (0, 1)]).to_string(), "-2*u^2 + 1");
        assert_eq!(lp(&[]).to_string(), "0");
    }

    #[test]
    fn poly_round_trip() {
        let r = Ring::new(Field::Rationals, &["u", "v"]).unwrap();
        let u = r.var("u").unwrap();
        let v = r.var("v").unwrap();
        let p = &(&v * &u.pow(3)) + &u;
        let l = LaurentPoly::from_poly(&p, "u").unwrap();
        assert_eq!(l.ord(), Some(1));
        assert_eq!(l.to_poly(&r).unwrap(), p);
    }
}
