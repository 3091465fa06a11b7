//! Sparse multivariate polynomials over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Field, Scalar};
use super::monomial::{self, Exponent, MonomialOrder};
use super::ring::CommRing;
use crate::error::{Error, Result};

#[derive(Debug)]
struct RingData {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed variable order.
///
/// Two rings are compatible when field and variable list agree; the monomial
/// order only affects printing and the default Gröbner order.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::UnknownVariable(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::RingMismatch(format!("variable `{v}` listed twice")));
            }
        }
        Ok(Ring(Arc::new(RingData { field, vars, order: MonomialOrder::GrevLex })))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring(Arc::new(RingData { field: self.0.field, vars: self.0.vars.clone(), order }))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.0.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        let i = self.var_index(name)?;
        Ok(self.var_at(i))
    }

    pub fn var_at(&self, i: usize) -> Poly {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e, self.field().one())
    }

    pub fn gens(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.var_at(i)).collect()
    }

    pub fn zero(&self) -> Poly {
        Poly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        self.monomial(vec![0; self.nvars()], c)
    }

    pub fn from_i64(&self, n: i64) -> Poly {
        self.constant(self.field().from_i64(n))
    }

    pub fn monomial(&self, exp: Exponent, coeff: Scalar) -> Poly {
        assert_eq!(exp.len(), self.nvars(), "exponent length must match the number of variables");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Poly { ring: self.clone(), terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Scalar)>>(&self, terms: I) -> Poly {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), self.nvars());
            accumulate(&mut out, e, c);
        }
        Poly { ring: self.clone(), terms: out }
    }

    /// A ring with `extra` variables placed before the existing ones.
    pub fn prepend_vars<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut vars: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        vars.extend(self.0.vars.iter().cloned());
        Ring::new(self.field(), &vars).map(|r| r.with_order(self.order()))
    }

    /// A ring with `extra` variables appended after the existing ones.
    pub fn append_vars<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut vars = self.0.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(self.field(), &vars).map(|r| r.with_order(self.order()))
    }

    /// The ring without the variable `name`.
    pub fn without_var(&self, name: &str) -> Result<Ring> {
        self.var_index(name)?;
        let vars: Vec<&String> = self.0.vars.iter().filter(|v| *v != name).collect();
        Ring::new(self.field(), &vars).map(|r| r.with_order(self.order()))
    }

    /// A variable name not used by this ring, derived from `stem`.
    pub fn fresh_var(&self, stem: &str) -> String {
        let mut k = 0;
        loop {
            let name = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
            if !self.0.vars.contains(&name) {
                return name;
            }
            k += 1;
        }
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self, other)))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.vars().join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn accumulate(map: &mut BTreeMap<Exponent, Scalar>, e: Exponent, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// A polynomial in canonical form: no zero coefficients, exponents keyed in a `BTreeMap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Exponent, Scalar>,
}

impl Poly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Exponent, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field().zero())
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Exponent, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| monomial::degree(e)).max()
    }

    /// Lowest total degree of a term: the multiplicity at the origin.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|e| monomial::degree(e)).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(self.field().zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.ring.nvars()])
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| monomial::degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Whether the polynomial only involves the listed variables.
    pub fn involves_only(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|e| e.iter().enumerate().all(|(i, &x)| x == 0 || vars.contains(&i)))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                accumulate(&mut terms, monomial::product(ea, eb), ca.mul(cb));
            }
        }
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn neg(&self) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul(c))).collect() }
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mul_term(&self, e: &[u32], c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(x, a)| (monomial::product(x, e), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Formal partial derivative with respect to variable index `var`.
    pub fn derivative_at(&self, var: usize) -> Poly {
        let field = self.field();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            accumulate(&mut terms, d, c.mul(&field.from_i64(e[var] as i64)));
        }
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn derivative(&self, var: &str) -> Result<Poly> {
        Ok(self.derivative_at(self.ring.var_index(var)?))
    }

    /// Evaluates into any commutative ring, given images of the variables and of scalars.
    pub fn eval_with<T: CommRing>(&self, values: &[T], embed: impl Fn(&Scalar) -> T) -> T {
        assert_eq!(values.len(), self.ring.nvars());
        let zero = embed(&self.field().zero());
        let mut power_cache: Vec<Vec<T>> = values.iter().map(|v| vec![v.one_like()]).collect();
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut term = embed(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap().mul(&values[i]);
                    cache.push(next);
                }
                term = term.mul(&cache[k as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            return Ok(self.clone());
        };
        for p in images {
            target.check_same(&p.ring)?;
            if p.field() != self.field() {
                return Err(Error::RingMismatch("substitution changes the field".into()));
            }
        }
        Ok(self.eval_with(images, |c| target.constant(c.clone())))
    }

    /// Substitutes for the named variables only, keeping the rest.
    pub fn substitute_named(&self, map: &[(&str, Poly)]) -> Result<Poly> {
        let mut images = self.ring.gens();
        for (name, img) in map {
            images[self.ring.var_index(name)?] = img.clone();
        }
        self.substitute(&images)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Variables that do not occur may be missing from `target`.
    pub fn to_ring(&self, target: &Ring) -> Result<Poly> {
        if self.field() != target.field() {
            return Err(Error::RingMismatch(format!("field {} vs {}", self.field(), target.field())));
        }
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.var_index(v).ok()).collect();
        let n = target.nvars();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut t = vec![0; n];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ring.vars()[i].clone()))?;
                t[j] += k;
            }
            accumulate(&mut terms, t, c.clone());
        }
        Ok(Poly { ring: target.clone(), terms })
    }

    /// Exact division; fails unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.ring.check_same(&divisor.ring)?;
        let order = MonomialOrder::Lex;
        let (lm, lc) = divisor
            .leading_term(order)
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or_else(|| Error::DivisionByNonUnit("division by zero polynomial".into()))?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((e, c)) = rem.leading_term(order).map(|(e, c)| (e.clone(), c.clone())) {
            if !monomial::divides(&lm, &e) {
                return Err(Error::DivisionByNonUnit(format!("{divisor} does not divide {self}")));
            }
            let q = monomial::quotient(&e, &lm);
            let qc = c.mul(&lc_inv);
            rem = rem.checked_sub(&divisor.mul_term(&q, &qc))?;
            quot = quot.checked_add(&self.ring.monomial(q, qc))?;
        }
        Ok(quot)
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out: Vec<BTreeMap<Exponent, Scalar>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[var];
            rest[var] = 0;
            accumulate(&mut out[k as usize], rest, c.clone());
        }
        out.into_iter().map(|terms| Poly { ring: self.ring.clone(), terms }).collect()
    }
}

impl CommRing for Poly {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }
    fn one_like(&self) -> Self {
        self.ring.one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Writes one monomial (without coefficient) such as `x^2*y`.
pub(crate) fn write_monomial(out: &mut String, names: &[&str], exps: &[i64]) {
    let mut first = true;
    for (name, &k) in names.iter().zip(exps) {
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if k != 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

/// Writes a signed term list; `terms` is already in display order.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(String, Scalar)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (mono, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { c.neg() } else { c.clone() };
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.ring.vars().iter().map(String::as_str).collect();
        let terms: Vec<(String, Scalar)> = self
            .sorted_terms(self.ring.order())
            .into_iter()
            .map(|(e, c)| {
                let mut s = String::new();
                let exps: Vec<i64> = e.iter().map(|&k| k as i64).collect();
                write_monomial(&mut s, &names, &exps);
                (s, c.clone())
            })
            .collect();
        write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(field: Field) -> (Ring, Poly, Poly) {
        let r = Ring::new(field, &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        (r, x, y)
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, y) = ring(Field::Rationals);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let (_, x, y) = ring(Field::Prime(2));
        assert_eq!((&x + &y).pow(2), &x.pow(2) + &y.pow(2));
    }

    #[test]
    fn derivatives() {
        let (r, x, y) = ring(Field::Rationals);
        let c = r.from_i64(3);
        let f = &(&x.pow(4) + &y.pow(4)) + &(&c * &(&x.pow(2) * &y.pow(2)));
        let fx = f.derivative("x").unwrap();
        assert_eq!(fx, &(&r.from_i64(4) * &x.pow(3)) + &(&r.from_i64(6) * &(&x * &y.pow(2))));
        assert!(y.derivative("x").unwrap().is_zero());
        assert!(matches!(x.derivative("z"), Err(Error::UnknownVariable(_))));
        let (_, x5, _) = ring(Field::Prime(5));
        assert!(x5.pow(5).derivative("x").unwrap().is_zero());
    }

    #[test]
    fn substitution_matches_projection_pattern() {
        let r = Ring::new(Field::Rationals, &["x", "y", "z"]).unwrap();
        let (x, y, z) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap());
        let a = r.from_i64(2);
        let b = r.from_i64(-3);
        let f = &x * &y;
        let g = f.substitute(&[&x - &(&a * &z), &y - &(&b * &z), z.clone()]).unwrap();
        assert_eq!(g, &(&x - &(&a * &z)) * &(&y - &(&b * &z)));
        assert_eq!(f.substitute(&r.gens()).unwrap(), f);
    }

    #[test]
    fn zero_prints_as_zero() {
        let (r, x, _) = ring(Field::Rationals);
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!((&x - &x).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = ring(Field::Rationals);
        let p = &(&x.pow(2) - &y.pow(2)) * &x;
        assert_eq!(p.div_exact(&(&x + &y)).unwrap(), &(&x - &y) * &x);
        assert!(x.div_exact(&y).is_err());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let (_, x, _) = ring(Field::Rationals);
        let (_, x5, _) = ring(Field::Prime(5));
        assert!(matches!(x.checked_add(&x5), Err(Error::RingMismatch(_))));
    }
}
