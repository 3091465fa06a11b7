//! Principality of divisorial ideals `f + ε·y^{−r}·g`, and explicit ideals of relative
//! Mumford divisors over `k[ε]`.

use crate::error::{Error, Result};
use crate::groebner::{quotient, quotient_length, torsion_length, Ideal};
use crate::poly::{Field, Poly, Ring, Scalar};

/// Outcome of [`cartier_principal_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierReport {
    /// `g_k ∈ (f_k, y^r)`.
    pub member: bool,
    /// `y` is a non-zerodivisor modulo `f_k`.
    pub y_regular_mod_f: bool,
    /// `y` is a non-zerodivisor modulo `g_k`.
    pub y_regular_mod_g: bool,
}

impl CartierReport {
    /// Both hypotheses hold, so `member` decides principality.
    pub fn decided(&self) -> bool {
        self.y_regular_mod_f && self.y_regular_mod_g
    }

    /// `Some(principal)` when decided.
    pub fn principal(&self) -> Option<bool> {
        self.decided().then_some(self.member)
    }
}

/// `((h) : y) = (h)`; zero `h` counts as regular.
fn nonzerodivisor_mod(y: &Poly, h: &Poly) -> Result<bool> {
    let ideal = Ideal::new(h.ring(), vec![h.clone()])?;
    quotient(&ideal, y)?.ideal_equal(&ideal)
}

/// Principality test for the divisorial ideal of `f + ε·y^{−r}·g_k`: principal iff
/// `g_k ∈ (f_k, y^r)`, valid when `y` is a non-zerodivisor modulo `f_k` and `g_k`. The
/// hypotheses are checked and reported alongside the membership answer.
pub fn cartier_principal_test(f_k: &Poly, g_k: &Poly, y: &str, r: u32) -> Result<CartierReport> {
    let ring = f_k.ring();
    ring.check_same(g_k.ring())?;
    let yv = ring.var(y)?;
    let member = Ideal::new(ring, vec![f_k.clone(), yv.pow(r)])?.contains(g_k)?;
    Ok(CartierReport { member, y_regular_mod_f: nonzerodivisor_mod(&yv, f_k)?, y_regular_mod_g: nonzerodivisor_mod(&yv, g_k)? })
}

/// Families of explicit ideals of relative Mumford divisors over `k[ε]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    /// `(v², v·u^r + q(u)ε, vε)` in `k[u, v, ε]`; `q` is given by its coefficients from the
    /// constant term up and needs `q(0) ≠ 0`.
    SmoothR { r: u32, q: Vec<Scalar> },
    /// `((v² − u³)², v(v² − u³) + ε, (v² − u³)ε)` in `k[u, v, ε]`.
    Cusp,
    /// `(f², fg + ε, fε)` for a system of parameters `f, g` of a polynomial ring.
    Jfg { f: Poly, g: Poly },
}

/// Generators together with the torsion of the fiber over `ε = 0`.
#[derive(Clone, Debug)]
pub struct ExampleIdeal {
    /// In the ring of the data with a trailing variable for `ε`; contains `ε²`.
    pub ideal: Ideal,
    pub eps: String,
    /// The ideal of the fiber over `ε = 0`, without the `ε` variable.
    pub central_fiber: Ideal,
    /// `torsion_length` of the central fiber.
    pub torsion: usize,
    /// Length of the module the torsion should be isomorphic to.
    pub expected_torsion: usize,
}

pub fn example_ideal_generators(kind: &ExampleKind, field: Field) -> Result<ExampleIdeal> {
    let plane = || Ring::new(field, &["u", "v"]);
    // (f, g) such that the torsion is R/(f, g)
    let (base, f, g) = match kind {
        ExampleKind::SmoothR { r, q } => {
            if q.first().is_none_or(Scalar::is_zero) {
                return Err(Error::Precondition("q(0) must be nonzero".into()));
            }
            let base = plane()?;
            let (u, v) = (base.var_at(0), base.var_at(1));
            (base, v, u.pow(*r))
        }
        ExampleKind::Cusp => {
            let base = plane()?;
            let (u, v) = (base.var_at(0), base.var_at(1));
            (base, &v.pow(2) - &u.pow(3), v)
        }
        ExampleKind::Jfg { f, g } => {
            f.ring().check_same(g.ring())?;
            (f.ring().clone(), f.clone(), g.clone())
        }
    };
    if base.field() != field {
        return Err(Error::RingMismatch(format!("data over {} requested over {field}", base.field())));
    }
    let eps = base.fresh_var("eps");
    let big = base.append_vars(&[eps.as_str()])?;
    let e = big.var(&eps)?;
    let (fb, gb) = (f.to_ring(&big)?, g.to_ring(&big)?);
    let mut gens = match kind {
        ExampleKind::SmoothR { q, .. } => {
            let u = big.var_at(0);
            let qpoly = q.iter().enumerate().fold(big.zero(), |acc, (k, c)| &acc + &u.pow(k as u32).scale(c));
            vec![fb.pow(2), &(&fb * &gb) + &(&qpoly * &e), &fb * &e]
        }
        _ => vec![fb.pow(2), &(&fb * &gb) + &e, &fb * &e],
    };
    gens.push(e.pow(2));
    let ideal = Ideal::new(&big, gens)?;
    let mut at_zero = big.gens();
    at_zero[big.nvars() - 1] = big.zero();
    let fiber_gens = ideal.gens().iter().map(|p| p.substitute(&at_zero)?.to_ring(&base)).collect::<Result<Vec<_>>>()?;
    let central_fiber = Ideal::new(&base, fiber_gens)?;
    let torsion = torsion_length(&central_fiber)?;
    let expected_torsion = quotient_length(&Ideal::new(&base, vec![f, g])?)?;
    Ok(ExampleIdeal { ideal, eps, central_fiber, torsion, expected_torsion })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principality() {
        let r = Ring::new(Field::Rationals, &["u", "v"]).unwrap();
        let (u, v) = (r.var("u").unwrap(), r.var("v").unwrap());
        let q = &r.one() + &u;
        let rep = cartier_principal_test(&v, &q, "u", 1).unwrap();
        assert_eq!(rep.principal(), Some(false));
        assert_eq!(cartier_principal_test(&v, &v, "u", 1).unwrap().principal(), Some(true));
        let f = &v.pow(2) - &u.pow(3);
        let rep = cartier_principal_test(&f, &(&u.pow(3) * &v), "u", 3).unwrap();
        assert!(rep.member);
        assert!(!rep.decided());
    }

    #[test]
    fn example_torsions() {
        let q = vec![Field::Rationals.one(), Field::Rationals.one()];
        let ex = example_ideal_generators(&ExampleKind::SmoothR { r: 2, q }, Field::Rationals).unwrap();
        assert_eq!((ex.torsion, ex.expected_torsion), (2, 2));
        let ex = example_ideal_generators(&ExampleKind::Cusp, Field::Rationals).unwrap();
        assert_eq!((ex.torsion, ex.expected_torsion), (3, 3));
        let r = Ring::new(Field::Rationals, &["u", "v"]).unwrap();
        let kind = ExampleKind::Jfg { f: r.var("u").unwrap(), g: r.var("v").unwrap() };
        let ex = example_ideal_generators(&kind, Field::Rationals).unwrap();
        assert_eq!((ex.torsion, ex.expected_torsion), (1, 1));
    }
}
