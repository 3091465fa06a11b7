//! Sections of plane curves away from the origin, and first-order deformations
//! `f = ψε, z = φε` of plane curve singularities.

use std::fmt;

use num_integer::Integer;

use super::semigroup::MonomialCurve;
use crate::error::{Error, Result};
use crate::poly::{CommRing, LaurentPoly, Poly, Ring};

/// A plane curve `f(u, v) = 0`, `f` monic in `v` with coefficients in `k[u]`.
///
/// The ring of `f` has exactly two variables, read as `(u, v)` in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Curve {
    f: Poly,
    /// `f_0(u), …, f_{n−1}(u)` with `f = v^n + Σ f_i v^i`.
    lower: Vec<LaurentPoly>,
}

fn scalar_ring(ring: &Ring) -> Ring {
    Ring::new(ring.field(), &[] as &[&str]).expect("empty variable list")
}

/// `p ∈ k[u, v]` as its `v`-coefficients, each a Laurent polynomial in `u` over `k`.
fn v_coefficients(p: &Poly) -> Vec<LaurentPoly> {
    let ring = p.ring();
    let (u, k) = (&ring.vars()[0], scalar_ring(ring));
    let mut out: Vec<LaurentPoly> = Vec::new();
    for (e, c) in p.terms() {
        let j = e[1] as usize;
        if out.len() <= j {
            out.resize(j + 1, LaurentPoly::zero(u, &k));
        }
        out[j] = &out[j] + &LaurentPoly::monomial(u, &k, c.clone(), e[0] as i64);
    }
    out
}

impl Curve {
    fn new(f: &Poly) -> Result<Self> {
        let ring = f.ring();
        if ring.nvars() != 2 {
            return Err(Error::Precondition(format!("plane curves live in two variables, got {ring}")));
        }
        let coeffs = v_coefficients(f);
        let n = coeffs.len().saturating_sub(1);
        let lead = coeffs.last().and_then(|c| c.scalar_terms());
        let monic = n > 0 && lead.is_some_and(|t| t.len() == 1 && t.get(&0).is_some_and(|s| s.is_one()));
        if !monic {
            return Err(Error::NotMonic(format!("{f} in {}", ring.vars()[1])));
        }
        Ok(Curve { f: f.clone(), lower: coeffs[..n].to_vec() })
    }

    fn degree(&self) -> usize {
        self.lower.len()
    }

    fn u(&self) -> &str {
        &self.f.ring().vars()[0]
    }

    /// Division by `f` in `v`: rewrites `v^n = −Σ f_i v^i` until the length is `n`.
    fn reduce(&self, mut coeffs: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
        let n = self.degree();
        let zero = LaurentPoly::zero(self.u(), &scalar_ring(self.f.ring()));
        for d in (n..coeffs.len()).rev() {
            let top = std::mem::replace(&mut coeffs[d], zero.clone());
            if top.is_zero() {
                continue;
            }
            for (i, fi) in self.lower.iter().enumerate() {
                coeffs[d - n + i] = &coeffs[d - n + i] - &(&top * fi);
            }
        }
        coeffs.resize(n, zero);
        coeffs
    }
}

/// `Σ_{i<n} v^i g_i(u)` on the curve minus the origin, with Laurent `g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSectionRep {
    curve: Curve,
    coeffs: Vec<LaurentPoly>,
}

impl CurveSectionRep {
    /// Reduces `Σ v^i g_i` modulo `f`; any number of coefficients is accepted.
    pub fn new(f: &Poly, coeffs: Vec<LaurentPoly>) -> Result<Self> {
        let curve = Curve::new(f)?;
        for g in &coeffs {
            if g.var() != curve.u() || g.coeff_ring().nvars() != 0 || g.coeff_ring().field() != f.field() {
                return Err(Error::RingMismatch(format!("{g} is not a Laurent polynomial in {} over {}", curve.u(), f.field())));
            }
        }
        let coeffs = curve.reduce(coeffs);
        Ok(CurveSectionRep { curve, coeffs })
    }

    pub fn zero(f: &Poly) -> Result<Self> {
        Self::new(f, Vec::new())
    }

    pub fn from_poly(f: &Poly, p: &Poly) -> Result<Self> {
        f.ring().check_same(p.ring())?;
        Self::new(f, v_coefficients(p))
    }

    /// From a Laurent polynomial in `u` whose coefficients lie in `k[v]`.
    pub fn from_laurent(f: &Poly, s: &LaurentPoly) -> Result<Self> {
        let ring = f.ring();
        let (u, v) = (&ring.vars()[0], &ring.vars()[1]);
        if s.var() != u || s.coeff_ring().vars().iter().any(|x| x != v) || s.coeff_ring().field() != ring.field() {
            return Err(Error::RingMismatch(format!("{s} is not a Laurent polynomial in {u} over k[{v}]")));
        }
        let k = scalar_ring(ring);
        let mut coeffs: Vec<LaurentPoly> = Vec::new();
        for (e, c) in s.terms() {
            for (m, x) in c.terms() {
                let j = m.first().copied().unwrap_or(0) as usize;
                if coeffs.len() <= j {
                    coeffs.resize(j + 1, LaurentPoly::zero(u, &k));
                }
                coeffs[j] = &coeffs[j] + &LaurentPoly::monomial(u, &k, x.clone(), e);
            }
        }
        Self::new(f, coeffs)
    }

    /// The same section as a Laurent polynomial in `u` over `k[v]`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let ring = self.curve.f.ring();
        let (u, v) = (&ring.vars()[0], &ring.vars()[1]);
        let kv = Ring::new(ring.field(), &[v]).expect("one variable");
        let vv = kv.var_at(0);
        let mut out = LaurentPoly::zero(u, &kv);
        for (i, g) in self.coeffs.iter().enumerate() {
            for (e, c) in g.terms() {
                out = &out + &LaurentPoly::term(u, &c.to_ring(&kv).expect("constant") * &vv.pow(i as u32), e);
            }
        }
        out
    }

    pub fn f(&self) -> &Poly {
        &self.curve.f
    }

    /// `g_0, …, g_{n−1}`.
    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Extends over the origin: no `g_i` has a negative exponent.
    pub fn is_regular(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_regular)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.curve.f != other.curve.f {
            return Err(Error::RingMismatch(format!("sections of {} and {}", self.curve.f, other.curve.f)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CurveSectionRep { curve: self.curve.clone(), coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(CurveSectionRep { curve: self.curve.clone(), coeffs: self.curve.reduce(convolve(&self.coeffs, &other.coeffs)) })
    }
}

fn convolve(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

impl fmt::Display for CurveSectionRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// `s · p` reduced modulo `f`.
pub fn section_mul(s: &CurveSectionRep, p: &Poly) -> Result<CurveSectionRep> {
    s.mul(&CurveSectionRep::from_poly(s.f(), p)?)
}

impl MonomialCurve {
    /// `v^c − u^a` in a two-variable ring `k[u, v]`, with `u = x = t^c`, `v = y = t^a`.
    pub fn equation(&self, ring: &Ring) -> Result<Poly> {
        if ring.nvars() != 2 {
            return Err(Error::Precondition(format!("plane curves live in two variables, got {ring}")));
        }
        Ok(&ring.var_at(1).pow(self.c()) - &ring.var_at(0).pow(self.a()))
    }

    /// `(α, β)` with `t^k = u^α v^β` and `0 ≤ β < c`.
    pub fn t_power(&self, k: i64) -> (i64, u32) {
        let (a, c) = (self.a() as i64, self.c() as i64);
        let inv = a.extended_gcd(&c).x.mod_floor(&c);
        let beta = (k.mod_floor(&c) * inv).mod_floor(&c);
        ((k - beta * a) / c, beta as u32)
    }

    /// The section given by a Laurent polynomial in `t` with scalar coefficients.
    pub fn section_from_t(&self, ring: &Ring, phi: &LaurentPoly) -> Result<CurveSectionRep> {
        let f = self.equation(ring)?;
        let terms = phi.scalar_terms().ok_or_else(|| Error::Precondition(format!("{phi} has non-scalar coefficients")))?;
        let (u, k) = (&ring.vars()[0], scalar_ring(ring));
        let mut coeffs = vec![LaurentPoly::zero(u, &k); self.c() as usize];
        for (e, s) in terms {
            let (alpha, beta) = self.t_power(e);
            coeffs[beta as usize] = &coeffs[beta as usize] + &LaurentPoly::monomial(u, &k, s, alpha);
        }
        CurveSectionRep::new(&f, coeffs)
    }

    /// Inverse of [`MonomialCurve::section_from_t`]: `u^α v^β ↦ t^{αc + βa}`.
    pub fn section_to_t(&self, s: &CurveSectionRep, t: &str) -> Result<LaurentPoly> {
        if *s.f() != self.equation(s.f().ring())? {
            return Err(Error::Precondition(format!("{} is not the curve of ({}, {})", s.f(), self.a(), self.c())));
        }
        let k = scalar_ring(s.f().ring());
        let mut out = LaurentPoly::zero(t, &k);
        for (beta, g) in s.coeffs().iter().enumerate() {
            for (alpha, c) in g.terms() {
                let e = alpha * self.c() as i64 + beta as i64 * self.a() as i64;
                out = &out + &LaurentPoly::term(t, c.clone(), e);
            }
        }
        Ok(out)
    }

    /// Recognizes `f = v^c − u^a` with `gcd(a, c) = 1`.
    pub fn recognize(f: &Poly) -> Option<MonomialCurve> {
        let ring = f.ring();
        if ring.nvars() != 2 || f.num_terms() != 2 {
            return None;
        }
        let c = f.degree_in(1)?;
        let a = f.degree_in(0)?;
        let curve = MonomialCurve::new(a, c).ok()?;
        (curve.equation(ring).ok()? == *f).then_some(curve)
    }
}

/// `f = ψε, z = φε` over `k[ε]`, with `ψ, φ` sections of the curve `f = 0` off the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveDeformation {
    psi: CurveSectionRep,
    phi: CurveSectionRep,
    curve: Option<MonomialCurve>,
}

impl PlaneCurveDeformation {
    pub fn new(psi: CurveSectionRep, phi: CurveSectionRep) -> Result<Self> {
        psi.check_same(&phi)?;
        let curve = MonomialCurve::recognize(psi.f());
        Ok(PlaneCurveDeformation { psi, phi, curve })
    }

    /// Deformation of `x^a = y^c` with `ψ, φ` given in the parameter `t`.
    pub fn monomial(curve: MonomialCurve, ring: &Ring, psi: &LaurentPoly, phi: &LaurentPoly) -> Result<Self> {
        Self::new(curve.section_from_t(ring, psi)?, curve.section_from_t(ring, phi)?)
    }

    pub fn f(&self) -> &Poly {
        self.psi.f()
    }

    pub fn psi(&self) -> &CurveSectionRep {
        &self.psi
    }

    pub fn phi(&self) -> &CurveSectionRep {
        &self.phi
    }

    pub fn monomial_curve(&self) -> Option<MonomialCurve> {
        self.curve
    }
}

/// Classification of a plane deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneFlags {
    pub psi_regular: bool,
    pub flat: bool,
    /// `None` when the normalization of the curve is not available.
    pub globalizes: Option<bool>,
    pub cflat: bool,
    pub diagnostic: Option<String>,
}

/// Flat iff `φ` is regular, globalizes iff `φ` is regular on the normalization, C-flat iff
/// `f_u·φ` and `f_v·φ` are regular; all three require `ψ` regular.
pub fn plane_classify(d: &PlaneCurveDeformation) -> Result<PlaneFlags> {
    if !d.psi.is_regular() {
        return Ok(PlaneFlags {
            psi_regular: false,
            flat: false,
            globalizes: Some(false),
            cflat: false,
            diagnostic: Some(format!("psi = {} has a pole at the origin", d.psi)),
        });
    }
    let flat = d.phi.is_regular();
    let globalizes = match (flat, d.curve) {
        (true, _) => Some(true),
        (false, Some(curve)) => Some(curve.section_to_t(&d.phi, "t")?.is_regular()),
        (false, None) => None,
    };
    let f = d.f();
    let cflat = section_mul(&d.phi, &f.derivative_at(0))?.is_regular() && section_mul(&d.phi, &f.derivative_at(1))?.is_regular();
    let diagnostic = globalizes.is_none().then(|| format!("normalization of {f} not available"));
    Ok(PlaneFlags { psi_regular: true, flat, globalizes, cflat, diagnostic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn plane() -> Ring {
        Ring::new(Field::Rationals, &["u", "v"]).unwrap()
    }

    #[test]
    fn section_products() {
        let r = plane();
        let (u, v) = (r.var("u").unwrap(), r.var("v").unwrap());
        let f = &v.pow(2) - &u.pow(3);
        let s = CurveSectionRep::from_poly(&f, &v).unwrap();
        let sq = section_mul(&s, &v).unwrap();
        assert_eq!(sq, CurveSectionRep::from_poly(&f, &u.pow(3)).unwrap());
        let line = CurveSectionRep::from_poly(&v, &r.one()).unwrap();
        assert!(section_mul(&line, &(&v * &u)).unwrap().is_zero());
        let one = CurveSectionRep::from_poly(&f, &r.one()).unwrap();
        let p = &(&u * &v) + &r.from_i64(2);
        assert_eq!(section_mul(&one, &p).unwrap(), CurveSectionRep::from_poly(&f, &p).unwrap());
        assert!(CurveSectionRep::from_poly(&(&r.from_i64(2) * &v), &v).is_err());
    }

    #[test]
    fn t_powers_round_trip() {
        let curve = MonomialCurve::new(3, 5).unwrap();
        let r = plane();
        let k = Ring::new(Field::Rationals, &[] as &[&str]).unwrap();
        for e in -20..20 {
            let (alpha, beta) = curve.t_power(e);
            assert_eq!(alpha * 5 + beta as i64 * 3, e);
            let phi = LaurentPoly::monomial("t", &k, Field::Rationals.one(), e);
            let s = curve.section_from_t(&r, &phi).unwrap();
            assert_eq!(curve.section_to_t(&s, "t").unwrap(), phi);
            assert_eq!(s.is_regular(), curve.semigroup().contains(e));
        }
    }

    #[test]
    fn cusp_classification() {
        let curve = MonomialCurve::new(2, 3).unwrap();
        let r = plane();
        let k = Ring::new(Field::Rationals, &[] as &[&str]).unwrap();
        let t = |e: i64| LaurentPoly::monomial("t", &k, Field::Rationals.one(), e);
        let zero = LaurentPoly::zero("t", &k);
        let d = PlaneCurveDeformation::monomial(curve, &r, &zero, &t(-1)).unwrap();
        let flags = plane_classify(&d).unwrap();
        assert_eq!((flags.flat, flags.globalizes, flags.cflat), (false, Some(false), true));
        let d = PlaneCurveDeformation::monomial(curve, &r, &zero, &t(-2)).unwrap();
        assert!(!plane_classify(&d).unwrap().cflat);
        let d = PlaneCurveDeformation::monomial(curve, &r, &zero, &t(1)).unwrap();
        let flags = plane_classify(&d).unwrap();
        assert_eq!((flags.flat, flags.globalizes, flags.cflat), (false, Some(true), true));
        let d = PlaneCurveDeformation::monomial(curve, &r, &t(-1), &zero).unwrap();
        assert!(!plane_classify(&d).unwrap().psi_regular);
    }

    #[test]
    fn unknown_normalization() {
        let r = plane();
        let (u, v) = (r.var("u").unwrap(), r.var("v").unwrap());
        let f = &(&v.pow(2) - &u.pow(2)) - &u.pow(3);
        let k = Ring::new(Field::Rationals, &[] as &[&str]).unwrap();
        let phi = CurveSectionRep::new(&f, vec![LaurentPoly::monomial("u", &k, Field::Rationals.one(), -1)]).unwrap();
        let d = PlaneCurveDeformation::new(CurveSectionRep::zero(&f).unwrap(), phi).unwrap();
        let flags = plane_classify(&d).unwrap();
        assert!(!flags.flat);
        assert_eq!(flags.globalizes, None);
    }
}
