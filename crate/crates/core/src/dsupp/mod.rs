//! Divisorial support of finite modules over a curve: the characteristic polynomial
//! of a multiplication matrix, over polynomial, Laurent and dual-number entries.
//!
//! Sign convention: every characteristic polynomial here is `det(v·I − M)`, monic in `v`.
//! For a companion matrix of a monic `g` this returns `g` itself, including the
//! `a₃x³` term of a quartic.

pub mod berkowitz;

pub use berkowitz::{berkowitz, SquareMatrix};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{CommRing, Dual, LaurentPoly, Poly, Ring};

/// Companion matrix of `g`, monic in `var`: ones on the subdiagonal, last column
/// `(−a₀, …, −a_{d−1})`. Entries live in the ring of `g` and do not involve `var`.
pub fn companion_matrix(g: &Poly, var: &str) -> Result<SquareMatrix<Poly>> {
    let ring = g.ring();
    let idx = ring.var_index(var)?;
    let coeffs = g.coefficients_in(idx);
    let d = coeffs.len() - 1;
    if d == 0 || !coeffs[d].as_constant().is_some_and(|c| c.is_one()) {
        return Err(Error::NotMonic(var.to_string()));
    }
    let mut rows = vec![vec![ring.zero(); d]; d];
    for i in 1..d {
        rows[i][i - 1] = ring.one();
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row[d - 1] = coeffs[i].neg();
    }
    SquareMatrix::new(rows)
}

/// `det(v·I − M)` for a matrix whose entries live in a ring containing `v`.
pub fn char_poly(m: &SquareMatrix<Poly>, v: &str) -> Result<Poly> {
    let ring = m.get(0, 0).ring().clone();
    let vv = ring.var(v)?;
    if m.rows().iter().flatten().any(|e| e.involves(ring.var_index(v).unwrap())) {
        return Err(Error::Precondition(format!("matrix entries involve `{v}`")));
    }
    let coeffs = berkowitz(m);
    let n = m.size();
    Ok(coeffs.iter().enumerate().fold(ring.zero(), |acc, (i, c)| &acc + &(c * &vv.pow((n - i) as u32))))
}

/// Entries that may carry poles in a distinguished variable.
pub trait LaurentEntry: CommRing {
    fn pole_order(&self) -> u32;
    /// Multiplication by `u^k`.
    fn shift(&self, k: i64) -> Self;
}

impl LaurentEntry for LaurentPoly {
    fn pole_order(&self) -> u32 {
        LaurentPoly::pole_order(self)
    }
    fn shift(&self, k: i64) -> Self {
        LaurentPoly::shift(self, k)
    }
}

impl LaurentEntry for Dual<LaurentPoly> {
    fn pole_order(&self) -> u32 {
        self.body.pole_order().max(self.eps.pole_order())
    }
    fn shift(&self, k: i64) -> Self {
        Dual::new(self.body.shift(k), self.eps.shift(k))
    }
}

/// Coefficients of `det(v·I − M)` (highest first) for Laurent entries.
///
/// The common denominator `u^r` is cleared before running Berkowitz on a matrix
/// with regular entries; the coefficient of `v^k` is then rescaled by `u^{−r(n−k)}`.
/// The resulting pole order is checked against the bound `n·r`.
pub fn laurent_char_coeffs<T: LaurentEntry>(m: &SquareMatrix<T>) -> Result<Vec<T>> {
    let r = m.rows().iter().flatten().map(|e| e.pole_order()).max().unwrap_or(0) as i64;
    let n = m.size() as i64;
    let scaled = m.map(|e| e.shift(r));
    let coeffs = berkowitz(&scaled);
    let out: Vec<T> = coeffs.iter().enumerate().map(|(i, c)| c.shift(-r * i as i64)).collect();
    if let Some(bad) = out.iter().find(|c| c.pole_order() as i64 > n * r) {
        return Err(Error::Precondition(format!("pole order {} exceeds the bound {}", bad.pole_order(), n * r)));
    }
    Ok(out)
}

/// Assembles `Σ c_k v^k` with Laurent coefficients `c_k` into one Laurent polynomial
/// whose coefficient ring gains the variable `v`.
fn assemble(coeffs: &[LaurentPoly], v: &str) -> Result<LaurentPoly> {
    let first = &coeffs[0];
    let base = first.coeff_ring();
    let ring = base.append_vars(&[v])?;
    let vv = ring.var(v)?;
    let n = coeffs.len() - 1;
    let mut acc = LaurentPoly::zero(first.var(), &ring);
    for (i, c) in coeffs.iter().enumerate() {
        let vk = vv.pow((n - i) as u32);
        for (k, p) in c.terms() {
            acc = &acc + &LaurentPoly::term(first.var(), &p.to_ring(&ring)? * &vk, k);
        }
    }
    Ok(acc)
}

/// Equation of the divisorial support of a multiplication matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsuppResult {
    /// `det(v·I − M)` as a Laurent polynomial in `u` over `k[…, v]`; the ε-part is
    /// zero for matrices without ε.
    pub equation: Dual<LaurentPoly>,
    /// The equation has no negative power of `u`.
    pub is_cartier: bool,
    /// The most polar term, when there is one.
    pub polar_witness: Option<LaurentPoly>,
}

fn result(equation: Dual<LaurentPoly>) -> DsuppResult {
    let worst = [&equation.body, &equation.eps].into_iter().filter(|p| !p.is_regular()).min_by_key(|p| p.ord());
    let polar_witness = worst.map(|p| {
        let k = p.ord().unwrap();
        LaurentPoly::term(p.var(), p.coeff(k), k)
    });
    DsuppResult { is_cartier: polar_witness.is_none(), equation, polar_witness }
}

/// dsupp of a module over `k[u, u⁻¹]` presented by the matrix of multiplication by `v`.
pub fn dsupp(m: &SquareMatrix<LaurentPoly>, v: &str) -> Result<DsuppResult> {
    let body = assemble(&laurent_char_coeffs(m)?, v)?;
    let eps = body.zero_like();
    Ok(result(Dual::new(body, eps)))
}

/// dsupp over the dual numbers: entries are `body + eps·ε` with Laurent parts.
pub fn dsupp_dual(m: &SquareMatrix<Dual<LaurentPoly>>, v: &str) -> Result<DsuppResult> {
    let coeffs = laurent_char_coeffs(m)?;
    let bodies: Vec<LaurentPoly> = coeffs.iter().map(|c| c.body.clone()).collect();
    let epss: Vec<LaurentPoly> = coeffs.iter().map(|c| c.eps.clone()).collect();
    Ok(result(Dual::new(assemble(&bodies, v)?, assemble(&epss, v)?)))
}

/// Divisor of a torsion module `⊕ k[x]/(g_j)`: the product of the `g_j`.
pub fn dsupp_torsion(mods: &[Poly], var: &str) -> Result<Poly> {
    let first = mods.first().ok_or_else(|| Error::ZeroInput("no modules".into()))?;
    let mut acc = first.ring().one();
    for g in mods {
        companion_matrix(g, var)?;
        acc = acc.checked_mul(g)?;
    }
    Ok(acc)
}

/// Relative Cartier test for `eq = f + ε·y^{−r}·g` with `f` regular and `f ≡ f_k`.
///
/// The divisor is Cartier iff `g ∈ (f_k, y^r)`; `y` is the Laurent variable of `eq`.
pub fn is_relative_cartier(eq: &Dual<LaurentPoly>, f_k: &Poly, r: u32) -> Result<bool> {
    let ring = f_k.ring();
    if !eq.body.is_regular() {
        return Err(Error::MalformedPolarShape(format!("the ε-free part {} has a pole", eq.body)));
    }
    if eq.body.to_poly(ring)? != *f_k {
        return Err(Error::MalformedPolarShape(format!("the ε-free part {} differs from {f_k}", eq.body)));
    }
    if eq.eps.pole_order() > r {
        return Err(Error::MalformedPolarShape(format!(
            "ε-part has a pole of order {} > {r}",
            eq.eps.pole_order()
        )));
    }
    let g = eq.eps.shift(r as i64).to_poly(ring)?;
    relative_cartier_membership(f_k, &g, eq.body.var(), r)
}

/// `g ∈ (f_k, y^r)`.
pub fn relative_cartier_membership(f_k: &Poly, g: &Poly, y: &str, r: u32) -> Result<bool> {
    let ring: &Ring = f_k.ring();
    let yr = ring.var(y)?.pow(r);
    Ideal::new(ring, vec![f_k.clone(), yr])?.contains(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn companion_round_trip() {
        let r = Ring::new(Field::Rationals, &["x"]).unwrap();
        let x = r.var("x").unwrap();
        let g = &(&x.pow(4) + &(&r.from_i64(3) * &x.pow(3))) - &r.from_i64(7);
        let m = companion_matrix(&g, "x").unwrap();
        assert_eq!(m.get(0, 3), &r.from_i64(7));
        assert_eq!(m.get(3, 3), &r.from_i64(-3));
        assert_eq!(char_poly(&m, "x").unwrap(), g);
        assert!(matches!(companion_matrix(&(&r.from_i64(2) * &x), "x"), Err(Error::NotMonic(_))));
    }

    #[test]
    fn torsion_product() {
        let r = Ring::new(Field::Rationals, &["x"]).unwrap();
        let x = r.var("x").unwrap();
        let a = &x - &r.one();
        let b = &x + &r.one();
        let d = dsupp_torsion(&[a.clone(), a.clone(), b.clone()], "x").unwrap();
        assert_eq!(d, &(&a * &a) * &b);
    }

    #[test]
    fn polar_entries() {
        let c = Ring::new(Field::Rationals, &[] as &[&str]).unwrap();
        let e = |k: i64, s: i64| LaurentPoly::monomial("u", &c, Field::Rationals.from_i64(s), k);
        let m = SquareMatrix::new(vec![vec![e(-1, 1), e(0, 0)], vec![e(0, 0), e(1, 2)]]).unwrap();
        let res = dsupp(&m, "v").unwrap();
        assert!(!res.is_cartier);
        assert_eq!(res.polar_witness.unwrap().ord(), Some(-1));
    }
}
