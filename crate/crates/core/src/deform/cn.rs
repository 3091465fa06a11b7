//! First-order deformations of the `n` coordinate axes `C_n ⊂ 𝔸^m`.
//!
//! Along the `x_j`-axis the deformation is `x_i = φ_ij(x_j)·ε` for `i ≠ j`, with `φ_ij` a
//! Laurent polynomial in `x_j`. Indices are 1-based; `φ_ij ≡ 0` for `j > n`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chow::axes_ring;
use crate::dsupp::{dsupp_dual, SquareMatrix};
use crate::error::{Error, Result};
use crate::groebner::{torsion_length, Ideal};
use crate::linalg::Matrix;
use crate::poly::{Dual, Field, LaurentPoly, Poly, Ring, Scalar};

/// The data `φ_ij` of a deformation of `C_n ⊂ 𝔸^m`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnDeformation {
    n: usize,
    m: usize,
    field: Field,
    phi: BTreeMap<(usize, usize), LaurentPoly>,
}

fn scalars(field: Field) -> Ring {
    Ring::new(field, &[] as &[&str]).expect("empty variable list")
}

impl CnDeformation {
    /// The trivial deformation of the `n` axes in `𝔸^m`, `m ≥ n ≥ 1`.
    pub fn zero(n: usize, m: usize, field: Field) -> Result<Self> {
        if n == 0 || m < n {
            return Err(Error::Precondition(format!("need 1 ≤ n ≤ m, got n = {n}, m = {m}")));
        }
        Ok(CnDeformation { n, m, field, phi: BTreeMap::new() })
    }

    /// Builds from entries `((i, j), φ_ij)`; each `φ_ij` must have scalar coefficients and
    /// is renamed to the variable `x_j`.
    pub fn new(n: usize, m: usize, field: Field, entries: impl IntoIterator<Item = ((usize, usize), LaurentPoly)>) -> Result<Self> {
        let mut d = Self::zero(n, m, field)?;
        for ((i, j), phi) in entries {
            d = d.with(i, j, phi)?;
        }
        Ok(d)
    }

    /// Replaces `φ_ij`.
    pub fn with(mut self, i: usize, j: usize, phi: LaurentPoly) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > self.m || j > self.n {
            return Err(Error::Precondition(format!("no entry ({i}, {j}) for n = {}, m = {}", self.n, self.m)));
        }
        let terms = phi.scalar_terms().ok_or_else(|| Error::Precondition(format!("{phi} has non-scalar coefficients")))?;
        if phi.coeff_ring().field() != self.field {
            return Err(Error::RingMismatch(format!("{phi} is not over {}", self.field)));
        }
        let var = format!("x{j}");
        let k = scalars(self.field);
        let phi = LaurentPoly::from_terms(&var, &k, terms.into_iter().map(|(e, s)| (e, k.constant(s))));
        if phi.is_zero() {
            self.phi.remove(&(i, j));
        } else {
            self.phi.insert((i, j), phi);
        }
        Ok(self)
    }

    /// A deformation with constant data `x_i = e_ij·ε` on the `x_j`-axis (`m = n`).
    pub fn from_constants(n: usize, field: Field, e: impl IntoIterator<Item = ((usize, usize), Scalar)>) -> Result<Self> {
        let k = scalars(field);
        Self::new(n, n, field, e.into_iter().map(|(ij, s)| (ij, LaurentPoly::monomial("x", &k, s, 0))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `φ_ij`, zero when not stored or `j > n`.
    pub fn entry(&self, i: usize, j: usize) -> LaurentPoly {
        self.phi.get(&(i, j)).cloned().unwrap_or_else(|| LaurentPoly::zero(&format!("x{j}"), &scalars(self.field)))
    }

    /// Nonzero entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &LaurentPoly)> {
        self.phi.iter().map(|(k, v)| (*k, v))
    }

    /// All index pairs `(i, j)`, `i ≠ j`, `i ≤ m`, `j ≤ n`, in lexicographic order.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.m).flat_map(|i| (1..=self.n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
    }

    pub fn pole_order(&self, i: usize, j: usize) -> u32 {
        self.phi.get(&(i, j)).map_or(0, |p| p.pole_order())
    }

    pub fn max_pole_order(&self) -> u32 {
        self.phi.values().map(|p| p.pole_order()).max().unwrap_or(0)
    }

    /// Coefficient of `x_j^k` in `φ_ij`.
    pub fn coeff(&self, i: usize, j: usize, k: i64) -> Scalar {
        self.phi.get(&(i, j)).map_or_else(|| self.field.zero(), |p| p.coeff(k).constant_term())
    }

    /// Residue `c_ij`, the coefficient of `x_j^{−1}`.
    pub fn residue(&self, i: usize, j: usize) -> Scalar {
        self.coeff(i, j, -1)
    }

    /// Constant terms `e_ij` over [`CnDeformation::index_pairs`].
    pub fn constant_vector(&self) -> Vec<Scalar> {
        self.index_pairs().into_iter().map(|(i, j)| self.coeff(i, j, 0)).collect()
    }

    /// The data in coordinates `y_i = λ_i x_i`: `φ'_ij(y) = λ_i φ_ij(λ_j⁻¹ y)`.
    pub fn rescale(&self, lambda: &[Scalar]) -> Result<Self> {
        if lambda.len() != self.m {
            return Err(Error::DimensionMismatch(format!("{} scalings for m = {}", lambda.len(), self.m)));
        }
        let mut out = Self::zero(self.n, self.m, self.field)?;
        for (&(i, j), p) in &self.phi {
            let q = p.rescale_var(&lambda[j - 1].inv()?)?.scale_scalar(&lambda[i - 1]);
            out = out.with(i, j, q)?;
        }
        Ok(out)
    }
}

/// Drops the strictly positive part of every `φ_ij`; it is absorbed by a coordinate change.
pub fn cn_normalize(raw: &CnDeformation) -> CnDeformation {
    let mut out = raw.clone();
    out.phi = raw.phi.iter().map(|(k, p)| (*k, p.filter(|e| e <= 0))).filter(|(_, p)| !p.is_zero()).collect();
    out
}

/// Flatness. For `n ≥ 3`: no `φ_ij` has a pole. For `n = 2`: only simple poles, with
/// `φ₁₂, φ₂₁` of equal residue.
pub fn cn_is_flat(d: &CnDeformation) -> Result<bool> {
    match d.n {
        0 | 1 => Err(Error::Precondition(format!("flatness criterion needs n ≥ 2, got {}", d.n))),
        2 => Ok(cn_is_kflat(d)),
        _ => Ok(d.max_pole_order() == 0),
    }
}

/// K-flatness: only simple poles, and `c_ij = c_ji` for all `i ≠ j` (with `c_ji = 0` when
/// `i > n`).
pub fn cn_is_kflat(d: &CnDeformation) -> bool {
    d.max_pole_order() <= 1 && d.index_pairs().into_iter().all(|(i, j)| d.residue(i, j) == d.residue(j, i))
}

/// Whether the ideal of Chow equations of `C_n` vanishes on the deformation: every pole
/// order is at most `n − 2`.
pub fn cn_chow_vanishing(d: &CnDeformation) -> Result<bool> {
    if d.n < 3 {
        return Err(Error::Precondition(format!("needs n ≥ 3, got {}", d.n)));
    }
    Ok(d.max_pole_order() as usize <= d.n - 2)
}

/// Equation `∏_j (v − ā_j u) − B·ε` of the image of the deformation under the projection
/// `(u, v) = (Σ x_i, Σ a_i x_i)` with `a_i = ā_i + a'_i ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionEquation {
    /// `∏_j (v − ā_j u)` in `k[u, v]`.
    pub base: Poly,
    /// Laurent in `u` with coefficients in `k[v]`.
    pub b: LaurentPoly,
}

impl ProjectionEquation {
    /// The image is a relative Cartier divisor iff `B` has no pole in `u`.
    pub fn is_cartier(&self) -> bool {
        self.b.is_regular()
    }
}

/// The projection equation; `ā` and `a'` have one entry per ambient coordinate and the
/// `ā_j`, `j ≤ n`, must be distinct.
pub fn cn_projection_equation(d: &CnDeformation, abar: &[Scalar], aprime: &[Scalar]) -> Result<ProjectionEquation> {
    if abar.len() != d.m || aprime.len() != d.m {
        return Err(Error::DimensionMismatch(format!("need {} coefficients, got {} and {}", d.m, abar.len(), aprime.len())));
    }
    for j in 0..d.n {
        if abar[..j].contains(&abar[j]) {
            return Err(Error::Precondition(format!("ā_{} repeats an earlier value; the projection is not finite", j + 1)));
        }
    }
    let k = scalars(d.field);
    let u = LaurentPoly::monomial("u", &k, d.field.one(), 1);
    let diag = (1..=d.n)
        .map(|j| {
            let aj = &abar[j - 1];
            let mut eps = u.scale_scalar(&aprime[j - 1]);
            for i in (1..=d.m).filter(|&i| i != j) {
                eps = &eps + &d.entry(i, j).rename("u").scale_scalar(&abar[i - 1].sub(aj));
            }
            Dual::new(u.scale_scalar(aj), eps)
        })
        .collect();
    let eq = dsupp_dual(&SquareMatrix::diagonal(diag)?, "v")?.equation;
    let plane = Ring::new(d.field, &["u", "v"])?;
    Ok(ProjectionEquation { base: eq.body.to_poly(&plane)?, b: eq.eps.neg() })
}

/// A projection witnessing that a deformation is not K-flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub lambda: Vec<Scalar>,
    pub abar: Vec<Scalar>,
    pub aprime: Vec<Scalar>,
    /// Most polar term of `B`.
    pub witness: LaurentPoly,
}

/// Budget for [`cn_refute_kflat`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RefuteOptions {
    /// Draws with `λ ≡ 1`.
    pub plain_draws: usize,
    /// Draws after a random rescaling of the coordinates.
    pub scaled_draws: usize,
    pub seed: u64,
    pub bound: i64,
}

impl Default for RefuteOptions {
    fn default() -> Self {
        RefuteOptions { plain_draws: 25, scaled_draws: 25, seed: 0, bound: 7 }
    }
}

fn nonzero(rng: &mut ChaCha8Rng, field: Field, bound: i64) -> Scalar {
    loop {
        let s = field.from_i64(rng.gen_range(-bound..=bound));
        if !s.is_zero() {
            return s;
        }
    }
}

fn distinct(rng: &mut ChaCha8Rng, field: Field, bound: i64, count: usize) -> Result<Vec<Scalar>> {
    let mut out: Vec<Scalar> = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > 10_000 {
            return Err(Error::TinyField(format!("cannot draw {count} distinct values from {field}")));
        }
        let s = field.from_i64(rng.gen_range(-bound..=bound));
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Searches random linear projections for one whose `B` has a pole. A hit proves the
/// deformation is not K-flat; no hit within the budget is evidence only.
pub fn cn_refute_kflat(d: &CnDeformation, opts: &RefuteOptions) -> Result<Option<Refutation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let field = d.field;
    let mut draws = Vec::with_capacity(opts.plain_draws + opts.scaled_draws);
    for k in 0..opts.plain_draws + opts.scaled_draws {
        let lambda = if k < opts.plain_draws {
            vec![field.one(); d.m]
        } else {
            (0..d.m).map(|_| nonzero(&mut rng, field, opts.bound)).collect()
        };
        let mut abar = distinct(&mut rng, field, opts.bound, d.n)?;
        abar.extend((d.n..d.m).map(|_| field.from_i64(rng.gen_range(-opts.bound..=opts.bound))));
        let aprime: Vec<Scalar> = (0..d.m).map(|_| field.from_i64(rng.gen_range(-opts.bound..=opts.bound))).collect();
        draws.push((lambda, abar, aprime));
    }
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(draws.len().max(1));
    let chunk = draws.len().div_ceil(threads).max(1);
    let found: Vec<Result<Option<Refutation>>> = std::thread::scope(|s| {
        let handles: Vec<_> = draws
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || -> Result<Option<Refutation>> {
                    for (lambda, abar, aprime) in part {
                        let eq = cn_projection_equation(&d.rescale(lambda)?, abar, aprime)?;
                        if let Some(k) = eq.b.ord().filter(|&k| k < 0) {
                            let witness = LaurentPoly::term(eq.b.var(), eq.b.coeff(k), k);
                            return Ok(Some(Refutation { lambda: lambda.clone(), abar: abar.clone(), aprime: aprime.clone(), witness }));
                        }
                    }
                    Ok(None)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("refutation worker panicked")).collect()
    });
    for r in found {
        if let Some(hit) = r? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// Ideal of the central fiber for data with at most simple poles and `m = n`.
pub fn cn_central_fiber_ideal(d: &CnDeformation) -> Result<Ideal> {
    if d.max_pole_order() > 1 {
        return Err(Error::Precondition(format!("pole of order {} > 1", d.max_pole_order())));
    }
    cn_central_fiber_ideal_general(d)
}

/// Length of the torsion of the central fiber, for data with at most simple poles.
pub fn cn_central_fiber_torsion(d: &CnDeformation) -> Result<usize> {
    torsion_length(&cn_central_fiber_ideal(d)?)
}

/// Ideal of the central fiber for arbitrary poles (`m = n`): the `g ∈ k[x]` that lift to
/// `g + hε` vanishing on every deformed axis.
///
/// On the `x_j`-axis, `g + hε` restricts to `g(X e_j) + (D_j(X) + h(X e_j))ε` with
/// `D_j = Σ_i ∂_i g(X e_j)·φ_ij(X)`; a lift exists iff `g ∈ I(C_n)`, every `D_j` is regular,
/// and the constant terms `D_j(0)` agree. Only monomials `x_i x_j^k` contribute to `D_j`, so
/// the conditions are linear on a finite window of them.
pub fn cn_central_fiber_ideal_general(d: &CnDeformation) -> Result<Ideal> {
    if d.m != d.n {
        return Err(Error::Unsupported(format!("central fiber for m = {} > n = {}", d.m, d.n)));
    }
    let n = d.n;
    if n < 2 {
        return Err(Error::Precondition("needs n ≥ 2".into()));
    }
    let field = d.field;
    let ring = axes_ring(n, field)?;
    let unit = |pairs: &[(usize, u32)]| {
        let mut e = vec![0u32; n];
        for &(v, k) in pairs {
            e[v - 1] += k;
        }
        e
    };
    let mut gens: Vec<Poly> = Vec::new();
    let mut window: Vec<Vec<u32>> = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            gens.push(ring.monomial(unit(&[(i, 2), (j, 2)]), field.one()));
            window.push(unit(&[(i, 1), (j, 1)]));
            for l in (j + 1)..=n {
                gens.push(ring.monomial(unit(&[(i, 1), (j, 1), (l, 1)]), field.one()));
            }
        }
    }
    for (i, j) in d.index_pairs() {
        let p = d.pole_order(i, j).max(1);
        for k in 2..=p {
            window.push(unit(&[(i, 1), (j, k)]));
        }
        gens.push(ring.monomial(unit(&[(i, 1), (j, p + 1)]), field.one()));
    }
    // D_j contribution of a window monomial: (axis j, exponent s) ↦ coefficient
    let contribution = |e: &[u32]| -> Vec<(usize, i64, Scalar)> {
        let mut out = Vec::new();
        for j in 1..=n {
            let others: Vec<usize> = (1..=n).filter(|&v| v != j && e[v - 1] > 0).collect();
            if e[j - 1] == 0 || others.len() != 1 || e[others[0] - 1] != 1 {
                continue;
            }
            let i = others[0];
            let k = e[j - 1] as i64;
            for (s, c) in d.entry(i, j).terms() {
                if s + k <= 0 {
                    out.push((j, s + k, c.constant_term()));
                }
            }
        }
        out
    };
    let contribs: Vec<_> = window.iter().map(|e| contribution(e)).collect();
    let depth = d.max_pole_order() as i64 + 1;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 1..=n {
        for s in -depth..0 {
            rows.push(contribs.iter().map(|c| sum_where(c, field, |a, b| a == j && b == s)).collect());
        }
    }
    for j in 2..=n {
        rows.push(
            contribs
                .iter()
                .map(|c| sum_where(c, field, |a, b| a == j && b == 0).sub(&sum_where(c, field, |a, b| a == 1 && b == 0)))
                .collect(),
        );
    }
    let kernel = Matrix::new(field, rows, window.len()).nullspace();
    for v in kernel {
        gens.push(ring.from_terms(window.iter().cloned().zip(v)));
    }
    Ok(Ideal::new(&ring, gens)?.reduced())
}

fn sum_where(c: &[(usize, i64, Scalar)], field: Field, pick: impl Fn(usize, i64) -> bool) -> Scalar {
    c.iter().filter(|(j, s, _)| pick(*j, *s)).fold(field.zero(), |acc, (_, _, x)| acc.add(x))
}

/// The smoothing `(p_i − p_j)x_i x_j + (λ_j x_i − λ_i x_j)t = 0` of `C_n` and its first-order
/// data `e_ij = λ_i/(p_i − p_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smoothing {
    /// In `k[x1, …, xn, t]`, one per pair `i < j`.
    pub equations: Vec<Poly>,
    pub first_order: CnDeformation,
}

pub fn cn_smoothing(p: &[Scalar], lambda: &[Scalar]) -> Result<Smoothing> {
    let n = p.len();
    if lambda.len() != n || n < 2 {
        return Err(Error::DimensionMismatch(format!("{} points and {} weights", n, lambda.len())));
    }
    let field = p[0].field();
    if let Some(i) = (0..n).find(|&i| p[..i].contains(&p[i])) {
        return Err(Error::Precondition(format!("p_{} repeats an earlier point", i + 1)));
    }
    if lambda.iter().any(Scalar::is_zero) {
        return Err(Error::Precondition("λ_i must be nonzero".into()));
    }
    let ring = axes_ring(n, field)?;
    let t_name = ring.fresh_var("t");
    let ring = ring.append_vars(&[t_name.as_str()])?;
    let x = ring.gens();
    let t = &x[n];
    let mut equations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let quad = (&x[i] * &x[j]).scale(&p[i].sub(&p[j]));
            let lin = &x[i].scale(&lambda[j]) - &x[j].scale(&lambda[i]);
            equations.push(&quad + &(&lin * t));
        }
    }
    let mut e = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            e.push(((i + 1, j + 1), lambda[i].mul(&p[i].sub(&p[j]).inv()?)));
        }
    }
    Ok(Smoothing { equations, first_order: CnDeformation::from_constants(n, field, e)? })
}

/// Ranks of sampled first-order smoothing data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanRank {
    /// Rank in the `n(n−1)`-dimensional space of constant data `e_ij`.
    pub raw: usize,
    /// Rank modulo the translations `e_ij ↦ e_ij − a_i`.
    pub modulo_translations: usize,
}

pub fn cn_smoothing_span_rank(samples: &[(Vec<Scalar>, Vec<Scalar>)], n: usize) -> Result<SpanRank> {
    if samples.len() < 2 {
        return Err(Error::Precondition(format!("need at least 2 samples, got {}", samples.len())));
    }
    let mut rows = Vec::with_capacity(samples.len());
    for (p, lambda) in samples {
        if p.len() != n {
            return Err(Error::DimensionMismatch(format!("sample of size {} for n = {n}", p.len())));
        }
        rows.push(cn_smoothing(p, lambda)?.first_order.constant_vector());
    }
    let field = samples[0].0[0].field();
    let pairs = CnDeformation::zero(n, n, field)?.index_pairs();
    let raw = Matrix::new(field, rows.clone(), pairs.len()).rank();
    let translations: Vec<Vec<Scalar>> = (1..=n)
        .map(|a| pairs.iter().map(|&(i, _)| if i == a { field.one() } else { field.zero() }).collect())
        .collect();
    let with_t = Matrix::new(field, rows.into_iter().chain(translations).collect(), pairs.len()).rank();
    Ok(SpanRank { raw, modulo_translations: with_t - n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Scalar {
        Field::Rationals.from_i64(x)
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        let k = scalars(Field::Rationals);
        LaurentPoly::from_terms("x", &k, terms.iter().map(|&(e, c)| (e, k.from_i64(c))))
    }

    #[test]
    fn normalize_keeps_polar_and_constant() {
        let d = CnDeformation::new(3, 3, Field::Rationals, [((1, 2), lp(&[(-1, 1), (0, 5), (2, 1)]))]).unwrap();
        let nd = cn_normalize(&d);
        assert_eq!(nd.entry(1, 2).to_string(), "5 + x2^-1");
        assert_eq!(cn_normalize(&nd), nd);
    }

    #[test]
    fn flatness_criteria() {
        let simple = CnDeformation::new(3, 3, Field::Rationals, [((1, 2), lp(&[(-1, 1)]))]).unwrap();
        assert!(!cn_is_flat(&simple).unwrap());
        assert!(!cn_is_kflat(&simple));
        let sym = simple.clone().with(2, 1, lp(&[(-1, 1)])).unwrap();
        assert!(cn_is_kflat(&sym));
        assert!(!cn_is_flat(&sym).unwrap());
        let two = CnDeformation::new(2, 2, Field::Rationals, [((1, 2), lp(&[(-1, 3)])), ((2, 1), lp(&[(-1, 3)]))]).unwrap();
        assert!(cn_is_flat(&two).unwrap());
        let double = CnDeformation::new(3, 3, Field::Rationals, [((1, 2), lp(&[(-2, 1)]))]).unwrap();
        assert!(!cn_is_kflat(&double));
        assert!(!cn_chow_vanishing(&double).unwrap());
        assert!(cn_chow_vanishing(&sym).unwrap());
    }

    #[test]
    fn projection_equations() {
        let zero = CnDeformation::zero(3, 3, Field::Rationals).unwrap();
        let eq = cn_projection_equation(&zero, &[q(1), q(2), q(3)], &[q(0), q(0), q(0)]).unwrap();
        assert!(eq.b.is_zero());
        assert_eq!(eq.base.total_degree(), Some(3));
        let one_pole = CnDeformation::new(3, 3, Field::Rationals, [((1, 2), lp(&[(-1, 1)]))]).unwrap();
        let eq = cn_projection_equation(&one_pole, &[q(1), q(2), q(3)], &[q(0), q(0), q(0)]).unwrap();
        assert_eq!(eq.b.ord(), Some(-1));
        assert!(cn_projection_equation(&one_pole, &[q(1), q(1), q(3)], &[q(0), q(0), q(0)]).is_err());
    }

    #[test]
    fn central_fiber_torsion() {
        let generic = CnDeformation::new(
            3,
            3,
            Field::Rationals,
            [((1, 2), lp(&[(-1, 1)])), ((2, 1), lp(&[(-1, 2)])), ((1, 3), lp(&[(-1, 3)])), ((3, 2), lp(&[(-1, 5)]))],
        )
        .unwrap();
        assert_eq!(cn_central_fiber_torsion(&generic).unwrap(), 2);
        assert_eq!(cn_central_fiber_torsion(&CnDeformation::zero(3, 3, Field::Rationals).unwrap()).unwrap(), 0);
    }

    #[test]
    fn smoothing_data() {
        let s = cn_smoothing(&[q(0), q(1)], &[q(1), q(1)]).unwrap();
        assert_eq!(s.equations[0].to_string(), "-x1*x2 + x1*t - x2*t");
        assert!(cn_is_flat(&s.first_order).unwrap());
        assert!(cn_smoothing(&[q(1), q(1)], &[q(1), q(1)]).is_err());
    }
}
