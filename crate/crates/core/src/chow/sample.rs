//! Ideals of Chow equations sampled from random linear projections to the plane.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ideals::{axes_ring, CycleSpec};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, Ideal};
use crate::linalg::Matrix;
use crate::poly::{Field, MonomialOrder, Poly, Ring, Scalar};

/// Parameters for [`sample_chow_ideal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    /// Maximum number of accepted projections.
    pub trials: usize,
    pub seed: u64,
    /// Coefficients are drawn from `{−bound, …, bound} \ {0}`.
    pub bound: i64,
    /// Draws per stabilization batch.
    pub batch: usize,
    /// Redraws allowed for projections that are not finite on the cycle.
    pub max_rejections: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { trials: 50, seed: 0, bound: 7, batch: 10, max_rejections: 1000 }
    }
}

/// Outcome of a sampling run.
#[derive(Clone, Debug)]
pub struct SampleReport {
    pub ideal: Ideal,
    /// Two consecutive batches added nothing new.
    pub stabilized: bool,
    pub draws: usize,
    pub rejected: usize,
}

/// A component prepared for fast image computation.
enum Component {
    /// A line through the origin with the given direction.
    Line(Vec<Scalar>),
    General(Ideal),
}

fn classify(i: &Ideal) -> Result<Component> {
    let ring = i.ring();
    let n = ring.nvars();
    let gb = i.groebner_basis();
    let linear = gb.iter().all(|g| g.is_homogeneous() && g.total_degree() == Some(1));
    if linear && gb.len() + 1 == n {
        let zero_exp = |k: usize| {
            let mut e = vec![0; n];
            e[k] = 1;
            e
        };
        let rows = gb.iter().map(|g| (0..n).map(|k| g.coeff(&zero_exp(k))).collect()).collect();
        let kernel = Matrix::new(ring.field(), rows, n).nullspace();
        return Ok(Component::Line(kernel.into_iter().next().expect("one-dimensional kernel")));
    }
    Ok(Component::General(i.clone()))
}

/// Pullback of the image equation of a component under `(ℓ1, ℓ2)`; `None` when the
/// projection is not finite on the component.
fn pulled_back_image(c: &Component, l1: &Poly, l2: &Poly) -> Result<Option<Poly>> {
    let ring = l1.ring();
    match c {
        Component::Line(d) => {
            let d_poly: Vec<Poly> = d.iter().map(|s| ring.constant(s.clone())).collect();
            let s = l1.substitute(&d_poly)?.constant_term();
            let t = l2.substitute(&d_poly)?.constant_term();
            if s.is_zero() && t.is_zero() {
                return Ok(None);
            }
            Ok(Some(&l1.scale(&t) - &l2.scale(&s)))
        }
        Component::General(i) => {
            let (s, t) = (ring.fresh_var("s"), ring.fresh_var("t"));
            let big = ring.append_vars(&[s.as_str(), t.as_str()])?;
            let sv = big.var(&s)?;
            let tv = big.var(&t)?;
            let mut gens: Vec<Poly> = i.gens().iter().map(|g| g.to_ring(&big)).collect::<Result<_>>()?;
            gens.push(&sv - &l1.to_ring(&big)?);
            gens.push(&tv - &l2.to_ring(&big)?);
            let names: Vec<&str> = ring.vars().iter().map(String::as_str).collect();
            let image = eliminate(&Ideal::new(&big, gens)?, &names)?;
            let gb = image.gb(MonomialOrder::GrevLex);
            if gb.len() != 1 || gb[0].is_constant() {
                return Ok(None);
            }
            // the image ring has variables (s, t) in that order
            let back = gb[0].substitute(&[l1.clone(), l2.clone()])?;
            Ok(Some(back))
        }
    }
}

/// Tracks the span (for homogeneous generators of one degree) or the ideal generated so far.
struct Accumulator {
    ring: Ring,
    gens: Vec<Poly>,
    pivots: BTreeMap<Vec<u32>, Poly>,
    degree: Option<u32>,
    span_mode: bool,
}

impl Accumulator {
    fn new(ring: &Ring) -> Self {
        Accumulator { ring: ring.clone(), gens: Vec::new(), pivots: BTreeMap::new(), degree: None, span_mode: true }
    }

    /// Adds `p`; returns whether it enlarged the ideal.
    fn add(&mut self, p: Poly) -> Result<bool> {
        if self.span_mode {
            let same_degree = p.is_homogeneous() && (self.degree.is_none() || self.degree == p.total_degree());
            if !same_degree {
                self.span_mode = false;
            }
        }
        if self.span_mode {
            self.degree = p.total_degree();
            let mut r = p.clone();
            while let Some((e, c)) = r.leading_term(MonomialOrder::Lex).map(|(e, c)| (e.clone(), c.clone())) {
                match self.pivots.get(&e) {
                    Some(piv) => r = &r - &piv.scale(&c),
                    None => {
                        self.pivots.insert(e, r.monic(MonomialOrder::Lex));
                        self.gens.push(p);
                        return Ok(true);
                    }
                }
            }
            return Ok(false);
        }
        let current = Ideal::new(&self.ring, self.gens.clone())?;
        if current.contains(&p)? {
            return Ok(false);
        }
        self.gens.push(p);
        Ok(true)
    }

    /// The accumulated generators; in span mode the reduced row echelon basis of the span.
    fn generators(self) -> Vec<Poly> {
        if !self.span_mode || self.gens.is_empty() {
            return self.gens;
        }
        let support: Vec<Vec<u32>> = self
            .gens
            .iter()
            .flat_map(|g| g.terms().map(|(e, _)| e.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .rev()
            .collect();
        let rows = self.gens.iter().map(|g| support.iter().map(|e| g.coeff(e)).collect()).collect();
        let mut m = Matrix::new(self.ring.field(), rows, support.len());
        let rank = m.rref().len();
        m.rows[..rank]
            .iter()
            .map(|row| self.ring.from_terms(support.iter().cloned().zip(row.iter().cloned())))
            .collect()
    }
}

fn draw(rng: &mut ChaCha8Rng, field: Field, bound: i64) -> Scalar {
    loop {
        let k = rng.gen_range(-bound..=bound);
        let s = field.from_i64(k);
        if k != 0 && !s.is_zero() {
            return s;
        }
    }
}

/// Samples the ideal of Chow equations of a curve cycle: each accepted random projection
/// `(ℓ1, ℓ2)` to the plane contributes `∏_i h_i(ℓ1, ℓ2)^{m_i}` where `h_i` is the
/// image equation of the component `Z_i`.
pub fn sample_chow_ideal(cycle: &CycleSpec, opts: &SampleOptions) -> Result<SampleReport> {
    let ring = cycle.ring().clone();
    let field = ring.field();
    let comps = cycle.components().iter().map(|(i, m)| Ok((classify(i)?, *m))).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut acc = Accumulator::new(&ring);
    let (mut draws, mut rejected, mut quiet_batches, mut added_in_batch) = (0usize, 0usize, 0usize, false);
    let batch = opts.batch.max(1);
    let mut stabilized = false;
    while draws < opts.trials {
        let l1 = ring.from_terms((0..ring.nvars()).map(|k| unit_term(&ring, k, draw(&mut rng, field, opts.bound))));
        let l2 = ring.from_terms((0..ring.nvars()).map(|k| unit_term(&ring, k, draw(&mut rng, field, opts.bound))));
        let mut eq = Some(ring.one());
        for (c, m) in &comps {
            eq = match (eq, pulled_back_image(c, &l1, &l2)?) {
                (Some(acc), Some(h)) => Some(&acc * &h.pow(*m)),
                _ => None,
            };
        }
        let Some(eq) = eq else {
            rejected += 1;
            if rejected > opts.max_rejections {
                return Err(Error::Precondition(format!("{rejected} projections were not finite on the cycle")));
            }
            continue;
        };
        draws += 1;
        added_in_batch |= acc.add(eq)?;
        if draws % batch == 0 {
            quiet_batches = if added_in_batch { 0 } else { quiet_batches + 1 };
            added_in_batch = false;
            if quiet_batches >= 2 {
                stabilized = true;
                break;
            }
        }
    }
    Ok(SampleReport { ideal: Ideal::new(&ring, acc.generators())?, stabilized, draws, rejected })
}

fn unit_term(ring: &Ring, k: usize, c: Scalar) -> (Vec<u32>, Scalar) {
    let mut e = vec![0; ring.nvars()];
    e[k] = 1;
    (e, c)
}

/// The `n` coordinate axes of `k[x1, …, xn]` as a reduced cycle.
pub fn axes_cycle(n: usize, field: Field) -> Result<CycleSpec> {
    let ring = axes_ring(n, field)?;
    let x = ring.gens();
    let comps = (0..n)
        .map(|j| {
            let gens = (0..n).filter(|&i| i != j).map(|i| x[i].clone()).collect();
            Ok((Ideal::new(&ring, gens)?, 1))
        })
        .collect::<Result<Vec<_>>>()?;
    CycleSpec::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::chow_ideal_axes;

    #[test]
    fn axes_sampling_matches_closed_form() {
        let cycle = axes_cycle(3, Field::Rationals).unwrap();
        let rep = sample_chow_ideal(&cycle, &SampleOptions { trials: 50, seed: 1, ..Default::default() }).unwrap();
        assert!(rep.stabilized);
        let closed = chow_ideal_axes(3, Field::Rationals).unwrap();
        assert!(rep.ideal.ideal_equal(&closed).unwrap());
    }

    #[test]
    fn a_line_gives_its_own_ideal() {
        let r = Ring::new(Field::Rationals, &["x", "y", "z"]).unwrap();
        let line = Ideal::new(&r, vec![r.var("x").unwrap(), r.var("y").unwrap()]).unwrap();
        let cycle = CycleSpec::new(vec![(line.clone(), 1)]).unwrap();
        let rep = sample_chow_ideal(&cycle, &SampleOptions { trials: 30, seed: 3, ..Default::default() }).unwrap();
        assert!(rep.ideal.ideal_equal(&line).unwrap());
    }
}
