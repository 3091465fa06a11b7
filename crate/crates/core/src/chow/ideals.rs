//! Closed forms for ideals of Chow equations, and Chow hulls of cycles.

use crate::error::{Error, Result};
use crate::groebner::{elementwise_power, intersect_all, pure_part, Ideal, PowerScalars};
use crate::poly::monomial::exponents_of_degree;
use crate::poly::{Field, Poly, Ring, Scalar};

/// `D^m(f)`: `D⁰ = (f)` and `D^k` adds all first partials of the generators of `D^{k−1}`.
pub fn derivative_ideal(f: &Poly, m: u32) -> Result<Ideal> {
    let ring = f.ring();
    let mut cur = Ideal::new(ring, vec![f.clone()])?;
    for _ in 0..m {
        let mut gens = cur.gens().to_vec();
        for g in cur.gens() {
            for v in 0..ring.nvars() {
                gens.push(g.derivative_at(v));
            }
        }
        cur = Ideal::new(ring, gens)?.reduced();
    }
    Ok(cur)
}

/// Where the derivative series of a hypersurface pair stops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairForm {
    /// Local at the origin: stop at the multiplicity of `f`.
    #[default]
    Local,
    /// Homogeneous: stop at the degree of `f`.
    Homogeneous,
}

/// Ideal of Chow equations of `(f = z = 0)`: `(f, z·D(f), …, z^m·D^m(f))`.
///
/// Characteristic zero only; in positive characteristic the Taylor expansion behind
/// the formula needs divided powers.
pub fn chow_ideal_hypersurface_pair(f: &Poly, z: &str, form: PairForm) -> Result<Ideal> {
    let ring = f.ring();
    if ring.field().characteristic() != 0 {
        return Err(Error::Unsupported("hypersurface-pair Chow ideal in positive characteristic".into()));
    }
    let zi = ring.var_index(z)?;
    if f.involves(zi) {
        return Err(Error::Precondition(format!("{f} involves {z}")));
    }
    let m = match form {
        PairForm::Local => f.order_at_origin(),
        PairForm::Homogeneous => f.total_degree(),
    }
    .ok_or_else(|| Error::ZeroInput("f = 0".into()))?;
    let zv = ring.var_at(zi);
    let mut gens = vec![f.clone()];
    for k in 1..=m {
        let zk = zv.pow(k);
        gens.extend(derivative_ideal(f, k)?.gens().iter().map(|g| &zk * g));
    }
    Ok(Ideal::new(ring, gens)?.reduced())
}

/// The ring `k[x1, …, xn]`.
pub fn axes_ring(n: usize, field: Field) -> Result<Ring> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    Ring::new(field, &names)
}

/// Whether the degree-`n` monomial `w` is a generator of the Chow ideal of the `n` axes:
/// not a pure power, and not `x1⋯xn` for odd `n`.
pub fn axes_chow_monomial(w: &[u32]) -> bool {
    let n = w.len() as u32;
    let pure_power = w.iter().any(|&e| e == n);
    let odd_product = n % 2 == 1 && w.iter().all(|&e| e == 1);
    !(pure_power || odd_product)
}

/// Ideal of Chow equations of the `n` coordinate axes in `k[x1, …, xn]`.
///
/// Spanned by all degree-`n` monomials except the `x_i^n`, and except `x1⋯xn` when
/// `n` is odd. Requires characteristic 0 or `p > n`.
pub fn chow_ideal_axes(n: usize, field: Field) -> Result<Ideal> {
    if n < 2 {
        return Err(Error::Precondition("at least two axes".into()));
    }
    let p = field.characteristic();
    if p != 0 && p <= n as u64 {
        return Err(Error::Unsupported(format!("axes Chow ideal for n = {n} in characteristic {p}")));
    }
    let ring = axes_ring(n, field)?;
    let gens = exponents_of_degree(n, n as u32)
        .into_iter()
        .filter(|w| axes_chow_monomial(w))
        .map(|w| ring.monomial(w, field.one()))
        .collect();
    Ideal::new(&ring, gens)
}

/// `∏_j Σ_i (a_i b_j − a_j b_i) x_i`: the pullback of the image of the axes under the
/// projection `(Σ a_i x_i, Σ b_i x_i)`.
pub fn axes_projection_pullback(ring: &Ring, a: &[Scalar], b: &[Scalar]) -> Result<Poly> {
    let n = ring.nvars();
    if a.len() != n || b.len() != n {
        return Err(Error::DimensionMismatch(format!("need {n} coordinates, got {} and {}", a.len(), b.len())));
    }
    let x = ring.gens();
    let mut acc = ring.one();
    for j in 0..n {
        let mut factor = ring.zero();
        for i in 0..n {
            let c = a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
            factor = &factor + &x[i].scale(&c);
        }
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// Largest `n` accepted by [`find_weight_subset`].
pub const MAX_SUBSET_N: usize = 24;

/// A set `S` of (0-based) indices with `Σ_{i∈S} w_i = n − |S|`, by exhaustive search.
pub fn find_weight_subset(w: &[u32]) -> Result<Option<Vec<usize>>> {
    let n = w.len();
    if n > MAX_SUBSET_N {
        return Err(Error::Precondition(format!("n = {n} exceeds {MAX_SUBSET_N}")));
    }
    if w.iter().map(|&e| e as usize).sum::<usize>() != n {
        return Err(Error::Precondition(format!("weights sum to {}, expected {n}", w.iter().sum::<u32>())));
    }
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        let total: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w[i] as usize).sum();
        if total + size == n {
            return Ok(Some((0..n).filter(|i| mask >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// A cycle `Σ m_i Z_i` given by the ideals of its components.
#[derive(Clone, Debug)]
pub struct CycleSpec {
    components: Vec<(Ideal, u32)>,
}

impl CycleSpec {
    pub fn new(components: Vec<(Ideal, u32)>) -> Result<Self> {
        let ring = components.first().ok_or_else(|| Error::ZeroInput("empty cycle".into()))?.0.ring().clone();
        for (k, (i, m)) in components.iter().enumerate() {
            ring.check_same(i.ring())?;
            if *m == 0 {
                return Err(Error::Precondition("multiplicities must be positive".into()));
            }
            for (j, _) in &components[..k] {
                if i.ideal_equal(j)? {
                    return Err(Error::Precondition(format!("component {i} listed twice")));
                }
            }
        }
        Ok(CycleSpec { components })
    }

    pub fn components(&self) -> &[(Ideal, u32)] {
        &self.components
    }

    pub fn ring(&self) -> &Ring {
        self.components[0].0.ring()
    }
}

/// Chow hull `pure(∩_i I(Z_i)^[m_i])`.
pub fn chow_hull(cycle: &CycleSpec, scalars: PowerScalars) -> Result<Ideal> {
    let powers = cycle
        .components()
        .iter()
        .map(|(i, m)| elementwise_power(i, *m, scalars))
        .collect::<Result<Vec<_>>>()?;
    pure_part(&intersect_all(&powers)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_ideals() {
        let r = Ring::new(Field::Rationals, &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let m = Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap();
        let sq = &x.pow(2) + &y.pow(2);
        assert!(derivative_ideal(&sq, 1).unwrap().ideal_equal(&m).unwrap());
        assert!(derivative_ideal(&(&x * &y), 1).unwrap().ideal_equal(&m).unwrap());
        let cube = derivative_ideal(&x.pow(3), 2).unwrap();
        assert!(cube.ideal_equal(&Ideal::new(&r, vec![x.clone()]).unwrap()).unwrap());
    }

    #[test]
    fn weight_subsets() {
        assert_eq!(find_weight_subset(&[4, 0, 0, 0]).unwrap(), None);
        assert_eq!(find_weight_subset(&[1, 1, 1]).unwrap(), None);
        assert!(find_weight_subset(&[1, 1, 1, 1]).unwrap().is_some());
        let w = [3, 1, 1, 0, 0];
        let s = find_weight_subset(&w).unwrap().unwrap();
        assert_eq!(s.iter().map(|&i| w[i]).sum::<u32>() as usize + s.len(), 5);
    }

    #[test]
    fn axes_closed_form_sizes() {
        assert_eq!(chow_ideal_axes(3, Field::Rationals).unwrap().gens().len(), 6);
        assert_eq!(chow_ideal_axes(4, Field::Rationals).unwrap().gens().len(), 31);
        assert_eq!(chow_ideal_axes(2, Field::Rationals).unwrap().gens().len(), 1);
        assert!(chow_ideal_axes(3, Field::Prime(3)).is_err());
    }
}
