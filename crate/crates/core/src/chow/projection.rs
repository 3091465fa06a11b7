//! Coordinate substitutions realising projections of affine and projective space.

use crate::error::{Error, Result};
use crate::poly::{Poly, Scalar};

/// A projection, described by the substitution that pulls functions back along it.
///
/// Variables are addressed by position in the ring of the polynomial being pulled back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionSpec {
    /// Projection from the point `(a_0 : ⋯ : a_{n−1} : 1)`: `x_i ↦ x_i − a_i·x_n`
    /// for every variable but the last.
    FromPoint { center: Vec<Scalar> },
    /// Projection onto the span of the first `r + 1` coordinates: `x_i ↦ x_i − ℓ_i`,
    /// with each `ℓ_i` a linear form in the remaining variables.
    ToSubspace { forms: Vec<Poly> },
    /// Affine chart of a linear projection: `x_i ↦ (x_i − ℓ_i)(1 + ℓ_0 + ℓ_0² + ⋯)`,
    /// everything truncated above total degree `degree`.
    Affine { ell0: Poly, ell: Vec<Poly>, degree: u32 },
    /// `x_i ↦ x_i − φ_i` where `φ_i` vanishes on the span of the first `r` coordinates.
    Nonlinear { phi: Vec<Poly> },
}

fn truncate(p: &Poly, degree: u32) -> Poly {
    p.ring().from_terms(p.terms().filter(|(e, _)| e.iter().sum::<u32>() <= degree).map(|(e, c)| (e.clone(), c.clone())))
}

fn only_later_vars(p: &Poly, first_free: usize) -> bool {
    let n = p.ring().nvars();
    p.involves_only(&(first_free..n).collect::<Vec<_>>())
}

/// Pulls `p` back along the projection.
pub fn apply_projection(p: &Poly, spec: &ProjectionSpec) -> Result<Poly> {
    let ring = p.ring();
    let n = ring.nvars();
    let gens = ring.gens();
    match spec {
        ProjectionSpec::FromPoint { center } => {
            if center.len() + 1 != n {
                return Err(Error::DimensionMismatch(format!(
                    "center has {} coordinates, expected {}",
                    center.len(),
                    n - 1
                )));
            }
            let last = &gens[n - 1];
            let mut images = gens.clone();
            for (img, a) in images.iter_mut().zip(center) {
                *img = &*img - &last.scale(a);
            }
            p.substitute(&images)
        }
        ProjectionSpec::ToSubspace { forms } => {
            let r = forms.len();
            if r > n {
                return Err(Error::DimensionMismatch(format!("{r} forms for {n} variables")));
            }
            let mut images = gens.clone();
            for (i, l) in forms.iter().enumerate() {
                ring.check_same(l.ring())?;
                if !(l.is_homogeneous() && l.total_degree().unwrap_or(1) == 1 && only_later_vars(l, r)) {
                    return Err(Error::Precondition(format!("{l} is not a linear form in the last {} variables", n - r)));
                }
                images[i] = &gens[i] - l;
            }
            p.substitute(&images)
        }
        ProjectionSpec::Affine { ell0, ell, degree } => {
            let r = ell.len();
            if r > n {
                return Err(Error::DimensionMismatch(format!("{r} forms for {n} variables")));
            }
            for l in std::iter::once(ell0).chain(ell) {
                ring.check_same(l.ring())?;
                if !(l.is_homogeneous() && l.total_degree().unwrap_or(1) == 1 && only_later_vars(l, r)) {
                    return Err(Error::Precondition(format!("{l} is not a linear form in the last {} variables", n - r)));
                }
            }
            let mut series = ring.zero();
            for k in 0..=*degree {
                series = &series + &ell0.pow(k);
            }
            let mut images = gens.clone();
            for (i, l) in ell.iter().enumerate() {
                images[i] = truncate(&(&(&gens[i] - l) * &series), *degree);
            }
            Ok(truncate(&p.substitute(&images)?, *degree))
        }
        ProjectionSpec::Nonlinear { phi } => {
            let r = phi.len();
            if r > n {
                return Err(Error::DimensionMismatch(format!("{r} perturbations for {n} variables")));
            }
            let mut restrict = gens.clone();
            for v in restrict.iter_mut().skip(r) {
                *v = ring.zero();
            }
            let mut images = gens.clone();
            for (i, f) in phi.iter().enumerate() {
                ring.check_same(f.ring())?;
                if !f.substitute(&restrict)?.is_zero() {
                    return Err(Error::Precondition(format!("{f} does not vanish on the first {r} coordinates")));
                }
                images[i] = &gens[i] - f;
            }
            p.substitute(&images)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Ring};

    #[test]
    fn affine_truncation() {
        let r = Ring::new(Field::Rationals, &["x", "y", "z"]).unwrap();
        let (x, y, z) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap());
        let ell1 = &y + &z;
        let ell0 = &y - &(&r.from_i64(2) * &z);
        let spec = ProjectionSpec::Affine { ell0: ell0.clone(), ell: vec![ell1.clone()], degree: 2 };
        let out = apply_projection(&x, &spec).unwrap();
        assert_eq!(out, &(&x - &ell1) * &(&r.one() + &ell0));
    }

    #[test]
    fn identity_projections() {
        let r = Ring::new(Field::Rationals, &["x", "y", "z"]).unwrap();
        let x = r.var("x").unwrap();
        let p = &x.pow(3) + &r.var("y").unwrap();
        let zero = Field::Rationals.zero();
        let spec = ProjectionSpec::FromPoint { center: vec![zero.clone(), zero] };
        assert_eq!(apply_projection(&p, &spec).unwrap(), p);
        let none = ProjectionSpec::ToSubspace { forms: vec![] };
        assert_eq!(apply_projection(&p, &none).unwrap(), p);
    }

    #[test]
    fn nonlinear_needs_vanishing() {
        let r = Ring::new(Field::Rationals, &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let bad = ProjectionSpec::Nonlinear { phi: vec![x.pow(2)] };
        assert!(apply_projection(&x, &bad).is_err());
        let good = ProjectionSpec::Nonlinear { phi: vec![&x * &y] };
        assert_eq!(apply_projection(&x, &good).unwrap(), &x - &(&x * &y));
    }
}
