//! Ideal operations built on Gröbner bases: elimination, intersection, quotient,
//! saturation, element-wise powers, pure parts and lengths.

use std::collections::{BTreeSet, VecDeque};

use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::poly::monomial::{self, Exponent};
use crate::poly::{multinomial_nonzero, MonomialOrder, Poly, Ring, Scalar};

/// Upper bound on the number of monomials enumerated by the length computations.
pub const LENGTH_CAP: usize = 200_000;

/// Intersects `I` with the subring generated by the variables not in `vars`.
pub fn eliminate(ideal: &Ideal, vars: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    for v in vars {
        ring.var_index(v)?;
    }
    let rest: Vec<&String> = ring.vars().iter().filter(|v| !vars.contains(&v.as_str())).collect();
    let mut order_vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    order_vars.extend(rest.iter().map(|s| s.to_string()));
    let big = Ring::new(ring.field(), &order_vars)?.with_order(MonomialOrder::Elimination(vars.len()));
    let small = Ring::new(ring.field(), &rest)?.with_order(ring.order());
    let lifted = ideal.to_ring(&big)?;
    let elim_idx: Vec<usize> = (0..vars.len()).collect();
    let kept = lifted
        .gb(MonomialOrder::Elimination(vars.len()))
        .iter()
        .filter(|g| elim_idx.iter().all(|&i| !g.involves(i)))
        .map(|g| g.to_ring(&small))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&small, kept)
}

/// Adds fresh variables (listed first) to the ring of `ideal`.
fn with_fresh(ring: &Ring, stem: &str) -> Result<(Ring, String)> {
    let t = ring.fresh_var(stem);
    Ok((ring.prepend_vars(&[t.as_str()])?, t))
}

/// `I ∩ J` via `t·I + (1 − t)·J` with `t` eliminated.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.ring().check_same(j.ring())?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(i.ring()));
    }
    let (big, t) = with_fresh(i.ring(), "t")?;
    let tv = big.var(&t)?;
    let one_minus_t = &big.one() - &tv;
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(&tv * &g.to_ring(&big)?);
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.to_ring(&big)?);
    }
    let out = eliminate(&Ideal::new(&big, gens)?, &[t.as_str()])?;
    out.to_ring(i.ring())
}

/// Intersection of several ideals of one ring; the empty list is not allowed.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals.split_first().ok_or_else(|| Error::ZeroInput("no ideals to intersect".into()))?;
    let mut acc = first.clone();
    for j in rest {
        acc = intersect(&acc, j)?;
    }
    Ok(acc)
}

/// `I : f = {g : g·f ∈ I}`.
pub fn quotient(i: &Ideal, f: &Poly) -> Result<Ideal> {
    i.ring().check_same(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroInput("quotient by the zero polynomial".into()));
    }
    let meet = intersect(i, &Ideal::new(i.ring(), vec![f.clone()])?)?;
    let gens = meet.gens().iter().map(|g| g.div_exact(f)).collect::<Result<Vec<_>>>()?;
    Ideal::new(i.ring(), gens)
}

/// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
pub fn quotient_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if j.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    let parts = j.gens().iter().map(|g| quotient(i, g)).collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// `I : f^∞`, as the stable value of `I ⊆ I : f ⊆ I : f² ⊆ ⋯`.
pub fn saturate(i: &Ideal, f: &Poly) -> Result<Ideal> {
    let mut cur = i.clone();
    loop {
        let next = quotient(&cur, f)?;
        if cur.contains_ideal(&next)? {
            return Ok(cur.reduced());
        }
        cur = next;
    }
}

/// `I : J^∞ = ∩_g (I : g^∞)` over the generators `g` of `J`.
pub fn saturate_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if j.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    let parts = j.gens().iter().map(|g| saturate(i, g)).collect::<Result<Vec<_>>>()?;
    Ok(intersect_all(&parts)?.reduced())
}

/// `I : m^∞` for the maximal ideal `m` generated by all variables.
pub fn saturate_maximal(i: &Ideal) -> Result<Ideal> {
    saturate_ideal(i, &Ideal::maximal(i.ring()))
}

/// Removes the embedded component supported at the origin: `I : m^∞`.
///
/// Components of positive dimension, embedded or not, are kept.
pub fn pure_part(i: &Ideal) -> Result<Ideal> {
    saturate_maximal(i)
}

/// Saturation by an explicit form `ℓ`, for callers who know which hyperplane
/// avoids every component they want to keep.
pub fn pure_part_by(i: &Ideal, ell: &Poly) -> Result<Ideal> {
    saturate(i, ell)
}

/// How the scalars `c_k` in `(Σ c_k r_k)^m` range in an element-wise power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PowerScalars {
    /// Scalars from an algebraic closure: generators are the products `r^I` with
    /// nonzero multinomial coefficient.
    #[default]
    AlgebraicClosure,
    /// Scalars from the base field; refuses finite fields with at most `m` elements.
    BaseField,
    /// Scalars from the base field, enumerated exhaustively (finite fields only).
    ExhaustiveBaseField,
}

/// All exponent vectors of length `s` summing to `m`.
fn compositions(s: usize, m: u32) -> Vec<Vec<u32>> {
    monomial::exponents_of_degree(s, m)
}

fn product_power(gens: &[Poly], parts: &[u32], ring: &Ring) -> Poly {
    gens.iter().zip(parts).fold(ring.one(), |acc, (g, &k)| &acc * &g.pow(k))
}

/// `I^m`, generated by all products of `m` generators.
pub fn power(i: &Ideal, m: u32) -> Result<Ideal> {
    if m == 0 {
        return Ok(Ideal::unit(i.ring()));
    }
    let gens = i.gens();
    let out = compositions(gens.len(), m).iter().map(|parts| product_power(gens, parts, i.ring())).collect();
    Ideal::new(i.ring(), out)
}

/// The element-wise power `I^[m] = (r^m : r ∈ I)` computed from the generators of `I`.
pub fn elementwise_power(i: &Ideal, m: u32, scalars: PowerScalars) -> Result<Ideal> {
    let ring = i.ring();
    let field = ring.field();
    let gens = i.gens();
    if m == 0 {
        return Ok(Ideal::unit(ring));
    }
    if gens.is_empty() {
        return Ok(Ideal::zero(ring));
    }
    match scalars {
        PowerScalars::AlgebraicClosure => {}
        PowerScalars::BaseField => {
            if let Some(q) = field.size() {
                if q <= m as u64 {
                    return Err(Error::TinyField(format!(
                        "F_{q} has at most {m} elements; use the exhaustive mode to enumerate base-field scalars"
                    )));
                }
            }
        }
        PowerScalars::ExhaustiveBaseField => return exhaustive_power(i, m),
    }
    let char = field.characteristic();
    let out = compositions(gens.len(), m)
        .iter()
        .filter(|parts| multinomial_nonzero(m as u64, parts, char))
        .map(|parts| product_power(gens, parts, ring))
        .collect();
    Ideal::new(ring, out)
}

fn exhaustive_power(i: &Ideal, m: u32) -> Result<Ideal> {
    let ring = i.ring();
    let elements: Vec<Scalar> = ring
        .field()
        .elements()
        .ok_or_else(|| Error::Unsupported("exhaustive enumeration needs a finite field".into()))?;
    let s = i.gens().len();
    let q = elements.len();
    let count = (q as u128).checked_pow(s as u32).filter(|&c| c <= 1_000_000).ok_or_else(|| {
        Error::Unsupported(format!("{q}^{s} scalar vectors is too many to enumerate"))
    })?;
    let mut out = Vec::new();
    for idx in 0..count as usize {
        let mut rest = idx;
        let mut r = ring.zero();
        for g in i.gens() {
            r = &r + &g.scale(&elements[rest % q]);
            rest /= q;
        }
        out.push(r.pow(m));
    }
    Ok(Ideal::new(ring, out)?.reduced())
}

fn in_monomial_ideal(e: &[u32], lead: &[Exponent]) -> bool {
    lead.iter().any(|l| monomial::divides(l, e))
}

/// Counts the monomials reachable upward from `seeds` that avoid the monomial ideal `lead`.
fn count_avoiding(seeds: &[Exponent], lead: &[Exponent], nvars: usize) -> Result<usize> {
    let mut seen: BTreeSet<Exponent> = BTreeSet::new();
    let mut queue: VecDeque<Exponent> = VecDeque::new();
    for s in seeds {
        if !in_monomial_ideal(s, lead) && seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(e) = queue.pop_front() {
        if seen.len() > LENGTH_CAP {
            return Err(Error::InfiniteLength(format!("more than {LENGTH_CAP} standard monomials")));
        }
        for v in 0..nvars {
            let mut next = e.clone();
            next[v] += 1;
            if !in_monomial_ideal(&next, lead) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// `dim_k R/I`; errors with [`Error::InfiniteLength`] when the quotient is infinite.
pub fn quotient_length(i: &Ideal) -> Result<usize> {
    let order = MonomialOrder::GrevLex;
    let n = i.ring().nvars();
    let lead = i.leading_monomials(order);
    if !has_pure_powers(&lead, n) {
        return Err(Error::InfiniteLength(format!("{i} is not zero-dimensional")));
    }
    count_avoiding(&[vec![0; n]], &lead, n)
}

fn has_pure_powers(lead: &[Exponent], n: usize) -> bool {
    (0..n).all(|v| lead.iter().any(|e| e.iter().enumerate().all(|(k, &x)| k == v || x == 0)))
}

/// `dim_k J/I` for ideals `I ⊆ J`: the standard monomials of `I` lying in `LT(J)`.
pub fn relative_length(i: &Ideal, j: &Ideal) -> Result<usize> {
    if !j.contains_ideal(i)? {
        return Err(Error::Precondition(format!("{i} is not contained in {j}")));
    }
    let order = MonomialOrder::GrevLex;
    let lead_i = i.leading_monomials(order);
    let lead_j = j.leading_monomials(order);
    count_avoiding(&lead_j, &lead_i, i.ring().nvars())
}

/// Length of the origin-supported torsion `pure(I)/I`.
pub fn torsion_length(i: &Ideal) -> Result<usize> {
    relative_length(i, &pure_part(i)?)
}

/// Exact equality of ideals of one ring.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.ideal_equal(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(Field::Rationals, vars).unwrap()
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = ring(&["x", "y"]);
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let i = Ideal::new(&r, vec![x.clone()]).unwrap();
        let j = Ideal::new(&r, vec![y.clone()]).unwrap();
        let k = intersect(&i, &j).unwrap();
        assert!(k.ideal_equal(&Ideal::new(&r, vec![&x * &y]).unwrap()).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(&["u", "v"]);
        let u = r.var("u").unwrap();
        let v = r.var("v").unwrap();
        for k in 1..4 {
            let i = Ideal::new(&r, vec![v.pow(2), &v * &u.pow(k)]).unwrap();
            let s = saturate(&i, &u).unwrap();
            assert!(s.ideal_equal(&Ideal::new(&r, vec![v.clone()]).unwrap()).unwrap());
            assert_eq!(torsion_length(&i).unwrap(), k as usize);
        }
        let xy = ring(&["x", "y"]);
        let x = xy.var("x").unwrap();
        let y = xy.var("y").unwrap();
        let i = Ideal::new(&xy, vec![&x.pow(2) * &y]).unwrap();
        assert!(saturate(&i, &x).unwrap().ideal_equal(&Ideal::new(&xy, vec![y.clone()]).unwrap()).unwrap());
        assert!(quotient(&i, &xy.one()).unwrap().ideal_equal(&i).unwrap());
    }

    #[test]
    fn pure_part_keeps_both_axes() {
        let r = ring(&["x", "y"]);
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let i = Ideal::new(&r, vec![&x.pow(2) * &y, &x * &y.pow(2)]).unwrap();
        let p = pure_part(&i).unwrap();
        assert!(p.ideal_equal(&Ideal::new(&r, vec![&x * &y]).unwrap()).unwrap());
        assert_eq!(torsion_length(&i).unwrap(), 1);
    }

    #[test]
    fn lengths() {
        let r = ring(&["u", "v"]);
        let u = r.var("u").unwrap();
        let v = r.var("v").unwrap();
        let i = Ideal::new(&r, vec![&v.pow(2) - &u.pow(3), v.clone()]).unwrap();
        assert_eq!(quotient_length(&i).unwrap(), 3);
        let j = Ideal::new(&r, vec![v.clone()]).unwrap();
        assert!(matches!(quotient_length(&j), Err(Error::InfiniteLength(_))));
    }

    #[test]
    fn frobenius_power_in_char_three() {
        let r = Ring::new(Field::Prime(3), &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let i = Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap();
        let p = elementwise_power(&i, 4, PowerScalars::AlgebraicClosure).unwrap();
        let expect = Ideal::new(&r, vec![x.pow(4), &x.pow(3) * &y, &x * &y.pow(3), y.pow(4)]).unwrap();
        assert!(p.ideal_equal(&expect).unwrap());
        assert!(matches!(elementwise_power(&i, 4, PowerScalars::BaseField), Err(Error::TinyField(_))));
        let ex = elementwise_power(&i, 4, PowerScalars::ExhaustiveBaseField).unwrap();
        assert!(p.contains_ideal(&ex).unwrap());
    }
}
