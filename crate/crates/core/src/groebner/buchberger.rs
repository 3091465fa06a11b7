//! Buchberger's algorithm with sugar pair selection.

use std::collections::{BTreeSet, HashSet};

use crate::poly::monomial::{self, Exponent, MonomialOrder};
use crate::poly::{Poly, Ring, Scalar};

type Term = (Exponent, Scalar);

/// Terms sorted descending under the active order.
#[derive(Clone, Debug)]
struct Sorted(Vec<Term>);

impl Sorted {
    fn from_poly(p: &Poly, order: MonomialOrder) -> Self {
        Sorted(p.sorted_terms(order).into_iter().map(|(e, c)| (e.clone(), c.clone())).collect())
    }

    fn to_poly(&self, ring: &Ring) -> Poly {
        ring.from_terms(self.0.iter().cloned())
    }

    fn lead(&self) -> &Exponent {
        &self.0[0].0
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.0.first() {
            if !c.is_one() {
                let inv = c.inv().expect("nonzero leading coefficient");
                for t in &mut self.0 {
                    t.1 = t.1.mul(&inv);
                }
            }
        }
    }
}

/// `a - coef · x^shift · b`, both sorted descending; the result stays sorted.
fn sub_scaled(a: &[Term], b: &[Term], shift: &[u32], coef: &Scalar, order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let scaled = |t: &Term| (monomial::product(&t.0, shift), t.1.mul(coef));
    while i < a.len() && j < b.len() {
        let bj = scaled(&b[j]);
        match order.cmp(&a[i].0, &bj.0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bj.0, bj.1.neg()));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a[i].1.sub(&bj.1);
                if !c.is_zero() {
                    out.push((bj.0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|t| {
        let s = scaled(t);
        (s.0, s.1.neg())
    }));
    out
}

/// Fully reduces `p` modulo `basis` (every term, not just the leading one).
fn reduce(p: Vec<Term>, basis: &[Sorted], order: MonomialOrder) -> Vec<Term> {
    let mut p = p;
    let mut out = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (e, c) = &p[start];
        match basis.iter().find(|g| monomial::divides(g.lead(), e)) {
            Some(g) => {
                let shift = monomial::quotient(e, g.lead());
                let coef = c.mul(&g.0[0].1.inv().expect("nonzero leading coefficient"));
                p = sub_scaled(&p[start..], &g.0, &shift, &coef, order);
                start = 0;
            }
            None => {
                out.push(p[start].clone());
                start += 1;
            }
        }
    }
    out
}

/// Normal form of `p` modulo a Gröbner basis under `order`.
pub fn normal_form(p: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let sorted: Vec<Sorted> = basis.iter().filter(|g| !g.is_zero()).map(|g| Sorted::from_poly(g, order)).collect();
    Sorted(reduce(Sorted::from_poly(p, order).0, &sorted, order)).to_poly(p.ring())
}

fn spoly(f: &Sorted, g: &Sorted, order: MonomialOrder) -> Vec<Term> {
    let l = monomial::lcm(f.lead(), g.lead());
    let sf = monomial::quotient(&l, f.lead());
    let sg = monomial::quotient(&l, g.lead());
    let one = f.0[0].1.one_like();
    let fs = sub_scaled(&[], &f.0, &sf, &one.neg(), order);
    sub_scaled(&fs, &g.0, &sg, &one, order)
}

#[derive(Default)]
struct State {
    basis: Vec<Sorted>,
    sugar: Vec<u32>,
    /// `(sugar, j, i)` with `i < j`, so ties go to the older pair.
    queue: BTreeSet<(u32, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl State {
    fn push(&mut self, mut p: Sorted, s: u32) {
        p.make_monic();
        let j = self.basis.len();
        for i in 0..j {
            let l = monomial::lcm(self.basis[i].lead(), p.lead());
            let dl = monomial::degree(&l);
            let si = self.sugar[i] + dl - monomial::degree(self.basis[i].lead());
            let sj = s + dl - monomial::degree(p.lead());
            self.queue.insert((si.max(sj), j, i));
            self.pending.insert((i, j));
        }
        self.basis.push(p);
        self.sugar.push(s);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, made monic and sorted
/// by leading monomial, largest first. The output depends only on the ideal and order.
pub fn buchberger(gens: &[Poly], order: MonomialOrder) -> Vec<Poly> {
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return Vec::new();
    };
    let mut state = State::default();
    let mut inputs: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    if inputs.iter().all(|g| g.num_terms() == 1) {
        return minimal_monomials(&inputs, &ring, order);
    }
    inputs.sort_by_key(|g| g.total_degree());
    for g in inputs {
        let r = reduce(Sorted::from_poly(g, order).0, &state.basis, order);
        if !r.is_empty() {
            let s = g.total_degree().unwrap_or(0);
            state.push(Sorted(r), s);
        }
    }

    while let Some((s, j, i)) = state.queue.pop_first() {
        state.pending.remove(&(i, j));
        let basis = &state.basis;
        let (fi, fj) = (&basis[i], &basis[j]);
        if monomial::coprime(fi.lead(), fj.lead()) {
            continue;
        }
        let l = monomial::lcm(fi.lead(), fj.lead());
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && monomial::divides(basis[k].lead(), &l)
                && !state.pending.contains(&key(i, k))
                && !state.pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let sp = spoly(fi, fj, order);
        let r = reduce(sp, basis, order);
        if !r.is_empty() {
            state.push(Sorted(r), s);
        }
    }

    // minimalize, then interreduce
    let basis = state.basis;
    let mut minimal: Vec<Sorted> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && monomial::divides(h.lead(), g.lead()) && (h.lead() != g.lead() || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Sorted> = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Sorted> =
            minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, g)| g.clone()).collect();
        let head = minimal[idx].0[0].clone();
        let tail = reduce(minimal[idx].0[1..].to_vec(), &others, order);
        let mut g = Sorted(std::iter::once(head).chain(tail).collect());
        g.make_monic();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.cmp(b.lead(), a.lead()));
    reduced.iter().map(|g| g.to_poly(&ring)).collect()
}

/// Monomial ideals: the minimal generators are the reduced basis.
fn minimal_monomials(gens: &[&Poly], ring: &Ring, order: MonomialOrder) -> Vec<Poly> {
    let mut exps: Vec<Exponent> = gens.iter().filter_map(|g| g.terms().next().map(|(e, _)| e.clone())).collect();
    exps.sort_by(|a, b| monomial::degree(a).cmp(&monomial::degree(b)).then_with(|| order.cmp(a, b)));
    exps.dedup();
    let mut kept: Vec<Exponent> = Vec::new();
    for e in exps {
        if !kept.iter().any(|k| monomial::divides(k, &e)) {
            kept.push(e);
        }
    }
    kept.sort_by(|a, b| order.cmp(b, a));
    kept.into_iter().map(|e| ring.monomial(e, ring.field().one())).collect()
}

/// Checks Buchberger's criterion directly: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Poly], order: MonomialOrder) -> bool {
    let sorted: Vec<Sorted> = basis.iter().filter(|g| !g.is_zero()).map(|g| Sorted::from_poly(g, order)).collect();
    for j in 0..sorted.len() {
        for i in 0..j {
            if !reduce(spoly(&sorted[i], &sorted[j], order), &sorted, order).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = Ring::new(Field::Rationals, &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let gb = buchberger(&[x.pow(2), &x * &y], MonomialOrder::Lex);
        assert_eq!(gb, vec![x.pow(2), &x * &y]);
    }

    #[test]
    fn lex_basis_contains_eliminant() {
        let r = Ring::new(Field::Rationals, &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let y = r.var("y").unwrap();
        let gens = [&x - &y.pow(2), &y - &x.pow(2)];
        let gb = buchberger(&gens, MonomialOrder::Lex);
        assert!(gb.contains(&(&y.pow(4) - &y)));
        assert!(gb.contains(&(&x - &y.pow(2))));
        assert!(is_groebner_basis(&gb, MonomialOrder::Lex));
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::new(Field::Prime(7), &["x", "y"]).unwrap();
        let x = r.var("x").unwrap();
        let gb = buchberger(&[&x + &r.one(), x.clone()], MonomialOrder::GrevLex);
        assert_eq!(gb, vec![r.one()]);
    }
}
