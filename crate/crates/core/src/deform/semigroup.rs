//! Two-generator numerical semigroups and the monomial plane curves `x^a = y^c`.

use num_integer::Integer;

use crate::error::{Error, Result};

/// The curve `x^a = y^c` with `gcd(a, c) = 1`, parametrized by `t ↦ (t^c, t^a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialCurve {
    a: u32,
    c: u32,
}

impl MonomialCurve {
    pub fn new(a: u32, c: u32) -> Result<Self> {
        if a == 0 || c == 0 || a.gcd(&c) != 1 {
            return Err(Error::Precondition(format!("({a}, {c}) is not a coprime pair of positive integers")));
        }
        Ok(MonomialCurve { a, c })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::build(self.a, self.c)
    }
}

/// `E = ℕa + ℕc` with a membership table up to the Frobenius number `ac − a − c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    a: u32,
    c: u32,
    table: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(a: u32, c: u32) -> Result<Self> {
        MonomialCurve::new(a, c).map(|m| m.semigroup())
    }

    fn build(a: u32, c: u32) -> Self {
        let f = frobenius(a, c);
        let len = (f + 1).max(0) as usize;
        let mut table = vec![false; len];
        for m in 0..len {
            table[m] = m == 0 || (m >= a as usize && table[m - a as usize]) || (m >= c as usize && table[m - c as usize]);
        }
        NumericalSemigroup { a, c, table }
    }

    pub fn generators(&self) -> (u32, u32) {
        (self.a, self.c)
    }

    /// The largest integer not in `E`; `−1` when `E = ℕ`.
    pub fn frobenius(&self) -> i64 {
        frobenius(self.a, self.c)
    }

    /// Membership; negative integers are never members.
    pub fn contains(&self, m: i64) -> bool {
        if m < 0 {
            return false;
        }
        self.table.get(m as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.table.len()).filter(|&m| !self.table[m]).map(|m| m as u64).collect()
    }
}

fn frobenius(a: u32, c: u32) -> i64 {
    a as i64 * c as i64 - a as i64 - c as i64
}

pub fn semigroup_member(e: &NumericalSemigroup, m: u64) -> bool {
    e.contains(m as i64)
}

pub fn semigroup_gaps(e: &NumericalSemigroup) -> Vec<u64> {
    e.gaps()
}

/// Which half of the lemma a counterexample violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaPart {
    /// For `1 ≤ m ≤ min(ac − a, ac − c)`: `ac − a − m, ac − c − m ∈ E` iff `ac − a − c − m ∈ E`.
    ///
    /// At `m = 0` the left side always holds and the right side never does, so the check
    /// starts at 1.
    A,
    /// For `0 ≤ m ≤ ac − a − c`: `ac − a − c − m ∈ E` iff `m ∉ E`.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemigroupLemmaReport {
    pub a: u32,
    pub c: u32,
    pub checked: usize,
    pub counterexample: Option<(LemmaPart, u64)>,
}

impl SemigroupLemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustive check of both symmetry statements for `E = ℕa + ℕc`.
pub fn check_semigroup_lemma(a: u32, c: u32) -> Result<SemigroupLemmaReport> {
    let e = NumericalSemigroup::new(a, c)?;
    let (a64, c64) = (a as i64, c as i64);
    let f = e.frobenius();
    let mut checked = 0;
    let done = |checked, counterexample| SemigroupLemmaReport { a, c, checked, counterexample };
    for m in 1..=(a64 * c64 - a64).min(a64 * c64 - c64) {
        checked += 1;
        let lhs = e.contains(a64 * c64 - a64 - m) && e.contains(a64 * c64 - c64 - m);
        if lhs != e.contains(f - m) {
            return Ok(done(checked, Some((LemmaPart::A, m as u64))));
        }
    }
    for m in 0..=f {
        checked += 1;
        if e.contains(f - m) == e.contains(m) {
            return Ok(done(checked, Some((LemmaPart::B, m as u64))));
        }
    }
    Ok(done(checked, None))
}

/// Number of `m ∈ [1, ac − a − c]` with `ac − a − c − m ∈ E`: the dimension of the space of
/// C-flat deformations of `x^a = y^c` that do not globalize. Equals `(a − 1)(c − 1)/2`.
pub fn monomial_cflat_nonglobal_dim(a: u32, c: u32) -> Result<u64> {
    let e = NumericalSemigroup::new(a, c)?;
    let f = e.frobenius();
    let count = (1..=f).filter(|&m| e.contains(f - m)).count() as u64;
    debug_assert_eq!(count, (a as u64 - 1) * (c as u64 - 1) / 2);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_semigroups() {
        let e = NumericalSemigroup::new(2, 3).unwrap();
        assert_eq!(e.gaps(), vec![1]);
        let e = NumericalSemigroup::new(3, 4).unwrap();
        assert!(!e.contains(5));
        assert!(e.contains(6));
        assert!(e.contains(1000));
        assert!(NumericalSemigroup::new(1, 5).unwrap().gaps().is_empty());
    }

    #[test]
    fn lemma_and_dimension() {
        assert!(check_semigroup_lemma(2, 3).unwrap().passed());
        assert!(check_semigroup_lemma(3, 5).unwrap().passed());
        assert!(check_semigroup_lemma(4, 6).is_err());
        assert_eq!(monomial_cflat_nonglobal_dim(2, 3).unwrap(), 1);
        assert_eq!(monomial_cflat_nonglobal_dim(3, 4).unwrap(), 3);
        assert_eq!(monomial_cflat_nonglobal_dim(1, 7).unwrap(), 0);
    }
}
