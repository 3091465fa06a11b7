//! Exponent vectors and the monomial orders used by the Gröbner engine.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector, one entry per ring variable.
pub type Exponent = Vec<u32>;

/// A term order on exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Block order: the first `k` variables (grevlex among themselves) dominate
    /// the rest (grevlex among themselves). Eliminates the first block.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// Whether every monomial of degree `d` precedes every monomial of degree `d + 1`.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Elimination(k) => write!(f, "elim:{k}"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" | "degrevlex" => Ok(MonomialOrder::GrevLex),
            other => other
                .strip_prefix("elim:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Elimination)
                .ok_or_else(|| crate::Error::Unsupported(format!("monomial order `{other}`"))),
        }
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `b - a`, assuming `a` divides `b`.
pub fn quotient(b: &[u32], a: &[u32]) -> Exponent {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn product(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// All exponent vectors in `nvars` variables with total degree exactly `d`,
/// in lexicographically decreasing order.
pub fn exponents_of_degree(nvars: usize, d: u32) -> Vec<Exponent> {
    fn rec(prefix: &mut Exponent, left: usize, d: u32, out: &mut Vec<Exponent>) {
        if left == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(prefix, left - 1, d - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_agree_with_textbook_examples() {
        // x^2 vs x*y^5 in two variables
        assert_eq!(MonomialOrder::Lex.cmp(&[2, 0], &[1, 5]), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&[2, 0], &[1, 5]), Ordering::Less);
        // grevlex breaks degree ties on the last variable: x*z < y^2
        assert_eq!(MonomialOrder::GrevLex.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        // elimination: anything with t beats anything without
        assert_eq!(MonomialOrder::Elimination(1).cmp(&[1, 0, 0], &[0, 9, 9]), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(exponents_of_degree(3, 3).len(), 10);
        assert_eq!(exponents_of_degree(4, 4).len(), 35);
        assert_eq!(exponents_of_degree(1, 5), vec![vec![5]]);
    }
}
