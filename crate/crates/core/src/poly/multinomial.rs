//! Multinomial coefficients and their vanishing in positive characteristic.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact `m! / (i₁! ⋯ i_s!)` with `m = Σ i_k`.
pub fn multinomial(parts: &[u32]) -> BigUint {
    // product of binomials C(i₁, i₁) C(i₁+i₂, i₂) ⋯
    let mut acc = BigUint::one();
    let mut total: u64 = 0;
    for &k in parts {
        for j in 1..=k as u64 {
            acc *= total + j;
            acc /= j;
        }
        total += k as u64;
    }
    acc
}

/// Whether `multinomial(m; parts)` is nonzero in a field of characteristic `char`.
///
/// In characteristic `p` this holds iff adding the parts in base `p` produces no carry.
/// Returns `false` when the parts do not sum to `m`.
pub fn multinomial_nonzero(m: u64, parts: &[u32], char: u64) -> bool {
    if parts.iter().map(|&k| k as u64).sum::<u64>() != m {
        return false;
    }
    if char == 0 {
        return true;
    }
    let mut rest: Vec<u64> = parts.iter().map(|&k| k as u64).collect();
    let mut m = m;
    while m > 0 {
        let digit_sum: u64 = rest.iter().map(|k| k % char).sum();
        if digit_sum != m % char {
            return false;
        }
        for k in rest.iter_mut() {
            *k /= char;
        }
        m /= char;
    }
    true
}

/// Reference check by exact big-integer reduction.
pub fn multinomial_nonzero_exact(parts: &[u32], char: u64) -> bool {
    let c = multinomial(parts);
    if char == 0 {
        !c.is_zero()
    } else {
        !(c % BigUint::from(char)).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(multinomial(&[2, 2]), BigUint::from(6u32));
        assert_eq!(multinomial(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(multinomial(&[5]), BigUint::from(1u32));
    }

    #[test]
    fn carry_rule() {
        for p in [3u64, 5, 7] {
            assert!(!multinomial_nonzero(p + 1, &[(p - 1) as u32, 2], p));
            assert!(multinomial_nonzero(p + 1, &[p as u32, 1], p));
        }
        assert!(multinomial_nonzero(2, &[1, 1], 3));
        assert!(!multinomial_nonzero(4, &[2, 2], 3));
        assert!(multinomial_nonzero(7, &[3, 4], 0));
    }
}
