//! Consecutive prime powers `p^a - q^b = 1`.

use super::{is_prime_u64, NumberTheoryError};

/// The three possible shapes of a solution of `p^a - q^b = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeronoShape {
    /// `(3^2, 2^3)`.
    NineEight,
    /// `(2^a, q)` with `a` prime and `q = 2^a - 1` prime.
    PowerOfTwoAbove { a: u32 },
    /// `(p, 2^b)` with `b` a power of two and `p = 2^b + 1` prime.
    PowerOfTwoBelow { b: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeronoSolution {
    pub pa: u64,
    pub qb: u64,
    pub shape: Option<GeronoShape>,
}

/// `(p, a)` with `n = p^a`, `a >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = super::prime_divisors(n)[0];
    let mut m = n;
    let mut a = 0;
    while m % p == 0 {
        m /= p;
        a += 1;
    }
    (m == 1).then_some((p, a))
}

fn shape_of(pa: (u64, u32), qb: (u64, u32)) -> Option<GeronoShape> {
    match (pa, qb) {
        ((3, 2), (2, 3)) => Some(GeronoShape::NineEight),
        ((2, a), (_, 1)) if is_prime_u64(a as u64) => Some(GeronoShape::PowerOfTwoAbove { a }),
        ((_, 1), (2, b)) if b.is_power_of_two() => Some(GeronoShape::PowerOfTwoBelow { b }),
        _ => None,
    }
}

/// The shape of `(pa, qb)` if `pa - qb = 1` and the pair has one of the
/// three listed shapes. Both arguments must be prime powers (at least 2).
pub fn gerono_shape(pa: u64, qb: u64) -> Result<Option<GeronoShape>, NumberTheoryError> {
    let a = prime_power(pa).ok_or(NumberTheoryError::NotPrimePower(pa))?;
    let b = prime_power(qb).ok_or(NumberTheoryError::NotPrimePower(qb))?;
    if pa.checked_sub(qb) != Some(1) {
        return Ok(None);
    }
    Ok(shape_of(a, b))
}

/// Whether `pa - qb = 1` with a listed shape.
pub fn gerono_check(pa: u64, qb: u64) -> Result<bool, NumberTheoryError> {
    Ok(gerono_shape(pa, qb)?.is_some())
}

/// Like [`gerono_check`], but `false` when an argument is not a prime power.
pub fn is_gerono_solution(pa: u64, qb: u64) -> bool {
    gerono_check(pa, qb).unwrap_or(false)
}

/// All pairs of prime powers `pa - qb = 1` with `pa <= bound`, by sieve.
/// `shape` is `None` only for a pair outside the three shapes.
pub fn gerono_enumerate(bound: u64) -> Vec<GeronoSolution> {
    let n = bound as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let pp = |m: usize| -> Option<(u64, u32)> {
        if m < 2 {
            return None;
        }
        let p = spf[m] as usize;
        let (mut r, mut a) = (m, 0);
        while r % p == 0 {
            r /= p;
            a += 1;
        }
        (r == 1).then_some((p as u64, a))
    };
    let mut out = Vec::new();
    for m in 3..=n {
        if let (Some(a), Some(b)) = (pp(m), pp(m - 1)) {
            out.push(GeronoSolution {
                pa: m as u64,
                qb: m as u64 - 1,
                shape: shape_of(a, b),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        assert_eq!(gerono_shape(9, 8).unwrap(), Some(GeronoShape::NineEight));
        assert_eq!(gerono_shape(4, 3).unwrap(), Some(GeronoShape::PowerOfTwoAbove { a: 2 }));
        assert_eq!(gerono_shape(17, 16).unwrap(), Some(GeronoShape::PowerOfTwoBelow { b: 4 }));
        assert!(matches!(gerono_check(25, 24), Err(NumberTheoryError::NotPrimePower(24))));
        assert!(!is_gerono_solution(25, 24));
        assert!(!gerono_check(9, 7).unwrap());
    }

    #[test]
    fn enumeration_is_exact_and_shaped() {
        let sols = gerono_enumerate(1_000_000);
        for s in &sols {
            assert_eq!(s.pa - s.qb, 1);
            assert!(s.shape.is_some(), "{s:?}");
            assert!(is_gerono_solution(s.pa, s.qb));
        }
        let pairs: Vec<(u64, u64)> = sols.iter().map(|s| (s.pa, s.qb)).collect();
        assert_eq!(
            pairs,
            vec![
                (3, 2), (4, 3), (5, 4), (8, 7), (9, 8), (17, 16), (32, 31),
                (128, 127), (257, 256), (8192, 8191), (65537, 65536),
                (131072, 131071), (524288, 524287)
            ]
        );
    }
}
