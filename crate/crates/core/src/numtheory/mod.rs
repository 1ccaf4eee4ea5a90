//! Integer machinery: factorization, multiplicative orders, cyclotomic
//! values, primitive prime divisors and Catalan-type equations.

mod cache;
mod factor;
mod gerono;
mod zsigmondy;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use cache::{factorize_with, FactorCache};
pub use factor::{is_prime, is_prime_u64};
pub use gerono::{gerono_check, gerono_enumerate, gerono_shape, is_gerono_solution, GeronoShape, GeronoSolution};
pub use zsigmondy::{
    ppd_exists_divisor_form, ppd_exists_order_form, primitive_prime_divisors,
};

#[derive(Debug, thiserror::Error)]
pub enum NumberTheoryError {
    #[error("{q} is not coprime to {r}")]
    NotCoprime { r: u64, q: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("factor cache: {0}")]
    Cache(#[from] std::io::Error),
}

/// Prime factorization of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: BigUint,
    factors: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization {
            value: BigUint::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    /// Prime divisors as `u64`, if they all fit.
    pub fn primes_u64(&self) -> Option<Vec<u64>> {
        self.factors.keys().map(|p| p.to_u64()).collect()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&BigUint::from(p)).copied().unwrap_or(0)
    }

    pub fn recompose(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e))
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut factors = self.factors.clone();
        for (p, &e) in &other.factors {
            *factors.entry(p.clone()).or_insert(0) += e;
        }
        Factorization {
            value: &self.value * &other.value,
            factors,
        }
    }

    pub fn pow(&self, k: u32) -> Factorization {
        Factorization {
            value: self.value.pow(k),
            factors: self.factors.iter().map(|(p, &e)| (p.clone(), e * k)).collect(),
        }
    }

    /// Exact quotient by a divisor; `None` if `d` does not divide.
    pub fn div(&self, d: &Factorization) -> Option<Factorization> {
        let mut factors = self.factors.clone();
        for (p, &e) in &d.factors {
            let cur = factors.get_mut(p)?;
            if *cur < e {
                return None;
            }
            *cur -= e;
            if *cur == 0 {
                factors.remove(p);
            }
        }
        Some(Factorization {
            value: &self.value / &d.value,
            factors,
        })
    }

    /// `p1^e1 p2^e2 ...` in ascending prime order; empty for 1.
    pub fn to_compact(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| format!("{p}^{e}"))
            .collect();
        parts.join(" ")
    }

    /// Parses the compact form, checking it against `value`.
    pub fn parse_compact(value: &BigUint, text: &str) -> Option<Factorization> {
        let mut factors = BTreeMap::new();
        for tok in text.split_whitespace() {
            let (p, e) = tok.split_once('^')?;
            let p: BigUint = p.parse().ok()?;
            let e: u32 = e.parse().ok()?;
            if e == 0 || factors.insert(p, e).is_some() {
                return None;
            }
        }
        let f = Factorization {
            value: value.clone(),
            factors,
        };
        (f.recompose() == *value && f.primes().all(is_prime)).then_some(f)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, &e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Complete factorization of `n >= 1`; `factorize(0)` is treated as `1`.
pub fn factorize(n: &BigUint) -> Factorization {
    let mut factors = BTreeMap::new();
    for p in factor::prime_factors(n) {
        *factors.entry(p).or_insert(0) += 1;
    }
    Factorization {
        value: if n.is_zero() { BigUint::one() } else { n.clone() },
        factors,
    }
}

pub fn factorize_u64(n: u64) -> Factorization {
    factorize(&BigUint::from(n))
}

/// Prime divisors of a `u64`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize_u64(n)
        .primes_u64()
        .expect("divisors of a u64 fit in a u64")
}

/// `e(r, q)`: the multiplicative order of `q` modulo an odd prime `r`; for
/// `r = 2` it is `1` if `q = 1 (mod 4)` and `2` otherwise.
pub fn mult_order(r: u64, q: u64) -> Result<u64, NumberTheoryError> {
    if !is_prime_u64(r) {
        return Err(NumberTheoryError::NotPrime(r));
    }
    if q % r == 0 {
        return Err(NumberTheoryError::NotCoprime { r, q });
    }
    if r == 2 {
        return Ok(if q % 4 == 1 { 1 } else { 2 });
    }
    Ok(order_mod_prime(q % r, r))
}

/// Same as [`mult_order`] for an arbitrary-precision `q`.
pub fn mult_order_big(r: u64, q: &BigUint) -> Result<u64, NumberTheoryError> {
    if r == 2 {
        let low = (q % 4u32).to_u64().unwrap();
        return mult_order(2, low + 4);
    }
    let reduced = (q % r).to_u64().unwrap();
    if reduced == 0 && is_prime_u64(r) {
        return Err(NumberTheoryError::NotCoprime {
            r,
            q: q.to_u64().unwrap_or(u64::MAX),
        });
    }
    mult_order(r, reduced)
}

/// Order of `a` in `(Z/r)^*` for a prime `r` not dividing `a`.
fn order_mod_prime(a: u64, r: u64) -> u64 {
    let mut order = r - 1;
    for p in prime_divisors(r - 1) {
        while order % p == 0 && powmod(a, order / p, r) == 1 {
            order /= p;
        }
    }
    order
}

pub(crate) fn powmod(a: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n as u128;
    let mut b = a as u128 % n as u128;
    let n = n as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    r as u64
}

fn mobius(n: u64) -> i32 {
    let f = factorize_u64(n);
    if f.factors().values().any(|&e| e > 1) {
        0
    } else if f.factors().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Phi_m(q)`, the `m`-th cyclotomic polynomial evaluated at `q >= 2`.
pub fn cyclotomic_value(m: u64, q: &BigUint) -> BigUint {
    assert!(m >= 1);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let term = q.pow(d as u32) - 1u32;
        match mobius(m / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> BTreeMap<BigUint, u32> {
        let mut out = BTreeMap::new();
        let mut d = 2;
        while d * d <= n {
            while n % d == 0 {
                *out.entry(BigUint::from(d)).or_insert(0) += 1;
                n /= d;
            }
            d += 1;
        }
        if n > 1 {
            *out.entry(BigUint::from(n)).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn factorize_examples() {
        let f = factorize_u64(60);
        assert_eq!(f.to_compact(), "2^2 3^1 5^1");
        let f = factorize_u64((1 << 30) - 1);
        assert_eq!(f.factors(), &trial_division((1 << 30) - 1));
        assert_eq!(f.to_compact(), "3^2 7^1 11^1 31^1 151^1 331^1");
        assert!(factorize_u64(1).factors().is_empty());
    }

    #[test]
    fn factorize_matches_trial_division() {
        for n in (1..5000u64).chain([999_999_937, 600_851_475_143, 1 << 40, 3 * 3 * 3 * 1_000_003]) {
            assert_eq!(factorize_u64(n).factors(), &trial_division(n), "{n}");
        }
    }

    #[test]
    fn factorize_large_values() {
        // beyond 128 bits: Mersenne primes 2^19-1, 2^31-1, 2^127-1
        let m = |k: u32| (BigUint::one() << k) - 1u32;
        let n = m(19) * m(31) * m(127);
        let f = factorize(&n);
        assert_eq!(f.primes().cloned().collect::<Vec<_>>(), vec![m(19), m(31), m(127)]);
        // semiprime just under 2^96 with two ~48-bit factors
        let a = BigUint::from(281_474_976_710_597u64);
        let b = BigUint::from(281_474_976_710_591u64);
        let f = factorize(&(&a * &b));
        assert_eq!(f.primes().cloned().collect::<Vec<_>>(), vec![b, a]);
    }

    #[test]
    fn compact_round_trip() {
        let n = BigUint::from(2u32).pow(30) - 1u32;
        let f = factorize(&n);
        assert_eq!(Factorization::parse_compact(&n, &f.to_compact()), Some(f));
        assert_eq!(Factorization::parse_compact(&n, "3^2 7^1"), None);
        assert_eq!(Factorization::parse_compact(&BigUint::from(4u32), "4^1"), None);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(7, 2).unwrap(), 3);
        assert_eq!(mult_order(41, 2).unwrap(), 20);
        assert_eq!(mult_order(2, 7).unwrap(), 2);
        assert_eq!(mult_order(2, 5).unwrap(), 1);
        assert_eq!(mult_order(331, 2).unwrap(), 30);
        assert!(matches!(mult_order(3, 9), Err(NumberTheoryError::NotCoprime { .. })));
        assert!(matches!(mult_order(2, 4), Err(NumberTheoryError::NotCoprime { .. })));
        assert!(matches!(mult_order(9, 2), Err(NumberTheoryError::NotPrime(9))));
    }

    #[test]
    fn mult_order_against_brute_force() {
        for r in [3u64, 5, 7, 11, 13, 101, 257, 65537] {
            for q in 2..200u64 {
                if q % r == 0 {
                    continue;
                }
                let mut x = q % r;
                let mut k = 1;
                while x != 1 {
                    x = x * q % r;
                    k += 1;
                }
                assert_eq!(mult_order(r, q).unwrap(), k, "r={r} q={q}");
                assert_eq!(mult_order_big(r, &BigUint::from(q)).unwrap(), k);
            }
        }
    }

    #[test]
    fn cyclotomic_values() {
        let two = BigUint::from(2u32);
        assert_eq!(cyclotomic_value(1, &two), 1u32.into());
        assert_eq!(cyclotomic_value(6, &two), 3u32.into());
        assert_eq!(cyclotomic_value(15, &two), 151u32.into());
        assert_eq!(cyclotomic_value(24, &two), 241u32.into());
        assert_eq!(cyclotomic_value(30, &two), 331u32.into());
        assert_eq!(cyclotomic_value(3, &BigUint::from(11u32)), 133u32.into());
        // product over divisors recovers q^m - 1
        for m in 1..=30u64 {
            let q = BigUint::from(7u32);
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(BigUint::one(), |acc, d| acc * cyclotomic_value(d, &q));
            assert_eq!(prod, q.pow(m as u32) - 1u32);
        }
    }
}
