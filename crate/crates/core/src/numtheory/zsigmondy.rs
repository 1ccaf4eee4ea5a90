//! Primitive prime divisors of `q^m - 1`.
//!
//! Every prime dividing `Phi_m(q)` either divides `m` or has `q` of order
//! exactly `m` modulo it; primitive prime divisors never divide `m`. So the
//! primitive part of `q^m - 1` is `Phi_m(q)` with the primes of `m` removed.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{cyclotomic_value, factorize, prime_divisors};

fn primitive_part(q: u64, m: u64) -> BigUint {
    let mut x = cyclotomic_value(m, &BigUint::from(q));
    for p in prime_divisors(m) {
        let p = BigUint::from(p);
        loop {
            let (quot, rem) = x.div_rem(&p);
            if !rem.is_zero() {
                break;
            }
            x = quot;
        }
    }
    x
}

/// Primes dividing `q^m - 1` but no `q^i - 1` with `1 <= i < m`, ascending.
pub fn primitive_prime_divisors(q: u64, m: u64) -> Vec<BigUint> {
    if q < 2 || m == 0 {
        return Vec::new();
    }
    factorize(&primitive_part(q, m)).primes().cloned().collect()
}

/// Whether `q^m - 1` has a primitive prime divisor.
pub fn ppd_exists_divisor_form(q: u64, m: u64) -> bool {
    q >= 2 && m >= 1 && !primitive_part(q, m).is_one()
}

/// Whether some prime `r` has `e(r, q) = m`, with the convention that
/// `e(2, q)` is `1` or `2` according to `q mod 4`.
pub fn ppd_exists_order_form(q: u64, m: u64) -> bool {
    if q < 2 || m == 0 {
        return false;
    }
    let mut x = primitive_part(q, m);
    while x.is_even() && !x.is_zero() {
        x >>= 1;
    }
    if !x.is_one() {
        return true;
    }
    q % 2 == 1 && m == if q % 4 == 1 { 1 } else { 2 }
}
