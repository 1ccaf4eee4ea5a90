//! Property tests for the integer machinery.

use num_bigint::BigUint;
use num_traits::One;
use primegraph::numtheory::{
    factorize, gerono_enumerate, is_prime, mult_order, ppd_exists_divisor_form,
    ppd_exists_order_form, primitive_prime_divisors,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn factorization_recomposes(n in 1u128..(1u128 << 96)) {
        let n = BigUint::from(n);
        let f = factorize(&n);
        prop_assert_eq!(f.recompose(), n);
        for p in f.primes() {
            prop_assert!(is_prime(p));
        }
    }
}

proptest! {
    #[test]
    fn mult_order_divides_r_minus_one(r_index in 1usize..200, q in 2u64..1_000_000) {
        let r = nth_odd_prime(r_index);
        prop_assume!(q % r != 0);
        let e = mult_order(r, q).unwrap();
        prop_assert_eq!((r - 1) % e, 0);
        prop_assert_eq!(BigUint::from(q).modpow(&BigUint::from(e), &BigUint::from(r)), BigUint::one());
    }
}

fn nth_odd_prime(k: usize) -> u64 {
    (3u64..).step_by(2).filter(|&n| (3..n).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0)).nth(k - 1).unwrap()
}

/// Whether `q^m - 1` has a prime factor dividing no `q^i - 1`, `i < m`,
/// decided by repeatedly removing common factors with `prod (q^i - 1)`.
fn has_primitive_divisor_by_gcd(q: u64, m: u64) -> bool {
    use num_integer::Integer;
    let qb = BigUint::from(q);
    let mut x = qb.pow(m as u32) - 1u32;
    let prod = (1..m).fold(BigUint::one(), |acc, i| acc * (qb.pow(i as u32) - 1u32));
    loop {
        let g = x.gcd(&prod);
        if g.is_one() {
            break;
        }
        x /= g;
    }
    x > BigUint::one()
}

/// Order-form oracle: an odd prime of `q^m - 1` outside all `q^i - 1`, or
/// the prime 2 when `e(2, q) = m`.
fn has_order_form_prime(q: u64, m: u64) -> bool {
    use num_integer::Integer;
    let qb = BigUint::from(q);
    let mut x = qb.pow(m as u32) - 1u32;
    let prod = (1..m).fold(BigUint::from(2u32), |acc, i| acc * (qb.pow(i as u32) - 1u32));
    loop {
        let g = x.gcd(&prod);
        if g.is_one() {
            break;
        }
        x /= g;
    }
    x > BigUint::one() || (q % 2 == 1 && m == if q % 4 == 1 { 1 } else { 2 })
}

#[test]
fn zsigmondy_exception_sets() {
    let mut divisor_form = Vec::new();
    let mut order_form = Vec::new();
    for q in 2..=100u64 {
        for m in 1..=50u64 {
            let d = ppd_exists_divisor_form(q, m);
            assert_eq!(d, has_primitive_divisor_by_gcd(q, m), "divisor form q={q} m={m}");
            if !d {
                divisor_form.push((q, m));
            }
            let o = ppd_exists_order_form(q, m);
            assert_eq!(o, has_order_form_prime(q, m), "order form q={q} m={m}");
            if !o {
                order_form.push((q, m));
            }
        }
    }
    assert_eq!(order_form, vec![(2, 1), (2, 6), (3, 1)]);
    // q + 1 a power of two, with any exponent k (15 = 2^4 - 1 and 63 = 2^6 - 1 included)
    assert_eq!(
        divisor_form,
        vec![(2, 1), (2, 6), (3, 2), (7, 2), (15, 2), (31, 2), (63, 2)]
    );
    let mut union: Vec<(u64, u64)> = order_form.iter().chain(&divisor_form).copied().collect();
    union.sort();
    union.dedup();
    let mersenne: Vec<(u64, u64)> = (2..7).map(|k| ((1u64 << k) - 1, 2)).collect();
    let mut expected = vec![(2, 1), (3, 1), (2, 6)];
    expected.extend(mersenne);
    expected.sort();
    assert_eq!(union, expected);
}

#[test]
fn primitive_prime_divisor_lists_are_primitive() {
    for q in 2..=12u64 {
        for m in 1..=20u64 {
            for r in primitive_prime_divisors(q, m) {
                let Ok(r) = u64::try_from(&r) else { continue };
                if r != 2 {
                    assert_eq!(mult_order(r, q).unwrap(), m);
                }
            }
        }
    }
}

#[test]
fn gerono_solutions_subtract_to_one() {
    let sols = gerono_enumerate(1_000_000);
    assert!(!sols.is_empty());
    for s in sols {
        assert_eq!(s.pa.checked_sub(s.qb), Some(1));
        assert!(s.shape.is_some());
    }
}
