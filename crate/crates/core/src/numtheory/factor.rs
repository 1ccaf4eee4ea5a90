//! Primality testing and Pollard-Brent factorization.
//!
//! Three arithmetic back ends: `u64` (with `u128` products), Montgomery form
//! for odd moduli below `2^128`, and `BigUint` for anything larger. Primality
//! is deterministic below `2^64` and Miller-Rabin with fixed witnesses above.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_BOUND: u64 = 1000;

#[inline]
fn mulmod64(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn powmod64(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod64(r, a, n);
        }
        a = mulmod64(a, a, n);
        e >>= 1;
    }
    r
}

/// Deterministic primality test for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Full 128x128 -> 256 bit product as `(high, low)`.
#[inline]
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = ((a >> 64) as u64, a as u64);
    let (b1, b0) = ((b >> 64) as u64, b as u64);
    let p00 = a0 as u128 * b0 as u128;
    let p01 = a0 as u128 * b1 as u128;
    let p10 = a1 as u128 * b0 as u128;
    let p11 = a1 as u128 * b1 as u128;
    let mid = (p00 >> 64) + (p01 as u64 as u128) + (p10 as u64 as u128);
    let low = (p00 as u64 as u128) | (mid << 64);
    let high = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (high, low)
}

/// Montgomery arithmetic modulo an odd `n < 2^128`.
#[derive(Clone, Copy)]
struct Mont128 {
    n: u128,
    /// `-n^-1 mod 2^128`
    ninv: u128,
    /// `2^256 mod n`
    r2: u128,
}

impl Mont128 {
    fn new(n: u128) -> Self {
        debug_assert!(n & 1 == 1);
        let mut inv: u128 = 1;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let ninv = inv.wrapping_neg();
        let big = BigUint::from(n);
        let r2 = (BigUint::one() << 256u32) % &big;
        Mont128 {
            n,
            ninv,
            r2: r2.to_u128().unwrap(),
        }
    }

    #[inline]
    fn reduce(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.ninv);
        let (mhi, mlo) = mul_wide(m, self.n);
        let carry = (lo != 0 || mlo != 0) as u128;
        let (u, over1) = hi.overflowing_add(mhi);
        let (u, over2) = u.overflowing_add(carry);
        if over1 || over2 || u >= self.n {
            u.wrapping_sub(self.n)
        } else {
            u
        }
    }

    #[inline]
    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.reduce(hi, lo)
    }

    fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    #[cfg(test)]
    fn from_mont(&self, a: u128) -> u128 {
        self.reduce(0, a)
    }

    fn one(&self) -> u128 {
        self.to_mont(1)
    }

    #[inline]
    fn add(&self, a: u128, b: u128) -> u128 {
        let (s, over) = a.overflowing_add(b);
        if over || s >= self.n {
            s.wrapping_sub(self.n)
        } else {
            s
        }
    }

    fn pow(&self, a: u128, mut e: u128) -> u128 {
        let mut r = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }
}

fn is_prime_u128(n: u128) -> bool {
    if n <= u64::MAX as u128 {
        return is_prime_u64(n as u64);
    }
    for &p in &WITNESSES {
        if n % p as u128 == 0 {
            return false;
        }
    }
    let m = Mont128::new(n);
    let one = m.one();
    let minus_one = m.to_mont(n - 1);
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = m.pow(m.to_mont(a as u128), d);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_big(n: &BigUint) -> bool {
    if let Some(v) = n.to_u128() {
        return is_prime_u128(v);
    }
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality: deterministic below `2^64`, strong probable prime above.
pub fn is_prime(n: &BigUint) -> bool {
    is_prime_big(n)
}

/// Montgomery arithmetic modulo an odd `n < 2^64`.
#[derive(Clone, Copy)]
struct Mont64 {
    n: u64,
    ninv: u64,
    r2: u64,
}

impl Mont64 {
    fn new(n: u64) -> Self {
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(n.wrapping_mul(inv)));
        }
        let r2 = ((1u128 << 64) % n as u128 * ((1u128 << 64) % n as u128) % n as u128) as u64;
        Mont64 {
            n,
            ninv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    fn reduce(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let (s, over) = t.overflowing_add(m as u128 * self.n as u128);
        let u = (s >> 64) as u64;
        if over || u >= self.n {
            u.wrapping_sub(self.n)
        } else {
            u
        }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 * b as u128)
    }

    fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.n, self.r2)
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let (s, over) = a.overflowing_add(b);
        if over || s >= self.n {
            s.wrapping_sub(self.n)
        } else {
            s
        }
    }
}

fn rho_u64(n: u64, c: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mt = Mont64::new(n);
    let cm = mt.to_mont(c);
    let f = |x: u64| mt.add(mt.mul(x, x), cm);
    let m = 128u64;
    let mut y = mt.to_mont(2);
    let (mut r, mut g) = (1u64, 1u64);
    let mut q = mt.to_mont(1);
    let (mut x, mut ys) = (0u64, 0u64);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mt.mul(q, x.abs_diff(y));
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_u128(n: u128, c: u128) -> Option<u128> {
    let mt = Mont128::new(n);
    let cm = mt.to_mont(c);
    let f = |x: u128| mt.add(mt.mul(x, x), cm);
    let m = 128u64;
    let mut y = mt.to_mont(2);
    let (mut r, mut g) = (1u64, 1u128);
    let mut q = mt.one();
    let (mut x, mut ys) = (0u128, 0u128);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mt.mul(q, x.abs_diff(y));
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n || g == 0 {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let m = 128u64;
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = BigUint::zero();
    let mut ys = BigUint::zero();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let d = if x > y { &x - &y } else { &y - &x };
                q = (q * d) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let d = if x > ys { &x - &ys } else { &ys - &x };
            g = d.gcd(n);
            if g > one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// A nontrivial factor of a composite `n`.
fn split(n: &BigUint) -> BigUint {
    if let Some(v) = n.to_u64() {
        for c in 1.. {
            if let Some(d) = rho_u64(v, c) {
                return BigUint::from(d);
            }
        }
    }
    if let Some(v) = n.to_u128() {
        for c in 1.. {
            if let Some(d) = rho_u128(v, c) {
                return BigUint::from(d);
            }
        }
    }
    for c in 1.. {
        if let Some(d) = rho_big(n, c) {
            return d;
        }
    }
    unreachable!()
}

/// Prime factors of `n` with multiplicity, in no particular order.
pub(crate) fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut n = n.clone();
    let mut p = 2u64;
    while p < TRIAL_BOUND {
        while (&n % p).is_zero() {
            n /= p;
            out.push(BigUint::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if m < BigUint::from(TRIAL_BOUND * TRIAL_BOUND) || is_prime_big(&m) {
            out.push(m);
            continue;
        }
        if let Some(r) = exact_sqrt(&m) {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let d = split(&m);
        let e = &m / &d;
        stack.push(d);
        stack.push(e);
    }
    out
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}
