//! Small finite fields `GF(p^k)` with log/antilog tables.
//!
//! An element is an integer `sum a_i p^i` standing for the polynomial
//! `sum a_i x^i` reduced modulo the field's defining polynomial. For `p = 2`
//! bit `i` is the coefficient of `x^i`.

use super::GroupError;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients `c_0 .. c_{k-1}` of the monic modulus `x^k + sum c_i x^i`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

const MAX_ORDER: u64 = 1 << 16;

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut r = q;
    let mut k = 0;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p as u32, k))
}

impl FiniteField {
    /// The field of order `q`, defined by the smallest primitive polynomial
    /// in the integer encoding of its lower coefficients.
    pub fn new(q: u64) -> Result<Self, GroupError> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| GroupError::Unsupported(format!("{q} is not a prime power")))?;
        if q > MAX_ORDER {
            return Err(GroupError::Unsupported(format!("field of order {q} too large")));
        }
        for code in 0..q as u32 {
            let modulus = digits(code, p, k);
            if modulus[0] == 0 && k > 1 {
                continue;
            }
            if let Some(f) = Self::build(p, k, modulus) {
                return Ok(f);
            }
        }
        unreachable!("a primitive polynomial always exists")
    }

    /// The field `GF(p^k)` defined by a given monic polynomial; `modulus`
    /// lists `c_0 .. c_{k-1}`. The polynomial must be primitive.
    pub fn with_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Result<Self, GroupError> {
        if prime_power(p as u64) != Some((p, 1)) || k == 0 || modulus.len() != k as usize {
            return Err(GroupError::ActionInvalid(format!(
                "bad field description p={p} k={k}"
            )));
        }
        if (p as u64).pow(k) > MAX_ORDER {
            return Err(GroupError::Unsupported("field too large".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(GroupError::ActionInvalid("modulus coefficient out of range".into()));
        }
        Self::build(p, k, modulus)
            .ok_or_else(|| GroupError::ActionInvalid("modulus is not primitive".into()))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Option<Self> {
        let q = p.pow(k);
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        // generator: x for k > 1, the smallest primitive root for k = 1
        let gen = if k == 1 {
            (1..p).find(|&g| mult_order_mod(g, p) == p - 1)?
        } else {
            p
        };
        let mut cur = 1u32;
        for i in 0..q - 1 {
            if log[cur as usize] != u32::MAX {
                return None;
            }
            log[cur as usize] = i;
            exp.push(cur);
            cur = if k == 1 {
                ((cur as u64 * gen as u64) % p as u64) as u32
            } else {
                times_x(cur, p, k, &modulus)
            };
        }
        let modulus = if k == 1 { vec![(p - gen) % p] } else { modulus };
        (cur == 1).then_some(FiniteField {
            p,
            k,
            q,
            modulus,
            exp,
            log,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * scale;
            a /= self.p;
            scale *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % (self.q as u64 - 1))) % (self.q as u64 - 1)) as usize]
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

fn digits(mut code: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn times_x(a: u32, p: u32, k: u32, modulus: &[u32]) -> u32 {
    let mut coeffs = digits(a, p, k);
    let top = coeffs[k as usize - 1];
    for i in (1..k as usize).rev() {
        coeffs[i] = coeffs[i - 1];
    }
    coeffs[0] = 0;
    for (c, &m) in coeffs.iter_mut().zip(modulus) {
        *c = (*c + p * p - top * m % p) % p;
    }
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn mult_order_mod(g: u32, p: u32) -> u32 {
    let mut x = g % p;
    let mut k = 1;
    while x != 1 {
        x = ((x as u64 * g as u64) % p as u64) as u32;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in [0, 1, q - 1, q / 2] {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32] {
            check_axioms(&FiniteField::new(q).unwrap());
        }
    }

    #[test]
    fn default_binary_moduli_are_the_conway_polynomials() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0]);
        assert_eq!(FiniteField::new(32).unwrap().modulus(), &[1, 0, 1, 0, 0]);
    }

    #[test]
    fn rejects_non_primitive_modulus() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
        assert!(FiniteField::with_modulus(2, 4, vec![1, 1, 1, 1]).is_err());
        assert!(FiniteField::with_modulus(2, 4, vec![1, 1, 0, 0]).is_ok());
        assert!(FiniteField::new(6).is_err());
    }
}
