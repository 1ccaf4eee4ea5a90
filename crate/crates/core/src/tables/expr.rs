//! Integer expressions in `q` used by the symbolic table rows.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_traits::{Signed, Zero};

use super::TableError;
use crate::numtheory::factorize;

/// `+ - * / ^` over integers, `q` and `r = sqrt(2q)`. Division must be exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Q,
    R,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr, TableError> {
        let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { tokens, pos: 0, text };
        let e = p.sum()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, q: u64) -> Result<BigInt, TableError> {
        Ok(match self {
            Expr::Num(n) => n.clone(),
            Expr::Q => BigInt::from(q),
            Expr::R => {
                let r = (2 * q).sqrt();
                if r * r != 2 * q {
                    return Err(TableError::Eval(format!("sqrt(2q) is not an integer for q = {q}")));
                }
                BigInt::from(r)
            }
            Expr::Add(a, b) => a.eval(q)? + b.eval(q)?,
            Expr::Sub(a, b) => a.eval(q)? - b.eval(q)?,
            Expr::Mul(a, b) => a.eval(q)? * b.eval(q)?,
            Expr::Div(a, b) => {
                let (x, y) = (a.eval(q)?, b.eval(q)?);
                if y.is_zero() || !(&x % &y).is_zero() {
                    return Err(TableError::Eval(format!("{a} / {b} is not exact at q = {q}")));
                }
                x / y
            }
            Expr::Pow(a, k) => a.eval(q)?.pow(*k),
        })
    }

    /// Primes dividing the value; top-level products are factored piecewise.
    pub fn prime_set(&self, q: u64) -> Result<BTreeSet<u64>, TableError> {
        if let Expr::Mul(a, b) = self {
            let mut s = a.prime_set(q)?;
            s.extend(b.prime_set(q)?);
            return Ok(s);
        }
        let v = self.eval(q)?;
        if !v.is_positive() {
            return Err(TableError::Eval(format!("{self} is not positive at q = {q}")));
        }
        let (_, mag) = v.into_parts();
        primes_of(&mag)
    }
}

fn primes_of(n: &BigUint) -> Result<BTreeSet<u64>, TableError> {
    let f = factorize(n);
    f.primes_u64()
        .map(|v| v.into_iter().collect())
        .ok_or_else(|| TableError::Eval(format!("{n} has a prime factor above 2^64")))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Q => write!(f, "q"),
            Expr::R => write!(f, "r"),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Pow(a, k) => write!(f, "{a}^{k}"),
        }
    }
}

struct Parser<'a> {
    tokens: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> TableError {
        TableError::Parse(format!("{what} at offset {} in '{}'", self.pos, self.text))
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr, TableError> {
        let mut e = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            e = if c == '+' { Expr::Add(e.into(), rhs.into()) } else { Expr::Sub(e.into(), rhs.into()) };
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<Expr, TableError> {
        let mut e = self.power()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.power()?;
            e = if c == '*' { Expr::Mul(e.into(), rhs.into()) } else { Expr::Div(e.into(), rhs.into()) };
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr, TableError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.number()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent too large"))?;
            return Ok(Expr::Pow(base.into(), k));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<BigUint, TableError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.tokens[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Expr, TableError> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            Some('r') => {
                self.pos += 1;
                Ok(Expr::R)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(BigInt::from_biguint(Sign::Plus, self.number()?))),
            _ => Err(self.error("expected q, r, a number or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_suzuki_factors() {
        let e = Expr::parse("q-r+1").unwrap();
        assert_eq!(e.eval(32).unwrap(), BigInt::from(25));
        assert_eq!(Expr::parse("q+r+1").unwrap().eval(32).unwrap(), BigInt::from(41));
        assert!(e.eval(4).is_err());
    }

    #[test]
    fn precedence_and_division() {
        let e = Expr::parse("(q^10+q^5+1)/(q^2+q+1)").unwrap();
        // (1024 + 32 + 1) / 7 = 151
        assert_eq!(e.eval(2).unwrap(), BigInt::from(151));
        assert_eq!(Expr::parse("2*3^2-1").unwrap().eval(0).unwrap(), BigInt::from(17));
        assert!(Expr::parse("q/3").unwrap().eval(2).is_err());
        assert!(Expr::parse("q+").is_err());
        assert!(Expr::parse("(q").is_err());
    }

    #[test]
    fn prime_sets_split_products() {
        let e = Expr::parse("q*(q^8-1)*(q^12-1)").unwrap();
        let s: Vec<u64> = e.prime_set(2).unwrap().into_iter().collect();
        assert_eq!(s, vec![2, 3, 5, 7, 13, 17]);
    }
}
