//! Permutation groups: construction, orders, element enumeration, spectra
//! and structural predicates.

mod bsgs;
mod datasets;
mod elements;
pub mod field;
pub mod linear;
pub(crate) mod spectrum;
pub(crate) mod structure;

use std::fmt::Write as _;

use num_bigint::BigUint;

pub use bsgs::Bsgs;
pub use datasets::{embedded_group, embedded_module, EMBEDDED_GROUPS, EMBEDDED_MODULES};
pub use elements::ElementSet;
pub use spectrum::{conjugacy_classes, spectrum, Spectrum};
pub use structure::{core_p, is_frobenius, is_solvable, normal_subgroups, SubgroupSet};

use crate::perm::{InvalidPermutation, Permutation};

/// Default cap on explicit element enumeration.
pub const DEFAULT_CAP: u64 = 20_000_000;

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("enumeration cap of {cap} elements exceeded")]
    CapExceeded { cap: u64 },
    #[error("invalid generator: {0}")]
    InvalidGenerator(#[from] InvalidPermutation),
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {0} is too large for explicit enumeration")]
    DegreeTooLarge(usize),
    #[error("malformed generator file, line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid linear action: {0}")]
    ActionInvalid(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("unknown embedded dataset {0:?}")]
    UnknownDataset(String),
}

/// A permutation group given by generators on `{0, .., degree-1}`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
}

impl PermGroup {
    /// Identity generators are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators: generators.into_iter().filter(|g| !g.is_identity()).collect(),
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            name: None,
        }
    }

    /// Cyclic group of order `n` acting regularly.
    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let cycle: Vec<u32> = (0..n as u32).collect();
        let g = Permutation::from_cycles(n, &[&cycle]).unwrap();
        PermGroup::new(n, vec![g]).unwrap().with_name(format!("C{n}"))
    }

    pub fn symmetric(n: usize) -> Self {
        let n = n.max(1);
        let mut gens = Vec::new();
        if n >= 2 {
            let cycle: Vec<u32> = (0..n as u32).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        PermGroup::new(n, gens).unwrap().with_name(format!("S{n}"))
    }

    pub fn alternating(n: usize) -> Self {
        let n = n.max(1);
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1, 2]]).unwrap());
            if n >= 4 {
                let cycle: Vec<u32> = if n % 2 == 1 {
                    (0..n as u32).collect()
                } else {
                    (1..n as u32).collect()
                };
                gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
            }
        }
        PermGroup::new(n, gens).unwrap().with_name(format!("A{n}"))
    }

    /// Dihedral group of order `order` (even, at least 4) on `order/2` points.
    pub fn dihedral(order: usize) -> Result<Self, GroupError> {
        if order < 4 || order % 2 == 1 {
            return Err(GroupError::Unsupported(format!(
                "dihedral group of order {order}"
            )));
        }
        let n = order / 2;
        let rotation: Vec<u32> = (0..n as u32).collect();
        let r = Permutation::from_cycles(n, &[&rotation]).unwrap();
        let reflection: Vec<u32> = (0..n as u32).map(|i| ((n - i as usize) % n) as u32).collect();
        let s = Permutation::from_images(reflection).unwrap();
        let g = if n == 2 {
            // D4 = C2 x C2 needs a faithful action on 4 points
            let a = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
            let b = Permutation::from_cycles(4, &[&[2, 3]]).unwrap();
            PermGroup::new(4, vec![a, b])?
        } else {
            PermGroup::new(n, vec![r, s])?
        };
        Ok(g.with_name(format!("D{order}")))
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(&self, other: &PermGroup) -> PermGroup {
        let n = self.degree + other.degree;
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut images: Vec<u32> = g.images().to_vec();
            images.extend((0..other.degree as u32).map(|i| i + self.degree as u32));
            gens.push(Permutation::from_images_unchecked(images));
        }
        for g in &other.generators {
            let mut images: Vec<u32> = (0..self.degree as u32).collect();
            images.extend(g.images().iter().map(|&x| x + self.degree as u32));
            gens.push(Permutation::from_images_unchecked(images));
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        PermGroup {
            degree: n,
            generators: gens,
            name,
        }
    }

    pub fn bsgs(&self) -> Bsgs {
        Bsgs::new(self.degree, &self.generators)
    }

    /// Exact order via Schreier-Sims.
    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    pub fn elements(&self, cap: u64) -> Result<ElementSet, GroupError> {
        ElementSet::enumerate(self, cap)
    }

    /// Parses the generator file format: a `degree N` line followed by one
    /// line of 1-based images per generator. `#` starts a comment.
    pub fn parse_generators(text: &str) -> Result<Self, GroupError> {
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| GroupError::Parse {
                line: lineno + 1,
                message,
            };
            if let Some(rest) = line.strip_prefix("degree") {
                if degree.is_some() {
                    return Err(err("repeated degree line".into()));
                }
                let d = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad degree: {e}")))?;
                if d == 0 {
                    return Err(err("degree must be positive".into()));
                }
                degree = Some(d);
                continue;
            }
            let d = degree.ok_or_else(|| err("generator before degree line".into()))?;
            let mut images = Vec::with_capacity(d);
            for tok in line.split_whitespace() {
                let v: u32 = tok
                    .parse()
                    .map_err(|e| err(format!("bad point {tok:?}: {e}")))?;
                if v == 0 {
                    return Err(err("points are 1-based".into()));
                }
                images.push(v - 1);
            }
            if images.len() != d {
                return Err(err(format!("expected {d} images, found {}", images.len())));
            }
            gens.push(Permutation::from_images(images).map_err(|e| err(e.to_string()))?);
        }
        let degree = degree.ok_or(GroupError::Parse {
            line: 0,
            message: "missing degree line".into(),
        })?;
        PermGroup::new(degree, gens)
    }

    /// Canonical text in the generator file format.
    pub fn to_generator_text(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            let line: Vec<String> = g.images().iter().map(|x| (x + 1).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_orders() {
        assert_eq!(PermGroup::cyclic(12).order(), BigUint::from(12u32));
        assert_eq!(PermGroup::symmetric(6).order(), BigUint::from(720u32));
        for n in 3..=9u32 {
            let half: u32 = (1..=n).product::<u32>() / 2;
            assert_eq!(PermGroup::alternating(n as usize).order(), BigUint::from(half));
        }
        assert_eq!(PermGroup::dihedral(10).unwrap().order(), BigUint::from(10u32));
        assert_eq!(PermGroup::dihedral(4).unwrap().order(), BigUint::from(4u32));
        let p = PermGroup::alternating(5).direct_product(&PermGroup::cyclic(2));
        assert_eq!(p.order(), BigUint::from(120u32));
        assert_eq!(p.name(), Some("A5xC2"));
    }

    #[test]
    fn generator_text_round_trip() {
        let g = PermGroup::alternating(6);
        let text = g.to_generator_text();
        let h = PermGroup::parse_generators(&text).unwrap();
        assert_eq!(h.generators(), g.generators());
        assert_eq!(h.to_generator_text(), text);
    }

    #[test]
    fn generator_parse_errors_name_the_line() {
        let e = PermGroup::parse_generators("degree 3\n1 2 2\n").unwrap_err();
        assert!(matches!(e, GroupError::Parse { line: 2, .. }), "{e}");
        let e = PermGroup::parse_generators("# c\n1 2 3\n").unwrap_err();
        assert!(matches!(e, GroupError::Parse { line: 2, .. }), "{e}");
        let e = PermGroup::parse_generators("degree 3\n1 2\n").unwrap_err();
        assert!(matches!(e, GroupError::Parse { line: 2, .. }), "{e}");
        assert!(PermGroup::parse_generators("").is_err());
    }
}
