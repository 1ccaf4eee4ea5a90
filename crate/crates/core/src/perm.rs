//! Permutations on `{0, .., n-1}` acting on the right.
//!
//! `a.compose(&b)` applies `a` first and then `b`, so `x^(ab) = (x^a)^b`.

use std::fmt;

use num_integer::Integer;

/// A permutation stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Error returned when an image list is not a bijection.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a permutation of 0..{degree}: {reason}")]
pub struct InvalidPermutation {
    pub degree: usize,
    pub reason: String,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, InvalidPermutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(InvalidPermutation {
                    degree: n,
                    reason: format!("image {x} out of range"),
                });
            }
            if seen[x] {
                return Err(InvalidPermutation {
                    degree: n,
                    reason: format!("image {x} repeated"),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, InvalidPermutation> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(InvalidPermutation {
                        degree,
                        reason: format!("cycle point out of range in {cycle:?}"),
                    });
                }
                if touched[a as usize] {
                    return Err(InvalidPermutation {
                        degree,
                        reason: format!("point {a} appears twice"),
                    });
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[other.images[i] as usize] = other.images[x as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        result
    }

    /// Cycle lengths (including fixed points) in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Order of the permutation, the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    /// Smallest point moved by the permutation.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
