//! Deterministic Schreier-Sims.
//!
//! Transversal elements are stored explicitly (as inverses, which is what
//! sifting needs), so memory is `O(sum of orbit lengths * degree)`.

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `inv_transversal[b]` maps `b` back to `point`.
    inv_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            inv_transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.inv_transversal = vec![None; degree];
        self.inv_transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit.push(self.point);
        // Forward transversal elements are kept only for the BFS frontier.
        let mut forward = vec![Permutation::identity(degree)];
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            let u = forward[head].clone();
            head += 1;
            for s in &self.gens {
                let c = s.apply(b);
                if self.inv_transversal[c].is_none() {
                    let v = u.compose(s);
                    self.inv_transversal[c] = Some(v.inverse());
                    self.orbit.push(c);
                    forward.push(v);
                }
            }
        }
    }
}

/// A base and strong generating set.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return bsgs;
        }
        for g in &gens {
            if bsgs.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let p = g.first_moved().expect("non-identity");
                bsgs.levels.push(Level::new(p, degree));
            }
        }
        for g in &gens {
            for level in bsgs.levels.iter_mut() {
                level.gens.push(g.clone());
                if g.apply(level.point) != level.point {
                    break;
                }
            }
        }
        for level in bsgs.levels.iter_mut() {
            level.rebuild_orbit(degree);
        }
        bsgs.complete();
        bsgs
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match self.find_missing(iu) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let p = h.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(p, self.degree));
                    }
                    for l in iu + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// Looks for a Schreier generator of level `i` that does not sift
    /// through the levels below it.
    fn find_missing(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &b in &level.orbit {
            let u = level.inv_transversal[b].as_ref().unwrap().inverse();
            for s in &level.gens {
                let c = s.apply(b);
                let w = level.inv_transversal[c].as_ref().unwrap();
                let schreier = u.compose(s).compose(w);
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(schreier, i + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed all of them).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let b = g.apply(level.point);
            match &level.inv_transversal[b] {
                Some(w) => g = g.compose(w),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    /// Order as `u64`, or `None` if it does not fit.
    pub fn order_u64(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift_from(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[u32]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=9usize {
            let long: Vec<u32> = (0..n as u32).collect();
            let g = Bsgs::new(n, &[cyc(n, &[0, 1]), cyc(n, &long)]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g.order_u64(), Some(fact), "S{n}");
        }
    }

    #[test]
    fn membership() {
        // A4 on 4 points
        let g = Bsgs::new(4, &[cyc(4, &[0, 1, 2]), cyc(4, &[1, 2, 3])]);
        assert_eq!(g.order_u64(), Some(12));
        assert!(g.contains(&Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()));
        assert!(!g.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn trivial_group() {
        let g = Bsgs::new(5, &[Permutation::identity(5)]);
        assert_eq!(g.order_u64(), Some(1));
        assert!(g.contains(&Permutation::identity(5)));
        assert!(g.base().is_empty());
    }
}
