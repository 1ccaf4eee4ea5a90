//! Matrix groups over small finite fields acting on row vectors, and the
//! spectrum of a split extension `V : S` of a module by its acting group.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::field::FiniteField;
use super::spectrum::conjugacy_classes;
use super::{ElementSet, GroupError, PermGroup, Spectrum};
use crate::perm::Permutation;

/// Largest module `|V|` for which the affine permutation group is built.
const MAX_AFFINE_POINTS: u64 = 1 << 16;

/// A square matrix over a `FiniteField`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Matrix, f: &FiniteField) -> Matrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = f.add(*e, f.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix { n, entries }
    }

    pub fn add(&self, other: &Matrix, f: &FiniteField) -> Matrix {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                m.swap(rank * n + j, pivot * n + j);
            }
            let inv = f.inv(m[rank * n + col]).unwrap();
            for r in 0..n {
                if r == rank || m[r * n + col] == 0 {
                    continue;
                }
                let factor = f.mul(m[r * n + col], inv);
                for j in 0..n {
                    let sub = f.mul(factor, m[rank * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u32], f: &FiniteField) -> Vec<u32> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j)));
            }
        }
        out
    }
}

/// A group of invertible matrices given by generators, acting on the row
/// space `V = GF(q)^d`.
///
/// Generators are paired by position with the generators of a permutation
/// group. The pairing is assumed to extend to a homomorphism unless checked
/// with [`LinearAction::verify_homomorphism`].
#[derive(Clone, Debug)]
pub struct LinearAction {
    field: FiniteField,
    dimension: usize,
    matrices: Vec<Matrix>,
}

impl LinearAction {
    pub fn new(field: FiniteField, matrices: Vec<Matrix>) -> Result<Self, GroupError> {
        let dimension = matrices
            .first()
            .map(|m| m.dimension())
            .ok_or_else(|| GroupError::ActionInvalid("no matrices".into()))?;
        if dimension == 0 {
            return Err(GroupError::ActionInvalid("dimension 0".into()));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.dimension() != dimension {
                return Err(GroupError::ActionInvalid(format!(
                    "matrix {} has dimension {}, expected {dimension}",
                    i + 1,
                    m.dimension()
                )));
            }
            if m.entries.iter().any(|&x| x >= field.order()) {
                return Err(GroupError::ActionInvalid(format!(
                    "matrix {} has an entry outside the field",
                    i + 1
                )));
            }
            if m.rank(&field) != dimension {
                return Err(GroupError::ActionInvalid(format!(
                    "matrix {} is singular",
                    i + 1
                )));
            }
        }
        Ok(LinearAction {
            field,
            dimension,
            matrices,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `|V| = q^d`, if it fits in a `u64`.
    pub fn module_size(&self) -> Option<u64> {
        (self.field.order() as u64).checked_pow(self.dimension as u32)
    }

    /// Parses the module file format:
    ///
    /// ```text
    /// field 2^3 modulus 1011
    /// dimension 2
    /// matrix
    /// 1 0
    /// 1 1
    /// ```
    ///
    /// The modulus lists coefficients from the leading one down; it may be
    /// omitted to use the default field of that order.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut field: Option<FiniteField> = None;
        let mut dimension: Option<usize> = None;
        let mut matrices: Vec<Matrix> = Vec::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut in_matrix = false;
        let flush = |rows: &mut Vec<Vec<u32>>, matrices: &mut Vec<Matrix>, line: usize| {
            if rows.is_empty() {
                return Ok(());
            }
            let m = Matrix::from_rows(std::mem::take(rows)).ok_or(GroupError::Parse {
                line,
                message: "matrix is not square".into(),
            })?;
            matrices.push(m);
            Ok::<(), GroupError>(())
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| GroupError::Parse {
                line: lineno + 1,
                message,
            };
            let mut toks = line.split_whitespace();
            match toks.next().unwrap() {
                "field" => {
                    let spec = toks.next().ok_or_else(|| err("missing field order".into()))?;
                    let (p, k) = match spec.split_once('^') {
                        Some((p, k)) => (
                            p.parse::<u32>().map_err(|e| err(e.to_string()))?,
                            k.parse::<u32>().map_err(|e| err(e.to_string()))?,
                        ),
                        None => (spec.parse::<u32>().map_err(|e| err(e.to_string()))?, 1),
                    };
                    let f = match (toks.next(), toks.next()) {
                        (Some("modulus"), Some(digits)) => {
                            let coeffs: Option<Vec<u32>> =
                                digits.chars().rev().map(|c| c.to_digit(10)).collect();
                            let mut coeffs =
                                coeffs.ok_or_else(|| err("bad modulus digits".into()))?;
                            if coeffs.len() != k as usize + 1 || coeffs.pop() != Some(1) {
                                return Err(err("modulus must be monic of degree k".into()));
                            }
                            FiniteField::with_modulus(p, k, coeffs)
                                .map_err(|e| err(e.to_string()))?
                        }
                        (None, None) => FiniteField::new((p as u64).pow(k))
                            .map_err(|e| err(e.to_string()))?,
                        _ => return Err(err("expected `modulus <digits>`".into())),
                    };
                    field = Some(f);
                }
                "dimension" => {
                    let d = toks
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| err("bad dimension".into()))?;
                    dimension = Some(d);
                }
                "matrix" => {
                    flush(&mut rows, &mut matrices, lineno + 1)?;
                    in_matrix = true;
                }
                _ => {
                    if !in_matrix {
                        return Err(err(format!("unexpected line {line:?}")));
                    }
                    let row: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
                    let row = row.map_err(|e| err(format!("bad entry: {e}")))?;
                    if Some(row.len()) != dimension {
                        return Err(err("row length does not match dimension".into()));
                    }
                    rows.push(row);
                    if Some(rows.len()) == dimension {
                        flush(&mut rows, &mut matrices, lineno + 1)?;
                        in_matrix = false;
                    }
                }
            }
        }
        if !rows.is_empty() {
            return Err(GroupError::Parse {
                line: text.lines().count(),
                message: "incomplete matrix".into(),
            });
        }
        let field = field.ok_or(GroupError::Parse {
            line: 0,
            message: "missing field line".into(),
        })?;
        LinearAction::new(field, matrices)
    }

    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut modulus: String = "1".into();
        for c in f.modulus().iter().rev() {
            modulus.push_str(&c.to_string());
        }
        let mut out = format!(
            "field {}^{} modulus {}\ndimension {}\n",
            f.characteristic(),
            f.degree(),
            modulus,
            self.dimension
        );
        for m in &self.matrices {
            out.push_str("matrix\n");
            for i in 0..self.dimension {
                let row: Vec<String> = (0..self.dimension).map(|j| m.get(i, j).to_string()).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        out
    }

    fn encode(&self, v: &[u32]) -> u64 {
        let q = self.field.order() as u64;
        v.iter().rev().fold(0, |acc, &x| acc * q + x as u64)
    }

    fn decode(&self, mut code: u64) -> Vec<u32> {
        let q = self.field.order() as u64;
        (0..self.dimension)
            .map(|_| {
                let x = (code % q) as u32;
                code /= q;
                x
            })
            .collect()
    }

    fn normalize(&self, v: &mut [u32]) {
        if let Some(&lead) = v.iter().find(|&&x| x != 0) {
            let inv = self.field.inv(lead).unwrap();
            for x in v.iter_mut() {
                *x = self.field.mul(*x, inv);
            }
        }
    }

    /// Permutation action on the orbit of the projective point `<e_1>`.
    /// Generators correspond to the matrices by position.
    pub fn projective_group(&self) -> Result<PermGroup, GroupError> {
        let mut e1 = vec![0u32; self.dimension];
        e1[0] = 1;
        let mut index: HashMap<u64, u32> = HashMap::new();
        let mut points = vec![e1.clone()];
        index.insert(self.encode(&e1), 0);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.matrices.len()];
        let mut head = 0;
        while head < points.len() {
            let v = points[head].clone();
            for (k, m) in self.matrices.iter().enumerate() {
                let mut w = m.apply_row(&v, &self.field);
                self.normalize(&mut w);
                let code = self.encode(&w);
                let next = index.len() as u32;
                let id = *index.entry(code).or_insert_with(|| {
                    points.push(w);
                    next
                });
                images[k].push(id);
            }
            head += 1;
        }
        let mut gens = Vec::new();
        for (k, img) in images.into_iter().enumerate() {
            let p = Permutation::from_images(img)?;
            if p.is_identity() {
                return Err(GroupError::ActionInvalid(format!(
                    "matrix {} acts trivially on projective points",
                    k + 1
                )));
            }
            gens.push(p);
        }
        PermGroup::new(points.len(), gens)
    }

    /// The split extension `V : S` as a permutation group on the vectors
    /// of `V`: the matrices act linearly and an additive basis of `V`
    /// acts by translation.
    pub fn affine_group(&self) -> Result<PermGroup, GroupError> {
        let size = self
            .module_size()
            .filter(|&s| s <= MAX_AFFINE_POINTS)
            .ok_or_else(|| GroupError::Unsupported("module too large for affine action".into()))?;
        let mut gens = Vec::new();
        for m in &self.matrices {
            let img: Vec<u32> = (0..size)
                .map(|c| self.encode(&m.apply_row(&self.decode(c), &self.field)) as u32)
                .collect();
            gens.push(Permutation::from_images(img)?);
        }
        let p = self.field.characteristic();
        for i in 0..self.dimension {
            for j in 0..self.field.degree() {
                let mut t = vec![0u32; self.dimension];
                t[i] = p.pow(j);
                let img: Vec<u32> = (0..size)
                    .map(|c| {
                        let v = self.decode(c);
                        let w: Vec<u32> = v
                            .iter()
                            .zip(&t)
                            .map(|(&a, &b)| self.field.add(a, b))
                            .collect();
                        self.encode(&w) as u32
                    })
                    .collect();
                gens.push(Permutation::from_images(img)?);
            }
        }
        PermGroup::new(size as usize, gens)
    }

    fn check_pairing(&self, group: &PermGroup) -> Result<(), GroupError> {
        if group.generators().len() != self.matrices.len() {
            return Err(GroupError::ActionInvalid(format!(
                "{} matrices for {} group generators",
                self.matrices.len(),
                group.generators().len()
            )));
        }
        Ok(())
    }

    /// Matrix of every enumerated element, following the breadth-first tree.
    pub fn matrices_for(&self, elements: &ElementSet) -> Vec<Matrix> {
        let mut out: Vec<Matrix> = Vec::with_capacity(elements.len());
        out.push(Matrix::identity(self.dimension));
        for i in 1..elements.len() {
            let (p, k) = elements.parent(i).unwrap();
            let m = out[p].mul(&self.matrices[k], &self.field);
            out.push(m);
        }
        out
    }

    /// Checks that generator pairing extends to a homomorphism `S -> GL(V)`.
    pub fn verify_homomorphism(&self, group: &PermGroup, cap: u64) -> Result<bool, GroupError> {
        self.check_pairing(group)?;
        let mut elements = ElementSet::enumerate(group, cap)?;
        let mats = self.matrices_for(&elements);
        let gens = group.generators().to_vec();
        for i in 0..elements.len() {
            for (k, g) in gens.iter().enumerate() {
                let j = elements.mul_perm(i, g);
                if mats[i].mul(&self.matrices[k], &self.field) != mats[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `omega(V : S)` from the spectrum of `S` and the action on `V`.
///
/// For `s` of order `m` with matrix `M`, the elements `(v, s)` have order `m`
/// or `m p`, and order `m p` occurs exactly when `I + M + .. + M^(m-1)` is
/// nonzero. This is a class function, so class representatives suffice.
pub fn semidirect_spectrum(
    action: &LinearAction,
    group: &PermGroup,
    cap: u64,
) -> Result<Spectrum, GroupError> {
    action.check_pairing(group)?;
    let size = action
        .module_size()
        .ok_or_else(|| GroupError::Unsupported("module too large".into()))?;
    let mut elements = ElementSet::enumerate(group, cap)?;
    let mats = action.matrices_for(&elements);
    let p = action.field().characteristic() as u64;
    let f = action.field();
    let mut orders = BTreeSet::new();
    for class in conjugacy_classes(&mut elements) {
        let s = class[0];
        let m = elements.order(s);
        let mut sum = Matrix::zero(action.dimension());
        let mut power = Matrix::identity(action.dimension());
        for _ in 0..m {
            sum = sum.add(&power, f);
            power = power.mul(&mats[s], f);
        }
        if power != Matrix::identity(action.dimension()) {
            return Err(GroupError::ActionInvalid(
                "matrix order does not divide element order".into(),
            ));
        }
        orders.insert(m);
        if !sum.is_zero() {
            orders.insert(m * p);
        }
    }
    let order = (elements.len() as u64)
        .checked_mul(size)
        .ok_or_else(|| GroupError::Unsupported("group order overflows u64".into()))?;
    Spectrum::new(orders, order).map_err(GroupError::ActionInvalid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spectrum;

    fn sl2_2() -> LinearAction {
        let f = FiniteField::new(2).unwrap();
        let a = Matrix::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let b = Matrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        LinearAction::new(f, vec![a, b]).unwrap()
    }

    #[test]
    fn rank_and_singularity() {
        let f = FiniteField::new(3).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(m.rank(&f), 1);
        assert!(LinearAction::new(f, vec![m]).is_err());
    }

    #[test]
    fn s4_as_affine_group_of_gf2_squared() {
        let a = sl2_2();
        let s = a.projective_group().unwrap();
        assert_eq!(s.order(), 6u32.into());
        assert!(a.verify_homomorphism(&s, 100).unwrap());
        let affine = a.affine_group().unwrap();
        assert_eq!(affine.order(), 24u32.into());
        let brute = spectrum(&affine, 100).unwrap();
        let fast = semidirect_spectrum(&a, &s, 100).unwrap();
        assert_eq!(brute, fast);
    }

    #[test]
    fn text_round_trip() {
        let a = sl2_2();
        let b = LinearAction::parse(&a.to_text()).unwrap();
        assert_eq!(a.matrices(), b.matrices());
        assert!(LinearAction::parse("field 2\ndimension 2\nmatrix\n1 0\n").is_err());
        assert!(LinearAction::parse("field 2\ndimension 2\n1 0\n0 1\n").is_err());
    }
}
