//! Exact sparse linear algebra over the rationals.
//!
//! Every dimension the crate reports is the rank or nullity of a rational
//! linear system, so nothing here ever rounds. Vectors are stored sparsely
//! because the large systems (Hall-basis presentations) have only a handful
//! of nonzero coordinates per vector.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational field element.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// A vector stored as `(index, value)` pairs, sorted by index, with no zero
/// values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        Self {
            entries: vec![(index, Scalar::one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            *acc.entry(i).or_insert_with(Scalar::zero) += v;
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<usize, Scalar>) -> Self {
        Self {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    fn get_ref(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// Largest index with a nonzero value, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v * factor)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self += factor * other`
    pub fn axpy(&mut self, factor: &Scalar, other: &SparseVec) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => merged.push(a.next().unwrap()),
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (ib, vb) = b.next().unwrap();
                    merged.push((*ib, vb * factor));
                }
                (Some(_), Some(_)) => {
                    let (ia, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let sum = va + vb * factor;
                    if !sum.is_zero() {
                        merged.push((ia, sum));
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (ib, vb) = b.next().unwrap();
                    merged.push((*ib, vb * factor));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), other);
        out
    }

    /// Maps indices through `f`, summing collisions. Used to move vectors
    /// between coordinate systems.
    pub fn reindex(&self, mut f: impl FnMut(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (pos, (i, v)) in self.entries.iter().enumerate() {
            let (sign, abs) = if v.is_negative() {
                ("-", -v)
            } else {
                ("+", v.clone())
            };
            if pos == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{abs}*x{}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// A subspace of `Q^ambient`, held as a reduced row echelon basis.
///
/// Each row is normalized to 1 at its pivot, is zero at every other pivot,
/// and its pivot is its first nonzero coordinate. This is the canonical RREF,
/// so the pivot set depends only on the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(SparseVec::unit))
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis rows in pivot order.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.rows.values()
    }

    /// Residue of `v` modulo the subspace; it is zero exactly at the pivots.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(i, _)| self.rows.contains_key(i))
            .map(|(i, c)| (i, c.clone()))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, Scalar> = v.iter().map(|(i, c)| (i, c.clone())).collect();
        for (p, c) in hits {
            for (j, a) in self.rows[&p].iter() {
                *acc.entry(j).or_insert_with(Scalar::zero) -= &c * a;
            }
        }
        SparseVec::from_map(acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set. Returns true when the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.max_index().is_none_or(|m| m < self.ambient));
        let r = self.reduce(&v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let inv = lead.recip();
        let r = r.scaled(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get_ref(pivot) {
                let c = -c.clone();
                row.axpy(&c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for r in other.rows.values() {
            out.insert(r.clone());
        }
        out
    }

    /// Intersection computed through the kernel of `[A | -B]`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let a: Vec<&SparseVec> = self.rows.values().collect();
        let b: Vec<&SparseVec> = other.rows.values().collect();
        // Columns are the basis vectors of both spaces; rows are coordinates.
        let ncols = a.len() + b.len();
        let mut equations: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ambient];
        for (col, v) in a.iter().enumerate() {
            for (i, c) in v.iter() {
                equations[i].push((col, c.clone()));
            }
        }
        for (col, v) in b.iter().enumerate() {
            for (i, c) in v.iter() {
                equations[i].push((a.len() + col, -c));
            }
        }
        let eqs: Vec<SparseVec> = equations.into_iter().map(SparseVec::from_pairs).collect();
        let kernel = nullspace(&eqs, ncols);
        Subspace::span(
            self.ambient,
            kernel.basis().map(|k| {
                let mut out = SparseVec::new();
                for (col, c) in k.iter() {
                    if col < a.len() {
                        out.axpy(c, a[col]);
                    }
                }
                out
            }),
        )
    }

    /// Standard basis indices not used as pivots, ascending. Their unit
    /// vectors complete the echelon basis to a basis of the ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|i| !self.rows.contains_key(i))
            .collect()
    }

    /// Same as [`Subspace::complement_indices`] but preferring the last
    /// coordinates: pivots are chosen from the highest index downward.
    pub fn complement_indices_reversed(&self) -> Vec<usize> {
        let n = self.ambient;
        let flipped = Subspace::span(n, self.rows.values().map(|r| r.reindex(|i| n - 1 - i)));
        let mut out: Vec<usize> = flipped
            .complement_indices()
            .into_iter()
            .map(|i| n - 1 - i)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn dense_basis(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .values()
            .map(|r| r.to_dense(self.ambient))
            .collect()
    }
}

/// Kernel of the linear map whose matrix rows are `equations` acting on
/// vectors of length `ncols`.
pub fn nullspace(equations: &[SparseVec], ncols: usize) -> Subspace {
    let row_space = Subspace::span(ncols, equations.iter().cloned());
    let mut kernel = Subspace::zero(ncols);
    for free in row_space.complement_indices() {
        let mut v = SparseVec::unit(free);
        for (p, row) in &row_space.rows {
            let c = row.get(free);
            if !c.is_zero() {
                v.axpy(&-c, &SparseVec::unit(*p));
            }
        }
        kernel.insert(v);
    }
    kernel
}

/// Solves `sum_a y_a columns[a] = target` for square, invertible systems
/// of size `n`. Returns `None` when the columns are singular.
pub fn solve_square(columns: &[SparseVec], n: usize, target: &SparseVec) -> Option<SparseVec> {
    assert_eq!(columns.len(), n);
    // Augmented matrix rows: [A | b].
    let mut m: Vec<Vec<Scalar>> = (0..n).map(|_| vec![Scalar::zero(); n + 1]).collect();
    for (a, col) in columns.iter().enumerate() {
        for (i, c) in col.iter() {
            m[i][a] = c.clone();
        }
    }
    for (i, c) in target.iter() {
        m[i][n] = c.clone();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(SparseVec::from_pairs(
        m.into_iter()
            .enumerate()
            .map(|(i, row)| (i, row[n].clone())),
    ))
}

pub fn rank(vectors: &[SparseVec], ambient: usize) -> usize {
    Subspace::span(ambient, vectors.iter().cloned()).dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(vals: &[i64]) -> SparseVec {
        SparseVec::from_dense(&vals.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn axpy_cancels_and_merges() {
        let mut a = v(&[1, 2, 0, 3]);
        a.axpy(&int(-2), &v(&[0, 1, 5, 0]));
        assert_eq!(a, v(&[1, 0, -10, 3]));
    }

    #[test]
    fn rref_pivots_are_canonical() {
        let s1 = Subspace::span(4, [v(&[0, 1, 1, 0]), v(&[1, 1, 0, 0])]);
        let s2 = Subspace::span(4, [v(&[1, 2, 1, 0]), v(&[2, 1, -1, 0])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.complement_indices(), vec![2, 3]);
        assert!(s1.contains(&v(&[3, 5, 2, 0])));
        assert!(!s1.contains(&v(&[0, 0, 0, 1])));
    }

    #[test]
    fn nullspace_of_rank_one_map() {
        let k = nullspace(&[v(&[1, 1, 1])], 3);
        assert_eq!(k.dim(), 2);
        for b in k.basis() {
            assert_eq!(b.iter().map(|(_, c)| c.clone()).sum::<Scalar>(), int(0));
        }
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(3, [v(&[0, 1, 0])]));
    }

    #[test]
    fn reversed_complement_prefers_high_indices() {
        let s = Subspace::span(3, [v(&[1, 1, 1])]);
        assert_eq!(s.complement_indices(), vec![1, 2]);
        assert_eq!(s.complement_indices_reversed(), vec![0, 1]);
    }

    #[test]
    fn solve_square_inverts() {
        let cols = [v(&[2, 1]), v(&[1, 1])];
        let y = solve_square(&cols, 2, &v(&[3, 2])).unwrap();
        assert_eq!(y, v(&[1, 1]));
        assert!(solve_square(&[v(&[1, 1]), v(&[2, 2])], 2, &v(&[1, 0])).is_none());
    }

    #[test]
    fn rational_entries_stay_exact() {
        let s = Subspace::span(2, [SparseVec::from_dense(&[ratio(1, 3), ratio(2, 7)])]);
        let row = s.basis().next().unwrap();
        assert_eq!(row.get(1), ratio(6, 7));
    }
}
