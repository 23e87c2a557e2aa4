//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Basis vectors are `x_1, ..., x_n` in the public 1-based API and
//! `0..n` internally. Only brackets `[x_i, x_j]` with `i < j` are stored;
//! the opposite order is recovered by antisymmetry.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, Scalar, SparseVec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<SparseVec>,
    labels: Option<Vec<String>>,
}

/// Outcome of checking the Jacobi identity on every basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<JacobiViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    /// 1-based basis indices `i < j < k`.
    pub triple: (usize, usize, usize),
    pub defect: SparseVec,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `L = L^1, L^2, ..., 0`
    pub lower: Vec<Subspace>,
    /// `0, Z(L), Z_2(L), ..., L`
    pub upper: Vec<Subspace>,
    pub class: usize,
}

impl SeriesReport {
    pub fn lower_dims(&self) -> Vec<usize> {
        self.lower.iter().map(Subspace::dim).collect()
    }

    pub fn upper_dims(&self) -> Vec<usize> {
        self.upper.iter().map(Subspace::dim).collect()
    }
}

/// `L / I` together with the data relating it to `L`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    /// Indices of the basis vectors of `L` whose images form the basis of
    /// the quotient, ascending.
    pub complement: Vec<usize>,
}

impl Quotient {
    /// Coordinates in the quotient of the image of `v`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.ideal.reduce(v);
        SparseVec::from_pairs(r.iter().map(|(i, c)| {
            let pos = self
                .complement
                .binary_search(&i)
                .expect("residue is supported on the complement");
            (pos, c.clone())
        }))
    }

    /// Lift of a quotient coordinate vector along the chosen complement.
    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        v.reindex(|i| self.complement[i])
    }
}

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// The abelian algebra `A(n)`.
    pub fn abelian(n: usize) -> Self {
        assert!(n >= 1, "dimension must be positive");
        Self {
            dim: n,
            table: vec![SparseVec::new(); n * (n - 1) / 2],
            labels: None,
        }
    }

    /// The Heisenberg algebra `H(m)` of dimension `2m + 1` with
    /// `[x_{2i-1}, x_{2i}] = x_{2m+1}`.
    pub fn heisenberg(m: usize) -> Self {
        assert!(m >= 1, "Heisenberg rank must be positive");
        let n = 2 * m + 1;
        let mut l = Self::abelian(n);
        for i in 0..m {
            l.set(2 * i, 2 * i + 1, SparseVec::unit(n - 1));
        }
        l
    }

    /// Builds an algebra from 1-based bracket statements
    /// `[x_i, x_j] = sum of coef * x_k`. Brackets not listed are zero.
    /// Does not check the Jacobi identity; see [`LieAlgebra::validate`].
    pub fn from_brackets<'a, I>(n: usize, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, &'a [(Scalar, usize)])>,
    {
        let mut l = Self::abelian(n);
        for (i, j, terms) in brackets {
            for &idx in [i, j].iter().chain(terms.iter().map(|(_, k)| k)) {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            let value = SparseVec::from_pairs(terms.iter().map(|(c, k)| (k - 1, c.clone())));
            match i.cmp(&j) {
                std::cmp::Ordering::Less => l.set(i - 1, j - 1, value),
                std::cmp::Ordering::Greater => l.set(j - 1, i - 1, value.neg()),
                std::cmp::Ordering::Equal if value.is_zero() => {}
                std::cmp::Ordering::Equal => {
                    return Err(Error::JacobiFailure { i, j, k: i });
                }
            }
        }
        Ok(l)
    }

    /// 0-based constructor used by the free-algebra machinery.
    pub(crate) fn from_table(n: usize, table: Vec<SparseVec>) -> Self {
        assert_eq!(table.len(), n * (n - 1) / 2);
        Self {
            dim: n,
            table,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: SparseVec) {
        let idx = pair_index(self.dim, i, j);
        self.table[idx] = value;
    }

    /// Copy of the algebra with `[x_i, x_j]` (1-based, `i < j`) replaced.
    /// The result need not satisfy the Jacobi identity.
    pub fn with_bracket(&self, i: usize, j: usize, value: SparseVec) -> Self {
        assert!(1 <= i && i < j && j <= self.dim);
        let mut out = self.clone();
        out.labels = None;
        out.set(i - 1, j - 1, value);
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[x_i, x_j]` for 0-based indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => self.table[pair_index(self.dim, j, i)].neg(),
            std::cmp::Ordering::Equal => SparseVec::new(),
        }
    }

    /// Nonzero stored brackets as 0-based `(i, j, [x_i, x_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.table.iter())
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j), v)| (i, j, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(SparseVec::is_zero)
    }

    pub fn bracket_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                if i == j {
                    continue;
                }
                let (lo, hi, sign) = if i < j { (i, j, true) } else { (j, i, false) };
                let c = &self.table[pair_index(self.dim, lo, hi)];
                if c.is_zero() {
                    continue;
                }
                let f = a * b;
                acc.axpy(&if sign { f } else { -f }, c);
            }
        }
        acc
    }

    /// Bilinear extension of the multiplication table to coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        for len in [u.len(), v.len()] {
            if len != self.dim {
                return Err(Error::LengthMismatch {
                    expected: self.dim,
                    found: len,
                });
            }
        }
        Ok(self
            .bracket_sparse(&SparseVec::from_dense(u), &SparseVec::from_dense(v))
            .to_dense(self.dim))
    }

    fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let e = SparseVec::unit;
        let mut d = self.bracket_sparse(&self.basis_bracket(i, j), &e(k));
        d.axpy(
            &Scalar::one(),
            &self.bracket_sparse(&self.basis_bracket(j, k), &e(i)),
        );
        d.axpy(
            &Scalar::one(),
            &self.bracket_sparse(&self.basis_bracket(k, i), &e(j)),
        );
        d
    }

    /// Checks the Jacobi identity on all triples `i < j < k` in
    /// lexicographic order and reports the first failure.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let defect = self.jacobi_defect(i, j, k);
                    if !defect.is_zero() {
                        return ValidationReport {
                            violation: Some(JacobiViolation {
                                triple: (i + 1, j + 1, k + 1),
                                defect,
                            }),
                        };
                    }
                }
            }
        }
        ValidationReport { violation: None }
    }

    /// Like [`LieAlgebra::validate`] but as a `Result`.
    pub fn check_jacobi(&self) -> Result<()> {
        match self.validate().violation {
            None => Ok(()),
            Some(JacobiViolation {
                triple: (i, j, k), ..
            }) => Err(Error::JacobiFailure { i, j, k }),
        }
    }

    /// `[S, L]` for a subspace `S`.
    pub fn bracket_with_algebra(&self, s: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim);
        for row in s.basis() {
            for i in 0..self.dim {
                out.insert(self.bracket_sparse(row, &SparseVec::unit(i)));
            }
        }
        out
    }

    /// `L^2 = [L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        Subspace::span(self.dim, self.table.iter().cloned())
    }

    /// `{u : [u, L] ⊆ target}`. With `target = 0` this is the center.
    pub fn centralizer_mod(&self, target: &Subspace) -> Subspace {
        let n = self.dim;
        // Row (i, k): coordinate k of reduce([u, x_i]) as a linear form in u.
        let mut equations = Vec::new();
        for i in 0..n {
            let images: Vec<SparseVec> = (0..n)
                .map(|a| target.reduce(&self.basis_bracket(a, i)))
                .collect();
            let mut rows: std::collections::BTreeMap<usize, Vec<(usize, Scalar)>> =
                Default::default();
            for (a, img) in images.iter().enumerate() {
                for (k, c) in img.iter() {
                    rows.entry(k).or_default().push((a, c.clone()));
                }
            }
            equations.extend(rows.into_values().map(SparseVec::from_pairs));
        }
        nullspace(&equations, n)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_mod(&Subspace::zero(self.dim))
    }

    /// Lower central series `L^1 ⊇ L^2 ⊇ ...` until it stabilizes.
    fn lower_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let next = self.bracket_with_algebra(series.last().unwrap());
            let stable = next.dim() == series.last().unwrap().dim();
            if stable {
                return series;
            }
            let zero = next.is_zero();
            series.push(next);
            if zero {
                return series;
            }
        }
    }

    pub fn central_series(&self) -> Result<SeriesReport> {
        let lower = self.lower_series();
        let last = lower.last().unwrap();
        if !last.is_zero() {
            return Err(Error::NotNilpotent {
                stalled_at: last.dim(),
            });
        }
        let class = lower.len() - 1;
        let mut upper = vec![Subspace::zero(self.dim)];
        while upper.last().unwrap().dim() < self.dim {
            let next = self.centralizer_mod(upper.last().unwrap());
            debug_assert!(next.dim() > upper.last().unwrap().dim());
            upper.push(next);
        }
        Ok(SeriesReport {
            lower,
            upper,
            class,
        })
    }

    pub fn nilpotency_class(&self) -> Result<usize> {
        let lower = self.lower_series();
        if lower.last().unwrap().is_zero() {
            Ok(lower.len() - 1)
        } else {
            Err(Error::NotNilpotent {
                stalled_at: lower.last().unwrap().dim(),
            })
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_ok()
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim && self.bracket_with_algebra(s).is_subspace_of(s)
    }

    /// `L / I` on the complement spanned by the lexicographically first
    /// standard basis vectors outside the echelon pivots of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        self.quotient_data(ideal).map(|q| q.algebra)
    }

    pub fn quotient_data(&self, ideal: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.quotient_unchecked(ideal))
    }

    /// # Panics
    /// If `ideal` is the whole algebra; zero-dimensional algebras are not
    /// representable.
    pub(crate) fn quotient_unchecked(&self, ideal: &Subspace) -> Quotient {
        let complement = ideal.complement_indices();
        let m = complement.len();
        assert!(m > 0, "quotient by the whole algebra");
        let mut q = Quotient {
            algebra: Self::abelian(m),
            ideal: ideal.clone(),
            complement,
        };
        let mut table = Vec::with_capacity(m * (m - 1) / 2);
        for a in 0..m {
            for b in a + 1..m {
                let br = self.basis_bracket(q.complement[a], q.complement[b]);
                table.push(q.project(&br));
            }
        }
        q.algebra = Self::from_table(m, table);
        q
    }

    /// `L ⊕ M` with the basis of `L` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut out = Self::abelian(n);
        for (i, j, v) in self.nonzero_brackets() {
            out.set(i, j, v.clone());
        }
        let shift = self.dim;
        for (i, j, v) in other.nonzero_brackets() {
            out.set(i + shift, j + shift, v.reindex(|k| k + shift));
        }
        out
    }

    pub fn abelianization_dim(&self) -> usize {
        self.dim - self.derived_subalgebra().dim()
    }

    /// `Some(rank)` when `L^2 = Z(L)`, with `rank = dim L^2`.
    pub fn generalized_heisenberg_rank(&self) -> Option<usize> {
        let d = self.derived_subalgebra();
        let z = self.center();
        (d == z).then(|| d.dim())
    }

    pub fn is_generalized_heisenberg(&self) -> (bool, Option<usize>) {
        let r = self.generalized_heisenberg_rank();
        (r.is_some(), r)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}", self.dim)?;
        for (i, j, v) in self.nonzero_brackets() {
            write!(f, "; [x{},x{}] = {}", i + 1, j + 1, v)?;
        }
        Ok(())
    }
}

/// `[x_i, x_j] = sum of coef * x_k` as `(i, j, &[(coef, k)])`.
pub type IntegerBracket<'a> = (usize, usize, &'a [(i64, usize)]);

/// Convenience for integer-coefficient tables.
pub fn integer_algebra(n: usize, brackets: &[IntegerBracket]) -> Result<LieAlgebra> {
    let converted: Vec<_> = brackets
        .iter()
        .map(|(i, j, terms)| {
            (
                *i,
                *j,
                terms
                    .iter()
                    .map(|(c, k)| (crate::linalg::int(*c), *k))
                    .collect::<Vec<(Scalar, usize)>>(),
            )
        })
        .collect();
    LieAlgebra::from_brackets(n, converted.iter().map(|(i, j, t)| (*i, *j, t.as_slice())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn zero_vec(n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); n]
    }
    use crate::linalg::int;

    fn h1() -> LieAlgebra {
        LieAlgebra::heisenberg(1)
    }

    fn l57() -> LieAlgebra {
        integer_algebra(
            5,
            &[(1, 2, &[(1, 3)]), (1, 3, &[(1, 4)]), (1, 4, &[(1, 5)])],
        )
        .unwrap()
    }

    fn l610() -> LieAlgebra {
        integer_algebra(
            6,
            &[(1, 2, &[(1, 3)]), (1, 3, &[(1, 6)]), (4, 5, &[(1, 6)])],
        )
        .unwrap()
    }

    fn unit(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero_vec(n);
        v[i - 1] = int(1);
        v
    }

    #[test]
    fn heisenberg_bracket_and_center() {
        let h = h1();
        assert_eq!(h.bracket(&unit(3, 1), &unit(3, 2)).unwrap(), unit(3, 3));
        assert_eq!(h.bracket(&unit(3, 2), &unit(3, 1)).unwrap()[2], int(-1));
        assert_eq!(h.center(), Subspace::span(3, [SparseVec::unit(2)]));
        assert!(h.validate().is_valid());
        assert_eq!(h.is_generalized_heisenberg(), (true, Some(1)));
    }

    #[test]
    fn bracket_rejects_wrong_length() {
        let err = h1().bracket(&zero_vec(2), &zero_vec(3)).unwrap_err();
        assert_eq!(
            err,
            Error::LengthMismatch {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn mutated_heisenberg_fails_jacobi_at_first_triple() {
        let bad = h1().with_bracket(1, 3, SparseVec::unit(0));
        let report = bad.validate();
        let violation = report.violation.expect("must fail");
        assert_eq!(violation.triple, (1, 2, 3));
        // [[x3,x1],x2] = [-x1,x2] = -x3
        assert_eq!(violation.defect, SparseVec::unit(2).neg());
    }

    #[test]
    fn filiform_l57_series() {
        let s = l57().central_series().unwrap();
        assert_eq!(s.class, 4);
        assert_eq!(s.lower_dims(), vec![5, 3, 2, 1, 0]);
        assert_eq!(s.upper_dims(), vec![0, 1, 2, 3, 5]);
        assert_eq!(l57().center(), Subspace::span(5, [SparseVec::unit(4)]));
        assert_eq!(l57().is_generalized_heisenberg(), (false, None));
    }

    #[test]
    fn l610_class_and_quotient_by_center() {
        let l = l610();
        assert_eq!(l.nilpotency_class().unwrap(), 3);
        let z = l.center();
        assert_eq!(z, Subspace::span(6, [SparseVec::unit(5)]));
        let q = l.quotient(&z).unwrap();
        assert_eq!(q.dim(), 5);
        assert_eq!(q.derived_subalgebra().dim(), 1);
    }

    #[test]
    fn quotient_edge_cases() {
        let h = h1();
        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q, LieAlgebra::abelian(2));
        assert_eq!(h.quotient(&Subspace::zero(3)).unwrap(), h);
        let not_ideal = Subspace::span(3, [SparseVec::unit(0)]);
        assert_eq!(h.quotient(&not_ideal).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn non_nilpotent_algebra_is_rejected() {
        // [x1, x2] = x2 is solvable but not nilpotent.
        let l = integer_algebra(2, &[(1, 2, &[(1, 2)])]).unwrap();
        assert!(l.validate().is_valid());
        assert_eq!(
            l.central_series().unwrap_err(),
            Error::NotNilpotent { stalled_at: 1 }
        );
    }

    #[test]
    fn direct_sum_is_blockwise() {
        let s = LieAlgebra::abelian(2).direct_sum(&LieAlgebra::abelian(3));
        assert_eq!(s, LieAlgebra::abelian(5));
        let h = h1().direct_sum(&h1());
        assert_eq!(h.dim(), 6);
        assert_eq!(h.basis_bracket(3, 4), SparseVec::unit(5));
        assert_eq!(h.derived_subalgebra().dim(), 2);
        assert_eq!(h.center().dim(), 2);
    }

    #[test]
    fn constructors() {
        assert_eq!(LieAlgebra::abelian(1).nilpotency_class().unwrap(), 1);
        let h2 = LieAlgebra::heisenberg(2);
        assert_eq!(h2.dim(), 5);
        assert_eq!(h2.center().dim(), 1);
        for m in 1..=5 {
            assert_eq!(LieAlgebra::heisenberg(m).nilpotency_class().unwrap(), 2);
        }
    }

    #[test]
    fn out_of_range_index() {
        let err = integer_algebra(3, &[(1, 4, &[(1, 3)])]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 4, dim: 3 });
    }
}
