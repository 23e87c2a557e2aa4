//! Hall bases of free Lie algebras and their nilpotent truncations.
//!
//! Hall words are ordered by degree, and within a degree by the order in
//! which they are generated: left factor ascending, then right factor
//! ascending. A bracket `[u, v]` of Hall words is a Hall word when `u > v`
//! and either `u` is a generator or `u = [u', u'']` with `u'' <= v`.
//!
//! Products of Hall words are rewritten into the basis with the Jacobi
//! identity `[[a', a''], b] = [[a', b], a''] + [a', [a'', b]]`, applied
//! whenever `[[a', a''], b]` is not itself a Hall word.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Scalar, SparseVec};

/// Default cap on the total dimension of a truncated Hall basis.
pub const DEFAULT_BASIS_CAP: usize = 5000;

/// Environment variable overriding [`DEFAULT_BASIS_CAP`].
pub const BASIS_CAP_ENV: &str = "LIEMULT_BASIS_CAP";

/// The cap from `LIEMULT_BASIS_CAP` when set to a positive integer,
/// otherwise the default.
pub fn basis_cap_from_env() -> usize {
    std::env::var(BASIS_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_BASIS_CAP)
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Witt's formula: the dimension of the degree-`m` component of the free Lie
/// algebra on `d` generators.
pub fn witt_dim(d: usize, m: usize) -> usize {
    assert!(d >= 1 && m >= 1);
    let total: i128 = (1..=m)
        .filter(|&e| m.is_multiple_of(e))
        .map(|e| mobius(e) as i128 * (d as i128).pow((m / e) as u32))
        .sum();
    (total / m as i128) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HallWord {
    Generator(usize),
    /// `[u, v]` with both factors given by their basis index.
    Bracket(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallBasis {
    generators: usize,
    class: usize,
    words: Vec<HallWord>,
    degrees: Vec<usize>,
}

impl HallBasis {
    pub fn new(generators: usize, class: usize) -> Result<Self> {
        Self::with_cap(generators, class, DEFAULT_BASIS_CAP)
    }

    pub fn with_cap(generators: usize, class: usize, cap: usize) -> Result<Self> {
        assert!(generators >= 1 && class >= 1);
        let needed: usize = (1..=class).map(|m| witt_dim(generators, m)).sum();
        if needed > cap {
            return Err(Error::ResourceLimit { needed, cap });
        }
        let mut words: Vec<HallWord> = (0..generators).map(HallWord::Generator).collect();
        let mut degrees = vec![1; generators];
        for m in 2..=class {
            let existing = words.len();
            for u in 0..existing {
                let du = degrees[u];
                if du >= m {
                    continue;
                }
                for v in 0..u {
                    if du + degrees[v] != m {
                        continue;
                    }
                    let admissible = match words[u] {
                        HallWord::Generator(_) => true,
                        HallWord::Bracket(_, u2) => u2 <= v,
                    };
                    if admissible {
                        words.push(HallWord::Bracket(u, v));
                        degrees.push(m);
                    }
                }
            }
        }
        debug_assert_eq!(words.len(), needed);
        Ok(Self {
            generators,
            class,
            words,
            degrees,
        })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, index: usize) -> HallWord {
        self.words[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.degrees[index]
    }

    /// Number of Hall words of each degree `1..=class`.
    pub fn degree_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.class];
        for &d in &self.degrees {
            out[d - 1] += 1;
        }
        out
    }

    /// Bracket notation for a basis element, e.g. `[[x2,x1],x1]`.
    pub fn render(&self, index: usize) -> String {
        match self.words[index] {
            HallWord::Generator(g) => format!("x{}", g + 1),
            HallWord::Bracket(u, v) => format!("[{},{}]", self.render(u), self.render(v)),
        }
    }
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = (0..self.len()).map(|i| self.render(i)).collect();
        write!(f, "{}", words.join(", "))
    }
}

struct Collector<'a> {
    basis: &'a HallBasis,
    lookup: HashMap<(usize, usize), usize>,
    memo: HashMap<(usize, usize), SparseVec>,
}

impl Collector<'_> {
    /// `[a, b]` expanded in the Hall basis, truncated above the class.
    fn bracket(&mut self, a: usize, b: usize) -> SparseVec {
        if a == b || self.basis.degree(a) + self.basis.degree(b) > self.basis.class {
            return SparseVec::new();
        }
        if a < b {
            return self.bracket(b, a).neg();
        }
        if let Some(v) = self.memo.get(&(a, b)) {
            return v.clone();
        }
        let value = if let Some(&w) = self.lookup.get(&(a, b)) {
            SparseVec::unit(w)
        } else {
            let HallWord::Bracket(a1, a2) = self.basis.word(a) else {
                unreachable!("[generator, smaller word] is always a Hall word")
            };
            // a2 > b here, otherwise [a, b] would be a Hall word.
            let left = self.bracket(a1, b);
            let mut acc = self.combination_bracket(&left, a2, false);
            let right = self.bracket(a2, b);
            acc.axpy(&Scalar::one(), &self.combination_bracket(&right, a1, true));
            acc
        };
        self.memo.insert((a, b), value.clone());
        value
    }

    /// `[comb, w]`, or `[w, comb]` when `flip` is set.
    fn combination_bracket(&mut self, comb: &SparseVec, w: usize, flip: bool) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in comb.iter() {
            let term = if flip {
                self.bracket(w, i)
            } else {
                self.bracket(i, w)
            };
            acc.axpy(c, &term);
        }
        acc
    }
}

/// The free nilpotent Lie algebra `F(d) / F(d)^{c+1}` on its Hall basis.
#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    basis: HallBasis,
    algebra: LieAlgebra,
}

impl FreeNilpotent {
    pub fn new(generators: usize, class: usize) -> Result<Self> {
        Self::from_basis(HallBasis::new(generators, class)?)
    }

    pub fn with_cap(generators: usize, class: usize, cap: usize) -> Result<Self> {
        Self::from_basis(HallBasis::with_cap(generators, class, cap)?)
    }

    fn from_basis(basis: HallBasis) -> Result<Self> {
        let lookup = basis
            .words
            .iter()
            .enumerate()
            .filter_map(|(i, w)| match w {
                HallWord::Bracket(u, v) => Some(((*u, *v), i)),
                HallWord::Generator(_) => None,
            })
            .collect();
        let mut collector = Collector {
            basis: &basis,
            lookup,
            memo: HashMap::new(),
        };
        let n = basis.len();
        let mut table = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                table.push(collector.bracket(i, j));
            }
        }
        let algebra = LieAlgebra::from_table(n, table);
        Ok(Self { basis, algebra })
    }

    pub fn basis(&self) -> &HallBasis {
        &self.basis
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn generators(&self) -> usize {
        self.basis.generators
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Index of the first basis element of degree at least 2. Hall words are
    /// sorted by degree, so `F^2` is spanned by the indices from here on.
    pub fn derived_start(&self) -> usize {
        self.basis.generators
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dim(2, 5), 6);
        assert_eq!(witt_dim(4, 3), 20);
        assert_eq!(witt_dim(3, 2), 3);
        for d in 1..6 {
            assert_eq!(witt_dim(d, 1), d);
        }
        assert_eq!(witt_dim(1, 2), 0);
        assert_eq!(witt_dim(2, 6), 9);
    }

    #[test]
    fn small_hall_bases() {
        let b = HallBasis::new(2, 3).unwrap();
        assert_eq!(b.degree_dims(), vec![2, 1, 2]);
        assert_eq!(b.to_string(), "x1, x2, [x2,x1], [[x2,x1],x1], [[x2,x1],x2]");
        assert_eq!(HallBasis::new(1, 3).unwrap().degree_dims(), vec![1, 0, 0]);
        assert_eq!(HallBasis::new(3, 2).unwrap().len(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let err = HallBasis::with_cap(4, 3, 29).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceLimit {
                needed: 30,
                cap: 29
            }
        );
    }

    #[test]
    fn free_nilpotent_two_two_is_heisenberg() {
        let f = FreeNilpotent::new(2, 2).unwrap();
        assert_eq!(f.algebra().dim(), 3);
        // [x1, x2] = -[x2, x1]
        assert_eq!(f.algebra().basis_bracket(0, 1), SparseVec::unit(2).neg());
        assert_eq!(f.algebra().center().dim(), 1);
    }

    #[test]
    fn free_nilpotent_three_two_center_is_degree_two() {
        let f = FreeNilpotent::new(3, 2).unwrap();
        let z = f.algebra().center();
        assert_eq!(z.dim(), 3);
        assert_eq!(z.pivots().collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn free_nilpotent_is_graded_and_valid() {
        let f = FreeNilpotent::new(3, 4).unwrap();
        assert!(f.algebra().validate().is_valid());
        let b = f.basis();
        for (i, j, v) in f.algebra().nonzero_brackets() {
            for (k, _) in v.iter() {
                assert_eq!(b.degree(k), b.degree(i) + b.degree(j));
            }
        }
    }
}
