//! Schur multiplier dimensions through second Lie algebra cohomology with
//! trivial coefficients.
//!
//! Over a field of characteristic zero `M(L) ≅ H^2(L)` (dually), so
//! `dim M(L) = dim Z^2(L) - dim B^2(L)` where `Z^2` is the space of
//! alternating 2-cocycles and `B^2 ≅ (L^2)^*` the coboundaries.

use std::fmt;

use crate::algebra::{pair_index, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{rank, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplierReport {
    pub n: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_m: usize,
    /// `None` for abelian algebras, where `s` is undefined.
    pub s: Option<i64>,
    pub t: i64,
}

/// `(n-1)(n-2)/2 + 1 - dim M`
pub fn s_from_dims(n: usize, dim_m: usize) -> i64 {
    let n = n as i64;
    (n - 1) * (n - 2) / 2 + 1 - dim_m as i64
}

/// `n(n-1)/2 - dim M`
pub fn t_from_dims(n: usize, dim_m: usize) -> i64 {
    let n = n as i64;
    n * (n - 1) / 2 - dim_m as i64
}

/// Dimension of the space of alternating bilinear forms `f` on `L` with
/// `f([x,y],z) + f([y,z],x) + f([z,x],y) = 0`.
pub fn two_cocycle_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let unknowns = n * (n - 1) / 2;
    // f(u, x_m) as a linear form in the unknowns f(a, b), a < b.
    let pair_form = |u: &SparseVec, m: usize| -> Vec<(usize, Scalar)> {
        u.iter()
            .filter(|(a, _)| *a != m)
            .map(|(a, c)| {
                if a < m {
                    (pair_index(n, a, m), c.clone())
                } else {
                    (pair_index(n, m, a), -c)
                }
            })
            .collect()
    };
    let mut equations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut terms = pair_form(&l.basis_bracket(i, j), k);
                terms.extend(pair_form(&l.basis_bracket(j, k), i));
                terms.extend(pair_form(&l.basis_bracket(k, i), j));
                let eq = SparseVec::from_pairs(terms);
                if !eq.is_zero() {
                    equations.push(eq);
                }
            }
        }
    }
    unknowns - rank(&equations, unknowns)
}

pub fn multiplier_report(l: &LieAlgebra) -> Result<MultiplierReport> {
    l.nilpotency_class()?;
    let n = l.dim();
    let dim_z2 = two_cocycle_dim(l);
    let dim_b2 = l.derived_subalgebra().dim();
    let dim_m = dim_z2 - dim_b2;
    Ok(MultiplierReport {
        n,
        dim_z2,
        dim_b2,
        dim_m,
        s: (!l.is_abelian()).then(|| s_from_dims(n, dim_m)),
        t: t_from_dims(n, dim_m),
    })
}

pub fn schur_multiplier_dim(l: &LieAlgebra) -> Result<usize> {
    multiplier_report(l).map(|r| r.dim_m)
}

pub fn s_invariant(l: &LieAlgebra) -> Result<i64> {
    if l.is_abelian() {
        return Err(Error::AbelianInput);
    }
    Ok(multiplier_report(l)?.s.expect("non-abelian"))
}

pub fn t_invariant(l: &LieAlgebra) -> Result<i64> {
    multiplier_report(l).map(|r| r.t)
}

/// `dim M(L ⊕ A(k))` from `dim M(L)` and `dim L/L^2`.
pub fn kunneth_dim(dim_m: usize, dim_ab: usize, k: usize) -> usize {
    dim_m + k * dim_ab + k * k.saturating_sub(1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub strict: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        if self.strict {
            self.lhs < self.rhs
        } else {
            self.lhs <= self.rhs
        }
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.strict { "<" } else { "<=" };
        let status = if self.holds() { "ok" } else { "VIOLATED" };
        write!(
            f,
            "{}: {} {rel} {} ({status})",
            self.name, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(BoundCheck::holds)
    }

    pub fn get(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluates the upper bounds on `dim M(L)` that apply to `l`.
///
/// - `moneyhun`: `dim M <= n(n-1)/2`
/// - `nonabelian`: `dim M <= (n-1)(n-2)/2 + 1` when `L` is non-abelian
/// - `derived`: `dim M <= (n+m-2)(n-m-1)/2 + 1` with `m = dim L^2 >= 1`
/// - `noncapable`: `n - 3 < s(L)` when `noncapable_hint` is set and `m >= 2`
pub fn bound_checks(l: &LieAlgebra, noncapable_hint: Option<bool>) -> Result<BoundReport> {
    let r = multiplier_report(l)?;
    let n = r.n as i64;
    let m = r.dim_b2 as i64;
    let dim_m = r.dim_m as i64;
    let mut checks = vec![BoundCheck {
        name: "moneyhun",
        lhs: dim_m,
        rhs: n * (n - 1) / 2,
        strict: false,
    }];
    if m >= 1 {
        checks.push(BoundCheck {
            name: "nonabelian",
            lhs: dim_m,
            rhs: (n - 1) * (n - 2) / 2 + 1,
            strict: false,
        });
        checks.push(BoundCheck {
            name: "derived",
            lhs: dim_m,
            rhs: (n + m - 2) * (n - m - 1) / 2 + 1,
            strict: false,
        });
    }
    if noncapable_hint == Some(true) && m >= 2 {
        checks.push(BoundCheck {
            name: "noncapable",
            lhs: n - 3,
            rhs: r.s.expect("non-abelian"),
            strict: true,
        });
    }
    Ok(BoundReport { checks })
}
