//! The map `g: L^2 ⊗ L^{ab} → M(L)` for class-two algebras,
//! `x ⊗ (z + L^2) ↦ [x̄, z̄] + [R, F]`, and the subspace `K` of cyclic sums
//! `[x,y] ⊗ z + [z,x] ⊗ y + [y,z] ⊗ x` that it annihilates.
//!
//! For class two the sequence
//! `0 → ker g → L^2 ⊗ L^{ab} → M(L) → M(L^{ab}) → L^2 → 0` is exact, so its
//! alternating dimension sum vanishes.

use num_traits::One;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::hopf::presentation::{Presentation, PresentationOptions};
use crate::linalg::{nullspace, Scalar, SparseVec, Subspace};

#[derive(Clone, Debug)]
pub struct GaneaData {
    pub dim_derived: usize,
    pub dim_abelianization: usize,
    /// `dim L^2 ⊗ L^{ab}`
    pub dim_domain: usize,
    pub rank_g: usize,
    /// `ker g` in coordinates `a * dim_abelianization + j` for the basis
    /// `b_a ⊗ y_j` of the domain.
    pub kernel: Subspace,
    pub k: Subspace,
    pub dim_multiplier: usize,
    pub dim_multiplier_abelianization: usize,
    /// Every image `[x̄, z̄]` lies in `R ∩ F^2`.
    pub images_in_relations: bool,
}

impl GaneaData {
    pub fn dim_ker_g(&self) -> usize {
        self.kernel.dim()
    }

    pub fn dim_k(&self) -> usize {
        self.k.dim()
    }

    pub fn k_in_kernel(&self) -> bool {
        self.k.is_subspace_of(&self.kernel)
    }

    /// `dim ker g - dim(L^2 ⊗ L^{ab}) + dim M(L) - dim M(L^{ab}) + dim L^2`
    pub fn exactness_sum(&self) -> i64 {
        self.dim_ker_g() as i64 - self.dim_domain as i64 + self.dim_multiplier as i64
            - self.dim_multiplier_abelianization as i64
            + self.dim_derived as i64
    }
}

pub fn ganea_data(l: &LieAlgebra) -> Result<GaneaData> {
    ganea_with_options(l, PresentationOptions::default())
}

pub fn ganea_with_options(l: &LieAlgebra, options: PresentationOptions) -> Result<GaneaData> {
    let class = l.nilpotency_class()?;
    if class != 2 {
        return Err(Error::WrongClass { class });
    }
    let p = Presentation::with_options(l, options)?;
    let derived = l.derived_subalgebra();
    let derived_basis: Vec<SparseVec> = derived.basis().cloned().collect();
    let derived_pivots: Vec<usize> = derived.pivots().collect();
    let m = derived_basis.len();
    let d = p.generator_count();
    let dim_domain = m * d;
    let free = p.free().algebra();
    let commutators = p.relation_commutators();

    let mut images_in_relations = true;
    let mut residues: Vec<SparseVec> = Vec::with_capacity(dim_domain);
    for b in &derived_basis {
        let lifted = p.lift(b);
        for j in 0..d {
            let img = free.bracket_sparse(&lifted, &SparseVec::unit(j));
            images_in_relations &= p.relations_in_derived().contains(&img);
            residues.push(commutators.reduce(&img));
        }
    }
    let rank_g = Subspace::span(free.dim(), residues.iter().cloned()).dim();

    let mut equations: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); free.dim()];
    for (col, r) in residues.iter().enumerate() {
        for (k, c) in r.iter() {
            equations[k].push((col, c.clone()));
        }
    }
    let equations: Vec<SparseVec> = equations
        .into_iter()
        .filter(|e| !e.is_empty())
        .map(SparseVec::from_pairs)
        .collect();
    let kernel = nullspace(&equations, dim_domain);

    // Coordinates of w ∈ L^2 in the echelon basis are its pivot entries.
    let tensor = |w: &SparseVec, j: usize| -> SparseVec {
        SparseVec::from_pairs(
            derived_pivots
                .iter()
                .enumerate()
                .map(|(a, &piv)| (a * d + j, w.get(piv))),
        )
    };
    let gens = p.generator_indices();
    let mut k = Subspace::zero(dim_domain);
    for i in 0..d {
        for j in i + 1..d {
            for t in j + 1..d {
                let (x, y, z) = (gens[i], gens[j], gens[t]);
                let mut v = tensor(&l.basis_bracket(x, y), t);
                v.axpy(&Scalar::one(), &tensor(&l.basis_bracket(z, x), j));
                v.axpy(&Scalar::one(), &tensor(&l.basis_bracket(y, z), i));
                k.insert(v);
            }
        }
    }

    Ok(GaneaData {
        dim_derived: m,
        dim_abelianization: d,
        dim_domain,
        rank_g,
        kernel,
        k,
        dim_multiplier: p.multiplier_dim(),
        dim_multiplier_abelianization: d * d.saturating_sub(1) / 2,
        images_in_relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integer_algebra;

    #[test]
    fn heisenberg_has_trivial_kernel() {
        let g = ganea_data(&LieAlgebra::heisenberg(1)).unwrap();
        assert_eq!(g.dim_domain, 2);
        assert_eq!(g.dim_ker_g(), 0);
        assert_eq!(g.dim_multiplier, 2);
        assert_eq!(g.exactness_sum(), 0);
        assert!(g.images_in_relations);
    }

    #[test]
    fn class_three_is_refused() {
        let l = integer_algebra(4, &[(1, 2, &[(1, 3)]), (1, 3, &[(1, 4)])]).unwrap();
        assert_eq!(ganea_data(&l).unwrap_err(), Error::WrongClass { class: 3 });
        assert_eq!(
            ganea_data(&LieAlgebra::abelian(3)).unwrap_err(),
            Error::WrongClass { class: 1 }
        );
    }

    #[test]
    fn l626_kernel() {
        let l = integer_algebra(
            6,
            &[(1, 2, &[(1, 4)]), (1, 3, &[(1, 5)]), (2, 3, &[(1, 6)])],
        )
        .unwrap();
        let g = ganea_data(&l).unwrap();
        assert_eq!(g.dim_ker_g(), 1);
        assert_eq!(g.dim_k(), 1);
        assert!(g.k_in_kernel());
        assert_eq!(g.exactness_sum(), 0);
    }
}
