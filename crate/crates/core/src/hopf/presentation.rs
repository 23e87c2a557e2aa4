//! Free presentations `L ≅ F/R` and the Hopf formula
//! `M(L) ≅ (R ∩ F^2) / [R, F]`.

use crate::algebra::LieAlgebra;
use crate::error::Result;
use crate::hopf::hall::{FreeNilpotent, HallWord, DEFAULT_BASIS_CAP};
use crate::linalg::{nullspace, solve_square, Scalar, SparseVec, Subspace};

/// Which deterministic complement to use wherever a basis must be completed
/// (generators of `L` modulo `L^2`, and the cover's relation complement).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ComplementChoice {
    /// Lexicographically first standard basis vectors.
    #[default]
    First,
    /// Lexicographically last standard basis vectors.
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PresentationOptions {
    pub basis_cap: usize,
    pub complement: ComplementChoice,
}

impl Default for PresentationOptions {
    fn default() -> Self {
        Self {
            basis_cap: DEFAULT_BASIS_CAP,
            complement: ComplementChoice::First,
        }
    }
}

/// A surjection `π: F → L` from the free nilpotent algebra of class
/// `class(L) + 1` on `dim L/L^2` generators.
///
/// Truncating `F` at class `c + 1` is faithful for the Hopf formula: since
/// `F^{c+1} ⊆ R`, the discarded `F^{c+2} = [F^{c+1}, F]` already lies in
/// `[R, F]`.
#[derive(Clone, Debug)]
pub struct Presentation {
    target: LieAlgebra,
    options: PresentationOptions,
    /// 0-based basis indices of `L` that `π` sends the free generators to.
    generators: Vec<usize>,
    class: usize,
    free: FreeNilpotent,
    /// `π(h)` for every Hall basis element `h`, in coordinates of `L`.
    images: Vec<SparseVec>,
    /// Hall elements whose images form a basis of `L`; used for lifting.
    lift_basis: Vec<usize>,
    relations: Subspace,
    relations_in_derived: Subspace,
    relation_commutators: Subspace,
}

impl Presentation {
    pub fn new(l: &LieAlgebra) -> Result<Self> {
        Self::with_options(l, PresentationOptions::default())
    }

    pub fn with_options(l: &LieAlgebra, options: PresentationOptions) -> Result<Self> {
        let class = l.nilpotency_class()?;
        let derived = l.derived_subalgebra();
        let generators = match options.complement {
            ComplementChoice::First => derived.complement_indices(),
            ComplementChoice::Last => derived.complement_indices_reversed(),
        };
        let d = generators.len();
        let free = FreeNilpotent::with_cap(d, class + 1, options.basis_cap)?;
        let basis = free.basis();
        let mut images: Vec<SparseVec> = Vec::with_capacity(free.dim());
        for h in 0..free.dim() {
            let img = match basis.word(h) {
                HallWord::Generator(g) => SparseVec::unit(generators[g]),
                HallWord::Bracket(u, v) => l.bracket_sparse(&images[u], &images[v]),
            };
            images.push(img);
        }

        let n = l.dim();
        let mut span = Subspace::zero(n);
        let mut lift_basis = Vec::with_capacity(n);
        for (h, img) in images.iter().enumerate() {
            if span.insert(img.clone()) {
                lift_basis.push(h);
            }
        }
        assert_eq!(
            lift_basis.len(),
            n,
            "generators modulo L^2 generate a nilpotent algebra"
        );

        let dim_f = free.dim();
        let relations = kernel_of(&images, n, 0, dim_f);
        let relations_in_derived = kernel_of(&images, n, free.derived_start(), dim_f);

        let mut relation_commutators = Subspace::zero(dim_f);
        for r in relations.basis() {
            for g in 0..d {
                relation_commutators.insert(free.algebra().bracket_sparse(r, &SparseVec::unit(g)));
            }
        }

        Ok(Self {
            target: l.clone(),
            options,
            generators,
            class,
            free,
            images,
            lift_basis,
            relations,
            relations_in_derived,
            relation_commutators,
        })
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn options(&self) -> PresentationOptions {
        self.options
    }

    /// 0-based indices of the basis vectors of `L` chosen as generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn free(&self) -> &FreeNilpotent {
        &self.free
    }

    /// `π(f)` in coordinates of `L`.
    pub fn project(&self, f: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (h, c) in f.iter() {
            out.axpy(c, &self.images[h]);
        }
        out
    }

    /// A preimage of `v` under `π`. Elements of `L^2` lift into `F^2`.
    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        let n = self.target.dim();
        let cols: Vec<SparseVec> = self
            .lift_basis
            .iter()
            .map(|&h| self.images[h].clone())
            .collect();
        let y = solve_square(&cols, n, v).expect("lift basis spans L");
        y.reindex(|a| self.lift_basis[a])
    }

    /// `R = ker π`
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// `R ∩ F^2`
    pub fn relations_in_derived(&self) -> &Subspace {
        &self.relations_in_derived
    }

    /// `[R, F]`, spanned by `[r, x_i]` for `r` in a basis of `R` and free
    /// generators `x_i` because `R` is an ideal.
    pub fn relation_commutators(&self) -> &Subspace {
        &self.relation_commutators
    }

    /// `dim (R ∩ F^2) - dim [R, F]`
    pub fn multiplier_dim(&self) -> usize {
        self.relations_in_derived.dim() - self.relation_commutators.dim()
    }
}

/// Kernel of `π` restricted to the Hall elements `start..dim_f`, embedded
/// back into `F`.
fn kernel_of(images: &[SparseVec], n: usize, start: usize, dim_f: usize) -> Subspace {
    let width = dim_f - start;
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for (h, img) in images.iter().enumerate().skip(start) {
        for (k, c) in img.iter() {
            rows[k].push((h - start, c.clone()));
        }
    }
    let equations: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_pairs).collect();
    let kernel = nullspace(&equations, width);
    Subspace::span(dim_f, kernel.basis().map(|v| v.reindex(|i| i + start)))
}

/// `dim M(L)` by the Hopf formula, with the default basis cap.
pub fn hopf_multiplier_dim(l: &LieAlgebra) -> Result<usize> {
    Presentation::new(l).map(|p| p.multiplier_dim())
}

/// Total Hall dimension a presentation of `l` would need, without building it.
pub fn presentation_size(l: &LieAlgebra) -> Result<usize> {
    let class = l.nilpotency_class()?;
    let d = l.abelianization_dim();
    Ok((1..=class + 1)
        .map(|m| crate::hopf::hall::witt_dim(d, m))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integer_algebra;
    use crate::error::Error;

    #[test]
    fn heisenberg_presentation() {
        let p = Presentation::new(&LieAlgebra::heisenberg(1)).unwrap();
        assert_eq!(p.free().dim(), 5);
        assert_eq!(p.relations().dim(), 2);
        assert_eq!(p.relations_in_derived().dim(), 2);
        assert_eq!(p.relation_commutators().dim(), 0);
        assert_eq!(p.multiplier_dim(), 2);
    }

    #[test]
    fn abelian_presentations() {
        let p = Presentation::new(&LieAlgebra::abelian(2)).unwrap();
        assert_eq!(p.free().dim(), 3);
        assert_eq!(p.relations().dim(), 1);
        assert_eq!(hopf_multiplier_dim(&LieAlgebra::abelian(3)).unwrap(), 3);
    }

    #[test]
    fn relations_lie_in_derived_for_minimal_generators() {
        let l = integer_algebra(
            5,
            &[(1, 2, &[(1, 3)]), (1, 3, &[(1, 4)]), (2, 3, &[(1, 5)])],
        )
        .unwrap();
        let p = Presentation::new(&l).unwrap();
        assert_eq!(p.relations(), p.relations_in_derived());
        assert!(p
            .relation_commutators()
            .is_subspace_of(p.relations_in_derived()));
        assert_eq!(p.multiplier_dim(), 3);
    }

    #[test]
    fn lift_is_a_preimage() {
        let l = LieAlgebra::heisenberg(2);
        let p = Presentation::new(&l).unwrap();
        for i in 0..l.dim() {
            let v = SparseVec::unit(i);
            assert_eq!(p.project(&p.lift(&v)), v);
        }
    }

    #[test]
    fn cap_propagates() {
        let opts = PresentationOptions {
            basis_cap: 10,
            ..Default::default()
        };
        let err = Presentation::with_options(&LieAlgebra::heisenberg(2), opts).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }
}
