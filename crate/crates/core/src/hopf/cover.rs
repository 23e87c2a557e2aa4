//! Covers `L* = F / C` and the epicenter `Z*(L)`.
//!
//! `C` contains `[R, F]` and `C / [R, F]` complements
//! `(R ∩ F^2) / [R, F]` in `R / [R, F]`, so `ker(L* → L) = R / C` is
//! isomorphic to `M(L)`, central, and inside `(L*)^2`. The epicenter is the
//! image in `L` of the center of `L*`; `L` is capable exactly when it is 0.

use crate::algebra::{LieAlgebra, Quotient};
use crate::error::Result;
use crate::hopf::presentation::{ComplementChoice, Presentation, PresentationOptions};
use crate::linalg::{nullspace, Scalar, SparseVec, Subspace};

#[derive(Clone, Debug)]
pub struct CoverReport {
    pub cover: LieAlgebra,
    /// Image in `L` of each basis vector of the cover.
    pub projection: Vec<SparseVec>,
    /// `ker(L* → L)` in cover coordinates.
    pub kernel: Subspace,
    pub cover_center: Subspace,
    /// `Z*(L)` as a subspace of `L`.
    pub epicenter: Subspace,
    pub is_capable: bool,
}

impl CoverReport {
    pub fn kernel_is_central(&self) -> bool {
        self.kernel.is_subspace_of(&self.cover_center)
    }

    pub fn kernel_in_derived(&self) -> bool {
        self.kernel.is_subspace_of(&self.cover.derived_subalgebra())
    }
}

pub fn cover_and_epicenter(l: &LieAlgebra) -> Result<CoverReport> {
    cover_with_options(l, PresentationOptions::default())
}

pub fn cover_with_options(l: &LieAlgebra, options: PresentationOptions) -> Result<CoverReport> {
    let p = Presentation::with_options(l, options)?;
    Ok(cover_from_presentation(&p))
}

pub fn cover_from_presentation(p: &Presentation) -> CoverReport {
    let l = p.target();
    let mut complement = p.relation_commutators().clone();
    let mut occupied = p.relations_in_derived().sum(p.relation_commutators());
    let rows: Vec<&SparseVec> = p.relations().basis().collect();
    let ordered: Box<dyn Iterator<Item = &&SparseVec>> = match p.options().complement {
        ComplementChoice::First => Box::new(rows.iter()),
        ComplementChoice::Last => Box::new(rows.iter().rev()),
    };
    for r in ordered {
        if occupied.insert((*r).clone()) {
            complement.insert((*r).clone());
        }
    }

    // `complement` is an ideal: it contains [R, F] and lies in R.
    let q: Quotient = p.free().algebra().quotient_unchecked(&complement);
    let projection: Vec<SparseVec> = q
        .complement
        .iter()
        .map(|&h| p.project(&SparseVec::unit(h)))
        .collect();

    let m = q.algebra.dim();
    let mut equations: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); l.dim()];
    for (a, img) in projection.iter().enumerate() {
        for (k, c) in img.iter() {
            equations[k].push((a, c.clone()));
        }
    }
    let equations: Vec<SparseVec> = equations.into_iter().map(SparseVec::from_pairs).collect();
    let kernel = nullspace(&equations, m);

    let cover_center = q.algebra.center();
    let epicenter = Subspace::span(
        l.dim(),
        cover_center.basis().map(|z| {
            let mut img = SparseVec::new();
            for (a, c) in z.iter() {
                img.axpy(c, &projection[a]);
            }
            img
        }),
    );
    let is_capable = epicenter.is_zero();
    CoverReport {
        cover: q.algebra,
        projection,
        kernel,
        cover_center,
        epicenter,
        is_capable,
    }
}
