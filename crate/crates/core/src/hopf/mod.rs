//! Free nilpotent Lie algebras, free presentations, covers and the Ganea
//! map. This is the independent route to `M(L)`: it computes
//! `(R ∩ F^2) / [R, F]` directly instead of going through cohomology.

pub mod cover;
pub mod ganea;
pub mod hall;
pub mod presentation;

pub use cover::{cover_and_epicenter, cover_with_options, CoverReport};
pub use ganea::{ganea_data, GaneaData};
pub use hall::{witt_dim, FreeNilpotent, HallBasis, HallWord, DEFAULT_BASIS_CAP};
pub use presentation::{
    hopf_multiplier_dim, presentation_size, ComplementChoice, Presentation, PresentationOptions,
};
