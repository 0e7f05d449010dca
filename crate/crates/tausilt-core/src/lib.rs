//! Exact symbolic engine for two-point bound quiver algebras: two-term
//! silting complexes, their mutations and g-vectors, endomorphism algebras
//! in the homotopy category of projectives, and tau-tilting finiteness
//! decisions with explicit certificates.
//!
//! All linear algebra is exact over the rationals. The crate is organized
//! bottom-up: path bases of algebras, projective modules and their Hom
//! spaces, two-term complexes in the homotopy category, irreducible silting
//! mutation, Hasse-quiver exploration, and the classification layer on top.

pub mod algebra;
pub mod cache;
pub mod catalog;
pub mod classify;
pub mod complex;
pub mod endo;
pub mod error;
pub mod export;
pub mod hasse;
pub mod hom;
pub mod iso;
pub mod linalg;
pub mod mutation;
pub mod parse;
pub mod proj;
pub mod quiver;
pub mod scalar;
pub mod scan;

pub use algebra::{compute_basis, AlgebraBasis, AlgebraElement};
pub use classify::{classify, Classification, ClassifyOptions, Verdict};
pub use complex::{BoundedComplex, GVector};
pub use error::{Error, Result};
pub use hasse::{explore_hasse, ExploreOptions, HasseGraph, HasseStatus};
pub use mutation::{left_mutation, right_mutation, SiltingObject};
pub use quiver::{AlgebraPresentation, Path, Quiver, QuotientGen, Relation};
pub use scalar::Rat;
