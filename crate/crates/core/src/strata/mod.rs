//! Stratified cell complexes: per-stratum integer chain complexes, gluing of
//! cells across strata, and a permutation of strata with chain maps.

mod cohomology;
mod complex;
mod format;
mod twist;

pub use cohomology::{cochain_cohomology, cohomology_glued, cohomology_stratum, CohomologyGroup, Ring};
pub use complex::{CellRef, StratifiedComplex, StratumComplex};
pub use format::{parse_strata, serialize_strata, STRATA_HEADER};
pub use twist::{apply_twist, invariant_classes, twisted_cohomology, unimodular_inverse};
