//! Computational lab for the Γ-set of the interface construction.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] – embedded multigraphs, the `gamma-graph v1` text format and
//!   the non-backtracking arc system.
//! * [`zeta`] – the Ihara zeta function computed by cycle enumeration, by
//!   walk counting, and by the exact arc determinant, plus its poles.
//! * [`leaf`] – the constant-curvature surface of revolution spanning a cube
//!   diagonal (arc-length solve, volume, profile samples).
//! * [`gamma`] – leaf surfaces, plane sections by contour tracing and the
//!   assembly of the embedded Γ multigraph.
//! * [`delta`] – slice/twist/re-glue surgery on embedded graphs.
//! * [`holonomy`] – spinor sign character of graph cycles and parallel
//!   transport on the unit sphere.
//! * [`strata`] – integer chain complexes, Smith normal form and twisted
//!   cohomology of stratified complexes.

// Dense matrix kernels read more clearly with explicit indices, and `!(x > 0.0)`
// is used on purpose so that NaN fails validation.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod delta;
pub mod error;
pub mod exact;
pub mod gamma;
pub mod geom;
pub mod graph;
pub mod holonomy;
pub mod leaf;
pub mod numeric;
pub mod numfmt;
pub mod strata;
pub mod zeta;

pub use error::{Error, Result};
pub use geom::Point3;
pub use graph::{ArcSystem, Multigraph, ValidationReport};
pub use holonomy::{HolonomyElement, SignHolonomy, Species};
pub use leaf::{LeafProfile, MomentumProfile};
pub use zeta::{CycleClass, ZetaReciprocal, ZetaSeries};

/// Version string written into every report header.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
