//! Intersection multigraph of the interface leaves with the cube mid-planes.

mod assemble;
mod contour;
mod format;
mod octant;
mod surface;

pub use assemble::{assemble_gamma, merge_coincident, EPS_VERTEX};
pub use contour::{
    extract_level_curves, extract_plane_curves, refine_junctions, EmbeddedCurve, DEFAULT_GRID, EPS_CLOSE, MID_PLANE,
};
pub use format::{format_curves, parse_curves, CURVES_HEADER};
pub use octant::{octant_graph, quarter_arc, OCTANT_VERTICES, QUARTER_SAMPLES};
pub use surface::{
    build_leaf_surface, normal_frame, sphere_surface, LeafSurface, RadialProfile, DIAGONALS, PROFILE_SAMPLES,
};

use crate::error::Result;
use crate::graph::Multigraph;

/// Curves that retrace each other within this distance are merged.
pub const COINCIDENCE_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct CurveCount {
    pub leaf: String,
    pub plane: usize,
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct GammaBuild {
    /// Curves found per (leaf, plane) before merging.
    pub raw_counts: Vec<CurveCount>,
    /// Distinct curves after merging coincident ones.
    pub curves: Vec<EmbeddedCurve>,
    pub graph: Multigraph,
}

/// Full pipeline: four leaves at parameter `b`, three mid-planes, junction
/// refinement, merging of coincident curves, assembly.
pub fn build_gamma(b: f64, grid: usize, eps_vertex: f64) -> Result<GammaBuild> {
    let mut raw_counts = Vec::new();
    let mut all = Vec::new();
    for d in 0..DIAGONALS.len() {
        let s = build_leaf_surface(b, d)?;
        let mut curves = Vec::new();
        for plane in 1..=3 {
            let cs = extract_level_curves(&s, plane, MID_PLANE, 1e-12, grid)?;
            raw_counts.push(CurveCount { leaf: s.id.clone(), plane, count: cs.len() });
            curves.extend(cs);
        }
        refine_junctions(&s, &mut curves)?;
        all.extend(curves);
    }
    let curves = merge_coincident(all, COINCIDENCE_TOL);
    let graph = assemble_gamma(&curves, eps_vertex)?;
    Ok(GammaBuild { raw_counts, curves, graph })
}
