//! Sign holonomy of graph cycles and parallel transport on the unit sphere.

mod duality;
mod sign;
mod sphere;

pub use duality::{duality_report, DualityReport};
pub use sign::{classify_paths, cycle_holonomy_sign, total_holonomy, SignHolonomy, Species};
pub use sphere::{
    compose_holonomy, holonomy_fixed_points, octant_holonomies, octant_loops, sphere_parallel_transport,
    transport_steps, wrap_angle, FixedSubspace, GeodesicArc, HolonomyElement, CLOSURE_TOL, FIXED_TOL, TANGENT_TOL,
};

use crate::numfmt::fixed;
use crate::zeta::CycleClass;

/// `holonomy v1` lines for a list of graph cycle classes.
pub fn format_cycle_report(classes: &[CycleClass]) -> Vec<String> {
    let mut out: Vec<String> = classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let s = cycle_holonomy_sign(c);
            format!("cycle c{k} {} {:+} {}", c.length, s.sign, s.species)
        })
        .collect();
    out.push(format!("total {}", total_holonomy(classes)));
    out
}

/// `holonomy v1` lines for transported loops and their common fixed space.
pub fn format_transport_report(elements: &[HolonomyElement]) -> crate::Result<Vec<String>> {
    let mut out: Vec<String> = elements
        .iter()
        .map(|h| format!("transport {} {} {:+}", h.loop_id, fixed(h.angle, 12), h.orientation()))
        .collect();
    out.push(format!("fixed_dim {}", holonomy_fixed_points(elements)?.dim));
    Ok(out)
}
