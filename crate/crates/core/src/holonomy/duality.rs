use super::sphere::{holonomy_fixed_points, HolonomyElement};
use crate::error::Result;
use crate::graph::Multigraph;
use crate::numfmt::fixed;
use crate::zeta::{zeta_poles, zeta_reciprocal, Pole};

/// Side-by-side listing of holonomy fixed spaces and zeta poles.
///
/// Exploratory output only: nothing in it asserts a correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct DualityReport {
    pub generator_dims: Vec<(String, usize)>,
    pub common_dim: usize,
    pub poles: Vec<Pole>,
    pub pairing_notes: Vec<String>,
}

impl DualityReport {
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.generator_dims.iter().map(|(id, d)| format!("generator {id} fixed_dim {d}")).collect();
        out.push(format!("fixed_dim {}", self.common_dim));
        out.extend(crate::zeta::format_poles(&self.poles));
        out.extend(self.pairing_notes.iter().cloned());
        out
    }
}

pub fn duality_report(g: &Multigraph, elements: &[HolonomyElement], tol: f64) -> Result<DualityReport> {
    let poles = zeta_poles(&zeta_reciprocal(g)?, tol)?;
    let generator_dims = elements
        .iter()
        .map(|e| Ok((e.loop_id.clone(), holonomy_fixed_points(std::slice::from_ref(e))?.dim)))
        .collect::<Result<Vec<_>>>()?;
    let common_dim = holonomy_fixed_points(elements)?.dim;
    let rows = generator_dims.len().max(poles.len());
    let pairing_notes = (0..rows)
        .map(|i| {
            let left = generator_dims.get(i).map_or("- -".to_string(), |(id, d)| format!("{id} {d}"));
            let right =
                poles.get(i).map_or("- -".to_string(), |p| format!("{} {}", fixed(p.root.norm(), 12), p.multiplicity));
            format!("row {i} {left} {right}")
        })
        .collect();
    Ok(DualityReport { generator_dims, common_dim, poles, pairing_notes })
}
