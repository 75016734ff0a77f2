//! Shared inputs for the benchmarks under `benches/`.

use gamma_zeta_core::graph::fixtures;
use gamma_zeta_core::Multigraph;

/// Named graphs of increasing arc count.
pub fn zeta_inputs() -> Vec<(&'static str, Multigraph)> {
    let mut dense = fixtures::complete(8);
    for i in 0..5 {
        dense.add_edge_idx(&format!("x{i}"), i, i + 1, None).expect("fresh id");
    }
    vec![
        ("triangle", fixtures::cycle(3)),
        ("k4", fixtures::complete(4)),
        ("bouquet3", fixtures::bouquet(3)),
        ("k6", fixtures::complete(6)),
        ("k8_plus5", dense),
    ]
}
