use std::f64::consts::FRAC_PI_2;

use crate::geom::{self, Point3};
use crate::graph::{build_arc_system, Multigraph};
use crate::zeta::CycleClass;

/// Vertex labels and positions of the octahedron on the unit sphere.
pub const OCTANT_VERTICES: [(&str, Point3); 6] = [
    ("px", [1.0, 0.0, 0.0]),
    ("nx", [-1.0, 0.0, 0.0]),
    ("py", [0.0, 1.0, 0.0]),
    ("ny", [0.0, -1.0, 0.0]),
    ("pz", [0.0, 0.0, 1.0]),
    ("nz", [0.0, 0.0, -1.0]),
];

/// Points per quarter-circle edge polyline.
pub const QUARTER_SAMPLES: usize = 17;

/// Great-circle arc from `a` to `b` (orthogonal unit vectors), `n` points.
pub fn quarter_arc(a: Point3, b: Point3, n: usize) -> Vec<Point3> {
    (0..n)
        .map(|k| {
            let t = FRAC_PI_2 * k as f64 / (n - 1) as f64;
            let (s, c) = t.sin_cos();
            geom::add(geom::scale(a, c), geom::scale(b, s))
        })
        .collect()
}

/// Three orthogonal great circles on the unit sphere: 6 vertices, 12
/// quarter-circle edges and the 8 octant triangles as cycle classes.
///
/// Edge `a-b` joins labels `a` and `b` with `a` listed first in
/// [`OCTANT_VERTICES`]. Faces are listed for sign patterns `(sx, sy, sz)` in
/// the order `+++`, `++-`, ..., `---`, each traversed x -> y -> z.
pub fn octant_graph() -> (Multigraph, Vec<CycleClass>) {
    let mut g = Multigraph::new();
    for (id, p) in OCTANT_VERTICES {
        g.add_vertex(id, Some(p)).expect("fixed labels are valid");
    }
    let mut edge_of = std::collections::HashMap::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if i / 2 == j / 2 {
                continue;
            }
            let (a, b) = (OCTANT_VERTICES[i], OCTANT_VERTICES[j]);
            let e = g
                .add_edge_idx(&format!("{}-{}", a.0, b.0), i, j, Some(quarter_arc(a.1, b.1, QUARTER_SAMPLES)))
                .expect("fixed edges are valid");
            edge_of.insert((i, j), e);
        }
    }
    let arcs = build_arc_system(&g);
    let arc = |from: usize, to: usize| -> usize {
        let (lo, hi) = (from.min(to), from.max(to));
        let e = edge_of[&(lo, hi)];
        if arcs.tail(2 * e) == from {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut faces = Vec::with_capacity(8);
    for sx in 0..2 {
        for sy in 0..2 {
            for sz in 0..2 {
                let (x, y, z) = (sx, 2 + sy, 4 + sz);
                faces.push(CycleClass::from_walk(&[arc(x, y), arc(y, z), arc(z, x)]));
            }
        }
    }
    (g, faces)
}
