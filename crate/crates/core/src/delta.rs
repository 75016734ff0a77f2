//! Slice, quarter-turn and re-glue surgery on embedded graphs.
//!
//! The plane `x_j = 1/2` splits the graph. Everything on the `x_j > 1/2`
//! side is rotated by a multiple of 90 degrees about the line through the
//! cube centre normal to the plane, and the cut edge ends are glued back to
//! the fixed side wherever the rotated ends land on fixed ends.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{self, Point3};
use crate::graph::Multigraph;
use crate::zeta::zeta_reciprocal;

pub const EPS_GLUE: f64 = 1e-5;
const CENTRE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaSpec {
    /// Coordinate index 1..=3 of the cutting plane.
    pub plane: usize,
    /// Degrees; one of 0, 90, 180, 270.
    pub angle: u32,
    pub eps_glue: f64,
}

impl DeltaSpec {
    pub fn new(plane: usize, angle: u32, eps_glue: f64) -> Result<Self> {
        if !(1..=3).contains(&plane) {
            return Err(Error::InvalidArgument(format!("plane index {plane} not in 1..=3")));
        }
        if !angle.is_multiple_of(90) || angle >= 360 {
            return Err(Error::InvalidArgument(format!("angle {angle} not in {{0, 90, 180, 270}}")));
        }
        if !(eps_glue > 0.0) {
            return Err(Error::InvalidArgument("eps_glue must be positive".into()));
        }
        Ok(Self { plane, angle, eps_glue })
    }

    /// The quarter-turn rotation applied `angle / 90` times.
    pub fn rotate(&self, p: Point3) -> Point3 {
        let j = self.plane - 1;
        let (a, b) = ((j + 1) % 3, (j + 2) % 3);
        let mut q = p.map(|c| c - CENTRE);
        for _ in 0..self.angle / 90 {
            let (u, v) = (q[a], q[b]);
            q[a] = -v;
            q[b] = u;
        }
        q.map(|c| c + CENTRE)
    }

    fn side(&self, p: Point3) -> f64 {
        p[self.plane - 1] - CENTRE
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GluingReport {
    pub cut_points: usize,
    pub matched: usize,
    pub max_mismatch: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Vertex(usize),
    Cut(usize),
}

#[derive(Debug, Clone)]
struct Piece {
    edge: usize,
    moved: bool,
    /// Interior polyline points (vertices and crossing points excluded).
    points: Vec<Point3>,
    ends: [End; 2],
}

/// Apply the surgery described by `spec` to the embedded graph `g`.
///
/// Vertex ids and order are kept. Each output edge is a chain of edge
/// pieces and takes the id of the lowest-indexed original edge among its
/// fixed-side pieces (any piece if none is fixed); clashing ids get a `~k`
/// suffix. Polylines are absent on output edges that are straight segments
/// built from polyline-free input.
pub fn apply_delta(g: &Multigraph, spec: &DeltaSpec) -> Result<(Multigraph, GluingReport)> {
    if !g.is_embedded() && g.vertex_count() > 0 {
        return Err(Error::MissingEmbedding);
    }
    let eps = spec.eps_glue;
    let coords: Vec<Point3> = (0..g.vertex_count()).map(|v| g.coords(v)).collect::<Result<_>>()?;
    for (v, p) in coords.iter().enumerate() {
        if spec.side(*p).abs() <= eps {
            return Err(Error::NonTransverse(format!("vertex {} lies on the cutting plane", g.vertices()[v].id)));
        }
    }

    // Cut every edge path at its plane crossings.
    let mut pieces: Vec<Piece> = Vec::new();
    let mut cut_pos: Vec<Point3> = Vec::new();
    // cut id -> (piece on the fixed side, piece on the moved side)
    let mut cut_owner: Vec<[usize; 2]> = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let path = g.edge_path(e)?;
        for p in &path[1..path.len() - 1] {
            if spec.side(*p).abs() <= eps {
                return Err(Error::NonTransverse(format!("edge {} touches the cutting plane", edge.id)));
            }
        }
        let mut start = End::Vertex(edge.endpoints.0);
        let mut current: Vec<Point3> = Vec::new();
        for (i, w) in path.windows(2).enumerate() {
            let (s0, s1) = (spec.side(w[0]), spec.side(w[1]));
            if i > 0 {
                current.push(w[0]);
            }
            if (s0 > 0.0) != (s1 > 0.0) {
                let cut = cut_pos.len();
                cut_pos.push(geom::lerp(w[0], w[1], s0 / (s0 - s1)));
                let idx = pieces.len();
                pieces.push(Piece {
                    edge: e,
                    moved: s0 > 0.0,
                    points: std::mem::take(&mut current),
                    ends: [start, End::Cut(cut)],
                });
                cut_owner.push(if s0 > 0.0 { [idx + 1, idx] } else { [idx, idx + 1] });
                start = End::Cut(cut);
            }
        }
        let last = path[path.len() - 1];
        pieces.push(Piece {
            edge: e,
            moved: spec.side(last) > 0.0,
            points: current,
            ends: [start, End::Vertex(edge.endpoints.1)],
        });
    }
    for piece in pieces.iter_mut().filter(|p| p.moved) {
        for p in piece.points.iter_mut() {
            *p = spec.rotate(*p);
        }
    }

    // Match rotated cut ends to fixed cut ends, nearest first.
    let n_cuts = cut_pos.len();
    let moved_pos: Vec<Point3> = cut_pos.iter().map(|p| spec.rotate(*p)).collect();
    let mut cands: Vec<(f64, usize, usize)> = Vec::new();
    let mut nearest = vec![f64::INFINITY; n_cuts];
    for (m, mp) in moved_pos.iter().enumerate() {
        for (f, fp) in cut_pos.iter().enumerate() {
            let d = geom::dist(*mp, *fp);
            nearest[m] = nearest[m].min(d);
            if d <= eps {
                cands.push((d, m, f));
            }
        }
    }
    cands.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut partner_of_moved = vec![usize::MAX; n_cuts];
    let mut fixed_taken = vec![false; n_cuts];
    let mut max_mismatch: f64 = 0.0;
    let mut matched = 0;
    for (d, m, f) in cands {
        if partner_of_moved[m] == usize::MAX && !fixed_taken[f] {
            partner_of_moved[m] = f;
            fixed_taken[f] = true;
            max_mismatch = max_mismatch.max(d);
            matched += 1;
        }
    }
    if matched < n_cuts {
        let worst = nearest.iter().copied().fold(max_mismatch, f64::max);
        return Err(Error::GluingMismatch { cut_points: n_cuts, matched, max_mismatch: worst });
    }
    let report = GluingReport { cut_points: n_cuts, matched, max_mismatch };

    // Piece adjacency through glued cuts: moved piece at cut m meets the
    // fixed piece at cut partner(m).
    let mut across: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for m in 0..n_cuts {
        let f = partner_of_moved[m];
        let pm = cut_owner[m][1];
        let pf = cut_owner[f][0];
        across.insert((pm, m), (pf, f));
        across.insert((pf, f), (pm, m));
    }

    let mut out = Multigraph::new();
    for (v, vert) in g.vertices().iter().enumerate() {
        let p = coords[v];
        let p = if spec.side(p) > 0.0 { spec.rotate(p) } else { p };
        out.add_vertex(&vert.id, Some(p))?;
    }
    let had_polyline = |e: usize| g.edges()[e].polyline.is_some();

    let mut visited = vec![false; pieces.len()];
    struct Chain {
        key: usize,
        a: usize,
        b: usize,
        poly: Vec<Point3>,
        polyline: bool,
    }
    let mut chains: Vec<Chain> = Vec::new();
    for start in 0..pieces.len() {
        if visited[start] {
            continue;
        }
        let entry = match pieces[start].ends {
            [End::Vertex(_), _] => 0,
            [_, End::Vertex(_)] => 1,
            _ => continue,
        };
        let End::Vertex(a) = pieces[start].ends[entry] else { unreachable!() };
        let mut poly = vec![out.coords(a)?];
        let (mut k, mut from_end) = (start, entry);
        let mut fixed_edges = Vec::new();
        let mut all_edges = Vec::new();
        let mut polyline = false;
        let b = loop {
            visited[k] = true;
            let piece = &pieces[k];
            all_edges.push(piece.edge);
            if !piece.moved {
                fixed_edges.push(piece.edge);
            }
            polyline |= had_polyline(piece.edge);
            if from_end == 0 {
                poly.extend(piece.points.iter().copied());
            } else {
                poly.extend(piece.points.iter().rev().copied());
            }
            match piece.ends[1 - from_end] {
                End::Vertex(b) => break b,
                End::Cut(c) => {
                    let (next, nc) = across[&(k, c)];
                    from_end = if pieces[next].ends[0] == End::Cut(nc) { 0 } else { 1 };
                    k = next;
                }
            }
        };
        visited[k] = true;
        poly.push(out.coords(b)?);
        let key = fixed_edges.iter().min().or(all_edges.iter().min()).copied().unwrap_or(0);
        chains.push(Chain { key, a, b, poly, polyline });
    }
    if visited.iter().any(|v| !v) {
        return Err(Error::DetachedLoop);
    }
    chains.sort_by_key(|c| c.key);
    let mut used: HashMap<String, usize> = HashMap::new();
    for c in chains {
        let base = g.edges()[c.key].id.clone();
        let n = used.entry(base.clone()).or_insert(0);
        let id = if *n == 0 { base.clone() } else { format!("{base}~{n}") };
        *n += 1;
        let poly = if c.poly.len() == 2 && !c.polyline { None } else { Some(c.poly) };
        out.add_edge_idx(&id, c.a, c.b, poly)?;
    }
    Ok((out, report))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZetaInvarianceReport {
    pub equal: bool,
    /// Lowest degree whose coefficients differ.
    pub first_difference: Option<usize>,
    pub left: Vec<i128>,
    pub right: Vec<i128>,
}

impl ZetaInvarianceReport {
    pub fn lines(&self) -> Vec<String> {
        let mut v = vec![format!("equal {}", self.equal)];
        if let Some(k) = self.first_difference {
            v.push(format!("first_difference {k}"));
        }
        v.push(crate::zeta::format_poly(&self.left));
        v.push(crate::zeta::format_poly(&self.right));
        v
    }
}

/// Compare `1/Z(u)` of two graphs coefficient by coefficient.
pub fn check_zeta_invariance(g: &Multigraph, h: &Multigraph) -> Result<ZetaInvarianceReport> {
    let left = zeta_reciprocal(g)?.poly;
    let right = zeta_reciprocal(h)?.poly;
    let n = left.len().max(right.len());
    let at = |p: &[i128], k: usize| p.get(k).copied().unwrap_or(0);
    let first_difference = (0..n).find(|&k| at(&left, k) != at(&right, k));
    Ok(ZetaInvarianceReport { equal: first_difference.is_none(), first_difference, left, right })
}

/// Octahedron on a sphere of radius `r` whose centre sits at distance
/// `shift` from the cube centre along the normal of `plane`. Three
/// orthogonal great circles give 6 vertices and 12 quarter-arc edges.
///
/// With `0 < shift < r` the equatorial ring lies off the cutting plane on
/// the moved side and four edges cross the plane with quarter-turn symmetry.
pub fn shifted_octahedron(plane: usize, r: f64, shift: f64, samples: usize) -> Result<Multigraph> {
    if !(1..=3).contains(&plane) {
        return Err(Error::InvalidArgument(format!("plane index {plane} not in 1..=3")));
    }
    let mut centre = [CENTRE; 3];
    centre[plane - 1] += shift;
    let mut g = Multigraph::new();
    let labels = ["px", "nx", "py", "ny", "pz", "nz"];
    let dirs: Vec<Point3> = (0..6)
        .map(|i| {
            let mut d = [0.0; 3];
            d[i / 2] = if i % 2 == 0 { 1.0 } else { -1.0 };
            d
        })
        .collect();
    for (i, l) in labels.iter().enumerate() {
        g.add_vertex(l, Some(geom::add(centre, geom::scale(dirs[i], r))))?;
    }
    for i in 0..6 {
        for j in i + 1..6 {
            if i / 2 == j / 2 {
                continue;
            }
            let poly = crate::gamma::quarter_arc(dirs[i], dirs[j], samples)
                .into_iter()
                .map(|d| geom::add(centre, geom::scale(d, r)))
                .collect();
            g.add_edge_idx(&format!("{}-{}", labels[i], labels[j]), i, j, Some(poly))?;
        }
    }
    Ok(g)
}
