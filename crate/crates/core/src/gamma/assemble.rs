use std::collections::{HashMap, HashSet};

use super::contour::{EmbeddedCurve, EPS_CLOSE};
use crate::error::{Error, Result};
use crate::geom::{self, Point3};
use crate::graph::Multigraph;

pub const EPS_VERTEX: f64 = 1e-5;

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }
    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
    fn groups(&mut self) -> Vec<Vec<usize>> {
        let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..self.0.len() {
            let r = self.find(i);
            map.entry(r).or_default().push(i);
        }
        let mut g: Vec<Vec<usize>> = map.into_values().collect();
        g.sort();
        g
    }
}

#[derive(Debug, Clone, Copy)]
struct Contact {
    seg_a: usize,
    s: f64,
    seg_b: usize,
    t: f64,
    d: f64,
    point: Point3,
}

/// Position on a closed curve: segment index plus fraction.
#[derive(Debug, Clone, Copy)]
struct Mark {
    seg: usize,
    frac: f64,
}

fn quantize(p: Point3, eps: f64) -> [i64; 3] {
    p.map(|c| (c / eps).round() as i64)
}

fn cmp_points(a: &Point3, b: &Point3, eps: f64) -> std::cmp::Ordering {
    quantize(*a, eps)
        .cmp(&quantize(*b, eps))
        .then_with(|| a[0].total_cmp(&b[0]))
        .then_with(|| a[1].total_cmp(&b[1]))
        .then_with(|| a[2].total_cmp(&b[2]))
}

fn cyclic_near(a: usize, b: usize, n: usize) -> bool {
    let d = a.abs_diff(b);
    d <= 1 || d + 1 == n
}

/// Segment pairs from different curves closer than `eps`, found through a
/// uniform spatial hash.
fn candidate_pairs(curves: &[EmbeddedCurve], eps: f64) -> Vec<(usize, usize, usize, usize)> {
    let longest =
        curves.iter().flat_map(|c| c.points.windows(2).map(|w| geom::dist(w[0], w[1]))).fold(0.0f64, f64::max);
    let h = longest.max(eps) + eps;
    let mut cells: HashMap<[i64; 3], Vec<(usize, usize)>> = HashMap::new();
    for (ci, c) in curves.iter().enumerate() {
        for (k, w) in c.points.windows(2).enumerate() {
            let lo: [i64; 3] = std::array::from_fn(|d| ((w[0][d].min(w[1][d]) - eps) / h).floor() as i64);
            let hi: [i64; 3] = std::array::from_fn(|d| ((w[0][d].max(w[1][d]) + eps) / h).floor() as i64);
            for x in lo[0]..=hi[0] {
                for y in lo[1]..=hi[1] {
                    for z in lo[2]..=hi[2] {
                        cells.entry([x, y, z]).or_default().push((ci, k));
                    }
                }
            }
        }
    }
    let mut pairs = HashSet::new();
    for list in cells.values() {
        for (i, &(ca, ka)) in list.iter().enumerate() {
            for &(cb, kb) in &list[i + 1..] {
                if ca < cb {
                    pairs.insert((ca, ka, cb, kb));
                } else if cb < ca {
                    pairs.insert((cb, kb, ca, ka));
                }
            }
        }
    }
    let mut v: Vec<_> = pairs.into_iter().collect();
    v.sort_unstable();
    v
}

/// Arc-length position of a mark on a closed curve.
fn arc_position(cum: &[f64], m: Mark) -> f64 {
    cum[m.seg] + m.frac * (cum[m.seg + 1] - cum[m.seg])
}

fn cumulative(c: &EmbeddedCurve) -> Vec<f64> {
    let mut cum = vec![0.0];
    for w in c.points.windows(2) {
        cum.push(cum.last().unwrap() + geom::dist(w[0], w[1]));
    }
    cum
}

/// Spread of arc positions around a reference on a closed curve of length `len`.
fn circular_span(positions: &[f64], reference: f64, len: f64) -> f64 {
    let rel: Vec<f64> = positions.iter().map(|p| (p - reference + 0.5 * len).rem_euclid(len) - 0.5 * len).collect();
    let hi = rel.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = rel.iter().copied().fold(f64::INFINITY, f64::min);
    hi - lo
}

/// Embedded multigraph of a family of closed curves.
///
/// Every maximal run of near-contacts between two curves contributes its
/// closest point; points within `eps_vertex` are merged into one vertex.
/// Each curve is cut at its vertices into edges; a curve with no vertex
/// becomes a self-loop at its first point. Vertex and edge ids are assigned
/// after sorting by coordinates, so the result does not depend on the order
/// of `curves`.
pub fn assemble_gamma(curves: &[EmbeddedCurve], eps_vertex: f64) -> Result<Multigraph> {
    if !(eps_vertex > 0.0) {
        return Err(Error::InvalidArgument("eps_vertex must be positive".into()));
    }
    for c in curves {
        if c.points.len() < 3 {
            return Err(Error::InvalidArgument("curve with fewer than 3 points".into()));
        }
        let gap = c.closure_gap();
        if gap > EPS_CLOSE {
            return Err(Error::NotClosed(gap));
        }
    }
    let cums: Vec<Vec<f64>> = curves.iter().map(cumulative).collect();

    let mut by_pair: HashMap<(usize, usize), Vec<Contact>> = HashMap::new();
    for (ca, ka, cb, kb) in candidate_pairs(curves, eps_vertex) {
        let (p0, p1) = (curves[ca].points[ka], curves[ca].points[ka + 1]);
        let (q0, q1) = (curves[cb].points[kb], curves[cb].points[kb + 1]);
        let (s, t, d) = geom::segment_closest(p0, p1, q0, q1);
        if d <= eps_vertex {
            let point = geom::lerp(geom::lerp(p0, p1, s), geom::lerp(q0, q1, t), 0.5);
            by_pair.entry((ca, cb)).or_default().push(Contact { seg_a: ka, s, seg_b: kb, t, d, point });
        }
    }

    // One representative per run of adjacent contacts.
    struct Hit {
        point: Point3,
        marks: [(usize, Mark); 2],
    }
    let mut hits: Vec<Hit> = Vec::new();
    let mut keys: Vec<_> = by_pair.keys().copied().collect();
    keys.sort_unstable();
    for (ca, cb) in keys {
        let contacts = &by_pair[&(ca, cb)];
        let (na, nb) = (curves[ca].points.len() - 1, curves[cb].points.len() - 1);
        let mut dsu = Dsu::new(contacts.len());
        for i in 0..contacts.len() {
            for j in i + 1..contacts.len() {
                if cyclic_near(contacts[i].seg_a, contacts[j].seg_a, na)
                    && cyclic_near(contacts[i].seg_b, contacts[j].seg_b, nb)
                {
                    dsu.union(i, j);
                }
            }
        }
        for run in dsu.groups() {
            let best = *run
                .iter()
                .min_by(|&&i, &&j| contacts[i].d.total_cmp(&contacts[j].d).then(i.cmp(&j)))
                .expect("non-empty run");
            let rep = contacts[best];
            let ma = Mark { seg: rep.seg_a, frac: rep.s };
            let mb = Mark { seg: rep.seg_b, frac: rep.t };
            for (c, side) in [(ca, 0), (cb, 1)] {
                let cum = &cums[c];
                let len = *cum.last().unwrap();
                let pos: Vec<f64> = run
                    .iter()
                    .map(|&i| {
                        let m = if side == 0 {
                            Mark { seg: contacts[i].seg_a, frac: contacts[i].s }
                        } else {
                            Mark { seg: contacts[i].seg_b, frac: contacts[i].t }
                        };
                        arc_position(cum, m)
                    })
                    .collect();
                let reference = arc_position(cum, if side == 0 { ma } else { mb });
                let span = circular_span(&pos, reference, len);
                if span > 10.0 * eps_vertex {
                    return Err(Error::DegenerateIntersection(span));
                }
            }
            hits.push(Hit { point: rep.point, marks: [(ca, ma), (cb, mb)] });
        }
    }

    // Merge hits into vertex clusters.
    let mut dsu = Dsu::new(hits.len());
    for i in 0..hits.len() {
        for j in i + 1..hits.len() {
            if geom::dist(hits[i].point, hits[j].point) <= eps_vertex {
                dsu.union(i, j);
            }
        }
    }
    struct Proto {
        coords: Point3,
        marks: Vec<(usize, Mark)>,
    }
    let mut protos: Vec<Proto> = dsu
        .groups()
        .into_iter()
        .map(|g| {
            let mut pts: Vec<Point3> = g.iter().map(|&i| hits[i].point).collect();
            pts.sort_by(|a, b| cmp_points(a, b, eps_vertex));
            let n = pts.len() as f64;
            let coords = pts.iter().fold([0.0; 3], |acc, p| geom::add(acc, *p)).map(|c| c / n);
            let marks = g.iter().flat_map(|&i| hits[i].marks).collect();
            Proto { coords, marks }
        })
        .collect();
    // Curves without any vertex get one at their first point.
    let touched: HashSet<usize> = protos.iter().flat_map(|p| p.marks.iter().map(|m| m.0)).collect();
    for (c, curve) in curves.iter().enumerate() {
        if !touched.contains(&c) {
            protos.push(Proto { coords: curve.points[0], marks: vec![(c, Mark { seg: 0, frac: 0.0 })] });
        }
    }
    protos.sort_by(|a, b| cmp_points(&a.coords, &b.coords, eps_vertex));

    let mut g = Multigraph::new();
    for (k, p) in protos.iter().enumerate() {
        g.add_vertex(&format!("v{k}"), Some(p.coords))?;
    }

    // Per-curve vertex marks, one per visit.
    let mut per_curve: Vec<Vec<(f64, Mark, usize)>> = vec![Vec::new(); curves.len()];
    for (v, p) in protos.iter().enumerate() {
        for &(c, m) in &p.marks {
            per_curve[c].push((arc_position(&cums[c], m), m, v));
        }
    }
    let mut edges: Vec<(usize, usize, Vec<Point3>)> = Vec::new();
    for (c, marks) in per_curve.iter_mut().enumerate() {
        let len = *cums[c].last().unwrap();
        marks.sort_by(|a, b| a.2.cmp(&b.2).then(a.0.total_cmp(&b.0)));
        // drop repeated marks of the same vertex at the same place
        let mut kept: Vec<(f64, Mark, usize)> = Vec::new();
        for m in marks.iter() {
            let dup = kept.iter().any(|k| k.2 == m.2 && circular_span(&[k.0, m.0], k.0, len) <= 10.0 * eps_vertex);
            if !dup {
                kept.push(*m);
            }
        }
        edges.extend(split_curve(&curves[c], &kept, &protos.iter().map(|p| p.coords).collect::<Vec<_>>()));
    }

    // Canonical orientation and order.
    for (a, b, poly) in edges.iter_mut() {
        let flip = if a != b { a > b } else { cmp_points(&poly[1], &poly[poly.len() - 2], eps_vertex).is_gt() };
        if flip {
            std::mem::swap(a, b);
            poly.reverse();
        }
    }
    edges.sort_by(|x, y| {
        (x.0, x.1)
            .cmp(&(y.0, y.1))
            .then_with(|| cmp_points(&x.2[1], &y.2[1], eps_vertex))
            .then_with(|| x.2.len().cmp(&y.2.len()))
    });
    for (k, (a, b, poly)) in edges.into_iter().enumerate() {
        g.add_edge_idx(&format!("e{k}"), a, b, Some(poly))?;
    }
    Ok(g)
}

/// Cut a closed curve at its vertex marks.
fn split_curve(
    curve: &EmbeddedCurve,
    marks: &[(f64, Mark, usize)],
    coords: &[Point3],
) -> Vec<(usize, usize, Vec<Point3>)> {
    const SNAP: f64 = 1e-9;
    let n = curve.points.len() - 1;
    // Cyclic list of (point, vertex) entries.
    let mut snapped: HashMap<usize, usize> = HashMap::new();
    let mut inner: HashMap<usize, Vec<(f64, usize)>> = HashMap::new();
    for &(_, m, v) in marks {
        if m.frac <= SNAP {
            snapped.insert(m.seg % n, v);
        } else if m.frac >= 1.0 - SNAP {
            snapped.insert((m.seg + 1) % n, v);
        } else {
            inner.entry(m.seg).or_default().push((m.frac, v));
        }
    }
    let mut entries: Vec<(Point3, Option<usize>)> = Vec::new();
    for k in 0..n {
        match snapped.get(&k) {
            Some(&v) => entries.push((coords[v], Some(v))),
            None => entries.push((curve.points[k], None)),
        }
        if let Some(list) = inner.get_mut(&k) {
            list.sort_by(|a, b| a.0.total_cmp(&b.0));
            entries.extend(list.iter().map(|&(_, v)| (coords[v], Some(v))));
        }
    }
    let stops: Vec<usize> = (0..entries.len()).filter(|&i| entries[i].1.is_some()).collect();
    let m = entries.len();
    let mut out = Vec::new();
    for (i, &s) in stops.iter().enumerate() {
        let e = stops[(i + 1) % stops.len()];
        let steps = if e > s { e - s } else { e + m - s };
        let poly: Vec<Point3> = (0..=steps).map(|d| entries[(s + d) % m].0).collect();
        out.push((entries[s].1.unwrap(), entries[e].1.unwrap(), poly));
    }
    out
}

/// Drop curves that retrace an earlier curve in the same plane.
///
/// Two curves coincide when every point of each lies within `tol` of the
/// other's polyline. The survivor's `leaf` lists all merged sources joined
/// by `+`.
pub fn merge_coincident(curves: Vec<EmbeddedCurve>, tol: f64) -> Vec<EmbeddedCurve> {
    let mut out: Vec<EmbeddedCurve> = Vec::new();
    'next: for c in curves {
        for kept in out.iter_mut() {
            if kept.plane == c.plane && within(&c, kept, tol) && within(kept, &c, tol) {
                kept.leaf = format!("{}+{}", kept.leaf, c.leaf);
                continue 'next;
            }
        }
        out.push(c);
    }
    out
}

fn within(a: &EmbeddedCurve, b: &EmbeddedCurve, tol: f64) -> bool {
    a.points.iter().all(|p| b.points.windows(2).any(|w| geom::segment_closest(*p, *p, w[0], w[1]).2 <= tol))
}
