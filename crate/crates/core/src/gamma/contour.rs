use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use super::surface::LeafSurface;
use crate::error::{Error, Result};
use crate::geom::{self, Point3};

pub const DEFAULT_GRID: usize = 512;
pub const EPS_CLOSE: f64 = 1e-6;
pub const MID_PLANE: f64 = 0.5;

/// Closed polyline lying in the plane `x_plane = const`.
///
/// `points` repeats its first point at the end. `params` holds the surface
/// parameters `(x, t)` of each point when the curve came from a surface.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedCurve {
    pub plane: usize,
    pub leaf: String,
    pub points: Vec<Point3>,
    pub params: Vec<(f64, f64)>,
}

impl EmbeddedCurve {
    pub fn closure_gap(&self) -> f64 {
        match (self.points.first(), self.points.last()) {
            (Some(a), Some(b)) => geom::dist(*a, *b),
            _ => f64::INFINITY,
        }
    }

    pub fn length(&self) -> f64 {
        self.points.windows(2).map(|w| geom::dist(w[0], w[1])).sum()
    }
}

fn check_plane(plane: usize) -> Result<()> {
    if (1..=3).contains(&plane) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("plane index {plane} not in 1..=3")))
    }
}

/// Curves where the surface meets the mid-plane `x_plane = 1/2`.
pub fn extract_plane_curves(s: &LeafSurface, plane: usize, eps: f64) -> Result<Vec<EmbeddedCurve>> {
    extract_level_curves(s, plane, MID_PLANE, eps, DEFAULT_GRID)
}

/// Marching squares on a `grid x grid` lattice over `[0, x_max] x [0, 2 pi)`
/// with periodic `t`, followed by bisection of every crossing to `|f| <= eps`.
pub fn extract_level_curves(
    s: &LeafSurface,
    plane: usize,
    level: f64,
    eps: f64,
    grid: usize,
) -> Result<Vec<EmbeddedCurve>> {
    check_plane(plane)?;
    if !(eps > 0.0) || grid < 4 {
        return Err(Error::InvalidArgument("need eps > 0 and grid >= 4".into()));
    }
    let c = plane - 1;
    let f = |x: f64, t: f64| s.sample(x, t)[c] - level;
    let (nx, nt) = (grid, grid);
    let xs: Vec<f64> = (0..nx).map(|i| s.x_max() * i as f64 / (nx - 1) as f64).collect();
    let ts: Vec<f64> = (0..nt).map(|j| TAU * j as f64 / nt as f64).collect();
    let vals: Vec<f64> = (0..nx).flat_map(|i| ts.iter().map(move |&t| (i, t))).map(|(i, t)| f(xs[i], t)).collect();
    let val = |i: usize, j: usize| vals[i * nt + j % nt];
    let pos = |v: f64| v >= 0.0;

    // Edge ids: 2*(i*nt+j) runs along x from node (i,j); +1 runs along t.
    let xedge = |i: usize, j: usize| 2 * (i * nt + j % nt);
    let tedge = |i: usize, j: usize| 2 * (i * nt + j % nt) + 1;

    let mut segments: Vec<(usize, usize)> = Vec::new();
    for i in 0..nx - 1 {
        for j in 0..nt {
            let v = [val(i, j), val(i + 1, j), val(i + 1, j + 1), val(i, j + 1)];
            let sg = v.map(pos);
            let e = [xedge(i, j), tedge(i + 1, j), xedge(i, j + 1), tedge(i, j)];
            let cut: Vec<usize> = (0..4).filter(|&k| sg[k] != sg[(k + 1) % 4]).collect();
            match cut.len() {
                0 => {}
                2 => segments.push((e[cut[0]], e[cut[1]])),
                4 => {
                    let centre = 0.25 * v.iter().sum::<f64>();
                    if pos(centre) == sg[0] {
                        segments.push((e[0], e[1]));
                        segments.push((e[2], e[3]));
                    } else {
                        segments.push((e[3], e[0]));
                        segments.push((e[1], e[2]));
                    }
                }
                _ => unreachable!("a square has an even number of sign changes"),
            }
        }
    }

    let mut at_edge: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, &(a, b)) in segments.iter().enumerate() {
        at_edge.entry(a).or_default().push(k);
        at_edge.entry(b).or_default().push(k);
    }

    let crossing = |edge: usize| -> Result<(f64, f64)> {
        let node = edge / 2;
        let (i, j) = (node / nt, node % nt);
        let (p0, p1) = if edge.is_multiple_of(2) {
            ((xs[i], ts[j]), (xs[i + 1], ts[j]))
        } else {
            ((xs[i], ts[j]), (xs[i], ts[j] + TAU / nt as f64))
        };
        let (x, t) = bisect(&f, p0, p1, eps)?;
        Ok((x, LeafSurface::wrap(t)))
    };

    let mut used = vec![false; segments.len()];
    let mut curves = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let first_edge = segments[start].0;
        let mut chain = vec![first_edge];
        let mut seg = start;
        let mut edge = segments[start].1;
        while edge != first_edge {
            chain.push(edge);
            let next = at_edge[&edge].iter().copied().find(|&k| k != seg && !used[k]);
            let Some(next) = next else {
                return Err(Error::OpenContour);
            };
            used[next] = true;
            let (a, b) = segments[next];
            edge = if a == edge { b } else { a };
            seg = next;
        }
        let mut params = chain.iter().map(|&e| crossing(e)).collect::<Result<Vec<_>>>()?;
        params.push(params[0]);
        let points = params.iter().map(|&(x, t)| s.sample(x, t)).collect();
        curves.push(EmbeddedCurve { plane, leaf: s.id.clone(), points, params });
    }
    Ok(curves)
}

fn bisect<F: Fn(f64, f64) -> f64>(f: &F, p0: (f64, f64), p1: (f64, f64), eps: f64) -> Result<(f64, f64)> {
    let at = |s: f64| (p0.0 + s * (p1.0 - p0.0), p0.1 + s * (p1.1 - p0.1));
    let g = |s: f64| {
        let (x, t) = at(s);
        f(x, t)
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let lo_pos = g(lo) >= 0.0;
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (g(mid) >= 0.0) == lo_pos {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = if g(lo).abs() <= g(hi).abs() { lo } else { hi };
    let r = g(s).abs();
    if r > eps {
        return Err(Error::ConvergenceFailure(format!("contour residual {r:e} exceeds {eps:e}")));
    }
    Ok(at(s))
}

/// Insert the exact points where a curve on `s` meets the other mid-planes.
///
/// For a curve in plane `j`, every polyline segment along which `x_k - 1/2`
/// changes sign (`k != j`) gets a new point solving `P_j = P_k = 1/2` by
/// Newton's method in the surface parameters. Curves of the same surface in
/// different planes then share those points exactly.
pub fn refine_junctions(s: &LeafSurface, curves: &mut [EmbeddedCurve]) -> Result<()> {
    for curve in curves.iter_mut().filter(|c| c.leaf == s.id) {
        if curve.params.len() != curve.points.len() {
            return Err(Error::InvalidArgument("curve lacks surface parameters".into()));
        }
        let j = curve.plane - 1;
        let mut inserts: Vec<(usize, Point3, (f64, f64))> = Vec::new();
        for k in (0..3).filter(|&k| k != j) {
            for i in 0..curve.points.len() - 1 {
                let g0 = curve.points[i][k] - MID_PLANE;
                let g1 = curve.points[i + 1][k] - MID_PLANE;
                if (g0 >= 0.0) == (g1 >= 0.0) {
                    continue;
                }
                let (x0, t0) = curve.params[i];
                let (x1, t1) = curve.params[i + 1];
                let dt = (t1 - t0 + PI).rem_euclid(TAU) - PI;
                let w = g0 / (g0 - g1);
                let guess = (x0 + w * (x1 - x0), t0 + w * dt);
                let (x, t) = newton_junction(s, j, k, guess)?;
                inserts.push((i + 1, s.sample(x, t), (x, LeafSurface::wrap(t))));
            }
        }
        inserts.sort_by_key(|ins| std::cmp::Reverse(ins.0));
        for (at, p, prm) in inserts {
            curve.points.insert(at, p);
            curve.params.insert(at, prm);
        }
    }
    Ok(())
}

fn newton_junction(s: &LeafSurface, j: usize, k: usize, guess: (f64, f64)) -> Result<(f64, f64)> {
    let (mut x, mut t) = guess;
    for _ in 0..50 {
        let (p, px, pt) = s.sample_with_partials(x, t);
        let (f0, f1) = (p[j] - MID_PLANE, p[k] - MID_PLANE);
        if f0.abs().max(f1.abs()) <= 1e-15 {
            return Ok((x, t));
        }
        let det = px[j] * pt[k] - pt[j] * px[k];
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let dx = (f0 * pt[k] - pt[j] * f1) / det;
        let dt = (px[j] * f1 - f0 * px[k]) / det;
        x -= dx;
        t -= dt;
        if dx.abs().max(dt.abs()) <= 1e-15 {
            return Ok((x, t));
        }
    }
    let p = s.sample(x, t);
    let r = (p[j] - MID_PLANE).abs().max((p[k] - MID_PLANE).abs());
    if r <= 1e-12 {
        Ok((x, t))
    } else {
        Err(Error::ConvergenceFailure(format!("junction Newton residual {r:e}")))
    }
}
