use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::gamma::normal_frame;
use crate::geom::{self, Point3};

pub const CLOSURE_TOL: f64 = 1e-9;
pub const TANGENT_TOL: f64 = 1e-9;
pub const FIXED_TOL: f64 = 1e-8;
const BASEPOINT_TOL: f64 = 1e-12;

/// Great-circle arc: start point rotated by `angle` about the unit `axis`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicArc {
    pub start: Point3,
    pub axis: Point3,
    pub angle: f64,
}

impl GeodesicArc {
    /// Minor arc from `a` to `b` (unit vectors, not antipodal).
    pub fn between(a: Point3, b: Point3) -> Result<Self> {
        let n = geom::cross(a, b);
        let s = geom::norm(n);
        let c = geom::dot(a, b);
        if s <= 1e-15 {
            if c > 0.0 {
                return Ok(Self { start: a, axis: normal_frame(a).0, angle: 0.0 });
            }
            return Err(Error::InvalidArgument("antipodal endpoints do not fix a geodesic".into()));
        }
        Ok(Self { start: a, axis: geom::scale(n, 1.0 / s), angle: s.atan2(c) })
    }

    pub fn end(&self) -> Point3 {
        geom::rotate(self.start, self.axis, self.angle)
    }

    /// Parallel transport of a tangent vector at `start` to `end`.
    pub fn transport(&self, v: Point3) -> Point3 {
        geom::rotate(v, self.axis, self.angle)
    }
}

/// Orthogonal map of the tangent plane at `basepoint`.
///
/// In the frame `(t1, t2)` with `t1` from [`normal_frame`] and
/// `t2 = basepoint x t1`, a rotation has matrix `[[c, -s], [s, c]]` and a
/// reflection `[[c, s], [s, -c]]`, where `(c, s) = (cos angle, sin angle)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HolonomyElement {
    pub basepoint: Point3,
    pub angle: f64,
    pub reflection: bool,
    pub loop_id: String,
}

pub fn wrap_angle(a: f64) -> f64 {
    let w = (a + PI).rem_euclid(TAU) - PI;
    if w <= -PI {
        PI
    } else {
        w
    }
}

impl HolonomyElement {
    pub fn rotation(basepoint: Point3, angle: f64, loop_id: &str) -> Self {
        Self { basepoint, angle: wrap_angle(angle), reflection: false, loop_id: loop_id.to_string() }
    }

    pub fn identity(basepoint: Point3) -> Self {
        Self::rotation(basepoint, 0.0, "id")
    }

    /// Reflection whose mirror axis makes angle `angle/2` with `t1`.
    pub fn reflection(basepoint: Point3, angle: f64, loop_id: &str) -> Self {
        Self { basepoint, angle: wrap_angle(angle), reflection: true, loop_id: loop_id.to_string() }
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        let (s, c) = self.angle.sin_cos();
        if self.reflection {
            [[c, s], [s, -c]]
        } else {
            [[c, -s], [s, c]]
        }
    }

    pub fn frame(&self) -> (Point3, Point3) {
        let t1 = normal_frame(self.basepoint).0;
        (t1, geom::cross(self.basepoint, t1))
    }

    fn from_matrix(basepoint: Point3, m: [[f64; 2]; 2], loop_id: String) -> Self {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let angle = wrap_angle(m[1][0].atan2(m[0][0]));
        Self { basepoint, angle, reflection: det < 0.0, loop_id }
    }

    /// Orientation sign: +1 for rotations, -1 for reflections.
    pub fn orientation(&self) -> i8 {
        if self.reflection {
            -1
        } else {
            1
        }
    }
}

/// Vector after each arc of `arcs`, starting from `v0`.
pub fn transport_steps(arcs: &[GeodesicArc], v0: Point3) -> Vec<Point3> {
    let mut v = v0;
    arcs.iter()
        .map(|a| {
            v = a.transport(v);
            v
        })
        .collect()
}

/// Net rotation of tangent vectors carried around a closed chain of arcs.
///
/// The angle is measured at `basepoint` from `v0` to its transport,
/// positive counterclockwise seen from outside the sphere.
pub fn sphere_parallel_transport(arcs: &[GeodesicArc], basepoint: Point3, v0: Point3) -> Result<HolonomyElement> {
    let tangency = geom::dot(v0, basepoint).abs();
    if tangency > TANGENT_TOL {
        return Err(Error::NotTangent(tangency));
    }
    if geom::norm(v0) == 0.0 {
        return Err(Error::InvalidArgument("zero tangent vector".into()));
    }
    let mut at = basepoint;
    for a in arcs {
        let gap = geom::dist(at, a.start);
        if gap > CLOSURE_TOL {
            return Err(Error::NotClosed(gap));
        }
        at = a.end();
    }
    let gap = geom::dist(at, basepoint);
    if gap > CLOSURE_TOL {
        return Err(Error::NotClosed(gap));
    }
    let v1 = transport_steps(arcs, v0).last().copied().unwrap_or(v0);
    let angle = geom::dot(basepoint, geom::cross(v0, v1)).atan2(geom::dot(v0, v1));
    Ok(HolonomyElement::rotation(basepoint, angle, "loop"))
}

fn same_basepoint(a: &HolonomyElement, b: &HolonomyElement) -> Result<()> {
    if geom::dist(a.basepoint, b.basepoint) > BASEPOINT_TOL {
        return Err(Error::BasepointMismatch);
    }
    Ok(())
}

/// Transport along `h1`'s loop, then `h2`'s.
pub fn compose_holonomy(h1: &HolonomyElement, h2: &HolonomyElement) -> Result<HolonomyElement> {
    same_basepoint(h1, h2)?;
    let (a, b) = (h2.matrix(), h1.matrix());
    let m = [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ];
    Ok(HolonomyElement::from_matrix(h1.basepoint, m, format!("{}*{}", h1.loop_id, h2.loop_id)))
}

/// Common fixed subspace of a set of tangent-plane maps.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedSubspace {
    pub dim: usize,
    /// Orthonormal basis in tangent-frame coordinates.
    pub basis: Vec<[f64; 2]>,
}

/// Null space of the stacked `M_i - I`, via the eigenvalues of its 2x2 Gram
/// matrix; singular values up to [`FIXED_TOL`] count as zero.
pub fn holonomy_fixed_points(elements: &[HolonomyElement]) -> Result<FixedSubspace> {
    for w in elements.windows(2) {
        same_basepoint(&w[0], &w[1])?;
    }
    let mut g = [[0.0f64; 2]; 2];
    for e in elements {
        let m = e.matrix();
        let a = [[m[0][0] - 1.0, m[0][1]], [m[1][0], m[1][1] - 1.0]];
        for i in 0..2 {
            for j in 0..2 {
                g[i][j] += a[0][i] * a[0][j] + a[1][i] * a[1][j];
            }
        }
    }
    // Symmetric 2x2 eigen-decomposition.
    let (p, q, r) = (g[0][0], g[0][1], g[1][1]);
    let mean = 0.5 * (p + r);
    let rad = (0.25 * (p - r) * (p - r) + q * q).sqrt();
    let (lo, hi) = (mean - rad, mean + rad);
    let small = |l: f64| l.max(0.0).sqrt() <= FIXED_TOL;
    let eigvec = |l: f64| -> [f64; 2] {
        let v = if q.abs() > 1e-300 {
            [l - r, q]
        } else if (p - l).abs() <= (r - l).abs() {
            [1.0, 0.0]
        } else {
            [0.0, 1.0]
        };
        let n = v[0].hypot(v[1]);
        [v[0] / n, v[1] / n]
    };
    Ok(match (small(lo), small(hi)) {
        (true, true) => FixedSubspace { dim: 2, basis: vec![[1.0, 0.0], [0.0, 1.0]] },
        (true, false) => FixedSubspace { dim: 1, basis: vec![eigvec(lo)] },
        _ => FixedSubspace { dim: 0, basis: Vec::new() },
    })
}

/// The eight octant triangles as loops based at `e1`.
///
/// Octant `(sx, sy, sz)` has corners `X = sx e1`, `Y = sy e2`, `Z = sz e3`
/// and is traversed X -> Y -> Z -> X. Octants with `sx = -1` are reached
/// by a tail along the quarter arc `e1 -> Y` and back. Ids read like `o+-+`.
pub fn octant_loops() -> Vec<(String, Vec<GeodesicArc>)> {
    let e1 = [1.0, 0.0, 0.0];
    let mut out = Vec::with_capacity(8);
    for sx in [1.0, -1.0] {
        for sy in [1.0, -1.0] {
            for sz in [1.0, -1.0] {
                let (x, y, z) = ([sx, 0.0, 0.0], [0.0, sy, 0.0], [0.0, 0.0, sz]);
                let arc = |a, b| GeodesicArc::between(a, b).expect("orthogonal corners");
                let arcs = if sx > 0.0 {
                    vec![arc(x, y), arc(y, z), arc(z, x)]
                } else {
                    vec![arc(e1, y), arc(y, z), arc(z, x), arc(x, y), arc(y, e1)]
                };
                let sign = |s: f64| if s > 0.0 { '+' } else { '-' };
                out.push((format!("o{}{}{}", sign(sx), sign(sy), sign(sz)), arcs));
            }
        }
    }
    out
}

/// Transport `e2` around every octant loop at basepoint `e1`.
pub fn octant_holonomies() -> Result<Vec<HolonomyElement>> {
    let (bp, v0) = ([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
    octant_loops()
        .into_iter()
        .map(|(id, arcs)| {
            let mut h = sphere_parallel_transport(&arcs, bp, v0)?;
            h.loop_id = id;
            Ok(h)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    const E1: Point3 = [1.0, 0.0, 0.0];
    const E2: Point3 = [0.0, 1.0, 0.0];
    const E3: Point3 = [0.0, 0.0, 1.0];

    #[test]
    fn first_octant_turns_a_quarter() {
        let arcs = [
            GeodesicArc::between(E1, E2).unwrap(),
            GeodesicArc::between(E2, E3).unwrap(),
            GeodesicArc::between(E3, E1).unwrap(),
        ];
        let h = sphere_parallel_transport(&arcs, E1, E2).unwrap();
        assert!((h.angle - FRAC_PI_2).abs() < 1e-12);
        assert!(!h.reflection);
    }

    #[test]
    fn empty_loop_is_identity() {
        let h = sphere_parallel_transport(&[], E1, E3).unwrap();
        assert_eq!(h.angle, 0.0);
    }

    #[test]
    fn full_equator_is_identity() {
        let arc = GeodesicArc { start: E1, axis: E3, angle: TAU };
        let h = sphere_parallel_transport(&[arc], E1, E2).unwrap();
        assert!(h.angle.abs() < 1e-12);
    }

    #[test]
    fn errors() {
        let open = [GeodesicArc::between(E1, E2).unwrap()];
        assert_eq!(sphere_parallel_transport(&open, E1, E3).unwrap_err().name(), "NotClosed");
        assert_eq!(sphere_parallel_transport(&[], E1, E1).unwrap_err().name(), "NotTangent");
        let a = HolonomyElement::identity(E1);
        let b = HolonomyElement::identity(E2);
        assert_eq!(compose_holonomy(&a, &b).unwrap_err().name(), "BasepointMismatch");
    }

    #[test]
    fn composition_adds_angles() {
        let q = HolonomyElement::rotation(E1, FRAC_PI_2, "q");
        let h = compose_holonomy(&q, &q).unwrap();
        assert!((h.angle - PI).abs() < 1e-12);
        let id = HolonomyElement::identity(E1);
        let r = compose_holonomy(&id, &q).unwrap();
        assert!((r.angle - q.angle).abs() < 1e-15);
    }

    #[test]
    fn reflection_then_reflection_is_rotation() {
        let r1 = HolonomyElement::reflection(E1, 0.0, "r1");
        let r2 = HolonomyElement::reflection(E1, FRAC_PI_2, "r2");
        let h = compose_holonomy(&r1, &r2).unwrap();
        assert!(!h.reflection);
        assert!((h.angle - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn fixed_dimensions() {
        let id = HolonomyElement::identity(E1);
        assert_eq!(holonomy_fixed_points(std::slice::from_ref(&id)).unwrap().dim, 2);
        let q = HolonomyElement::rotation(E1, FRAC_PI_2, "q");
        assert_eq!(holonomy_fixed_points(&[q]).unwrap().dim, 0);
        let r = HolonomyElement::reflection(E1, 0.6, "r");
        let fs = holonomy_fixed_points(std::slice::from_ref(&r)).unwrap();
        assert_eq!(fs.dim, 1);
        let m = r.matrix();
        let v = fs.basis[0];
        let mv = [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
        assert!((mv[0] - v[0]).abs() < 1e-12 && (mv[1] - v[1]).abs() < 1e-12);
        assert_eq!(holonomy_fixed_points(&[]).unwrap().dim, 2);
    }

    #[test]
    fn octant_angles_alternate() {
        let hs = octant_holonomies().unwrap();
        assert_eq!(hs.len(), 8);
        for h in &hs {
            let det_sign = h.loop_id.matches('-').count() % 2 == 0;
            let expect = if det_sign { FRAC_PI_2 } else { -FRAC_PI_2 };
            assert!((h.angle - expect).abs() < 1e-12, "{} {}", h.loop_id, h.angle);
        }
    }
}
