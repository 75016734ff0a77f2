use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::{self, Point3};
use crate::leaf::{profile_curve, LeafProfile};

/// Main diagonals of the unit cube as (start corner, end corner).
pub const DIAGONALS: [[Point3; 2]; 4] = [
    [[0.0, 0.0, 0.0], [1.0, 1.0, 1.0]],
    [[1.0, 0.0, 0.0], [0.0, 1.0, 1.0]],
    [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0]],
    [[0.0, 0.0, 1.0], [1.0, 1.0, 0.0]],
];

/// Profile samples used to tabulate the leaf radius for interpolation.
pub const PROFILE_SAMPLES: usize = 4097;

#[derive(Debug, Clone, PartialEq)]
pub enum RadialProfile {
    Leaf(LeafProfile),
    /// Sphere of the given radius: `xi(x) = sqrt(x (2r - x))`.
    Semicircle(f64),
}

impl RadialProfile {
    pub fn length(&self) -> f64 {
        match self {
            RadialProfile::Leaf(p) => p.x_max(),
            RadialProfile::Semicircle(r) => 2.0 * r,
        }
    }

    /// Radius and its derivative at axial position `x`.
    pub fn radius(&self, x: f64) -> (f64, f64) {
        match self {
            RadialProfile::Leaf(p) => p.xi_at(x),
            RadialProfile::Semicircle(r) => {
                let q = x * (2.0 * r - x);
                if q <= 0.0 {
                    (0.0, 0.0)
                } else {
                    let s = q.sqrt();
                    (s, (r - x) / s)
                }
            }
        }
    }
}

/// Surface of revolution `P(x, t) = origin + x d + xi(x) (cos t e1 + sin t e2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LeafSurface {
    pub id: String,
    pub origin: Point3,
    pub dir: Point3,
    pub e1: Point3,
    pub e2: Point3,
    pub profile: RadialProfile,
}

/// Orthonormal frame normal to the unit vector `d`: the first standard basis
/// vector not parallel to `d`, orthogonalised against it, then `d x e1`.
pub fn normal_frame(d: Point3) -> (Point3, Point3) {
    for k in 0..3 {
        let mut e = [0.0; 3];
        e[k] = 1.0;
        let r = geom::sub(e, geom::scale(d, geom::dot(e, d)));
        if geom::norm(r) > 1e-6 {
            let e1 = geom::normalize(r);
            return (e1, geom::cross(d, e1));
        }
    }
    unreachable!("a unit vector is parallel to at most one basis vector")
}

impl LeafSurface {
    pub fn new(id: &str, origin: Point3, axis: Point3, profile: RadialProfile) -> Self {
        let dir = geom::normalize(axis);
        let (e1, e2) = normal_frame(dir);
        Self { id: id.to_string(), origin, dir, e1, e2, profile }
    }

    pub fn x_max(&self) -> f64 {
        self.profile.length()
    }

    fn ring(&self, t: f64) -> Point3 {
        let (s, c) = t.sin_cos();
        geom::add(geom::scale(self.e1, c), geom::scale(self.e2, s))
    }

    pub fn sample(&self, x: f64, t: f64) -> Point3 {
        let (xi, _) = self.profile.radius(x);
        geom::add(geom::add(self.origin, geom::scale(self.dir, x)), geom::scale(self.ring(t), xi))
    }

    /// Point plus partial derivatives in `x` and `t`.
    pub fn sample_with_partials(&self, x: f64, t: f64) -> (Point3, Point3, Point3) {
        let (xi, dxi) = self.profile.radius(x);
        let ring = self.ring(t);
        let (s, c) = t.sin_cos();
        let p = geom::add(geom::add(self.origin, geom::scale(self.dir, x)), geom::scale(ring, xi));
        let px = geom::add(self.dir, geom::scale(ring, dxi));
        let pt = geom::scale(geom::add(geom::scale(self.e1, -s), geom::scale(self.e2, c)), xi);
        (p, px, pt)
    }

    /// Wrap an angle into `[0, 2 pi)`.
    pub fn wrap(t: f64) -> f64 {
        t.rem_euclid(TAU)
    }
}

/// Interface leaf at parameter `b` about diagonal `diagonal` (0..=3).
pub fn build_leaf_surface(b: f64, diagonal: usize) -> Result<LeafSurface> {
    let [c0, c1] = *DIAGONALS
        .get(diagonal)
        .ok_or_else(|| Error::InvalidArgument(format!("diagonal index {diagonal} not in 0..=3")))?;
    let profile = profile_curve(b, PROFILE_SAMPLES)?;
    Ok(LeafSurface::new(&format!("L{diagonal}"), c0, geom::sub(c1, c0), RadialProfile::Leaf(profile)))
}

/// Sphere of radius `r` about `center`, parametrised along `axis`.
pub fn sphere_surface(id: &str, center: Point3, axis: Point3, r: f64) -> LeafSurface {
    let d = geom::normalize(axis);
    LeafSurface::new(id, geom::sub(center, geom::scale(d, r)), d, RadialProfile::Semicircle(r))
}
