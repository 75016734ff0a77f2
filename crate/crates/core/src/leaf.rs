//! Constant-curvature leaf profile.
//!
//! The profile is a surface of revolution whose momentum function is
//! `phi(u) = a u - b u^2` on `[0, a/b]`, with radius `xi = sqrt(phi)` and
//! axial coordinate `x(u) = int sqrt((1 - phi'^2/4) / phi) du`. All
//! integrals are taken after the substitution `u = u_max sin^2(t)`, which
//! turns `du / sqrt(phi)` into `2 dt / sqrt(b)` and leaves smooth
//! integrands on `[0, pi/2]`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rand::Rng;

use crate::error::{Error, Result};
use crate::numeric::{brent, integrate, log_grid_bracket, RootOptions};
use crate::numfmt::g17;

/// Slope `a = 2/sqrt(3)`, which makes the profile meet the axis at 1/sqrt(2).
pub const SLOPE_A: f64 = 1.154_700_538_379_251_529_018_297_561_003_914_9;

/// Target profile length `sqrt(3)`, the cube diagonal.
pub const DIAGONAL: f64 = 1.732_050_807_568_877_293_527_446_341_505_872_4;

pub const DEFAULT_TOL: f64 = 1e-10;

const SCAN_LO: f64 = 1e-3;
const SCAN_HI: f64 = 1e3;
const SCAN_POINTS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumProfile {
    pub a: f64,
    pub b: f64,
}

impl MomentumProfile {
    pub fn new(b: f64) -> Result<Self> {
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::InvalidArgument(format!("b must be positive, got {b}")));
        }
        Ok(Self { a: SLOPE_A, b })
    }

    pub fn u_max(&self) -> f64 {
        self.a / self.b
    }

    pub fn phi(&self, u: f64) -> f64 {
        self.a * u - self.b * u * u
    }

    pub fn dphi(&self, u: f64) -> f64 {
        self.a - 2.0 * self.b * u
    }

    /// `-phi''/2`, identically `b`.
    pub fn curvature(&self) -> f64 {
        self.b
    }

    /// `1 - phi'^2/4` at substitution angle `t`, where `phi' = a cos 2t`.
    fn metric_factor(&self, t: f64) -> f64 {
        let c = (2.0 * t).cos();
        (1.0 - 0.25 * self.a * self.a * c * c).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafSample {
    pub u: f64,
    pub x: f64,
    pub xi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LeafDiagnostics {
    pub arc_length_error: f64,
    pub volume_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeafProfile {
    pub profile: MomentumProfile,
    pub samples: Vec<LeafSample>,
    pub arc_length: f64,
    pub volume: f64,
    pub diagnostics: LeafDiagnostics,
}

impl LeafProfile {
    pub fn x_max(&self) -> f64 {
        self.samples.last().map_or(0.0, |s| s.x)
    }

    pub fn max_xi(&self) -> f64 {
        self.samples.iter().map(|s| s.xi).fold(0.0, f64::max)
    }

    /// `d xi / d x` at a sample, from `phi'/sqrt(4 - phi'^2)`.
    pub fn slope_at(&self, s: &LeafSample) -> f64 {
        let p = self.profile.dphi(s.u);
        p / (4.0 - p * p).sqrt()
    }

    /// Slope of the profile at the first cone point, Richardson-extrapolated
    /// from the secants through the first two samples.
    pub fn origin_slope(&self) -> f64 {
        let s1 = self.samples[1].xi / self.samples[1].x;
        let s2 = self.samples[2].xi / self.samples[2].x;
        (4.0 * s1 - s2) / 3.0
    }

    /// Radius and its x-derivative at axial position `x` by cubic Hermite
    /// interpolation of the sample table. Outside `[0, x_max]` the radius is 0.
    pub fn xi_at(&self, x: f64) -> (f64, f64) {
        let s = &self.samples;
        if s.len() < 2 || x <= 0.0 || x >= self.x_max() {
            return (0.0, 0.0);
        }
        let i = s.partition_point(|p| p.x <= x).clamp(1, s.len() - 1);
        let (p0, p1) = (&s[i - 1], &s[i]);
        let h = p1.x - p0.x;
        let t = (x - p0.x) / h;
        let (m0, m1) = (self.slope_at(p0) * h, self.slope_at(p1) * h);
        let t2 = t * t;
        let t3 = t2 * t;
        let v = (2.0 * t3 - 3.0 * t2 + 1.0) * p0.xi
            + (t3 - 2.0 * t2 + t) * m0
            + (-2.0 * t3 + 3.0 * t2) * p1.xi
            + (t3 - t2) * m1;
        let dv = ((6.0 * t2 - 6.0 * t) * p0.xi
            + (3.0 * t2 - 4.0 * t + 1.0) * m0
            + (-6.0 * t2 + 6.0 * t) * p1.xi
            + (3.0 * t2 - 2.0 * t) * m1)
            / h;
        (v, dv)
    }
}

fn arc_length_with_error(b: f64, tol: f64) -> Result<(f64, f64)> {
    let m = MomentumProfile::new(b)?;
    let scale = 2.0 / b.sqrt();
    let r = integrate(|t| m.metric_factor(t), 0.0, FRAC_PI_2, tol / scale)?;
    Ok((scale * r.value, scale * r.error))
}

/// Profile length `S(b)` with absolute error at most `tol`.
pub fn arc_length(b: f64, tol: f64) -> Result<f64> {
    arc_length_with_error(b, tol).map(|r| r.0)
}

fn volume_with_error(b: f64, tol: f64) -> Result<(f64, f64)> {
    let m = MomentumProfile::new(b)?;
    let um = m.u_max();
    let scale = 0.5 * PI * b.sqrt() * um * um;
    let r = integrate(
        |t| {
            let s = (2.0 * t).sin();
            s * s * m.metric_factor(t)
        },
        0.0,
        FRAC_PI_2,
        tol / scale,
    )?;
    Ok((scale * r.value, scale * r.error))
}

/// Enclosed volume `pi int sqrt((1 - phi'^2/4) phi) du`.
pub fn volume(b: f64, tol: f64) -> Result<f64> {
    volume_with_error(b, tol).map(|r| r.0)
}

/// Find `b` with `|S(b) - target| <= tol`.
///
/// A 60-point log grid on `[1e-3, 1e3]` is scanned for the first sign
/// change, then Brent's method refines it.
pub fn solve_b(target: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let qtol = tol * 1e-2;
    let mut f = |b: f64| arc_length(b, qtol).map(|s| s - target);
    let (lo, hi, flo, fhi) = log_grid_bracket(&mut f, SCAN_LO, SCAN_HI, SCAN_POINTS)?;
    let opts = RootOptions { ftol: 0.5 * tol, xtol: 0.0, max_iter: 200 };
    brent(&mut f, lo, hi, flo, fhi, opts)
}

/// Sample the profile at `n` points.
///
/// Samples are uniform in the substitution angle on two halves that share
/// the angle `pi/4`, so the widest point `u = u_max/2` is always a sample.
pub fn profile_curve(b: f64, n: usize) -> Result<LeafProfile> {
    if n < 16 {
        return Err(Error::InvalidArgument(format!("need at least 16 samples, got {n}")));
    }
    let m = MomentumProfile::new(b)?;
    let um = m.u_max();
    let scale = 2.0 / b.sqrt();
    let n1 = n.div_ceil(2);
    let n2 = n - n1 + 1;
    let mut angles: Vec<f64> = (0..n1).map(|k| FRAC_PI_4 * k as f64 / (n1 - 1) as f64).collect();
    angles.extend((1..n2).map(|k| FRAC_PI_4 + FRAC_PI_4 * k as f64 / (n2 - 1) as f64));

    let seg_tol = DEFAULT_TOL / n as f64;
    let mut x = 0.0;
    let mut err = 0.0;
    let mut samples = Vec::with_capacity(n);
    for (k, &t) in angles.iter().enumerate() {
        if k > 0 {
            let r = integrate(|s| m.metric_factor(s), angles[k - 1], t, seg_tol / scale)
                .map_err(|e| Error::OdeFailure(format!("x(u) integration: {e}")))?;
            x += scale * r.value;
            err += scale * r.error;
        }
        let (sn, cs) = t.sin_cos();
        let (u, xi) = if k == n - 1 { (um, 0.0) } else { (um * sn * sn, b.sqrt() * um * sn * cs) };
        samples.push(LeafSample { u, x, xi });
    }
    let (vol, verr) = volume_with_error(b, DEFAULT_TOL)?;
    Ok(LeafProfile {
        profile: m,
        samples,
        arc_length: x,
        volume: vol,
        diagnostics: LeafDiagnostics { arc_length_error: err, volume_error: verr },
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureReport {
    pub k: f64,
    /// Largest `|-phi''/2 - b|` over the finite-difference probes.
    pub max_deviation: f64,
    pub probes: usize,
}

/// Curvature `K = b`, cross-checked by central differences of `phi` at 10
/// random points.
pub fn curvature_report<R: Rng>(b: f64, rng: &mut R) -> Result<CurvatureReport> {
    let m = MomentumProfile::new(b)?;
    let h = 1e-3 * m.u_max();
    let mut dev: f64 = 0.0;
    for _ in 0..10 {
        let u = rng.random_range(h..m.u_max() - h);
        let d2 = (m.phi(u + h) - 2.0 * m.phi(u) + m.phi(u - h)) / (h * h);
        dev = dev.max((-0.5 * d2 - b).abs());
    }
    Ok(CurvatureReport { k: m.curvature(), max_deviation: dev, probes: 10 })
}

/// `leaf v1` report lines. `b_star` is printed when the profile came from
/// the solver; otherwise the line is `b <val>`.
pub fn format_leaf_report(p: &LeafProfile, solved: bool, k: f64) -> Vec<String> {
    let mut out = vec![
        "leaf v1".to_string(),
        format!("a {}", g17(p.profile.a)),
        format!("{} {}", if solved { "b_star" } else { "b" }, g17(p.profile.b)),
        format!("arc_length {}", g17(p.arc_length)),
        format!("rho_max {}", g17(p.volume)),
        format!("K {}", g17(k)),
    ];
    out.extend(p.samples.iter().map(|s| format!("sample {} {} {}", g17(s.u), g17(s.x), g17(s.xi))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constants() {
        assert!((SLOPE_A - 2.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((DIAGONAL - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_b() {
        assert!(MomentumProfile::new(0.0).is_err());
        assert!(arc_length(-1.0, 1e-8).is_err());
    }

    #[test]
    fn profile_vanishes_at_ends() {
        let m = MomentumProfile::new(1.3).unwrap();
        assert_eq!(m.phi(0.0), 0.0);
        assert!(m.phi(m.u_max()).abs() < 1e-15);
        assert!(m.phi(0.5 * m.u_max()) > 0.0);
    }

    #[test]
    fn curvature_is_b() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for b in [1.0, 0.25] {
            let r = curvature_report(b, &mut rng).unwrap();
            assert_eq!(r.k, b);
            assert!(r.max_deviation < 1e-6);
        }
    }

    #[test]
    fn self_target_recovers_b() {
        let t = arc_length(1.0, 1e-13).unwrap();
        let b = solve_b(t, 1e-10).unwrap();
        assert!((b - 1.0).abs() < 1e-8);
    }

    #[test]
    fn profile_agrees_with_arc_length() {
        for b in [0.5, 1.0, 2.0] {
            let p = profile_curve(b, 64).unwrap();
            let s = arc_length(b, 1e-12).unwrap();
            assert!((p.arc_length - s).abs() < 1e-8);
            assert_eq!(p.samples.len(), 64);
            assert_eq!(p.samples[0].xi, 0.0);
            assert_eq!(p.samples[63].xi, 0.0);
            let peak = SLOPE_A / (2.0 * b.sqrt());
            assert!((p.max_xi() - peak).abs() < 1e-12);
        }
    }

    #[test]
    fn hermite_hits_samples() {
        let p = profile_curve(1.0, 33).unwrap();
        let s = p.samples[10];
        assert!((p.xi_at(s.x).0 - s.xi).abs() < 1e-14);
        assert_eq!(p.xi_at(-1.0), (0.0, 0.0));
    }

    #[test]
    fn too_few_samples() {
        assert!(profile_curve(1.0, 15).is_err());
    }
}
