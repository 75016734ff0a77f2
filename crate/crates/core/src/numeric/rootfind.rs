use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct RootOptions {
    /// Stop once `|f(x)| <= ftol`.
    pub ftol: f64,
    /// Stop once the bracket is narrower than this (relative to |x|).
    pub xtol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self { ftol: 1e-12, xtol: 4.0 * f64::EPSILON, max_iter: 200 }
    }
}

/// First sign change of `f` on `n` log-spaced points in `[lo, hi]`.
///
/// Returns the bracketing pair together with the function values there.
/// No monotonicity is assumed; every grid point is evaluated.
pub fn log_grid_bracket<F>(f: &mut F, lo: f64, hi: f64, n: usize) -> Result<(f64, f64, f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo > 0.0 && hi > lo && n >= 2) {
        return Err(Error::InvalidArgument("bad scan grid".into()));
    }
    let (l0, l1) = (lo.ln(), hi.ln());
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..n {
        let x = if i == n - 1 { hi } else { (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp() };
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok((x, x, 0.0, 0.0));
        }
        if let Some((xp, fp)) = prev {
            if fp.signum() != fx.signum() {
                return Ok((xp, x, fp, fx));
            }
        }
        prev = Some((x, fx));
    }
    Err(Error::NoBracket)
}

/// Brent's method on a sign-changing bracket.
pub fn brent<F>(f: &mut F, a: f64, b: f64, fa: f64, fb: f64, opt: RootOptions) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket);
    }
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..opt.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * opt.xtol * b.abs().max(1e-300);
        let m = 0.5 * (c - b);
        if fb.abs() <= opt.ftol || m.abs() <= tol1 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic or secant step
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(m) };
        fb = f(b)?;
    }
    Err(Error::ConvergenceFailure(format!("root not found within {} iterations", opt.max_iter)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_root_of_two() {
        let mut f = |x: f64| Ok(x * x * x - 2.0);
        let (a, b, fa, fb) = log_grid_bracket(&mut f, 1e-3, 1e3, 60).unwrap();
        let r = brent(&mut f, a, b, fa, fb, RootOptions::default()).unwrap();
        assert!((r - 2f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn no_sign_change() {
        let mut f = |x: f64| Ok(x + 1.0);
        assert_eq!(log_grid_bracket(&mut f, 1e-3, 1e3, 60), Err(Error::NoBracket));
    }

    #[test]
    fn nonmonotone_takes_first_crossing() {
        let mut f = |x: f64| Ok((x - 0.5) * (x - 20.0));
        let (a, b, fa, fb) = log_grid_bracket(&mut f, 1e-3, 1e3, 60).unwrap();
        let r = brent(&mut f, a, b, fa, fb, RootOptions::default()).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }
}
