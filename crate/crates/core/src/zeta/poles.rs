use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::det::ZetaReciprocal;
use crate::error::{Error, Result};
use crate::exact::{primitive_part, square_free};

/// Root of `1/Z(u)`, i.e. a pole of `Z(u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pole {
    pub root: Complex64,
    pub multiplicity: usize,
}

const MAX_ITER: usize = 2000;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Backward-error residual `|f(z)| / sum |c_k| |z|^k`.
fn residual(c: &[f64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let scale: f64 = c.iter().enumerate().map(|(k, a)| a.abs() * z.norm().powi(k as i32)).sum();
    p.norm() / scale.max(f64::MIN_POSITIVE)
}

/// Simultaneous Aberth-Ehrlich iteration for a square-free polynomial.
fn aberth(c: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    // Cauchy-type radius for the initial circle.
    let lead = c[n].abs();
    let radius = 1.0 + c[..n].iter().map(|a| a.abs() / lead).fold(0.0, f64::max);
    let radius = radius.min(1e6);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..MAX_ITER {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    sum += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-15 {
            break;
        }
    }
    // Newton polish
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let (p, dp) = horner(c, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            *zi -= step;
            if step.norm() <= 1e-17 * zi.norm() {
                break;
            }
        }
    }
    for zi in &z {
        let r = residual(c, *zi);
        if !(r <= tol) {
            return Err(Error::ConvergenceFailure(format!("root {zi} has residual {r:e} > {tol:e}")));
        }
    }
    Ok(z)
}

/// All poles of `Z(u)` with multiplicities.
///
/// The polynomial is first split into square-free factors with exact
/// rational arithmetic, so multiplicities are exact; each factor's simple
/// roots are found by Aberth iteration and accepted when their normalised
/// backward residual is at most `tol`. Roots closer than `10 * tol` are
/// merged. Output is sorted by modulus, then argument in `(-pi, pi]`.
pub fn zeta_poles(zr: &ZetaReciprocal, tol: f64) -> Result<Vec<Pole>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let q: Vec<BigRational> = zr.poly.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    let mut found: Vec<Pole> = Vec::new();
    for (factor, mult) in square_free(&q) {
        let ints = primitive_part(&factor);
        let c: Vec<f64> = ints.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
        if c.iter().any(|x| !x.is_finite()) {
            return Err(Error::Overflow("pole coefficients"));
        }
        for root in aberth(&c, tol)? {
            found.push(Pole { root: Complex64::new(snap(root.re), snap(root.im)), multiplicity: mult });
        }
    }
    // cluster
    let radius = 10.0 * tol;
    let mut merged: Vec<Pole> = Vec::new();
    for p in found {
        match merged.iter_mut().find(|m| (m.root - p.root).norm() <= radius) {
            Some(m) => m.multiplicity += p.multiplicity,
            None => merged.push(p),
        }
    }
    sort_poles(&mut merged, radius);
    Ok(merged)
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-14 {
        0.0
    } else {
        x
    }
}

fn arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a <= -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

/// Sort by modulus; moduli within `radius` form one tier, sorted by argument.
fn sort_poles(p: &mut [Pole], radius: f64) {
    p.sort_by(|a, b| a.root.norm().total_cmp(&b.root.norm()));
    let mut start = 0;
    while start < p.len() {
        let mut end = start + 1;
        while end < p.len() && p[end].root.norm() - p[end - 1].root.norm() <= radius {
            end += 1;
        }
        p[start..end].sort_by(|a, b| arg(a.root).total_cmp(&arg(b.root)));
        start = end;
    }
}
