//! Univariate polynomials over the rationals, coefficients ascending.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn poly_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn poly_derivative(p: &QPoly) -> QPoly {
    let mut d: QPoly =
        p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect();
    trim(&mut d);
    d
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn poly_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let mut b = b.clone();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn monic(mut p: QPoly) -> QPoly {
    trim(&mut p);
    if let Some(l) = p.last().cloned() {
        for c in p.iter_mut() {
            *c = &*c / &l;
        }
    }
    p
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Yun's square-free factorisation: `p = c * prod f_i^{m_i}` with each
/// `f_i` square-free, monic, pairwise coprime. Constant factors are dropped.
pub fn square_free(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut f = p.clone();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let d = poly_derivative(&f);
    let mut a = poly_gcd(&f, &d);
    let mut b = poly_divrem(&f, &a).0;
    let mut c = poly_divrem(&d, &a).0;
    let mut out = Vec::new();
    let mut mult = 1;
    loop {
        let bd = poly_derivative(&b);
        let diff: QPoly = {
            let n = c.len().max(bd.len());
            let mut v: QPoly = (0..n)
                .map(|i| {
                    c.get(i).cloned().unwrap_or_else(BigRational::zero)
                        - bd.get(i).cloned().unwrap_or_else(BigRational::zero)
                })
                .collect();
            trim(&mut v);
            v
        };
        a = poly_gcd(&b, &diff);
        if a.len() > 1 {
            out.push((a.clone(), mult));
        }
        b = poly_divrem(&b, &a).0;
        if b.len() <= 1 {
            break;
        }
        c = poly_divrem(&diff, &a).0;
        mult += 1;
    }
    out
}

/// Integer polynomial with coprime coefficients and positive leading term,
/// proportional to `p`.
pub fn primitive_part(p: &QPoly) -> Vec<BigInt> {
    let mut q = p.clone();
    trim(&mut q);
    let lcm = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = q.iter().map(|c| (c * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.iter().map(|c| c / &g * &sign).collect()
}

/// Polynomial through the points `(xs[i], ys[i])` (Newton divided
/// differences), returned in the monomial basis.
pub fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> QPoly {
    let n = xs.len();
    assert_eq!(n, ys.len());
    let x: Vec<BigRational> = xs.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    let mut dd: Vec<BigRational> = ys.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&x[i] - &x[i - level]);
        }
    }
    // Horner on the Newton form.
    let mut p: QPoly = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        p = poly_mul(&p, &vec![-x[i].clone(), BigRational::one()]);
        if p.is_empty() {
            p.push(BigRational::zero());
        }
        p[0] += &dd[i];
    }
    trim(&mut p);
    p
}
