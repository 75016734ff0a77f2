use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense rational matrix, row major.
pub type QMatrix = Vec<Vec<BigRational>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut QMatrix, cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn to_q(m: &[Vec<i128>]) -> QMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect()
}

/// Rank over the rationals of a `rows x cols` matrix.
pub fn rank_q(m: &QMatrix, cols: usize) -> usize {
    let mut w = m.clone();
    rref(&mut w, cols).len()
}

/// Basis (as column vectors) of the rational kernel of an `rows x cols`
/// matrix.
pub fn kernel_basis(m: &QMatrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut w = m.clone();
    let pivots = rref(&mut w, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -w[r][f].clone();
            }
            v
        })
        .collect()
}

/// Rank of an integer matrix reduced modulo the prime `p`.
pub fn rank_mod_p(m: &[Vec<i128>], cols: usize, p: i128) -> usize {
    let mut w: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let rows = w.len();
    let inv = |a: i128| -> i128 {
        // Fermat; p is small.
        let mut r = 1i128;
        let mut b = a;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| w[i][c] != 0) else {
            continue;
        };
        w.swap(r, piv);
        let iv = inv(w[r][c]);
        for x in w[r].iter_mut() {
            *x = *x * iv % p;
        }
        for i in 0..rows {
            if i != r && w[i][c] != 0 {
                let f = w[i][c];
                for j in 0..cols {
                    w[i][j] = (w[i][j] - f * w[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}
