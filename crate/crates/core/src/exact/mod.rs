//! Exact integer and rational arithmetic used by the zeta determinant and
//! the cohomology computations. Nothing in here touches floating point.

mod matrix;
mod modular;
mod poly;
mod snf;

pub use matrix::{bareiss_det, kernel_basis, rank_mod_p, rank_q, to_q, QMatrix};
pub use modular::{charpoly_crt, charpoly_mod_p, is_prime_u64};
pub use poly::{interpolate, poly_derivative, poly_divrem, poly_gcd, poly_mul, primitive_part, square_free, QPoly};
pub use snf::smith_invariants;

/// Dense integer matrix, row major.
pub type IMatrix = Vec<Vec<i128>>;

pub fn zeros(rows: usize, cols: usize) -> IMatrix {
    vec![vec![0; cols]; rows]
}

pub fn identity(n: usize) -> IMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn transpose(m: &IMatrix, rows: usize, cols: usize) -> IMatrix {
    let mut t = zeros(cols, rows);
    for i in 0..rows {
        for j in 0..cols {
            t[j][i] = m[i][j];
        }
    }
    t
}

/// Checked product of an `r x k` and a `k x c` matrix.
pub fn matmul(a: &IMatrix, b: &IMatrix, r: usize, k: usize, c: usize) -> crate::Result<IMatrix> {
    let mut out = zeros(r, c);
    for i in 0..r {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..c {
                let p = x.checked_mul(b[l][j]).ok_or(crate::Error::Overflow("matrix product"))?;
                out[i][j] = out[i][j].checked_add(p).ok_or(crate::Error::Overflow("matrix product"))?;
            }
        }
    }
    Ok(out)
}

pub fn is_zero(m: &IMatrix) -> bool {
    m.iter().all(|r| r.iter().all(|&x| x == 0))
}
