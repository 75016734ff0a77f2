use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::require_md2;
use super::series::arc_matrix;
use crate::error::{Error, Result};
use crate::exact::{bareiss_det, charpoly_crt, interpolate};
use crate::graph::{validate, Multigraph};

/// `det(I - uT)` as an integer polynomial, ascending powers of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaReciprocal {
    pub poly: Vec<i128>,
    pub cycle_rank: i64,
}

impl ZetaReciprocal {
    pub fn degree(&self) -> usize {
        self.poly.len().saturating_sub(1)
    }
}

/// Arc count up to which [`zeta_reciprocal`] interpolates exact
/// determinants; larger systems go through the modular characteristic
/// polynomial.
pub const INTERPOLATION_LIMIT: usize = 64;

/// Exact `det(I - uT)`.
pub fn zeta_reciprocal(g: &Multigraph) -> Result<ZetaReciprocal> {
    if build_arc_count(g) <= INTERPOLATION_LIMIT {
        zeta_reciprocal_interpolated(g)
    } else {
        zeta_reciprocal_modular(g)
    }
}

fn build_arc_count(g: &Multigraph) -> usize {
    2 * g.edge_count()
}

/// `det(I - uT)` evaluated with Bareiss elimination at the integer points
/// `u = 0, 1, ..., 2|E|`; the unique polynomial of degree `<= 2|E|` through
/// those values is recovered by exact rational interpolation.
pub fn zeta_reciprocal_interpolated(g: &Multigraph) -> Result<ZetaReciprocal> {
    require_md2(g)?;
    let t = arc_matrix(g);
    let m = t.len();
    let xs: Vec<BigInt> = (0..=m as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|u| {
            let mat = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let id = if i == j { BigInt::from(1) } else { BigInt::zero() };
                            id - u * BigInt::from(t[i][j])
                        })
                        .collect()
                })
                .collect();
            bareiss_det(mat)
        })
        .collect();
    let q = interpolate(&xs, &ys);
    let mut poly = Vec::with_capacity(q.len());
    for c in &q {
        if !c.is_integer() {
            return Err(Error::InvalidArgument("interpolated determinant has a non-integer coefficient".into()));
        }
        poly.push(c.to_integer().to_i128().ok_or(Error::Overflow("zeta reciprocal"))?);
    }
    if poly.is_empty() {
        poly.push(0);
    }
    Ok(ZetaReciprocal { poly, cycle_rank: validate(g).cycle_rank })
}

/// `det(I - uT) = u^m chi_T(1/u)`: the characteristic polynomial of `T`
/// reversed. `chi_T` is computed modulo enough 62-bit primes to exceed the
/// bound `|c| <= C(m, s) * d^(s/2)` on sums of `s x s` principal minors of a
/// 0/1 matrix with at most `d` ones per row, then lifted by Chinese
/// remaindering.
pub fn zeta_reciprocal_modular(g: &Multigraph) -> Result<ZetaReciprocal> {
    require_md2(g)?;
    let t = arc_matrix(g);
    let m = t.len();
    let d = t.iter().map(|r| r.iter().filter(|&&x| x != 0).count()).max().unwrap_or(1).max(1) as f64;
    let ln_fact = |k: usize| (1..=k).map(|i| (i as f64).ln()).sum::<f64>();
    let bound =
        (0..=m).map(|s| (ln_fact(m) - ln_fact(s) - ln_fact(m - s)) + 0.5 * s as f64 * d.ln()).fold(0.0f64, f64::max)
            / std::f64::consts::LN_2;
    let chi = charpoly_crt(&t, bound + 1.0);
    let mut poly: Vec<i128> =
        chi.iter().rev().map(|c| c.to_i128().ok_or(Error::Overflow("zeta reciprocal"))).collect::<Result<_>>()?;
    while poly.len() > 1 && poly.last() == Some(&0) {
        poly.pop();
    }
    Ok(ZetaReciprocal { poly, cycle_rank: validate(g).cycle_rank })
}
