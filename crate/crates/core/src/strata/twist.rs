use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cohomology::{cochain_cohomology, CohomologyGroup, Ring};
use super::complex::{identity_twists, CellRef, StratifiedComplex, StratumComplex};
use crate::error::{Error, Result};
use crate::exact::{identity, is_zero, kernel_basis, matmul, rank_q, to_q, transpose, zeros, IMatrix};

/// Inverse of an integer matrix that is invertible over the integers.
pub fn unimodular_inverse(m: &IMatrix) -> Result<IMatrix> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = to_q(m);
    let mut inv: Vec<Vec<BigRational>> = to_q(&identity(n));
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or_else(|| Error::NotInvertible("singular twist".into()))?;
        a.swap(c, p);
        inv.swap(c, p);
        let s = a[c][c].recip();
        for j in 0..n {
            a[c][j] = &a[c][j] * &s;
            inv[c][j] = &inv[c][j] * &s;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let x = &a[c][j] * &f;
                    a[r][j] = &a[r][j] - x;
                    let y = &inv[c][j] * &f;
                    inv[r][j] = &inv[r][j] - y;
                }
            }
        }
    }
    inv.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    if !x.is_integer() {
                        return Err(Error::NotInvertible("twist is not unimodular".into()));
                    }
                    x.to_integer().to_i128().ok_or(Error::Overflow("twist inverse"))
                })
                .collect()
        })
        .collect()
}

/// Re-index strata by sigma and conjugate each boundary by its chain map:
/// stratum `i` moves to position `sigma(i)` with `d'_k = t_{k-1} d_k t_k^-1`.
/// The result carries the identity permutation and identity twists. Glued
/// cells follow their stratum and must be carried to cells by the twist.
pub fn apply_twist(sc: &StratifiedComplex) -> Result<StratifiedComplex> {
    sc.check_twist()?;
    let n = sc.strata.len();
    let mut placed: Vec<Option<StratumComplex>> = vec![None; n];
    for (i, s) in sc.strata.iter().enumerate() {
        let tw = &sc.twists[i];
        let mut bds = Vec::new();
        for k in 1..s.cells.len() {
            let (a, b) = (s.cells[k - 1], s.cells[k]);
            let inv = unimodular_inverse(&tw[k])?;
            let left = matmul(&tw[k - 1], &s.boundary[k], a, a, b)?;
            bds.push((k, matmul(&left, &inv, a, b, b)?));
        }
        placed[sc.sigma[i]] = Some(StratumComplex::new(&s.name, s.cells.clone(), bds)?);
    }
    let strata: Vec<StratumComplex> = placed.into_iter().map(|s| s.expect("sigma is a bijection")).collect();
    let move_cell = |c: &CellRef| -> Result<CellRef> {
        let t = &sc.twists[c.stratum][c.degree];
        let col: Vec<i128> = t.iter().map(|row| row[c.cell]).collect();
        let hits: Vec<usize> = (0..col.len()).filter(|&r| col[r] != 0).collect();
        match hits.as_slice() {
            [r] if col[*r] == 1 => Ok(CellRef { stratum: sc.sigma[c.stratum], degree: c.degree, cell: *r }),
            _ => Err(Error::InvalidArgument(format!(
                "twist does not carry glued cell {}.{}.{} to a cell",
                sc.strata[c.stratum].name, c.degree, c.cell
            ))),
        }
    };
    let gluing = sc.gluing.iter().map(|(a, b)| Ok((move_cell(a)?, move_cell(b)?))).collect::<Result<Vec<_>>>()?;
    let twists = identity_twists(&strata);
    Ok(StratifiedComplex { sigma: (0..n).collect(), strata, gluing, twists })
}

/// `H^k` of the twisted complex: the conjugated block complex, with glued
/// cells identified.
pub fn twisted_cohomology(sc: &StratifiedComplex, k: usize, ring: Ring) -> Result<CohomologyGroup> {
    let tw = apply_twist(sc)?;
    let (b_k, n_prev, n_k) = tw.quotient_boundary(k)?;
    let (b_next, _, n_next) = tw.quotient_boundary(k + 1)?;
    if n_prev > 0 && n_next > 0 && !is_zero(&matmul(&b_k, &b_next, n_prev, n_k, n_next)?) {
        return Err(Error::NotCochainComplex(format!("twisted differential squares to a nonzero map in degree {k}")));
    }
    cochain_cohomology(&b_k, &b_next, (n_prev, n_k, n_next), ring)
}

/// Total degree-`k` chain map: block `(sigma(i), i)` is `twists[i][k]`.
fn total_twist(sc: &StratifiedComplex, k: usize) -> IMatrix {
    let (off, total) = sc.offsets(k);
    let mut m = zeros(total, total);
    for (i, s) in sc.strata.iter().enumerate() {
        if k >= s.cells.len() {
            continue;
        }
        let (r0, c0) = (off[sc.sigma[i]], off[i]);
        for (r, row) in sc.twists[i][k].iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m[r0 + r][c0 + c] = v;
            }
        }
    }
    m
}

/// Dimension of the subspace of `H^k` (rational coefficients, glued
/// complex) fixed by the pull-back of the twist.
pub fn invariant_classes(sc: &StratifiedComplex, k: usize) -> Result<usize> {
    sc.check_twist()?;
    let (cls, n_cls) = sc.classes(k);
    let t = total_twist(sc, k);
    let total = cls.len();
    // Pull-back of class indicator cochains: (T^t P)[c][q] = sum over cells r of class q of T[r][c].
    let mut pulled = zeros(total, n_cls);
    for (r, row) in t.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            pulled[c][cls[r]] += v;
        }
    }
    let mut action = vec![None::<Vec<i128>>; n_cls];
    for c in 0..total {
        match &action[cls[c]] {
            None => action[cls[c]] = Some(pulled[c].clone()),
            Some(row) if *row == pulled[c] => {}
            Some(_) => return Err(Error::NotChainMap("twist does not preserve the gluing".into())),
        }
    }
    // action[q][q'] = value of (T* e_q') on class q
    let a: IMatrix = action.into_iter().map(|r| r.unwrap_or_else(|| vec![0; n_cls])).collect();

    let (b_k, n_prev, _) = sc.quotient_boundary(k)?;
    let (b_next, _, n_next) = sc.quotient_boundary(k + 1)?;
    let d_k = transpose(&b_next, n_cls, n_next);
    let z = if n_next == 0 {
        (0..n_cls)
            .map(|i| (0..n_cls).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect()
    } else {
        kernel_basis(&to_q(&d_k), n_cls)
    };
    let aq = to_q(&a);
    // Spanning set of (A - I) Z + B, as rows.
    let mut rows: Vec<Vec<BigRational>> = z
        .iter()
        .map(|v| {
            (0..n_cls)
                .map(|i| {
                    let mut s = -v[i].clone();
                    for j in 0..n_cls {
                        s += &aq[i][j] * &v[j];
                    }
                    s
                })
                .collect()
        })
        .collect();
    // B: image of d^{k-1} = b_k^t, columns are rows of b_k.
    for row in b_k.iter().take(n_prev) {
        rows.push(row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect());
    }
    let r = if rows.is_empty() { 0 } else { rank_q(&rows, n_cls) };
    Ok(z.len() - r)
}
