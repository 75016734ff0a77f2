use super::cycles::CycleClass;
use super::require_md2;
use crate::error::{Error, Result};
use crate::graph::{build_arc_system, ArcSystem, Multigraph};

/// Truncated power series of `Z(u)`.
///
/// `counts[n - 1]` is `N_n` for `n = 1..=max_length`; `coeffs[k]` is the
/// coefficient of `u^k` for `k = 0..=max_length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaSeries {
    pub max_length: usize,
    pub counts: Vec<i128>,
    pub coeffs: Vec<i128>,
}

fn ovf() -> Error {
    Error::Overflow("zeta series")
}

/// Integer coefficients of `exp(sum_{n>=1} counts[n-1] u^n / n)` up to `u^L`.
pub fn exp_series(counts: &[i128]) -> Result<Vec<i128>> {
    let l = counts.len();
    let mut c = vec![0i128; l + 1];
    c[0] = 1;
    for n in 1..=l {
        let mut acc: i128 = 0;
        for k in 1..=n {
            let t = counts[k - 1].checked_mul(c[n - k]).ok_or_else(ovf)?;
            acc = acc.checked_add(t).ok_or_else(ovf)?;
        }
        if acc % n as i128 != 0 {
            return Err(Error::InvalidArgument(format!(
                "walk counts do not exponentiate to an integer series at degree {n}"
            )));
        }
        c[n] = acc / n as i128;
    }
    Ok(c)
}

/// Counts closed non-backtracking tail-less walks with a marked start arc,
/// by dynamic programming over the last arc of walks beginning at each arc.
fn closed_walk_counts(arcs: &ArcSystem, max_len: usize) -> Result<Vec<i128>> {
    let m = arcs.len();
    let mut counts = vec![0i128; max_len];
    let mut cur = vec![0i128; m];
    let mut next = vec![0i128; m];
    for s in 0..m {
        cur.iter_mut().for_each(|x| *x = 0);
        cur[s] = 1;
        for n in 1..=max_len {
            for (a, &w) in cur.iter().enumerate() {
                if w != 0 && arcs.follows(a, s) {
                    counts[n - 1] = counts[n - 1].checked_add(w).ok_or_else(ovf)?;
                }
            }
            if n == max_len {
                break;
            }
            next.iter_mut().for_each(|x| *x = 0);
            for (a, &w) in cur.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                for &b in arcs.successors(a) {
                    next[b] = next[b].checked_add(w).ok_or_else(ovf)?;
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
    }
    Ok(counts)
}

pub fn zeta_series(g: &Multigraph, max_len: usize) -> Result<ZetaSeries> {
    require_md2(g)?;
    if max_len == 0 {
        return Err(Error::InvalidArgument("max length must be >= 1".into()));
    }
    let arcs = build_arc_system(g);
    let counts = closed_walk_counts(&arcs, max_len)?;
    let coeffs = exp_series(&counts)?;
    Ok(ZetaSeries { max_length: max_len, counts, coeffs })
}

/// Expands `prod_C (1 - u^l(C))^{-1}` through degree `max_len`. The walk
/// counts are derived from the class lengths: `N_n = sum_{l(C) | n} l(C)`.
pub fn zeta_euler_truncated(classes: &[CycleClass], max_len: usize) -> Result<ZetaSeries> {
    let mut coeffs = vec![0i128; max_len + 1];
    coeffs[0] = 1;
    let mut counts = vec![0i128; max_len];
    for c in classes.iter().filter(|c| c.length >= 1 && c.length <= max_len) {
        let l = c.length;
        for k in l..=max_len {
            coeffs[k] = coeffs[k].checked_add(coeffs[k - l]).ok_or_else(ovf)?;
        }
        for n in (l..=max_len).step_by(l) {
            counts[n - 1] += l as i128;
        }
    }
    Ok(ZetaSeries { max_length: max_len, counts, coeffs })
}

/// [`zeta_euler_truncated`] plus a completeness check of `classes` against
/// `trace(T^n)` of the arc operator of `g`.
pub fn zeta_euler_checked(g: &Multigraph, classes: &[CycleClass], max_len: usize) -> Result<ZetaSeries> {
    let s = zeta_euler_truncated(classes, max_len)?;
    let traces = trace_counts(g, max_len)?;
    if let Some(n) = (0..max_len).find(|&i| traces[i] != s.counts[i]) {
        return Err(Error::IncompleteClasses { length: n + 1 });
    }
    Ok(s)
}

/// Dense non-backtracking arc operator: `T[a][b] = 1` iff `b` may follow `a`.
pub fn arc_matrix(g: &Multigraph) -> Vec<Vec<i128>> {
    let arcs = build_arc_system(g);
    let m = arcs.len();
    let mut t = vec![vec![0i128; m]; m];
    for (a, row) in t.iter_mut().enumerate() {
        for &b in arcs.successors(a) {
            row[b] = 1;
        }
    }
    t
}

/// `trace(T^n)` for `n = 1..=max_len` by repeated matrix multiplication.
pub fn trace_counts(g: &Multigraph, max_len: usize) -> Result<Vec<i128>> {
    let t = arc_matrix(g);
    let m = t.len();
    let mut p = t.clone();
    let mut out = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        out.push((0..m).try_fold(0i128, |acc, i| acc.checked_add(p[i][i]).ok_or_else(ovf))?);
        if n < max_len {
            p = crate::exact::matmul(&p, &t, m, m, m)?;
        }
    }
    Ok(out)
}

/// Power-series reciprocal of an integer polynomial with constant term 1,
/// through degree `max_len`.
pub fn reciprocal_series(poly: &[i128], max_len: usize) -> Result<Vec<i128>> {
    if poly.first() != Some(&1) {
        return Err(Error::InvalidArgument("reciprocal needs constant term 1".into()));
    }
    let mut c = vec![0i128; max_len + 1];
    c[0] = 1;
    for n in 1..=max_len {
        let mut acc = 0i128;
        for k in 1..=n.min(poly.len() - 1) {
            let t = poly[k].checked_mul(c[n - k]).ok_or_else(ovf)?;
            acc = acc.checked_sub(t).ok_or_else(ovf)?;
        }
        c[n] = acc;
    }
    Ok(c)
}
