//! Smith normal form over the integers.

use crate::error::{Error, Result};

fn ovf() -> Error {
    Error::Overflow("Smith normal form")
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix
/// (all positive). The rank is the number of returned factors.
///
/// Elimination always pivots on the entry of least magnitude in the active
/// block, which keeps intermediate growth small.
pub fn smith_invariants(m: &[Vec<i128>], rows: usize, cols: usize) -> Result<Vec<i128>> {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r[..cols].to_vec()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // pivot: smallest nonzero |entry| in the active block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].unsigned_abs() < a[bi][bj].unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] = a[i][j].checked_sub(q.checked_mul(a[t][j]).ok_or_else(ovf)?).ok_or_else(ovf)?;
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] = row[j].checked_sub(q.checked_mul(row[t]).ok_or_else(ovf)?).ok_or_else(ovf)?;
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility of the remaining block
                let mut fix = None;
                'scan: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if a[i][j] % p != 0 {
                            fix = Some(i);
                            break 'scan;
                        }
                    }
                }
                match fix {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] = a[t][j].checked_add(a[i][j]).ok_or_else(ovf)?;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t onto the pivot
            let mut bi = t;
            let mut bj = t;
            let mut bv = a[t][t].unsigned_abs();
            for i in t + 1..rows {
                if a[i][t] != 0 && a[i][t].unsigned_abs() < bv {
                    bv = a[i][t].unsigned_abs();
                    bi = i;
                    bj = t;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 && a[t][j].unsigned_abs() < bv {
                    bv = a[t][j].unsigned_abs();
                    bi = t;
                    bj = j;
                }
            }
            if bi != t {
                a.swap(t, bi);
            }
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Ok(diag)
}
