use std::fmt;

use super::complex::{StratifiedComplex, StratumComplex};
use crate::error::{Error, Result};
use crate::exact::{is_zero, matmul, rank_q, smith_invariants, to_q, transpose, IMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    Rational,
    Integer,
}

/// `Z^rank` plus torsion `Z/t_1 + ... + Z/t_m` with `t_1 | t_2 | ...`.
/// Over the rationals `torsion` is always empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyGroup {
    pub rank: usize,
    pub torsion: Vec<i128>,
}

impl CohomologyGroup {
    /// Direct sum with torsion brought back to invariant-factor form.
    pub fn direct_sum(groups: &[CohomologyGroup]) -> Result<Self> {
        let rank = groups.iter().map(|g| g.rank).sum();
        let all: Vec<i128> = groups.iter().flat_map(|g| g.torsion.iter().copied()).collect();
        let n = all.len();
        let mut diag = vec![vec![0i128; n]; n];
        for (i, &t) in all.iter().enumerate() {
            diag[i][i] = t;
        }
        let torsion = smith_invariants(&diag, n, n)?.into_iter().filter(|&t| t > 1).collect();
        Ok(Self { rank, torsion })
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} torsion", self.rank)?;
        if self.torsion.is_empty() {
            return write!(f, " -");
        }
        for t in &self.torsion {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

/// `H^k` of a cochain complex given by its boundary matrices
/// `b_k` (`n_prev x n_k`) and `b_next` (`n_k x n_next`); the cochain
/// differentials are their transposes.
pub fn cochain_cohomology(
    b_k: &IMatrix,
    b_next: &IMatrix,
    (n_prev, n_k, n_next): (usize, usize, usize),
    ring: Ring,
) -> Result<CohomologyGroup> {
    let d_prev = transpose(b_k, n_prev, n_k);
    let d_k = transpose(b_next, n_k, n_next);
    if n_prev > 0 && n_next > 0 {
        let sq = matmul(&d_k, &d_prev, n_next, n_k, n_prev)?;
        if !is_zero(&sq) {
            return Err(Error::NotCochainComplex("d d != 0".into()));
        }
    }
    let rank_k = if n_next == 0 || n_k == 0 { 0 } else { rank_q(&to_q(&d_k), n_k) };
    match ring {
        Ring::Rational => {
            let rank_prev = if n_prev == 0 || n_k == 0 { 0 } else { rank_q(&to_q(&d_prev), n_prev) };
            Ok(CohomologyGroup { rank: n_k - rank_k - rank_prev, torsion: Vec::new() })
        }
        Ring::Integer => {
            let inv = smith_invariants(&d_prev, n_k, n_prev)?;
            Ok(CohomologyGroup {
                rank: n_k - rank_k - inv.len(),
                torsion: inv.into_iter().filter(|&t| t > 1).collect(),
            })
        }
    }
}

/// `H^k` of a single stratum.
pub fn cohomology_stratum(s: &StratumComplex, k: usize, ring: Ring) -> Result<CohomologyGroup> {
    if k > s.top() {
        return Err(Error::InvalidArgument(format!("degree {k} exceeds top degree {}", s.top())));
    }
    let dims = (s.count(k.wrapping_sub(1)), s.count(k), s.count(k + 1));
    cochain_cohomology(&s.boundary(k), &s.boundary(k + 1), dims, ring)
}

/// `H^k` of the glued, untwisted complex.
pub fn cohomology_glued(sc: &StratifiedComplex, k: usize, ring: Ring) -> Result<CohomologyGroup> {
    let (b_k, n_prev, n_k) = sc.quotient_boundary(k)?;
    let (b_next, _, n_next) = sc.quotient_boundary(k + 1)?;
    cochain_cohomology(&b_k, &b_next, (n_prev, n_k, n_next), ring)
}
