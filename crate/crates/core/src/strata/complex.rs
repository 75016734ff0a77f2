use crate::error::{Error, Result};
use crate::exact::{is_zero, matmul, zeros, IMatrix};

/// Finite chain complex of free abelian groups.
///
/// `cells[k]` is the rank of `C_k`; `boundary[k]` for `k >= 1` is the
/// `cells[k-1] x cells[k]` matrix of `d_k`. `boundary[0]` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumComplex {
    pub name: String,
    pub cells: Vec<usize>,
    pub boundary: Vec<IMatrix>,
}

impl StratumComplex {
    /// Build and check shapes and `d_{k-1} d_k = 0`. Missing boundaries are
    /// zero.
    pub fn new(name: &str, cells: Vec<usize>, boundaries: Vec<(usize, IMatrix)>) -> Result<Self> {
        if name.is_empty() || name.contains(['.', ' ']) {
            return Err(Error::InvalidArgument(format!("bad stratum name `{name}`")));
        }
        if cells.is_empty() {
            return Err(Error::InvalidArgument(format!("stratum `{name}` has no cells")));
        }
        let mut boundary: Vec<IMatrix> =
            (0..cells.len()).map(|k| if k == 0 { Vec::new() } else { zeros(cells[k - 1], cells[k]) }).collect();
        for (k, m) in boundaries {
            if k == 0 || k >= cells.len() {
                return Err(Error::ShapeMismatch(format!("stratum `{name}`: no boundary in degree {k}")));
            }
            if m.len() != cells[k - 1] || m.iter().any(|r| r.len() != cells[k]) {
                return Err(Error::ShapeMismatch(format!(
                    "stratum `{name}`: boundary {k} must be {} x {}",
                    cells[k - 1],
                    cells[k]
                )));
            }
            boundary[k] = m;
        }
        let s = Self { name: name.to_string(), cells, boundary };
        s.check_nilpotent()?;
        Ok(s)
    }

    pub fn top(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn count(&self, k: usize) -> usize {
        self.cells.get(k).copied().unwrap_or(0)
    }

    /// `d_k`, zero outside the stored range.
    pub fn boundary(&self, k: usize) -> IMatrix {
        if k >= 1 && k < self.cells.len() {
            self.boundary[k].clone()
        } else {
            zeros(self.count(k.wrapping_sub(1)), self.count(k))
        }
    }

    fn check_nilpotent(&self) -> Result<()> {
        for k in 2..self.cells.len() {
            let p =
                matmul(&self.boundary[k - 1], &self.boundary[k], self.cells[k - 2], self.cells[k - 1], self.cells[k])?;
            if !is_zero(&p) {
                return Err(Error::BoundaryNotNilpotent(format!("stratum `{}` in degree {k}", self.name)));
            }
        }
        Ok(())
    }
}

/// A cell of a stratum: `(stratum index, degree, cell index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellRef {
    pub stratum: usize,
    pub degree: usize,
    pub cell: usize,
}

/// Strata with gluing data, a permutation of strata and chain maps.
///
/// `twists[i][k]` is the `cells_k(sigma(i)) x cells_k(i)` matrix carrying
/// `C_k` of stratum `i` to `C_k` of stratum `sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratifiedComplex {
    pub strata: Vec<StratumComplex>,
    pub gluing: Vec<(CellRef, CellRef)>,
    pub sigma: Vec<usize>,
    pub twists: Vec<Vec<IMatrix>>,
}

pub(crate) fn identity_twists(strata: &[StratumComplex]) -> Vec<Vec<IMatrix>> {
    strata.iter().map(|s| s.cells.iter().map(|&n| crate::exact::identity(n)).collect()).collect()
}

impl StratifiedComplex {
    /// Untwisted complex: identity permutation and identity chain maps.
    pub fn new(strata: Vec<StratumComplex>, gluing: Vec<(CellRef, CellRef)>) -> Result<Self> {
        let n = strata.len();
        let twists = identity_twists(&strata);
        let sc = Self { strata, gluing, sigma: (0..n).collect(), twists };
        sc.check_gluing()?;
        Ok(sc)
    }

    pub fn with_twist(mut self, sigma: Vec<usize>, twists: Vec<Vec<IMatrix>>) -> Result<Self> {
        self.sigma = sigma;
        self.twists = twists;
        self.check_sigma()?;
        Ok(self)
    }

    pub fn stratum_index(&self, name: &str) -> Result<usize> {
        self.strata
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| Error::ReferenceError(format!("unknown stratum `{name}`")))
    }

    /// Top degree over all strata.
    pub fn top(&self) -> usize {
        self.strata.iter().map(StratumComplex::top).max().unwrap_or(0)
    }

    pub(crate) fn check_sigma(&self) -> Result<()> {
        let n = self.strata.len();
        let mut seen = vec![false; n];
        if self.sigma.len() != n {
            return Err(Error::InvalidArgument("sigma must list every stratum".into()));
        }
        for &j in &self.sigma {
            if j >= n || seen[j] {
                return Err(Error::InvalidArgument("sigma is not a permutation".into()));
            }
            seen[j] = true;
        }
        if self.twists.len() != n {
            return Err(Error::ShapeMismatch("one twist per stratum required".into()));
        }
        Ok(())
    }

    pub(crate) fn check_gluing(&self) -> Result<()> {
        for (a, b) in &self.gluing {
            for c in [a, b] {
                let s = self
                    .strata
                    .get(c.stratum)
                    .ok_or_else(|| Error::ReferenceError(format!("stratum index {}", c.stratum)))?;
                if c.cell >= s.count(c.degree) {
                    return Err(Error::ReferenceError(format!("{}.{}.{} does not exist", s.name, c.degree, c.cell)));
                }
            }
            if a.degree != b.degree {
                return Err(Error::InvalidArgument("glued cells must have equal degree".into()));
            }
        }
        Ok(())
    }

    /// Shapes and chain-map condition `t_{k-1} d_k = d'_k t_k` of every twist.
    pub fn check_twist(&self) -> Result<()> {
        self.check_sigma()?;
        for (i, s) in self.strata.iter().enumerate() {
            let t = &self.strata[self.sigma[i]];
            if s.cells != t.cells {
                return Err(Error::ShapeMismatch(format!(
                    "stratum `{}` has cells {:?} but its image `{}` has {:?}",
                    s.name, s.cells, t.name, t.cells
                )));
            }
            let tw = &self.twists[i];
            if tw.len() != s.cells.len() {
                return Err(Error::ShapeMismatch(format!("twist of `{}` needs {} blocks", s.name, s.cells.len())));
            }
            for (k, m) in tw.iter().enumerate() {
                let n = s.cells[k];
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    return Err(Error::ShapeMismatch(format!("twist block {k} of `{}` must be {n} x {n}", s.name)));
                }
            }
            for k in 1..s.cells.len() {
                let (a, b) = (s.cells[k - 1], s.cells[k]);
                let lhs = matmul(&tw[k - 1], &s.boundary[k], a, a, b)?;
                let rhs = matmul(&t.boundary[k], &tw[k], a, b, b)?;
                if lhs != rhs {
                    return Err(Error::NotChainMap(format!("twist of `{}` in degree {k}", s.name)));
                }
            }
        }
        Ok(())
    }

    /// Offset of each stratum's cells in the total degree-`k` basis.
    pub(crate) fn offsets(&self, k: usize) -> (Vec<usize>, usize) {
        let mut off = Vec::with_capacity(self.strata.len());
        let mut total = 0;
        for s in &self.strata {
            off.push(total);
            total += s.count(k);
        }
        (off, total)
    }

    /// Block-diagonal total boundary `d_k`.
    pub(crate) fn total_boundary(&self, k: usize) -> IMatrix {
        let (ro, rows) = self.offsets(k.wrapping_sub(1));
        let (co, cols) = self.offsets(k);
        let rows = if k == 0 { 0 } else { rows };
        let mut m = zeros(rows, cols);
        if k == 0 {
            return m;
        }
        for (i, s) in self.strata.iter().enumerate() {
            let b = s.boundary(k);
            for (r, row) in b.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    m[ro[i] + r][co[i] + c] = v;
                }
            }
        }
        m
    }

    /// Class of every degree-`k` cell under the gluing, numbered by first
    /// occurrence; returns (class of each total cell, class count).
    pub(crate) fn classes(&self, k: usize) -> (Vec<usize>, usize) {
        let (off, total) = self.offsets(k);
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], a: usize) -> usize {
            let mut r = a;
            while p[r] != r {
                r = p[r];
            }
            p[a] = r;
            r
        }
        for (a, b) in self.gluing.iter().filter(|(a, _)| a.degree == k) {
            let x = find(&mut parent, off[a.stratum] + a.cell);
            let y = find(&mut parent, off[b.stratum] + b.cell);
            parent[x.max(y)] = x.min(y);
        }
        let mut label = vec![usize::MAX; total];
        let mut out = vec![0; total];
        let mut n = 0;
        for c in 0..total {
            let r = find(&mut parent, c);
            if label[r] == usize::MAX {
                label[r] = n;
                n += 1;
            }
            out[c] = label[r];
        }
        (out, n)
    }

    /// Boundary of the quotient complex in class bases.
    ///
    /// Fails with `NotCochainComplex` when glued cells have boundaries that
    /// differ after identification.
    pub(crate) fn quotient_boundary(&self, k: usize) -> Result<(IMatrix, usize, usize)> {
        let (cls_hi, n_hi) = self.classes(k);
        if k == 0 {
            return Ok((Vec::new(), 0, n_hi));
        }
        let (cls_lo, n_lo) = self.classes(k - 1);
        let d = self.total_boundary(k);
        let mut out = zeros(n_lo, n_hi);
        let mut set = vec![false; n_hi];
        for c in 0..cls_hi.len() {
            let mut col = vec![0i128; n_lo];
            for (r, row) in d.iter().enumerate() {
                col[cls_lo[r]] += row[c];
            }
            let q = cls_hi[c];
            if !set[q] {
                for r in 0..n_lo {
                    out[r][q] = col[r];
                }
                set[q] = true;
            } else if (0..n_lo).any(|r| out[r][q] != col[r]) {
                return Err(Error::NotCochainComplex(format!("glued cells in degree {k} have different boundaries")));
            }
        }
        Ok((out, n_lo, n_hi))
    }
}
