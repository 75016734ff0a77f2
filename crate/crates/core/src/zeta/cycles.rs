use crate::error::{Error, Result};
use crate::graph::{build_arc_system, validate, ArcSystem, Multigraph};

pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Rotation class of a primitive, non-backtracking, tail-less closed walk.
///
/// `rep` lists arc ids (see [`ArcSystem`]) and is the lexicographically least
/// rotation of the orbit. Orientation is not quotiented out: a cycle and its
/// reversal are different classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleClass {
    pub rep: Vec<usize>,
    pub length: usize,
    pub primitive: bool,
}

impl CycleClass {
    /// Class of the closed walk `walk`, rotated to its least representative.
    pub fn from_walk(walk: &[usize]) -> Self {
        let n = walk.len();
        let rep =
            (0..n.max(1)).map(|s| (0..n).map(|i| walk[(i + s) % n]).collect::<Vec<_>>()).min().unwrap_or_default();
        let primitive = is_primitive(&rep);
        Self { rep, length: n, primitive }
    }

    /// Checks closure, non-backtracking, tail-lessness, primitivity and
    /// rotation-minimality against `arcs`.
    pub fn is_admissible(&self, arcs: &ArcSystem) -> bool {
        let n = self.rep.len();
        if n == 0 || n != self.length {
            return false;
        }
        let closed_nb = (0..n).all(|i| arcs.follows(self.rep[i], self.rep[(i + 1) % n]));
        closed_nb && is_primitive(&self.rep) && is_least_rotation(&self.rep)
    }
}

pub(crate) fn is_primitive(w: &[usize]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| (0..n).any(|i| w[i] != w[(i + d) % n]))
}

pub(crate) fn is_least_rotation(w: &[usize]) -> bool {
    let n = w.len();
    (1..n).all(|s| {
        for i in 0..n {
            let a = w[i];
            let b = w[(i + s) % n];
            if a != b {
                return a < b;
            }
        }
        true
    })
}

pub fn enumerate_cycles(g: &Multigraph, max_len: usize) -> Result<Vec<CycleClass>> {
    enumerate_cycles_with_cap(g, max_len, DEFAULT_CLASS_CAP)
}

/// All primitive classes of length `<= max_len`, ordered by length then
/// representative.
///
/// A depth-first search from every start arc `s` that only uses arcs `>= s`;
/// the least rotation of any class starts at its minimum arc, so each class
/// is met exactly once when its representative is generated.
pub fn enumerate_cycles_with_cap(g: &Multigraph, max_len: usize, cap: usize) -> Result<Vec<CycleClass>> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max length must be >= 1".into()));
    }
    if !validate(g).connected {
        return Err(Error::NotConnected);
    }
    let arcs = build_arc_system(g);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    for s in 0..arcs.len() {
        path.clear();
        path.push(s);
        dfs(&arcs, s, max_len, &mut path, &mut out, cap)?;
    }
    out.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.rep.cmp(&b.rep)));
    Ok(out)
}

fn dfs(
    arcs: &ArcSystem,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<CycleClass>,
    cap: usize,
) -> Result<()> {
    let last = *path.last().unwrap();
    if arcs.follows(last, start) && is_least_rotation(path) && is_primitive(path) {
        if out.len() >= cap {
            return Err(Error::CombinatorialBlowup { cap });
        }
        out.push(CycleClass { rep: path.clone(), length: path.len(), primitive: true });
    }
    if path.len() == max_len {
        return Ok(());
    }
    for &b in arcs.successors(last) {
        if b < start {
            continue;
        }
        path.push(b);
        dfs(arcs, start, max_len, path, out, cap)?;
        path.pop();
    }
    Ok(())
}
