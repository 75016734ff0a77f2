use super::Multigraph;

/// Directed arc doubling of a multigraph.
///
/// Arc `2e` runs along edge `e` from its first to its second endpoint and
/// arc `2e + 1` is its reversal, so `inverse(a) == a ^ 1`. A self-loop gives
/// two distinct mutually inverse arcs, each of which may follow itself.
#[derive(Debug, Clone)]
pub struct ArcSystem {
    tail: Vec<usize>,
    head: Vec<usize>,
    succ: Vec<Vec<usize>>,
}

impl ArcSystem {
    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        a ^ 1
    }

    #[inline]
    pub fn edge(&self, a: usize) -> usize {
        a >> 1
    }

    #[inline]
    pub fn tail(&self, a: usize) -> usize {
        self.tail[a]
    }

    #[inline]
    pub fn head(&self, a: usize) -> usize {
        self.head[a]
    }

    /// Non-backtracking successors of `a`, in increasing arc order.
    #[inline]
    pub fn successors(&self, a: usize) -> &[usize] {
        &self.succ[a]
    }

    /// `true` when `b` may follow `a` in a non-backtracking walk.
    #[inline]
    pub fn follows(&self, a: usize, b: usize) -> bool {
        self.head[a] == self.tail[b] && b != (a ^ 1)
    }
}

pub fn build_arc_system(g: &Multigraph) -> ArcSystem {
    let m = g.edge_count();
    let mut tail = Vec::with_capacity(2 * m);
    let mut head = Vec::with_capacity(2 * m);
    for e in g.edges() {
        let (u, v) = e.endpoints;
        tail.push(u);
        head.push(v);
        tail.push(v);
        head.push(u);
    }
    let mut out = vec![Vec::new(); g.vertex_count()];
    for (a, &t) in tail.iter().enumerate() {
        out[t].push(a);
    }
    let succ = (0..2 * m).map(|a| out[head[a]].iter().copied().filter(|&b| b != (a ^ 1)).collect()).collect();
    ArcSystem { tail, head, succ }
}
