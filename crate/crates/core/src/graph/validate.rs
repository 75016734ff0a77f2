use super::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub connected: bool,
    pub min_degree: usize,
    pub md2: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub cycle_rank: i64,
}

pub fn validate(g: &Multigraph) -> ValidationReport {
    let n = g.vertex_count();
    let deg = g.degrees();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.endpoints.0].push(e.endpoints.1);
        adj[e.endpoints.1].push(e.endpoints.0);
    }
    let connected = if n == 0 {
        true
    } else {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    };
    let min_degree = deg.iter().copied().min().unwrap_or(0);
    ValidationReport {
        connected,
        min_degree,
        md2: n > 0 && min_degree >= 2,
        vertex_count: n,
        edge_count: g.edge_count(),
        cycle_rank: g.edge_count() as i64 - n as i64 + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::multigraph::fixtures;

    #[test]
    fn triangle_report() {
        let r = validate(&fixtures::cycle(3));
        assert!(r.connected && r.md2);
        assert_eq!((r.min_degree, r.cycle_rank), (2, 1));
    }

    #[test]
    fn disjoint_edges_are_disconnected() {
        let mut g = Multigraph::new();
        for v in ["a", "b", "c", "d"] {
            g.add_vertex(v, None).unwrap();
        }
        g.add_edge("e1", "a", "b", None).unwrap();
        g.add_edge("e2", "c", "d", None).unwrap();
        let r = validate(&g);
        assert!(!r.connected);
        assert!(!r.md2);
    }
}
