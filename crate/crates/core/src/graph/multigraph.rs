use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{self, Point3};

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub id: String,
    pub coords: Option<Point3>,
}

/// Edge record. `polyline`, when present, is the full embedded path from the
/// first endpoint to the second, endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub id: String,
    pub endpoints: (usize, usize),
    pub polyline: Option<Vec<Point3>>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }
}

/// Undirected multigraph; parallel edges and self-loops allowed.
///
/// Vertices and edges keep insertion order. Values are immutable once built
/// apart from the `add_*` constructors.
#[derive(Debug, Clone, Default)]
pub struct Multigraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_ids: HashMap<String, usize>,
}

fn check_token(id: &str) -> Result<()> {
    if id.is_empty() || id.chars().any(char::is_whitespace) {
        return Err(Error::InvalidArgument(format!("bad id token `{id}`")));
    }
    Ok(())
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: &str, coords: Option<Point3>) -> Result<usize> {
        check_token(id)?;
        if self.vertex_index.contains_key(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        if let Some(first) = self.vertices.first() {
            if first.coords.is_some() != coords.is_some() {
                return Err(Error::MixedEmbedding(id.to_string()));
            }
        }
        let idx = self.vertices.len();
        self.vertices.push(Vertex { id: id.to_string(), coords });
        self.vertex_index.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn add_edge(&mut self, id: &str, a: &str, b: &str, polyline: Option<Vec<Point3>>) -> Result<usize> {
        let ia = self.vertex_id(a)?;
        let ib = self.vertex_id(b)?;
        self.add_edge_idx(id, ia, ib, polyline)
    }

    pub fn add_edge_idx(&mut self, id: &str, a: usize, b: usize, polyline: Option<Vec<Point3>>) -> Result<usize> {
        check_token(id)?;
        if self.edge_ids.contains_key(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        for v in [a, b] {
            if v >= self.vertices.len() {
                return Err(Error::ReferenceError(format!("#{v}")));
            }
        }
        let idx = self.edges.len();
        self.edges.push(Edge { id: id.to_string(), endpoints: (a, b), polyline });
        self.edge_ids.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn vertex_id(&self, id: &str) -> Result<usize> {
        self.vertex_index.get(id).copied().ok_or_else(|| Error::ReferenceError(id.to_string()))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_embedded(&self) -> bool {
        self.vertices.first().is_some_and(|v| v.coords.is_some())
    }

    pub fn coords(&self, v: usize) -> Result<Point3> {
        self.vertices[v].coords.ok_or(Error::MissingEmbedding)
    }

    /// Degrees with self-loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.endpoints.0] += 1;
            deg[e.endpoints.1] += 1;
        }
        deg
    }

    /// Embedded path of edge `e`: its polyline, or the straight segment
    /// between its endpoints.
    pub fn edge_path(&self, e: usize) -> Result<Vec<Point3>> {
        let edge = &self.edges[e];
        match &edge.polyline {
            Some(p) => Ok(p.clone()),
            None => Ok(vec![self.coords(edge.endpoints.0)?, self.coords(edge.endpoints.1)?]),
        }
    }

    /// Structural equality: same ids in the same order, same unordered
    /// endpoint pairs, and coordinates/polylines within `tol`.
    pub fn structurally_equal(&self, other: &Multigraph, tol: f64) -> bool {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let close = |a: &Point3, b: &Point3| geom::dist(*a, *b) <= tol;
        for (a, b) in self.vertices.iter().zip(&other.vertices) {
            if a.id != b.id {
                return false;
            }
            match (&a.coords, &b.coords) {
                (None, None) => {}
                (Some(p), Some(q)) if close(p, q) => {}
                _ => return false,
            }
        }
        for (i, (a, b)) in self.edges.iter().zip(&other.edges).enumerate() {
            if a.id != b.id {
                return false;
            }
            let ids =
                |g: &Multigraph, e: &Edge| (g.vertices[e.endpoints.0].id.clone(), g.vertices[e.endpoints.1].id.clone());
            let (a0, a1) = ids(self, a);
            let (b0, b1) = ids(other, b);
            let same = (a0 == b0 && a1 == b1, a0 == b1 && a1 == b0);
            if !same.0 && !same.1 {
                return false;
            }
            if self.is_embedded() {
                let (Ok(pa), Ok(pb)) = (self.edge_path(i), other.edge_path(i)) else {
                    return false;
                };
                if pa.len() != pb.len() {
                    return false;
                }
                let fwd = pa.iter().zip(&pb).all(|(p, q)| close(p, q));
                let rev = pa.iter().zip(pb.iter().rev()).all(|(p, q)| close(p, q));
                if !fwd && !rev {
                    return false;
                }
            }
        }
        true
    }
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

/// Convenience constructors for small combinatorial fixtures.
pub mod fixtures {
    use super::Multigraph;

    /// Cycle graph on `n` vertices `v0..v{n-1}`.
    pub fn cycle(n: usize) -> Multigraph {
        let mut g = Multigraph::new();
        for i in 0..n {
            g.add_vertex(&format!("v{i}"), None).unwrap();
        }
        for i in 0..n {
            g.add_edge_idx(&format!("e{i}"), i, (i + 1) % n, None).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::new();
        for i in 0..n {
            g.add_vertex(&format!("v{i}"), None).unwrap();
        }
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge_idx(&format!("e{k}"), i, j, None).unwrap();
                k += 1;
            }
        }
        g
    }

    /// One vertex carrying `loops` self-loops.
    pub fn bouquet(loops: usize) -> Multigraph {
        let mut g = Multigraph::new();
        g.add_vertex("v0", None).unwrap();
        for i in 0..loops {
            g.add_edge_idx(&format!("e{i}"), 0, 0, None).unwrap();
        }
        g
    }
}
