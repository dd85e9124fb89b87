//! Dual graph and the component/point bipartite graph `Γ_X` of a reduced
//! configuration, with their first Betti numbers.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{reduce, CurveConfiguration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Component,
    Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    pub kind: VertexKind,
}

/// Undirected multigraph; parallel edges and self-loops are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph construction needs a reduced configuration")]
    NotReduced,
}

impl Multigraph {
    pub fn with_vertices(n: usize) -> Self {
        Multigraph {
            vertices: (0..n)
                .map(|i| Vertex {
                    label: i.to_string(),
                    kind: VertexKind::Component,
                })
                .collect(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, kind: VertexKind) -> usize {
        self.vertices.push(Vertex {
            label: label.into(),
            kind,
        });
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(
            a < self.vertices.len() && b < self.vertices.len(),
            "edge endpoint out of range"
        );
        self.edges.push((a, b));
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Degree with self-loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Symmetric edge-count matrix; a self-loop adds 2 on the diagonal.
    pub fn adjacency_counts(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut adj = vec![vec![0; n]; n];
        for &(a, b) in &self.edges {
            adj[a][b] += 1;
            adj[b][a] += 1;
        }
        adj
    }

    pub fn connected_components(&self) -> usize {
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut count = n;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    /// Plain-text edge list: one `label label` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{} {}", self.vertices[a].label, self.vertices[b].label);
        }
        out
    }
}

/// One vertex per component, one edge per incident pair at each point, and a
/// self-loop for each intrinsic node.
pub fn dual_graph(config: &CurveConfiguration) -> Result<Multigraph, GraphError> {
    if !config.is_reduced() {
        return Err(GraphError::NotReduced);
    }
    let mut g = Multigraph::default();
    for c in config.components() {
        g.add_vertex(c.name.clone(), VertexKind::Component);
    }
    for p in config.points() {
        for (i, j) in p.pairs() {
            g.add_edge(i, j);
        }
    }
    for (i, c) in config.components().iter().enumerate() {
        for s in &c.intrinsic {
            if *s == crate::model::IntrinsicSingularity::Node {
                g.add_edge(i, i);
            }
        }
    }
    Ok(g)
}

/// `Γ_X`: normalized components and singular points as vertices, one edge
/// per branch of the curve through each singular point.
pub fn bipartite_graph(config: &CurveConfiguration) -> Result<Multigraph, GraphError> {
    if !config.is_reduced() {
        return Err(GraphError::NotReduced);
    }
    let mut g = Multigraph::default();
    for c in config.components() {
        g.add_vertex(c.name.clone(), VertexKind::Component);
    }
    for p in config.points() {
        let v = g.add_vertex(p.name.clone(), VertexKind::Point);
        for &i in &p.incident {
            g.add_edge(v, i);
        }
    }
    for (i, c) in config.components().iter().enumerate() {
        for (k, s) in c.intrinsic.iter().enumerate() {
            let v = g.add_vertex(format!("{}:{}{}", c.name, s, k), VertexKind::Point);
            for _ in 0..s.branches() {
                g.add_edge(v, i);
            }
        }
    }
    Ok(g)
}

/// `|E| − |V| + c`, the cycle rank.
pub fn first_betti(graph: &Multigraph) -> usize {
    graph.n_edges() + graph.connected_components() - graph.n_vertices()
}

/// Number of loops of `Γ_{X_red}`; the rank of `K^{-1}(X)`.
pub fn lambda(config: &CurveConfiguration) -> usize {
    let g = bipartite_graph(&reduce(config)).expect("reduced by construction");
    first_betti(&g)
}
