//! Finite simple undirected graphs on dense integer vertex ids.
//!
//! Text format: one `u v` edge per line, `#` comment lines and blank lines
//! are skipped. The vertex count is `1 + max id` unless the first data line
//! is a header `n <count>`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        Ok(Graph {
            vertex_count,
            adjacency: vec![VertexSet::EMPTY; vertex_count],
        })
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(vertex_count)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if self.adjacency[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in self.adjacency[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.adjacency[v]);
                }
                frontier = next.intersection(within).difference(comp);
                comp = comp.union(frontier);
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Maximum number of internally vertex-disjoint `s`–`t` paths, for
    /// non-adjacent distinct `s`, `t` (unit-capacity max flow on the
    /// vertex-split digraph).
    pub fn local_vertex_connectivity(&self, s: usize, t: usize) -> usize {
        assert!(s != t && !self.has_edge(s, t));
        let n = self.vertex_count;
        // node 2v = v_in, 2v+1 = v_out
        let node_count = 2 * n;
        let mut cap: std::collections::HashMap<(usize, usize), i32> = Default::default();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); node_count];
        let mut add = |cap: &mut std::collections::HashMap<(usize, usize), i32>, a: usize, b: usize, c: i32| {
            *cap.entry((a, b)).or_insert(0) += c;
            cap.entry((b, a)).or_insert(0);
            adj[a].insert(b);
            adj[b].insert(a);
        };
        for v in 0..n {
            let c = if v == s || v == t { n as i32 } else { 1 };
            add(&mut cap, 2 * v, 2 * v + 1, c);
        }
        for (u, v) in self.edges() {
            add(&mut cap, 2 * u + 1, 2 * v, n as i32);
            add(&mut cap, 2 * v + 1, 2 * u, n as i32);
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        loop {
            let mut parent = vec![usize::MAX; node_count];
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &y in &adj[x] {
                    if parent[y] == usize::MAX && cap[&(x, y)] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                *cap.get_mut(&(x, y)).unwrap() -= 1;
                *cap.get_mut(&(y, x)).unwrap() += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// True iff the graph has more than `k` vertices and no set of fewer
    /// than `k` vertices disconnects it.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.vertex_count;
        if k == 0 {
            return true;
        }
        if n <= k || !self.is_connected() {
            return false;
        }
        for s in 0..n {
            for t in (s + 1)..n {
                if !self.has_edge(s, t) && self.local_vertex_connectivity(s, t) < k {
                    return false;
                }
            }
        }
        true
    }

    /// Parses the line-oriented edge-list format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen_data = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if !seen_data && fields.len() == 2 && fields[0] == "n" {
                let count = fields[1].parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("invalid vertex count {:?}", fields[1]),
                })?;
                header = Some(count);
                seen_data = true;
                continue;
            }
            seen_data = true;
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("expected `u v`, found {line:?}"),
                });
            }
            let parse_id = |s: &str| {
                s.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("invalid vertex id {s:?}"),
                })
            };
            edges.push((parse_id(fields[0])?, parse_id(fields[1])?));
        }
        let max_id = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let vertex_count = header.unwrap_or(max_id);
        Graph::from_edges(vertex_count, &edges)
    }

    /// Renders the graph in the edge-list format, always with a header line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Disjoint union with `other`, whose vertices are shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let offset = self.vertex_count;
        let mut g = Graph::new(offset + other.vertex_count)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset)?;
        }
        Ok(g)
    }
}
