//! Deterministic test instances: cyclic daisies, anemones, grids, cliques.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GeneratorError;
use crate::flower::PseudoFlower;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Complete graph on `n` vertices.
pub fn gen_clique(n: usize) -> Result<Graph, GeneratorError> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `m × n` grid with row-major ids.
pub fn gen_grid(m: usize, n: usize) -> Result<Graph, GeneratorError> {
    if m == 0 || n == 0 {
        return Err(GeneratorError::InvalidSpec("grid dimensions must be positive".into()));
    }
    let mut g = Graph::new(m * n)?;
    for r in 0..m {
        for c in 0..n {
            let v = r * n + c;
            if c + 1 < n {
                g.add_edge(v, v + 1)?;
            }
            if r + 1 < m {
                g.add_edge(v, v + n)?;
            }
        }
    }
    Ok(g)
}

/// Arc list and attachment set, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcSpec {
    pub arcs: Vec<Vec<usize>>,
    pub attachment: VertexSet,
}

#[derive(Clone, Debug)]
pub struct DaisySpec {
    pub base: Graph,
    pub arcs: Vec<Vec<usize>>,
    pub attachment: VertexSet,
    pub copies: usize,
}

impl DaisySpec {
    /// `k = a + 2n`.
    pub fn k(&self) -> usize {
        self.attachment.len() + 2 * self.arcs.len()
    }

    /// Base `K_max(6, k+1)` with arcs `[2i, 2i+1]` and attachment the next
    /// `a` vertices.
    pub fn standard(n: usize, a: usize, d: usize) -> Result<Self, GeneratorError> {
        let k = a + 2 * n;
        let base = gen_clique(6.max(k + 1))?;
        Ok(DaisySpec {
            base,
            arcs: (0..n).map(|i| vec![2 * i, 2 * i + 1]).collect(),
            attachment: (2 * n..2 * n + a).collect(),
            copies: d,
        })
    }

    pub fn check(&self) -> Result<(), GeneratorError> {
        let bad = |m: String| Err(GeneratorError::InvalidSpec(m));
        if self.copies < 3 {
            return bad(format!("need at least 3 copies, found {}", self.copies));
        }
        if self.arcs.is_empty() {
            return bad("need at least one arc".into());
        }
        let nv = self.base.vertex_count();
        let mut used = BTreeSet::new();
        for arc in &self.arcs {
            if arc.len() < 2 {
                return bad(format!("arc {arc:?} needs at least two vertices"));
            }
            for &v in arc {
                if v >= nv {
                    return bad(format!("arc vertex {v} is not in the base graph"));
                }
                if !used.insert(v) {
                    return bad(format!("arcs are not vertex-disjoint at {v}"));
                }
            }
            for w in arc.windows(2) {
                if !self.base.has_edge(w[0], w[1]) {
                    return bad(format!("arc {arc:?} is not a path: {}-{} is not an edge", w[0], w[1]));
                }
            }
        }
        for v in self.attachment {
            if v >= nv {
                return bad(format!("attachment vertex {v} is not in the base graph"));
            }
            if self.arcs.iter().any(|arc| arc[0] == v || arc[arc.len() - 1] == v) {
                return bad(format!("attachment vertex {v} is an end of an arc"));
            }
        }
        let k = self.k();
        if !self.base.is_k_connected(k) {
            return Err(GeneratorError::NotConnected(k));
        }
        Ok(())
    }
}

/// Builds `d` copies of the base arranged in a cycle, glued along the arcs,
/// plus a set `X` of `a` vertices joined to every copy of the attachment
/// set. Returns the graph and its natural pseudodaisy: petal `i_j` is copy
/// `j`, cutpoint `c_j` holds the first arc vertices of copy `j`.
pub fn gen_daisy(spec: &DaisySpec) -> Result<(Graph, PseudoFlower), GeneratorError> {
    spec.check()?;
    let nb = spec.base.vertex_count();
    let d = spec.copies;
    let mut last_to_arc = vec![None; nb];
    for (i, arc) in spec.arcs.iter().enumerate() {
        last_to_arc[arc[arc.len() - 1]] = Some(i);
    }
    let mut id = vec![vec![usize::MAX; nb]; d];
    let mut next = 0;
    for copy in id.iter_mut() {
        for u in 0..nb {
            if last_to_arc[u].is_none() {
                copy[u] = next;
                next += 1;
            }
        }
    }
    for j in 0..d {
        for (u, arc) in last_to_arc.iter().enumerate() {
            if let Some(i) = *arc {
                id[j][u] = id[(j + 1) % d][spec.arcs[i][0]];
            }
        }
    }
    let x: Vec<usize> = (next..next + spec.attachment.len()).collect();
    let total = next + x.len();
    let mut edges = BTreeSet::new();
    for copy in &id {
        for (u, v) in spec.base.edges() {
            let (a, b) = (copy[u], copy[v]);
            edges.insert((a.min(b), a.max(b)));
        }
        for &xv in &x {
            for t in spec.attachment {
                edges.insert((copy[t], xv));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::from_edges(total, &edges)?;

    let mut entries = Vec::with_capacity(2 * d);
    for (j, copy) in id.iter().enumerate() {
        let seam: VertexSet = spec.arcs.iter().map(|arc| copy[arc[0]]).collect();
        let petal: VertexSet = copy.iter().copied().collect();
        entries.push((format!("c{j}"), seam));
        entries.push((format!("i{j}"), petal));
    }
    let flower = PseudoFlower::from_cycle(spec.k(), entries, g.vertices())?;
    Ok((g, flower))
}

/// The pseudoanemone with `X = x` whose petals are the given groups; each
/// group must be a union of components of `g − x`, and together they must
/// cover `V ∖ x`.
pub fn gen_anemone(g: &Graph, x: VertexSet, groups: &[VertexSet]) -> Result<PseudoFlower, GeneratorError> {
    if groups.len() < 2 {
        return Err(GeneratorError::TooFewGroups(groups.len()));
    }
    if !x.is_subset(g.vertices()) {
        return Err(GeneratorError::BadGrouping(format!("X = {x} is not a set of graph vertices")));
    }
    let rest = g.vertices().difference(x);
    let comps = g.components_within(rest);
    let mut covered = VertexSet::EMPTY;
    for grp in groups {
        if grp.is_empty() {
            return Err(GeneratorError::BadGrouping("empty group".into()));
        }
        if !grp.is_disjoint(covered) {
            return Err(GeneratorError::BadGrouping(format!("group {grp} overlaps another group")));
        }
        if let Some(c) = comps.iter().find(|c| !c.is_disjoint(*grp) && !c.is_subset(*grp)) {
            return Err(GeneratorError::BadGrouping(format!("group {grp} splits component {c}")));
        }
        covered = covered.union(*grp);
    }
    if covered != rest {
        return Err(GeneratorError::BadGrouping(format!(
            "groups cover {covered}, expected {rest}"
        )));
    }
    let entries = groups
        .iter()
        .enumerate()
        .flat_map(|(j, grp)| [(format!("c{j}"), VertexSet::EMPTY), (format!("i{j}"), *grp)]);
    Ok(PseudoFlower::from_cycle(x.len(), entries, g.vertices())?)
}

/// Three triangles `{0,1,2}`, `{3,4,5}`, `{6,7,8}` and a centre `9` joined
/// to all of them.
pub fn triangle_star() -> Graph {
    let mut g = Graph::new(10).expect("small");
    for t in 0..3 {
        let b = 3 * t;
        for (u, v) in [(b, b + 1), (b + 1, b + 2), (b, b + 2)] {
            g.add_edge(u, v).expect("fresh edge");
        }
        for v in b..b + 3 {
            g.add_edge(v, 9).expect("fresh edge");
        }
    }
    g
}
