//! Vertex separations of a finite graph and their lattice algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SeparationError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An ordered pair `(A, B)` of vertex sets. The ground set is `A ∪ B`.
/// Serialized as the pair `[A, B]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(VertexSet, VertexSet)", into = "(VertexSet, VertexSet)")]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl From<(VertexSet, VertexSet)> for Separation {
    fn from((a, b): (VertexSet, VertexSet)) -> Self {
        Separation { a, b }
    }
}

impl From<Separation> for (VertexSet, VertexSet) {
    fn from(s: Separation) -> Self {
        (s.a, s.b)
    }
}

impl Separation {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        Separation { a, b }
    }

    /// Builds `(A, B)` and checks that it covers `ground`.
    pub fn checked(a: VertexSet, b: VertexSet, ground: VertexSet) -> Result<Self, SeparationError> {
        if a.union(b) != ground {
            return Err(SeparationError::NotCovering);
        }
        Ok(Separation { a, b })
    }

    pub fn ground(self) -> VertexSet {
        self.a.union(self.b)
    }

    pub fn separator(self) -> VertexSet {
        self.a.intersection(self.b)
    }

    pub fn order(self) -> usize {
        self.separator().len()
    }

    pub fn inverse(self) -> Self {
        Separation { a: self.b, b: self.a }
    }

    /// `(A∩C, B∪D)`.
    pub fn meet(self, other: Self) -> Self {
        Separation {
            a: self.a.intersection(other.a),
            b: self.b.union(other.b),
        }
    }

    /// `(A∪C, B∩D)`.
    pub fn join(self, other: Self) -> Self {
        Separation {
            a: self.a.union(other.a),
            b: self.b.intersection(other.b),
        }
    }

    /// `A ⊆ C` and `D ⊆ B`.
    pub fn leq(self, other: Self) -> bool {
        self.a.is_subset(other.a) && other.b.is_subset(self.b)
    }

    pub fn is_nested(self, other: Self) -> bool {
        let (s, si) = (self, self.inverse());
        let (t, ti) = (other, other.inverse());
        s.leq(t) || s.leq(ti) || si.leq(t) || si.leq(ti) || t.leq(s) || t.leq(si) || ti.leq(s) || ti.leq(si)
    }

    pub fn crosses(self, other: Self) -> bool {
        !self.is_nested(other)
    }

    /// The eight corners: for `o1` in `[s, s*]`, `o2` in `[t, t*]`, push
    /// `o1 ∧ o2` then `o1 ∨ o2`. Duplicates are kept.
    pub fn corners(self, other: Self) -> [Separation; 8] {
        let mut out = [self; 8];
        let mut idx = 0;
        for o1 in [self, self.inverse()] {
            for o2 in [other, other.inverse()] {
                out[idx] = o1.meet(o2);
                out[idx + 1] = o1.join(o2);
                idx += 2;
            }
        }
        out
    }

    /// Canonical sort key: order, then `A`, then `B`.
    pub fn canonical_key(self) -> (usize, VertexSet, VertexSet) {
        (self.order(), self.a, self.b)
    }
}

impl Ord for Separation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for Separation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn same_ground(s: Separation, t: Separation) -> Result<(), SeparationError> {
    if s.ground() == t.ground() {
        Ok(())
    } else {
        Err(SeparationError::GroundSetMismatch)
    }
}

pub fn meet(s: Separation, t: Separation) -> Result<Separation, SeparationError> {
    same_ground(s, t)?;
    Ok(s.meet(t))
}

pub fn join(s: Separation, t: Separation) -> Result<Separation, SeparationError> {
    same_ground(s, t)?;
    Ok(s.join(t))
}

pub fn leq(s: Separation, t: Separation) -> Result<bool, SeparationError> {
    same_ground(s, t)?;
    Ok(s.leq(t))
}

pub fn is_nested(s: Separation, t: Separation) -> Result<bool, SeparationError> {
    same_ground(s, t)?;
    Ok(s.is_nested(t))
}

pub fn corners(s: Separation, t: Separation) -> Result<[Separation; 8], SeparationError> {
    same_ground(s, t)?;
    Ok(s.corners(t))
}

/// True iff `A ∪ B = V(g)` and no edge joins `A∖B` to `B∖A`.
pub fn is_graph_separation(g: &Graph, s: Separation) -> bool {
    if s.ground() != g.vertices() {
        return false;
    }
    let only_b = s.b.difference(s.a);
    s.a.difference(s.b).iter().all(|v| g.neighbors(v).is_disjoint(only_b))
}

/// The separations of a graph, ordered canonically.
#[derive(Clone, Debug)]
pub struct SeparationUniverse {
    graph: Graph,
}

impl SeparationUniverse {
    pub fn new(graph: Graph) -> Self {
        SeparationUniverse { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ground(&self) -> VertexSet {
        self.graph.vertices()
    }

    pub fn contains(&self, s: Separation) -> bool {
        is_graph_separation(&self.graph, s)
    }

    pub fn enumerate(&self, max_order: usize) -> Vec<Separation> {
        enumerate_separations(&self.graph, max_order)
    }
}

pub(crate) fn for_each_subset_up_to(n: usize, max_size: usize, f: &mut impl FnMut(VertexSet)) {
    fn rec(start: usize, n: usize, left: usize, cur: VertexSet, f: &mut impl FnMut(VertexSet)) {
        f(cur);
        if left == 0 {
            return;
        }
        for v in start..n {
            let mut next = cur;
            next.insert(v);
            rec(v + 1, n, left - 1, next, f);
        }
    }
    rec(0, n, max_size, VertexSet::EMPTY, f);
}

/// All separations of `g` with order at most `max_order`, sorted by
/// `(order, A, B)`.
pub fn enumerate_separations(g: &Graph, max_order: usize) -> Vec<Separation> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for_each_subset_up_to(n, max_order.min(n), &mut |sep| {
        let comps = g.components_within(g.vertices().difference(sep));
        assert!(comps.len() < 64, "too many components to enumerate");
        for mask in 0u64..(1u64 << comps.len()) {
            let mut a = sep;
            let mut b = sep;
            for (i, c) in comps.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a = a.union(*c);
                } else {
                    b = b.union(*c);
                }
            }
            out.push(Separation { a, b });
        }
    });
    out.sort();
    out
}

/// Supremum of a finite `≤`-chain of graph separations: its maximum.
pub fn chain_supremum(g: &Graph, chain: &[Separation]) -> Result<Separation, SeparationError> {
    let first = *chain.first().ok_or(SeparationError::EmptyChain)?;
    for &s in chain {
        if !is_graph_separation(g, s) {
            return Err(SeparationError::NotGraphSeparation);
        }
    }
    for (i, &s) in chain.iter().enumerate() {
        for &t in &chain[i + 1..] {
            if !s.leq(t) && !t.leq(s) {
                return Err(SeparationError::NotAChain);
            }
        }
    }
    let mut sup = first;
    for &s in chain {
        sup = sup.join(s);
    }
    // In a finite chain the join is the top element, so no extra vertices
    // are ever needed to turn it into a graph separation.
    debug_assert!(chain.contains(&sup));
    debug_assert!(is_graph_separation(g, sup));
    Ok(sup)
}
