//! k-pseudoflowers: vertex sets indexed by a cycle completion.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::cyclic_order::{extend_monotone_between, CycleCompletion, Cyclic, CyclicOrder, MonotoneMap};
use crate::error::FlowerError;
use crate::graph::Graph;
use crate::universe::{is_graph_separation, Separation};
use crate::vertex_set::VertexSet;

/// Largest index size accepted by [`find_witnesses`].
pub const WITNESS_SEARCH_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoFlower {
    k: usize,
    completion: CycleCompletion,
    sets: Vec<VertexSet>,
    ground: VertexSet,
    x: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    GroundSet,
    IndexSize,
    Parity,
    CutpointSize,
    IntervalSeparations,
    PetalContainsNeighbours,
    Star,
}

impl Clause {
    /// Position among the four defining conditions, if it is one of them.
    pub fn number(self) -> Option<u8> {
        match self {
            Clause::CutpointSize => Some(1),
            Clause::IntervalSeparations => Some(2),
            Clause::PetalContainsNeighbours => Some(3),
            Clause::Star => Some(4),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Clause::GroundSet => "ground_set",
            Clause::IndexSize => "index_size",
            Clause::Parity => "parity",
            Clause::CutpointSize => "cutpoint_size",
            Clause::IntervalSeparations => "interval_separations",
            Clause::PetalContainsNeighbours => "petal_contains_neighbours",
            Clause::Star => "star",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub clause: Clause,
    pub number: Option<u8>,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub clauses: Vec<ClauseReport>,
}

impl ValidationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClauseReport> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, clause: Clause) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause == clause)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowerKind {
    Pseudoanemone,
    Pseudodaisy,
}

impl PseudoFlower {
    /// `sets` must give a vertex set for every label of `completion`.
    pub fn new(
        k: usize,
        completion: CycleCompletion,
        sets: &BTreeMap<String, VertexSet>,
        ground: VertexSet,
    ) -> Result<Self, FlowerError> {
        let mut by_pos = Vec::with_capacity(completion.len());
        for label in completion.cycle() {
            let set = *sets.get(label).ok_or_else(|| FlowerError::MissingLabel(label.clone()))?;
            by_pos.push(set);
        }
        Self::from_positions(k, completion, by_pos, ground)
    }

    /// Builds from `(label, set)` entries that alternate cutpoint, index, ...
    pub fn from_cycle<S: Into<String>>(
        k: usize,
        entries: impl IntoIterator<Item = (S, VertexSet)>,
        ground: VertexSet,
    ) -> Result<Self, FlowerError> {
        let (labels, sets): (Vec<String>, Vec<VertexSet>) = entries.into_iter().map(|(l, s)| (l.into(), s)).unzip();
        let completion = CycleCompletion::new(labels)?;
        Self::from_positions(k, completion, sets, ground)
    }

    fn from_positions(k: usize, completion: CycleCompletion, sets: Vec<VertexSet>, ground: VertexSet) -> Result<Self, FlowerError> {
        let mut covered = VertexSet::EMPTY;
        for s in &sets {
            if let Some(v) = s.difference(ground).first() {
                return Err(FlowerError::VertexOutOfRange(v));
            }
            covered = covered.union(*s);
        }
        Ok(PseudoFlower {
            k,
            completion,
            sets,
            ground,
            x: ground.difference(covered),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn completion(&self) -> &CycleCompletion {
        &self.completion
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// `V ∖ ⋃ P_z`.
    pub fn x(&self) -> VertexSet {
        self.x
    }

    pub fn half(&self) -> Option<usize> {
        let k = self.k.checked_sub(self.x.len())?;
        (k % 2 == 0).then_some(k / 2)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_len(&self) -> usize {
        self.sets.len() / 2
    }

    pub fn labels(&self) -> &[String] {
        self.completion.cycle()
    }

    pub fn label(&self, p: usize) -> &str {
        &self.completion.cycle()[p]
    }

    pub fn set_at(&self, p: usize) -> VertexSet {
        self.sets[p]
    }

    pub fn set(&self, label: &str) -> Result<VertexSet, FlowerError> {
        Ok(self.sets[self.completion.pos(label)?])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, VertexSet)> {
        self.labels().iter().map(String::as_str).zip(self.sets.iter().copied())
    }

    pub fn cutpoints(&self) -> Vec<String> {
        self.completion.cutpoints()
    }

    pub fn index(&self) -> Vec<String> {
        self.completion.index()
    }

    pub fn cutpoint_positions(&self) -> impl Iterator<Item = usize> + Clone {
        (0..self.len()).step_by(2)
    }

    pub fn index_positions(&self) -> impl Iterator<Item = usize> + Clone {
        (1..self.len()).step_by(2)
    }

    /// Cycle position of a cutpoint label.
    pub fn cut_pos(&self, label: &str) -> Result<usize, FlowerError> {
        let p = self.completion.pos(label)?;
        if p % 2 != 0 {
            return Err(FlowerError::NotACutpoint(label.to_string()));
        }
        Ok(p)
    }

    /// Cycle position of an index label.
    pub fn index_pos(&self, label: &str) -> Result<usize, FlowerError> {
        let p = self.completion.pos(label)?;
        if p % 2 != 1 {
            return Err(FlowerError::NotAnIndex(label.to_string()));
        }
        Ok(p)
    }

    /// `V(v,w)` for cutpoint positions `v`, `w`: the union of `P_z` over
    /// `[v,w]`, plus `X`.
    pub fn interval_set_at(&self, v: usize, w: usize) -> VertexSet {
        self.completion
            .interval_at(v, w, true, true)
            .into_iter()
            .fold(self.x, |acc, p| acc.union(self.sets[p]))
    }

    /// `S(v,w) = (V(v,w), V(w,v))` for cutpoint positions.
    pub fn separation_at(&self, v: usize, w: usize) -> Separation {
        Separation::new(self.interval_set_at(v, w), self.interval_set_at(w, v))
    }

    fn distinct_cutpoints(&self, v: &str, w: &str) -> Result<(usize, usize), FlowerError> {
        let (pv, pw) = (self.cut_pos(v)?, self.cut_pos(w)?);
        if pv == pw {
            return Err(FlowerError::EqualCutpoints);
        }
        Ok((pv, pw))
    }

    pub fn interval_set(&self, v: &str, w: &str) -> Result<VertexSet, FlowerError> {
        let (pv, pw) = self.distinct_cutpoints(v, w)?;
        Ok(self.interval_set_at(pv, pw))
    }

    /// `S(v,w) = (V(v,w), V(w,v))`.
    pub fn separation(&self, v: &str, w: &str) -> Result<Separation, FlowerError> {
        let (pv, pw) = self.distinct_cutpoints(v, w)?;
        Ok(self.separation_at(pv, pw))
    }

    /// The interval separation of `[v,w]`, which is `S(w,v)`.
    pub fn interval_separation(&self, v: &str, w: &str) -> Result<Separation, FlowerError> {
        let (pv, pw) = self.distinct_cutpoints(v, w)?;
        Ok(self.separation_at(pw, pv))
    }

    /// Predecessor and successor cutpoint positions of an index position.
    pub fn neighbours_at(&self, i: usize) -> (usize, usize) {
        let n = self.len();
        ((i + n - 1) % n, (i + 1) % n)
    }

    /// `S(i) = S(s(i), p(i)) = (V(s,p), P_i ∪ X)` for an index position.
    pub fn petal_separation_at(&self, i: usize) -> Separation {
        let (p, s) = self.neighbours_at(i);
        self.separation_at(s, p)
    }

    pub fn petal_separation(&self, i: &str) -> Result<Separation, FlowerError> {
        Ok(self.petal_separation_at(self.index_pos(i)?))
    }

    /// The interval separations `S(v,w)` over all ordered pairs of distinct
    /// cutpoints, with their positions.
    pub fn all_separations(&self) -> Vec<(usize, usize, Separation)> {
        let mut out = Vec::new();
        for v in self.cutpoint_positions() {
            for w in self.cutpoint_positions() {
                if v != w {
                    out.push((v, w, self.separation_at(v, w)));
                }
            }
        }
        out
    }

    /// The distinct separations displayed by the flower, sorted.
    pub fn displayed(&self) -> Vec<Separation> {
        let set: BTreeSet<Separation> = self.all_separations().into_iter().map(|(_, _, s)| s).collect();
        set.into_iter().collect()
    }

    pub fn displays(&self, s: Separation) -> bool {
        self.all_separations().iter().any(|&(_, _, t)| t == s)
    }

    pub fn validate(&self, g: &Graph) -> ValidationReport {
        let mut clauses = Vec::new();
        let mut push = |clause: Clause, counterexample: Option<String>| {
            clauses.push(ClauseReport {
                clause,
                number: clause.number(),
                passed: counterexample.is_none(),
                counterexample,
            });
        };

        push(
            Clause::GroundSet,
            (self.ground != g.vertices()).then(|| {
                format!("flower ground set {} differs from graph vertex set {}", self.ground, g.vertices())
            }),
        );
        let n = self.index_len();
        push(Clause::IndexSize, (n < 2).then(|| format!("index has {n} element(s)")));

        let half = self.half();
        push(
            Clause::Parity,
            half.is_none().then(|| format!("k - |X| = {} - {} is not a non-negative even number", self.k, self.x.len())),
        );

        let size_fail = self.cutpoint_positions().find_map(|v| {
            let size = self.sets[v].len();
            match half {
                Some(h) if h == size => None,
                Some(h) => Some(format!("|P_{}| = {size}, expected {h}", self.label(v))),
                None => Some(format!(
                    "|P_{}| = {size}, but (k - |X|)/2 = ({} - {})/2 is not an integer",
                    self.label(v),
                    self.k,
                    self.x.len()
                )),
            }
        });
        push(Clause::CutpointSize, size_fail);

        let mut sep_fail = None;
        'outer: for v in self.cutpoint_positions() {
            for w in self.cutpoint_positions() {
                if v == w {
                    continue;
                }
                let s = self.separation_at(v, w);
                let (lv, lw) = (self.label(v), self.label(w));
                if !is_graph_separation(g, s) {
                    sep_fail = Some(format!("S({lv},{lw}) = {s} is not a separation of the graph"));
                } else if s.order() > self.k {
                    sep_fail = Some(format!("S({lv},{lw}) has order {} > {}", s.order(), self.k));
                } else {
                    let expected = self.sets[v].union(self.sets[w]).union(self.x);
                    if s.separator() != expected {
                        sep_fail = Some(format!(
                            "separator of S({lv},{lw}) is {}, expected P_{lv} ∪ P_{lw} ∪ X = {expected}",
                            s.separator()
                        ));
                    }
                }
                if sep_fail.is_some() {
                    break 'outer;
                }
            }
        }
        push(Clause::IntervalSeparations, sep_fail);

        let petal_fail = self.index_positions().find_map(|i| {
            let (p, s) = self.neighbours_at(i);
            let need = self.sets[p].union(self.sets[s]);
            (!need.is_subset(self.sets[i])).then(|| {
                format!(
                    "P_{} ∪ P_{} = {need} is not contained in P_{} = {}",
                    self.label(p),
                    self.label(s),
                    self.label(i),
                    self.sets[i]
                )
            })
        });
        push(Clause::PetalContainsNeighbours, petal_fail);

        let mut star_fail = None;
        if let Some(h) = half {
            'star: for i in self.index_positions() {
                if self.sets[i].len() != h {
                    continue;
                }
                for j in self.index_positions() {
                    if j != i && self.sets[j] == self.sets[i] {
                        star_fail = Some(format!(
                            "P_{} = P_{} = {} has size (k - |X|)/2",
                            self.label(i),
                            self.label(j),
                            self.sets[i]
                        ));
                        break 'star;
                    }
                }
            }
        }
        push(Clause::Star, star_fail);

        let valid = clauses.iter().all(|c| c.passed);
        ValidationReport { valid, clauses }
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).valid
    }

    fn require_valid(&self, g: &Graph) -> Result<(), FlowerError> {
        let report = self.validate(g);
        let result = match report.failures().next() {
            None => Ok(()),
            Some(c) => Err(FlowerError::Invalid(format!(
                "{}: {}",
                c.clause,
                c.counterexample.as_deref().unwrap_or("")
            ))),
        };
        result
    }

    /// Pseudoanemone iff every cutpoint set is empty.
    pub fn kind(&self) -> FlowerKind {
        if self.cutpoint_positions().all(|v| self.sets[v].is_empty()) {
            FlowerKind::Pseudoanemone
        } else {
            FlowerKind::Pseudodaisy
        }
    }

    pub fn classify(&self, g: &Graph) -> Result<FlowerKind, FlowerError> {
        self.require_valid(g)?;
        Ok(self.kind())
    }

    fn is_proper_order_k(&self, v: usize, w: usize) -> bool {
        let s = self.separation_at(v, w);
        s.order() == self.k && !s.a.difference(s.b).is_empty() && !s.b.difference(s.a).is_empty()
    }

    /// Every interval separation has order exactly `k` and both sides
    /// stick out of the separator.
    pub fn is_flower(&self, g: &Graph) -> Result<bool, FlowerError> {
        self.require_valid(g)?;
        Ok(self.is_flower_unchecked())
    }

    pub(crate) fn is_flower_unchecked(&self) -> bool {
        self.cutpoint_positions()
            .all(|v| self.cutpoint_positions().all(|w| v == w || self.is_proper_order_k(v, w)))
    }

    /// Whether some `m` cutpoints span a concatenation that is a k-flower.
    pub fn extends_k_flower_with(&self, m: usize) -> bool {
        let cuts: Vec<usize> = self.cutpoint_positions().collect();
        if m < 2 || cuts.len() < m {
            return false;
        }
        let ok = |a: usize, b: usize| self.is_proper_order_k(a, b) && self.is_proper_order_k(b, a);
        fn rec(cuts: &[usize], start: usize, m: usize, chosen: &mut Vec<usize>, ok: &dyn Fn(usize, usize) -> bool) -> bool {
            if chosen.len() == m {
                return true;
            }
            for idx in start..cuts.len() {
                let c = cuts[idx];
                if chosen.iter().all(|&d| ok(c, d)) {
                    chosen.push(c);
                    if rec(cuts, idx + 1, m, chosen, ok) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        rec(&cuts, 0, m, &mut Vec::new(), &ok)
    }

    /// The subflower whose cutpoints are `d`. Each new index element
    /// collects everything strictly between two consecutive chosen
    /// cutpoints and is labelled by joining the old index labels with `+`.
    pub fn concatenate(&self, d: &[String]) -> Result<(PseudoFlower, WitnessMap), FlowerError> {
        let mut chosen = BTreeSet::new();
        for label in d {
            chosen.insert(self.cut_pos(label)?);
        }
        if chosen.len() < 2 {
            return Err(FlowerError::TooFewCutpoints(chosen.len()));
        }
        let mut entries: Vec<(String, VertexSet)> = Vec::new();
        let mut index_map: BTreeMap<String, String> = BTreeMap::new();
        let order: Vec<usize> = chosen.iter().copied().collect();
        for (j, &c) in order.iter().enumerate() {
            let next = order[(j + 1) % order.len()];
            entries.push((self.label(c).to_string(), self.sets[c]));
            let between = self.completion.interval_at(c, next, false, false);
            let olds: Vec<&str> = between.iter().filter(|&&p| p % 2 == 1).map(|&p| self.label(p)).collect();
            let name = olds.join("+");
            let set = self
                .completion
                .interval_at(c, next, true, true)
                .into_iter()
                .fold(VertexSet::EMPTY, |acc, p| acc.union(self.sets[p]));
            for o in &olds {
                index_map.insert(o.to_string(), name.clone());
            }
            entries.push((name, set));
        }
        let small = PseudoFlower::from_cycle(self.k, entries, self.ground)?;
        let f = MonotoneMap::new(self.completion.index_order(), small.completion.index_order(), index_map)?;
        let map = extend_monotone_between(&f, self.completion.clone(), small.completion.clone())?;
        let witness = WitnessMap {
            from: self.clone(),
            to: small.clone(),
            map,
        };
        Ok((small, witness))
    }

    /// The labels `z` with `x ∈ P_z`, in cyclic order from the start of the
    /// interval they form.
    pub fn vertex_interval(&self, x: usize) -> Result<Vec<String>, FlowerError> {
        if !self.ground.contains(x) {
            return Err(FlowerError::VertexOutOfRange(x));
        }
        if self.x.contains(x) {
            return Err(FlowerError::VertexInX(x));
        }
        let n = self.len();
        let members: Vec<bool> = self.sets.iter().map(|s| s.contains(x)).collect();
        if !self.completion.is_interval_at(&members) {
            return Err(FlowerError::Invalid(format!("vertex {x} does not lie in an interval of sets")));
        }
        let start = (0..n).find(|&p| members[p] && !members[(p + n - 1) % n]).unwrap_or(0);
        Ok((0..n)
            .map(|o| (start + o) % n)
            .take_while(|&p| members[p])
            .map(|p| self.label(p).to_string())
            .collect())
    }

    /// The same flower with index elements renamed by `rename` (labels
    /// not mentioned keep their names).
    pub fn relabel(&self, rename: &BTreeMap<String, String>) -> Result<PseudoFlower, FlowerError> {
        let entries: Vec<(String, VertexSet)> = self
            .entries()
            .map(|(l, s)| (rename.get(l).cloned().unwrap_or_else(|| l.to_string()), s))
            .collect();
        PseudoFlower::from_cycle(self.k, entries, self.ground)
    }

    /// Whether the two flowers agree up to renaming labels along the cycle.
    pub fn same_up_to_labels(&self, other: &PseudoFlower) -> bool {
        if self.k != other.k || self.ground != other.ground || self.len() != other.len() {
            return false;
        }
        let n = self.len();
        (0..n).step_by(2).any(|shift| (0..n).all(|p| self.sets[p] == other.sets[(p + shift) % n]))
    }
}

/// A map `F: C(I') -> C(I)` offered as a witness that `from` extends `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessMap {
    pub from: PseudoFlower,
    pub to: PseudoFlower,
    pub map: MonotoneMap<CycleCompletion>,
}

/// Checks every clause of the extension definition: same `X`, surjective
/// and monotone, `F(I') = I`, and each interval set of the smaller flower
/// is `X` plus the union over the preimage of its interval.
pub fn is_witness(w: &WitnessMap) -> bool {
    let (big, small, f) = (&w.from, &w.to, &w.map);
    if big.x != small.x || big.ground != small.ground || big.k != small.k {
        return false;
    }
    if f.domain != big.completion || f.codomain != small.completion {
        return false;
    }
    if !f.is_surjective() || !f.is_monotone() {
        return false;
    }
    let img: Vec<usize> = (0..big.len())
        .map(|p| small.completion.position(&f.mapping[big.label(p)]).expect("total"))
        .collect();
    let mut index_hit = vec![false; small.len()];
    for p in big.index_positions() {
        if img[p] % 2 != 1 {
            return false;
        }
        index_hit[img[p]] = true;
    }
    if small.index_positions().any(|q| !index_hit[q]) {
        return false;
    }
    for v in small.cutpoint_positions() {
        for u in small.cutpoint_positions() {
            if u == v {
                continue;
            }
            let mut inside = vec![false; small.len()];
            for q in small.completion.interval_at(v, u, true, true) {
                inside[q] = true;
            }
            let union = (0..big.len())
                .filter(|&p| inside[img[p]])
                .fold(small.x, |acc, p| acc.union(big.sets[p]));
            if union != small.interval_set_at(v, u) {
                return false;
            }
        }
    }
    true
}

/// Surjective maps from a cycle of `n_from` positions onto one of `n_to`
/// positions that keep the cyclic order and have interval fibres, as
/// position vectors.
pub fn cyclic_surjections(n_from: usize, n_to: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n_to == 0 || n_to > n_from {
        return out;
    }
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for g in start..n {
            cur.push(g);
            rec(g + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    // a block starts right after each chosen gap
    let mut gap_sets = Vec::new();
    rec(0, n_from, n_to, &mut Vec::new(), &mut gap_sets);
    for gaps in gap_sets {
        let mut block_of = vec![0usize; n_from];
        for p in 0..n_from {
            // number of gaps strictly before p, cyclically from the first gap
            let q = (p + n_from - gaps[0] - 1) % n_from;
            let offset = gaps.iter().filter(|&&g| (g + n_from - gaps[0]) % n_from < q + 1).count() - 1;
            block_of[p] = offset;
        }
        for r in 0..n_to {
            out.push(block_of.iter().map(|&b| (b + r) % n_to).collect());
        }
    }
    out
}

/// Every witness that `big` extends `small`, by exhaustive search over
/// surjective monotone index maps.
pub fn find_witnesses(small: &PseudoFlower, big: &PseudoFlower) -> Result<Vec<WitnessMap>, FlowerError> {
    let n_big = big.index_len();
    if n_big > WITNESS_SEARCH_LIMIT {
        return Err(FlowerError::Guard(n_big, WITNESS_SEARCH_LIMIT));
    }
    let dom: CyclicOrder = big.completion.index_order();
    let cod: CyclicOrder = small.completion.index_order();
    let big_index = big.index();
    let small_index = small.index();
    let mut out = Vec::new();
    if small.x != big.x {
        return Ok(out);
    }
    for images in cyclic_surjections(n_big, small.index_len()) {
        let mapping: BTreeMap<String, String> = big_index
            .iter()
            .zip(&images)
            .map(|(a, &b)| (a.clone(), small_index[b].clone()))
            .collect();
        let f = MonotoneMap::new(dom.clone(), cod.clone(), mapping)?;
        let Ok(map) = extend_monotone_between(&f, big.completion.clone(), small.completion.clone()) else {
            continue;
        };
        let w = WitnessMap {
            from: big.clone(),
            to: small.clone(),
            map,
        };
        if is_witness(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().collect()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn f_c4() -> PseudoFlower {
        PseudoFlower::from_cycle(
            2,
            [("c0", set(&[0])), ("a", set(&[0, 1, 2])), ("c1", set(&[2])), ("b", set(&[0, 2, 3]))],
            VertexSet::full(4),
        )
        .unwrap()
    }

    #[test]
    fn c4_flower_basics() {
        let f = f_c4();
        let report = f.validate(&c4());
        assert!(report.valid, "{report:?}");
        assert_eq!(f.interval_set("c0", "c1").unwrap(), set(&[0, 1, 2]));
        assert_eq!(
            f.interval_separation("c1", "c0").unwrap(),
            Separation::new(set(&[0, 1, 2]), set(&[0, 2, 3]))
        );
        assert_eq!(f.interval_separation("c1", "c0").unwrap().separator(), set(&[0, 2]));
        assert_eq!(f.separation("c0", "c1").unwrap(), Separation::new(set(&[0, 1, 2]), set(&[0, 2, 3])));
        assert_eq!(f.petal_separation("a").unwrap(), Separation::new(set(&[0, 2, 3]), set(&[0, 1, 2])));
        assert_eq!(f.kind(), FlowerKind::Pseudodaisy);
        assert!(f.is_flower(&c4()).unwrap());
        assert!(f.separation("c0", "c0").is_err());
        assert!(f.separation("c0", "a").is_err());
        assert_eq!(f.vertex_interval(1).unwrap(), vec!["a"]);
        assert_eq!(f.vertex_interval(0).unwrap(), vec!["b", "c0", "a"]);
    }

    #[test]
    fn c4_broken_variants() {
        let broken = PseudoFlower::from_cycle(
            2,
            [("c0", set(&[0])), ("a", set(&[0, 1, 2])), ("c1", set(&[1, 2])), ("b", set(&[0, 2, 3]))],
            VertexSet::full(4),
        )
        .unwrap();
        let report = broken.validate(&c4());
        assert!(!report.valid);
        assert!(!report.clause(Clause::CutpointSize).unwrap().passed);

        let g5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mut sets: BTreeMap<String, VertexSet> = f_c4().entries().map(|(l, s)| (l.to_string(), s)).collect();
        sets.insert("a".into(), set(&[0, 1, 2]));
        let parity = PseudoFlower::new(2, f_c4().completion().clone(), &sets, VertexSet::full(5)).unwrap();
        assert_eq!(parity.x(), set(&[4]));
        let report = parity.validate(&g5);
        assert!(!report.clause(Clause::Parity).unwrap().passed);
        assert!(!report.clause(Clause::CutpointSize).unwrap().passed);
        assert!(parity.classify(&g5).is_err());
    }

    #[test]
    fn identity_concatenation_and_witnesses() {
        let f = f_c4();
        let (small, w) = f.concatenate(&f.cutpoints()).unwrap();
        assert_eq!(small, f);
        assert!(is_witness(&w));
        let ws = find_witnesses(&f, &f).unwrap();
        assert!(!ws.is_empty());
        assert!(f.concatenate(&["c0".into()]).is_err());
    }

    #[test]
    fn surjection_enumeration_is_exactly_monotone_interval_maps() {
        for n_from in 2..=5 {
            for n_to in 2..=n_from {
                let maps = cyclic_surjections(n_from, n_to);
                let dom = CyclicOrder::new((0..n_from).map(|j| format!("d{j}"))).unwrap();
                let cod = CyclicOrder::new((0..n_to).map(|j| format!("e{j}"))).unwrap();
                let mut brute = BTreeSet::new();
                let total = n_to.pow(n_from as u32);
                for code in 0..total {
                    let imgs: Vec<usize> = (0..n_from).map(|p| code / n_to.pow(p as u32) % n_to).collect();
                    let mapping = (0..n_from).map(|p| (format!("d{p}"), format!("e{}", imgs[p]))).collect();
                    let m = MonotoneMap::new(dom.clone(), cod.clone(), mapping).unwrap();
                    if m.is_surjective() && m.is_monotone() && m.has_interval_fibres() {
                        brute.insert(imgs);
                    }
                }
                let ours: BTreeSet<Vec<usize>> = maps.iter().cloned().collect();
                assert_eq!(ours.len(), maps.len());
                assert_eq!(ours, brute, "{n_from} -> {n_to}");
            }
        }
    }
}
