//! Finite cyclic orders, cuts, cycle completions and monotone maps.
//!
//! Elements are string labels. All operations are exact and exhaustive;
//! none of them is meant for large inputs.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::OrderError;

/// Shared behaviour of finite cyclically arranged label sequences.
pub trait Cyclic {
    fn labels(&self) -> &[String];
    fn position(&self, label: &str) -> Option<usize>;

    fn len(&self) -> usize {
        self.labels().len()
    }

    fn is_empty(&self) -> bool {
        self.labels().is_empty()
    }

    fn contains(&self, label: &str) -> bool {
        self.position(label).is_some()
    }

    fn pos(&self, label: &str) -> Result<usize, OrderError> {
        self.position(label)
            .ok_or_else(|| OrderError::UnknownLabel(label.to_string()))
    }

    /// `(a, b, c)` by position: pairwise distinct and `b` comes strictly
    /// before `c` when scanning forward from `a`.
    fn triple_at(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.len();
        if a == b || b == c || a == c {
            return false;
        }
        (b + n - a) % n < (c + n - a) % n
    }

    fn cyclic_triple(&self, a: &str, b: &str, c: &str) -> Result<bool, OrderError> {
        Ok(self.triple_at(self.pos(a)?, self.pos(b)?, self.pos(c)?))
    }

    /// Positions of `]a, b[` with the requested endpoints added, in cyclic
    /// order starting after (or at) `a`. `[a, a]` is `{a}`, `]a, a[` is empty.
    fn interval_at(&self, a: usize, b: usize, closed_left: bool, closed_right: bool) -> Vec<usize> {
        let n = self.len();
        let mut out = Vec::new();
        if closed_left {
            out.push(a);
        }
        if a != b {
            let mut x = (a + 1) % n;
            while x != b {
                out.push(x);
                x = (x + 1) % n;
            }
            if closed_right {
                out.push(b);
            }
        }
        out
    }

    fn interval(&self, a: &str, b: &str, closed_left: bool, closed_right: bool) -> Result<Vec<String>, OrderError> {
        let (pa, pb) = (self.pos(a)?, self.pos(b)?);
        Ok(self
            .interval_at(pa, pb, closed_left, closed_right)
            .into_iter()
            .map(|p| self.labels()[p].clone())
            .collect())
    }

    /// Whether a set of positions is an interval: it is entered at most once
    /// when walking around the cycle.
    fn is_interval_at(&self, members: &[bool]) -> bool {
        let n = self.len();
        let entries = (0..n)
            .filter(|&p| members[p] && !members[(p + n - 1) % n])
            .count();
        entries <= 1
    }

    fn is_interval(&self, subset: &[&str]) -> Result<bool, OrderError> {
        let mut members = vec![false; self.len()];
        for l in subset {
            members[self.pos(l)?] = true;
        }
        Ok(self.is_interval_at(&members))
    }

    fn successor(&self, a: &str) -> Result<String, OrderError> {
        let n = self.len();
        if n < 2 {
            return Err(OrderError::TooSmall { needed: 2, found: n });
        }
        Ok(self.labels()[(self.pos(a)? + 1) % n].clone())
    }

    fn predecessor(&self, a: &str) -> Result<String, OrderError> {
        let n = self.len();
        if n < 2 {
            return Err(OrderError::TooSmall { needed: 2, found: n });
        }
        Ok(self.labels()[(self.pos(a)? + n - 1) % n].clone())
    }

    /// Same cyclic arrangement as `other` (ignoring where each sequence starts).
    fn same_cyclic_order<O: Cyclic + ?Sized>(&self, other: &O) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        if n == 0 {
            return true;
        }
        let Some(offset) = other.position(&self.labels()[0]) else {
            return false;
        };
        (0..n).all(|p| self.labels()[p] == other.labels()[(p + offset) % n])
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>, OrderError> {
    let mut pos = HashMap::with_capacity(labels.len());
    for (p, l) in labels.iter().enumerate() {
        if pos.insert(l.clone(), p).is_some() {
            return Err(OrderError::DuplicateLabel(l.clone()));
        }
    }
    Ok(pos)
}

/// A finite cyclic order, stored as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicOrder {
    elements: Vec<String>,
    pos: HashMap<String, usize>,
}

impl CyclicOrder {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = S>) -> Result<Self, OrderError> {
        let mut elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        index_labels(&elements)?;
        if let Some(start) = (0..elements.len()).min_by(|&x, &y| {
            let rx = elements[x..].iter().chain(&elements[..x]);
            let ry = elements[y..].iter().chain(&elements[..y]);
            rx.cmp(ry)
        }) {
            elements.rotate_left(start);
        }
        let pos = index_labels(&elements)?;
        Ok(CyclicOrder { elements, pos })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    /// The cyclic order read backwards.
    pub fn mirror(&self) -> CyclicOrder {
        CyclicOrder::new(self.elements.iter().rev().cloned()).expect("labels stay distinct")
    }

    /// All cuts: one rotation starting at each element, in cyclic order.
    pub fn cuts(&self) -> Vec<LinearCut> {
        let n = self.elements.len();
        (0..n)
            .map(|s| LinearCut {
                elements: self.elements[s..].iter().chain(&self.elements[..s]).cloned().collect(),
            })
            .collect()
    }

    /// All triples in the order.
    pub fn triples(&self) -> BTreeSet<(String, String, String)> {
        let n = self.len();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.triple_at(a, b, c) {
                        out.insert((self.elements[a].clone(), self.elements[b].clone(), self.elements[c].clone()));
                    }
                }
            }
        }
        out
    }
}

impl Cyclic for CyclicOrder {
    fn labels(&self) -> &[String] {
        &self.elements
    }

    fn position(&self, label: &str) -> Option<usize> {
        self.pos.get(label).copied()
    }
}

impl Serialize for CyclicOrder {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclicOrder {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(deserializer)?;
        CyclicOrder::new(v).map_err(serde::de::Error::custom)
    }
}

/// A linear order on the ground set of a cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearCut {
    pub elements: Vec<String>,
}

impl LinearCut {
    /// The cyclic order this linear order induces.
    pub fn induced(&self) -> CyclicOrder {
        CyclicOrder::new(self.elements.iter().cloned()).expect("cut labels are distinct")
    }

    /// The length `j` of an initial segment `S'` of `self` with
    /// `other = self↾(S∖S') ⊕ self↾S'`, if one exists.
    pub fn decomposition(&self, other: &LinearCut) -> Option<usize> {
        let n = self.elements.len();
        (0..n.max(1)).find(|&j| {
            let rotated: Vec<&String> = self.elements[j..].iter().chain(&self.elements[..j]).collect();
            rotated.len() == other.elements.len() && rotated.iter().zip(&other.elements).all(|(a, b)| *a == b)
        })
    }
}

/// A cycle completion of a finite cyclic order: cutpoints and index
/// elements alternate, starting with a cutpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCompletion {
    cycle: Vec<String>,
    pos: HashMap<String, usize>,
}

impl CycleCompletion {
    /// `cycle` alternates cutpoint, index, cutpoint, index, ...
    pub fn new<S: Into<String>>(cycle: impl IntoIterator<Item = S>) -> Result<Self, OrderError> {
        let cycle: Vec<String> = cycle.into_iter().map(Into::into).collect();
        if cycle.len() % 2 != 0 {
            return Err(OrderError::NotAlternating);
        }
        if cycle.len() < 2 {
            return Err(OrderError::TooSmall { needed: 1, found: 0 });
        }
        let pos = index_labels(&cycle)?;
        Ok(CycleCompletion { cycle, pos })
    }

    pub fn cycle(&self) -> &[String] {
        &self.cycle
    }

    pub fn is_cutpoint_at(&self, p: usize) -> bool {
        p % 2 == 0
    }

    pub fn is_cutpoint(&self, label: &str) -> bool {
        self.position(label).is_some_and(|p| p % 2 == 0)
    }

    pub fn is_index(&self, label: &str) -> bool {
        self.position(label).is_some_and(|p| p % 2 == 1)
    }

    pub fn index(&self) -> Vec<String> {
        self.cycle.iter().skip(1).step_by(2).cloned().collect()
    }

    pub fn cutpoints(&self) -> Vec<String> {
        self.cycle.iter().step_by(2).cloned().collect()
    }

    /// Number of index elements (equal to the number of cutpoints).
    pub fn index_len(&self) -> usize {
        self.cycle.len() / 2
    }

    /// The cyclic order induced on the index.
    pub fn index_order(&self) -> CyclicOrder {
        CyclicOrder::new(self.index()).expect("labels are distinct")
    }

    pub fn as_cyclic_order(&self) -> CyclicOrder {
        CyclicOrder::new(self.cycle.iter().cloned()).expect("labels are distinct")
    }

    /// Checks the cycle completion axioms by exhaustive scan: every
    /// non-trivial interval of the index is `[v,w] ∩ I` for exactly one pair
    /// of cutpoints, and distinct cutpoints bound a non-trivial interval.
    pub fn check_axioms(&self) -> Result<(), String> {
        let n = self.index_len();
        if n < 2 {
            return Err(format!("index has {n} elements, need at least 2"));
        }
        let index_order = self.index_order();
        let mut bounded: HashMap<Vec<bool>, Vec<(usize, usize)>> = HashMap::new();
        for v in (0..self.len()).step_by(2) {
            for w in (0..self.len()).step_by(2) {
                let mut members = vec![false; n];
                for p in self.interval_at(v, w, true, true) {
                    if p % 2 == 1 {
                        members[p / 2] = true;
                    }
                }
                let size = members.iter().filter(|&&m| m).count();
                if v != w && (size == 0 || size == n) {
                    return Err(format!(
                        "[{}, {}] meets the index trivially",
                        self.cycle[v], self.cycle[w]
                    ));
                }
                bounded.entry(members).or_default().push((v, w));
            }
        }
        if n > 20 {
            return Err("index too large for exhaustive interval scan".into());
        }
        for mask in 1u32..((1u32 << n) - 1) {
            let members: Vec<bool> = (0..n).map(|j| mask >> j & 1 == 1).collect();
            // index position j is label cycle[2j+1], which is also the j-th
            // element of the index order up to rotation
            let as_labels: Vec<&str> = (0..n).filter(|&j| members[j]).map(|j| self.cycle[2 * j + 1].as_str()).collect();
            if !index_order.is_interval(&as_labels).expect("labels exist") {
                continue;
            }
            let count = bounded.get(&members).map_or(0, Vec::len);
            if count != 1 {
                return Err(format!("interval {as_labels:?} is bounded by {count} cutpoint pairs"));
            }
        }
        Ok(())
    }
}

impl Cyclic for CycleCompletion {
    fn labels(&self) -> &[String] {
        &self.cycle
    }

    fn position(&self, label: &str) -> Option<usize> {
        self.pos.get(label).copied()
    }
}

fn fresh_label(base: String, taken: &dyn Fn(&str) -> bool) -> String {
    let mut label = base;
    while taken(&label) {
        label.push('\'');
    }
    label
}

/// The interleaving `[c0, i0, c1, i1, ...]` with fresh cutpoint labels.
pub fn completion(i: &CyclicOrder) -> Result<CycleCompletion, OrderError> {
    if i.len() < 2 {
        return Err(OrderError::TooSmall { needed: 2, found: i.len() });
    }
    let mut cycle = Vec::with_capacity(2 * i.len());
    for (j, e) in i.elements().iter().enumerate() {
        cycle.push(fresh_label(format!("c{j}"), &|l| i.contains(l)));
        cycle.push(e.clone());
    }
    CycleCompletion::new(cycle)
}

fn cut_label(elements: &[String]) -> String {
    format!("<{}>", elements.join(","))
}

/// The completion built from the initial segments of the cut `l`: each
/// initial segment `S'` becomes the cut `l↾(S∖S') ⊕ l↾S'`. Cutpoints are
/// labelled `<e0,e1,...>` after the cut they stand for.
pub fn completion_from_cut(l: &LinearCut) -> Result<CycleCompletion, OrderError> {
    let n = l.elements.len();
    if n == 0 {
        return Err(OrderError::TooSmall { needed: 1, found: 0 });
    }
    let ground: BTreeSet<&String> = l.elements.iter().collect();
    let mut cycle = Vec::with_capacity(2 * n);
    // D'(L): segment of length j, then element j, for j = 0..n
    for j in 0..n {
        let (segment, rest) = l.elements.split_at(j);
        let eta: Vec<String> = rest.iter().chain(segment).cloned().collect();
        cycle.push(fresh_label(cut_label(&eta), &|s| ground.contains(&s.to_string())));
        cycle.push(l.elements[j].clone());
    }
    CycleCompletion::new(cycle)
}

/// The completion built from the first cut of `i`.
pub fn completion_via_cuts(i: &CyclicOrder) -> Result<CycleCompletion, OrderError> {
    let cut = i
        .cuts()
        .into_iter()
        .next()
        .ok_or(OrderError::TooSmall { needed: 1, found: 0 })?;
    completion_from_cut(&cut)
}

/// Every bijection `a -> b` preserving the cyclic order and fixing each
/// label in `fixed`. Exhaustive over the free labels.
pub fn isomorphisms_fixing<A: Cyclic, B: Cyclic>(a: &A, b: &B, fixed: &[String]) -> Vec<BTreeMap<String, String>> {
    let n = a.len();
    if n != b.len() {
        return Vec::new();
    }
    let fixed_set: BTreeSet<&String> = fixed.iter().collect();
    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for f in fixed {
        let (Some(pa), Some(pb)) = (a.position(f), b.position(f)) else {
            return Vec::new();
        };
        image[pa] = Some(pb);
        used[pb] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&p| !fixed_set.contains(&a.labels()[p])).collect();
    let free_targets: Vec<usize> = (0..n).filter(|&p| !used[p]).collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; free_targets.len()];
    fn rec<A: Cyclic, B: Cyclic>(
        a: &A,
        b: &B,
        free: &[usize],
        targets: &[usize],
        depth: usize,
        chosen: &mut [bool],
        image: &mut [Option<usize>],
        out: &mut Vec<BTreeMap<String, String>>,
    ) {
        if depth == free.len() {
            let img: Vec<usize> = image.iter().map(|x| x.unwrap()).collect();
            let n = img.len();
            let ok = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| a.triple_at(x, y, z) == b.triple_at(img[x], img[y], img[z])))
            });
            if ok {
                out.push(
                    (0..n)
                        .map(|p| (a.labels()[p].clone(), b.labels()[img[p]].clone()))
                        .collect(),
                );
            }
            return;
        }
        for t in 0..targets.len() {
            if !chosen[t] {
                chosen[t] = true;
                image[free[depth]] = Some(targets[t]);
                rec(a, b, free, targets, depth + 1, chosen, image, out);
                image[free[depth]] = None;
                chosen[t] = false;
            }
        }
    }
    rec(a, b, &free, &free_targets, 0, &mut chosen, &mut image, &mut out);
    out
}

/// A total map between two cyclically ordered label sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap<T = CyclicOrder> {
    pub domain: T,
    pub codomain: T,
    pub mapping: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapClass {
    Monotone,
    MirrorMonotone,
    Neither,
}

impl<T: Cyclic> MonotoneMap<T> {
    /// Checks that the map is total and lands in the codomain.
    pub fn new(domain: T, codomain: T, mapping: BTreeMap<String, String>) -> Result<Self, OrderError> {
        for l in domain.labels() {
            let img = mapping.get(l).ok_or_else(|| OrderError::NotTotal(l.clone()))?;
            codomain.pos(img)?;
        }
        for l in mapping.keys() {
            domain.pos(l)?;
        }
        Ok(MonotoneMap { domain, codomain, mapping })
    }

    fn image_positions(&self) -> Vec<usize> {
        self.domain
            .labels()
            .iter()
            .map(|l| self.codomain.position(&self.mapping[l]).expect("checked at construction"))
            .collect()
    }

    pub fn apply(&self, label: &str) -> Option<&str> {
        self.mapping.get(label).map(String::as_str)
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.len()];
        for p in self.image_positions() {
            hit[p] = true;
        }
        hit.into_iter().all(|h| h)
    }

    fn triple_condition(&self, reversed: bool) -> bool {
        let img = self.image_positions();
        let n = img.len();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let hit = if reversed {
                        self.codomain.triple_at(img[w], img[v], img[u])
                    } else {
                        self.codomain.triple_at(img[u], img[v], img[w])
                    };
                    if hit && !self.domain.triple_at(u, v, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `f(v) ∈ ]f(u), f(w)[` implies `v ∈ ]u, w[`.
    pub fn is_monotone(&self) -> bool {
        self.triple_condition(false)
    }

    /// Monotone into the mirror of the codomain.
    pub fn is_mirror_monotone(&self) -> bool {
        self.triple_condition(true)
    }

    pub fn classify(&self) -> MapClass {
        if self.is_monotone() {
            MapClass::Monotone
        } else if self.is_mirror_monotone() {
            MapClass::MirrorMonotone
        } else {
            MapClass::Neither
        }
    }

    /// Whether the preimage of every interval of the codomain is an interval.
    pub fn preserves_interval_preimages(&self) -> bool {
        let img = self.image_positions();
        let m = self.codomain.len();
        for a in 0..m {
            for b in 0..m {
                for (cl, cr) in [(true, true), (false, false)] {
                    let mut target = vec![false; m];
                    for p in self.codomain.interval_at(a, b, cl, cr) {
                        target[p] = true;
                    }
                    let pre: Vec<bool> = img.iter().map(|&p| target[p]).collect();
                    if !self.domain.is_interval_at(&pre) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether each fibre `f⁻¹(y)` is an interval of the domain.
    pub fn has_interval_fibres(&self) -> bool {
        let img = self.image_positions();
        (0..self.codomain.len()).all(|y| {
            let fibre: Vec<bool> = img.iter().map(|&p| p == y).collect();
            self.domain.is_interval_at(&fibre)
        })
    }
}

pub fn classify_map<T: Cyclic>(f: &MonotoneMap<T>) -> MapClass {
    f.classify()
}

/// Extends a surjective monotone `f: I' -> I` to the unique surjective
/// monotone `F: C(I') -> C(I)` with `F↾I' = f`.
///
/// A cutpoint with neighbours `a`, `b` goes to `f(a)` when `f(a) = f(b)` and
/// otherwise to the cutpoint following `f(a)`.
pub fn extend_monotone(f: &MonotoneMap<CyclicOrder>) -> Result<MonotoneMap<CycleCompletion>, OrderError> {
    let dom = completion(&f.domain)?;
    let cod = completion(&f.codomain)?;
    extend_monotone_between(f, dom, cod)
}

/// As [`extend_monotone`], onto the given completions of the domain and
/// codomain.
pub fn extend_monotone_between(
    f: &MonotoneMap<CyclicOrder>,
    dom: CycleCompletion,
    cod: CycleCompletion,
) -> Result<MonotoneMap<CycleCompletion>, OrderError> {
    if f.codomain.len() < 2 {
        return Err(OrderError::TooSmall { needed: 2, found: f.codomain.len() });
    }
    if let Some(missing) = f
        .codomain
        .elements()
        .iter()
        .find(|y| !f.mapping.values().any(|v| v == *y))
    {
        return Err(OrderError::NotSurjective(missing.clone()));
    }
    if !f.is_monotone() || !f.has_interval_fibres() {
        return Err(OrderError::NotMonotone);
    }
    let n = dom.len();
    let mut mapping = BTreeMap::new();
    for p in 0..n {
        let label = &dom.labels()[p];
        if p % 2 == 1 {
            mapping.insert(label.clone(), f.mapping[label].clone());
            continue;
        }
        let a = &dom.labels()[(p + n - 1) % n];
        let b = &dom.labels()[(p + 1) % n];
        let (fa, fb) = (&f.mapping[a], &f.mapping[b]);
        let image = if fa == fb { fa.clone() } else { cod.successor(fa)? };
        mapping.insert(label.clone(), image);
    }
    let big = MonotoneMap::new(dom, cod, mapping)?;
    if !big.is_monotone() || !big.is_surjective() {
        return Err(OrderError::NotMonotone);
    }
    Ok(big)
}

/// The unique preimage of the codomain cutpoint `v`.
pub fn cutpoint_preimage(f: &MonotoneMap<CycleCompletion>, v: &str) -> Result<String, OrderError> {
    if !f.codomain.is_cutpoint(v) {
        return Err(OrderError::NotACutpoint(v.to_string()));
    }
    let pre: Vec<&String> = f.mapping.iter().filter(|(_, img)| *img == v).map(|(k, _)| k).collect();
    match pre.as_slice() {
        [w] => Ok((*w).clone()),
        [] => Err(OrderError::NotSurjective(v.to_string())),
        _ => Err(OrderError::NotMonotone),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(xs: &[&str]) -> CyclicOrder {
        CyclicOrder::new(xs.iter().copied()).unwrap()
    }

    fn map(dom: &[&str], cod: &[&str], pairs: &[(&str, &str)]) -> MonotoneMap {
        MonotoneMap::new(
            order(dom),
            order(cod),
            pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn triples_and_intervals() {
        let z = order(&["a", "b", "c"]);
        assert!(z.cyclic_triple("a", "b", "c").unwrap());
        assert!(!z.cyclic_triple("c", "b", "a").unwrap());
        assert!(!z.cyclic_triple("a", "a", "b").unwrap());
        assert!(z.cyclic_triple("a", "b", "x").is_err());

        let z = order(&["a", "b", "c", "d"]);
        assert_eq!(z.interval("a", "c", false, false).unwrap(), vec!["b"]);
        assert_eq!(z.interval("a", "a", true, true).unwrap(), vec!["a"]);
        assert!(z.interval("a", "a", false, false).unwrap().is_empty());
        assert_eq!(z.interval("c", "b", true, true).unwrap(), vec!["c", "d", "a", "b"]);
        assert!(z.is_interval(&["d", "a"]).unwrap());
        assert!(!z.is_interval(&["a", "c"]).unwrap());
        assert!(z.is_interval(&[]).unwrap());
        assert_eq!(order(&["a", "b", "c"]).successor("c").unwrap(), "a");
        assert_eq!(order(&["a", "b", "c"]).predecessor("a").unwrap(), "c");
    }

    #[test]
    fn normalisation_and_cuts() {
        assert_eq!(order(&["c", "a", "b"]).elements(), &["a", "b", "c"]);
        assert!(CyclicOrder::new(["a", "a"]).is_err());
        let cuts: Vec<Vec<String>> = order(&["a", "b", "c"]).cuts().into_iter().map(|c| c.elements).collect();
        assert_eq!(cuts, vec![vec!["a", "b", "c"], vec!["b", "c", "a"], vec!["c", "a", "b"]]);
        for cut in order(&["a", "b", "c"]).cuts() {
            assert_eq!(cut.induced(), order(&["a", "b", "c"]));
        }
    }

    #[test]
    fn interval_definition_matches_entry_count() {
        let z = order(&["a", "b", "c", "d", "e"]);
        let labels = z.elements().to_vec();
        for mask in 0u32..32 {
            let subset: Vec<&str> = (0..5).filter(|j| mask >> j & 1 == 1).map(|j| labels[j].as_str()).collect();
            let by_definition = subset.iter().all(|s| {
                subset.iter().all(|t| {
                    let st = z.interval(s, t, true, true).unwrap();
                    let ts = z.interval(t, s, true, true).unwrap();
                    st.iter().all(|x| subset.contains(&x.as_str())) || ts.iter().all(|x| subset.contains(&x.as_str()))
                })
            });
            assert_eq!(z.is_interval(&subset).unwrap(), by_definition, "{subset:?}");
        }
    }

    #[test]
    fn completion_shape() {
        let c = completion(&order(&["a", "b"])).unwrap();
        assert_eq!(c.cycle(), &["c0", "a", "c1", "b"]);
        c.check_axioms().unwrap();
        assert!(completion(&order(&["a"])).is_err());
        let clash = completion(&order(&["c0", "x"])).unwrap();
        assert_eq!(clash.cutpoints(), vec!["c0'", "c1"]);
    }

    #[test]
    fn completion_via_cuts_shape() {
        let c = completion_via_cuts(&order(&["a", "b"])).unwrap();
        assert_eq!(c.cycle(), &["<a,b>", "a", "<b,a>", "b"]);
        let isos = isomorphisms_fixing(&c, &completion(&order(&["a", "b"])).unwrap(), &["a".into(), "b".into()]);
        assert_eq!(isos.len(), 1);
    }

    #[test]
    fn classify_examples() {
        let id = map(&["a", "b", "c", "d"], &["a", "b", "c", "d"], &[("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")]);
        assert_eq!(id.classify(), MapClass::Monotone);
        let rev = map(&["a", "b", "c", "d"], &["a", "b", "c", "d"], &[("a", "d"), ("b", "c"), ("c", "b"), ("d", "a")]);
        assert_eq!(rev.classify(), MapClass::MirrorMonotone);
        let scramble = map(&["a", "b", "c", "d"], &["a", "b", "c", "d"], &[("a", "a"), ("b", "c"), ("c", "b"), ("d", "d")]);
        assert_eq!(scramble.classify(), MapClass::Neither);
    }

    #[test]
    fn extension_of_collapse() {
        let f = map(&["a", "b", "c", "d"], &["x", "y"], &[("a", "x"), ("b", "x"), ("c", "y"), ("d", "y")]);
        let big = extend_monotone(&f).unwrap();
        // domain completion [c0,a,c1,b,c2,c,c3,d]; codomain [c0,x,c1,y]
        assert_eq!(big.apply("c2"), Some("c1"));
        assert_eq!(big.apply("c0"), Some("c0"));
        assert_eq!(big.apply("c1"), Some("x"));
        assert_eq!(cutpoint_preimage(&big, "c1").unwrap(), "c2");
        assert!(cutpoint_preimage(&big, "x").is_err());

        let id = map(&["a", "b", "c"], &["a", "b", "c"], &[("a", "a"), ("b", "b"), ("c", "c")]);
        let big = extend_monotone(&id).unwrap();
        assert!(big.mapping.iter().all(|(k, v)| k == v));

        let alternating = map(&["a", "b", "c", "d"], &["x", "y"], &[("a", "x"), ("b", "y"), ("c", "x"), ("d", "y")]);
        assert!(alternating.is_monotone());
        assert_eq!(extend_monotone(&alternating), Err(OrderError::NotMonotone));
    }
}
