//! Separation systems `S_k`, orientations, profiles and tangles.
//!
//! Enumeration works per separator. For a separator `T` of order `< k` a
//! profile either points at one component `β(T)` of `G − T`, choosing every
//! separation with `β(T)` on its right side, or (only when `G − T` is
//! connected and `|T| = k − 1`) chooses `(V, T)`. Separators with a connected
//! complement are therefore fixed up to that single exception, and the search
//! only branches over separators that leave at least two components.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::ProfileError;
use crate::flower::PseudoFlower;
use crate::graph::Graph;
use crate::universe::{chain_supremum, enumerate_separations, for_each_subset_up_to, Separation};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_PAIRS: usize = 64;

/// Largest number of chosen separations [`is_closed`] will scan pairwise.
pub const CLOSED_CHECK_LIMIT: usize = 20_000;

/// All separations of a graph with order `< k`, in canonical order.
pub struct SeparationSystem {
    graph: Graph,
    k: usize,
    members: Vec<Separation>,
    index: HashMap<Separation, usize>,
    inverse: Vec<usize>,
    pair: Vec<usize>,
    pair_reps: Vec<usize>,
}

impl SeparationSystem {
    pub fn new(g: &Graph, k: usize) -> Result<Self, ProfileError> {
        if k == 0 {
            return Err(ProfileError::ZeroOrder);
        }
        let members = enumerate_separations(g, k - 1);
        let index: HashMap<Separation, usize> = members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let inverse: Vec<usize> = members.iter().map(|s| index[&s.inverse()]).collect();
        let mut pair = vec![0; members.len()];
        let mut pair_reps = Vec::new();
        for i in 0..members.len() {
            if inverse[i] >= i {
                pair[i] = pair_reps.len();
                pair[inverse[i]] = pair_reps.len();
                pair_reps.push(i);
            }
        }
        Ok(SeparationSystem { graph: g.clone(), k, members, index, inverse, pair, pair_reps })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ground(&self) -> VertexSet {
        self.graph.vertices()
    }

    /// The order bound: members have order `< k`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Separation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.pair_reps.len()
    }

    /// The first member of each pair `{s, s*}`, in canonical order.
    pub fn pair_representatives(&self) -> impl Iterator<Item = Separation> + '_ {
        self.pair_reps.iter().map(|&i| self.members[i])
    }

    pub fn contains(&self, s: Separation) -> bool {
        self.index.contains_key(&s)
    }

    pub fn index_of(&self, s: Separation) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn pair_of(&self, i: usize) -> usize {
        self.pair[i]
    }

    fn same_as(&self, other: &SeparationSystem) -> bool {
        std::ptr::eq(self, other) || (self.k == other.k && self.graph == other.graph)
    }
}

impl fmt::Debug for SeparationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{} ({} pairs on {} vertices)", self.k, self.pair_count(), self.graph.vertex_count())
    }
}

pub fn separation_system(g: &Graph, k: usize) -> Result<SeparationSystem, ProfileError> {
    SeparationSystem::new(g, k)
}

/// A set of members of a separation system, stored as a bitmap over the
/// canonical member list. Built through [`Orientation::from_chosen`] it
/// picks exactly one element of every pair.
#[derive(Clone)]
pub struct Orientation {
    system: Arc<SeparationSystem>,
    bits: Vec<u64>,
}

impl Orientation {
    pub fn from_chosen(
        system: &Arc<SeparationSystem>,
        chosen: impl IntoIterator<Item = Separation>,
    ) -> Result<Self, ProfileError> {
        let mut bits = vec![0u64; system.len().div_ceil(64)];
        for s in chosen {
            let i = system.index_of(s).ok_or_else(|| ProfileError::NotInSystem(s.to_string()))?;
            bits[i / 64] |= 1 << (i % 64);
        }
        let o = Orientation { system: Arc::clone(system), bits };
        for (p, &i) in system.pair_reps.iter().enumerate() {
            let j = system.inverse[i];
            match (o.contains_index(i), o.contains_index(j)) {
                (false, false) => return Err(ProfileError::Incomplete(p)),
                (true, true) if i != j => return Err(ProfileError::BothSides(p)),
                _ => {}
            }
        }
        Ok(o)
    }

    fn from_fn(system: &Arc<SeparationSystem>, mut choose: impl FnMut(usize) -> bool) -> Self {
        let mut bits = vec![0u64; system.len().div_ceil(64)];
        for i in 0..system.len() {
            if choose(i) {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        Orientation { system: Arc::clone(system), bits }
    }

    pub fn system(&self) -> &Arc<SeparationSystem> {
        &self.system
    }

    pub fn k(&self) -> usize {
        self.system.k
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Whether `s` is chosen; false for separations outside the system.
    pub fn contains(&self, s: Separation) -> bool {
        self.system.index_of(s).is_some_and(|i| self.contains_index(i))
    }

    /// Whether the system contains `s`, so that exactly one of `s`, `s*`
    /// is chosen.
    pub fn orients(&self, s: Separation) -> bool {
        self.system.contains(s)
    }

    pub fn chosen_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn chosen(&self) -> impl Iterator<Item = Separation> + '_ {
        self.chosen_indices().map(|i| self.system.members[i])
    }

    pub fn chosen_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.bits.iter().zip(&other.bits) {
            let x = a ^ b;
            if x != 0 {
                let low = x & x.wrapping_neg();
                return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.system.same_as(&other.system) && self.bits == other.bits
    }
}

impl Eq for Orientation {}

impl Hash for Orientation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.system.k.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chosen_count() <= 16 {
            f.debug_set().entries(self.chosen()).finish()
        } else {
            write!(f, "{{{} separations of S_{}}}", self.chosen_count(), self.system.k)
        }
    }
}

/// `r, s` chosen with `r* ≤ s` forces `{r, r*} = {s, s*}`.
pub fn is_consistent(o: &Orientation) -> bool {
    let sys = &o.system;
    let chosen: Vec<usize> = o.chosen_indices().collect();
    for &r in &chosen {
        let rinv = sys.members[sys.inverse[r]];
        for &s in &chosen {
            if sys.pair[r] != sys.pair[s] && rinv.leq(sys.members[s]) {
                return false;
            }
        }
    }
    true
}

/// Consistent, and `(r ∨ s)*` is never chosen for chosen `r, s`.
pub fn is_profile(o: &Orientation) -> bool {
    if !is_consistent(o) {
        return false;
    }
    let sys = &o.system;
    let chosen: Vec<usize> = o.chosen_indices().collect();
    for (x, &r) in chosen.iter().enumerate() {
        for &s in &chosen[x..] {
            let u = sys.members[r].join(sys.members[s]);
            if u.order() < sys.k {
                let ui = sys.index[&u];
                if o.contains_index(sys.inverse[ui]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Consistent, and no three chosen `(A_i, B_i)` have `A_1 ∪ A_2 ∪ A_3 = V`.
pub fn is_tangle(o: &Orientation) -> bool {
    if !is_consistent(o) {
        return false;
    }
    let ground = o.system.ground();
    let sides: BTreeSet<VertexSet> = o.chosen().map(|s| s.a).collect();
    let maximal: Vec<VertexSet> = sides
        .iter()
        .copied()
        .filter(|&a| !sides.iter().any(|&b| b != a && a.is_subset(b)))
        .collect();
    for (x, &a1) in maximal.iter().enumerate() {
        for (y, &a2) in maximal.iter().enumerate().skip(x) {
            let a12 = a1.union(a2);
            if maximal[y..].iter().any(|&a3| a12.union(a3) == ground) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Profile,
    Tangle,
}

/// An orientation known to be a profile; `kind` is `Tangle` when it is also
/// a tangle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    orientation: Orientation,
    kind: ProfileKind,
}

impl Profile {
    /// Checks the orientation and records whether it is a tangle.
    pub fn new(orientation: Orientation) -> Result<Self, ProfileError> {
        if !is_profile(&orientation) {
            return Err(ProfileError::NotAProfile(format!("{orientation:?}")));
        }
        let kind = if is_tangle(&orientation) { ProfileKind::Tangle } else { ProfileKind::Profile };
        Ok(Profile { orientation, kind })
    }

    /// Checks the orientation against a stated kind.
    pub fn with_kind(orientation: Orientation, kind: ProfileKind) -> Result<Self, ProfileError> {
        let p = Profile::new(orientation)?;
        if p.kind != kind {
            return Err(ProfileError::NotAProfile(format!("stated kind {kind:?} but found {:?}", p.kind)));
        }
        Ok(p)
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn is_tangle(&self) -> bool {
        self.kind == ProfileKind::Tangle
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }
}

impl Deref for Profile {
    type Target = Orientation;

    fn deref(&self) -> &Orientation {
        &self.orientation
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {:?}", self.kind, self.orientation)
    }
}

/// A non-empty list of profiles over one separation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileSet {
    profiles: Vec<Profile>,
}

impl ProfileSet {
    pub fn new(profiles: Vec<Profile>) -> Result<Self, ProfileError> {
        let first = profiles.first().ok_or(ProfileError::EmptySet)?;
        if profiles.iter().any(|p| !p.system.same_as(&first.system)) {
            return Err(ProfileError::SystemMismatch);
        }
        Ok(ProfileSet { profiles })
    }

    pub fn system(&self) -> &Arc<SeparationSystem> {
        &self.profiles[0].system
    }

    pub fn into_vec(self) -> Vec<Profile> {
        self.profiles
    }
}

impl Deref for ProfileSet {
    type Target = [Profile];

    fn deref(&self) -> &[Profile] {
        &self.profiles
    }
}

/// Separators of order `≤ m` split by the number of components they leave.
struct Structure {
    m: usize,
    ground: VertexSet,
    multi: Vec<(VertexSet, Vec<VertexSet>)>,
    single: HashSet<VertexSet>,
}

impl Structure {
    fn new(g: &Graph, m: usize) -> Self {
        let ground = g.vertices();
        let mut multi = Vec::new();
        let mut single = HashSet::new();
        for_each_subset_up_to(g.vertex_count(), m.min(g.vertex_count()), &mut |t| {
            let comps = g.components_within(ground.difference(t));
            match comps.len() {
                0 => {}
                1 => {
                    single.insert(t);
                }
                _ => multi.push((t, comps)),
            }
        });
        multi.sort_by_key(|(t, _)| (t.len(), *t));
        Structure { m, ground, multi, single }
    }

    fn beta(&self, assign: &[usize], i: usize) -> VertexSet {
        self.multi[i].1[assign[i]]
    }

    /// The choices for `(A, B)`, `(C, D)` with maximal left sides never have
    /// `B ⊆ C` and `D ⊆ A`.
    fn touch(&self, assign: &[usize], i: usize, j: usize) -> bool {
        let (ti, bi) = (self.multi[i].0, self.beta(assign, i));
        let (tj, bj) = (self.multi[j].0, self.beta(assign, j));
        !(bi.is_disjoint(bj) && ti.is_disjoint(bj) && tj.is_disjoint(bi))
    }

    fn is_tangle(&self, assign: &[usize]) -> bool {
        let m = self.m;
        if self.ground.len() <= 3 * m {
            return false;
        }
        let b: Vec<VertexSet> = (0..assign.len()).map(|i| self.beta(assign, i)).collect();
        for i in 0..b.len() {
            if b[i].len() <= 2 * m {
                return false;
            }
            for j in i + 1..b.len() {
                let bij = b[i].intersection(b[j]);
                if bij.len() <= m || b[j + 1..].iter().any(|&bl| bij.is_disjoint(bl)) {
                    return false;
                }
            }
        }
        true
    }

    /// Proper subsets of `s` with connected complement never cover `s` in
    /// pairs. Needed when `(V, s)` is chosen, since their join is `(s, V)`.
    fn co_small_allowed(&self, s: VertexSet) -> bool {
        let cut: Vec<VertexSet> = s.iter().map(|v| s.difference(VertexSet::singleton(v))).collect();
        if cut.iter().filter(|t| self.single.contains(t)).count() >= 2 {
            return false;
        }
        let elems = s.to_vec();
        let mut subsets = Vec::new();
        for mask in 0u64..(1u64 << elems.len()) - 1 {
            let t: VertexSet = elems.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
            if self.single.contains(&t) {
                subsets.push(t);
            }
        }
        !subsets.iter().enumerate().any(|(x, &t1)| subsets[x..].iter().any(|&t2| t1.union(t2) == s))
    }
}

fn search(
    st: &Structure,
    assign: &mut Vec<usize>,
    allowed: &dyn Fn(&[usize]) -> bool,
    leaf: &mut dyn FnMut(&[usize]),
) {
    let i = assign.len();
    if i == st.multi.len() {
        leaf(assign);
        return;
    }
    for c in 0..st.multi[i].1.len() {
        assign.push(c);
        if allowed(assign) {
            search(st, assign, allowed, leaf);
        }
        assign.pop();
    }
}

struct Builder<'a> {
    system: &'a Arc<SeparationSystem>,
    st: &'a Structure,
    member_multi: Vec<Option<usize>>,
}

impl<'a> Builder<'a> {
    fn new(system: &'a Arc<SeparationSystem>, st: &'a Structure) -> Self {
        let pos: HashMap<VertexSet, usize> = st.multi.iter().enumerate().map(|(i, (t, _))| (*t, i)).collect();
        let member_multi = system.members.iter().map(|s| pos.get(&s.separator()).copied()).collect();
        Builder { system, st, member_multi }
    }

    fn orientation(&self, assign: &[usize], co_small: Option<VertexSet>) -> Orientation {
        let ground = self.st.ground;
        Orientation::from_fn(self.system, |i| {
            let s = self.system.members[i];
            match self.member_multi[i] {
                Some(x) => self.st.beta(assign, x).is_disjoint(s.a),
                None if Some(s.separator()) == co_small => s.a == ground,
                None => s.a.is_subset(s.b),
            }
        })
    }

    /// Join closure, checked only for pairs involving a separation whose
    /// separator leaves several components or the chosen `(V, S)`; joins of
    /// two `(T, V)` are `(T ∪ T', V)` and are covered by `co_small_allowed`.
    fn has_profile_property(&self, o: &Orientation) -> bool {
        let sys = self.system;
        let m = self.st.m;
        let ground = self.st.ground;
        let chosen: Vec<usize> = o.chosen_indices().collect();
        for &r in &chosen {
            let rs = sys.members[r];
            if self.member_multi[r].is_none() && rs.a != ground {
                continue;
            }
            for &s in &chosen {
                let u = rs.join(sys.members[s]);
                if u.order() <= m {
                    let ui = sys.index[&u];
                    if !o.contains_index(ui) || sys.inverse[ui] == ui {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All profiles, or all tangles, of `S_k` in canonical order. Fails when the
/// system has more than `max_pairs` pairs.
pub fn enumerate_profiles(
    g: &Graph,
    k: usize,
    tangles_only: bool,
    max_pairs: usize,
) -> Result<Vec<Profile>, ProfileError> {
    let system = SeparationSystem::new(g, k)?;
    if system.pair_count() > max_pairs {
        return Err(ProfileError::Guard { pairs: system.pair_count(), max_pairs });
    }
    Ok(profiles_of(&Arc::new(system), tangles_only))
}

/// All profiles, or all tangles, of a separation system in canonical order.
pub fn profiles_of(system: &Arc<SeparationSystem>, tangles_only: bool) -> Vec<Profile> {
    let m = system.k - 1;
    let mut out = Vec::new();
    if system.ground().len() <= m {
        // (V, V) is a member and equals its own inverse.
        return out;
    }
    let st = Structure::new(&system.graph, m);
    let builder = Builder::new(system, &st);
    let mut assign = Vec::new();

    if tangles_only {
        if st.ground.len() > 3 * m {
            let allowed = |a: &[usize]| {
                let i = a.len() - 1;
                let bi = st.beta(a, i);
                bi.len() > 2 * m
                    && (0..i).all(|j| {
                        let bij = bi.intersection(st.beta(a, j));
                        bij.len() > m && (0..j).all(|l| !bij.is_disjoint(st.beta(a, l)))
                    })
            };
            search(&st, &mut assign, &allowed, &mut |a| {
                let orientation = builder.orientation(a, None);
                out.push(Profile { orientation, kind: ProfileKind::Tangle });
            });
        }
    } else {
        let touch = |a: &[usize]| {
            let i = a.len() - 1;
            (0..i).all(|j| st.touch(a, i, j))
        };
        search(&st, &mut assign, &touch, &mut |a| {
            let orientation = builder.orientation(a, None);
            if builder.has_profile_property(&orientation) {
                let kind = if st.is_tangle(a) { ProfileKind::Tangle } else { ProfileKind::Profile };
                out.push(Profile { orientation, kind });
            }
        });
        let mut candidates: Vec<VertexSet> = st.single.iter().copied().filter(|s| s.len() == m).collect();
        candidates.sort();
        for s in candidates {
            if !st.co_small_allowed(s) {
                continue;
            }
            let allowed = |a: &[usize]| {
                let i = a.len() - 1;
                let (t, b) = (st.multi[i].0, st.beta(a, i));
                !b.is_disjoint(s) && s.is_subset(t.union(b)) && (0..i).all(|j| st.touch(a, i, j))
            };
            search(&st, &mut assign, &allowed, &mut |a| {
                let orientation = builder.orientation(a, Some(s));
                if builder.has_profile_property(&orientation) {
                    out.push(Profile { orientation, kind: ProfileKind::Profile });
                }
            });
        }
    }
    out.sort_by(|p, q| p.orientation.canonical_cmp(&q.orientation));
    out
}

fn require_member(o: &Orientation, s: Separation) -> Result<(), ProfileError> {
    if o.orients(s) {
        Ok(())
    } else {
        Err(ProfileError::NotInSystem(s.to_string()))
    }
}

/// `s ∈ p` and `s* ∈ q`, or the other way round.
pub fn distinguishes(s: Separation, p: &Orientation, q: &Orientation) -> Result<bool, ProfileError> {
    require_member(p, s)?;
    require_member(q, s)?;
    let si = s.inverse();
    Ok(p.contains(s) && q.contains(si) || p.contains(si) && q.contains(s))
}

/// Index pairs `(i, j)`, `i < j`, of profiles distinguished by some
/// separation in `seps`.
pub fn distinguished_pairs(seps: &[Separation], profiles: &[Profile]) -> Result<BTreeSet<(usize, usize)>, ProfileError> {
    let mut out = BTreeSet::new();
    for &s in seps {
        let sig = signature(s, profiles)?;
        for i in 0..sig.len() {
            for j in i + 1..sig.len() {
                if sig[i] != sig[j] {
                    out.insert((i, j));
                }
            }
        }
    }
    Ok(out)
}

/// Pairs of profiles distinguished by separations the flower displays.
pub fn flower_distinguished_pairs(f: &PseudoFlower, profiles: &[Profile]) -> Result<BTreeSet<(usize, usize)>, ProfileError> {
    distinguished_pairs(&f.displayed(), profiles)
}

/// Which profiles contain `s`.
pub fn signature(s: Separation, profiles: &[Profile]) -> Result<Vec<bool>, ProfileError> {
    profiles
        .iter()
        .map(|p| {
            require_member(p, s)?;
            Ok(p.contains(s))
        })
        .collect()
}

/// Whether `s` distinguishes some two of the profiles.
pub fn is_relevant(s: Separation, profiles: &[Profile]) -> Result<bool, ProfileError> {
    let sig = signature(s, profiles)?;
    Ok(sig.iter().any(|&b| b) && sig.iter().any(|&b| !b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `S(v, w) ∈ P` for every other cutpoint `w`.
    AllFromV,
    /// `S(w, v) ∈ P` for every other cutpoint `w`.
    AllTowardV,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Location {
    pub cutpoint: String,
    pub side: Side,
}

/// The first cutpoint in cycle order that locates `p`.
pub fn locate(f: &PseudoFlower, p: &Orientation) -> Result<Location, ProfileError> {
    let seps = f.all_separations();
    for &(_, _, s) in &seps {
        require_member(p, s)?;
    }
    for v in f.cutpoint_positions() {
        let side = if seps.iter().filter(|(a, _, _)| *a == v).all(|&(_, _, s)| p.contains(s)) {
            Side::AllFromV
        } else if seps.iter().filter(|(_, b, _)| *b == v).all(|&(_, _, s)| p.contains(s)) {
            Side::AllTowardV
        } else {
            continue;
        };
        return Ok(Location { cutpoint: f.label(v).to_string(), side });
    }
    Err(ProfileError::NotLocated)
}

pub fn is_located(f: &PseudoFlower, p: &Orientation) -> bool {
    locate(f, p).is_ok()
}

/// `s` and `t` lie in exactly the same profiles.
pub fn equivalent(s: Separation, t: Separation, profiles: &[Profile]) -> Result<bool, ProfileError> {
    Ok(signature(s, profiles)? == signature(t, profiles)?)
}

/// Groups `seps` by the profiles containing them, classes in order of first
/// appearance.
pub fn equivalence_classes(seps: &[Separation], profiles: &[Profile]) -> Result<Vec<Vec<Separation>>, ProfileError> {
    let mut slot: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut classes: Vec<Vec<Separation>> = Vec::new();
    for &s in seps {
        let sig = signature(s, profiles)?;
        let n = classes.len();
        let c = *slot.entry(sig).or_insert(n);
        if c == n {
            classes.push(Vec::new());
        }
        classes[c].push(s);
    }
    Ok(classes)
}

/// Signatures of the classes containing a separation displayed by `f`.
pub fn displayed_classes(f: &PseudoFlower, profiles: &[Profile]) -> Result<BTreeSet<Vec<bool>>, ProfileError> {
    f.displayed().into_iter().map(|s| signature(s, profiles)).collect()
}

/// Every displayed separation of `f1` that distinguishes two profiles is
/// equivalent to one displayed by `f2`.
pub fn preccurlyeq(f1: &PseudoFlower, f2: &PseudoFlower, profiles: &[Profile]) -> Result<bool, ProfileError> {
    let target = displayed_classes(f2, profiles)?;
    for s in f1.displayed() {
        let sig = signature(s, profiles)?;
        let relevant = sig.iter().any(|&b| b) && sig.iter().any(|&b| !b);
        if relevant && !target.contains(&sig) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every finite chain of chosen separations has its supremum chosen. A
/// finite chain's supremum is its largest element, so it is enough to check
/// chains of length two.
pub fn is_closed(p: &Orientation) -> Result<bool, ProfileError> {
    let count = p.chosen_count();
    if count > CLOSED_CHECK_LIMIT {
        return Err(ProfileError::Guard { pairs: count, max_pairs: CLOSED_CHECK_LIMIT });
    }
    let g = p.system.graph();
    let chosen: Vec<Separation> = p.chosen().collect();
    for (x, &r) in chosen.iter().enumerate() {
        for &s in &chosen[x..] {
            if r.leq(s) || s.leq(r) {
                match chain_supremum(g, &[r, s]) {
                    Ok(sup) if p.contains(sup) => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_clique;

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn system_sizes() {
        let s = SeparationSystem::new(&p3(), 2).unwrap();
        assert_eq!(s.len(), 10);
        assert_eq!(s.pair_count(), 5);
        let s1 = SeparationSystem::new(&p3(), 1).unwrap();
        let v = p3().vertices();
        assert_eq!(s1.members(), &[Separation::new(VertexSet::EMPTY, v), Separation::new(v, VertexSet::EMPTY)]);
        assert!(matches!(SeparationSystem::new(&p3(), 0), Err(ProfileError::ZeroOrder)));
    }

    #[test]
    fn s1_on_p3() {
        let sys = Arc::new(SeparationSystem::new(&p3(), 1).unwrap());
        let v = p3().vertices();
        let o = Orientation::from_chosen(&sys, [Separation::new(VertexSet::EMPTY, v)]).unwrap();
        assert!(is_consistent(&o) && is_profile(&o) && is_tangle(&o));
        assert!(matches!(Orientation::from_chosen(&sys, []), Err(ProfileError::Incomplete(0))));
        let both = [Separation::new(VertexSet::EMPTY, v), Separation::new(v, VertexSet::EMPTY)];
        assert!(matches!(Orientation::from_chosen(&sys, both), Err(ProfileError::BothSides(0))));
        let all = profiles_of(&sys, false);
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].kind(), ProfileKind::Tangle);
        assert_eq!(all[1].kind(), ProfileKind::Profile);
    }

    #[test]
    fn k4_toward_v() {
        let g = gen_clique(4).unwrap();
        let sys = Arc::new(SeparationSystem::new(&g, 2).unwrap());
        let v = g.vertices();
        let toward = Orientation::from_fn(&sys, |i| sys.members[i].b == v);
        assert!(is_consistent(&toward) && is_profile(&toward) && is_tangle(&toward));
        let tangles = enumerate_profiles(&g, 2, true, DEFAULT_MAX_PAIRS).unwrap();
        assert_eq!(tangles.len(), 1);
        assert_eq!(tangles[0].orientation, toward);
        let profiles = enumerate_profiles(&g, 2, false, DEFAULT_MAX_PAIRS).unwrap();
        assert_eq!(profiles.len(), 5);
        let s = Separation::new(v, VertexSet::singleton(0));
        let other = profiles.iter().find(|p| p.contains(s)).unwrap();
        assert!(distinguishes(s, &toward, other).unwrap());
        assert!(!distinguishes(s, &toward, &toward).unwrap());
        assert!(distinguished_pairs(&[], &profiles).unwrap().is_empty());
    }

    #[test]
    fn guard() {
        let g = gen_clique(6).unwrap();
        assert!(matches!(enumerate_profiles(&g, 4, false, 10), Err(ProfileError::Guard { max_pairs: 10, .. })));
    }

    #[test]
    fn single_profile_classes() {
        let sys = Arc::new(SeparationSystem::new(&p3(), 2).unwrap());
        let ps = profiles_of(&sys, false);
        for p in &ps {
            let classes = equivalence_classes(sys.members(), std::slice::from_ref(p)).unwrap();
            assert_eq!(classes.len(), 2);
            assert!(is_closed(p).unwrap());
        }
    }
}
