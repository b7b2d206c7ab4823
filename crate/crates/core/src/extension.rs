//! Proper crossing, anchoring, petal subdivision and maximalization.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::cyclic_order::{extend_monotone_between, MonotoneMap};
use crate::error::{ExtensionError, FlowerError};
use crate::flower::{is_witness, PseudoFlower, WitnessMap};
use crate::graph::Graph;
use crate::profiles::{distinguishes, is_closed, is_located, signature, Profile};
use crate::universe::Separation;
use crate::vertex_set::VertexSet;

/// `s` and `t` cross and each of their eight corners lies in some profile.
pub fn properly_crosses(s: Separation, t: Separation, profiles: &[Profile]) -> bool {
    s.crosses(t) && s.corners(t).iter().all(|&c| profiles.iter().any(|p| p.contains(c)))
}

/// `separation` is anchored at cutpoint `anchor` on petal `petal`. When
/// `inverted` is set it is the inverse of the separation the anchoring
/// started from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnchoredSeparation {
    pub separation: Separation,
    pub petal: String,
    pub anchor: String,
    pub inverted: bool,
}

impl AnchoredSeparation {
    /// The separation in the orientation of the input it was built from.
    pub fn as_input_orientation(&self) -> Separation {
        if self.inverted {
            self.separation.inverse()
        } else {
            self.separation
        }
    }
}

fn precondition(msg: impl Into<String>) -> ExtensionError {
    ExtensionError::Precondition(msg.into())
}

/// `(C,D) ∧ S(i) = S(v,p)` and `(D,C) ∧ S(i) = S(s,v)`.
pub fn is_anchored_at(f: &PseudoFlower, i: usize, cd: Separation, v: usize) -> bool {
    let (p, s) = f.neighbours_at(i);
    if v % 2 != 0 || v == p || v == s {
        return false;
    }
    let si = f.petal_separation_at(i);
    cd.meet(si) == f.separation_at(v, p) && cd.inverse().meet(si) == f.separation_at(s, v)
}

fn anchored_form(f: &PseudoFlower, i: usize, cd: Separation) -> Option<(Separation, usize, bool)> {
    for v in f.cutpoint_positions() {
        if is_anchored_at(f, i, cd, v) {
            return Some((cd, v, false));
        }
        if is_anchored_at(f, i, cd.inverse(), v) {
            return Some((cd.inverse(), v, true));
        }
    }
    None
}

fn flower_distinguishes(displayed: &[Separation], a: &Profile, b: &Profile) -> bool {
    displayed.iter().any(|&t| distinguishes(t, a, b).unwrap_or(false))
}

/// Indices of profiles located by `f`.
pub fn located_indices(f: &PseudoFlower, profiles: &[Profile]) -> Vec<usize> {
    (0..profiles.len()).filter(|&x| is_located(f, &profiles[x])).collect()
}

/// Some three profiles located by `f` are pairwise distinguished by it.
pub fn distinguishes_three_located(f: &PseudoFlower, profiles: &[Profile]) -> bool {
    let displayed = f.displayed();
    let loc = located_indices(f, profiles);
    let d = |x: usize, y: usize| flower_distinguishes(&displayed, &profiles[x], &profiles[y]);
    loc.iter().enumerate().any(|(a, &x)| {
        loc[a + 1..].iter().enumerate().any(|(b, &y)| d(x, y) && loc[a + b + 2..].iter().any(|&z| d(x, z) && d(y, z)))
    })
}

/// Replaces `cd`, an order-`k` separation properly crossing the petal
/// separation `S(i)`, by a separation with the same joins with `S(i)` and
/// `S(i)*` that is (up to inversion) anchored at a cutpoint.
pub fn anchor(f: &PseudoFlower, i: &str, cd: Separation, profiles: &[Profile]) -> Result<AnchoredSeparation, ExtensionError> {
    let ip = f.index_pos(i)?;
    let si = f.petal_separation_at(ip);
    if cd.order() != f.k() {
        return Err(precondition(format!("{cd} has order {}, not {}", cd.order(), f.k())));
    }
    if !properly_crosses(cd, si, profiles) {
        return Err(precondition(format!("{cd} does not properly cross S({i})")));
    }
    if !distinguishes_three_located(f, profiles) {
        return Err(precondition("the flower does not distinguish three located profiles"));
    }
    if let Some((sep, v, inverted)) = anchored_form(f, ip, cd) {
        return Ok(AnchoredSeparation { separation: sep, petal: i.to_string(), anchor: f.label(v).to_string(), inverted });
    }

    let displayed = f.displayed();
    let dist = |a: &Profile, b: &Profile| flower_distinguishes(&displayed, a, b);
    let (dc, sis) = (cd.inverse(), si.inverse());
    let p1 = profiles
        .iter()
        .find(|q| q.contains(cd) && q.contains(si))
        .ok_or_else(|| precondition("no profile contains both (C,D) and S(i)"))?;
    let with_cd: Vec<&Profile> = profiles.iter().filter(|q| q.contains(cd) && q.contains(sis)).collect();
    let split = with_cd.iter().enumerate().any(|(a, x)| with_cd[a + 1..].iter().any(|y| dist(x, y)));
    let (p2, p3) = if split {
        let p2 = profiles
            .iter()
            .find(|q| q.contains(dc) && q.contains(sis))
            .ok_or_else(|| precondition("no profile contains both (D,C) and S(i)*"))?;
        let p3 = with_cd.iter().copied().find(|q| dist(q, p2)).ok_or_else(|| precondition("no profile to pair with P2"))?;
        (p2, p3)
    } else {
        let p3 = *with_cd.first().ok_or_else(|| precondition("no profile contains both (C,D) and S(i)*"))?;
        let p2 = profiles
            .iter()
            .find(|q| dist(q, p1) && dist(q, p3))
            .ok_or_else(|| precondition("no profile is distinguished from both P1 and P3"))?;
        (p2, p3)
    };

    let (p, s) = f.neighbours_at(ip);
    let n = f.len();
    let v = (1..n / 2)
        .map(|o| (s + 2 * o) % n)
        .find(|&v| distinguishes(f.separation_at(v, s), p2, p3).unwrap_or(false))
        .ok_or_else(|| precondition("no cutpoint v with S(v,s) distinguishing P2 and P3"))?;
    let svp = f.separation_at(v, p);
    let inverted = !p3.contains(svp);
    let base = if inverted { dc } else { cd };
    let c2 = base.join(svp);
    let anchored = c2.inverse().join(f.separation_at(s, v)).inverse();

    let out = AnchoredSeparation { separation: anchored, petal: i.to_string(), anchor: f.label(v).to_string(), inverted };
    let same_orientation = out.as_input_orientation();
    if !is_anchored_at(f, ip, anchored, v) {
        return Err(ExtensionError::NotAnchored(format!("{anchored} is not anchored at {}", f.label(v))));
    }
    if same_orientation.join(si) != cd.join(si) || same_orientation.inverse().join(si) != dc.join(si) {
        return Err(ExtensionError::NotAnchored("joins with S(i) changed".into()));
    }
    Ok(out)
}

/// The four identities an anchored separation satisfies:
/// `C ∩ P_s = ∅`, `D ∩ P_p = ∅`, `X ⊆ C ∩ D` and `(C ∩ D) ∖ V(p,s) = P_v`.
pub fn anchoring_identities(f: &PseudoFlower, a: &AnchoredSeparation) -> Result<[bool; 4], ExtensionError> {
    let ip = f.index_pos(&a.petal)?;
    let v = f.cut_pos(&a.anchor)?;
    let (p, s) = f.neighbours_at(ip);
    let Separation { a: c, b: d } = a.separation;
    let sep = c.intersection(d);
    Ok([
        c.is_disjoint(f.set_at(s)),
        d.is_disjoint(f.set_at(p)),
        f.x().is_subset(sep),
        sep.difference(f.interval_set_at(p, s)) == f.set_at(v),
    ])
}

/// Result of subdividing petal `i` into `i1, m, i2`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub flower: PseudoFlower,
    pub witness: WitnessMap,
    pub i1: String,
    pub m: String,
    pub i2: String,
}

fn fresh(f: &PseudoFlower, base: String) -> String {
    let mut label = base;
    while f.labels().iter().any(|l| *l == label) {
        label.push('\'');
    }
    label
}

/// Replaces petal `i` by `i1, m, i2` with `P_i1 = C ∩ P_i`,
/// `P_m = (C ∩ D) ∖ V(s,p)` and `P_i2 = D ∩ P_i`, so that the anchored
/// separation becomes the interval separation of `[m, v]`.
pub fn subdivide(g: &Graph, f: &PseudoFlower, a: &AnchoredSeparation) -> Result<Subdivision, ExtensionError> {
    let ip = f.index_pos(&a.petal)?;
    let v = f.cut_pos(&a.anchor)?;
    if !is_anchored_at(f, ip, a.separation, v) {
        return Err(ExtensionError::NotAnchored(format!(
            "{} is not anchored at {} on {}",
            a.separation, a.anchor, a.petal
        )));
    }
    let (p, s) = f.neighbours_at(ip);
    let Separation { a: c, b: d } = a.separation;
    let pi = f.set_at(ip);
    let pm = c.intersection(d).difference(f.interval_set_at(s, p));
    let i1 = fresh(f, format!("{}_1", a.petal));
    let m = fresh(f, format!("{}_m", a.petal));
    let i2 = fresh(f, format!("{}_2", a.petal));

    let mut entries: Vec<(String, VertexSet)> = Vec::with_capacity(f.len() + 2);
    for q in 0..f.len() {
        if q == ip {
            entries.push((i1.clone(), c.intersection(pi)));
            entries.push((m.clone(), pm));
            entries.push((i2.clone(), d.intersection(pi)));
        } else {
            entries.push((f.label(q).to_string(), f.set_at(q)));
        }
    }
    let flower = PseudoFlower::from_cycle(f.k(), entries, f.ground())?;
    let report = flower.validate(g);
    if let Some(c) = report.failures().next() {
        return Err(ExtensionError::Flower(FlowerError::Invalid(format!(
            "subdivision fails {}: {}",
            c.clause,
            c.counterexample.as_deref().unwrap_or("")
        ))));
    }

    let mapping: BTreeMap<String, String> = flower
        .index()
        .into_iter()
        .map(|l| {
            let image = if l == i1 || l == i2 { a.petal.clone() } else { l.clone() };
            (l, image)
        })
        .collect();
    let index_map = MonotoneMap::new(flower.completion().index_order(), f.completion().index_order(), mapping)
        .map_err(FlowerError::from)?;
    let map = extend_monotone_between(&index_map, flower.completion().clone(), f.completion().clone())
        .map_err(FlowerError::from)?;
    let witness = WitnessMap { from: flower.clone(), to: f.clone(), map };
    if !is_witness(&witness) {
        return Err(ExtensionError::NotAnchored("subdivision map is not a witness".into()));
    }
    Ok(Subdivision { flower, witness, i1, m, i2 })
}

/// Anchors `cd` on petal `i` and subdivides. Succeeds only if the result
/// displays a separation in the same profiles as `cd`.
fn extension_step(
    g: &Graph,
    f: &PseudoFlower,
    i: usize,
    cd: Separation,
    profiles: &[Profile],
) -> Option<(AnchoredSeparation, Subdivision)> {
    let label = f.label(i).to_string();
    let a = anchor(f, &label, cd, profiles).ok()?;
    let sub = subdivide(g, f, &a).ok()?;
    let sig = signature(cd, profiles).ok()?;
    let shown = sub.flower.displayed().into_iter().any(|t| signature(t, profiles).ok().as_ref() == Some(&sig));
    shown.then_some((a, sub))
}

/// The first petal (in cycle order) for which the anchored subdivision of
/// `cd` applies.
pub fn extension_test(
    g: &Graph,
    f: &PseudoFlower,
    cd: Separation,
    profiles: &[Profile],
) -> Option<(AnchoredSeparation, Subdivision)> {
    if cd.order() != f.k() {
        return None;
    }
    f.index_positions()
        .filter(|&i| properly_crosses(cd, f.petal_separation_at(i), profiles))
        .find_map(|i| extension_step(g, f, i, cd, profiles))
}

fn members_of_order(profiles: &[Profile], k: usize) -> Vec<Separation> {
    profiles
        .first()
        .map(|p| p.system().members().iter().copied().filter(|s| s.order() == k).collect())
        .unwrap_or_default()
}

/// Members of order at most `k` (exactly `k` when `exact`) with their
/// signatures, read off the membership bitmaps by index.
fn signed_members(profiles: &[Profile], k: usize, exact: bool) -> Vec<(Separation, Vec<bool>)> {
    let Some(first) = profiles.first() else {
        return Vec::new();
    };
    let system = first.system();
    let shared = profiles.iter().all(|p| Arc::ptr_eq(p.system(), system));
    system
        .members()
        .iter()
        .enumerate()
        .filter(|(_, s)| if exact { s.order() == k } else { s.order() <= k })
        .filter_map(|(i, &s)| {
            let sig = if shared {
                profiles.iter().map(|p| p.orientation().contains_index(i)).collect()
            } else {
                signature(s, profiles).ok()?
            };
            Some((s, sig))
        })
        .collect()
}

fn relevant_to_located(sig: &[bool], located: &[usize]) -> bool {
    located.iter().any(|&x| sig[x]) && located.iter().any(|&x| !sig[x])
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximalizeStep {
    pub candidate: Separation,
    pub anchored: AnchoredSeparation,
    pub new_cutpoint: String,
}

#[derive(Clone, Debug)]
pub struct Maximalization {
    pub flower: PseudoFlower,
    pub steps: Vec<MaximalizeStep>,
}

/// Repeatedly subdivides a petal to display an order-`k` separation that
/// distinguishes two located profiles and is not equivalent to any
/// displayed separation, rescanning from the start after every step.
pub fn maximalize(g: &Graph, f: &PseudoFlower, profiles: &[Profile]) -> Result<Maximalization, ExtensionError> {
    let report = f.validate(g);
    if !report.valid {
        return Err(precondition("input flower does not validate"));
    }
    if !distinguishes_three_located(f, profiles) {
        return Err(precondition("the flower does not distinguish three located profiles"));
    }
    for (x, p) in profiles.iter().enumerate() {
        if let Ok(false) = is_closed(p) {
            return Err(precondition(format!("profile {x} is not closed")));
        }
    }
    let candidates = signed_members(profiles, f.k(), true);
    let limit = profiles.len() * profiles.len();
    let mut flower = f.clone();
    let mut steps = Vec::new();
    'outer: loop {
        let located = located_indices(&flower, profiles);
        let shown: BTreeSet<Vec<bool>> = flower.displayed().into_iter().filter_map(|t| signature(t, profiles).ok()).collect();
        for (cd, sig) in &candidates {
            let cd = *cd;
            if !relevant_to_located(sig, &located) || shown.contains(sig) {
                continue;
            }
            if let Some((anchored, sub)) = extension_test(g, &flower, cd, profiles) {
                steps.push(MaximalizeStep { candidate: cd, anchored, new_cutpoint: sub.m.clone() });
                flower = sub.flower;
                if steps.len() > limit.max(1) {
                    return Err(precondition(format!("no termination within {limit} steps")));
                }
                continue 'outer;
            }
        }
        break;
    }
    Ok(Maximalization { flower, steps })
}

/// No order-`k` separation properly crossing a petal separation can be
/// anchored and subdivided into a valid pseudoflower.
pub fn is_leq_maximal(g: &Graph, f: &PseudoFlower, profiles: &[Profile]) -> bool {
    members_of_order(profiles, f.k()).into_iter().all(|cd| {
        f.index_positions().all(|i| {
            let si = f.petal_separation_at(i);
            if !properly_crosses(cd, si, profiles) {
                return true;
            }
            let label = f.label(i).to_string();
            match anchor(f, &label, cd, profiles) {
                Ok(a) => subdivide(g, f, &a).is_err(),
                Err(_) => true,
            }
        })
    })
}

/// Every separation distinguishing two located profiles is equivalent to a
/// displayed one or fails [`extension_test`].
pub fn is_preccurlyeq_maximal(g: &Graph, f: &PseudoFlower, profiles: &[Profile]) -> bool {
    let located = located_indices(f, profiles);
    let shown: BTreeSet<Vec<bool>> = f.displayed().into_iter().filter_map(|t| signature(t, profiles).ok()).collect();
    signed_members(profiles, f.k(), false).into_iter().all(|(s, sig)| {
        !relevant_to_located(&sig, &located) || shown.contains(&sig) || extension_test(g, f, s, profiles).is_none()
    })
}
