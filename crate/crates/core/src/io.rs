//! JSON forms of flowers, profiles, separation lists, arc lists and
//! anchored separations.
//!
//! Every writer emits a canonical form (sorted sets, cycle order, fixed key
//! order), so reading and writing again reproduces the input byte for byte.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::FormatError;
use crate::extension::AnchoredSeparation;
use crate::flower::PseudoFlower;
use crate::generators::ArcSpec;
use crate::profiles::{Orientation, Profile, ProfileKind, SeparationSystem};
use crate::universe::Separation;
use crate::vertex_set::VertexSet;

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CycleEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    cut: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    petal: Option<String>,
    set: VertexSet,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlowerDoc {
    k: usize,
    cycle: Vec<CycleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<VertexSet>,
}

/// Reads a flower over the vertex set `ground`. A stated `x` must match the
/// residual set derived from the cycle.
pub fn flower_from_json(text: &str, ground: VertexSet) -> Result<PseudoFlower, FormatError> {
    let doc: FlowerDoc = serde_json::from_str(text)?;
    let mut entries = Vec::with_capacity(doc.cycle.len());
    for (pos, e) in doc.cycle.into_iter().enumerate() {
        let label = match (e.cut, e.petal) {
            (Some(c), None) if pos % 2 == 0 => c,
            (None, Some(p)) if pos % 2 == 1 => p,
            (Some(_), None) => return Err(schema(format!("cycle entry {pos} should be a petal"))),
            (None, Some(_)) => return Err(schema(format!("cycle entry {pos} should be a cut"))),
            _ => return Err(schema(format!("cycle entry {pos} needs exactly one of cut, petal"))),
        };
        entries.push((label, e.set));
    }
    if entries.len() % 2 != 0 {
        return Err(schema("cycle must end with a petal entry"));
    }
    let f = PseudoFlower::from_cycle(doc.k, entries, ground)?;
    if let Some(x) = doc.x {
        if x != f.x() {
            return Err(FormatError::XMismatch { stated: x, derived: f.x() });
        }
    }
    Ok(f)
}

pub fn flower_to_json(f: &PseudoFlower) -> String {
    let cycle = (0..f.len())
        .map(|p| {
            let label = Some(f.label(p).to_string());
            let (cut, petal) = if p % 2 == 0 { (label, None) } else { (None, label) };
            CycleEntry { cut, petal, set: f.set_at(p) }
        })
        .collect();
    to_text(&FlowerDoc { k: f.k(), cycle, x: Some(f.x()) })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileEntry {
    id: usize,
    kind: ProfileKind,
    chosen: Vec<Separation>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfilesDoc {
    k: usize,
    profiles: Vec<ProfileEntry>,
}

/// `k` is the order bound of the system the profiles orient.
pub fn profiles_to_json(k: usize, profiles: &[Profile]) -> String {
    let profiles = profiles
        .iter()
        .enumerate()
        .map(|(id, p)| ProfileEntry { id, kind: p.kind(), chosen: p.chosen().collect() })
        .collect();
    to_text(&ProfilesDoc { k, profiles })
}

/// Reads profiles of `system`. Each entry is re-checked: it must orient the
/// system completely, have the profile property, and carry the right kind.
/// Ids must be `0, 1, 2, ...` in order.
pub fn profiles_from_json(text: &str, system: &Arc<SeparationSystem>) -> Result<Vec<Profile>, FormatError> {
    let doc: ProfilesDoc = serde_json::from_str(text)?;
    if doc.k != system.k() {
        return Err(schema(format!("profiles are of order {}, expected {}", doc.k, system.k())));
    }
    let mut out = Vec::with_capacity(doc.profiles.len());
    for (pos, e) in doc.profiles.into_iter().enumerate() {
        if e.id != pos {
            return Err(schema(format!("profile id {} at position {pos}", e.id)));
        }
        let o = Orientation::from_chosen(system, e.chosen)?;
        let p = Profile::new(o)?;
        if p.kind() != e.kind {
            return Err(schema(format!("profile {pos} is stated as {:?} but is {:?}", e.kind, p.kind())));
        }
        out.push(p);
    }
    Ok(out)
}

pub fn separations_to_json(seps: &[Separation]) -> String {
    to_text(&seps)
}

pub fn separations_from_json(text: &str) -> Result<Vec<Separation>, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn arcs_from_json(text: &str) -> Result<ArcSpec, FormatError> {
    let spec: ArcSpec = serde_json::from_str(text)?;
    if spec.arcs.iter().any(|a| a.is_empty()) {
        return Err(schema("arcs must be non-empty"));
    }
    Ok(spec)
}

pub fn arcs_to_json(spec: &ArcSpec) -> String {
    to_text(spec)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AnchoredDoc {
    #[serde(rename = "C")]
    c: VertexSet,
    #[serde(rename = "D")]
    d: VertexSet,
    petal: String,
    anchor: String,
}

pub fn anchored_to_value(a: &AnchoredSeparation) -> serde_json::Value {
    let doc = AnchoredDoc { c: a.separation.a, d: a.separation.b, petal: a.petal.clone(), anchor: a.anchor.clone() };
    serde_json::to_value(doc).expect("serializable")
}

pub fn anchored_to_json(a: &AnchoredSeparation) -> String {
    to_text(&anchored_to_value(a))
}

/// The `inverted` flag is not part of the JSON form and reads back as false.
pub fn anchored_from_json(text: &str) -> Result<AnchoredSeparation, FormatError> {
    let doc: AnchoredDoc = serde_json::from_str(text)?;
    Ok(AnchoredSeparation {
        separation: Separation::new(doc.c, doc.d),
        petal: doc.petal,
        anchor: doc.anchor,
        inverted: false,
    })
}
