use std::sync::Arc;

use pseudoflower::extension::*;
use pseudoflower::flower::{is_witness, PseudoFlower};
use pseudoflower::generators::{gen_daisy, DaisySpec};
use pseudoflower::profiles::*;
use pseudoflower::*;

struct Fixture {
    graph: Graph,
    full: PseudoFlower,
    profiles: Vec<Profile>,
}

fn daisy(n: usize, a: usize, d: usize) -> Fixture {
    let (graph, full) = gen_daisy(&DaisySpec::standard(n, a, d).unwrap()).unwrap();
    let system = Arc::new(SeparationSystem::new(&graph, full.k() + 1).unwrap());
    let profiles = profiles_of(&system, false);
    Fixture { graph, full, profiles }
}

fn coarse(fx: &Fixture, cuts: &[&str]) -> PseudoFlower {
    let cuts: Vec<String> = cuts.iter().map(|c| c.to_string()).collect();
    fx.full.concatenate(&cuts).unwrap().0
}

fn crossing_inputs(f: &PseudoFlower, profiles: &[Profile]) -> Vec<(String, Separation)> {
    let mut out = Vec::new();
    for &cd in profiles[0].system().members() {
        if cd.order() != f.k() {
            continue;
        }
        for i in f.index_positions() {
            if properly_crosses(cd, f.petal_separation_at(i), profiles) {
                out.push((f.label(i).to_string(), cd));
            }
        }
    }
    out
}

fn fixtures() -> Vec<(Fixture, Vec<Vec<&'static str>>)> {
    vec![
        (daisy(1, 2, 4), vec![vec!["c0", "c1", "c2"], vec!["c0", "c2", "c3"]]),
        (daisy(1, 0, 4), vec![vec!["c0", "c1", "c3"]]),
        (daisy(1, 2, 5), vec![vec!["c0", "c2", "c4"], vec!["c0", "c1", "c2", "c3"]]),
    ]
}

#[test]
fn nested_and_empty_never_properly_cross() {
    let fx = daisy(1, 2, 4);
    let f = &fx.full;
    let s = f.separation("c0", "c2").unwrap();
    let t = f.separation("c0", "c1").unwrap();
    assert!(s.is_nested(t));
    assert!(!properly_crosses(s, t, &fx.profiles));
    let f = coarse(&fx, &["c0", "c2", "c3"]);
    let (i, cd) = crossing_inputs(&f, &fx.profiles).remove(0);
    let si = f.petal_separation(&i).unwrap();
    assert!(properly_crosses(cd, si, &fx.profiles));
    assert!(!properly_crosses(cd, si, &[]));
}

#[test]
fn natural_daisy_has_no_crossing_candidate() {
    let fx = daisy(1, 2, 3);
    assert_eq!(fx.profiles.len(), 7);
    assert!(distinguishes_three_located(&fx.full, &fx.profiles));
    assert!(crossing_inputs(&fx.full, &fx.profiles).is_empty());
    let m = maximalize(&fx.graph, &fx.full, &fx.profiles).unwrap();
    assert!(m.steps.is_empty());
    assert_eq!(m.flower, fx.full);
    assert!(is_leq_maximal(&fx.graph, &fx.full, &fx.profiles));
    assert!(is_preccurlyeq_maximal(&fx.graph, &fx.full, &fx.profiles));
}

#[test]
fn anchoring_satisfies_identities_and_keeps_joins() {
    let mut seen = 0;
    for (fx, subsets) in fixtures() {
        for cuts in subsets {
            let f = coarse(&fx, &cuts);
            for (i, cd) in crossing_inputs(&f, &fx.profiles) {
                let a = anchor(&f, &i, cd, &fx.profiles).unwrap();
                assert_eq!(anchoring_identities(&f, &a).unwrap(), [true; 4]);
                let si = f.petal_separation(&i).unwrap();
                let out = a.as_input_orientation();
                assert_eq!(cd.join(si), out.join(si));
                assert_eq!(cd.inverse().join(si), out.inverse().join(si));
                assert_eq!(out.order(), f.k());

                let again = anchor(&f, &i, a.separation, &fx.profiles).unwrap();
                assert_eq!(again.separation, a.separation);
                assert_eq!(again.anchor, a.anchor);
                seen += 1;
            }
        }
    }
    assert!(seen >= 16, "{seen}");
}

#[test]
fn anchor_reports_failed_hypotheses() {
    let fx = daisy(1, 2, 4);
    let f = coarse(&fx, &["c0", "c2", "c3"]);
    let (i, cd) = crossing_inputs(&f, &fx.profiles).remove(0);
    let low = fx.profiles[0].system().members()[0];
    let err = anchor(&f, &i, low, &fx.profiles).unwrap_err();
    assert!(err.to_string().contains("order"), "{err}");
    let two = coarse(&fx, &["c0", "c2"]);
    let petal = two.index()[0].clone();
    let err = anchor(&two, &petal, cd, &fx.profiles).unwrap_err();
    assert!(matches!(err, ExtensionError::Precondition(_)));
}

#[test]
fn subdivision_displays_the_anchored_separation() {
    for (fx, subsets) in fixtures() {
        for cuts in subsets {
            let f = coarse(&fx, &cuts);
            for (i, cd) in crossing_inputs(&f, &fx.profiles) {
                let a = anchor(&f, &i, cd, &fx.profiles).unwrap();
                let sub = subdivide(&fx.graph, &f, &a).unwrap();
                let g = &sub.flower;
                assert!(g.validate(&fx.graph).valid);
                assert_eq!(g.index_len(), f.index_len() + 1);
                assert_eq!(g.interval_separation(&sub.m, &a.anchor).unwrap(), a.separation);
                assert!(g.displays(a.separation));
                assert!(is_witness(&sub.witness));
                for l in f.labels().iter().filter(|l| **l != i) {
                    assert_eq!(g.set(l).unwrap(), f.set(l).unwrap());
                }
                let before = displayed_classes(&f, &fx.profiles).unwrap();
                let after = displayed_classes(g, &fx.profiles).unwrap();
                assert!(before.is_subset(&after));
                assert!(preccurlyeq(&f, g, &fx.profiles).unwrap());
            }
        }
    }
}

#[test]
fn subdivide_rejects_unanchored_input() {
    let fx = daisy(1, 2, 4);
    let f = coarse(&fx, &["c0", "c2", "c3"]);
    let (i, cd) = crossing_inputs(&f, &fx.profiles).remove(0);
    let mut a = anchor(&f, &i, cd, &fx.profiles).unwrap();
    a.separation = a.separation.inverse();
    assert!(matches!(subdivide(&fx.graph, &f, &a), Err(ExtensionError::NotAnchored(_))));
}

#[test]
fn maximalize_recovers_the_daisy() {
    for (fx, subsets) in fixtures() {
        let bound = fx.profiles.len() * fx.profiles.len();
        for cuts in subsets {
            let f = coarse(&fx, &cuts);
            assert!(!is_leq_maximal(&fx.graph, &f, &fx.profiles));
            assert!(!is_preccurlyeq_maximal(&fx.graph, &f, &fx.profiles));
            let m = maximalize(&fx.graph, &f, &fx.profiles).unwrap();
            assert_eq!(m.steps.len(), fx.full.index_len() - f.index_len());
            assert!(m.steps.len() <= bound);
            let before = flower_distinguished_pairs(&f, &fx.profiles).unwrap();
            let after = flower_distinguished_pairs(&m.flower, &fx.profiles).unwrap();
            assert!(before.is_subset(&after) && before.len() < after.len());
            assert!(m.flower.same_up_to_labels(&fx.full));
            assert!(is_preccurlyeq_maximal(&fx.graph, &m.flower, &fx.profiles));
            assert!(is_leq_maximal(&fx.graph, &m.flower, &fx.profiles));
            assert!(preccurlyeq(&f, &m.flower, &fx.profiles).unwrap());

            let twice = maximalize(&fx.graph, &m.flower, &fx.profiles).unwrap();
            assert!(twice.steps.is_empty());
            assert_eq!(twice.flower, m.flower);
        }
    }
}

#[test]
fn two_petal_flower_cannot_be_maximalized() {
    let fx = daisy(1, 2, 4);
    let f = coarse(&fx, &["c0", "c2"]);
    assert!(matches!(maximalize(&fx.graph, &f, &fx.profiles), Err(ExtensionError::Precondition(_))));
}
