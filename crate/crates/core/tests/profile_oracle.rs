use std::collections::BTreeSet;
use std::sync::Arc;

use pseudoflower::generators::{gen_clique, gen_daisy, gen_grid, triangle_star, DaisySpec};
use pseudoflower::profiles::{is_consistent, is_profile, is_tangle, profiles_of};
use pseudoflower::{Graph, Orientation, ProfileKind, Separation, SeparationSystem};

/// Chosen member lists of every orientation passing `keep`, by scanning all
/// `2^pairs` orientations.
fn scan(sys: &Arc<SeparationSystem>, keep: impl Fn(&Orientation) -> bool) -> BTreeSet<Vec<Separation>> {
    let reps: Vec<Separation> = sys.pair_representatives().collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << reps.len()) {
        let chosen = reps.iter().enumerate().map(|(b, &s)| if mask >> b & 1 == 1 { s.inverse() } else { s });
        let o = Orientation::from_chosen(sys, chosen).unwrap();
        if keep(&o) {
            out.insert(o.chosen().collect());
        }
    }
    out
}

/// Backtracking over pairs in canonical order, pruning on consistency and on
/// joins whose pair is already decided.
fn backtrack(sys: &Arc<SeparationSystem>, tangles: bool) -> BTreeSet<Vec<Separation>> {
    let reps: Vec<Separation> = sys.pair_representatives().collect();
    let ground = sys.ground();
    let mut out = BTreeSet::new();
    let mut chosen: Vec<Separation> = Vec::new();
    fn rec(
        i: usize,
        reps: &[Separation],
        chosen: &mut Vec<Separation>,
        sys: &Arc<SeparationSystem>,
        ground: pseudoflower::VertexSet,
        tangles: bool,
        out: &mut BTreeSet<Vec<Separation>>,
    ) {
        if i == reps.len() {
            let o = Orientation::from_chosen(sys, chosen.iter().copied()).unwrap();
            let ok = if tangles { is_tangle(&o) } else { is_profile(&o) };
            if ok {
                out.insert(o.chosen().collect());
            }
            return;
        }
        let decided = |s: Separation, chosen: &[Separation]| -> Option<bool> {
            if chosen.contains(&s) {
                Some(true)
            } else if chosen.contains(&s.inverse()) && s != s.inverse() {
                Some(false)
            } else {
                None
            }
        };
        let options = if reps[i] == reps[i].inverse() { vec![reps[i]] } else { vec![reps[i], reps[i].inverse()] };
        for s in options {
            chosen.push(s);
            let mut ok = true;
            for &r in chosen.iter() {
                let same = r == s || r == s.inverse();
                if !same && (r.inverse().leq(s) || s.inverse().leq(r)) {
                    ok = false;
                }
                if tangles {
                    if s.a.union(r.a) == ground {
                        ok = false;
                    }
                } else {
                    let u = r.join(s);
                    if u.order() < sys.k() && (decided(u, chosen) == Some(false) || u == u.inverse()) {
                        ok = false;
                    }
                }
            }
            if ok {
                rec(i + 1, reps, chosen, sys, ground, tangles, out);
            }
            chosen.pop();
        }
    }
    rec(0, &reps, &mut chosen, sys, ground, tangles, &mut out);
    out
}

fn fast(sys: &Arc<SeparationSystem>, tangles: bool) -> BTreeSet<Vec<Separation>> {
    let ps = profiles_of(sys, tangles);
    let set: BTreeSet<Vec<Separation>> = ps.iter().map(|p| p.chosen().collect()).collect();
    assert_eq!(set.len(), ps.len(), "duplicate output");
    for p in &ps {
        assert_eq!(p.kind() == ProfileKind::Tangle, is_tangle(p), "kind label");
        assert!(is_profile(p), "tangle that is not a profile");
    }
    set
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[test]
fn matches_full_scan_on_small_graphs() {
    let mut checked = 0;
    for n in 0..=5 {
        for g in all_graphs(n) {
            for k in 1..=n + 1 {
                let sys = Arc::new(SeparationSystem::new(&g, k).unwrap());
                if sys.pair_count() > 10 {
                    continue;
                }
                assert_eq!(fast(&sys, false), scan(&sys, is_profile), "profiles n={n} k={k} {g:?}");
                assert_eq!(fast(&sys, true), scan(&sys, is_tangle), "tangles n={n} k={k} {g:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn matches_full_scan_up_to_sixteen_pairs() {
    let star = {
        let mut g = Graph::new(6).unwrap();
        for v in 1..6 {
            g.add_edge(0, v).unwrap();
        }
        g
    };
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let mut seen = 0;
    for g in [gen_clique(4).unwrap(), gen_grid(2, 3).unwrap(), star, c6, gen_clique(5).unwrap()] {
        for k in 1..=3 {
            let sys = Arc::new(SeparationSystem::new(&g, k).unwrap());
            if sys.pair_count() > 16 {
                continue;
            }
            seen += 1;
            assert_eq!(fast(&sys, false), scan(&sys, is_profile), "k={k} {g:?}");
            assert_eq!(fast(&sys, true), scan(&sys, is_tangle), "k={k} {g:?}");
        }
    }
    assert!(seen >= 8);
}

#[test]
fn matches_backtracking_on_medium_graphs() {
    let cases = [
        (gen_grid(3, 3).unwrap(), 2),
        (gen_grid(2, 4).unwrap(), 3),
        (triangle_star(), 2),
        (gen_clique(6).unwrap(), 2),
        (gen_daisy(&DaisySpec::standard(1, 0, 3).unwrap()).unwrap().0, 2),
        (gen_grid(3, 3).unwrap(), 3),
        (triangle_star(), 3),
        (gen_daisy(&DaisySpec::standard(1, 0, 3).unwrap()).unwrap().0, 3),
    ];
    for (g, k) in cases {
        let sys = Arc::new(SeparationSystem::new(&g, k).unwrap());
        assert_eq!(fast(&sys, false), backtrack(&sys, false), "profiles k={k} {g:?}");
        assert_eq!(fast(&sys, true), backtrack(&sys, true), "tangles k={k} {g:?}");
    }
}

#[test]
fn every_orientation_found_is_consistent() {
    let g = gen_grid(3, 3).unwrap();
    for k in 1..=3 {
        let sys = Arc::new(SeparationSystem::new(&g, k).unwrap());
        for p in profiles_of(&sys, false) {
            assert!(is_consistent(&p));
        }
    }
}
