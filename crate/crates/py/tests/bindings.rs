use pseudoflower::Graph;
use pseudoflower_py::*;

#[test]
fn separations_of_p3() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let seps = separations(&g, 1);
    assert_eq!(seps.len(), 10);
    assert!(seps.contains(&(vec![0, 1], vec![1, 2])));
}

#[test]
fn daisy_round_trip() {
    let (g, flower) = daisy(1, 2, 3).unwrap();
    assert_eq!(validate(&g, &flower).unwrap(), (true, vec![]));
    let dot = render(&g, &flower).unwrap();
    assert_eq!(dot.matches("subgraph cluster_petal_").count(), 3);
    let profiles = profiles_json(&g, 5, false, 1_000_000).unwrap();
    let located = locate(&g, &flower, &profiles).unwrap();
    assert_eq!(located.len(), 7);
    assert_eq!(located.iter().filter(|l| l.is_none()).count(), 1);
    let (out, steps) = maximalize(&g, &flower, &profiles).unwrap();
    assert_eq!(steps, 0);
    assert_eq!(out, flower);
}

#[test]
fn guard_and_bad_input() {
    let (g, _) = daisy(1, 2, 3).unwrap();
    assert!(matches!(profiles_json(&g, 5, false, 64), Err(Failure::Guard(_))));
    assert!(matches!(validate(&g, "{}"), Err(Failure::Value(_))));
    let star = pseudoflower::generators::triangle_star();
    let f = anemone(&star, vec![9], vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
    assert!(validate(&star, &f).unwrap().0);
    assert!(anemone(&star, vec![9], vec![vec![0, 1]]).is_err());
}
