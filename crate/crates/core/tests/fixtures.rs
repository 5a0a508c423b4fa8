mod common;

use common::{alpha, infinity, loop_walk, walk};
use starplan_core::criterion::{simple_cycles, validate_vassiliev, DEFAULT_CYCLE_CAP};
use starplan_core::generators::from_gauss_word;
use starplan_core::planarity::KuratowskiKind;
use starplan_core::*;

#[test]
fn infinity_and_alpha_chords() {
    let g = infinity();
    let (a, b) = (loop_walk(&g, "1"), loop_walk(&g, "2"));
    let d = chord_diagram(&g, VertexId(0), &[a.clone(), b.clone()]).unwrap();
    let pos: Vec<_> = d.chords.iter().map(|c| (c.i, c.j, c.owner.walk)).collect();
    assert_eq!(pos, vec![(0, 2, 0), (1, 3, 1)]);
    assert_eq!(transversal_count(&g, &a, &b), Ok(1));
    assert!(is_vassiliev_obstruction(&g, &a, &b));
    assert!(!is_vassiliev_obstruction(&g, &a, &a));

    let g = alpha();
    let (a, b) = (loop_walk(&g, "2"), loop_walk(&g, "4"));
    let d = chord_diagram(&g, VertexId(0), &[a.clone(), b.clone()]).unwrap();
    let pos: Vec<_> = d.chords.iter().map(|c| (c.i, c.j, c.owner.walk)).collect();
    assert_eq!(pos, vec![(1, 2, 0), (0, 3, 1)]);
    assert_eq!(transversal_count(&g, &a, &b), Ok(0));
    assert!(!is_vassiliev_obstruction(&g, &a, &b));
}

#[test]
fn infinity_is_nonplanar_through_k5() {
    let g = infinity();
    let w = build_web_graph(&g);
    assert_eq!((w.graph.vertex_count(), w.graph.edge_count()), (5, 10));
    let flag = match star_is_planar(&g) {
        StarPlanarity::NonplanarFlag(f) => f,
        StarPlanarity::Planar(_) => panic!("G-infinity reported planar"),
    };
    assert_eq!(flag.kuratowski.kind, KuratowskiKind::K5);
    assert_eq!(flag.kuratowski.paths.len(), 10);
    let bf = find_obstruction_bruteforce(&g).unwrap().unwrap();
    assert!(is_vassiliev_obstruction(&g, &bf.c1, &bf.c2));
    let o = extract_obstruction(&g).unwrap();
    assert_eq!(validate_vassiliev(&g, &o), Ok(()));
    assert!(matches!(classify_nonplanar(&g), Ok(NonplanarityWitness::Vassiliev(_))));
}

#[test]
fn alpha_is_planar() {
    let g = alpha();
    let emb = match star_is_planar(&g) {
        StarPlanarity::Planar(e) => e,
        StarPlanarity::NonplanarFlag(_) => panic!("G-alpha reported nonplanar"),
    };
    assert_eq!(check_star_embedding(&g, &emb), Ok(()));
    assert_eq!(find_obstruction_bruteforce(&g), Ok(None));
    assert_eq!(extract_obstruction(&g).unwrap_err(), CriterionError::Planar);
    assert!(matches!(decide(&g), Ok(StarVerdict::Planar(_))));
}

#[test]
fn doubled_triangle_is_planar() {
    let g = RawStarGraph::default()
        .vertex("a", &["a1", "a2", "a3", "a4"])
        .vertex("b", &["b1", "b2", "b3", "b4"])
        .vertex("c", &["c1", "c2", "c3", "c4"])
        .edge("a1", "b2")
        .edge("a2", "b1")
        .edge("b3", "c4")
        .edge("b4", "c3")
        .edge("c1", "a4")
        .edge("c2", "a3")
        .build()
        .unwrap();
    let StarPlanarity::Planar(emb) = star_is_planar(&g) else { panic!("doubled triangle reported nonplanar") };
    assert_eq!(verify_embedding(&g.ordinary(), &emb.rotation), Ok(true));
    assert_eq!(check_star_embedding(&g, &emb), Ok(()));
    assert_eq!(find_obstruction_bruteforce(&g), Ok(None));
}

#[test]
fn gauss_words() {
    let aa = from_gauss_word("aa").unwrap();
    assert!(star_is_planar(&aa).is_planar());
    assert_eq!(find_obstruction_bruteforce(&aa), Ok(None));

    let abab = from_gauss_word("abab").unwrap();
    assert!(!star_is_planar(&abab).is_planar());
    let c1 = walk(&abab, &["a3", "b3"]);
    let c2 = walk(&abab, &["a4", "b4"]);
    let x = crossings(&abab, &c1, &c2).unwrap();
    assert_eq!(x.len(), 1);
    assert_eq!(abab.vertex_name(x[0].vertex), "b");
    assert!(find_obstruction_bruteforce(&abab).unwrap().is_some());
    let o = extract_obstruction(&abab).unwrap();
    assert_eq!(validate_vassiliev(&abab, &o), Ok(()));

    let trefoil = from_gauss_word("abcabc").unwrap();
    assert!(star_is_planar(&trefoil).is_planar());
    assert_eq!(find_obstruction_bruteforce(&trefoil), Ok(None));
}

#[test]
fn k33_has_no_two_disjoint_cycles() {
    let g = common::k33_star(0);
    assert!(!is_even(&g));
    let cycles = simple_cycles(&g, DEFAULT_CYCLE_CAP).unwrap();
    assert_eq!(cycles.len(), 15);
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            assert!(transversal_count(&g, &cycles[i], &cycles[j]).is_err());
        }
    }
    assert_eq!(find_obstruction_bruteforce(&g), Ok(None));
    let w = classify_nonplanar(&g).unwrap();
    assert!(matches!(w, NonplanarityWitness::EmbeddedK33(_)));
    assert_eq!(validate_witness(&g, &w), Ok(()));
}

#[test]
fn odd_graphs_are_refused_by_extraction() {
    let g = common::k33_star(1);
    assert_eq!(extract_obstruction(&g).unwrap_err(), CriterionError::NotEven);
    assert!(is_even(&RawStarGraph::default().build().unwrap()));
}
