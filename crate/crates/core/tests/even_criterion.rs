mod common;

use starplan_core::criterion::{
    extract_obstruction_traced, simple_cycles, validate_vassiliev, web_occupancy, DEFAULT_CYCLE_CAP,
};
use starplan_core::generators::{evenize, from_gauss_word, random_even_star_graph, random_planar_star_graph};
use starplan_core::planarity::KuratowskiKind;
use starplan_core::*;

/// Planarity, brute force and extraction agree on `g`; returns whether it
/// is planar.
fn three_way(g: &StarGraph) -> bool {
    let planar = star_is_planar(g);
    let bf = find_obstruction_bruteforce(g).unwrap();
    assert_eq!(planar.is_planar(), bf.is_none(), "verdicts disagree on {:?}", g.to_raw());
    if let Some(o) = &bf {
        assert_eq!(validate_vassiliev(g, o), Ok(()));
    }
    if !planar.is_planar() {
        let x = extract_obstruction_traced(g).unwrap_or_else(|e| panic!("{e} on {:?}", g.to_raw()));
        assert_eq!(validate_vassiliev(g, &x.obstruction), Ok(()));
        assert!(x.obstruction.c1.is_simple(g) && x.obstruction.c2.is_simple(g));
    }
    planar.is_planar()
}

#[test]
fn random_even_graphs() {
    let mut nonplanar = 0;
    for seed in 0..1000u64 {
        let g = random_even_star_graph(1 + (seed % 6) as usize, &[2, 4, 6], seed).unwrap();
        if !three_way(&g) {
            nonplanar += 1;
        }
    }
    assert!(nonplanar > 300, "only {nonplanar} nonplanar samples");
}

#[test]
fn larger_even_graphs() {
    for seed in 0..200u64 {
        three_way(&random_even_star_graph(7 + (seed % 3) as usize, &[2, 4], seed).unwrap());
    }
}

#[test]
fn gauss_diagrams() {
    let mut planar = 0;
    for seed in 0..400u64 {
        let g = from_gauss_word(&common::gauss_word(2 + (seed % 6) as usize, seed)).unwrap();
        planar += three_way(&g) as usize;
    }
    assert!(planar > 20);
}

#[test]
fn doubled_k33_and_k5() {
    for seed in 0..150u64 {
        assert!(!three_way(&evenize(&common::k33_star(seed), &[])));
        assert!(!three_way(&common::k5_star(seed)));
    }
}

#[test]
fn k33_occupancies_avoid_k23() {
    for seed in 0..300u64 {
        let g = random_even_star_graph(2 + (seed % 5) as usize, &[4, 6], seed).unwrap();
        if let StarPlanarity::NonplanarFlag(flag) = star_is_planar(&g) {
            if flag.kuratowski.kind == KuratowskiKind::K33 {
                assert!(web_occupancy(&g, &flag).iter().all(|o| !o.class.contains_k23));
            }
        }
    }
}

#[test]
fn web_graph_verdict_matches() {
    for seed in 0..300u64 {
        let g = if seed % 2 == 0 {
            random_even_star_graph(1 + (seed % 6) as usize, &[2, 4, 6], seed).unwrap()
        } else {
            random_planar_star_graph(1 + (seed % 12) as usize, seed)
        };
        let web = decide_planarity(&build_web_graph(&g).graph);
        assert_eq!(matches!(web, PlanarityVerdict::Planar(_)), star_is_planar(&g).is_planar());
    }
}

#[test]
fn planar_generator_is_confirmed() {
    for seed in 0..500u64 {
        let g = random_planar_star_graph(1 + (seed % 15) as usize, seed);
        let StarPlanarity::Planar(emb) = star_is_planar(&g) else { panic!("planar sample {seed} rejected") };
        assert_eq!(check_star_embedding(&g, &emb), Ok(()));
        let doubled = evenize(&g, &emb.reversed);
        assert!(is_even(&doubled));
        assert!(star_is_planar(&doubled).is_planar(), "evenized sample {seed} rejected");
        assert_eq!(find_obstruction_bruteforce(&doubled), Ok(None));
    }
}

#[test]
fn evenizing_keeps_the_verdict() {
    for seed in 0..200u64 {
        let g = random_even_star_graph(1 + (seed % 4) as usize, &[2, 4], seed).unwrap();
        let flips = match star_is_planar(&g) {
            StarPlanarity::Planar(e) => e.reversed,
            StarPlanarity::NonplanarFlag(_) => Vec::new(),
        };
        assert_eq!(star_is_planar(&evenize(&g, &flips)).is_planar(), star_is_planar(&g).is_planar());
    }
}

#[test]
fn cycles_in_planar_graphs_cross_evenly() {
    for seed in 0..300u64 {
        let g = random_planar_star_graph(2 + (seed % 8) as usize, seed);
        let g = if seed % 2 == 0 { g } else { evenize(&g, &[]) };
        if !star_is_planar(&g).is_planar() {
            continue;
        }
        let cycles = simple_cycles(&g, DEFAULT_CYCLE_CAP).unwrap();
        for i in 0..cycles.len().min(60) {
            for j in i + 1..cycles.len().min(60) {
                if let Ok(n) = transversal_count(&g, &cycles[i], &cycles[j]) {
                    assert_eq!(n % 2, 0);
                }
            }
        }
    }
}

#[test]
fn certificates_are_deterministic() {
    for seed in 0..100u64 {
        let g = random_even_star_graph(1 + (seed % 6) as usize, &[2, 4, 6], seed).unwrap();
        let again = StarGraph::from_raw(&g.to_raw()).unwrap();
        assert_eq!(decide(&g), decide(&again));
        assert_eq!(find_obstruction_bruteforce(&g), find_obstruction_bruteforce(&again));
    }
}
