mod common;

use starplan_core::*;

fn witness(g: &StarGraph) -> NonplanarityWitness {
    let w = classify_nonplanar(g).unwrap_or_else(|e| panic!("{e} on {:?}", g.to_raw()));
    assert_eq!(validate_witness(g, &w), Ok(()));
    w
}

#[test]
fn every_rotation_of_k33() {
    for seed in 0..150u64 {
        let g = common::k33_star(seed);
        assert!(!star_is_planar(&g).is_planar());
        assert_eq!(find_obstruction_bruteforce(&g), Ok(None));
        let NonplanarityWitness::EmbeddedK33(k) = witness(&g) else { panic!("K3,3 yielded an obstruction") };
        let mut branch = k.branch_vertices.clone();
        branch.sort();
        assert_eq!(branch, (0..6).map(VertexId).collect::<Vec<_>>());
        assert!(k.paths.iter().all(|p| p.len() == 1));
    }
}

#[test]
fn odd_random_graphs() {
    let mut seen = [0usize; 2];
    for seed in 0..500u64 {
        let g = common::random_star(3 + (seed % 5) as usize, 5, seed);
        if star_is_planar(&g).is_planar() {
            assert_eq!(classify_nonplanar(&g).unwrap_err(), CriterionError::Planar);
            continue;
        }
        match witness(&g) {
            NonplanarityWitness::Vassiliev(_) => seen[0] += 1,
            NonplanarityWitness::EmbeddedK33(_) => {
                assert!(!is_even(&g));
                seen[1] += 1;
            }
        }
    }
    assert!(seen[0] > 100, "{seen:?}");
}

#[test]
fn subdivided_and_tangled_k33() {
    let mut k33 = 0;
    for seed in 0..800u64 {
        let g = common::tangled_k33(1 + (seed % 4) as usize, seed);
        if star_is_planar(&g).is_planar() {
            continue;
        }
        if matches!(witness(&g), NonplanarityWitness::EmbeddedK33(_)) {
            k33 += 1;
        }
        if is_even(&g) {
            assert!(extract_obstruction(&g).is_ok());
        }
    }
    assert!(k33 > 40, "{k33}");
}

#[test]
fn even_graphs_never_yield_k33() {
    for seed in 0..300u64 {
        let g = generators::random_even_star_graph(1 + (seed % 6) as usize, &[2, 4, 6], seed).unwrap();
        if !star_is_planar(&g).is_planar() {
            assert!(matches!(witness(&g), NonplanarityWitness::Vassiliev(_)));
        }
    }
}

#[test]
fn tampered_k33_witnesses_are_rejected() {
    let g = common::k33_star(3);
    let NonplanarityWitness::EmbeddedK33(k) = witness(&g) else { unreachable!() };
    let mut swapped = k.clone();
    swapped.paths.swap(0, 1);
    assert!(validate_witness(&g, &NonplanarityWitness::EmbeddedK33(swapped)).is_err());
    let mut short = k.clone();
    short.paths.pop();
    assert!(validate_witness(&g, &NonplanarityWitness::EmbeddedK33(short)).is_err());
    let mut doubled = k;
    doubled.paths[1] = doubled.paths[0].clone();
    assert!(validate_witness(&g, &NonplanarityWitness::EmbeddedK33(doubled)).is_err());
}
