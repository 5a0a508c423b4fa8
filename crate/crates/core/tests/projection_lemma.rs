use starplan_core::generators::{random_disjoint_paths, random_even_star_graph, random_planar_star_graph};
use starplan_core::*;

#[test]
fn verdicts_match_direct_counts() {
    let (mut checked, mut crossing) = (0, 0);
    for seed in 0..4000u64 {
        let g = if seed % 4 == 3 {
            random_planar_star_graph(2 + (seed % 9) as usize, seed)
        } else {
            random_even_star_graph(1 + (seed % 6) as usize, &[2, 4, 6], seed).unwrap()
        };
        let w = build_web_graph(&g);
        let Some((p1, p2)) = random_disjoint_paths(&w, seed) else { continue };
        let r = check_projection_lemma(&w, &g, &p1, &p2).unwrap();
        assert!(r.agrees(), "seed {seed}: {r:?}");
        checked += 1;
        if r.verdict != LemmaVerdict::NoTransversal {
            crossing += 1;
        }
    }
    assert!(checked >= 1000 && crossing >= 30, "{checked} pairs, {crossing} crossing");
}
