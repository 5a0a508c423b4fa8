//! Reduction of a Vassiliev obstruction to one made of simple cycles.
//!
//! A walk that visits `v` twice splits at those visits into two closed
//! halves. Every vertex other than `v` keeps its chords in exactly one half,
//! and the two chords at `v` are re-paired, so the halves' counts against the
//! other walk add up to an odd number. A half with count exactly one is a
//! smaller obstruction.

use thiserror::Error;

use crate::chord::{obstruction_crossing, transversal_count, ObstructionFailure};
use crate::star::{StarGraph, VertexId};
use crate::walk::{ClosedWalk, WalkLike};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplifyError {
    #[error("input is not an obstruction: {0}")]
    NotObstruction(ObstructionFailure),
    #[error("no reduction applies although a walk is not simple")]
    Stuck,
}

/// Split `w` at visits `p < q`: the first half runs the steps strictly after
/// visit `p` up to visit `q`, the second half the rest.
pub fn split_at_visits(w: &ClosedWalk, p: usize, q: usize) -> (Vec<crate::walk::Step>, Vec<crate::walk::Step>) {
    let steps = w.steps();
    let inner = steps[p + 1..=q].to_vec();
    let mut outer = steps[q + 1..].to_vec();
    outer.extend_from_slice(&steps[..=p]);
    (inner, outer)
}

fn revisited_vertices(g: &StarGraph, w: &ClosedWalk) -> Vec<VertexId> {
    let mut counts = std::collections::BTreeMap::new();
    for x in w.visits(g) {
        *counts.entry(x.vertex).or_insert(0usize) += 1;
    }
    counts.into_iter().filter(|&(_, c)| c > 1).map(|(v, _)| v).collect()
}

/// One reduction move. Returns `None` when both walks are already simple.
pub fn simplify_step(
    g: &StarGraph,
    c1: &ClosedWalk,
    c2: &ClosedWalk,
) -> Option<Result<(ClosedWalk, ClosedWalk), SimplifyError>> {
    let r1 = revisited_vertices(g, c1);
    let r2 = revisited_vertices(g, c2);
    if r1.is_empty() && r2.is_empty() {
        return None;
    }
    let mut vertices: Vec<VertexId> = r1.iter().chain(r2.iter()).copied().collect();
    vertices.sort();
    vertices.dedup();
    for v in vertices {
        for which in 0..2 {
            let (w, other) = if which == 0 { (c1, c2) } else { (c2, c1) };
            let at: Vec<usize> = w
                .visits(g)
                .iter()
                .filter(|x| x.vertex == v)
                .map(|x| x.index)
                .collect();
            for a in 0..at.len() {
                for b in a + 1..at.len() {
                    let (inner, outer) = split_at_visits(w, at[a], at[b]);
                    for half in [inner, outer] {
                        let h = ClosedWalk::new(g, half).expect("halves of a closed walk close up");
                        if transversal_count(g, &h, other) == Ok(1) {
                            let pair = if which == 0 { (h, c2.clone()) } else { (c1.clone(), h) };
                            return Some(Ok(pair));
                        }
                    }
                }
            }
        }
    }
    Some(Err(SimplifyError::Stuck))
}

pub fn simplify_obstruction(
    g: &StarGraph,
    c1: &ClosedWalk,
    c2: &ClosedWalk,
) -> Result<(ClosedWalk, ClosedWalk), SimplifyError> {
    obstruction_crossing(g, c1, c2).map_err(SimplifyError::NotObstruction)?;
    let (mut a, mut b) = (c1.clone(), c2.clone());
    while let Some(step) = simplify_step(g, &a, &b) {
        (a, b) = step?;
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::is_vassiliev_obstruction;
    use crate::star::{EdgeId, RawStarGraph};

    fn infinity() -> StarGraph {
        RawStarGraph::default()
            .vertex("v", &["1", "2", "3", "4"])
            .edge("1", "3")
            .edge("2", "4")
            .build()
            .unwrap()
    }

    #[test]
    fn simple_input_is_a_fixed_point() {
        let g = infinity();
        let a = ClosedWalk::around_loop(&g, EdgeId(0)).unwrap();
        let b = ClosedWalk::around_loop(&g, EdgeId(1)).unwrap();
        assert_eq!(simplify_obstruction(&g, &a, &b), Ok((a, b)));
    }

    #[test]
    fn rejects_non_obstruction() {
        let g = infinity();
        let a = ClosedWalk::around_loop(&g, EdgeId(0)).unwrap();
        assert!(matches!(
            simplify_obstruction(&g, &a, &a),
            Err(SimplifyError::NotObstruction(ObstructionFailure::SharedEdge(_)))
        ));
    }

    // u carries a figure-eight of loops p, q; v carries the loop r crossing
    // the double edge s, t between u and v. The walk p + q + s + t revisits
    // u twice with an empty gap at the loops.
    fn two_vertex_self_crossing() -> StarGraph {
        RawStarGraph::default()
            .vertex("u", &["p1", "q1", "p2", "q2", "s1", "t1"])
            .vertex("v", &["s2", "r1", "t2", "r2"])
            .edge("p1", "p2")
            .edge("q1", "q2")
            .edge("s1", "s2")
            .edge("t1", "t2")
            .edge("r1", "r2")
            .build()
            .unwrap()
    }

    #[test]
    fn empty_gap_split_shortens_the_walk() {
        let g = two_vertex_self_crossing();
        let h = |n: &str| g.half_edge_by_name(n).unwrap();
        let c1 = ClosedWalk::from_departures(&g, &[h("s1"), h("t2"), h("p1"), h("q1")]).unwrap();
        let c2 = ClosedWalk::around_loop(&g, EdgeId(4)).unwrap();
        assert!(!c1.is_simple(&g));
        assert!(is_vassiliev_obstruction(&g, &c1, &c2));
        let (a, b) = simplify_obstruction(&g, &c1, &c2).unwrap();
        assert!(a.len() < c1.len());
        assert!(a.is_simple(&g) && b.is_simple(&g));
        assert!(is_vassiliev_obstruction(&g, &a, &b));
    }

    #[test]
    fn each_step_reduces_revisits() {
        let g = two_vertex_self_crossing();
        let h = |n: &str| g.half_edge_by_name(n).unwrap();
        let c1 = ClosedWalk::from_departures(&g, &[h("s1"), h("t2"), h("p1"), h("q1")]).unwrap();
        let c2 = ClosedWalk::around_loop(&g, EdgeId(4)).unwrap();
        let before = c1.revisits(&g) + c2.revisits(&g);
        let (a, b) = simplify_step(&g, &c1, &c2).unwrap().unwrap();
        assert!(a.revisits(&g) + b.revisits(&g) < before);
    }
}
