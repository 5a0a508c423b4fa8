//! Vertex chord diagrams and transversal intersections.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::star::{EdgeId, StarGraph, VertexId};
use crate::walk::{ClosedWalk, Visit, WalkLike};

/// Which walk (by index in the input list) and which of its visits drew a chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordOwner {
    pub walk: usize,
    pub visit: usize,
}

/// A chord between two rotation positions, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
    pub owner: ChordOwner,
}

impl Chord {
    fn new(a: usize, b: usize, owner: ChordOwner) -> Chord {
        Chord { i: a.min(b), j: a.max(b), owner }
    }

    fn strictly_inside(&self, p: usize) -> bool {
        self.i < p && p < self.j
    }

    pub fn crosses(&self, other: &Chord) -> bool {
        self.strictly_inside(other.i) != self.strictly_inside(other.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexChordDiagram {
    pub vertex: VertexId,
    pub circle_size: usize,
    pub chords: Vec<Chord>,
}

impl VertexChordDiagram {
    pub fn chords_of(&self, walk: usize) -> impl Iterator<Item = &Chord> + '_ {
        self.chords.iter().filter(move |c| c.owner.walk == walk)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("walks share edge {0}")]
    SharedEdge(EdgeId),
}

/// One alternating pair of chords: `first` is drawn by the first walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub vertex: VertexId,
    pub first: Chord,
    pub second: Chord,
}

fn shared_edge(walks: &[&[crate::walk::Step]]) -> Option<EdgeId> {
    let mut owner = BTreeMap::new();
    for (k, steps) in walks.iter().enumerate() {
        for s in steps.iter() {
            if let Some(&other) = owner.get(&s.edge) {
                if other != k {
                    return Some(s.edge);
                }
            }
            owner.insert(s.edge, k);
        }
    }
    None
}

fn diagram_from_visits(g: &StarGraph, v: VertexId, visits: &[Vec<Visit>]) -> VertexChordDiagram {
    let mut chords = Vec::new();
    for (walk, vs) in visits.iter().enumerate() {
        for (visit, x) in vs.iter().enumerate() {
            if x.vertex == v {
                let owner = ChordOwner { walk, visit };
                chords.push(Chord::new(g.position(x.arrive), g.position(x.depart), owner));
            }
        }
    }
    VertexChordDiagram { vertex: v, circle_size: g.degree(v), chords }
}

/// Chord diagram at `v` of a family of pairwise edge-disjoint walks.
pub fn chord_diagram(
    g: &StarGraph,
    v: VertexId,
    walks: &[ClosedWalk],
) -> Result<VertexChordDiagram, ChordError> {
    let steps: Vec<&[crate::walk::Step]> = walks.iter().map(|w| w.steps()).collect();
    if let Some(e) = shared_edge(&steps) {
        return Err(ChordError::SharedEdge(e));
    }
    let visits: Vec<Vec<Visit>> = walks.iter().map(|w| w.visits(g)).collect();
    Ok(diagram_from_visits(g, v, &visits))
}

/// All crossings between the chords of `a` and those of `b`, by vertex, then
/// by the visit order of `a`, then of `b`. Works for open walks too.
pub fn crossings<A: WalkLike, B: WalkLike>(
    g: &StarGraph,
    a: &A,
    b: &B,
) -> Result<Vec<Crossing>, ChordError> {
    if let Some(e) = shared_edge(&[a.steps(), b.steps()]) {
        return Err(ChordError::SharedEdge(e));
    }
    Ok(crossings_of_visits(g, &a.visits(g), &b.visits(g)))
}

pub(crate) fn crossings_of_visits(g: &StarGraph, va: &[Visit], vb: &[Visit]) -> Vec<Crossing> {
    let mut at: BTreeMap<VertexId, (Vec<Chord>, Vec<Chord>)> = BTreeMap::new();
    for (visit, x) in va.iter().enumerate() {
        let c = Chord::new(g.position(x.arrive), g.position(x.depart), ChordOwner { walk: 0, visit });
        at.entry(x.vertex).or_default().0.push(c);
    }
    for (visit, x) in vb.iter().enumerate() {
        let c = Chord::new(g.position(x.arrive), g.position(x.depart), ChordOwner { walk: 1, visit });
        at.entry(x.vertex).or_default().1.push(c);
    }
    let mut out = Vec::new();
    for (vertex, (ca, cb)) in at {
        for first in &ca {
            for second in &cb {
                if first.crosses(second) {
                    out.push(Crossing { vertex, first: *first, second: *second });
                }
            }
        }
    }
    out
}

/// Crossing pairs of one walk with itself (two different visits at a vertex).
pub fn self_crossings<A: WalkLike>(g: &StarGraph, a: &A) -> Vec<Crossing> {
    let mut out = Vec::new();
    let visits = a.visits(g);
    let chords: Vec<Chord> = visits
        .iter()
        .enumerate()
        .map(|(visit, x)| Chord::new(g.position(x.arrive), g.position(x.depart), ChordOwner { walk: 0, visit }))
        .collect();
    for p in 0..visits.len() {
        for q in p + 1..visits.len() {
            if visits[p].vertex == visits[q].vertex && chords[p].crosses(&chords[q]) {
                out.push(Crossing { vertex: visits[p].vertex, first: chords[p], second: chords[q] });
            }
        }
    }
    out
}

pub fn transversal_count<A: WalkLike, B: WalkLike>(
    g: &StarGraph,
    c1: &A,
    c2: &B,
) -> Result<usize, ChordError> {
    crossings(g, c1, c2).map(|x| x.len())
}

/// Why a pair fails to be a Vassiliev obstruction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionFailure {
    #[error("cycles share edge {0}")]
    SharedEdge(EdgeId),
    #[error("cycles have {0} transversal intersections, expected exactly 1")]
    Count(usize),
}

/// The single crossing of an obstruction, or the reason there is none.
pub fn obstruction_crossing(
    g: &StarGraph,
    c1: &ClosedWalk,
    c2: &ClosedWalk,
) -> Result<Crossing, ObstructionFailure> {
    match crossings(g, c1, c2) {
        Err(ChordError::SharedEdge(e)) => Err(ObstructionFailure::SharedEdge(e)),
        Ok(x) if x.len() == 1 => Ok(x[0]),
        Ok(x) => Err(ObstructionFailure::Count(x.len())),
    }
}

pub fn is_vassiliev_obstruction(g: &StarGraph, c1: &ClosedWalk, c2: &ClosedWalk) -> bool {
    obstruction_crossing(g, c1, c2).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::RawStarGraph;

    fn bouquet(a: (&str, &str), b: (&str, &str)) -> StarGraph {
        RawStarGraph::default()
            .vertex("v", &["1", "2", "3", "4"])
            .edge(a.0, a.1)
            .edge(b.0, b.1)
            .build()
            .unwrap()
    }

    fn loops(g: &StarGraph) -> (ClosedWalk, ClosedWalk) {
        (
            ClosedWalk::around_loop(g, EdgeId(0)).unwrap(),
            ClosedWalk::around_loop(g, EdgeId(1)).unwrap(),
        )
    }

    #[test]
    fn crossing_rule() {
        let o = ChordOwner { walk: 0, visit: 0 };
        let c = |i, j| Chord::new(i, j, o);
        assert!(c(0, 2).crosses(&c(1, 3)));
        assert!(c(1, 3).crosses(&c(0, 2)));
        assert!(!c(1, 2).crosses(&c(0, 3)));
        assert!(!c(0, 1).crosses(&c(2, 3)));
    }

    #[test]
    fn infinity_bouquet_diagram() {
        let g = bouquet(("1", "3"), ("2", "4"));
        let (a, b) = loops(&g);
        let d = chord_diagram(&g, VertexId(0), &[a.clone(), b.clone()]).unwrap();
        let pairs: Vec<_> = d.chords.iter().map(|c| (c.i, c.j, c.owner.walk)).collect();
        assert_eq!(pairs, vec![(0, 2, 0), (1, 3, 1)]);
        assert_eq!(transversal_count(&g, &a, &b), Ok(1));
        assert!(is_vassiliev_obstruction(&g, &a, &b));
    }

    #[test]
    fn alpha_bouquet_diagram() {
        let g = bouquet(("2", "3"), ("4", "1"));
        let (a, b) = loops(&g);
        let d = chord_diagram(&g, VertexId(0), &[a.clone(), b.clone()]).unwrap();
        let pairs: Vec<_> = d.chords.iter().map(|c| (c.i, c.j, c.owner.walk)).collect();
        assert_eq!(pairs, vec![(1, 2, 0), (0, 3, 1)]);
        assert_eq!(transversal_count(&g, &a, &b), Ok(0));
        assert!(!is_vassiliev_obstruction(&g, &a, &b));
        assert_eq!(obstruction_crossing(&g, &a, &b), Err(ObstructionFailure::Count(0)));
    }

    #[test]
    fn walk_avoiding_vertex_draws_nothing() {
        let g = RawStarGraph::default()
            .vertex("u", &["u1", "u2"])
            .vertex("w", &["w1", "w2"])
            .edge("u1", "u2")
            .edge("w1", "w2")
            .build()
            .unwrap();
        let (a, b) = loops(&g);
        let d = chord_diagram(&g, VertexId(1), &[a, b]).unwrap();
        assert_eq!(d.chords_of(0).count(), 0);
        assert_eq!(d.chords_of(1).count(), 1);
    }

    #[test]
    fn shared_edges_are_rejected() {
        let g = bouquet(("1", "3"), ("2", "4"));
        let (a, _) = loops(&g);
        assert_eq!(transversal_count(&g, &a, &a), Err(ChordError::SharedEdge(EdgeId(0))));
        assert_eq!(
            obstruction_crossing(&g, &a, &a.reversed()),
            Err(ObstructionFailure::SharedEdge(EdgeId(0)))
        );
        assert!(chord_diagram(&g, VertexId(0), &[a.clone(), a]).is_err());
    }

    #[test]
    fn self_crossing_depends_on_turns() {
        let g = bouquet(("2", "3"), ("4", "1"));
        let h = |n: &str| g.half_edge_by_name(n).unwrap();
        let w = ClosedWalk::from_departures(&g, &[h("2"), h("1")]).unwrap();
        assert_eq!(self_crossings(&g, &w).len(), 1);
        let w = ClosedWalk::from_departures(&g, &[h("2"), h("4")]).unwrap();
        assert_eq!(self_crossings(&g, &w).len(), 0);
    }
}
