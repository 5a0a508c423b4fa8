//! Obstruction search over all pairs of simple cycles.
//!
//! Independent of the web graph: it only enumerates cycles and counts chord
//! crossings, so it can referee the extraction engines.

use thiserror::Error;

use super::skeleton;
use super::VassilievObstruction;
use crate::star::StarGraph;
use crate::walk::{ClosedWalk, Step, WalkLike};

pub const DEFAULT_CYCLE_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("more than {cap} simple cycles")]
pub struct CapacityError {
    pub cap: usize,
}

/// All simple cycles (vertex-simple closed walks, loops included), each
/// once, in a fixed order.
pub fn simple_cycles(g: &StarGraph, cap: usize) -> Result<Vec<ClosedWalk>, CapacityError> {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|e| {
            let (a, b) = g.endpoints(e);
            (a.0, b.0)
        })
        .collect();
    let routes = skeleton::simple_cycles(g.vertex_count(), &edges, cap).map_err(|_| CapacityError { cap })?;
    Ok(routes
        .iter()
        .map(|r| {
            let steps: Vec<Step> = r
                .iter()
                .map(|&(e, fwd)| Step::departing(g, g.ends(crate::star::EdgeId(e))[if fwd { 0 } else { 1 }]))
                .collect();
            ClosedWalk::new(g, steps).expect("a simple cycle is a closed walk")
        })
        .collect())
}

/// Edge set and chords of a simple cycle in a form cheap to compare.
struct Compact {
    edges: Vec<u64>,
    /// `(vertex, low, high)` sorted by vertex; at most one per vertex.
    chords: Vec<(usize, usize, usize)>,
}

impl Compact {
    fn new(g: &StarGraph, c: &ClosedWalk) -> Compact {
        let mut edges = vec![0u64; g.edge_count().div_ceil(64)];
        for s in c.steps() {
            edges[s.edge.0 / 64] |= 1 << (s.edge.0 % 64);
        }
        let mut chords: Vec<(usize, usize, usize)> = c
            .visits(g)
            .iter()
            .map(|x| {
                let (a, b) = (g.position(x.arrive), g.position(x.depart));
                (x.vertex.0, a.min(b), a.max(b))
            })
            .collect();
        chords.sort();
        Compact { edges, chords }
    }

    fn disjoint(&self, other: &Compact) -> bool {
        self.edges.iter().zip(&other.edges).all(|(a, b)| a & b == 0)
    }

    /// Crossing count, saturating at 2.
    fn crossings(&self, other: &Compact) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.chords.len() && j < other.chords.len() {
            let (v, a, b) = self.chords[i];
            let (w, c, d) = other.chords[j];
            if v < w {
                i += 1;
            } else if w < v {
                j += 1;
            } else {
                if (a < c && c < b) != (a < d && d < b) {
                    n += 1;
                    if n > 1 {
                        return n;
                    }
                }
                i += 1;
                j += 1;
            }
        }
        n
    }
}

pub fn find_obstruction_bruteforce(g: &StarGraph) -> Result<Option<VassilievObstruction>, CapacityError> {
    find_obstruction_bruteforce_with_cap(g, DEFAULT_CYCLE_CAP)
}

/// The first edge-disjoint pair of simple cycles `(i, j)`, `i < j` in
/// enumeration order, with exactly one transversal intersection.
pub fn find_obstruction_bruteforce_with_cap(
    g: &StarGraph,
    cap: usize,
) -> Result<Option<VassilievObstruction>, CapacityError> {
    let cycles = simple_cycles(g, cap)?;
    let compact: Vec<Compact> = cycles.iter().map(|c| Compact::new(g, c)).collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if compact[i].disjoint(&compact[j]) && compact[i].crossings(&compact[j]) == 1 {
                let o = VassilievObstruction::new(g, cycles[i].clone(), cycles[j].clone())
                    .expect("compact count agrees with the chord calculus");
                return Ok(Some(o));
            }
        }
    }
    Ok(None)
}
