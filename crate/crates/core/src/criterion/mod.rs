//! Planarity of star-graphs decided through the web graph, with a
//! certificate for either answer.
//!
//! A planar star-graph gets a compatible rotation system. A nonplanar one
//! gets either two edge-disjoint cycles crossing exactly once or, when the
//! graph has odd vertices and no such pair turns up, a K3,3 whose paths
//! pairwise never cross.

mod bruteforce;
mod embed;
mod extract;
mod immersion;
mod skeleton;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::chord::{crossings, obstruction_crossing, Crossing, ObstructionFailure};
use crate::star::{is_even, StarGraph, VertexId};
use crate::walk::{ClosedWalk, OpenWalk, WalkError, WalkLike};

pub use bruteforce::{
    find_obstruction_bruteforce, find_obstruction_bruteforce_with_cap, simple_cycles, CapacityError,
    DEFAULT_CYCLE_CAP,
};
pub use embed::{check_star_embedding, star_is_planar, EmbeddingCheckError, NonplanarFlag, StarEmbedding, StarPlanarity};
pub use extract::{
    classify_nonplanar, extract_obstruction, extract_obstruction_traced, web_occupancy, Extraction, ExtractionCase,
    OccupancyClass, WebOccupancy,
};

/// Two edge-disjoint closed walks with exactly one transversal intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VassilievObstruction {
    pub c1: ClosedWalk,
    pub c2: ClosedWalk,
    pub crossing: Crossing,
}

impl VassilievObstruction {
    pub fn new(g: &StarGraph, c1: ClosedWalk, c2: ClosedWalk) -> Result<Self, ObstructionFailure> {
        let crossing = obstruction_crossing(g, &c1, &c2)?;
        Ok(VassilievObstruction { c1, c2, crossing })
    }
}

/// Six branch vertices, the first three forming one side, and nine walks:
/// `paths[3 * i + j]` runs from `branch_vertices[i]` to
/// `branch_vertices[3 + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedK33 {
    pub branch_vertices: Vec<VertexId>,
    pub paths: Vec<OpenWalk>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonplanarityWitness {
    Vassiliev(VassilievObstruction),
    EmbeddedK33(EmbeddedK33),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarVerdict {
    Planar(StarEmbedding),
    Nonplanar(NonplanarityWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("graph is planar")]
    Planar,
    #[error("graph has a vertex of odd degree")]
    NotEven,
    #[error("extraction failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("cycle {0} is not a closed walk: {1}")]
    BadCycle(usize, WalkError),
    #[error("cycle {0} visits a vertex twice")]
    NotSimple(usize),
    #[error("not an obstruction: {0}")]
    Obstruction(ObstructionFailure),
    #[error("recorded crossing differs from the actual one")]
    CrossingMismatch,
    #[error("expected six distinct branch vertices of the graph")]
    BranchVertices,
    #[error("expected nine paths, found {0}")]
    PathCount(usize),
    #[error("path {0} is not a walk: {1}")]
    BadPath(usize, WalkError),
    #[error("path {0} is empty or joins the wrong branch vertices")]
    WrongEnds(usize),
    #[error("paths {0} and {1} share an edge")]
    SharedEdge(usize, usize),
    #[error("paths {0} and {1} cross")]
    Crossing(usize, usize),
    #[error("path {0} separates the path ends at branch vertex {1}")]
    SplitsBranch(usize, usize),
}

pub fn validate_vassiliev(g: &StarGraph, o: &VassilievObstruction) -> Result<(), WitnessError> {
    let mut walks = Vec::new();
    for (i, c) in [&o.c1, &o.c2].into_iter().enumerate() {
        let w = ClosedWalk::new(g, c.steps().to_vec()).map_err(|e| WitnessError::BadCycle(i, e))?;
        if !w.is_simple(g) {
            return Err(WitnessError::NotSimple(i));
        }
        walks.push(w);
    }
    let crossing = obstruction_crossing(g, &walks[0], &walks[1]).map_err(WitnessError::Obstruction)?;
    if crossing != o.crossing {
        return Err(WitnessError::CrossingMismatch);
    }
    Ok(())
}

/// Checks the incidence pattern, edge-disjointness and absence of crossings
/// between different paths, and that no path passes through a branch vertex
/// between the ends there. Vertex-injectivity is not required.
pub fn validate_k33(g: &StarGraph, k: &EmbeddedK33) -> Result<(), WitnessError> {
    let distinct: BTreeSet<VertexId> = k.branch_vertices.iter().copied().collect();
    if k.branch_vertices.len() != 6 || distinct.len() != 6 || distinct.iter().any(|v| v.0 >= g.vertex_count()) {
        return Err(WitnessError::BranchVertices);
    }
    if k.paths.len() != 9 {
        return Err(WitnessError::PathCount(k.paths.len()));
    }
    let mut walks = Vec::new();
    for (idx, p) in k.paths.iter().enumerate() {
        let (i, j) = (idx / 3, idx % 3);
        if p.start().0 >= g.vertex_count() {
            return Err(WitnessError::WrongEnds(idx));
        }
        let w = OpenWalk::new(g, p.start(), p.steps().to_vec()).map_err(|e| WitnessError::BadPath(idx, e))?;
        if w.is_empty() || w.start() != k.branch_vertices[i] || w.end(g) != k.branch_vertices[3 + j] {
            return Err(WitnessError::WrongEnds(idx));
        }
        walks.push(w);
    }
    for a in 0..9 {
        for b in a + 1..9 {
            match crossings(g, &walks[a], &walks[b]) {
                Err(_) => return Err(WitnessError::SharedEdge(a, b)),
                Ok(x) if !x.is_empty() => return Err(WitnessError::Crossing(a, b)),
                Ok(_) => {}
            }
        }
    }
    if let Some((idx, node)) = immersion::branch_split(g, &k.branch_vertices, &walks) {
        return Err(WitnessError::SplitsBranch(idx, node));
    }
    Ok(())
}

pub fn validate_witness(g: &StarGraph, w: &NonplanarityWitness) -> Result<(), WitnessError> {
    match w {
        NonplanarityWitness::Vassiliev(o) => validate_vassiliev(g, o),
        NonplanarityWitness::EmbeddedK33(k) => validate_k33(g, k),
    }
}

/// Full decision: an embedding, or a witness from the obstruction engine
/// for even graphs and from the general classification otherwise.
pub fn decide(g: &StarGraph) -> Result<StarVerdict, CriterionError> {
    match star_is_planar(g) {
        StarPlanarity::Planar(e) => Ok(StarVerdict::Planar(e)),
        StarPlanarity::NonplanarFlag(flag) => {
            let witness = if is_even(g) {
                NonplanarityWitness::Vassiliev(extract::extract_with_flag(g, &flag)?.obstruction)
            } else {
                extract::classify_with_flag(g, &flag)?
            };
            Ok(StarVerdict::Nonplanar(witness))
        }
    }
}
