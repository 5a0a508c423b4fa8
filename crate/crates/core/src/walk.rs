//! Edge-based walks in a star-graph.
//!
//! A walk is a sequence of [`Step`]s; a step traverses one edge from one of
//! its half-edges to the other. Between two consecutive steps the walk
//! *visits* a vertex, arriving on one half-edge and departing on another.
//! Loops make vertex sequences ambiguous, which is why walks are stored by
//! edge and direction.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::star::{EdgeId, HalfEdgeId, StarGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub from: HalfEdgeId,
    pub to: HalfEdgeId,
}

impl Step {
    /// Traverse the edge of `from` starting at `from`.
    pub fn departing(g: &StarGraph, from: HalfEdgeId) -> Step {
        Step { edge: g.edge_of(from), from, to: g.twin(from) }
    }

    pub fn reversed(self) -> Step {
        Step { edge: self.edge, from: self.to, to: self.from }
    }
}

/// One passage of a walk through a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    pub vertex: VertexId,
    pub arrive: HalfEdgeId,
    pub depart: HalfEdgeId,
    /// The visit sits between step `index` and step `index + 1`.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("a closed walk needs at least one step")]
    Empty,
    #[error("step {0} does not traverse an edge between its half-edges")]
    BadStep(usize),
    #[error("step {0} does not start where the previous step ended")]
    Discontinuous(usize),
    #[error("walk does not close up")]
    NotClosed,
    #[error("edge {0} is traversed twice")]
    RepeatedEdge(EdgeId),
    #[error("walk does not start at the given vertex")]
    WrongStart,
}

pub trait WalkLike {
    fn steps(&self) -> &[Step];
    fn visits(&self, g: &StarGraph) -> Vec<Visit>;

    fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.steps().iter().map(|s| s.edge).collect()
    }

    fn len(&self) -> usize {
        self.steps().len()
    }

    fn is_empty(&self) -> bool {
        self.steps().is_empty()
    }
}

fn check_steps(g: &StarGraph, steps: &[Step]) -> Result<(), WalkError> {
    let mut used = BTreeSet::new();
    for (i, s) in steps.iter().enumerate() {
        if g.edge_of(s.from) != s.edge || g.twin(s.from) != s.to {
            return Err(WalkError::BadStep(i));
        }
        if !used.insert(s.edge) {
            return Err(WalkError::RepeatedEdge(s.edge));
        }
        if i > 0 && g.vertex_of(steps[i - 1].to) != g.vertex_of(s.from) {
            return Err(WalkError::Discontinuous(i));
        }
    }
    Ok(())
}

/// A cyclic, edge-simple walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    steps: Vec<Step>,
}

impl ClosedWalk {
    pub fn new(g: &StarGraph, steps: Vec<Step>) -> Result<Self, WalkError> {
        if steps.is_empty() {
            return Err(WalkError::Empty);
        }
        check_steps(g, &steps)?;
        let last = steps[steps.len() - 1];
        if g.vertex_of(last.to) != g.vertex_of(steps[0].from) {
            return Err(WalkError::NotClosed);
        }
        Ok(ClosedWalk { steps })
    }

    /// Build from the sequence of departing half-edges.
    pub fn from_departures(g: &StarGraph, departures: &[HalfEdgeId]) -> Result<Self, WalkError> {
        let steps = departures.iter().map(|&h| Step::departing(g, h)).collect();
        ClosedWalk::new(g, steps)
    }

    /// The one-step walk around a loop, leaving on the first listed end.
    pub fn around_loop(g: &StarGraph, e: EdgeId) -> Result<Self, WalkError> {
        ClosedWalk::from_departures(g, &[g.ends(e)[0]])
    }

    pub fn visit_count(&self, g: &StarGraph, v: VertexId) -> usize {
        self.visits(g).iter().filter(|x| x.vertex == v).count()
    }

    /// No vertex is visited twice.
    pub fn is_simple(&self, g: &StarGraph) -> bool {
        let mut seen = BTreeSet::new();
        self.visits(g).iter().all(|x| seen.insert(x.vertex))
    }

    /// Total number of repeated visits, `sum over v of max(visits(v) - 1, 0)`.
    pub fn revisits(&self, g: &StarGraph) -> usize {
        let mut seen = BTreeSet::new();
        self.visits(g).iter().filter(|x| !seen.insert(x.vertex)).count()
    }

    /// Same cycle started at step `k`.
    pub fn rotated(&self, k: usize) -> ClosedWalk {
        let mut steps = self.steps.clone();
        let n = steps.len();
        steps.rotate_left(k % n);
        ClosedWalk { steps }
    }

    pub fn reversed(&self) -> ClosedWalk {
        ClosedWalk { steps: self.steps.iter().rev().map(|s| s.reversed()).collect() }
    }

    /// Canonical rotation: starts at the step with the smallest edge id.
    pub fn normalized(&self) -> ClosedWalk {
        let k = (0..self.steps.len())
            .min_by_key(|&i| self.steps[i].edge)
            .unwrap_or(0);
        self.rotated(k)
    }

    pub fn departures(&self) -> Vec<HalfEdgeId> {
        self.steps.iter().map(|s| s.from).collect()
    }
}

impl WalkLike for ClosedWalk {
    fn steps(&self) -> &[Step] {
        &self.steps
    }

    fn visits(&self, g: &StarGraph) -> Vec<Visit> {
        let n = self.steps.len();
        (0..n)
            .map(|i| {
                let arrive = self.steps[i].to;
                let depart = self.steps[(i + 1) % n].from;
                Visit { vertex: g.vertex_of(arrive), arrive, depart, index: i }
            })
            .collect()
    }
}

/// An edge-simple walk with two ends (possibly at the same vertex). The ends
/// carry no visit; only interior passages do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenWalk {
    start: VertexId,
    steps: Vec<Step>,
}

impl OpenWalk {
    pub fn new(g: &StarGraph, start: VertexId, steps: Vec<Step>) -> Result<Self, WalkError> {
        check_steps(g, &steps)?;
        if let Some(first) = steps.first() {
            if g.vertex_of(first.from) != start {
                return Err(WalkError::WrongStart);
            }
        }
        Ok(OpenWalk { start, steps })
    }

    pub fn empty_at(start: VertexId) -> Self {
        OpenWalk { start, steps: Vec::new() }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, g: &StarGraph) -> VertexId {
        self.steps.last().map_or(self.start, |s| g.vertex_of(s.to))
    }

    pub fn reversed(&self, g: &StarGraph) -> OpenWalk {
        OpenWalk {
            start: self.end(g),
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// Walk made of steps `range` of this one.
    pub fn slice(&self, g: &StarGraph, range: std::ops::Range<usize>) -> OpenWalk {
        let start = if range.start == 0 {
            self.start
        } else {
            g.vertex_of(self.steps[range.start - 1].to)
        };
        OpenWalk { start, steps: self.steps[range].to_vec() }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concat(&self, g: &StarGraph, other: &OpenWalk) -> Result<OpenWalk, WalkError> {
        if self.end(g) != other.start {
            return Err(WalkError::Discontinuous(self.steps.len()));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        OpenWalk::new(g, self.start, steps)
    }
}

impl WalkLike for OpenWalk {
    fn steps(&self) -> &[Step] {
        &self.steps
    }

    fn visits(&self, g: &StarGraph) -> Vec<Visit> {
        self.steps
            .windows(2)
            .enumerate()
            .map(|(i, w)| Visit {
                vertex: g.vertex_of(w[0].to),
                arrive: w[0].to,
                depart: w[1].from,
                index: i,
            })
            .collect()
    }
}
