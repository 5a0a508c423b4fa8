//! Star-graphs: graphs carrying an unoriented cyclic order of half-edges at
//! every vertex.
//!
//! A [`StarGraph`] is always valid once constructed. Untrusted input goes
//! through [`RawStarGraph`] and [`validate`], which lists every violated
//! invariant instead of stopping at the first one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::OrdinaryGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdgeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Star-graph description as read from a document; names are not yet
/// resolved and nothing has been checked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawStarGraph {
    pub vertices: Vec<(String, Vec<String>)>,
    pub edges: Vec<(String, String)>,
}

impl RawStarGraph {
    pub fn vertex(mut self, name: &str, rotation: &[&str]) -> Self {
        self.vertices
            .push((name.to_string(), rotation.iter().map(|s| s.to_string()).collect()));
        self
    }

    pub fn edge(mut self, a: &str, b: &str) -> Self {
        self.edges.push((a.to_string(), b.to_string()));
        self
    }

    pub fn build(self) -> Result<StarGraph, ValidationReport> {
        StarGraph::from_raw(&self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    DuplicateVertex(String),
    EmptyRotation(String),
    RepeatedInRotation { vertex: String, half_edge: String },
    InTwoRotations { half_edge: String, first: String, second: String },
    UnknownHalfEdge { edge: usize, half_edge: String },
    DegenerateEdge { edge: usize, half_edge: String },
    InTwoEdges { half_edge: String, first: usize, second: usize },
    Dangling(String),
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::DuplicateVertex(v) => write!(f, "vertex `{v}` is declared twice"),
            Problem::EmptyRotation(v) => write!(f, "vertex `{v}` has an empty rotation"),
            Problem::RepeatedInRotation { vertex, half_edge } => {
                write!(f, "half-edge `{half_edge}` repeats in the rotation of `{vertex}`")
            }
            Problem::InTwoRotations { half_edge, first, second } => write!(
                f,
                "half-edge `{half_edge}` occurs at both `{first}` and `{second}`"
            ),
            Problem::UnknownHalfEdge { edge, half_edge } => {
                write!(f, "edges[{edge}] references unknown half-edge `{half_edge}`")
            }
            Problem::DegenerateEdge { edge, half_edge } => write!(
                f,
                "edges[{edge}] pairs half-edge `{half_edge}` with itself"
            ),
            Problem::InTwoEdges { half_edge, first, second } => write!(
                f,
                "half-edge `{half_edge}` belongs to edges[{first}] and edges[{second}]"
            ),
            Problem::Dangling(h) => write!(f, "half-edge `{h}` is not paired by any edge"),
        }
    }
}

/// Outcome of [`validate`]; an empty report means the input is a star-graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub problems: Vec<Problem>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.problems.is_empty() {
            return write!(f, "valid");
        }
        for (i, p) in self.problems.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

pub fn validate(raw: &RawStarGraph) -> ValidationReport {
    let mut problems = Vec::new();
    let mut seen_vertices = BTreeSet::new();
    let mut owner: BTreeMap<&str, &str> = BTreeMap::new();
    for (name, rotation) in &raw.vertices {
        if !seen_vertices.insert(name.as_str()) {
            problems.push(Problem::DuplicateVertex(name.clone()));
        }
        if rotation.is_empty() {
            problems.push(Problem::EmptyRotation(name.clone()));
        }
        let mut local = BTreeSet::new();
        for h in rotation {
            if !local.insert(h.as_str()) {
                problems.push(Problem::RepeatedInRotation {
                    vertex: name.clone(),
                    half_edge: h.clone(),
                });
                continue;
            }
            if let Some(prev) = owner.insert(h.as_str(), name.as_str()) {
                problems.push(Problem::InTwoRotations {
                    half_edge: h.clone(),
                    first: prev.to_string(),
                    second: name.clone(),
                });
            }
        }
    }
    let mut paired: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, (a, b)) in raw.edges.iter().enumerate() {
        if a == b {
            problems.push(Problem::DegenerateEdge { edge: i, half_edge: a.clone() });
        }
        let ends: &[&String] = if a == b { &[a] } else { &[a, b] };
        for h in ends {
            if !owner.contains_key(h.as_str()) {
                problems.push(Problem::UnknownHalfEdge { edge: i, half_edge: (*h).clone() });
            }
            if let Some(prev) = paired.insert(h.as_str(), i) {
                problems.push(Problem::InTwoEdges {
                    half_edge: (*h).clone(),
                    first: prev,
                    second: i,
                });
            }
        }
    }
    for (_, rotation) in &raw.vertices {
        for h in rotation {
            if !paired.contains_key(h.as_str()) {
                problems.push(Problem::Dangling(h.clone()));
            }
        }
    }
    ValidationReport { problems }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct VertexData {
    name: String,
    rotation: Vec<HalfEdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct HalfEdgeData {
    name: String,
    vertex: VertexId,
    position: usize,
    edge: EdgeId,
    side: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarGraph {
    vertices: Vec<VertexData>,
    half_edges: Vec<HalfEdgeData>,
    edges: Vec<[HalfEdgeId; 2]>,
}

impl StarGraph {
    pub fn from_raw(raw: &RawStarGraph) -> Result<Self, ValidationReport> {
        let report = validate(raw);
        if !report.is_valid() {
            return Err(report);
        }
        let mut by_name = BTreeMap::new();
        let mut vertices = Vec::with_capacity(raw.vertices.len());
        let mut half_edges = Vec::new();
        for (vi, (name, rotation)) in raw.vertices.iter().enumerate() {
            let mut ids = Vec::with_capacity(rotation.len());
            for (pos, h) in rotation.iter().enumerate() {
                let id = HalfEdgeId(half_edges.len());
                by_name.insert(h.as_str(), id);
                half_edges.push(HalfEdgeData {
                    name: h.clone(),
                    vertex: VertexId(vi),
                    position: pos,
                    edge: EdgeId(usize::MAX),
                    side: 0,
                });
                ids.push(id);
            }
            vertices.push(VertexData { name: name.clone(), rotation: ids });
        }
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (ei, (a, b)) in raw.edges.iter().enumerate() {
            let ha = by_name[a.as_str()];
            let hb = by_name[b.as_str()];
            half_edges[ha.0].edge = EdgeId(ei);
            half_edges[ha.0].side = 0;
            half_edges[hb.0].edge = EdgeId(ei);
            half_edges[hb.0].side = 1;
            edges.push([ha, hb]);
        }
        Ok(StarGraph { vertices, half_edges, edges })
    }

    pub fn to_raw(&self) -> RawStarGraph {
        RawStarGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| {
                    let rot = v.rotation.iter().map(|h| self.half_edges[h.0].name.clone()).collect();
                    (v.name.clone(), rot)
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|[a, b]| (self.half_edges[a.0].name.clone(), self.half_edges[b.0].name.clone()))
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0].name
    }

    pub fn half_edge_name(&self, h: HalfEdgeId) -> &str {
        &self.half_edges[h.0].name
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name).map(VertexId)
    }

    pub fn half_edge_by_name(&self, name: &str) -> Option<HalfEdgeId> {
        self.half_edges.iter().position(|h| h.name == name).map(HalfEdgeId)
    }

    /// The stored representative of the unoriented cyclic order at `v`.
    pub fn rotation(&self, v: VertexId) -> &[HalfEdgeId] {
        &self.vertices[v.0].rotation
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v.0].rotation.len()
    }

    pub fn vertex_of(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[h.0].vertex
    }

    /// Index of `h` inside the stored rotation of its vertex.
    pub fn position(&self, h: HalfEdgeId) -> usize {
        self.half_edges[h.0].position
    }

    pub fn edge_of(&self, h: HalfEdgeId) -> EdgeId {
        self.half_edges[h.0].edge
    }

    /// 0 when `h` is the first listed end of its edge, 1 otherwise.
    pub fn side_of(&self, h: HalfEdgeId) -> usize {
        self.half_edges[h.0].side
    }

    pub fn ends(&self, e: EdgeId) -> [HalfEdgeId; 2] {
        self.edges[e.0]
    }

    pub fn twin(&self, h: HalfEdgeId) -> HalfEdgeId {
        let [a, b] = self.edges[self.edge_of(h).0];
        if a == h {
            b
        } else {
            a
        }
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let [a, b] = self.edges[e.0];
        self.vertex_of(a) == self.vertex_of(b)
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.edges[e.0];
        (self.vertex_of(a), self.vertex_of(b))
    }

    /// The underlying ordinary multigraph; vertex and edge indices coincide
    /// with [`VertexId`] and [`EdgeId`], edge end `k` is `ends(e)[k]`.
    pub fn ordinary(&self) -> OrdinaryGraph {
        let mut g = OrdinaryGraph::new(self.vertices.len());
        for e in self.edges() {
            let (u, v) = self.endpoints(e);
            g.add_edge(u.0, v.0);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.ordinary().component_count() <= 1
    }

    /// Same graph with the stored representative of every rotation reversed
    /// where `flip[v]` is set. Structurally the result equals `self`.
    pub fn with_flips(&self, flip: &[bool]) -> StarGraph {
        let mut raw = self.to_raw();
        for (v, (_, rot)) in raw.vertices.iter_mut().enumerate() {
            if flip.get(v).copied().unwrap_or(false) {
                rot.reverse();
            }
        }
        StarGraph::from_raw(&raw).expect("reordering a rotation keeps validity")
    }

    /// Same graph with each rotation's stored representative cyclically
    /// shifted left by `shift[v]`.
    pub fn with_shifts(&self, shift: &[usize]) -> StarGraph {
        let mut raw = self.to_raw();
        for (v, (_, rot)) in raw.vertices.iter_mut().enumerate() {
            let n = rot.len();
            if n > 0 {
                rot.rotate_left(shift.get(v).copied().unwrap_or(0) % n);
            }
        }
        StarGraph::from_raw(&raw).expect("reordering a rotation keeps validity")
    }

    /// Equality up to cyclic shift and reversal of each rotation and up to
    /// the order in which vertices and edges are listed.
    pub fn structurally_equal(&self, other: &StarGraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    fn canonical_form(&self) -> (BTreeMap<String, Vec<String>>, BTreeSet<(String, String)>) {
        let raw = self.to_raw();
        let vertices = raw
            .vertices
            .into_iter()
            .map(|(name, rot)| (name, canonical_rotation(&rot)))
            .collect();
        let edges = raw
            .edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        (vertices, edges)
    }
}

/// Lexicographically least sequence among all cyclic shifts of `rotation`
/// and of its reversal.
pub fn canonical_rotation<T: Ord + Clone>(rotation: &[T]) -> Vec<T> {
    let n = rotation.len();
    let mut best: Option<Vec<T>> = None;
    let mut reversed = rotation.to_vec();
    reversed.reverse();
    for seq in [rotation.to_vec(), reversed] {
        for s in 0..n.max(1) {
            let mut cand = seq.clone();
            if n > 0 {
                cand.rotate_left(s);
            }
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Cyclic comparison: `b` equals `a` up to rotation, or up to rotation of
/// the reversal when `allow_reversal` is set.
pub fn cyclically_equal<T: PartialEq>(a: &[T], b: &[T], allow_reversal: bool) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    if n == 0 {
        return true;
    }
    let forward = (0..n).any(|s| (0..n).all(|i| a[(s + i) % n] == b[i]));
    if forward || !allow_reversal {
        return forward;
    }
    (0..n).any(|s| (0..n).all(|i| a[(s + n - i) % n] == b[i]))
}

pub fn is_even(g: &StarGraph) -> bool {
    g.vertices().all(|v| g.degree(v).is_multiple_of(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_loop_circle_is_valid() {
        let raw = RawStarGraph::default().vertex("v", &["a1", "a2"]).edge("a1", "a2");
        assert!(validate(&raw).is_valid());
    }

    #[test]
    fn duplicated_edge_is_rejected() {
        let raw = RawStarGraph::default()
            .vertex("v", &["a1", "a2"])
            .edge("a1", "a2")
            .edge("a2", "a1");
        let report = validate(&raw);
        assert!(report
            .problems
            .iter()
            .any(|p| matches!(p, Problem::InTwoEdges { .. })));
    }

    #[test]
    fn self_paired_half_edge_is_rejected() {
        let raw = RawStarGraph::default().vertex("v", &["a1"]).edge("a1", "a1");
        let report = validate(&raw);
        assert!(report
            .problems
            .iter()
            .any(|p| matches!(p, Problem::DegenerateEdge { .. })));
    }

    #[test]
    fn dangling_and_unknown_half_edges_are_reported() {
        let raw = RawStarGraph::default()
            .vertex("v", &["a1", "a2", "a3"])
            .edge("a1", "zz");
        let report = validate(&raw);
        assert!(report.problems.contains(&Problem::Dangling("a2".into())));
        assert!(report.problems.contains(&Problem::Dangling("a3".into())));
        assert!(report
            .problems
            .iter()
            .any(|p| matches!(p, Problem::UnknownHalfEdge { .. })));
    }

    #[test]
    fn empty_rotation_and_shared_half_edge() {
        let raw = RawStarGraph::default()
            .vertex("u", &[])
            .vertex("v", &["h", "k"])
            .vertex("w", &["h"])
            .edge("h", "k");
        let report = validate(&raw);
        assert!(report.problems.contains(&Problem::EmptyRotation("u".into())));
        assert!(report
            .problems
            .iter()
            .any(|p| matches!(p, Problem::InTwoRotations { .. })));
    }

    #[test]
    fn evenness() {
        let fig8 = RawStarGraph::default()
            .vertex("v", &["1", "2", "3", "4"])
            .edge("1", "3")
            .edge("2", "4")
            .build()
            .unwrap();
        assert!(is_even(&fig8));
        let empty = RawStarGraph::default().build().unwrap();
        assert!(is_even(&empty));
        let path = RawStarGraph::default()
            .vertex("u", &["a"])
            .vertex("v", &["b"])
            .edge("a", "b")
            .build()
            .unwrap();
        assert!(!is_even(&path));
    }

    #[test]
    fn structural_equality_ignores_shift_and_reversal() {
        let a = RawStarGraph::default()
            .vertex("v", &["1", "2", "3", "4"])
            .edge("1", "3")
            .edge("2", "4")
            .build()
            .unwrap();
        let b = RawStarGraph::default()
            .vertex("v", &["3", "2", "1", "4"])
            .edge("4", "2")
            .edge("3", "1")
            .build()
            .unwrap();
        assert!(a.structurally_equal(&b));
        let c = RawStarGraph::default()
            .vertex("v", &["1", "3", "2", "4"])
            .edge("1", "3")
            .edge("2", "4")
            .build()
            .unwrap();
        assert!(!a.structurally_equal(&c));
    }

    #[test]
    fn cyclic_equality() {
        assert!(cyclically_equal(&[1, 2, 3, 4], &[3, 4, 1, 2], false));
        assert!(!cyclically_equal(&[1, 2, 3, 4], &[4, 3, 2, 1], false));
        assert!(cyclically_equal(&[1, 2, 3, 4], &[2, 1, 4, 3], true));
        assert!(!cyclically_equal(&[1, 2, 3, 4], &[1, 3, 2, 4], true));
    }
}
