//! The web graph: every vertex of a star-graph blown up into a wheel whose
//! rim follows the vertex's rotation.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::chord::{transversal_count, Chord, ChordOwner};
use crate::graph::{GraphWalk, OrdinaryGraph};
use crate::star::{EdgeId, StarGraph, VertexId};
use crate::walk::{ClosedWalk, OpenWalk, Step, WalkError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WebNode {
    Center(VertexId),
    /// Circle vertex at the given rotation position.
    Circle(VertexId, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WebEdge {
    Through(EdgeId),
    Spoke { vertex: VertexId, pos: usize },
    /// Rim edge from position `pos` to `pos + 1`.
    Circle { vertex: VertexId, pos: usize },
}

/// Image of a web-graph edge under the projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeImage {
    Edge(EdgeId),
    Vertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Web {
    pub center: usize,
    pub circle: Vec<usize>,
    pub spokes: Vec<usize>,
    pub circle_edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebGraph {
    pub graph: OrdinaryGraph,
    pub webs: Vec<Web>,
    /// Through-edge of each original edge; its end `k` lies at `ends(e)[k]`.
    pub through: Vec<usize>,
    node_kind: Vec<WebNode>,
    edge_kind: Vec<WebEdge>,
}

pub fn build_web_graph(g: &StarGraph) -> WebGraph {
    let mut graph = OrdinaryGraph::new(0);
    let mut node_kind = Vec::new();
    let mut webs = Vec::new();
    for v in g.vertices() {
        let center = graph.add_vertex();
        node_kind.push(WebNode::Center(v));
        let circle: Vec<usize> = (0..g.degree(v))
            .map(|p| {
                node_kind.push(WebNode::Circle(v, p));
                graph.add_vertex()
            })
            .collect();
        webs.push(Web { center, circle, spokes: Vec::new(), circle_edges: Vec::new() });
    }
    let mut edge_kind = Vec::new();
    let mut through = Vec::new();
    for e in g.edges() {
        let [a, b] = g.ends(e);
        let ca = webs[g.vertex_of(a).0].circle[g.position(a)];
        let cb = webs[g.vertex_of(b).0].circle[g.position(b)];
        through.push(graph.add_edge(ca, cb));
        edge_kind.push(WebEdge::Through(e));
    }
    for v in g.vertices() {
        let web = &mut webs[v.0];
        let d = web.circle.len();
        for pos in 0..d {
            web.spokes.push(graph.add_edge(web.center, web.circle[pos]));
            edge_kind.push(WebEdge::Spoke { vertex: v, pos });
        }
        for pos in 0..d {
            let next = if d == 1 { 0 } else { (pos + 1) % d };
            web.circle_edges.push(graph.add_edge(web.circle[pos], web.circle[next]));
            edge_kind.push(WebEdge::Circle { vertex: v, pos });
        }
    }
    WebGraph { graph, webs, through, node_kind, edge_kind }
}

impl WebGraph {
    pub fn node_kind(&self, x: usize) -> WebNode {
        self.node_kind[x]
    }

    pub fn edge_kind(&self, e: usize) -> WebEdge {
        self.edge_kind[e]
    }

    /// The projection on vertices.
    pub fn vertex_map(&self, x: usize) -> VertexId {
        match self.node_kind[x] {
            WebNode::Center(v) | WebNode::Circle(v, _) => v,
        }
    }

    /// The projection on edges.
    pub fn edge_map(&self, e: usize) -> EdgeImage {
        match self.edge_kind[e] {
            WebEdge::Through(x) => EdgeImage::Edge(x),
            WebEdge::Spoke { vertex, .. } | WebEdge::Circle { vertex, .. } => EdgeImage::Vertex(vertex),
        }
    }

    pub fn is_through(&self, e: usize) -> bool {
        matches!(self.edge_kind[e], WebEdge::Through(_))
    }

    /// All web-graph vertices of the web of `v`.
    pub fn web_nodes(&self, v: VertexId) -> Vec<usize> {
        let w = &self.webs[v.0];
        let mut out = vec![w.center];
        out.extend_from_slice(&w.circle);
        out
    }

    /// Removes rim edges and suppresses circle vertices, giving back the
    /// original graph on the centers (vertex `v` becomes `v`).
    pub fn collapse(&self) -> OrdinaryGraph {
        let mut out = OrdinaryGraph::new(self.webs.len());
        for &t in &self.through {
            let (a, b) = self.graph.endpoints(t);
            out.add_edge(self.vertex_map(a).0, self.vertex_map(b).0);
        }
        out
    }
}

/// Projection of a web-graph walk into the star-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection {
    Closed(ClosedWalk),
    Open(OpenWalk),
}

impl Projection {
    pub fn closed(&self) -> Option<&ClosedWalk> {
        match self {
            Projection::Closed(c) => Some(c),
            Projection::Open(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectError {
    #[error("web-graph walk is not connected")]
    Disconnected,
    #[error("projection is not edge-simple: {0}")]
    Walk(#[from] WalkError),
}

fn through_steps(w: &WebGraph, g: &StarGraph, walk: &GraphWalk) -> Vec<Step> {
    walk.steps
        .iter()
        .filter_map(|&(e, k)| match w.edge_kind[e] {
            WebEdge::Through(x) => Some(Step::departing(g, g.ends(x)[k])),
            _ => None,
        })
        .collect()
}

/// Erase spokes and rim edges. The image is closed when the walk starts and
/// ends in the same web and uses at least one through-edge.
pub fn project_walk(w: &WebGraph, g: &StarGraph, walk: &GraphWalk) -> Result<Projection, ProjectError> {
    if GraphWalk::new(&w.graph, walk.start, walk.steps.clone()).is_none() {
        return Err(ProjectError::Disconnected);
    }
    let steps = through_steps(w, g, walk);
    let start = w.vertex_map(walk.start);
    let end = w.vertex_map(walk.end(&w.graph));
    if start == end && !steps.is_empty() {
        Ok(Projection::Closed(ClosedWalk::new(g, steps)?))
    } else {
        Ok(Projection::Open(OpenWalk::new(g, start, steps)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaVerdict {
    NoTransversal,
    ClosedSeparatedEnds,
    ClosedAlternatingEnds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaReport {
    pub verdict: LemmaVerdict,
    /// Number of transversal intersections the configuration predicts.
    pub predicted_crossings: usize,
    /// Direct count on the projections.
    pub actual_crossings: usize,
}

impl LemmaReport {
    pub fn agrees(&self) -> bool {
        self.predicted_crossings == self.actual_crossings
            && (self.verdict == LemmaVerdict::NoTransversal) == (self.actual_crossings == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("paths intersect internally at web-graph vertex {0}")]
    Intersect(usize),
    #[error("argument is not a path in the web graph")]
    NotAPath,
    #[error(transparent)]
    Project(#[from] ProjectError),
}

/// How a web-graph path meets one web: the arcs between entering and
/// leaving through-edges, and for a path closing in the web, its two exits.
struct WebTrace {
    /// (vertex, entry circle node, exit circle node, nodes of the arc)
    arcs: Vec<(VertexId, usize, usize, Vec<usize>)>,
    /// (vertex, first exit circle node, last entry circle node)
    closing: Option<(VertexId, usize, usize)>,
}

fn trace(w: &WebGraph, walk: &GraphWalk) -> WebTrace {
    let nodes = walk.vertices(&w.graph);
    let through_at: Vec<usize> = walk
        .steps
        .iter()
        .enumerate()
        .filter(|(_, &(e, _))| w.is_through(e))
        .map(|(i, _)| i)
        .collect();
    let mut arcs = Vec::new();
    for pair in through_at.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        let arc = nodes[i + 1..=j].to_vec();
        arcs.push((w.vertex_map(nodes[i + 1]), nodes[i + 1], nodes[j], arc));
    }
    let closing = match (through_at.first(), through_at.last()) {
        (Some(&f), Some(&l)) if w.vertex_map(walk.start) == w.vertex_map(walk.end(&w.graph)) => {
            Some((w.vertex_map(walk.start), nodes[f], nodes[l + 1]))
        }
        _ => None,
    };
    WebTrace { arcs, closing }
}

fn separated(w: &WebGraph, v: VertexId, removed: &[usize], a: usize, b: usize) -> bool {
    let allowed: BTreeSet<usize> = w.web_nodes(v).into_iter().filter(|x| !removed.contains(x)).collect();
    if !allowed.contains(&a) || !allowed.contains(&b) {
        return false;
    }
    let web = &w.webs[v.0];
    let local: BTreeSet<usize> = web.spokes.iter().chain(web.circle_edges.iter()).copied().collect();
    let mut seen = BTreeSet::from([a]);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            return false;
        }
        for &e in &local {
            let (p, q) = w.graph.endpoints(e);
            let y = if p == x {
                q
            } else if q == x {
                p
            } else {
                continue;
            };
            if allowed.contains(&y) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    true
}

fn position(w: &WebGraph, x: usize) -> usize {
    match w.node_kind(x) {
        WebNode::Circle(_, p) => p,
        WebNode::Center(_) => unreachable!("through-edges end on circle vertices"),
    }
}

/// Predicts the transversal intersections of the projections of two
/// internally disjoint web-graph paths from their configuration inside the
/// webs, and reports it next to the direct count.
///
/// The paths must be vertex-simple, edge-disjoint, and neither may pass
/// through a vertex of the other except at shared endpoints.
pub fn check_projection_lemma(
    w: &WebGraph,
    g: &StarGraph,
    p1: &GraphWalk,
    p2: &GraphWalk,
) -> Result<LemmaReport, LemmaError> {
    for p in [p1, p2] {
        if GraphWalk::new(&w.graph, p.start, p.steps.clone()).is_none() || !p.is_path(&w.graph) {
            return Err(LemmaError::NotAPath);
        }
    }
    let v1: BTreeSet<usize> = p1.vertices(&w.graph).into_iter().collect();
    let v2: BTreeSet<usize> = p2.vertices(&w.graph).into_iter().collect();
    for &x in &p1.interior(&w.graph) {
        if v2.contains(&x) {
            return Err(LemmaError::Intersect(x));
        }
    }
    for &x in &p2.interior(&w.graph) {
        if v1.contains(&x) {
            return Err(LemmaError::Intersect(x));
        }
    }
    let e1: BTreeSet<usize> = p1.steps.iter().map(|s| s.0).collect();
    if let Some(&(e, _)) = p2.steps.iter().find(|s| e1.contains(&s.0)) {
        let (a, _) = w.graph.endpoints(e);
        return Err(LemmaError::Intersect(a));
    }

    let proj1 = project_walk(w, g, p1)?;
    let proj2 = project_walk(w, g, p2)?;
    let actual = match (&proj1, &proj2) {
        (Projection::Closed(a), Projection::Closed(b)) => transversal_count(g, a, b),
        (Projection::Closed(a), Projection::Open(b)) => transversal_count(g, a, b),
        (Projection::Open(a), Projection::Closed(b)) => transversal_count(g, a, b),
        (Projection::Open(a), Projection::Open(b)) => transversal_count(g, a, b),
    }
    .expect("internally disjoint paths project to edge-disjoint walks");

    let t1 = trace(w, p1);
    let t2 = trace(w, p2);
    let mut separated_count = 0;
    for (mine, theirs) in [(&t1, &t2), (&t2, &t1)] {
        if let Some((v, s, t)) = mine.closing {
            separated_count += theirs
                .arcs
                .iter()
                .filter(|(u, _, _, arc)| *u == v && separated(w, v, arc, s, t))
                .count();
        }
    }
    let alternating = match (t1.closing, t2.closing) {
        (Some((v, s1, t1)), Some((u, s2, t2))) if u == v => {
            let o = ChordOwner { walk: 0, visit: 0 };
            let chord = |a: usize, b: usize| {
                let (a, b) = (position(w, a), position(w, b));
                Chord { i: a.min(b), j: a.max(b), owner: o }
            };
            chord(s1, t1).crosses(&chord(s2, t2))
        }
        _ => false,
    };
    let predicted = separated_count + alternating as usize;
    let verdict = if predicted == 0 {
        LemmaVerdict::NoTransversal
    } else if alternating {
        LemmaVerdict::ClosedAlternatingEnds
    } else {
        LemmaVerdict::ClosedSeparatedEnds
    };
    Ok(LemmaReport { verdict, predicted_crossings: predicted, actual_crossings: actual })
}
