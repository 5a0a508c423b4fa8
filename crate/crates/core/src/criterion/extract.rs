//! Constructing obstructions from a Kuratowski subdivision of the web graph.
//!
//! When some web holds two or more branch vertices (or the subdivision is a
//! K5), projecting cycles and branch-to-branch paths of the subdivision
//! already yields a pair crossing once. Otherwise the nine projected paths
//! form a K3,3 immersion, and a path through the remaining edges between
//! the two sides is rerouted until cycles built from it and the immersion
//! cross once. Without such a path the immersion itself is untangled.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::chord::crossings;
use crate::graph::GraphWalk;
use crate::planarity::{KuratowskiKind, KuratowskiSubdivision};
use crate::simplify::simplify_obstruction;
use crate::star::{is_even, EdgeId, StarGraph, VertexId};
use crate::walk::{ClosedWalk, OpenWalk, Step, WalkLike};
use crate::web::{project_walk, Projection, WebGraph, WebNode};

use super::embed::{star_is_planar, NonplanarFlag, StarPlanarity};
use super::immersion::{ends_of, untangle, walk_from, Immersion, Untangled};
use super::skeleton::{self, first_crossing_pair, Segment};
use super::{CriterionError, NonplanarityWitness, VassilievObstruction};

/// Shape of the part of the subdivision lying inside one web.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyClass {
    pub vertices: usize,
    pub edges: usize,
    /// Degrees inside the web, largest first.
    pub degrees: Vec<usize>,
    pub components: usize,
    pub contains_k23: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebOccupancy {
    pub web: VertexId,
    /// Indices into the subdivision's branch vertices.
    pub branch: Vec<usize>,
    pub class: OccupancyClass,
    /// `(rotation position, branch index, path index)` for every path
    /// leaving the web from one of its branch vertices, by position.
    pub boundary: Vec<(usize, usize, usize)>,
    /// Some path crosses the web through its center.
    pub separating_arc: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractionCase {
    /// K5 subdivision; the least number of branch vertices in an occupied web.
    K5 { occupancy: usize },
    /// K3,3 subdivision with a web holding `occupancy >= 2` branch vertices.
    K33 { occupancy: usize },
    /// K3,3 with its branch vertices in distinct webs, after `reductions`
    /// reroutings of the connecting path; `crossed` tells whether the path
    /// still crossed the immersion at the end.
    K33Residual { reductions: usize, crossed: bool },
    /// K3,3 without a connecting path; the immersion was untangled.
    K33Untangled,
}

impl fmt::Display for ExtractionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtractionCase::K5 { occupancy } => {
                write!(f, "K5.{}", ['a', 'b', 'c'][occupancy.clamp(1, 3) - 1])
            }
            ExtractionCase::K33 { occupancy } => {
                write!(f, "K3,3.{}", (b'a' + (occupancy.clamp(2, 6) - 2) as u8) as char)
            }
            ExtractionCase::K33Residual { reductions, crossed } => {
                write!(f, "K3,3.f.{}", if crossed { "1.2" } else { "2" })?;
                if reductions > 0 {
                    write!(f, " after {reductions} reroutings")?;
                }
                Ok(())
            }
            ExtractionCase::K33Untangled => write!(f, "K3,3 immersion"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub obstruction: VassilievObstruction,
    pub case: ExtractionCase,
    pub occupancy: Vec<WebOccupancy>,
}

fn oriented(w: &WebGraph, k: &KuratowskiSubdivision, idx: usize, from: usize) -> GraphWalk {
    let pattern = KuratowskiSubdivision::pattern(k.kind);
    if pattern[idx].0 == from {
        k.paths[idx].clone()
    } else {
        k.paths[idx].reversed(&w.graph)
    }
}

fn classify(n: usize, edges: &[(usize, usize)]) -> OccupancyClass {
    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut degrees: Vec<usize> = adj.iter().map(|s| s.len()).collect();
    degrees.sort_by(|a, b| b.cmp(a));
    let mut comp = vec![usize::MAX; n];
    let mut components = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = components;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = components;
                    stack.push(y);
                }
            }
        }
        components += 1;
    }
    let contains_k23 = (0..n).any(|a| (a + 1..n).any(|b| adj[a].intersection(&adj[b]).count() >= 3));
    OccupancyClass { vertices: n, edges: edges.len(), degrees, components, contains_k23 }
}

/// Occupancy of every web holding at least one branch vertex.
pub fn web_occupancy(g: &StarGraph, flag: &NonplanarFlag) -> Vec<WebOccupancy> {
    let w = &flag.web;
    let k = &flag.kuratowski;
    let pattern = KuratowskiSubdivision::pattern(k.kind);
    let mut out = Vec::new();
    for v in g.vertices() {
        let branch: Vec<usize> =
            (0..k.branch_vertices.len()).filter(|&i| w.vertex_map(k.branch_vertices[i]) == v).collect();
        if branch.is_empty() {
            continue;
        }
        let local = |i: usize| branch.iter().position(|&b| b == i).unwrap();
        let mut internal = Vec::new();
        let mut boundary = Vec::new();
        for (idx, &(a, b)) in pattern.iter().enumerate() {
            let inside = k.paths[idx].steps.iter().all(|&(e, _)| !w.is_through(e))
                && k.paths[idx].vertices(&w.graph).iter().all(|&x| w.vertex_map(x) == v);
            if inside {
                internal.push((local(a), local(b)));
                continue;
            }
            for end in [a, b] {
                if !branch.contains(&end) {
                    continue;
                }
                let walk = oriented(w, k, idx, end);
                let nodes = walk.vertices(&w.graph);
                if let Some(s) = walk.steps.iter().position(|&(e, _)| w.is_through(e)) {
                    if let WebNode::Circle(_, pos) = w.node_kind(nodes[s]) {
                        boundary.push((pos, end, idx));
                    }
                }
            }
        }
        boundary.sort();
        let center = w.webs[v.0].center;
        let separating_arc = k.paths.iter().any(|p| {
            let nodes = p.vertices(&w.graph);
            nodes[1..nodes.len() - 1].contains(&center)
        });
        out.push(WebOccupancy {
            web: v,
            class: classify(branch.len(), &internal),
            branch,
            boundary,
            separating_arc,
        });
    }
    out
}

fn route_walk(w: &WebGraph, k: &KuratowskiSubdivision, route: &skeleton::Route) -> GraphWalk {
    let pattern = KuratowskiSubdivision::pattern(k.kind);
    let mut steps = Vec::new();
    let mut start = None;
    for &(e, fwd) in route {
        let p = if fwd { k.paths[e].clone() } else { oriented(w, k, e, pattern[e].1) };
        start.get_or_insert(p.start);
        steps.extend(p.steps);
    }
    GraphWalk { start: start.expect("routes are nonempty"), steps }
}

/// Pair of projected subdivision routes crossing once: cycles of the
/// subdivision and paths between branch vertices sharing a web, those in
/// `first_web` tried before the others.
fn web_case(g: &StarGraph, flag: &NonplanarFlag, first_web: VertexId) -> Option<(ClosedWalk, ClosedWalk)> {
    let w = &flag.web;
    let k = &flag.kuratowski;
    let pattern = KuratowskiSubdivision::pattern(k.kind);
    let nb = k.branch_vertices.len();
    let web_of = |i: usize| w.vertex_map(k.branch_vertices[i]);
    let mut routes = skeleton::simple_cycles(nb, &pattern, usize::MAX).expect("no cap");
    let project = |routes: &[skeleton::Route]| -> Vec<ClosedWalk> {
        routes
            .iter()
            .filter_map(|r| match project_walk(w, g, &route_walk(w, k, r)) {
                Ok(Projection::Closed(c)) => Some(c),
                _ => None,
            })
            .collect()
    };
    for pass in 0..2 {
        for a in 0..nb {
            for b in a + 1..nb {
                let here = web_of(a) == web_of(b);
                if here && (web_of(a) == first_web) == (pass == 0) {
                    routes.extend(skeleton::simple_paths(nb, &pattern, a, b));
                }
            }
        }
        if let Some(pair) = first_crossing_pair(g, &project(&routes)) {
            return Some(pair);
        }
    }
    None
}

/// Shortest path avoiding the immersion's edges from a side-A branch vertex
/// to a side-B one; it meets no other branch vertex.
fn connecting_path(g: &StarGraph, imm: &Immersion) -> Option<OpenWalk> {
    let used: BTreeSet<EdgeId> = imm.paths.iter().flat_map(|p| p.edge_set()).collect();
    let mut parent: Vec<Option<Option<Step>>> = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &a in &imm.branch[..3] {
        parent[a.0] = Some(None);
        queue.push_back(a);
    }
    let target: BTreeSet<VertexId> = imm.branch[3..].iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        if target.contains(&x) {
            let mut steps = Vec::new();
            let mut at = x;
            while let Some(Some(s)) = parent[at.0] {
                steps.push(s);
                at = g.vertex_of(s.from);
            }
            steps.reverse();
            return Some(walk_from(g, steps));
        }
        for &h in g.rotation(x) {
            let e = g.edge_of(h);
            if used.contains(&e) || g.is_loop(e) {
                continue;
            }
            let y = g.vertex_of(g.twin(h));
            if parent[y.0].is_none() {
                parent[y.0] = Some(Some(Step::departing(g, h)));
                queue.push_back(y);
            }
        }
    }
    None
}

/// A crossing of the connecting path with an immersion path.
#[derive(Debug, Clone, Copy)]
struct Hit {
    gamma_visit: usize,
    /// Distance along the rotation from the path's arrival to the crossing
    /// chord, which orders crossings at one visit from the arrival side.
    offset: usize,
    path: usize,
    path_visit: usize,
}

fn hits(g: &StarGraph, imm: &Immersion, gamma: &OpenWalk) -> Vec<Hit> {
    let visits = gamma.visits(g);
    let mut out = Vec::new();
    for (path, p) in imm.paths.iter().enumerate() {
        for x in crossings(g, gamma, p).expect("connecting path avoids the immersion") {
            let v = visits[x.first.owner.visit];
            let n = g.degree(v.vertex);
            let a = g.position(v.arrive);
            let span = (g.position(v.depart) + n - a) % n;
            let offset = [x.second.i, x.second.j]
                .into_iter()
                .map(|p| (p + n - a) % n)
                .find(|&r| r < span)
                .expect("a crossing chord has an end on each side");
            out.push(Hit { gamma_visit: x.first.owner.visit, offset, path, path_visit: x.second.owner.visit });
        }
    }
    out.sort_by_key(|h| (h.gamma_visit, h.offset));
    out
}

fn concat(a: &[Step], b: &[Step]) -> Vec<Step> {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out
}

/// The case where every web holds at most one branch vertex of a K3,3.
/// Returns `None` when no connecting path exists.
fn residual_case(
    g: &StarGraph,
    imm: &Immersion,
) -> Result<Option<((ClosedWalk, ClosedWalk), ExtractionCase)>, CriterionError> {
    let Some(mut gamma) = connecting_path(g, imm) else {
        return Ok(None);
    };
    let mut imm = imm.clone();
    let s = imm.branch.iter().position(|&b| b == gamma.start()).expect("starts at a branch vertex");
    let t = imm.branch.iter().position(|&b| b == gamma.end(g)).expect("ends at a branch vertex");
    let mut reductions = 0;
    loop {
        let found = hits(g, &imm, &gamma);
        let Some(&first) = found.first() else {
            let mut segs = imm.segments(&[]);
            segs.push(Segment { from: s, to: t, steps: gamma.steps().to_vec() });
            let pair = skeleton::search(g, 6, &segs)
                .ok_or_else(|| CriterionError::Internal("no crossing pair with an uncrossed connecting path".into()))?;
            return Ok(Some((pair, ExtractionCase::K33Residual { reductions, crossed: false })));
        };
        if ends_of(first.path).0 != s {
            let mut segs = imm.segments(&[(first.path, first.path_visit, 6)]);
            segs.push(Segment { from: s, to: 6, steps: gamma.steps()[..=first.gamma_visit].to_vec() });
            let pair = skeleton::search(g, 7, &segs)
                .ok_or_else(|| CriterionError::Internal("no crossing pair at the first crossing".into()))?;
            return Ok(Some((pair, ExtractionCase::K33Residual { reductions, crossed: true })));
        }
        // The first crossing lies on a path from the start: reroute that
        // path along the connecting path, and the connecting path along the
        // path's initial part up to its last crossing.
        let last = found
            .iter()
            .rfind(|h| h.path == first.path && h.path_visit <= first.path_visit)
            .copied()
            .expect("the first crossing qualifies");
        let x = imm.paths[first.path].steps().to_vec();
        let gs = gamma.steps().to_vec();
        let mut next = imm.clone();
        next.paths[first.path] = walk_from(g, concat(&gs[..=first.gamma_visit], &x[first.path_visit + 1..]));
        let next_gamma = walk_from(g, concat(&x[..=last.path_visit], &gs[last.gamma_visit + 1..]));
        next.check(g).map_err(CriterionError::Internal)?;
        if hits(g, &next, &next_gamma).len() >= found.len() {
            return Err(CriterionError::Internal("rerouting did not reduce the crossings".into()));
        }
        imm = next;
        gamma = next_gamma;
        reductions += 1;
    }
}

fn immersion_of(g: &StarGraph, flag: &NonplanarFlag) -> Result<Immersion, CriterionError> {
    let w = &flag.web;
    let k = &flag.kuratowski;
    let branch: Vec<VertexId> = k.branch_vertices.iter().map(|&x| w.vertex_map(x)).collect();
    let mut paths = Vec::new();
    for p in &k.paths {
        match project_walk(w, g, p) {
            Ok(Projection::Open(o)) if !o.is_empty() => paths.push(o),
            _ => return Err(CriterionError::Internal("a branch path does not project to an open walk".into())),
        }
    }
    Ok(Immersion { branch, paths })
}

enum Found {
    Pair((ClosedWalk, ClosedWalk), ExtractionCase),
    Embedded(Immersion),
}

fn search_all(g: &StarGraph, flag: &NonplanarFlag, occupancy: &[WebOccupancy], untangle_allowed: bool) -> Result<Found, CriterionError> {
    let kind = flag.kuratowski.kind;
    let smallest = occupancy
        .iter()
        .filter(|o| kind == KuratowskiKind::K5 || o.branch.len() >= 2)
        .min_by_key(|o| (o.branch.len(), o.web));
    if let Some(o) = smallest {
        let case = match kind {
            KuratowskiKind::K5 => ExtractionCase::K5 { occupancy: o.branch.len() },
            KuratowskiKind::K33 => ExtractionCase::K33 { occupancy: o.branch.len() },
        };
        let pair = web_case(g, flag, o.web)
            .ok_or_else(|| CriterionError::Internal(format!("case {case}: no projected pair crosses once")))?;
        return Ok(Found::Pair(pair, case));
    }
    let imm = immersion_of(g, flag)?;
    imm.check(g).map_err(CriterionError::Internal)?;
    if let Some((pair, case)) = residual_case(g, &imm)? {
        return Ok(Found::Pair(pair, case));
    }
    if !untangle_allowed {
        return Err(CriterionError::Internal("no connecting path between the sides".into()));
    }
    match untangle(g, imm)? {
        Untangled::Crossing(c1, c2) => Ok(Found::Pair((c1, c2), ExtractionCase::K33Untangled)),
        Untangled::Embedded(imm) => Ok(Found::Embedded(imm)),
    }
}

fn finish(g: &StarGraph, (c1, c2): (ClosedWalk, ClosedWalk)) -> Result<VassilievObstruction, CriterionError> {
    let (a, b) = simplify_obstruction(g, &c1, &c2).map_err(|e| CriterionError::Internal(e.to_string()))?;
    VassilievObstruction::new(g, a, b).map_err(|e| CriterionError::Internal(e.to_string()))
}

pub(crate) fn extract_with_flag(g: &StarGraph, flag: &NonplanarFlag) -> Result<Extraction, CriterionError> {
    let occupancy = web_occupancy(g, flag);
    match search_all(g, flag, &occupancy, false)? {
        Found::Pair(pair, case) => Ok(Extraction { obstruction: finish(g, pair)?, case, occupancy }),
        Found::Embedded(_) => unreachable!("untangling is not requested"),
    }
}

pub(crate) fn classify_with_flag(g: &StarGraph, flag: &NonplanarFlag) -> Result<NonplanarityWitness, CriterionError> {
    let occupancy = web_occupancy(g, flag);
    match search_all(g, flag, &occupancy, true)? {
        Found::Pair(pair, _) => Ok(NonplanarityWitness::Vassiliev(finish(g, pair)?)),
        Found::Embedded(imm) => Ok(NonplanarityWitness::EmbeddedK33(imm.to_witness())),
    }
}

/// Obstruction for an even nonplanar star-graph, with the case it came from.
pub fn extract_obstruction_traced(g: &StarGraph) -> Result<Extraction, CriterionError> {
    if !is_even(g) {
        return Err(CriterionError::NotEven);
    }
    match star_is_planar(g) {
        StarPlanarity::Planar(_) => Err(CriterionError::Planar),
        StarPlanarity::NonplanarFlag(flag) => extract_with_flag(g, &flag),
    }
}

pub fn extract_obstruction(g: &StarGraph) -> Result<VassilievObstruction, CriterionError> {
    extract_obstruction_traced(g).map(|x| x.obstruction)
}

/// Witness of nonplanarity for any star-graph: an obstruction whenever the
/// search meets one, an embedded K3,3 otherwise.
pub fn classify_nonplanar(g: &StarGraph) -> Result<NonplanarityWitness, CriterionError> {
    match star_is_planar(g) {
        StarPlanarity::Planar(_) => Err(CriterionError::Planar),
        StarPlanarity::NonplanarFlag(flag) => classify_with_flag(g, &flag),
    }
}
