//! Kuratowski subdivisions: extraction by edge deletion and an independent
//! validator.

use std::collections::BTreeSet;

use thiserror::Error;

use super::dmp::{simple_is_planar, Simple};
use super::normalize;
use crate::graph::{GraphWalk, OrdinaryGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// For K5, `paths` lists the pairs `(i, j)`, `i < j`, in lexicographic order,
/// each running from `branch_vertices[i]` to `branch_vertices[j]`. For K3,3
/// the first three branch vertices form one side and `paths[3 * i + j]` runs
/// from `branch_vertices[i]` to `branch_vertices[3 + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiSubdivision {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<GraphWalk>,
}

impl KuratowskiSubdivision {
    /// Index pairs into `branch_vertices` joined by each path.
    pub fn pattern(kind: KuratowskiKind) -> Vec<(usize, usize)> {
        match kind {
            KuratowskiKind::K5 => (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect(),
            KuratowskiKind::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        }
    }

    pub fn edges(&self) -> BTreeSet<usize> {
        self.paths.iter().flat_map(|p| p.steps.iter().map(|s| s.0)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("expected {expected} branch vertices, found {found}")]
    BranchCount { expected: usize, found: usize },
    #[error("branch vertices repeat or fall outside the graph")]
    BadBranch,
    #[error("expected {expected} paths, found {found}")]
    PathCount { expected: usize, found: usize },
    #[error("path {0} is not a walk in the graph")]
    NotAWalk(usize),
    #[error("path {0} joins the wrong branch vertices")]
    WrongEnds(usize),
    #[error("path {0} is empty or repeats a vertex")]
    NotSimple(usize),
    #[error("path {0} passes through a branch vertex")]
    ThroughBranch(usize),
    #[error("paths share the internal vertex {0}")]
    SharedVertex(usize),
    #[error("paths share edge {0}")]
    SharedEdge(usize),
}

pub fn validate_subdivision(g: &OrdinaryGraph, k: &KuratowskiSubdivision) -> Result<(), SubdivisionError> {
    let pattern = KuratowskiSubdivision::pattern(k.kind);
    let nb = if k.kind == KuratowskiKind::K5 { 5 } else { 6 };
    if k.branch_vertices.len() != nb {
        return Err(SubdivisionError::BranchCount { expected: nb, found: k.branch_vertices.len() });
    }
    let branch: BTreeSet<usize> = k.branch_vertices.iter().copied().collect();
    if branch.len() != nb || branch.iter().any(|&v| v >= g.vertex_count()) {
        return Err(SubdivisionError::BadBranch);
    }
    if k.paths.len() != pattern.len() {
        return Err(SubdivisionError::PathCount { expected: pattern.len(), found: k.paths.len() });
    }
    let mut interior_seen = BTreeSet::new();
    let mut edge_seen = BTreeSet::new();
    for (i, (p, &(a, b))) in k.paths.iter().zip(&pattern).enumerate() {
        if GraphWalk::new(g, p.start, p.steps.clone()).is_none() {
            return Err(SubdivisionError::NotAWalk(i));
        }
        let vs = p.vertices(g);
        if vs[0] != k.branch_vertices[a] || vs[vs.len() - 1] != k.branch_vertices[b] {
            return Err(SubdivisionError::WrongEnds(i));
        }
        let distinct: BTreeSet<usize> = vs.iter().copied().collect();
        if p.steps.is_empty() || distinct.len() != vs.len() {
            return Err(SubdivisionError::NotSimple(i));
        }
        for &x in &vs[1..vs.len() - 1] {
            if branch.contains(&x) {
                return Err(SubdivisionError::ThroughBranch(i));
            }
            if !interior_seen.insert(x) {
                return Err(SubdivisionError::SharedVertex(x));
            }
        }
        for &(e, _) in &p.steps {
            if !edge_seen.insert(e) {
                return Err(SubdivisionError::SharedEdge(e));
            }
        }
    }
    Ok(())
}

fn subset_is_planar(simple: &Simple, keep: &[bool]) -> bool {
    let edges: Vec<(usize, usize)> = simple
        .edges
        .iter()
        .zip(keep)
        .filter(|(_, &k)| k)
        .map(|(&e, _)| e)
        .collect();
    simple_is_planar(&Simple::new(simple.n, edges))
}

/// Minimal nonplanar edge subset of the simple graph, found by deleting
/// chunks of edges while nonplanarity survives.
fn minimal_nonplanar(simple: &Simple) -> Vec<bool> {
    let m = simple.edges.len();
    let mut keep = vec![true; m];
    let mut chunk = (m / 2).max(1);
    loop {
        let mut start = 0;
        while start < m {
            let range: Vec<usize> = (start..(start + chunk).min(m)).filter(|&e| keep[e]).collect();
            start += chunk;
            if range.is_empty() {
                continue;
            }
            for &e in &range {
                keep[e] = false;
            }
            if subset_is_planar(simple, &keep) {
                for &e in &range {
                    keep[e] = true;
                }
            }
        }
        if chunk == 1 {
            break;
        }
        chunk /= 2;
    }
    keep
}

/// Branch vertices and the chains between them, in simple-edge terms.
/// Each chain is `(from, to, vertices, simple edges)`.
type Chain = (usize, usize, Vec<usize>, Vec<usize>);

fn chains(simple: &Simple, keep: &[bool]) -> (Vec<usize>, Vec<Chain>) {
    let mut adj = vec![Vec::new(); simple.n];
    for (e, &(a, b)) in simple.edges.iter().enumerate() {
        if keep[e] {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
    }
    let branch: Vec<usize> = (0..simple.n).filter(|&v| adj[v].len() >= 3).collect();
    let mut used = vec![false; simple.edges.len()];
    let mut out = Vec::new();
    for &b in &branch {
        for &(first, e0) in &adj[b] {
            if used[e0] {
                continue;
            }
            let mut vs = vec![b, first];
            let mut es = vec![e0];
            used[e0] = true;
            let mut at = first;
            let mut via = e0;
            while adj[at].len() == 2 {
                let &(next, e) = adj[at].iter().find(|&&(_, e)| e != via).unwrap();
                used[e] = true;
                vs.push(next);
                es.push(e);
                via = e;
                at = next;
            }
            out.push((b, at, vs, es));
        }
    }
    (branch, out)
}

pub(crate) fn extract(g: &OrdinaryGraph) -> Option<KuratowskiSubdivision> {
    let norm = normalize(g);
    let simple = &norm.simple;
    if simple_is_planar(simple) {
        return None;
    }
    let keep = minimal_nonplanar(simple);
    let (branch, chains) = chains(simple, &keep);
    let degree = |v: usize| chains.iter().filter(|c| c.0 == v).count() + chains.iter().filter(|c| c.1 == v).count();
    let kind = if branch.len() == 5 && branch.iter().all(|&v| degree(v) == 4) && chains.len() == 10 {
        KuratowskiKind::K5
    } else if branch.len() == 6 && branch.iter().all(|&v| degree(v) == 3) && chains.len() == 9 {
        KuratowskiKind::K33
    } else {
        panic!("edge-minimal nonplanar graph is not a Kuratowski subdivision");
    };
    let order: Vec<usize> = match kind {
        KuratowskiKind::K5 => branch.clone(),
        KuratowskiKind::K33 => {
            let first = branch[0];
            let mut side_a: Vec<usize> = vec![first];
            for &v in &branch {
                let adjacent_to_first = chains.iter().any(|c| (c.0 == first && c.1 == v) || (c.1 == first && c.0 == v));
                if v != first && !adjacent_to_first {
                    side_a.push(v);
                }
            }
            side_a.sort();
            let side_b: Vec<usize> = branch.iter().copied().filter(|v| !side_a.contains(v)).collect();
            side_a.into_iter().chain(side_b).collect()
        }
    };
    let mut paths = Vec::new();
    for (i, j) in KuratowskiSubdivision::pattern(kind) {
        let (a, b) = (order[i], order[j]);
        let c = chains
            .iter()
            .find(|c| (c.0 == a && c.1 == b) || (c.0 == b && c.1 == a))
            .expect("branch pattern verified above");
        let (mut vs, mut es) = (c.2.clone(), c.3.clone());
        if c.0 != a {
            vs.reverse();
            es.reverse();
        }
        let steps = es
            .iter()
            .zip(vs.windows(2))
            .map(|(&s, w)| {
                let e = norm.classes[s][0];
                (e, if g.end_vertex(e, 0) == w[0] { 0 } else { 1 })
            })
            .collect();
        paths.push(GraphWalk { start: a, steps });
    }
    Some(KuratowskiSubdivision { kind, branch_vertices: order, paths })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validator_rejects_tampering() {
        let mut g = OrdinaryGraph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                g.add_edge(a, b);
            }
        }
        let k = extract(&g).unwrap();
        assert_eq!(k.branch_vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(validate_subdivision(&g, &k), Ok(()));
        let mut bad = k.clone();
        bad.branch_vertices.swap(0, 3);
        assert!(validate_subdivision(&g, &bad).is_err());
        let mut bad = k.clone();
        bad.paths.pop();
        assert_eq!(validate_subdivision(&g, &bad), Err(SubdivisionError::PathCount { expected: 9, found: 8 }));
        let mut bad = k.clone();
        bad.paths[1] = bad.paths[0].clone();
        assert!(validate_subdivision(&g, &bad).is_err());
        let mut bad = k;
        bad.kind = KuratowskiKind::K5;
        assert!(validate_subdivision(&g, &bad).is_err());
    }

    #[test]
    fn subdivided_k33_is_traced_through_chains() {
        // K3,3 with the edge 0-3 replaced by 0-6-7-3.
        let mut g = OrdinaryGraph::new(8);
        for a in 0..3 {
            for b in 3..6 {
                if (a, b) != (0, 3) {
                    g.add_edge(a, b);
                }
            }
        }
        g.add_edge(0, 6);
        g.add_edge(7, 6);
        g.add_edge(7, 3);
        let k = extract(&g).unwrap();
        assert_eq!(k.kind, KuratowskiKind::K33);
        assert_eq!(k.paths[0].vertices(&g), vec![0, 6, 7, 3]);
        assert_eq!(validate_subdivision(&g, &k), Ok(()));
    }
}
