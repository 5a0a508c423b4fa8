//! Certified planarity of ordinary multigraphs.
//!
//! Loops and all but the first edge of each parallel class are dropped
//! before deciding; certificates are stated against the original graph.

mod dmp;
pub mod kuratowski;
pub mod oracle;
pub mod rotation;

use thiserror::Error;

use crate::graph::OrdinaryGraph;
use dmp::Simple;
pub use kuratowski::{validate_subdivision, KuratowskiKind, KuratowskiSubdivision, SubdivisionError};
pub use rotation::{faces, verify_embedding, EdgeEnd, EmbeddingError, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityVerdict {
    Planar(RotationSystem),
    Nonplanar(KuratowskiSubdivision),
}

impl PlanarityVerdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityVerdict::Planar(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is planar")]
    Planar,
}

/// The simple graph underlying a multigraph.
pub(crate) struct Normalized {
    pub simple: Simple,
    /// Original edges of each simple edge; the first is the representative.
    pub classes: Vec<Vec<usize>>,
    pub loops: Vec<usize>,
}

pub(crate) fn normalize(g: &OrdinaryGraph) -> Normalized {
    let mut index: std::collections::BTreeMap<(usize, usize), usize> = std::collections::BTreeMap::new();
    let mut edges = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut loops = Vec::new();
    for (e, &(a, b)) in g.edge_list().iter().enumerate() {
        if a == b {
            loops.push(e);
            continue;
        }
        let k = (a.min(b), a.max(b));
        match index.get(&k) {
            Some(&i) => classes[i].push(e),
            None => {
                index.insert(k, edges.len());
                edges.push((a, b));
                classes.push(vec![e]);
            }
        }
    }
    Normalized { simple: Simple::new(g.vertex_count(), edges), classes, loops }
}

pub fn is_planar(g: &OrdinaryGraph) -> bool {
    dmp::simple_is_planar(&normalize(g).simple)
}

fn end_at(g: &OrdinaryGraph, e: usize, v: usize) -> EdgeEnd {
    EdgeEnd { edge: e, end: if g.end_vertex(e, 0) == v { 0 } else { 1 } }
}

/// Planar embedding of the whole multigraph, or `None` if nonplanar.
pub fn planar_embedding(g: &OrdinaryGraph) -> Option<RotationSystem> {
    let norm = normalize(g);
    let simple_rot = dmp::simple_rotation(&norm.simple)?;
    let mut rotation = vec![Vec::new(); g.vertex_count()];
    for (v, rot) in simple_rot.iter().enumerate() {
        for &s in rot {
            let class = &norm.classes[s];
            let rep = class[0];
            if g.end_vertex(rep, 0) == v {
                rotation[v].extend(class.iter().map(|&e| end_at(g, e, v)));
            } else {
                rotation[v].extend(class.iter().rev().map(|&e| end_at(g, e, v)));
            }
        }
    }
    for &l in &norm.loops {
        let v = g.end_vertex(l, 0);
        rotation[v].push(EdgeEnd { edge: l, end: 0 });
        rotation[v].push(EdgeEnd { edge: l, end: 1 });
    }
    Some(RotationSystem { rotation })
}

pub fn decide_planarity(g: &OrdinaryGraph) -> PlanarityVerdict {
    match planar_embedding(g) {
        Some(rs) => PlanarityVerdict::Planar(rs),
        None => PlanarityVerdict::Nonplanar(
            kuratowski::extract(g).expect("a graph without planar embedding contains a Kuratowski subdivision"),
        ),
    }
}

pub fn extract_kuratowski(g: &OrdinaryGraph) -> Result<KuratowskiSubdivision, PlanarityError> {
    if is_planar(g) {
        return Err(PlanarityError::Planar);
    }
    Ok(kuratowski::extract(g).expect("a nonplanar graph contains a Kuratowski subdivision"))
}
