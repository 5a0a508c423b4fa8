//! Certificate checking from the graph and certificate alone. Only the
//! chord calculus, walk validation and face tracing are consulted.

use std::collections::BTreeSet;

use starplan_core::chord::obstruction_crossing;
use starplan_core::criterion::validate_k33;
use starplan_core::planarity::{faces, EdgeEnd, RotationSystem};
use starplan_core::{
    check_star_embedding, ClosedWalk, EmbeddedK33, HalfEdgeId, OpenWalk, StarEmbedding, StarGraph, Step, VertexId,
};
use thiserror::Error;

use crate::cert::{CertificateDocument, CrossingDocument, OrientedVertex, WitnessDocument};

/// The certificate names something the graph does not have.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MismatchError {
    #[error("unknown vertex `{0}`")]
    Vertex(String),
    #[error("unknown half-edge `{0}`")]
    HalfEdge(String),
}

struct Names<'a>(&'a StarGraph);

impl Names<'_> {
    fn vertex(&self, id: &str) -> Result<VertexId, MismatchError> {
        self.0.vertex_by_name(id).ok_or_else(|| MismatchError::Vertex(id.to_string()))
    }

    fn half_edge(&self, id: &str) -> Result<HalfEdgeId, MismatchError> {
        self.0.half_edge_by_name(id).ok_or_else(|| MismatchError::HalfEdge(id.to_string()))
    }

    fn half_edges(&self, ids: &[String]) -> Result<Vec<HalfEdgeId>, MismatchError> {
        ids.iter().map(|h| self.half_edge(h)).collect()
    }

    fn dart(&self, id: &str) -> Result<EdgeEnd, MismatchError> {
        let h = self.half_edge(id)?;
        Ok(EdgeEnd { edge: self.0.edge_of(h).0, end: self.0.side_of(h) })
    }
}

/// `Ok(Ok(()))` for a valid certificate, `Ok(Err(reason))` for an invalid
/// one, `Err` when it refers to names the graph lacks.
pub fn verify_certificate(g: &StarGraph, cert: &CertificateDocument) -> Result<Result<(), String>, MismatchError> {
    let names = Names(g);
    match cert {
        CertificateDocument::Planar { vertices, faces } => planar(g, &names, vertices, faces),
        CertificateDocument::Nonplanar { witness: WitnessDocument::Vassiliev { cycles, crossing } } => {
            vassiliev(g, &names, cycles, crossing)
        }
        CertificateDocument::Nonplanar { witness: WitnessDocument::K33 { branch_vertices, paths } } => {
            k33(g, &names, branch_vertices, paths)
        }
    }
}

fn canonical(face: &[EdgeEnd]) -> Vec<EdgeEnd> {
    (0..face.len())
        .map(|k| face[k..].iter().chain(&face[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn planar(
    g: &StarGraph,
    names: &Names,
    vertices: &[OrientedVertex],
    listed_faces: &[Vec<String>],
) -> Result<Result<(), String>, MismatchError> {
    let mut rotation = vec![None; g.vertex_count()];
    let mut reversed = vec![false; g.vertex_count()];
    for entry in vertices {
        let v = names.vertex(&entry.id)?;
        let darts = entry.rotation.iter().map(|h| names.dart(h)).collect::<Result<Vec<_>, _>>()?;
        if rotation[v.0].replace(darts).is_some() {
            return Ok(Err(format!("vertex `{}` is listed twice", entry.id)));
        }
        reversed[v.0] = entry.reversed;
    }
    if let Some(v) = rotation.iter().position(Option::is_none) {
        return Ok(Err(format!("vertex `{}` has no rotation", g.vertex_name(VertexId(v)))));
    }
    let rs = RotationSystem { rotation: rotation.into_iter().map(Option::unwrap).collect() };
    let emb = StarEmbedding { rotation: rs, reversed };
    if let Err(e) = check_star_embedding(g, &emb) {
        return Ok(Err(e.to_string()));
    }
    let traced: BTreeSet<Vec<EdgeEnd>> =
        faces(&g.ordinary(), &emb.rotation).expect("checked above").iter().map(|f| canonical(f)).collect();
    let mut listed = BTreeSet::new();
    for f in listed_faces {
        let darts = f.iter().map(|h| names.dart(h)).collect::<Result<Vec<_>, _>>()?;
        listed.insert(canonical(&darts));
    }
    if listed.len() != listed_faces.len() || listed != traced {
        return Ok(Err("face walks do not match the rotation system".into()));
    }
    Ok(Ok(()))
}

fn vassiliev(
    g: &StarGraph,
    names: &Names,
    cycles: &[Vec<String>; 2],
    crossing: &CrossingDocument,
) -> Result<Result<(), String>, MismatchError> {
    let mut walks = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        let hs = names.half_edges(c)?;
        match ClosedWalk::from_departures(g, &hs) {
            Ok(w) if w.is_simple(g) => walks.push(w),
            Ok(_) => return Ok(Err(format!("cycle {i} visits a vertex twice"))),
            Err(e) => return Ok(Err(format!("cycle {i} is not a closed walk: {e}"))),
        }
    }
    let vertex = names.vertex(&crossing.vertex)?;
    let x = match obstruction_crossing(g, &walks[0], &walks[1]) {
        Ok(x) => x,
        Err(e) => return Ok(Err(e.to_string())),
    };
    let actual = [[x.first.i, x.first.j], [x.second.i, x.second.j]];
    if x.vertex != vertex || actual != crossing.chords {
        return Ok(Err("recorded crossing differs from the actual one".into()));
    }
    Ok(Ok(()))
}

fn k33(
    g: &StarGraph,
    names: &Names,
    branch: &[String],
    paths: &[Vec<String>],
) -> Result<Result<(), String>, MismatchError> {
    let branch_vertices = branch.iter().map(|v| names.vertex(v)).collect::<Result<Vec<_>, _>>()?;
    let mut walks = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let hs = names.half_edges(p)?;
        let Some(&first) = hs.first() else { return Ok(Err(format!("path {i} is empty"))) };
        let steps = hs.iter().map(|&h| Step::departing(g, h)).collect();
        match OpenWalk::new(g, g.vertex_of(first), steps) {
            Ok(w) => walks.push(w),
            Err(e) => return Ok(Err(format!("path {i} is not a walk: {e}"))),
        }
    }
    Ok(validate_k33(g, &EmbeddedK33 { branch_vertices, paths: walks }).map_err(|e| e.to_string()))
}
