//! Planar embeddings of star-graphs read off the web graph.

use thiserror::Error;

use crate::planarity::{decide_planarity, verify_embedding, EdgeEnd, EmbeddingError, KuratowskiSubdivision, PlanarityVerdict, RotationSystem};
use crate::star::{cyclically_equal, StarGraph, VertexId};
use crate::web::{build_web_graph, WebGraph};

/// An oriented rotation system on `g.ordinary()`; `reversed[v]` records
/// that the rotation at `v` is the stored one read backwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarEmbedding {
    pub rotation: RotationSystem,
    pub reversed: Vec<bool>,
}

/// A nonplanar web graph together with its Kuratowski subdivision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonplanarFlag {
    pub web: WebGraph,
    pub kuratowski: KuratowskiSubdivision,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarPlanarity {
    Planar(StarEmbedding),
    NonplanarFlag(NonplanarFlag),
}

impl StarPlanarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, StarPlanarity::Planar(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingCheckError {
    #[error(transparent)]
    Malformed(#[from] EmbeddingError),
    #[error("rotation system is not of genus 0")]
    Genus,
    #[error("expected {expected} reversal flags, found {found}")]
    FlagCount { expected: usize, found: usize },
    #[error("rotation at vertex {0} is neither the stored rotation nor its reversal")]
    Incompatible(usize),
    #[error("reversal flag at vertex {0} does not match the rotation")]
    WrongFlag(usize),
}

fn edge_end(g: &StarGraph, h: crate::star::HalfEdgeId) -> EdgeEnd {
    EdgeEnd { edge: g.edge_of(h).0, end: g.side_of(h) }
}

fn stored(g: &StarGraph, v: VertexId) -> Vec<EdgeEnd> {
    g.rotation(v).iter().map(|&h| edge_end(g, h)).collect()
}

pub fn star_is_planar(g: &StarGraph) -> StarPlanarity {
    let web = build_web_graph(g);
    let rs = match decide_planarity(&web.graph) {
        PlanarityVerdict::Nonplanar(kuratowski) => {
            return StarPlanarity::NonplanarFlag(NonplanarFlag { web, kuratowski });
        }
        PlanarityVerdict::Planar(rs) => rs,
    };
    let mut rotation = Vec::with_capacity(g.vertex_count());
    let mut reversed = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let w = &web.webs[v.0];
        // The spokes leave the center in the order the edges leave the vertex.
        let order: Vec<usize> = rs.rotation[w.center]
            .iter()
            .map(|x| w.spokes.iter().position(|&s| s == x.edge).expect("only spokes meet a center"))
            .collect();
        let natural: Vec<usize> = (0..order.len()).collect();
        let flip = !cyclically_equal(&natural, &order, false);
        assert!(
            cyclically_equal(&natural, &order, true),
            "web-graph embedding permutes the spokes at vertex {}",
            v.0
        );
        rotation.push(order.iter().map(|&p| edge_end(g, g.rotation(v)[p])).collect());
        reversed.push(flip);
    }
    let emb = StarEmbedding { rotation: RotationSystem { rotation }, reversed };
    if let Err(e) = check_star_embedding(g, &emb) {
        panic!("embedding read off the web graph fails its check: {e}");
    }
    StarPlanarity::Planar(emb)
}

/// Genus 0 and, at every vertex, the stored rotation or its reversal as
/// the flag says.
pub fn check_star_embedding(g: &StarGraph, emb: &StarEmbedding) -> Result<(), EmbeddingCheckError> {
    if !verify_embedding(&g.ordinary(), &emb.rotation)? {
        return Err(EmbeddingCheckError::Genus);
    }
    if emb.reversed.len() != g.vertex_count() {
        return Err(EmbeddingCheckError::FlagCount { expected: g.vertex_count(), found: emb.reversed.len() });
    }
    for v in g.vertices() {
        let mut want = stored(g, v);
        let got = &emb.rotation.rotation[v.0];
        if !cyclically_equal(&want, got, true) {
            return Err(EmbeddingCheckError::Incompatible(v.0));
        }
        if emb.reversed[v.0] {
            want.reverse();
        }
        if !cyclically_equal(&want, got, false) {
            return Err(EmbeddingCheckError::WrongFlag(v.0));
        }
    }
    Ok(())
}
