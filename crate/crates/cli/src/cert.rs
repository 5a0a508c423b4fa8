//! Certificate documents and their construction from verdicts.

use serde::{Deserialize, Serialize};
use starplan_core::planarity::faces;
use starplan_core::{
    EdgeId, EmbeddedK33, NonplanarityWitness, StarEmbedding, StarGraph, StarVerdict, VassilievObstruction, WalkLike,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum CertificateDocument {
    Planar {
        vertices: Vec<OrientedVertex>,
        /// Each face as the half-edges its darts leave from.
        faces: Vec<Vec<String>>,
    },
    Nonplanar { witness: WitnessDocument },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientedVertex {
    pub id: String,
    pub rotation: Vec<String>,
    pub reversed: bool,
}

/// Walks are written as the half-edges they leave through, which names
/// both the edge and the direction of every step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessDocument {
    Vassiliev { cycles: [Vec<String>; 2], crossing: CrossingDocument },
    K33 { branch_vertices: Vec<String>, paths: Vec<Vec<String>> },
}

/// Chord positions index the vertex's rotation as listed in the graph
/// document; the first chord belongs to the first cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingDocument {
    pub vertex: String,
    pub chords: [[usize; 2]; 2],
}

fn departures<W: WalkLike>(g: &StarGraph, w: &W) -> Vec<String> {
    w.steps().iter().map(|s| g.half_edge_name(s.from).to_string()).collect()
}

fn dart_name(g: &StarGraph, edge: usize, end: usize) -> String {
    g.half_edge_name(g.ends(EdgeId(edge))[end]).to_string()
}

impl CertificateDocument {
    pub fn from_verdict(g: &StarGraph, v: &StarVerdict) -> Self {
        match v {
            StarVerdict::Planar(e) => Self::from_embedding(g, e),
            StarVerdict::Nonplanar(w) => Self::from_witness(g, w),
        }
    }

    pub fn from_embedding(g: &StarGraph, e: &StarEmbedding) -> Self {
        let vertices = g
            .vertices()
            .map(|v| OrientedVertex {
                id: g.vertex_name(v).to_string(),
                rotation: e.rotation.rotation[v.0].iter().map(|x| dart_name(g, x.edge, x.end)).collect(),
                reversed: e.reversed[v.0],
            })
            .collect();
        let faces = faces(&g.ordinary(), &e.rotation)
            .expect("embeddings cover the graph")
            .iter()
            .map(|f| f.iter().map(|x| dart_name(g, x.edge, x.end)).collect())
            .collect();
        CertificateDocument::Planar { vertices, faces }
    }

    pub fn from_witness(g: &StarGraph, w: &NonplanarityWitness) -> Self {
        let witness = match w {
            NonplanarityWitness::Vassiliev(o) => vassiliev(g, o),
            NonplanarityWitness::EmbeddedK33(k) => k33(g, k),
        };
        CertificateDocument::Nonplanar { witness }
    }
}

fn vassiliev(g: &StarGraph, o: &VassilievObstruction) -> WitnessDocument {
    let x = &o.crossing;
    WitnessDocument::Vassiliev {
        cycles: [departures(g, &o.c1), departures(g, &o.c2)],
        crossing: CrossingDocument {
            vertex: g.vertex_name(x.vertex).to_string(),
            chords: [[x.first.i, x.first.j], [x.second.i, x.second.j]],
        },
    }
}

fn k33(g: &StarGraph, k: &EmbeddedK33) -> WitnessDocument {
    WitnessDocument::K33 {
        branch_vertices: k.branch_vertices.iter().map(|&v| g.vertex_name(v).to_string()).collect(),
        paths: k.paths.iter().map(|p| departures(g, p)).collect(),
    }
}
