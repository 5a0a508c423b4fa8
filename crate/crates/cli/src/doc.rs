//! JSON documents for star-graphs.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use starplan_core::{RawStarGraph, StarGraph, ValidationReport};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarGraphDocument {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    pub rotation: Vec<String>,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("{path}: {message}")]
    Json { path: String, message: String },
    #[error("invalid star-graph: {0}")]
    Invalid(ValidationReport),
}

impl StarGraphDocument {
    pub fn from_graph(g: &StarGraph) -> Self {
        let raw = g.to_raw();
        StarGraphDocument {
            vertices: raw.vertices.into_iter().map(|(id, rotation)| VertexEntry { id, rotation }).collect(),
            edges: raw.edges.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_raw(&self) -> RawStarGraph {
        RawStarGraph {
            vertices: self.vertices.iter().map(|v| (v.id.clone(), v.rotation.clone())).collect(),
            edges: self.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<StarGraph, DocError> {
        StarGraph::from_raw(&self.to_raw()).map_err(DocError::Invalid)
    }
}

/// Deserializes `text`, naming the offending field on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, DocError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = path.trim_end_matches(".?").to_string();
        let path = if path == "." || path.is_empty() { "document".to_string() } else { path };
        DocError::Json { path, message: e.into_inner().to_string() }
    })
}

pub fn read_graph(text: &str) -> Result<StarGraph, DocError> {
    parse_json::<StarGraphDocument>(text)?.to_graph()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
