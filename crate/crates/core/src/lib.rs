//! Planarity of star-graphs: graphs carrying an unoriented cyclic order of
//! half-edges at every vertex.

pub mod chord;
pub mod criterion;
pub mod generators;
pub mod graph;
pub mod planarity;
pub mod simplify;
pub mod star;
pub mod walk;
pub mod web;

pub use chord::{
    chord_diagram, crossings, is_vassiliev_obstruction, self_crossings, transversal_count, Chord,
    ChordError, ChordOwner, Crossing, ObstructionFailure, VertexChordDiagram,
};
pub use graph::{GraphWalk, OrdinaryGraph};
pub use simplify::{simplify_obstruction, SimplifyError};
pub use star::{
    is_even, validate, EdgeId, HalfEdgeId, Problem, RawStarGraph, StarGraph, ValidationReport, VertexId,
};
pub use walk::{ClosedWalk, OpenWalk, Step, Visit, WalkError, WalkLike};
pub use web::{
    build_web_graph, check_projection_lemma, project_walk, LemmaError, LemmaReport, LemmaVerdict, Projection,
    WebGraph,
};
pub use planarity::{
    decide_planarity, extract_kuratowski, validate_subdivision, verify_embedding, KuratowskiKind,
    KuratowskiSubdivision, PlanarityVerdict, RotationSystem,
};
pub use criterion::{
    check_star_embedding, classify_nonplanar, decide, extract_obstruction, find_obstruction_bruteforce,
    star_is_planar, validate_witness, CriterionError, EmbeddedK33, NonplanarFlag, NonplanarityWitness,
    StarEmbedding, StarPlanarity, StarVerdict, VassilievObstruction,
};
