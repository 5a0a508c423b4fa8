//! Cross-validation of the planarity test, the brute-force obstruction
//! search and the extraction engine on random star-graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starplan_core::criterion::{extract_obstruction_traced, find_obstruction_bruteforce_with_cap};
use starplan_core::generators::{random_even_star_graph, random_planar_star_graph, GenError};
use starplan_core::{
    classify_nonplanar, is_even, star_is_planar, NonplanarityWitness, StarGraph, StarPlanarity,
    VassilievObstruction,
};

use crate::cert::CertificateDocument;
use crate::doc::{parse_json, to_json};
use crate::verify::verify_certificate;

#[derive(Debug, Clone)]
pub struct CrossvalOptions {
    pub trials: usize,
    pub max_vertices: usize,
    pub seed: u64,
    pub degrees: Vec<usize>,
    pub cycle_cap: usize,
    /// Draw plane maps instead of configuration-model graphs.
    pub planar_only: bool,
    /// Check the first obstruction against a copy of the graph with its
    /// crossing undone, which the harness must notice.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oracle {
    None,
    Pair,
    Capacity,
}

#[derive(Debug, Clone)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub planar: bool,
    pub oracle: Oracle,
    /// Extraction case, or the error, for nonplanar graphs.
    pub case: Option<Result<String, String>>,
    pub certificate_valid: bool,
}

impl Trial {
    pub fn agrees(&self) -> Option<bool> {
        match self.oracle {
            Oracle::Capacity => None,
            Oracle::None => Some(self.planar),
            Oracle::Pair => Some(!self.planar),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossvalReport {
    pub trials: Vec<Trial>,
}

impl CrossvalReport {
    pub fn disagreements(&self) -> usize {
        self.trials.iter().filter(|t| t.agrees() == Some(false)).count()
    }

    pub fn capacity_errors(&self) -> usize {
        self.trials.iter().filter(|t| t.oracle == Oracle::Capacity).count()
    }

    pub fn extraction_failures(&self) -> usize {
        self.trials.iter().filter(|t| matches!(t.case, Some(Err(_)))).count()
    }

    pub fn invalid_certificates(&self) -> usize {
        self.trials.iter().filter(|t| !t.certificate_valid).count()
    }

    pub fn passed(&self) -> bool {
        self.disagreements() == 0 && self.extraction_failures() == 0 && self.invalid_certificates() == 0
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["trial", "seed", "vertices", "edges", "verdict", "oracle", "case", "certificate", "agree"])
            .unwrap();
        for t in &self.trials {
            let case = match &t.case {
                None => "-".to_string(),
                Some(Ok(c)) => c.clone(),
                Some(Err(e)) => format!("error: {e}"),
            };
            w.write_record([
                t.index.to_string(),
                t.seed.to_string(),
                t.vertices.to_string(),
                t.edges.to_string(),
                (if t.planar { "planar" } else { "nonplanar" }).to_string(),
                (match t.oracle {
                    Oracle::None => "none",
                    Oracle::Pair => "pair",
                    Oracle::Capacity => "capacity",
                })
                .to_string(),
                case,
                (if t.certificate_valid { "valid" } else { "invalid" }).to_string(),
                (match t.agrees() {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "unknown",
                })
                .to_string(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn summary(&self) -> String {
        let planar = self.trials.iter().filter(|t| t.planar).count();
        format!(
            "{} trials: {} planar, {} nonplanar, {} disagreements, {} extraction failures, {} invalid certificates, {} capacity errors",
            self.trials.len(),
            planar,
            self.trials.len() - planar,
            self.disagreements(),
            self.extraction_failures(),
            self.invalid_certificates(),
            self.capacity_errors(),
        )
    }
}

/// Copy of `g` with the two chords of the crossing no longer alternating.
fn undo_crossing(g: &StarGraph, o: &VassilievObstruction) -> StarGraph {
    let mut raw = g.to_raw();
    let rot = &mut raw.vertices[o.crossing.vertex.0].1;
    rot.swap(o.crossing.first.i, o.crossing.second.i);
    StarGraph::from_raw(&raw).expect("swapping two half-edges keeps the graph valid")
}

/// Round trip through the certificate document, then check it.
fn certificate_checks(g: &StarGraph, cert: &CertificateDocument) -> bool {
    let text = to_json(cert);
    let Ok(back) = parse_json::<CertificateDocument>(&text) else { return false };
    matches!(verify_certificate(g, &back), Ok(Ok(())))
}

pub fn crossval(opts: &CrossvalOptions) -> Result<CrossvalReport, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut trials = Vec::with_capacity(opts.trials);
    let mut fault_pending = opts.inject_fault;
    for index in 0..opts.trials {
        let n = rng.gen_range(1..=opts.max_vertices.max(1));
        let seed: u64 = rng.gen();
        let g = if opts.planar_only {
            random_planar_star_graph(n, seed)
        } else {
            random_even_star_graph(n, &opts.degrees, seed)?
        };
        let oracle = match find_obstruction_bruteforce_with_cap(&g, opts.cycle_cap) {
            Ok(None) => Oracle::None,
            Ok(Some(_)) => Oracle::Pair,
            Err(_) => Oracle::Capacity,
        };
        let (planar, case, certificate_valid) = match star_is_planar(&g) {
            StarPlanarity::Planar(e) => (true, None, certificate_checks(&g, &CertificateDocument::from_embedding(&g, &e))),
            StarPlanarity::NonplanarFlag(_) if is_even(&g) => match extract_obstruction_traced(&g) {
                Ok(x) => {
                    let witness = NonplanarityWitness::Vassiliev(x.obstruction.clone());
                    let cert = CertificateDocument::from_witness(&g, &witness);
                    let target = if fault_pending { undo_crossing(&g, &x.obstruction) } else { g.clone() };
                    fault_pending = false;
                    (false, Some(Ok(x.case.to_string())), certificate_checks(&target, &cert))
                }
                Err(e) => (false, Some(Err(e.to_string())), false),
            },
            StarPlanarity::NonplanarFlag(_) => match classify_nonplanar(&g) {
                Ok(w) => (false, Some(Ok("classified".into())), certificate_checks(&g, &CertificateDocument::from_witness(&g, &w))),
                Err(e) => (false, Some(Err(e.to_string())), false),
            },
        };
        trials.push(Trial {
            index,
            seed,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            planar,
            oracle,
            case,
            certificate_valid,
        });
    }
    Ok(CrossvalReport { trials })
}
