//! Command-line front end for starplan.
//!
//! Exit codes: 0 planar or valid, 1 nonplanar or invalid, 2 for errors.

pub mod cert;
pub mod crossval;
pub mod doc;
pub mod dot;
pub mod verify;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use starplan_core::criterion::DEFAULT_CYCLE_CAP;
use starplan_core::generators::{from_gauss_word, random_even_star_graph, random_planar_star_graph};
use starplan_core::{
    build_web_graph, classify_nonplanar, decide, extract_obstruction, is_even, star_is_planar, NonplanarityWitness,
    StarGraph, StarPlanarity, StarVerdict,
};

use cert::CertificateDocument;
use crossval::{crossval, CrossvalOptions};
use doc::{parse_json, read_graph, to_json, StarGraphDocument};
use verify::verify_certificate;

pub const PLANAR: u8 = 0;
pub const NONPLANAR: u8 = 1;
pub const ERROR: u8 = 2;

pub const CYCLE_CAP_VAR: &str = "STARPLAN_CYCLE_CAP";

#[derive(Debug, Parser)]
#[command(name = "starplan", version, about = "Planarity of star-graphs, with certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide planarity (exit 0 planar, 1 nonplanar)
    Check {
        /// Star-graph document, or `-` for stdin
        input: PathBuf,
        /// Write the certificate here
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check a certificate against a graph (exit 0 valid, 1 invalid)
    Verify { input: PathBuf, certificate: PathBuf },
    /// Print a nonplanarity certificate
    Obstruct { input: PathBuf },
    /// Print a planar embedding certificate
    Embed { input: PathBuf },
    /// Print the web graph in DOT
    Web { input: PathBuf },
    /// Print the star-graph of a double-occurrence word
    Gauss { word: String },
    /// Print a random star-graph
    Gen {
        #[arg(long, default_value_t = 4)]
        vertices: usize,
        /// Even degrees each vertex draws from
        #[arg(long, value_delimiter = ',', default_values_t = [2, 4, 6])]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grow a plane map instead
        #[arg(long)]
        planar: bool,
        /// Number of faces of the plane map
        #[arg(long, default_value_t = 4)]
        faces: usize,
    },
    /// Compare the planarity test with brute-force obstruction search
    Crossval {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 4, 6])]
        degrees: Vec<usize>,
        /// Write the per-trial CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Use plane maps only
        #[arg(long)]
        planar_only: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

struct Failure(u8, String);

type Outcome = Result<u8, Failure>;

fn error(msg: impl std::fmt::Display) -> Failure {
    Failure(ERROR, msg.to_string())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| error(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<StarGraph, Failure> {
    read_graph(&read_text(path)?).map_err(|e| error(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| error(format!("{}: {e}", path.display())))
}

fn summary(g: &StarGraph, v: &StarVerdict) -> String {
    let names = |vs: &[starplan_core::VertexId]| vs.iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>().join(", ");
    match v {
        StarVerdict::Planar(e) => {
            let flipped = e.reversed.iter().filter(|&&r| r).count();
            format!("planar: embedding found, {flipped} of {} rotations reversed", g.vertex_count())
        }
        StarVerdict::Nonplanar(NonplanarityWitness::Vassiliev(o)) => format!(
            "nonplanar: cycles of length {} and {} cross once at vertex {}",
            o.c1.steps_len(),
            o.c2.steps_len(),
            g.vertex_name(o.crossing.vertex)
        ),
        StarVerdict::Nonplanar(NonplanarityWitness::EmbeddedK33(k)) => format!(
            "nonplanar: embedded K3,3 on {} | {}",
            names(&k.branch_vertices[..3]),
            names(&k.branch_vertices[3..])
        ),
    }
}

trait StepsLen {
    fn steps_len(&self) -> usize;
}

impl<W: starplan_core::WalkLike> StepsLen for W {
    fn steps_len(&self) -> usize {
        self.steps().len()
    }
}

fn cycle_cap() -> Result<usize, Failure> {
    match std::env::var(CYCLE_CAP_VAR) {
        Err(_) => Ok(DEFAULT_CYCLE_CAP),
        Ok(s) => s.trim().parse().map_err(|_| error(format!("{CYCLE_CAP_VAR}: `{s}` is not a count"))),
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let say = |out: &mut dyn Write, text: &str| out.write_all(text.as_bytes()).map_err(error);
    match command {
        Command::Check { input, certificate } => {
            let g = load_graph(&input)?;
            let verdict = decide(&g).map_err(error)?;
            if let Some(path) = certificate {
                write_file(&path, &to_json(&CertificateDocument::from_verdict(&g, &verdict)))?;
            }
            say(out, &format!("{}\n", summary(&g, &verdict)))?;
            Ok(if matches!(verdict, StarVerdict::Planar(_)) { PLANAR } else { NONPLANAR })
        }
        Command::Verify { input, certificate } => {
            let g = load_graph(&input)?;
            let cert: CertificateDocument = parse_json(&read_text(&certificate)?)
                .map_err(|e| error(format!("{}: {e}", certificate.display())))?;
            match verify_certificate(&g, &cert) {
                Err(e) => Err(error(format!("{}: {e}", certificate.display()))),
                Ok(Ok(())) => {
                    say(out, "valid\n")?;
                    Ok(PLANAR)
                }
                Ok(Err(reason)) => {
                    say(out, &format!("invalid: {reason}\n"))?;
                    Ok(NONPLANAR)
                }
            }
        }
        Command::Obstruct { input } => {
            let g = load_graph(&input)?;
            if star_is_planar(&g).is_planar() {
                return Err(Failure(NONPLANAR, "graph is planar".into()));
            }
            let witness = if is_even(&g) {
                NonplanarityWitness::Vassiliev(extract_obstruction(&g).map_err(error)?)
            } else {
                classify_nonplanar(&g).map_err(error)?
            };
            say(out, &to_json(&CertificateDocument::from_witness(&g, &witness)))?;
            Ok(PLANAR)
        }
        Command::Embed { input } => {
            let g = load_graph(&input)?;
            match star_is_planar(&g) {
                StarPlanarity::Planar(e) => {
                    say(out, &to_json(&CertificateDocument::from_embedding(&g, &e)))?;
                    Ok(PLANAR)
                }
                StarPlanarity::NonplanarFlag(_) => Err(Failure(NONPLANAR, "graph is not planar".into())),
            }
        }
        Command::Web { input } => {
            let g = load_graph(&input)?;
            say(out, &dot::web_dot(&g, &build_web_graph(&g)))?;
            Ok(PLANAR)
        }
        Command::Gauss { word } => {
            let g = from_gauss_word(&word).map_err(error)?;
            say(out, &to_json(&StarGraphDocument::from_graph(&g)))?;
            Ok(PLANAR)
        }
        Command::Gen { vertices, degrees, seed, planar, faces } => {
            let g = if planar {
                random_planar_star_graph(faces, seed)
            } else {
                random_even_star_graph(vertices, &degrees, seed).map_err(error)?
            };
            say(out, &to_json(&StarGraphDocument::from_graph(&g)))?;
            Ok(PLANAR)
        }
        Command::Crossval { trials, max_vertices, seed, degrees, csv, planar_only, inject_fault } => {
            if trials == 0 {
                return Err(error("--trials must be at least 1"));
            }
            let opts = CrossvalOptions {
                trials,
                max_vertices,
                seed,
                degrees,
                cycle_cap: cycle_cap()?,
                planar_only,
                inject_fault,
            };
            let report = crossval(&opts).map_err(error)?;
            match csv {
                Some(path) => {
                    write_file(&path, &report.csv())?;
                    say(out, &format!("{}\n", report.summary()))?;
                }
                None => {
                    say(out, &report.csv())?;
                    say(err, &format!("{}\n", report.summary()))?;
                }
            }
            Ok(if report.passed() { PLANAR } else { NONPLANAR })
        }
    }
}

/// Runs one command; diagnostics go to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "{}{msg}", if code == ERROR { "error: " } else { "" });
            code
        }
    }
}
