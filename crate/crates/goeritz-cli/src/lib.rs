//! Command-line surface over the group engine.
//!
//! Every operation is exposed as a subcommand with stable text output and
//! a `--json` mode for scripting. Exit codes: 0 success, 1 parse error
//! (bad word or vertex literal, bad invocation), 2 precondition violation,
//! 3 internal invariant breach.
//!
//! The empty word is spelled `1` (or `""`) on the command line, and
//! vertex literals are `P:<word>` / `M:<word>`.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use goeritz_core::amalgam::{
    equal, membership, normal_form, order, relators, relators_he, relators_hm, relators_hp,
    theta_twist,
};
use goeritz_core::factors::{letter_image_m, letter_image_p, EElem, MElem, PElem};
use goeritz_core::homology::represent;
use goeritz_core::tree::{
    descend, distance, enumerate_ball, geodesic, neighbors, TreeBall, TreeError, Vertex,
};
use goeritz_core::words::{Letter, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "goeritz",
    version,
    about = "Exact computations in the genus-2 Goeritz group and its tree of reducing spheres"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word.
    Nf { word: String },
    /// Decide whether two words are the same group element.
    Eq { word1: String, word2: String },
    /// Order of the element a word represents (1, 2, 3, 6 or infinite).
    Order { word: String },
    /// Locate a word relative to the vertex stabilizers.
    Member { word: String },
    /// Tree distance between two vertices.
    Dist { vertex1: String, vertex2: String },
    /// The unique path between two vertices.
    Geodesic { vertex1: String, vertex2: String },
    /// Neighbors of a vertex; the sphere-vertex star is cut at --twist.
    Neighbors {
        vertex: String,
        #[arg(long)]
        twist: u32,
    },
    /// Descend from a sphere vertex toward a target sphere vertex.
    Descend { vertex: String, target: String },
    /// Enumerate the BFS ball around the base sphere vertex.
    Ball {
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        twist: u32,
    },
    /// Verify every relator family; exits nonzero on any failure.
    Relcheck,
    /// Integer homology matrix of a word.
    Homrep { word: String },
    /// Θ-twist substitution applied to a word.
    Theta { word: String },
}

enum Failure {
    Parse(String),
    Precondition(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Precondition(_) => EXIT_PRECONDITION,
            Failure::Invariant(_) => EXIT_INVARIANT,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Invariant(format!("output stream failed: {e}"))
    }
}

/// Parses argv and executes one subcommand, writing results to `out`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return EXIT_OK;
        }
        Err(e) => {
            eprintln!("{e}");
            return EXIT_PARSE;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn parse_word_arg(text: &str) -> Result<Word, Failure> {
    if text.trim() == "1" {
        return Ok(Word::empty());
    }
    text.parse()
        .map_err(|e| Failure::Parse(format!("bad word {text:?}: {e}")))
}

fn parse_vertex_arg(text: &str) -> Result<Vertex, Failure> {
    text.parse()
        .map_err(|e| Failure::Parse(format!("bad vertex {text:?}: {e}")))
}

/// Words print as letter strings; the identity prints as `1`.
fn display_word(w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value)
        .map_err(|e| Failure::Invariant(format!("serialization failed: {e}")))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Nf { word } => {
            let nf = normal_form(&parse_word_arg(word)?);
            if cli.json {
                emit_json(out, &nf)?;
            } else {
                writeln!(out, "{}", display_word(&nf.to_word()))?;
            }
        }
        Command::Eq { word1, word2 } => {
            let result = equal(&parse_word_arg(word1)?, &parse_word_arg(word2)?);
            if cli.json {
                emit_json(out, &result)?;
            } else {
                writeln!(out, "{result}")?;
            }
        }
        Command::Order { word } => {
            let ord = order(&parse_word_arg(word)?);
            if cli.json {
                match ord {
                    goeritz_core::Order::Finite(k) => emit_json(out, &k)?,
                    goeritz_core::Order::Infinite => emit_json(out, &"infinite")?,
                }
            } else {
                writeln!(out, "{ord}")?;
            }
        }
        Command::Member { word } => {
            let m = membership(&parse_word_arg(word)?);
            if cli.json {
                emit_json(out, &m.to_string())?;
            } else {
                writeln!(out, "{m}")?;
            }
        }
        Command::Dist { vertex1, vertex2 } => {
            let d = distance(&parse_vertex_arg(vertex1)?, &parse_vertex_arg(vertex2)?);
            if cli.json {
                emit_json(out, &d)?;
            } else {
                writeln!(out, "{d}")?;
            }
        }
        Command::Geodesic { vertex1, vertex2 } => {
            let path = geodesic(&parse_vertex_arg(vertex1)?, &parse_vertex_arg(vertex2)?);
            if cli.json {
                emit_json(out, &path)?;
            } else {
                for v in path {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Neighbors { vertex, twist } => {
            if *twist == 0 {
                return Err(Failure::Precondition("twist bound must be >= 1".into()));
            }
            let ns = neighbors(&parse_vertex_arg(vertex)?, *twist);
            if cli.json {
                emit_json(out, &ns)?;
            } else {
                for v in ns {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Descend { vertex, target } => {
            let v = parse_vertex_arg(vertex)?;
            let t = parse_vertex_arg(target)?;
            let step = descend(&v, &t).map_err(|e| match e {
                TreeError::TooClose(_) | TreeError::NotSphereVertex(_) => {
                    Failure::Precondition(e.to_string())
                }
                other => Failure::Invariant(other.to_string()),
            })?;
            if cli.json {
                #[derive(Serialize)]
                struct DescendOut {
                    closer: Vertex,
                    mate: Vertex,
                }
                emit_json(
                    out,
                    &DescendOut {
                        closer: step.closer,
                        mate: step.mate,
                    },
                )?;
            } else {
                writeln!(out, "closer: {}", step.closer)?;
                writeln!(out, "mate: {}", step.mate)?;
            }
        }
        Command::Ball { radius, twist } => {
            if *twist == 0 {
                return Err(Failure::Precondition("twist bound must be >= 1".into()));
            }
            let ball =
                enumerate_ball(*radius, *twist).map_err(|e| Failure::Invariant(e.to_string()))?;
            if cli.json {
                emit_json(out, &ball_json(&ball))?;
            } else {
                writeln!(out, "vertices {}", ball.len())?;
                for v in ball.vertices() {
                    match ball.parent_of(v) {
                        Some(p) => writeln!(out, "{v}\t{p}")?,
                        None => writeln!(out, "{v}\t-")?,
                    }
                }
            }
        }
        Command::Relcheck => {
            let checks = check_all_relators();
            let all_ok = checks.iter().all(|c| c.ok);
            if cli.json {
                emit_json(out, &checks)?;
            } else {
                for c in &checks {
                    writeln!(
                        out,
                        "{:<3} {:<6} {}",
                        c.family,
                        c.relator,
                        if c.ok { "ok" } else { "FAIL" }
                    )?;
                }
                let ok_count = checks.iter().filter(|c| c.ok).count();
                writeln!(out, "{}/{} relators ok", ok_count, checks.len())?;
            }
            if !all_ok {
                return Err(Failure::Invariant("relator verification failed".into()));
            }
        }
        Command::Homrep { word } => {
            let m =
                represent(&parse_word_arg(word)?).map_err(|e| Failure::Invariant(e.to_string()))?;
            if cli.json {
                emit_json(out, &m)?;
            } else {
                for row in m.entries() {
                    writeln!(out, "{} {} {} {}", row[0], row[1], row[2], row[3])?;
                }
            }
        }
        Command::Theta { word } => {
            let twisted = theta_twist(&parse_word_arg(word)?);
            if cli.json {
                emit_json(out, &display_word(&twisted))?;
            } else {
                writeln!(out, "{}", display_word(&twisted))?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BallVertexOut<'a> {
    vertex: &'a Vertex,
    parent: Option<&'a Vertex>,
    depth: u32,
}

#[derive(Serialize)]
struct BallOut<'a> {
    radius: u32,
    twist: u32,
    vertices: Vec<BallVertexOut<'a>>,
}

fn ball_json(ball: &TreeBall) -> BallOut<'_> {
    let vertices = ball
        .vertices()
        .iter()
        .map(|v| BallVertexOut {
            vertex: v,
            parent: ball.parent_of(v),
            depth: ball.depth_of(v).expect("ball vertex has a depth"),
        })
        .collect();
    BallOut {
        radius: ball.radius(),
        twist: ball.twist_bound(),
        vertices,
    }
}

/// One row of the relator verification table.
#[derive(Debug, Clone, Serialize)]
pub struct RelatorCheck {
    pub family: String,
    pub relator: String,
    pub ok: bool,
}

fn eval_in_p(w: &Word) -> Option<PElem> {
    w.letters().iter().try_fold(PElem::identity(), |acc, &l| {
        Some(acc.mul(&letter_image_p(l)?))
    })
}

fn eval_in_m(w: &Word) -> Option<MElem> {
    w.letters().iter().try_fold(MElem::identity(), |acc, &l| {
        Some(acc.mul(&letter_image_m(l)?))
    })
}

fn eval_in_e(w: &Word) -> Option<EElem> {
    w.letters()
        .iter()
        .try_fold(EElem::identity(), |acc, &l| match l {
            Letter::Alpha => Some(acc.mul(&EElem::new(true, false))),
            Letter::Gamma => Some(acc.mul(&EElem::new(false, true))),
            _ => None,
        })
}

/// Runs every relator of every family through the amalgam engine, the
/// closed-form factor arithmetic where the relator lives there, and the
/// homology representation.
pub fn check_all_relators() -> Vec<RelatorCheck> {
    let mut out = Vec::new();
    let engine_and_homology = |w: &Word| {
        normal_form(w).is_identity() && represent(w).map(|m| m.is_identity()).unwrap_or(false)
    };
    for r in relators() {
        out.push(RelatorCheck {
            family: "H2".into(),
            relator: display_word(&r),
            ok: engine_and_homology(&r),
        });
    }
    for r in relators_hp() {
        out.push(RelatorCheck {
            family: "HP".into(),
            relator: display_word(&r),
            ok: engine_and_homology(&r) && eval_in_p(&r).map(|x| x.is_identity()).unwrap_or(false),
        });
    }
    for r in relators_hm() {
        out.push(RelatorCheck {
            family: "HM".into(),
            relator: display_word(&r),
            ok: engine_and_homology(&r) && eval_in_m(&r).map(|x| x.is_identity()).unwrap_or(false),
        });
    }
    for r in relators_he() {
        out.push(RelatorCheck {
            family: "HE".into(),
            relator: display_word(&r),
            ok: engine_and_homology(&r) && eval_in_e(&r).map(|x| x.is_identity()).unwrap_or(false),
        });
    }
    out
}
