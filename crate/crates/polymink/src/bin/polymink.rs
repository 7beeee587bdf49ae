//! Command-line front end. Exit codes: 0 success (inconclusive verdicts
//! included), 1 usage error, 2 parse or format error, 3 invalid geometry.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use polymink::criteria::{partition_to_polygon, PartitionInstance};
use polymink::decomp::{poly_decomp, DecompError, DecompVerdict};
use polymink::fixtures::{rectangle, twopow_family};
use polymink::json::{
    self, cloud_from_document, edge_sequence_from_json, edge_sequence_to_json, parse_value,
    points_from_document, poly_from_json, project_report, summand_line, JsonError,
};
use polymink::lattice::{
    convex_hull_2d, edge_sequence_of, integral_points, EdgeSequence, LatticeError,
};
use polymink::newton::{
    candidate_factor_supports, parse_poly, pretest, InconclusiveReason, NewtonError,
    PretestStatus, SparsePoly,
};
use polymink::project::{polytope_decomp, ProjectionConfig};
use polymink::summands::{count_summands, enumerate_summands, summand_to_polygon};

#[derive(Parser)]
#[command(
    name = "polymink",
    about = "Integral Minkowski decomposition of lattice polygons, summand \
             enumeration, projection tests for higher-dimensional polytopes, \
             and the Newton-polytope irreducibility pretest",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ProjectOpts {
    /// Number of independent projection trials.
    #[arg(long)]
    trials: Option<u32>,
    /// Projection entries are drawn from {-B, ..., B}; default is the
    /// square of the point count.
    #[arg(long, value_name = "B")]
    k_radius: Option<u64>,
    /// Abandon trials whose shadow would hold more lattice points.
    #[arg(long)]
    shadow_cap: Option<u64>,
    /// Master seed; omitted means system entropy, echoed in the output.
    #[arg(long)]
    seed: Option<u64>,
}

impl ProjectOpts {
    fn config(&self) -> (ProjectionConfig, u64) {
        let seed = self.seed.unwrap_or_else(rand::random);
        let mut cfg = ProjectionConfig {
            seed,
            ..Default::default()
        };
        if let Some(t) = self.trials {
            cfg.trials = t;
        }
        cfg.k_radius = self.k_radius;
        if let Some(c) = self.shadow_cap {
            cfg.shadow_point_cap = c;
        }
        (cfg, seed)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Convex hull of a 2-d points document, as an edge sequence.
    Hull { input: String },
    /// Decide integral decomposability of a polygon.
    Decompose { input: String },
    /// Count all integral summands (trivial ones included).
    Count { input: String },
    /// Stream proper integral summands, one JSON line each.
    Enumerate {
        input: String,
        /// Stop after this many summands.
        #[arg(long)]
        limit: Option<usize>,
        /// Also emit the point and the polygon itself.
        #[arg(long)]
        include_trivial: bool,
    },
    /// Absolute-irreducibility pretest for a sparse polynomial.
    Pretest {
        poly: String,
        #[command(flatten)]
        proj: ProjectOpts,
    },
    /// Random-projection indecomposability test for a point cloud.
    Project {
        input: String,
        #[command(flatten)]
        proj: ProjectOpts,
    },
    /// Candidate factor supports of a bivariate polynomial.
    Factors {
        poly: String,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Emit fixture polygons as edge-sequence JSON.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Reduction polygon of a partition instance.
    Partition {
        /// Comma-separated positive integers with even total.
        #[arg(long, value_delimiter = ',', required = true)]
        list: Vec<u64>,
    },
    /// Polygon with exactly 2^m integral summands.
    Twopow { m: u32 },
    /// Axis-aligned rectangle [0,n] x [0,m].
    Rectangle { n: u64, m: u64 },
}

enum CliError {
    Parse(String),
    Geometry(String),
}

impl From<JsonError> for CliError {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Geometry(m) => CliError::Geometry(m),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<NewtonError> for CliError {
    fn from(e: NewtonError) -> Self {
        match e {
            NewtonError::SyntaxError(_) | NewtonError::NegativeExponent(_) => {
                CliError::Parse(e.to_string())
            }
            other => CliError::Geometry(other.to_string()),
        }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        CliError::Geometry(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Geometry(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

/// A polygon argument accepts an edge-sequence document or a 2-d points
/// document, distinguished by their fields.
fn load_polygon(path: &str) -> Result<EdgeSequence, CliError> {
    let value = parse_value(&read_input(path)?)?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Parse("expected a JSON object".into()))?;
    if obj.contains_key("edges") {
        Ok(edge_sequence_from_json(&value)?)
    } else if obj.contains_key("points") {
        let pts = points_from_document(&value)?;
        let hull = convex_hull_2d(pts.iter())?;
        Ok(edge_sequence_of(&hull)?)
    } else {
        Err(CliError::Parse(
            "expected \"edges\" or \"points\" in the document".into(),
        ))
    }
}

/// Inline text, inline JSON, a file path, or '-': sniffed by the leading
/// character after resolving files.
fn load_poly(arg: &str) -> Result<SparsePoly, CliError> {
    let text = if arg == "-" {
        read_input("-")?
    } else if arg.trim_start().starts_with('{') || !std::path::Path::new(arg).exists() {
        arg.to_string()
    } else {
        read_input(arg)?
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        Ok(poly_from_json(&parse_value(trimmed)?)?)
    } else {
        Ok(parse_poly(trimmed)?)
    }
}

fn witness_text(ks: &[BigUint]) -> String {
    let body: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
    format!("({})", body.join(","))
}

fn emit_edge_sequence(es: &EdgeSequence, format: Format) {
    // Edge sequences have no shorter faithful text form, so both formats
    // print the JSON document.
    let _ = format;
    println!("{}", edge_sequence_to_json(es));
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Hull { input } => {
            let value = parse_value(&read_input(&input)?)?;
            let pts = points_from_document(&value)?;
            let hull = convex_hull_2d(pts.iter())?;
            let es = edge_sequence_of(&hull)?;
            emit_edge_sequence(&es, cli.format);
        }
        Cmd::Decompose { input } => {
            let es = load_polygon(&input)?;
            match poly_decomp(&es)? {
                DecompVerdict::Indecomposable => match cli.format {
                    Format::Text => println!("INDECOMPOSABLE"),
                    Format::Json => println!("{}", serde_json::json!({"verdict": "INDECOMPOSABLE"})),
                },
                DecompVerdict::Decomposable(w) => match cli.format {
                    Format::Text => println!("DECOMPOSABLE witness={}", witness_text(w.ks())),
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({
                            "verdict": "DECOMPOSABLE",
                            "witness": w.ks().iter().map(json::biguint_to_json).collect::<Vec<_>>(),
                        })
                    ),
                },
            }
        }
        Cmd::Count { input } => {
            let es = load_polygon(&input)?;
            let (count, _) = count_summands(&es)?;
            // Counts are decimal strings in both formats; they outgrow any
            // fixed-width integer.
            match cli.format {
                Format::Text => println!("{count}"),
                Format::Json => println!("{}", serde_json::json!({"count": count.to_string()})),
            }
        }
        Cmd::Enumerate {
            input,
            limit,
            include_trivial,
        } => {
            let es = load_polygon(&input)?;
            let (_, table) = count_summands(&es)?;
            let iter = enumerate_summands(&table, &es, include_trivial)?;
            let limit = limit.unwrap_or(usize::MAX);
            for ks in iter.take(limit) {
                match cli.format {
                    Format::Text => println!("{}", witness_text(ks.ks())),
                    Format::Json => {
                        let q = summand_to_polygon(&ks, &es);
                        let pts = integral_points(&q);
                        println!("{}", summand_line(ks.ks(), &q, &pts));
                    }
                }
            }
        }
        Cmd::Pretest { poly, proj } => {
            let f = load_poly(&poly)?;
            let (cfg, seed) = proj.config();
            let verdict = pretest(&f, &cfg)?;
            match cli.format {
                Format::Text => match verdict.status {
                    PretestStatus::AbsolutelyIrreducible => println!("ABSOLUTELY_IRREDUCIBLE"),
                    PretestStatus::Inconclusive => {
                        println!("INCONCLUSIVE {}", reason_text(verdict.reason.as_ref()))
                    }
                },
                Format::Json => {
                    let witness = verdict
                        .witness
                        .as_ref()
                        .map(|w| w.ks().iter().map(json::biguint_to_json).collect::<Vec<_>>());
                    println!(
                        "{}",
                        serde_json::json!({
                            "status": match verdict.status {
                                PretestStatus::AbsolutelyIrreducible => "ABSOLUTELY_IRREDUCIBLE",
                                PretestStatus::Inconclusive => "INCONCLUSIVE",
                            },
                            "reason": verdict.reason.as_ref().map(|r| reason_text(Some(r))),
                            "witness": witness,
                            "seed": seed,
                        })
                    );
                }
            }
        }
        Cmd::Project { input, proj } => {
            let value = parse_value(&read_input(&input)?)?;
            let cloud = cloud_from_document(&value)?;
            let (cfg, seed) = proj.config();
            let verdict = polytope_decomp(&cloud, &cfg);
            match cli.format {
                Format::Text => {
                    println!(
                        "{} seed={seed}",
                        if verdict.is_indecomposable() {
                            "INDECOMPOSABLE"
                        } else {
                            "FAILURE"
                        }
                    );
                    for t in verdict.trials() {
                        eprintln!("trial: {}", json::outcome_str(&t.outcome));
                    }
                }
                Format::Json => println!("{}", project_report(&verdict, seed)),
            }
        }
        Cmd::Factors { poly, limit } => {
            let f = load_poly(&poly)?;
            for cand in candidate_factor_supports(&f, limit)? {
                println!(
                    "{}",
                    serde_json::json!({
                        "q_points": cand.q_points.iter().map(json::point_to_json).collect::<Vec<_>>(),
                        "r_points": cand.r_points.iter().map(json::point_to_json).collect::<Vec<_>>(),
                    })
                );
            }
        }
        Cmd::Gen { what } => {
            let es = match what {
                GenCmd::Partition { list } => {
                    let inst = PartitionInstance::new(list).ok_or_else(|| {
                        CliError::Parse("partition entries must be positive".into())
                    })?;
                    partition_to_polygon(&inst)
                        .map_err(|e| CliError::Geometry(e.to_string()))?
                }
                GenCmd::Twopow { m } => {
                    if m == 0 {
                        return Err(CliError::Parse("m must be at least 1".into()));
                    }
                    twopow_family(m)
                }
                GenCmd::Rectangle { n, m } => {
                    if n == 0 || m == 0 {
                        return Err(CliError::Parse("sides must be at least 1".into()));
                    }
                    rectangle(n, m)
                }
            };
            emit_edge_sequence(&es, cli.format);
        }
    }
    Ok(())
}

fn reason_text(r: Option<&InconclusiveReason>) -> String {
    match r {
        Some(InconclusiveReason::VariableFactor(v)) => format!("variable-factor {v}"),
        Some(InconclusiveReason::PolytopeDecomposable) => "polytope-decomposable".into(),
        Some(InconclusiveReason::ProjectionFailure) => "projection-failure".into(),
        Some(InconclusiveReason::TooFewTerms) => "too-few-terms".into(),
        None => "unknown".into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error, exit 1.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Geometry(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
