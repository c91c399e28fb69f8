use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mcc_core::arrangement::Arrangement;
use mcc_core::cover::{greedy_cover_with, piece_inside, verify_cover, CoverOptions, Violation};
use mcc_core::exact_geom::ConvexPolygon;
use mcc_core::oracle::{exact_min_restricted_cover, sample_inscribed_convex, CandidateFamily, DEFAULT_NODE_CAP};
use mcc_core::rotten::{good_area, rotten_potato_peel, RottenSet};
use mcc_core::{Point, PolygonWithHoles, Rational};
use serde::Serialize;

use crate::io::{
    emit, format_fraction, parse_rational, points_to_ring, read_json, ring_to_points, to_json, Algorithm,
    InstanceFile, Metadata, RottenFile, SolutionFile,
};
use crate::{svg, CliError};

/// Largest cover the `--oracle` check searches for.
const ORACLE_SIZE_CAP: usize = 8;
const ORACLE_SAMPLES: usize = 50;

/// Approximate minimum convex cover and rotten potato peeling.
///
/// Exit status: 0 on success, 2 on unreadable or invalid input, 3 when a
/// solution fails verification.
#[derive(Debug, Parser)]
#[command(name = "mcc", version)]
pub struct Cli {
    /// Worker threads for per-vertex work (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cover a polygon with convex pieces.
    Cover(CoverArgs),
    /// Find a large convex polygon avoiding rotten regions.
    Peel(PeelArgs),
    /// Check a solution against its instance.
    Verify(VerifyArgs),
    /// Print arrangement sizes as JSON.
    Stats(StatsArgs),
    /// Draw an instance, and optionally a solution, as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    pub instance: PathBuf,
    /// Output file (default: stdout).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Greedy rounds before falling back to a triangulation (default: vertex count).
    #[arg(long)]
    pub max_iters: Option<usize>,
    /// Record wall time in the metadata (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct PeelArgs {
    pub instance: PathBuf,
    /// JSON file with `{"regions": [...]}`.
    #[arg(long)]
    pub rotten: Option<PathBuf>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    pub solution: PathBuf,
    /// Also run brute-force cross-checks (small instances only).
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub instance: PathBuf,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub instance: PathBuf,
    #[arg(long)]
    pub solution: Option<PathBuf>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Overlay the extension segments and their intersection points.
    #[arg(long)]
    pub show_arrangement: bool,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Input(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Cover(a) => cover(&a),
        Command::Peel(a) => peel(&a),
        Command::Verify(a) => verify(&a),
        Command::Stats(a) => stats(&a),
        Command::Render(a) => render(&a),
    }
}

fn load_instance(path: &Path) -> Result<(InstanceFile, PolygonWithHoles), CliError> {
    let inst: InstanceFile = read_json(path)?;
    let poly = inst.polygon()?;
    Ok((inst, poly))
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<u64> {
    timing.then(|| start.elapsed().as_millis() as u64)
}

pub fn cover(args: &CoverArgs) -> Result<(), CliError> {
    let (inst, poly) = load_instance(&args.instance)?;
    let start = Instant::now();
    let sol = greedy_cover_with(&poly, CoverOptions { max_iters: args.max_iters })
        .map_err(|e| CliError::Verification(format!("cover failed: {e}")))?;
    let wall_time_ms = elapsed_ms(start, args.timing);
    let rings: Vec<Vec<Point>> = sol.pieces.iter().map(|q| q.ring().to_vec()).collect();
    let file = SolutionFile {
        instance: inst.name.clone(),
        algorithm: if sol.fallback_used { Algorithm::Triangulation } else { Algorithm::GreedyCover },
        polygons: rings.iter().map(|r| points_to_ring(r)).collect(),
        metadata: Metadata {
            iterations: sol.iterations,
            gains: sol.per_iteration_gain.clone(),
            wall_time_ms,
            ..Metadata::default()
        },
    };
    emit(args.out.as_deref(), &to_json(&file))?;
    let arr = Arrangement::new(&poly);
    let report = verify_cover(&poly, &arr, &rings);
    if !report.is_valid() {
        return Err(CliError::Verification(describe(&report.violations).join("; ")));
    }
    Ok(())
}

fn load_rotten(poly: &PolygonWithHoles, regions: &[crate::io::Ring]) -> Result<RottenSet<Rational>, CliError> {
    RottenSet::new(poly, regions.iter().map(ring_to_points).collect()).map_err(|e| CliError::Input(e.to_string()))
}

pub fn peel(args: &PeelArgs) -> Result<(), CliError> {
    let (inst, poly) = load_instance(&args.instance)?;
    let regions = match &args.rotten {
        Some(p) => read_json::<RottenFile>(p)?.regions,
        None => Vec::new(),
    };
    let rotten = load_rotten(&poly, &regions)?;
    let start = Instant::now();
    let sol = rotten_potato_peel(&poly, &rotten).map_err(|e| CliError::Verification(format!("peel failed: {e}")))?;
    let wall_time_ms = elapsed_ms(start, args.timing);
    let file = SolutionFile {
        instance: inst.name.clone(),
        algorithm: Algorithm::RottenPeel,
        polygons: vec![points_to_ring(sol.polygon.ring())],
        metadata: Metadata {
            iterations: 1,
            gains: Vec::new(),
            value: Some(format_fraction(&sol.value)),
            rotten: (!regions.is_empty()).then_some(regions),
            wall_time_ms,
        },
    };
    emit(args.out.as_deref(), &to_json(&file))?;
    if sol.value != good_area(&sol.polygon, &rotten) {
        return Err(CliError::Verification("reported value differs from recomputed good area".into()));
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    valid: bool,
    algorithm: Algorithm,
    pieces: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    faces: Option<usize>,
    violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

#[derive(Debug, Default, Serialize)]
struct OracleReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    opt_restricted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    greedy_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    best_sample_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quarter_bound_violations: Option<usize>,
}

fn describe(violations: &[Violation<Rational>]) -> Vec<String> {
    violations
        .iter()
        .map(|v| match v {
            Violation::NotConvex { piece } => format!("piece {piece} is not a convex CCW polygon"),
            Violation::OutsidePolygon { piece } => format!("piece {piece} is not contained in the polygon"),
            Violation::UncoveredFace { face, rep } => format!("face {face} near {rep} is not covered"),
        })
        .collect()
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let (inst, poly) = load_instance(&args.instance)?;
    let sol: SolutionFile = read_json(&args.solution)?;
    if sol.instance != inst.name {
        eprintln!("warning: solution is for {:?}, instance is {:?}", sol.instance, inst.name);
    }
    let rings: Vec<Vec<Point>> = sol.polygons.iter().map(ring_to_points).collect();
    let report = match sol.algorithm {
        Algorithm::GreedyCover | Algorithm::Triangulation => verify_cover_file(&poly, &rings, &sol, args.oracle),
        Algorithm::RottenPeel => verify_peel_file(&poly, &rings, &sol, args.oracle)?,
    };
    print!("{}", to_json(&report));
    if report.valid {
        Ok(())
    } else {
        Err(CliError::Verification(report.violations.join("; ")))
    }
}

fn verify_cover_file(poly: &PolygonWithHoles, rings: &[Vec<Point>], sol: &SolutionFile, oracle: bool) -> VerifyReport {
    let arr = Arrangement::new(poly);
    let report = verify_cover(poly, &arr, rings);
    let oracle = oracle.then(|| {
        let family = match CandidateFamily::build(poly, &arr, DEFAULT_NODE_CAP) {
            Ok(f) => f,
            Err(e) => return OracleReport { skipped: Some(e.to_string()), ..OracleReport::default() },
        };
        match exact_min_restricted_cover(&family, ORACLE_SIZE_CAP) {
            Ok(opt) => OracleReport {
                opt_restricted: Some(opt),
                greedy_ratio: Some(rings.len() as f64 / opt as f64),
                ratio_bound: Some((arr.faces.len() as f64).ln() + 1.0),
                ..OracleReport::default()
            },
            Err(e) => OracleReport { skipped: Some(e.to_string()), ..OracleReport::default() },
        }
    });
    VerifyReport {
        valid: report.is_valid(),
        algorithm: sol.algorithm,
        pieces: rings.len(),
        faces: Some(report.faces),
        violations: describe(&report.violations),
        oracle,
    }
}

fn verify_peel_file(
    poly: &PolygonWithHoles,
    rings: &[Vec<Point>],
    sol: &SolutionFile,
    oracle: bool,
) -> Result<VerifyReport, CliError> {
    let rotten = load_rotten(poly, sol.metadata.rotten.as_deref().unwrap_or(&[]))?;
    let mut violations = Vec::new();
    let mut value = None;
    if rings.len() != 1 {
        violations.push(format!("expected 1 polygon, found {}", rings.len()));
    }
    if let Some(ring) = rings.first() {
        match ConvexPolygon::new(ring.clone()) {
            Ok(q) => {
                if !piece_inside(poly, &q) {
                    violations.push("piece 0 is not contained in the polygon".into());
                }
                let good = good_area(&q, &rotten);
                match sol.metadata.value.as_deref().map(parse_rational) {
                    Some(Ok(v)) if v == good => {}
                    Some(Ok(v)) => violations.push(format!(
                        "reported value {} differs from recomputed {}",
                        format_fraction(&v),
                        format_fraction(&good)
                    )),
                    Some(Err(e)) => violations.push(format!("unreadable value: {e}")),
                    None => violations.push("missing value".into()),
                }
                value = Some(good);
            }
            Err(_) => violations.push("piece 0 is not a convex CCW polygon".into()),
        }
    }
    let oracle = match (oracle, value) {
        (true, Some(v)) => {
            let samples = sample_inscribed_convex(poly, 0, ORACLE_SAMPLES);
            let goods: Vec<Rational> = samples.iter().map(|q| good_area(q, &rotten)).collect();
            let quarter = Rational::new(1.into(), 4.into());
            let bad = goods.iter().filter(|g| v < quarter.clone() * (*g).clone()).count();
            if bad > 0 {
                violations.push(format!("{bad} sampled polygons beat four times the value"));
            }
            Some(OracleReport {
                samples: Some(samples.len()),
                best_sample_value: goods.iter().max().map(format_fraction),
                quarter_bound_violations: Some(bad),
                ..OracleReport::default()
            })
        }
        _ => None,
    };
    Ok(VerifyReport {
        valid: violations.is_empty(),
        algorithm: sol.algorithm,
        pieces: rings.len(),
        faces: None,
        violations,
        oracle,
    })
}

#[derive(Debug, Serialize)]
struct Stats {
    #[serde(rename = "D")]
    extensions: usize,
    #[serde(rename = "V_D")]
    vertices: usize,
    #[serde(rename = "U")]
    faces: usize,
}

pub fn stats(args: &StatsArgs) -> Result<(), CliError> {
    let (_, poly) = load_instance(&args.instance)?;
    let s = Arrangement::new(&poly).stats();
    let out = Stats { extensions: s.extensions, vertices: s.vertices, faces: s.faces };
    println!("{}", serde_json::to_string(&out).expect("serializable"));
    Ok(())
}

pub fn render(args: &RenderArgs) -> Result<(), CliError> {
    let (_, poly) = load_instance(&args.instance)?;
    let pieces: Vec<Vec<Point>> = match &args.solution {
        Some(p) => read_json::<SolutionFile>(p)?.polygons.iter().map(ring_to_points).collect(),
        None => Vec::new(),
    };
    let arr = args.show_arrangement.then(|| Arrangement::new(&poly));
    emit(args.out.as_deref(), &svg::render(&poly, &pieces, arr.as_ref()))
}
