//! Command-line surface: verify the stored catalog, intersect lattice files,
//! analyze honeycombs, quantize exact points, slice 3-D honeycombs to SVG,
//! re-render saved reports, and amalgamate cell classes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use intersectq::catalog;
use intersectq::exactmath::{parse_rat, parse_scalar, QuadElem, Rat};
use intersectq::honeycomb::{
    amalgamate, analyze, plane_slice, render_svg, HoneycombAnalysis, HoneycombFamily, Window,
    DEFAULT_CELL_BUDGET,
};
use intersectq::lattice::{Lattice, LatticeFile};
use intersectq::mcverify::{corroborate, McConfig};
use intersectq::quantize::MDQuantizer;

#[derive(Parser)]
#[command(name = "intersectq", version, about = "Exact lattice-intersection toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every stored catalog claim and report pass/warn/fail.
    CatalogVerify,
    /// Intersect the lattices in the given files; prints a lattice file.
    Intersect {
        /// Lattice files (JSON), at least two.
        files: Vec<PathBuf>,
    },
    /// Analyze the honeycomb of a catalog entry or of component lattice files.
    Analyze {
        /// Catalog name, or one or more lattice file paths.
        inputs: Vec<String>,
        /// Corroborate the exact statistics with this many Monte Carlo samples.
        #[arg(long)]
        mc_samples: Option<u64>,
        /// Seed for the Monte Carlo run.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Abort if the cell enumeration exceeds this many cells.
        #[arg(long, default_value_t = DEFAULT_CELL_BUDGET)]
        budget: usize,
    },
    /// Quantize an exact point with every component of a catalog entry.
    Quantize {
        name: String,
        /// Comma-separated exact coordinates, e.g. "1,1/10,1/10,1/10".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Slice a 3-D honeycomb with a horizontal plane; prints SVG.
    Slice {
        name: String,
        /// Plane, e.g. "z=0" or "z=7/20".
        #[arg(long, allow_hyphen_values = true)]
        plane: String,
        /// Window "x0,x1,y0,y1" (default -6,6,-6,6).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Re-render a saved JSON report.
    Report {
        #[arg(long, value_enum)]
        format: Format,
        /// Report file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Merge two adjacent cell classes and report the amalgamated honeycomb.
    Amalgamate {
        name: String,
        /// Two 1-based class indices, e.g. "3,4".
        #[arg(long)]
        merge: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a catalog entry in the lattice file format.
    Dump { name: String },
}

enum CliError {
    Usage(String),
    Verify(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    // clap itself exits with code 2 on bad flags, matching our usage errors.
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("INTERSECTQ_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verify(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::CatalogVerify => catalog_verify(),
        Command::Intersect { files } => intersect(&files),
        Command::Analyze { inputs, mc_samples, seed, format, budget } => {
            analyze_cmd(&inputs, mc_samples, seed, format, budget)
        }
        Command::Quantize { name, point } => quantize_cmd(&name, &point),
        Command::Slice { name, plane, window } => slice_cmd(&name, &plane, window.as_deref()),
        Command::Report { format, input } => report_cmd(format, input.as_deref()),
        Command::Amalgamate { name, merge, format } => amalgamate_cmd(&name, &merge, format),
        Command::Dump { name } => {
            let d = catalog::dump(&name).map_err(CliError::usage)?;
            println!("{}", serde_json::to_string_pretty(&d).expect("serializable dump"));
            Ok(())
        }
    }
}

fn catalog_verify() -> Result<(), CliError> {
    let report = catalog::verify_all();
    for c in &report.checks {
        let tag = match c.status {
            catalog::CheckStatus::Pass => "PASS",
            catalog::CheckStatus::Warn => "WARN",
            catalog::CheckStatus::Fail => "FAIL",
        };
        println!("{tag}  {} — {}", c.item, c.detail);
    }
    let (pass, warn, fail) = report.counts();
    println!("summary: {pass} pass, {warn} warn, {fail} fail");
    if report.ok() {
        Ok(())
    } else {
        Err(CliError::Verify(format!("{fail} catalog check(s) failed")))
    }
}

fn read_lattice_file(path: &std::path::Path) -> Result<Lattice, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let file = LatticeFile::from_json(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    file.to_lattice().map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn intersect(files: &[PathBuf]) -> Result<(), CliError> {
    if files.len() < 2 {
        return Err(CliError::Usage("intersect needs at least two lattice files".into()));
    }
    let lats: Vec<Lattice> = files
        .iter()
        .map(|p| read_lattice_file(p))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&Lattice> = lats.iter().collect();
    let inter = Lattice::intersect(&refs).map_err(CliError::usage)?;
    println!("{}", LatticeFile::from_lattice(&inter).to_json());
    Ok(())
}

/// A catalog name, or a list of lattice files, as honeycomb components.
fn family_of(inputs: &[String]) -> Result<(String, HoneycombFamily), CliError> {
    if inputs.is_empty() {
        return Err(CliError::Usage("an input (catalog name or lattice files) is required".into()));
    }
    if inputs.len() == 1 && catalog::NAMES.contains(&inputs[0].as_str()) {
        let dec = catalog::get(&inputs[0]).map_err(CliError::usage)?;
        let family = HoneycombFamily::new(dec.component_lattices()).map_err(CliError::usage)?;
        return Ok((inputs[0].clone(), family));
    }
    let lats: Vec<Lattice> = inputs
        .iter()
        .map(|p| read_lattice_file(std::path::Path::new(p)))
        .collect::<Result<_, _>>()?;
    let family = HoneycombFamily::new(lats).map_err(CliError::usage)?;
    Ok((inputs.join(","), family))
}

fn analyzed(name: &str, budget: usize) -> Result<(HoneycombFamily, HoneycombAnalysis), CliError> {
    let (_, family) = family_of(&[name.to_string()])?;
    let analysis = analyze(&family, budget).map_err(CliError::usage)?;
    Ok((family, analysis))
}

fn analyze_cmd(
    inputs: &[String],
    mc_samples: Option<u64>,
    seed: u64,
    format: Format,
    budget: usize,
) -> Result<(), CliError> {
    let (label, family) = family_of(inputs)?;
    let analysis = analyze(&family, budget).map_err(CliError::usage)?;
    let mc = match mc_samples {
        Some(samples) => {
            let cfg = McConfig { seed, samples };
            // An orphan sample disproves the enumeration: verification failure.
            Some(corroborate(&family, &analysis, &cfg).map_err(|e| CliError::Verify(e.to_string()))?)
        }
        None => None,
    };
    let value = render::analysis_value(&label, &analysis, mc.as_ref());
    emit(&value, format)
}

fn emit(value: &serde_json::Value, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("report value")),
        Format::Text => print!("{}", render::render_text(value).map_err(CliError::usage)?),
    }
    Ok(())
}

fn parse_point(s: &str, d: u64) -> Result<Vec<QuadElem>, CliError> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    trimmed
        .split(',')
        .map(|c| parse_scalar(c, d).map_err(CliError::usage))
        .collect()
}

fn quantize_cmd(name: &str, point: &str) -> Result<(), CliError> {
    let dec = catalog::get(name).map_err(CliError::usage)?;
    let comps = dec.component_lattices();
    let x = parse_point(point, dec.field_d)?;
    if x.len() != comps[0].dim() {
        return Err(CliError::Usage(format!(
            "point has {} coordinates but {name} lives in dimension {}",
            x.len(),
            comps[0].dim()
        )));
    }
    let mdq = MDQuantizer::new(comps, 2).map_err(CliError::usage)?;
    println!("input = {}", render::point_str(&x));
    for (i, r) in mdq.md_quantize(&x).iter().enumerate() {
        println!(
            "component {}: point = {}, coeffs = ({}), dist2 = {}",
            i + 1,
            render::point_str(&r.point),
            r.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
            render::scalar_str(&r.dist2),
        );
    }
    Ok(())
}

fn parse_window(s: &str) -> Result<Window, CliError> {
    let parts: Vec<Rat> = s
        .split(',')
        .map(|p| parse_rat(p).map_err(CliError::usage))
        .collect::<Result<_, _>>()?;
    if parts.len() != 4 {
        return Err(CliError::Usage("window must be x0,x1,y0,y1".into()));
    }
    let [x0, x1, y0, y1] = parts.try_into().expect("four entries");
    Ok(Window { x0, x1, y0, y1 })
}

fn slice_cmd(name: &str, plane: &str, window: Option<&str>) -> Result<(), CliError> {
    let z = plane
        .trim()
        .strip_prefix("z=")
        .ok_or_else(|| CliError::Usage("plane must look like z=<rational>".into()))
        .and_then(|v| parse_rat(v).map_err(CliError::usage))?;
    let window = parse_window(window.unwrap_or("-6,6,-6,6"))?;
    let (family, analysis) = analyzed(name, DEFAULT_CELL_BUDGET)?;
    let polys = plane_slice(&family, &analysis, &z, &window).map_err(CliError::usage)?;
    print!("{}", render_svg(&polys, &window));
    Ok(())
}

fn report_cmd(format: Format, input: Option<&std::path::Path>) -> Result<(), CliError> {
    let text = match input {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            buf
        }
    };
    let value: serde_json::Value = serde_json::from_str(&text).map_err(CliError::usage)?;
    if value.get("schema").and_then(|v| v.as_i64()) != Some(1) {
        return Err(CliError::Usage("unsupported or missing report schema".into()));
    }
    emit(&value, format)
}

fn amalgamate_cmd(name: &str, merge: &str, format: Format) -> Result<(), CliError> {
    let (a, b) = merge
        .split_once(',')
        .ok_or_else(|| CliError::Usage("merge must be two class indices i,j".into()))?;
    let parse_class = |s: &str| {
        s.trim()
            .parse::<usize>()
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| CliError::Usage(format!("bad class index '{s}'")))
    };
    let (a, b) = (parse_class(a)?, parse_class(b)?);
    let (family, analysis) = analyzed(name, DEFAULT_CELL_BUDGET)?;
    let merged = amalgamate(&family, &analysis, a - 1, b - 1).map_err(CliError::usage)?;
    let value = render::amalgamation_value(name, &analysis, &merged);
    emit(&value, format)
}
