//! `cyclegap`: build, check and analyse cubic plane graphs from the command line.
//!
//! Every invocation prints one JSON report on stdout. Exit codes: 0 success,
//! 1 a verification or transcription gate failed, 2 usage or budget error,
//! 3 unreadable or malformed input.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cyclegap::gadget::data;
use cyclegap::gadget::family::validate_base;
use cyclegap::io::{self, FormatError, FormatTag};
use cyclegap::spectrum::{gap_scan_with, merker_interval_check_with, MAX_UNFORCED_BUDGET};
use cyclegap::{
    build_counterexample, three_connectivity, FamilyParams, Gadget, GadgetError, PlaneGraph, SpectrumError,
    SpectrumOptions, Transcription, TranscriptionKind,
};
use serde_json::{json, Value};

use report::{digest, Failure, Report};

/// Directory holding `<kind>_<param>.gadget` files that replace the shipped ones.
const DATA_DIR_VAR: &str = "CYCLEGAP_DATA_DIR";

#[derive(Parser)]
#[command(name = "cyclegap", version, about = "Cycle-spectrum gaps in cubic plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build G(r, t) and write it to a file.
    Generate {
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "t", conflicts_with = "t_min", required_unless_present = "t_min")]
        t: Option<usize>,
        /// Use the smallest admissible t.
        #[arg(long = "t-min")]
        t_min: bool,
        #[arg(long, default_value = "planar_code")]
        format: FormatTag,
        /// Defaults to `G_r<r>_t<t>.<ext>` in the current directory.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Structural checks, plus the interval test at `k` or a gap scan.
    Check {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Gap scan budget when no `--k` is given.
        #[arg(long, default_value_t = 16)]
        upto: usize,
        #[arg(long)]
        force: bool,
        /// Input format; guessed from the extension by default.
        #[arg(long)]
        format: Option<FormatTag>,
    },
    /// Cycle lengths up to a budget and the gaps between them.
    Spectrum {
        input: PathBuf,
        #[arg(long)]
        upto: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        format: Option<FormatTag>,
    },
    /// Run the gates on a gadget or base graph transcription.
    GadgetValidate {
        kind: TranscriptionKind,
        /// Rungs for A and B, periodic units for H.
        param: usize,
        /// Validate this file instead of the shipped transcription.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let report = match cli.command {
        Command::Generate { r, t, t_min, format, output } => generate(command, r, t, t_min, format, output),
        Command::Check { input, k, upto, force, format } => check(command, &input, k, upto, force, format),
        Command::Spectrum { input, upto, force, format } => spectrum(command, &input, upto, force, format),
        Command::GadgetValidate { kind, param, file } => gadget_validate(command, kind, param, file),
    };
    report.emit()
}

fn options(force: bool) -> SpectrumOptions {
    SpectrumOptions { force, threads: None }
}

fn gadget_failure(e: GadgetError) -> Failure {
    match e {
        GadgetError::TranscriptionInvalid { .. } => Failure::verification(e),
        GadgetError::BoundaryTooShort { .. } | GadgetError::InvalidParams(_) | GadgetError::InvalidOffset(_) => {
            Failure::usage(e)
        }
        GadgetError::Transcription(_) | GadgetError::DataFile { .. } => Failure::input(e),
        other => Failure::verification(other),
    }
}

fn spectrum_failure(e: SpectrumError) -> Failure {
    match e {
        SpectrumError::BudgetTooLarge { .. }
        | SpectrumError::BudgetTooSmall(_)
        | SpectrumError::GraphTooLarge { .. }
        | SpectrumError::InvalidK(_) => Failure::usage(e),
        other => Failure::verification(other),
    }
}

fn generate(
    command: Vec<String>,
    r: usize,
    t: Option<usize>,
    t_min: bool,
    format: FormatTag,
    output: Option<PathBuf>,
) -> Report {
    let report = Report::new(command, digest(format!("generate r={r} t={t:?} t_min={t_min} format={format}")));
    let params = match (t, t_min) {
        (Some(0), _) => return report.fail(Failure::usage("t must be at least 1")),
        (Some(t), _) => FamilyParams::new(r, t),
        _ => FamilyParams::with_t_min(r),
    };
    let params = match params {
        Ok(p) => p,
        Err(e) => return report.fail(gadget_failure(e)),
    };
    let g = match build_counterexample(params) {
        Ok(g) => g,
        Err(e) => return report.fail(gadget_failure(e)),
    };
    let bytes = match io::write(&g, format) {
        Ok(b) => b,
        Err(e) => return report.fail(Failure::usage(e)),
    };
    let path = output.unwrap_or_else(|| PathBuf::from(format!("G_r{r}_t{}.{}", params.t, extension(format))));
    if let Err(e) = std::fs::write(&path, &bytes) {
        return report.fail(Failure::input(format!("cannot write {}: {e}", path.display())));
    }
    let boundary = cyclegap::base_graph_h(params.t).map(|h| h.boundary_lengths).ok();
    report.ok(json!({
        "r": params.r,
        "t": params.t,
        "k": params.k(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "gap_interval": params.gap_interval(),
        "boundary_lengths": boundary,
        "format": format,
        "output": path.display().to_string(),
        "output_digest": digest(&bytes),
    }))
}

fn extension(format: FormatTag) -> &'static str {
    match format {
        FormatTag::PlanarCode => "pc",
        FormatTag::Graph6 => "g6",
        FormatTag::Transcription => "gadget",
        FormatTag::Dot => "dot",
    }
}

fn load(path: &Path, format: Option<FormatTag>) -> Result<(Vec<u8>, Vec<PlaneGraph>), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let format = format.or_else(|| FormatTag::from_path(path)).unwrap_or(FormatTag::PlanarCode);
    let graphs = io::read(&bytes, format).map_err(|e: FormatError| Failure::input(e))?;
    if graphs.is_empty() {
        return Err(Failure::input("input holds no graph"));
    }
    Ok((bytes, graphs))
}

fn check(
    command: Vec<String>,
    input: &Path,
    k: Option<usize>,
    upto: usize,
    force: bool,
    format: Option<FormatTag>,
) -> Report {
    let (bytes, graphs) = match load(input, format) {
        Ok(x) => x,
        Err(f) => return Report::new(command, None).fail(f),
    };
    let report = Report::new(command, digest(&bytes));
    let opts = options(force);
    let mut results = Vec::new();
    let mut all_pass = true;
    for g in &graphs {
        let cubic = g.is_cubic();
        let planar = g.has_embedding().then(|| g.euler_planarity_check());
        let cut = three_connectivity(g).ok();
        let three_connected = cut.as_ref().is_some_and(|c| c.is_three_connected());
        let pass = cubic && planar != Some(false) && three_connected;
        all_pass &= pass;
        let mut entry = json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "cubic": cubic,
            "planar": planar,
            "three_connected": three_connected,
            "cut": cut,
            "verdict": if pass { "pass" } else { "fail" },
        });
        match k {
            Some(k) => match merker_interval_check_with(g, k, &opts) {
                Ok(holds) => {
                    entry["k"] = json!(k);
                    entry["merker_holds"] = json!(holds);
                    if !holds {
                        entry["message"] = json!(format!("VIOLATION at k={k}"));
                    }
                }
                Err(SpectrumError::CircumferenceTooSmall { k }) => {
                    entry["k"] = json!(k);
                    entry["merker_holds"] = Value::Null;
                    entry["message"] = json!(format!("circumference below {k} not excluded; test does not apply"));
                }
                Err(e) => return report.fail(spectrum_failure(e)),
            },
            None => match gap_scan_with(g, upto, &opts) {
                Ok(gaps) => entry["gap_scan"] = json!(gaps),
                Err(e) => return report.fail(spectrum_failure(e)),
            },
        }
        results.push(entry);
    }
    let results = json!({ "graphs": results });
    if all_pass {
        report.ok(results)
    } else {
        report.fail_with(results, Failure::verification("a graph is not cubic, plane and 3-connected"))
    }
}

fn spectrum(command: Vec<String>, input: &Path, upto: usize, force: bool, format: Option<FormatTag>) -> Report {
    let (bytes, graphs) = match load(input, format) {
        Ok(x) => x,
        Err(f) => return Report::new(command, None).fail(f),
    };
    let report = Report::new(command, digest(&bytes));
    if upto > MAX_UNFORCED_BUDGET && !force {
        return report.fail(spectrum_failure(SpectrumError::BudgetTooLarge { budget: upto }));
    }
    let mut results = Vec::new();
    for g in &graphs {
        match gap_scan_with(g, upto, &options(force)) {
            Ok(gaps) => results.push(json!({
                "vertices": g.vertex_count(),
                "upto": upto,
                "lengths": gaps.spectrum.lengths,
                "gaps": gaps.intervals,
                "merker_violations": gaps.merker_violations,
            })),
            Err(e) => return report.fail(spectrum_failure(e)),
        }
    }
    report.ok(json!({ "graphs": results }))
}

fn gadget_validate(command: Vec<String>, kind: TranscriptionKind, param: usize, file: Option<PathBuf>) -> Report {
    let dir = std::env::var_os(DATA_DIR_VAR).map(PathBuf::from);
    let (source, text) = match (&file, &dir) {
        (Some(path), _) => match std::fs::read_to_string(path) {
            Ok(text) => (path.display().to_string(), text),
            Err(e) => {
                return Report::new(command, None).fail(Failure::input(format!("cannot read {}: {e}", path.display())))
            }
        },
        (None, Some(dir)) => match data::load_from_dir(dir, kind, param) {
            Ok(t) => (dir.display().to_string(), t.to_string()),
            Err(e) => return Report::new(command, None).fail(gadget_failure(e)),
        },
        (None, None) => match data::transcription(kind, param) {
            Ok(t) => {
                let src = if data::shipped_text(kind, param).is_some() { "shipped" } else { "generated" };
                (src.to_string(), t.to_string())
            }
            Err(e) => return Report::new(command, None).fail(gadget_failure(e)),
        },
    };
    let report = Report::new(command, digest(&text));
    let t = match Transcription::parse(&text) {
        Ok(t) => t,
        Err(e) => return report.fail(Failure::input(e)),
    };
    if t.kind != kind || t.rungs != param {
        return report
            .fail(Failure::verification(format!("transcription is {}_{}, expected {kind}_{param}", t.kind, t.rungs)));
    }
    if kind == TranscriptionKind::H {
        return match validate_base(&t) {
            Ok(h) => {
                let (black, white) = h.color_counts();
                report.ok(json!({
                    "kind": kind,
                    "t": param,
                    "source": source,
                    "vertices": h.graph.vertex_count(),
                    "black": black,
                    "white": white,
                    "boundary_lengths": h.boundary_lengths,
                    "verdict": "pass",
                }))
            }
            Err(e) => report.fail(gadget_failure(e)),
        };
    }
    match Gadget::from_transcription(t) {
        Ok(g) => report.ok(json!({
            "kind": kind,
            "rungs": param,
            "source": source,
            "vertices": g.vertex_count(),
            "circumference": g.circumference(),
            "expected_circumference": Gadget::expected_circumference(g.kind(), param),
            "ports": g.ports(),
            "port_distances": g.port_distances(),
            "verdict": "pass",
        })),
        Err(e) => report.fail(gadget_failure(e)),
    }
}
