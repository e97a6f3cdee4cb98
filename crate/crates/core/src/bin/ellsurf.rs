//! Command-line front end: JSON in, JSON (or a plain table) out, exact
//! numbers only. Exit codes: 0 success, 2 bad input, 3 a checked bound was
//! violated — the latter lets CI tell a math regression from a typo.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ellsurf::corpus::{self, CorpusSummary};
use ellsurf::height::HeightNorm;
use ellsurf::integrality::{DivisorSpec, IntegralityConfig};
use ellsurf::point::MWPoint;
use ellsurf::report::{
    points_from_json, AnalyzeReport, HeightReport, IntegralReport, SunitReport, VAR,
};
use ellsurf::search::enumerate_integral;
use ellsurf::sunit::{solve, UnitEquationInstance};
use ellsurf::surface::Surface;
use ellsurf::weierstrass::Model;
use ellsurf::{Error, Place, Rat, Result};

#[derive(Parser)]
#[command(name = "ellsurf", version, about = "Exact arithmetic for elliptic surfaces over Q(t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for corpus verification (0 = one per core).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every fiber and report the global invariants.
    Analyze {
        /// Curve file: JSON object with Weierstrass coefficients a1..a6.
        #[arg(long)]
        curve: PathBuf,
    },
    /// Canonical height of a section, with its full decomposition.
    Height {
        #[arg(long)]
        curve: PathBuf,
        /// The section: "O" or ["x","y"], inline JSON or @file.
        #[arg(long)]
        point: String,
        /// neron-tate (default) or shioda (twice the value).
        #[arg(long, default_value = "neron-tate")]
        height_norm: String,
    },
    /// Enumerate all integral sections under the height cap.
    Integral {
        #[arg(long)]
        curve: PathBuf,
        /// Allowed places, e.g. "(t),(t-1),inf". Empty means strict
        /// integrality.
        #[arg(long, default_value = "")]
        s: String,
        /// Independent sections generating the searched subgroup: JSON
        /// array of points, inline or @file.
        #[arg(long, default_value = "[]")]
        basis: String,
        /// Torsion sections to translate by, same syntax.
        #[arg(long, default_value = "[]")]
        torsion: String,
        /// "zero" for the zero section (default), or a JSON array of
        /// points for a union of sections.
        #[arg(long, default_value = "zero")]
        divisor: String,
        #[arg(long, default_value = "neron-tate")]
        height_norm: String,
        /// Search cap as an exact rational, replacing the default
        /// 25*chi + 6*genus + 2*s.
        #[arg(long)]
        bound_override: Option<String>,
    },
    /// Solve the unit equation x + y = 1 in S-units.
    Sunit {
        /// The set S, e.g. "(t),(t-1),inf".
        #[arg(long)]
        places: String,
    },
    /// Evaluate one explicit bound formula by identifier.
    Bounds {
        formula_id: String,
        /// Named integer arguments, e.g. "d=4,g=0,t=3".
        #[arg(long, default_value = "")]
        args: String,
    },
    /// Re-run every corpus entry against its frozen expectations.
    VerifyCorpus {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    });
}

/// Inline value or @file indirection for point-list style flags.
fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(s.to_string()),
    }
}

fn load_surface(path: &Path) -> Result<Surface> {
    let text = std::fs::read_to_string(path)?;
    Surface::analyze(&Model::from_json(&text, VAR)?)
}

fn parse_rat(s: &str) -> Result<Rat> {
    s.parse()
        .map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
}

fn emit<T: serde::Serialize>(format: Format, value: &T, table: String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Table => print!("{table}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Analyze { curve } => {
            let surface = load_surface(curve)?;
            let report = AnalyzeReport::build(&surface);
            emit(cli.format, &report, analyze_table(&report))?;
            Ok(0)
        }
        Command::Height {
            curve,
            point,
            height_norm,
        } => {
            let surface = load_surface(curve)?;
            let p = MWPoint::from_json(&read_arg(point)?, VAR)?;
            let norm = HeightNorm::parse(height_norm)?;
            let report = HeightReport::build(&surface, &p, norm)?;
            emit(cli.format, &report, height_table(&report))?;
            Ok(0)
        }
        Command::Integral {
            curve,
            s,
            basis,
            torsion,
            divisor,
            height_norm,
            bound_override,
        } => {
            let surface = load_surface(curve)?;
            let norm = HeightNorm::parse(height_norm)?;
            let s = Place::parse_list(&read_arg(s)?)?;
            let divisor = match read_arg(divisor)?.trim() {
                "zero" | "zero-section" => DivisorSpec::ZeroSection,
                text => DivisorSpec::PointUnion(points_from_json(text, VAR)?),
            };
            let config = IntegralityConfig::new(s, divisor);
            let basis = points_from_json(&read_arg(basis)?, VAR)?;
            let torsion = points_from_json(&read_arg(torsion)?, VAR)?;
            let bound = bound_override.as_deref().map(parse_rat).transpose()?;
            let search = enumerate_integral(&surface, &config, &basis, &torsion, bound.as_ref())?;
            let report = IntegralReport::build(&config, &search, norm);
            emit(cli.format, &report, integral_table(&report))?;
            Ok(if report.heights_within_bound { 0 } else { 3 })
        }
        Command::Sunit { places } => {
            let instance = UnitEquationInstance::new(Place::parse_list(&read_arg(places)?)?);
            let set = solve(&instance)?;
            let report = SunitReport::build(&instance, &set);
            emit(cli.format, &report, sunit_table(&report))?;
            Ok(if report.within_count_cap { 0 } else { 3 })
        }
        Command::Bounds { formula_id, args } => {
            let args = parse_named_args(args)?;
            let report = ellsurf::bounds::evaluate(formula_id, &args)?;
            let table = format!(
                "{} {:?} = {}\n  formula: {}\n",
                report.formula_id, report.inputs, report.value, report.formula
            );
            emit(cli.format, &report, table)?;
            Ok(0)
        }
        Command::VerifyCorpus { dir } => {
            let entries = corpus::load_dir(dir)?;
            let checks: Vec<_> = pool(cli.jobs)?.install(|| {
                entries
                    .par_iter()
                    .map(corpus::verify_entry)
                    .collect::<Vec<_>>()
            });
            // aggregation is sequential and in corpus order, so output
            // bytes do not depend on scheduling
            let mut summary = corpus::verify_corpus(&[]);
            summary.entries = entries.len();
            summary.checks = checks.into_iter().flatten().collect();
            summary.failures = summary.checks.iter().filter(|c| !c.pass).count();
            summary.pass = summary.failures == 0;
            summary.warning = if entries.is_empty() {
                Some("corpus is empty; nothing was actually verified".to_string())
            } else {
                None
            };
            emit(cli.format, &summary, corpus_table(&summary))?;
            Ok(if summary.pass { 0 } else { 3 })
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parse(format!("worker pool: {e}")))
}

fn parse_named_args(spec: &str) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("argument {part:?} is not key=value")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("argument {part:?}: {e}")))?;
        out.insert(key.trim().to_string(), value);
    }
    Ok(out)
}

fn analyze_table(r: &AnalyzeReport) -> String {
    let mut out = format!(
        "chi {}  euler {}  genus {}  deg(L) {}  #T {}\nrank bounds: picard {} shioda-tate {} combined {}\n",
        r.chi, r.euler, r.genus, r.fundamental_line_degree, r.t_weighted,
        r.rank_bounds.picard, r.rank_bounds.shioda_tate, r.rank_bounds.combined
    );
    out.push_str("place  degree  kodaira  v(delta)  f  components\n");
    for f in &r.bad_places {
        out.push_str(&format!(
            "{}  {}  {}  {}  {}  {}\n",
            f.place, f.degree, f.kodaira, f.delta_valuation, f.conductor_exponent,
            f.component_count
        ));
    }
    out
}

fn height_table(r: &HeightReport) -> String {
    let mut out = format!(
        "point {}\nheight ({}) = {}\n(P).(O) = {}  chi = {}\n",
        r.point, r.normalization, r.value, r.intersection_with_zero, r.chi
    );
    if !r.meeting_places.is_empty() {
        out.push_str(&format!("meets zero section over: {}\n", r.meeting_places.join(", ")));
    }
    for (place, c) in &r.local_corrections {
        out.push_str(&format!("correction at {place}: {c}\n"));
    }
    out
}

fn integral_table(r: &IntegralReport) -> String {
    let mut out = format!(
        "S = [{}] (weight {})  bound ({}) = {}  found {}  exhaustive {}  within bound {}\n",
        r.s.join(", "),
        r.s_weighted,
        r.normalization,
        r.height_bound,
        r.count,
        r.exhaustive,
        r.heights_within_bound
    );
    for p in &r.points {
        out.push_str(&format!(
            "{}  height {}  meets [{}]\n",
            p.point,
            p.height,
            p.meeting_places.join(", ")
        ));
    }
    out
}

fn sunit_table(r: &SunitReport) -> String {
    let mut out = format!(
        "S = [{}]  degree bound {}  nontrivial {} ({} unordered)  trivial families {}  cap {}  within cap {}\n",
        r.places.join(", "),
        r.degree_bound,
        r.nontrivial_count,
        r.unordered_count,
        r.trivial_families,
        r.count_cap,
        r.within_count_cap
    );
    for s in &r.solutions {
        out.push_str(&format!("x = {}   y = {}\n", s.x, s.y));
    }
    out
}

fn corpus_table(s: &CorpusSummary) -> String {
    let mut out = String::new();
    for c in &s.checks {
        out.push_str(&format!(
            "[{}] {} {} {}: expected {} got {}\n",
            if c.pass { "pass" } else { "FAIL" },
            c.entry,
            c.check,
            c.detail,
            c.expected,
            c.got
        ));
    }
    out.push_str(&format!(
        "{} entries, {} checks, {} failures: {}\n",
        s.entries,
        s.checks.len(),
        s.failures,
        if s.pass { "pass" } else { "FAIL" }
    ));
    if let Some(w) = &s.warning {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}
