//! Regression corpus: curve fixtures with frozen expectations.
//!
//! Each corpus file is one curve plus a list of expected values — global
//! invariants, fiber types, heights, torsion orders, integral-section
//! counts — compared with exact equality. Every expectation carries a
//! `source` tag saying where the number comes from: `literature` for
//! values stated in published sources, `definition` for values forced by a
//! definition or an identity, `oracle` for values frozen from an
//! independent computation (and cross-checked by the property suites).
//! The verifier runs every check of every entry and aggregates; one bad
//! entry never hides another.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::height::canonical_height;
use crate::integrality::{DivisorSpec, IntegralityConfig};
use crate::place::Place;
use crate::point::MWPoint;
use crate::report::VAR;
use crate::search::enumerate_integral;
use crate::surface::Surface;
use crate::weierstrass::Model;
use crate::{Error, Result};

/// Allowed values of an expectation's `source` tag.
pub const SOURCES: &[&str] = &["literature", "definition", "oracle"];

#[derive(Clone, Debug, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    /// Weierstrass coefficients, same object the CLI takes for --curve.
    pub curve: serde_json::Value,
    /// Independent sections, if any are known.
    #[serde(default)]
    pub basis: Vec<serde_json::Value>,
    /// Torsion sections, if any are known.
    #[serde(default)]
    pub torsion: Vec<serde_json::Value>,
    pub expected: Vec<Expectation>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Expectation {
    /// What to check: chi | euler | t_weighted | fibers | height |
    /// torsion_order | integral_count.
    pub check: String,
    /// Check-specific arguments (the point to measure, the set S, …).
    #[serde(default)]
    pub args: serde_json::Value,
    /// The frozen expected value, compared exactly.
    pub value: serde_json::Value,
    /// literature | definition | oracle.
    pub source: String,
}

/// One executed check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub entry: String,
    pub check: String,
    pub detail: String,
    pub expected: String,
    pub got: String,
    pub source: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub entries: usize,
    pub checks: Vec<CheckResult>,
    pub failures: usize,
    pub pass: bool,
    /// Set when the corpus proved empty: that is a pass, but a suspicious
    /// one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Load every *.json file of a directory, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    let mut out = vec![];
    for path in paths {
        let text = std::fs::read_to_string(&path)?;
        let entry: CorpusEntry = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        for exp in &entry.expected {
            if !SOURCES.contains(&exp.source.as_str()) {
                return Err(Error::Parse(format!(
                    "{}: unknown source tag {:?} (expected one of {:?})",
                    path.display(),
                    exp.source,
                    SOURCES
                )));
            }
        }
        out.push(entry);
    }
    Ok(out)
}

fn parse_points(values: &[serde_json::Value]) -> Result<Vec<MWPoint>> {
    values
        .iter()
        .map(|v| MWPoint::from_json(&v.to_string(), VAR))
        .collect()
}

/// Run every expectation of one entry. Failures to even evaluate a check
/// become failing rows, not early exits.
pub fn verify_entry(entry: &CorpusEntry) -> Vec<CheckResult> {
    let mut rows = vec![];
    let mut row = |check: &str, detail: String, expected: String, got: String, source: &str| {
        rows.push(CheckResult {
            entry: entry.name.clone(),
            check: check.to_string(),
            detail,
            pass: expected == got,
            expected,
            got,
            source: source.to_string(),
        });
    };

    let surface = match Model::from_json(&entry.curve.to_string(), VAR)
        .and_then(|m| Surface::analyze(&m))
    {
        Ok(s) => s,
        Err(e) => {
            for exp in &entry.expected {
                row(
                    &exp.check,
                    String::new(),
                    exp.value.to_string(),
                    format!("error: {e}"),
                    &exp.source,
                );
            }
            return rows;
        }
    };

    for exp in &entry.expected {
        let expected = exp.value.to_string();
        let got = evaluate_check(&surface, entry, exp);
        let detail = if exp.args.is_null() {
            String::new()
        } else {
            exp.args.to_string()
        };
        match got {
            Ok(v) => row(&exp.check, detail, expected, v.to_string(), &exp.source),
            Err(e) => row(&exp.check, detail, expected, format!("error: {e}"), &exp.source),
        }
    }
    rows
}

fn evaluate_check(
    surface: &Surface,
    entry: &CorpusEntry,
    exp: &Expectation,
) -> Result<serde_json::Value> {
    let inv = &surface.invariants;
    match exp.check.as_str() {
        "chi" => Ok(serde_json::json!(inv.chi)),
        "euler" => Ok(serde_json::json!(inv.euler)),
        "t_weighted" => Ok(serde_json::json!(inv.t_weighted)),
        "fibers" => {
            let fibers: Vec<_> = surface
                .singular_fibers()
                .map(|loc| {
                    serde_json::json!({
                        "place": loc.place.to_string(),
                        "kodaira": loc.kodaira.to_string(),
                    })
                })
                .collect();
            Ok(serde_json::json!(fibers))
        }
        "height" => {
            let p = point_arg(exp)?;
            let b = canonical_height(surface, &p)?;
            Ok(serde_json::json!(b.hhat.to_string()))
        }
        "torsion_order" => {
            let p = point_arg(exp)?;
            let max = exp.args.get("max").and_then(|v| v.as_u64()).unwrap_or(12) as u32;
            let order = crate::point::is_torsion(&surface.model, &p, max)?;
            Ok(match order {
                Some(n) => serde_json::json!(n),
                None => serde_json::json!(null),
            })
        }
        "integral_count" => {
            let s_spec = exp
                .args
                .get("s")
                .and_then(|v| v.as_str())
                .unwrap_or_default();
            let s = Place::parse_list(s_spec)?;
            let config = IntegralityConfig::new(s, DivisorSpec::ZeroSection);
            let basis = parse_points(&entry.basis)?;
            let torsion = parse_points(&entry.torsion)?;
            let report = enumerate_integral(surface, &config, &basis, &torsion, None)?;
            Ok(serde_json::json!(report.found.len()))
        }
        other => Err(Error::Parse(format!("unknown corpus check {other:?}"))),
    }
}

fn point_arg(exp: &Expectation) -> Result<MWPoint> {
    let v = exp
        .args
        .get("point")
        .ok_or_else(|| Error::Parse("check needs a \"point\" argument".into()))?;
    MWPoint::from_json(&v.to_string(), VAR)
}

/// Run every entry and aggregate. An empty corpus passes, with a warning.
pub fn verify_corpus(entries: &[CorpusEntry]) -> CorpusSummary {
    let names: BTreeSet<_> = entries.iter().map(|e| e.name.clone()).collect();
    let mut checks: Vec<CheckResult> = vec![];
    for entry in entries {
        checks.extend(verify_entry(entry));
    }
    let failures = checks.iter().filter(|c| !c.pass).count();
    let mut warning = None;
    if entries.is_empty() {
        warning = Some("corpus is empty; nothing was actually verified".to_string());
    } else if names.len() != entries.len() {
        warning = Some("duplicate entry names in corpus".to_string());
    }
    CorpusSummary {
        entries: entries.len(),
        failures,
        pass: failures == 0,
        checks,
        warning,
    }
}
