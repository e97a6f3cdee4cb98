//! JSON-facing report types.
//!
//! Every number crosses this boundary exactly: big integers and rationals
//! become decimal strings ("p/q" with the "/q" dropped when the value is
//! an integer), places and points become their printed forms, and maps are
//! ordered, so serializing a report twice yields identical bytes. The only
//! decimal floating anything is the tagged 50-digit string inside a count
//! cap report, which is produced by exact fixed-point arithmetic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::height::{canonical_height, HeightBreakdown, HeightNorm};
use crate::integrality::{DivisorSpec, IntegralityConfig};
use crate::point::MWPoint;
use crate::search::SearchReport;
use crate::sunit::{evertse_bound, mason_stothers_bound, UnitEquationInstance, UnitSolutionSet};
use crate::surface::Surface;
use crate::{Error, Rat, Result};

/// The variable name used for all printed rational functions.
pub const VAR: &str = "t";

pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// One singular fiber in an analysis report.
#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub place: String,
    pub degree: u32,
    pub kodaira: String,
    pub delta_valuation: i64,
    pub conductor_exponent: u32,
    pub component_count: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankBoundsReport {
    pub picard: i64,
    pub shioda_tate: i64,
    pub combined: i64,
}

/// Global invariants plus the per-fiber classification.
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub curve: serde_json::Value,
    pub chi: i64,
    pub euler: i64,
    pub genus: i64,
    pub fundamental_line_degree: i64,
    pub t_weighted: i64,
    pub bad_places: Vec<FiberReport>,
    pub rank_bounds: RankBoundsReport,
}

impl AnalyzeReport {
    pub fn build(surface: &Surface) -> AnalyzeReport {
        let inv = &surface.invariants;
        let bad_places = surface
            .singular_fibers()
            .map(|loc| FiberReport {
                place: loc.place.to_string(),
                degree: loc.place.degree(),
                kodaira: loc.kodaira.to_string(),
                delta_valuation: loc.v_delta_min,
                conductor_exponent: loc.conductor_exponent,
                component_count: loc.component_count,
            })
            .collect();
        let rb = surface.rank_bounds();
        AnalyzeReport {
            curve: serde_json::from_str(&surface.model.to_json(VAR)).expect("round trip"),
            chi: inv.chi,
            euler: inv.euler,
            genus: inv.genus_g,
            fundamental_line_degree: inv.fundamental_line_degree,
            t_weighted: inv.t_weighted,
            bad_places,
            rank_bounds: RankBoundsReport {
                picard: rb.picard_bound,
                shioda_tate: rb.shioda_tate_bound,
                combined: rb.combined,
            },
        }
    }
}

/// A canonical height with its full decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct HeightReport {
    pub point: serde_json::Value,
    pub normalization: String,
    pub chi: i64,
    pub intersection_with_zero: String,
    pub meeting_places: Vec<String>,
    pub local_corrections: BTreeMap<String, String>,
    pub value: String,
}

impl HeightReport {
    pub fn build(surface: &Surface, p: &MWPoint, norm: HeightNorm) -> Result<HeightReport> {
        let b = canonical_height(surface, p)?;
        Ok(HeightReport::from_breakdown(surface, p, &b, norm))
    }

    pub fn from_breakdown(
        surface: &Surface,
        p: &MWPoint,
        b: &HeightBreakdown,
        norm: HeightNorm,
    ) -> HeightReport {
        HeightReport {
            point: p.to_json(VAR),
            normalization: norm.name().to_string(),
            chi: surface.invariants.chi,
            intersection_with_zero: rat_string(&b.intersection_with_zero),
            meeting_places: b.meeting_places.iter().map(|v| v.to_string()).collect(),
            local_corrections: b
                .local_corrections
                .iter()
                .map(|(v, c)| (v.to_string(), rat_string(c)))
                .collect(),
            value: rat_string(&norm.apply(&b.hhat)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FoundPointReport {
    pub point: serde_json::Value,
    pub height: String,
    pub meeting_places: Vec<String>,
}

/// Outcome of an integral-section enumeration, with the height-cap check
/// that drives the bound-violation exit code.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralReport {
    pub s: Vec<String>,
    pub s_weighted: i64,
    pub divisor: serde_json::Value,
    pub height_bound: String,
    pub normalization: String,
    pub count: usize,
    pub exhaustive: bool,
    /// Every found height is at or under the bound (violations would mean
    /// the height theory itself broke).
    pub heights_within_bound: bool,
    pub points: Vec<FoundPointReport>,
}

impl IntegralReport {
    pub fn build(
        config: &IntegralityConfig,
        report: &SearchReport,
        norm: HeightNorm,
    ) -> IntegralReport {
        let divisor = match &config.divisor {
            DivisorSpec::ZeroSection => serde_json::json!("zero-section"),
            DivisorSpec::PointUnion(points) => serde_json::json!({
                "points": points.iter().map(|p| p.to_json(VAR)).collect::<Vec<_>>(),
            }),
        };
        let heights_within_bound = report
            .found
            .iter()
            .all(|f| f.breakdown.hhat <= report.height_bound);
        IntegralReport {
            s: config.s.iter().map(|v| v.to_string()).collect(),
            s_weighted: report.s_weighted,
            divisor,
            height_bound: rat_string(&norm.apply(&report.height_bound)),
            normalization: norm.name().to_string(),
            count: report.found.len(),
            exhaustive: report.exhaustive,
            heights_within_bound,
            points: report
                .found
                .iter()
                .map(|f| FoundPointReport {
                    point: f.point.to_json(VAR),
                    height: rat_string(&norm.apply(&f.breakdown.hhat)),
                    meeting_places: f.meeting_places.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitSolutionReport {
    pub x: String,
    pub y: String,
}

/// Outcome of a unit-equation solve, with the count-cap check that drives
/// the bound-violation exit code.
#[derive(Clone, Debug, Serialize)]
pub struct SunitReport {
    pub places: Vec<String>,
    pub finite_degree_sum: i64,
    pub degree_bound: i64,
    pub nontrivial_count: usize,
    pub unordered_count: usize,
    pub trivial_families: u32,
    pub count_cap: String,
    pub within_count_cap: bool,
    pub solutions: Vec<UnitSolutionReport>,
}

impl SunitReport {
    pub fn build(instance: &UnitEquationInstance, set: &UnitSolutionSet) -> SunitReport {
        let cap = evertse_bound(instance.s_weighted());
        let mut unordered: std::collections::BTreeSet<(String, String)> =
            std::collections::BTreeSet::new();
        for u in &set.solutions {
            let (a, b) = (u.x.to_string(), u.y.to_string());
            unordered.insert(if a <= b { (a, b) } else { (b, a) });
        }
        SunitReport {
            places: instance.s.iter().map(|v| v.to_string()).collect(),
            finite_degree_sum: instance.finite_degree_sum(),
            degree_bound: mason_stothers_bound(instance),
            nontrivial_count: set.solutions.len(),
            unordered_count: unordered.len(),
            trivial_families: set.trivial_families,
            count_cap: cap.to_string(),
            within_count_cap: crate::Int::from(set.solutions.len() as i64) <= cap,
            solutions: set
                .solutions
                .iter()
                .map(|u| UnitSolutionReport {
                    x: u.x.to_string(),
                    y: u.y.to_string(),
                })
                .collect(),
        }
    }
}

/// Parse a JSON array of points ("O" or ["x", "y"] entries).
pub fn points_from_json(text: &str, var: &str) -> Result<Vec<MWPoint>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("point list JSON: {e}")))?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected a JSON array of points".into()))?;
    items
        .iter()
        .map(|item| MWPoint::from_json(&item.to_string(), var))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RatFunc;
    use crate::search::enumerate_integral;
    use crate::sunit::solve;
    use crate::weierstrass::Model;
    use crate::Place;

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse_named(s, "t").unwrap()
    }

    fn legendre() -> Surface {
        let m = Model::new(rf("0"), rf("-(1 + t)"), rf("0"), rf("t"), rf("0")).unwrap();
        Surface::analyze(&m).unwrap()
    }

    #[test]
    fn analyze_report_shape_and_determinism() {
        let s = legendre();
        let r = AnalyzeReport::build(&s);
        assert_eq!((r.chi, r.euler, r.t_weighted), (1, 12, 3));
        assert_eq!(r.bad_places.len(), 3);
        assert_eq!(r.bad_places[0].kodaira, "I2");
        assert_eq!(r.bad_places[2].place, "inf");
        assert_eq!(r.bad_places[2].kodaira, "I2*");
        assert_eq!(r.rank_bounds.picard, 10);

        let a = serde_json::to_string_pretty(&r).unwrap();
        let b = serde_json::to_string_pretty(&AnalyzeReport::build(&s)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn height_report_strings_are_exact_rationals() {
        let m = Model::short(rf("t"), rf("1")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        let p = MWPoint::affine(rf("0"), rf("1"));
        let r = HeightReport::build(&s, &p, HeightNorm::NeronTate).unwrap();
        assert_eq!(r.value, "1/4");
        let r2 = HeightReport::build(&s, &p, HeightNorm::Shioda).unwrap();
        assert_eq!(r2.value, "1/2");
        assert!(r.local_corrections.values().any(|c| c == "3/2"));
    }

    #[test]
    fn integral_report_counts_and_flags() {
        let m = Model::short(rf("t"), rf("1")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        let p = MWPoint::affine(rf("0"), rf("1"));
        let config = IntegralityConfig::new(vec![], DivisorSpec::ZeroSection);
        let bound = crate::rat::rat_int(4);
        let sr = enumerate_integral(&s, &config, &[p], &[], Some(&bound)).unwrap();
        let r = IntegralReport::build(&config, &sr, HeightNorm::NeronTate);
        assert_eq!(r.count, 4);
        assert!(r.exhaustive && r.heights_within_bound);
        assert_eq!(r.divisor, serde_json::json!("zero-section"));
        assert_eq!(r.height_bound, "4");
    }

    #[test]
    fn sunit_report_counts_both_orders() {
        let inst = UnitEquationInstance::new(Place::parse_list("(t),(t-1),inf").unwrap());
        let set = solve(&inst).unwrap();
        let r = SunitReport::build(&inst, &set);
        assert_eq!(r.nontrivial_count, 6);
        assert_eq!(r.unordered_count, 3);
        assert_eq!(r.degree_bound, 1);
        assert_eq!(r.count_cap, "235298");
        assert!(r.within_count_cap);
        assert_eq!(r.trivial_families, 1);
    }

    #[test]
    fn point_list_parsing_accepts_zero_and_affine() {
        let pts = points_from_json(r#"[["0","1"], "O", ["t^2/4", "-t^3/8 - 1"]]"#, "t").unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts[1].is_zero());
        assert!(points_from_json("{}", "t").is_err());
    }
}
