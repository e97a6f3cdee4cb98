//! Canonical heights of sections.
//!
//! The height of a section P of an elliptic surface decomposes into three
//! exactly computable pieces: the Euler characteristic χ of the surface, the
//! intersection number (P)·(O) of the section with the zero section, and a
//! correction at each bad place depending only on which component of the
//! special fiber the section meets. This module assembles
//!
//! ```text
//! ĥ(P) = χ + (P)·(O) − ½ Σ_v c_v(P)·deg v
//! ```
//!
//! from the per-place reduction data. The result is an exact rational, and
//! ĥ(P) = 0 exactly when P is torsion.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::error::Error;
use crate::factor::poly_factor;
use crate::place::Place;
use crate::point::MWPoint;
use crate::rat::{rat, rat_int, Rat};
use crate::surface::Surface;
use crate::Result;

/// Scaling convention for reported heights. `NeronTate` is the normalization
/// with ĥ = χ + (P)·(O) − ½Σc_v, matching the height used by the d(P) ≤ 2ĥ(P)
/// style of bound; `Shioda` doubles it, matching the convention where the
/// pairing is the full (not halved) intersection form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HeightNorm {
    #[default]
    NeronTate,
    Shioda,
}

impl HeightNorm {
    pub fn apply(&self, h: &Rat) -> Rat {
        match self {
            HeightNorm::NeronTate => h.clone(),
            HeightNorm::Shioda => h * rat_int(2),
        }
    }

    pub fn parse(s: &str) -> Result<HeightNorm> {
        match s {
            "neron-tate" => Ok(HeightNorm::NeronTate),
            "shioda" => Ok(HeightNorm::Shioda),
            other => Err(Error::Parse(format!(
                "unknown height normalization {other:?} (expected neron-tate or shioda)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            HeightNorm::NeronTate => "neron-tate",
            HeightNorm::Shioda => "shioda",
        }
    }
}

/// Exact decomposition of a canonical height.
#[derive(Clone, Debug, PartialEq)]
pub struct HeightBreakdown {
    /// (P)·(O), the total contact of the section with the zero section.
    pub intersection_with_zero: Rat,
    /// Places where that contact is positive.
    pub meeting_places: Vec<Place>,
    /// c_v(P)·deg v at each bad place; sections through the identity
    /// component contribute 0 and still get an entry.
    pub local_corrections: BTreeMap<Place, Rat>,
    /// χ + (P)·(O) − ½·Σ corrections.
    pub hhat: Rat,
}

/// (P)·(O) together with the places where the two sections meet.
///
/// At each place v the local contact is max(0, −v(x)/2) on a v-minimal
/// model. The candidate places carry precomputed minimal models; everywhere
/// else the input model is already v-minimal (its coefficients are v-integral
/// and v(Δ) = 0), so the remaining contacts are read off the factorization of
/// the denominator of x. An odd pole order of x on a v-minimal model is
/// impossible on the curve and reported as a `MinimalityViolation`.
pub fn intersection_with_zero(surface: &Surface, p: &MWPoint) -> Result<(Rat, Vec<Place>)> {
    let (x, y) = match p {
        MWPoint::Zero => {
            return Err(Error::Domain(
                "intersection with the zero section needs an affine point".into(),
            ))
        }
        MWPoint::Affine { x, y } => (x, y),
    };
    let mut total: i64 = 0;
    let mut meeting: BTreeSet<Place> = BTreeSet::new();
    for loc in &surface.local {
        let m = loc.contact_with_zero(x, y)?;
        if m > 0 {
            total += m * loc.place.degree() as i64;
            meeting.insert(loc.place.clone());
        }
    }
    let mut rest = x.den().clone();
    for loc in &surface.local {
        if let Place::Finite(q) = &loc.place {
            if !rest.is_constant() {
                rest = rest.strip_factor(q).1;
            }
        }
    }
    if !rest.is_constant() {
        let (_, factors) = poly_factor(&rest)?;
        for (q, k) in factors {
            if k % 2 == 1 {
                return Err(Error::MinimalityViolation {
                    place: Place::Finite(q).to_string(),
                    order: k as i64,
                });
            }
            total += (k / 2) as i64 * q.deg() as i64;
            meeting.insert(Place::Finite(q));
        }
    }
    Ok((rat_int(total), meeting.into_iter().collect()))
}

/// The canonical height of P with its full decomposition.
///
/// The zero section itself has height 0 and is returned with an empty
/// breakdown; the affine formula does not apply to it (its self-intersection
/// is −χ, not a contact number).
pub fn canonical_height(surface: &Surface, p: &MWPoint) -> Result<HeightBreakdown> {
    let (x, y) = match p {
        MWPoint::Zero => {
            return Ok(HeightBreakdown {
                intersection_with_zero: Rat::zero(),
                meeting_places: vec![],
                local_corrections: BTreeMap::new(),
                hhat: Rat::zero(),
            })
        }
        MWPoint::Affine { x, y } => (x, y),
    };
    let (po, meeting) = intersection_with_zero(surface, p)?;
    let mut corrections = BTreeMap::new();
    let mut csum = Rat::zero();
    for loc in surface.singular_fibers() {
        let c = loc.component_correction(x, y)?;
        let weighted = &c * rat_int(loc.place.degree() as i64);
        csum = &csum + &weighted;
        corrections.insert(loc.place.clone(), weighted);
    }
    let hhat = &(rat_int(surface.invariants.chi) + &po) - &(&csum * rat(1, 2));
    Ok(HeightBreakdown {
        intersection_with_zero: po,
        meeting_places: meeting,
        local_corrections: corrections,
        hhat,
    })
}

/// Right-hand side 2·g(Y) − 2 + deg (f*D)_red of the tautological
/// inequality, the quantity that caps the height of a (S,D)-integral
/// section after pulling back along a cover f: Y → B.
pub fn tautological_rhs(genus_y: u32, deg_pullback_red: u32) -> i64 {
    2 * genus_y as i64 - 2 + deg_pullback_red as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{add, is_torsion, mul, sub};
    use crate::ratfunc::RatFunc;
    use crate::weierstrass::Model;

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse_named(s, "t").unwrap()
    }

    fn pt(x: &str, y: &str) -> MWPoint {
        MWPoint::affine(rf(x), rf(y))
    }

    fn hhat(s: &Surface, p: &MWPoint) -> Rat {
        canonical_height(s, p).unwrap().hhat
    }

    fn assert_near_zero_gap(s: &Surface, p: &MWPoint) {
        // |ĥ(P) − (P)·(O)| ≤ χ
        let b = canonical_height(s, p).unwrap();
        let gap = &b.hhat - &b.intersection_with_zero;
        let chi = rat_int(s.invariants.chi);
        assert!(gap <= chi && gap >= -chi, "height/intersection gap exceeds chi");
    }

    #[test]
    fn height_chain_with_growing_contact() {
        // y² = x³ + tx + 1: bad fibers are a cubic of simple nodes (no
        // correction possible) and a III* at infinity (correction 3/2 off
        // the identity component).
        let m = Model::short(rf("t"), rf("1")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        let p = pt("0", "1");

        let b1 = canonical_height(&s, &p).unwrap();
        assert!(b1.intersection_with_zero.is_zero());
        assert!(b1.meeting_places.is_empty());
        assert_eq!(b1.local_corrections.len(), 2);
        assert_eq!(b1.local_corrections[&Place::Infinity], rat(3, 2));
        assert_eq!(b1.hhat, rat(1, 4));

        // 2P lands on identity components everywhere and misses O, so the
        // height is exactly χ + (P)·(O) = 1.
        let p2 = mul(&m, 2, &p).unwrap();
        assert_eq!(p2, pt("t^2/4", "-t^3/8 - 1"));
        let b2 = canonical_height(&s, &p2).unwrap();
        assert!(b2.intersection_with_zero.is_zero());
        assert!(b2.local_corrections.values().all(|c| c.is_zero()));
        assert_eq!(b2.hhat, rat_int(1));

        // 3P picks up contact of multiplicity 2 at (t), a place of good
        // reduction, exercising the factor-the-denominator path.
        let p3 = mul(&m, 3, &p).unwrap();
        let b3 = canonical_height(&s, &p3).unwrap();
        assert_eq!(b3.intersection_with_zero, rat_int(2));
        assert_eq!(b3.meeting_places, vec![Place::at(0)]);
        assert_eq!(b3.local_corrections[&Place::Infinity], rat(3, 2));
        assert_eq!(b3.hhat, rat(9, 4));

        // Quadraticity ties the three together: ĥ(nP) = n²·ĥ(P).
        assert_eq!(b2.hhat, rat_int(4) * &b1.hhat);
        assert_eq!(b3.hhat, rat_int(9) * &b1.hhat);
        for q in [&p, &p2, &p3] {
            assert_near_zero_gap(&s, q);
        }
    }

    #[test]
    fn two_torsion_heights_vanish() {
        // y² = x(x − 1)(x − t): the three 2-torsion sections pass through
        // different component patterns (node at (t), node at (t−1), and the
        // near/far ends of the I2* at infinity) yet every decomposition
        // sums to height 0.
        let m = Model::new(rf("0"), rf("-(1 + t)"), rf("0"), rf("t"), rf("0")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        let v0 = Place::at(0);
        let v1 = Place::at(1);
        let vi = Place::Infinity;

        let cases = [
            (pt("0", "0"), [rat(1, 2), rat_int(0), rat(3, 2)]),
            (pt("1", "0"), [rat_int(0), rat(1, 2), rat(3, 2)]),
            (pt("t", "0"), [rat(1, 2), rat(1, 2), rat_int(1)]),
        ];
        for (p, [c0, c1, ci]) in cases {
            let b = canonical_height(&s, &p).unwrap();
            assert!(b.intersection_with_zero.is_zero());
            assert_eq!(b.local_corrections[&v0], c0, "at (t) for {p:?}");
            assert_eq!(b.local_corrections[&v1], c1, "at (t-1) for {p:?}");
            assert_eq!(b.local_corrections[&vi], ci, "at infinity for {p:?}");
            assert!(b.hhat.is_zero(), "2-torsion must have height 0, got {}", b.hhat);
            assert_eq!(is_torsion(&m, &p, 2).unwrap(), Some(2));
        }
    }

    #[test]
    fn deep_contact_through_both_charts() {
        // y² = x³ − t²x + t⁶ with P = (t⁴, t⁶): P meets O once at infinity
        // (pole of x in the rescaled chart) and rides the I0* fiber at (t)
        // off the identity component. 2P instead meets O with multiplicity
        // 4 at (t) and 1 at infinity, landing on identity components
        // everywhere — two very different decompositions related by
        // quadraticity.
        let m = Model::short(rf("-t^2"), rf("t^6")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        assert_eq!(s.invariants.chi, 1);
        let p = pt("t^4", "t^6");

        let b = canonical_height(&s, &p).unwrap();
        assert_eq!(b.intersection_with_zero, rat_int(1));
        assert_eq!(b.meeting_places, vec![Place::Infinity]);
        assert_eq!(b.local_corrections[&Place::at(0)], rat_int(1));
        assert_eq!(b.hhat, rat(3, 2));

        let p2 = mul(&m, 2, &p).unwrap();
        let b2 = canonical_height(&s, &p2).unwrap();
        assert_eq!(b2.intersection_with_zero, rat_int(5));
        assert_eq!(b2.meeting_places, vec![Place::at(0), Place::Infinity]);
        assert!(b2.local_corrections.values().all(|c| c.is_zero()));
        assert_eq!(b2.hhat, rat_int(6));
    }

    #[test]
    fn parallelogram_law_on_independent_sections() {
        // Two independent sections of y² = x³ + (t² − 5)x + t².
        let m = Model::short(rf("t^2 - 5"), rf("t^2")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        let p1 = pt("0", "t");
        let p2 = pt("-1", "2");

        let h1 = hhat(&s, &p1);
        let h2 = hhat(&s, &p2);
        assert!(!h1.is_zero() && !h2.is_zero());

        let sum = add(&m, &p1, &p2).unwrap();
        let diff = sub(&m, &p1, &p2).unwrap();
        let lhs = hhat(&s, &sum) + hhat(&s, &diff);
        let rhs = rat_int(2) * (&h1 + &h2);
        assert_eq!(lhs, rhs);

        assert_eq!(hhat(&s, &mul(&m, 2, &p1).unwrap()), rat_int(4) * &h1);
        assert_near_zero_gap(&s, &p1);
        assert_near_zero_gap(&s, &p2);
        assert_near_zero_gap(&s, &sum);
    }

    #[test]
    fn zero_section_has_zero_height() {
        let m = Model::short(rf("t"), rf("1")).unwrap();
        let s = Surface::analyze(&m).unwrap();
        let b = canonical_height(&s, &MWPoint::Zero).unwrap();
        assert!(b.hhat.is_zero());
        assert!(b.local_corrections.is_empty());
        assert!(intersection_with_zero(&s, &MWPoint::Zero).is_err());
    }

    #[test]
    fn normalization_flag_scales_by_two() {
        assert_eq!(HeightNorm::default(), HeightNorm::NeronTate);
        assert_eq!(HeightNorm::NeronTate.apply(&rat(1, 4)), rat(1, 4));
        assert_eq!(HeightNorm::Shioda.apply(&rat(1, 4)), rat(1, 2));
        assert_eq!(HeightNorm::parse("shioda").unwrap(), HeightNorm::Shioda);
        assert!(HeightNorm::parse("standard").is_err());
    }

    #[test]
    fn derivative_degree_cap_arithmetic() {
        assert_eq!(tautological_rhs(0, 3), 1);
        assert_eq!(tautological_rhs(1, 0), 0);
        assert_eq!(tautological_rhs(2, 5), 7);
        assert_eq!(tautological_rhs(0, 0), -2);
    }
}
