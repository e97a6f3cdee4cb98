//! (S, D)-integrality of sections.
//!
//! A section P is (S, D)-integral when every fiber over which σ_P meets the
//! horizontal divisor D sits over a place of S. Two sections meet over v
//! exactly when their difference meets the zero section there, so every test
//! in this module reduces to zero-section contact on v-minimal models.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::height::intersection_with_zero;
use crate::place::Place;
use crate::point::{sub, MWPoint};
use crate::surface::Surface;
use crate::Result;

/// The horizontal divisor a section is tested against: the zero section, or
/// a finite union of sections given by their generic-fiber points.
#[derive(Clone, Debug, PartialEq)]
pub enum DivisorSpec {
    ZeroSection,
    PointUnion(Vec<MWPoint>),
}

/// A finite set of places S together with the divisor D.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityConfig {
    /// Sorted and deduplicated.
    pub s: Vec<Place>,
    pub divisor: DivisorSpec,
}

impl IntegralityConfig {
    pub fn new(s: Vec<Place>, divisor: DivisorSpec) -> IntegralityConfig {
        let set: BTreeSet<Place> = s.into_iter().collect();
        IntegralityConfig {
            s: set.into_iter().collect(),
            divisor,
        }
    }

    /// Σ_{v∈S} deg v, the size of S weighted by residue degree.
    pub fn s_weighted(&self) -> i64 {
        self.s.iter().map(|v| v.degree() as i64).sum()
    }

    pub fn contains(&self, v: &Place) -> bool {
        self.s.binary_search(v).is_ok()
    }
}

/// The places where σ_P meets D. Fails with `PointOnDivisor` when P is a
/// component of D itself (the intersection would be the whole base).
pub fn meets(surface: &Surface, p: &MWPoint, divisor: &DivisorSpec) -> Result<Vec<Place>> {
    match divisor {
        DivisorSpec::ZeroSection => {
            if p.is_zero() {
                return Err(Error::PointOnDivisor("the zero section".into()));
            }
            Ok(intersection_with_zero(surface, p)?.1)
        }
        DivisorSpec::PointUnion(qs) => {
            let mut out: BTreeSet<Place> = BTreeSet::new();
            for q in qs {
                let diff = sub(&surface.model, p, q)?;
                if diff.is_zero() {
                    return Err(Error::PointOnDivisor(q.display("t")));
                }
                out.extend(intersection_with_zero(surface, &diff)?.1);
            }
            Ok(out.into_iter().collect())
        }
    }
}

/// Whether P is (S, D)-integral, i.e. meets(P, D) ⊆ S.
///
/// Decided without any polynomial factorization: contacts at the candidate
/// places come from the precomputed minimal models, and after stripping the
/// candidate and S places from the coordinate denominator any remaining
/// contact shows up as a nonconstant leftover.
pub fn is_integral(surface: &Surface, p: &MWPoint, config: &IntegralityConfig) -> Result<bool> {
    match &config.divisor {
        DivisorSpec::ZeroSection => {
            if p.is_zero() {
                return Err(Error::PointOnDivisor("the zero section".into()));
            }
            zero_contacts_within(surface, p, config)
        }
        DivisorSpec::PointUnion(qs) => {
            for q in qs {
                let diff = sub(&surface.model, p, q)?;
                if diff.is_zero() {
                    return Err(Error::PointOnDivisor(q.display("t")));
                }
                if !zero_contacts_within(surface, &diff, config)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn zero_contacts_within(
    surface: &Surface,
    p: &MWPoint,
    config: &IntegralityConfig,
) -> Result<bool> {
    let (x, y) = p.xy().expect("affine point");
    for loc in &surface.local {
        let m = loc.contact_with_zero(x, y)?;
        if m > 0 && !config.contains(&loc.place) {
            return Ok(false);
        }
    }
    let mut rest = x.den().clone();
    let known = surface
        .local
        .iter()
        .map(|loc| &loc.place)
        .chain(config.s.iter());
    for v in known {
        if rest.is_constant() {
            break;
        }
        if let Place::Finite(q) = v {
            rest = rest.strip_factor(q).1;
        }
    }
    Ok(rest.is_constant())
}
