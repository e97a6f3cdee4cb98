//! Global analysis of the elliptic surface attached to a model: candidate
//! bad places, per-place reduction data, χ and the Euler number, the set of
//! singular fibers, and rank bounds for the group of sections.

use crate::error::Error;
use crate::factor;
use crate::place::Place;
use crate::rat::format_rat;
use crate::ratfunc::RatFunc;
use crate::tate::{tate_at, LocalData};
use crate::weierstrass::Model;
use crate::Result;
use std::collections::BTreeSet;

/// Numerical invariants of the (relatively minimal) elliptic surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    /// χ of the structure sheaf; positive for nonisotrivial surfaces.
    pub chi: i64,
    /// Euler number, 12χ.
    pub euler: i64,
    /// Places with singular fiber, in canonical order.
    pub type_t: Vec<Place>,
    /// Σ deg(v) over the singular fibers: the count of geometric bad points.
    pub t_weighted: i64,
    /// Genus of the base curve; the base here is always P¹.
    pub genus_g: i64,
    /// Degree of the fundamental line bundle, equal to χ.
    pub fundamental_line_degree: i64,
}

/// A model together with its full local analysis. `local` retains one entry
/// per candidate place — including candidates that turned out good, whose
/// minimal substitutions the height computation still needs.
#[derive(Clone, Debug)]
pub struct Surface {
    pub model: Model,
    pub j: RatFunc,
    pub invariants: SurfaceInvariants,
    pub local: Vec<LocalData>,
}

/// A surface is isotrivial exactly when j is constant (characteristic 0).
pub fn is_isotrivial(model: &Model) -> bool {
    model.j().is_constant()
}

/// Places that can possibly carry a singular fiber or a non-minimal model:
/// zeros of the numerator and denominator of Δ, poles of the coefficients,
/// and the place at infinity. Everywhere else the model is integral and
/// minimal with a unit discriminant, hence good.
pub fn candidate_places(model: &Model) -> Result<Vec<Place>> {
    let mut set: BTreeSet<Place> = BTreeSet::new();
    set.insert(Place::Infinity);
    let delta = model.delta();
    let mut polys = vec![delta.num().clone(), delta.den().clone()];
    for a in [&model.a1, &model.a2, &model.a3, &model.a4, &model.a6] {
        polys.push(a.den().clone());
    }
    for p in polys {
        if p.is_constant() {
            continue;
        }
        let (_, factors) = factor::poly_factor(&p)?;
        for (q, _) in factors {
            set.insert(Place::Finite(q));
        }
    }
    Ok(set.into_iter().collect())
}

impl Surface {
    /// Run the local analysis at every candidate place and assemble the
    /// global invariants. Fails on isotrivial input.
    pub fn analyze(model: &Model) -> Result<Surface> {
        let j = model.j();
        if j.is_constant() {
            return Err(Error::IsotrivialCurve(format_rat(&j.as_rat().expect("constant j"))));
        }
        let candidates = candidate_places(model)?;
        let local: Vec<LocalData> = candidates
            .iter()
            .map(|v| tate_at(model, v))
            .collect::<Result<_>>()?;

        let total: i64 = local
            .iter()
            .map(|d| d.v_delta_min * d.place.degree() as i64)
            .sum();
        if total % 12 != 0 {
            return Err(Error::NonintegralChi(total.to_string()));
        }
        let chi = total / 12;
        debug_assert!(chi >= 1, "nonisotrivial surfaces have positive chi");

        let bad: Vec<&LocalData> = local.iter().filter(|d| !d.kodaira.is_good()).collect();
        let type_t: Vec<Place> = bad.iter().map(|d| d.place.clone()).collect();
        let t_weighted: i64 = bad.iter().map(|d| d.place.degree() as i64).sum();

        let invariants = SurfaceInvariants {
            chi,
            euler: 12 * chi,
            type_t,
            t_weighted,
            genus_g: 0,
            fundamental_line_degree: chi,
        };
        Ok(Surface {
            model: model.clone(),
            j,
            invariants,
            local,
        })
    }

    pub fn local_at(&self, v: &Place) -> Option<&LocalData> {
        self.local.iter().find(|d| &d.place == v)
    }

    /// The entries with singular fiber, in place order.
    pub fn singular_fibers(&self) -> impl Iterator<Item = &LocalData> {
        self.local.iter().filter(|d| !d.kodaira.is_good())
    }

    pub fn rank_bounds(&self) -> RankBounds {
        rank_bounds(&self.invariants)
    }
}

/// Upper bounds on the rank of the group of sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankBounds {
    /// From the Picard number: 12χ + 4g − 2.
    pub picard_bound: i64,
    /// From the lattice of fiber components: 2(2g − 2 + t), clamped at 0.
    pub shioda_tate_bound: i64,
    /// The better of the two, clamped at 0.
    pub combined: i64,
}

pub fn rank_bounds(inv: &SurfaceInvariants) -> RankBounds {
    let picard_bound = 12 * inv.chi + 4 * inv.genus_g - 2;
    let shioda_tate_bound = (2 * (2 * inv.genus_g - 2 + inv.t_weighted)).max(0);
    let combined = picard_bound.min(shioda_tate_bound).max(0);
    RankBounds {
        picard_bound,
        shioda_tate_bound,
        combined,
    }
}
