//! Enumeration of integral sections below the uniform height bound.
//!
//! Every (S,(O))-integral section has canonical height at most
//! 25χ + 6g + 2s, so the integral sections among Σ nᵢPᵢ + T live inside an
//! explicit ellipsoid of the Mordell–Weil lattice. Given generators, the
//! search enumerates that ball exactly and filters by the integrality test;
//! the result is complete relative to the supplied generators.

use std::collections::HashMap;

use num::Zero;

use crate::error::Error;
use crate::height::{canonical_height, HeightBreakdown};
use crate::integrality::{is_integral, meets, DivisorSpec, IntegralityConfig};
use crate::lattice::Gram;
use crate::place::Place;
use crate::point::{add, add_raw, neg, require_on, MWPoint};
use crate::rat::{ceil_rat, rat, rat_int, Rat};
use crate::surface::Surface;
use crate::weierstrass::Model;
use crate::{Int, Result};

/// 25χ + 6g + 2s, the uniform cap on the canonical height of an
/// (S,(O))-integral section in terms of the Euler characteristic, the genus
/// of the base, and the weighted size of S.
pub fn hs_height_bound(chi: i64, g: i64, s_weighted: i64) -> Rat {
    rat_int(25 * chi + 6 * g + 2 * s_weighted)
}

/// ⌈αs + β⌉^γ: the polynomial cap on the number of integral sections as S
/// grows, with γ half the Mordell–Weil rank.
pub fn integral_count_bound(alpha: &Rat, beta: &Rat, gamma: u32, s: i64) -> Int {
    let linear = &(alpha * rat_int(s)) + beta;
    num::pow::pow(ceil_rat(&linear), gamma as usize)
}

/// One integral section found by the search.
#[derive(Clone, Debug)]
pub struct FoundPoint {
    pub point: MWPoint,
    pub breakdown: HeightBreakdown,
    /// Places where the section meets the divisor (all inside S).
    pub meeting_places: Vec<Place>,
}

/// Outcome of an enumeration run.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub s_weighted: i64,
    pub height_bound: Rat,
    pub basis: Vec<MWPoint>,
    /// Torsion representatives actually used, O included.
    pub torsion: Vec<MWPoint>,
    /// Integral sections, sorted by height then by coordinates.
    pub found: Vec<FoundPoint>,
    /// True when the height ball of the supplied lattice was fully
    /// enumerated; completeness is relative to the generators given.
    pub exhaustive: bool,
}

/// Enumerate all integral sections P = Σ nᵢPᵢ + T with ĥ(P) within the
/// height bound (or `bound_override` when given), and keep those passing
/// the (S, D)-integrality test.
///
/// The Gram matrix of the height pairing on `basis` bounds the coefficient
/// box exactly; a singular Gram matrix (dependent basis) is rejected, as is
/// a torsion representative with nonzero height.
pub fn enumerate_integral(
    surface: &Surface,
    config: &IntegralityConfig,
    basis: &[MWPoint],
    torsion: &[MWPoint],
    bound_override: Option<&Rat>,
) -> Result<SearchReport> {
    let model = &surface.model;
    for p in basis.iter().chain(torsion.iter()) {
        require_on(model, p)?;
    }
    let mut tors: Vec<MWPoint> = vec![MWPoint::Zero];
    for t in torsion {
        if tors.contains(t) {
            continue;
        }
        if !canonical_height(surface, t)?.hhat.is_zero() {
            return Err(Error::Domain(format!(
                "torsion input {} has positive height",
                t.display("t")
            )));
        }
        tors.push(t.clone());
    }

    let s_weighted = config.s_weighted();
    let bound = match bound_override {
        Some(b) => b.clone(),
        None => hs_height_bound(surface.invariants.chi, surface.invariants.genus_g, s_weighted),
    };

    let heights: Vec<Rat> = basis
        .iter()
        .map(|p| Ok(canonical_height(surface, p)?.hhat))
        .collect::<Result<_>>()?;
    let r = basis.len();
    let mut rows = vec![vec![Rat::zero(); r]; r];
    for i in 0..r {
        rows[i][i] = heights[i].clone();
        for j in 0..i {
            let sum = add(model, &basis[i], &basis[j])?;
            let h_sum = canonical_height(surface, &sum)?.hhat;
            let pairing = &(&(&h_sum - &heights[i]) - &heights[j]) * rat(1, 2);
            rows[i][j] = pairing.clone();
            rows[j][i] = pairing;
        }
    }
    let gram = Gram::new(rows)?;
    let mut coords = gram.vectors_in_ball(&bound)?;
    coords.push(vec![0; r]); // torsion-only candidates

    // Negation fixes the x-coordinate, and the zero-section integrality
    // test, the meeting places, and every term of the height breakdown
    // depend on a section only through x. With no torsion translates in
    // play the candidate set is itself symmetric under v ↦ -v, so it
    // suffices to test one vector per ± pair and mirror each hit. A
    // point-union divisor breaks the symmetry (its points need not be
    // negation-stable), so the full ball is scanned in that case.
    let mirror = matches!(config.divisor, DivisorSpec::ZeroSection) && tors.len() == 1;

    let mut cache = ComboCache::new(model, basis)?;
    let mut found: Vec<FoundPoint> = vec![];
    for n in &coords {
        if mirror {
            match n.iter().find(|&&c| c != 0) {
                // The zero vector contributes only torsion translates,
                // and the identity was excluded above.
                None => continue,
                // The mirror image of a vector already processed.
                Some(&c) if c < 0 => continue,
                Some(_) => {}
            }
        }
        let linear = cache.combination(n);
        for t in &tors {
            let p = if t.is_zero() {
                linear.clone()
            } else {
                // Both summands are already validated curve points.
                add_raw(model, &linear, t)
            };
            if p.is_zero() {
                continue;
            }
            match is_integral(surface, &p, config) {
                Ok(true) => {}
                Ok(false) => continue,
                // A candidate lying on the divisor is not an integral
                // point of its complement; skip it.
                Err(Error::PointOnDivisor(_)) => continue,
                Err(e) => return Err(e),
            }
            let breakdown = canonical_height(surface, &p)?;
            debug_assert!(
                breakdown.hhat <= bound,
                "lattice ball produced a point above the height bound"
            );
            let meeting_places = meets(surface, &p, &config.divisor)?;
            if mirror {
                let q = neg(model, &p)?;
                debug_assert!(matches!(is_integral(surface, &q, config), Ok(true)));
                found.push(FoundPoint {
                    point: q,
                    breakdown: breakdown.clone(),
                    meeting_places: meeting_places.clone(),
                });
            }
            found.push(FoundPoint {
                point: p,
                breakdown,
                meeting_places,
            });
        }
    }
    found.sort_by(|a, b| {
        a.breakdown
            .hhat
            .cmp(&b.breakdown.hhat)
            .then_with(|| a.point.display("t").cmp(&b.point.display("t")))
    });

    Ok(SearchReport {
        s_weighted,
        height_bound: bound,
        basis: basis.to_vec(),
        torsion: tors,
        found,
        exhaustive: true,
    })
}

/// Memo of linear combinations over the coefficient ball. Every requested
/// vector is reached from a neighbour one step closer to the origin, so a
/// full ball costs one group-law addition per distinct vector instead of a
/// fresh multiplication chain per candidate — the dominant cost at rank ≥ 2,
/// where coordinates grow to thousands of digits.
struct ComboCache<'a> {
    model: &'a Model,
    basis: &'a [MWPoint],
    neg_basis: Vec<MWPoint>,
    memo: HashMap<Vec<i64>, MWPoint>,
}

impl<'a> ComboCache<'a> {
    fn new(model: &'a Model, basis: &'a [MWPoint]) -> Result<Self> {
        let neg_basis = basis
            .iter()
            .map(|p| neg(model, p))
            .collect::<Result<_>>()?;
        Ok(ComboCache {
            model,
            basis,
            neg_basis,
            memo: HashMap::new(),
        })
    }

    /// Σ vᵢ·Pᵢ, memoized.
    fn combination(&mut self, v: &[i64]) -> MWPoint {
        if v.iter().all(|&c| c == 0) {
            return MWPoint::Zero;
        }
        if let Some(p) = self.memo.get(v) {
            return p.clone();
        }
        // Walk toward the origin until a cached vector (or the origin
        // itself), then rebuild the path outward one addition at a time.
        let mut path: Vec<Vec<i64>> = vec![v.to_vec()];
        let mut acc = loop {
            let cur = path.last().unwrap();
            let i = cur.iter().position(|&c| c != 0).unwrap();
            let mut prev = cur.clone();
            prev[i] -= cur[i].signum();
            if prev.iter().all(|&c| c == 0) {
                break MWPoint::Zero;
            }
            if let Some(p) = self.memo.get(&prev) {
                break p.clone();
            }
            path.push(prev);
        };
        for step in path.into_iter().rev() {
            let i = step.iter().position(|&c| c != 0).unwrap();
            let gen = if step[i] > 0 {
                &self.basis[i]
            } else {
                &self.neg_basis[i]
            };
            // All operands descend from validated points via the group law.
            acc = add_raw(self.model, &acc, gen);
            self.memo.insert(step, acc.clone());
        }
        acc
    }
}
