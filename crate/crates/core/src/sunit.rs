//! The S-unit equation x + y = 1 over Q(t).
//!
//! An S-unit is a rational function whose divisor is supported in a finite
//! set S of places of the projective line. Writing a solution in lowest
//! terms as x = f/h, y = g/h turns the equation into f + g = h with pairwise
//! coprime polynomials whose roots all sit over the finite places of S, and
//! the polynomial ABC inequality (Mason–Stothers) caps every degree by
//! (number of distinct roots of fgh) − 1. That cap makes the solution set
//! finite and directly enumerable: this module walks all admissible
//! exponent triples, solves for the two scalar unknowns exactly, and
//! filters.

use std::collections::BTreeSet;

use num::Zero;

use crate::place::{divisor_of, Place};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::{Int, Result};

/// An instance of the unit equation: the set S.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitEquationInstance {
    /// Sorted and deduplicated.
    pub s: Vec<Place>,
}

impl UnitEquationInstance {
    pub fn new(s: Vec<Place>) -> UnitEquationInstance {
        let set: BTreeSet<Place> = s.into_iter().collect();
        UnitEquationInstance {
            s: set.into_iter().collect(),
        }
    }

    /// Σ deg v over the finite places of S (roots over the algebraic
    /// closure are what the degree bound counts).
    pub fn finite_degree_sum(&self) -> i64 {
        self.s
            .iter()
            .map(|v| match v {
                Place::Finite(q) => q.deg() as i64,
                Place::Infinity => 0,
            })
            .sum()
    }

    /// Σ deg v over all of S.
    pub fn s_weighted(&self) -> i64 {
        self.s.iter().map(|v| v.degree() as i64).sum()
    }

    fn finite_polys(&self) -> Vec<Poly> {
        self.s
            .iter()
            .filter_map(|v| match v {
                Place::Finite(q) => Some(q.clone()),
                Place::Infinity => None,
            })
            .collect()
    }
}

/// One ordered solution (x, y) with x + y = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitSolution {
    pub x: RatFunc,
    pub y: RatFunc,
    /// x/y not a constant; constant-ratio solutions form the single family
    /// (c, 1 − c) and are counted separately.
    pub nontrivial: bool,
}

/// Complete output of the solver.
#[derive(Clone, Debug)]
pub struct UnitSolutionSet {
    /// The degree cap the enumeration ran with.
    pub degree_bound: i64,
    /// All nontrivial ordered solutions, deduplicated, sorted by the
    /// printed form of (x, y).
    pub solutions: Vec<UnitSolution>,
    /// Number of constant-ratio families; always 1, the family (c, 1 − c)
    /// with c ∈ Q \ {0, 1}.
    pub trivial_families: u32,
}

/// max(0, Σ_{finite v ∈ S} deg v − 1): the cap on max(deg f, deg g, deg h)
/// for coprime f + g = h with all roots above the finite places of S. With
/// no finite places the only units are constants and the cap is 0.
pub fn mason_stothers_bound(instance: &UnitEquationInstance) -> i64 {
    (instance.finite_degree_sum() - 1).max(0)
}

/// 2·7^(2s): the uniform cap on the number of nontrivial ordered solutions.
pub fn evertse_bound(s_weighted: i64) -> Int {
    assert!(s_weighted >= 0);
    Int::from(2) * num::pow::pow(Int::from(49), s_weighted as usize)
}

/// 24 = 4!: the number of isomorphisms of P¹ permuting a set of at most
/// four points, hence a cap on the size of a Möbius orbit of solutions.
pub fn mobius_orbit_bound() -> i64 {
    24
}

/// Solve the instance completely, capping degrees at the Mason–Stothers
/// bound (which loses nothing — see `solve_with_bound` for running with a
/// larger cap).
pub fn solve(instance: &UnitEquationInstance) -> Result<UnitSolutionSet> {
    solve_with_bound(instance, mason_stothers_bound(instance))
}

/// Enumerate all solutions whose lowest-terms polynomials have degree at
/// most `degree_bound`. Every triple of monic products of the finite-place
/// polynomials with pairwise disjoint exponent supports leaves a 2-unknown
/// exact linear system c·f̂ + c'·ĝ = ĥ; each consistent system gives the
/// candidate x = c·f̂/ĥ, y = c'·ĝ/ĥ, kept when both divisors are supported
/// in S.
pub fn solve_with_bound(
    instance: &UnitEquationInstance,
    degree_bound: i64,
) -> Result<UnitSolutionSet> {
    let polys = instance.finite_polys();
    let products = monomial_products(&polys, degree_bound);
    let support: BTreeSet<Place> = instance.s.iter().cloned().collect();

    let mut seen: BTreeSet<(String, String)> = BTreeSet::new();
    let mut solutions: Vec<UnitSolution> = vec![];
    for (f, fs) in &products {
        for (g, gs) in &products {
            if fs.intersection(gs).next().is_some() {
                continue;
            }
            if f == g {
                // both products empty: the constant family, counted once
                continue;
            }
            for (h, hs) in &products {
                if hs.intersection(fs).next().is_some() || hs.intersection(gs).next().is_some() {
                    continue;
                }
                let Some((c, cp)) = solve_two_scalars(f, g, h) else {
                    continue;
                };
                if c.is_zero() || cp.is_zero() {
                    continue; // zero is not a unit
                }
                let x = RatFunc::new(f.scale(&c), h.clone()).expect("monic denominator");
                let y = RatFunc::new(g.scale(&cp), h.clone()).expect("monic denominator");
                debug_assert!((&x + &y).is_one(), "candidate must solve x + y = 1");
                if !divisor_of(&x)?.support().all(|v| support.contains(v))
                    || !divisor_of(&y)?.support().all(|v| support.contains(v))
                {
                    continue;
                }
                let ratio = &x / &y;
                let nontrivial = !ratio.is_constant();
                if !nontrivial {
                    continue;
                }
                let key = (x.to_string(), y.to_string());
                if seen.insert(key) {
                    solutions.push(UnitSolution { x, y, nontrivial });
                }
            }
        }
    }
    solutions.sort_by(|a, b| {
        (a.x.to_string(), a.y.to_string()).cmp(&(b.x.to_string(), b.y.to_string()))
    });
    Ok(UnitSolutionSet {
        degree_bound,
        solutions,
        trivial_families: 1,
    })
}

/// All monic products Π qᵢ^{aᵢ} of the given polynomials with total degree
/// ≤ bound, each with the set of indices appearing (the exponent support).
fn monomial_products(polys: &[Poly], bound: i64) -> Vec<(Poly, BTreeSet<usize>)> {
    let mut out: Vec<(Poly, BTreeSet<usize>)> = vec![(Poly::one(), BTreeSet::new())];
    for (i, q) in polys.iter().enumerate() {
        let d = q.deg() as i64;
        let mut next = vec![];
        for (p, sup) in &out {
            next.push((p.clone(), sup.clone()));
            let mut cur = p.clone();
            let mut deg = cur.deg() as i64 + d;
            while deg <= bound {
                cur = &cur * q;
                let mut s = sup.clone();
                s.insert(i);
                next.push((cur.clone(), s));
                deg += d;
            }
        }
        out = next;
    }
    out
}

/// Exact solution (c, c') of c·f + c'·g = h when it exists. Requires f, g
/// not proportional (guaranteed here: distinct monic products).
fn solve_two_scalars(f: &Poly, g: &Poly, h: &Poly) -> Option<(Rat, Rat)> {
    let n = [f.deg(), g.deg(), h.deg()].into_iter().max().unwrap() + 1;
    // find two rows with an invertible 2×2 minor
    for i in 0..n {
        for j in i + 1..n {
            let det = &(&f.coeff(i) * &g.coeff(j)) - &(&f.coeff(j) * &g.coeff(i));
            if det.is_zero() {
                continue;
            }
            let c = &(&(&h.coeff(i) * &g.coeff(j)) - &(&h.coeff(j) * &g.coeff(i))) / &det;
            let cp = &(&(&f.coeff(i) * &h.coeff(j)) - &(&f.coeff(j) * &h.coeff(i))) / &det;
            let lhs = &f.scale(&c) + &g.scale(&cp);
            if &lhs == h {
                return Some((c, cp));
            }
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn instance(spec: &str) -> UnitEquationInstance {
        UnitEquationInstance::new(Place::parse_list(spec).unwrap())
    }

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse_named(s, "t").unwrap()
    }

    fn pairs(set: &UnitSolutionSet) -> Vec<(String, String)> {
        set.solutions
            .iter()
            .map(|u| (u.x.to_string(), u.y.to_string()))
            .collect()
    }

    #[test]
    fn degree_cap_values() {
        assert_eq!(mason_stothers_bound(&instance("(t),(t-1),inf")), 1);
        assert_eq!(mason_stothers_bound(&instance("(t),(t-1),(t+1),inf")), 2);
        assert_eq!(mason_stothers_bound(&instance("inf")), 0);
        // degree-2 place counts both geometric roots
        assert_eq!(mason_stothers_bound(&instance("(t^2+1),inf")), 1);
    }

    #[test]
    fn count_cap_values() {
        assert_eq!(evertse_bound(0), Int::from(2));
        assert_eq!(evertse_bound(1), Int::from(98));
        assert_eq!(evertse_bound(3), Int::from(235298));
        assert_eq!(mobius_orbit_bound(), 24);
    }

    #[test]
    fn three_point_instance_has_exactly_six_solutions() {
        let set = solve(&instance("(t),(t-1),inf")).unwrap();
        assert_eq!(set.degree_bound, 1);
        assert_eq!(set.trivial_families, 1);
        assert_eq!(set.solutions.len(), 6);

        let expected = [
            ("t", "1 - t"),
            ("1 - t", "t"),
            ("1/t", "(t - 1)/t"),
            ("(t - 1)/t", "1/t"),
            ("t/(t - 1)", "-1/(t - 1)"),
            ("-1/(t - 1)", "t/(t - 1)"),
        ];
        let got = pairs(&set);
        for (x, y) in expected {
            let key = (rf(x).to_string(), rf(y).to_string());
            assert!(got.contains(&key), "missing solution {key:?}");
        }
        for u in &set.solutions {
            assert!(u.nontrivial);
            assert!((&u.x + &u.y).is_one());
        }
        // closed under the swap involution
        for (x, y) in &got {
            assert!(got.contains(&(y.clone(), x.clone())));
        }
        // within the uniform count cap
        assert!(Int::from(set.solutions.len() as i64) <= evertse_bound(3));
    }

    #[test]
    fn starved_instances_have_no_nonconstant_solutions() {
        assert!(solve(&instance("inf")).unwrap().solutions.is_empty());
        // without 0 and 1 both available, 1 − c·t^k always has a root
        // outside S
        assert!(solve(&instance("(t),inf")).unwrap().solutions.is_empty());
        // without infinity, degrees must match exactly and nothing survives
        assert!(solve(&instance("(t)")).unwrap().solutions.is_empty());
        assert!(solve(&instance("(t),(t-1)")).unwrap().solutions.is_empty());
    }

    #[test]
    fn four_point_instance_matches_double_bound_brute_force() {
        // S = {0, 1, −1, ∞}: the cap is 2 and quadratic solutions exist,
        // e.g. t² + (1−t)(1+t) = 1 and (t+1)²/(4t) − (t−1)²/(4t) = 1.
        let inst = instance("(t),(t-1),(t+1),inf");
        let set = solve(&inst).unwrap();
        let wide = solve_with_bound(&inst, 2 * mason_stothers_bound(&inst)).unwrap();
        assert_eq!(pairs(&set), pairs(&wide), "degree cap must lose nothing");
        assert_eq!(set.solutions.len(), 36);

        let got = pairs(&set);
        for (x, y) in [
            ("t^2", "(1 - t)*(1 + t)"),
            ("(t+1)^2/(4t)", "-(t-1)^2/(4t)"),
            ("(t+1)/2", "(1-t)/2"),
        ] {
            let key = (rf(x).to_string(), rf(y).to_string());
            assert!(got.contains(&key), "missing solution {key:?}");
        }
        for u in &set.solutions {
            let d = u.x.num().deg().max(u.x.den().deg()) as i64;
            assert!(d <= set.degree_bound);
            assert!((&u.x + &u.y).is_one());
            for v in divisor_of(&u.x).unwrap().support() {
                assert!(inst.s.contains(v));
            }
        }
        for (x, y) in &got {
            assert!(got.contains(&(y.clone(), x.clone())));
        }
        assert!(Int::from(set.solutions.len() as i64) <= evertse_bound(inst.s_weighted()));
    }

    #[test]
    fn mobius_orbit_of_a_solution_stays_inside_the_solution_set() {
        // The six symmetries of {0, 1, ∞} act on x through
        // x, 1−x, 1/x, 1/(1−x), x/(x−1), (x−1)/x; applied to x = t they
        // produce exactly the six solutions of the three-point instance.
        let set = solve(&instance("(t),(t-1),inf")).unwrap();
        let got = pairs(&set);
        let one = RatFunc::one();
        let t = rf("t");
        let orbit = [
            t.clone(),
            &one - &t,
            t.inv().unwrap(),
            (&one - &t).inv().unwrap(),
            &t / &(&t - &one),
            &(&t - &one) / &t,
        ];
        let mut distinct: BTreeSet<(String, String)> = BTreeSet::new();
        for x in orbit {
            let y = &one - &x;
            let key = (x.to_string(), y.to_string());
            assert!(got.contains(&key), "orbit element {key:?} missing");
            distinct.insert(key);
        }
        assert_eq!(distinct.len(), 6);
        assert!(6 <= mobius_orbit_bound());
    }
}
