//! Local reduction data at a place of the base P¹: Kodaira fiber type,
//! v-minimal model, conductor exponent, and the singular-point data needed
//! to tell which fiber component a section meets.
//!
//! Residue fields of Q(t) at finite places have characteristic zero, so the
//! whole reduction analysis collapses to one rescaling: pass to the short
//! form y² = x³ + Ax + B, divide out the largest π-power allowed by
//! v(c4)/4 and v(c6)/6, and read the fiber type off the minimal valuations
//! of (Δ, c4). The place at infinity is handled on the s = 1/t chart, where
//! it becomes the finite place (s).

use crate::error::Error;
use crate::place::{valuation, Place};
use crate::poly::Poly;
use crate::rat::{rat, Rat};
use crate::ratfunc::RatFunc;
use crate::residue::{KPoly, ResidueField};
use crate::weierstrass::{Model, Transform};
use crate::Result;
use num::{One, Zero};
use std::fmt;

/// Kodaira type of the special fiber. `I(0)` is good reduction, `I(n)` with
/// n ≥ 1 is multiplicative, everything else is additive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn is_good(&self) -> bool {
        matches!(self, KodairaType::I(0))
    }

    pub fn is_multiplicative(&self) -> bool {
        matches!(self, KodairaType::I(n) if *n >= 1)
    }

    pub fn is_additive(&self) -> bool {
        !matches!(self, KodairaType::I(_))
    }

    /// Number of irreducible components of the special fiber.
    pub fn component_count(&self) -> u32 {
        match self {
            KodairaType::I(0) => 1,
            KodairaType::I(n) => *n,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IStar(n) => n + 5,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    /// Exponent of the conductor. Characteristic zero is tame, so this is
    /// 0 / 1 / 2 for good / multiplicative / additive reduction.
    pub fn conductor_exponent(&self) -> u32 {
        match self {
            KodairaType::I(0) => 0,
            KodairaType::I(_) => 1,
            _ => 2,
        }
    }

    /// Valuation of the minimal discriminant forced by the type (equal to
    /// the Euler number of the fiber in the tame case).
    pub fn delta_valuation(&self) -> i64 {
        match self {
            KodairaType::I(n) => *n as i64,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(n) => *n as i64 + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Parse the display form: "I0", "I7", "II", "IV*", "I2*", ...
    pub fn parse(s: &str) -> Result<KodairaType> {
        let t = s.trim();
        let (core, star) = match t.strip_suffix('*') {
            Some(c) => (c, true),
            None => (t, false),
        };
        let ty = match (core, star) {
            ("II", false) => Some(KodairaType::II),
            ("III", false) => Some(KodairaType::III),
            ("IV", false) => Some(KodairaType::IV),
            ("II", true) => Some(KodairaType::IIStar),
            ("III", true) => Some(KodairaType::IIIStar),
            ("IV", true) => Some(KodairaType::IVStar),
            _ => core.strip_prefix('I').and_then(|d| d.parse::<u32>().ok()).map(|n| {
                if star {
                    KodairaType::IStar(n)
                } else {
                    KodairaType::I(n)
                }
            }),
        };
        ty.ok_or_else(|| Error::Parse(format!("unknown fiber type `{s}`")))
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

/// Reduction data of a model at one place, everything downstream of the
/// classification: the minimal model and substitution (used for contact
/// numbers), the fiber type and its invariants, and lifted coordinates of
/// the singular point where component identification needs them.
#[derive(Clone, Debug)]
pub struct LocalData {
    /// The place this data describes, in input coordinates.
    pub place: Place,
    pub kodaira: KodairaType,
    /// Valuation of the minimal discriminant at the place.
    pub v_delta_min: i64,
    /// 0 good, 1 multiplicative, 2 additive.
    pub conductor_exponent: u32,
    /// Number of irreducible components of the special fiber.
    pub component_count: u32,
    /// Coordinate change from the chart model to the v-minimal short model.
    pub minimal_substitution: Transform,
    /// The v-minimal short model, in chart coordinates.
    pub minimal_model: Model,
    /// The substitution scales by u = π^e with this e (negative when the
    /// input model had poles to clear at the place).
    pub scaling_exponent: i64,
    /// Finite place of the working chart: `place` itself when finite, the
    /// place (s) of the s = 1/t chart when `place` is at infinity.
    chart_place: Place,
    /// Multiplicative fibers: x-coordinate of the node in the residue field.
    node_x: Option<Poly>,
    /// I(n ≥ 1)*: the double root θ of the depth-one cubic. Sections with
    /// x′ ≡ θπ mod π² meet the far pair of simple components.
    star_theta: Option<Poly>,
}

impl LocalData {
    /// The finite place at which all chart-coordinate valuations are taken.
    pub fn chart_place(&self) -> &Place {
        &self.chart_place
    }

    fn uniformizer(&self) -> &Poly {
        match &self.chart_place {
            Place::Finite(p) => p,
            Place::Infinity => unreachable!("chart places are finite"),
        }
    }

    fn field(&self) -> ResidueField {
        ResidueField::new(self.uniformizer().clone())
    }

    /// Rewrite input-chart coordinates in the working chart.
    pub fn chart_xy(&self, x: &RatFunc, y: &RatFunc) -> (RatFunc, RatFunc) {
        if self.place.is_infinity() {
            (x.subst_inverse(), y.subst_inverse())
        } else {
            (x.clone(), y.clone())
        }
    }

    /// Coordinates of the point on the v-minimal model.
    pub fn minimal_xy(&self, x: &RatFunc, y: &RatFunc) -> (RatFunc, RatFunc) {
        let (cx, cy) = self.chart_xy(x, y);
        self.minimal_substitution.map_xy(&cx, &cy)
    }

    /// Local contact multiplicity of the section with the zero section:
    /// max(0, −v(x′)/2) on the v-minimal model. An odd pole order cannot
    /// occur on a minimal integral model, so it is reported as a violation.
    pub fn contact_with_zero(&self, x: &RatFunc, y: &RatFunc) -> Result<i64> {
        let (xp, _) = self.minimal_xy(x, y);
        let vx = valuation(&xp, &self.chart_place);
        if vx >= 0 {
            return Ok(0);
        }
        if vx.rem_euclid(2) == 1 {
            return Err(Error::MinimalityViolation {
                place: self.place.to_string(),
                order: -vx,
            });
        }
        Ok(-vx / 2)
    }

    /// Which component of the special fiber the closure of the section
    /// meets. Sections only ever meet simple components, which keeps the
    /// answer finite: the identity component, a position `i` along the
    /// cycle of a multiplicative fiber (folded into 0 ≤ i ≤ n/2), the
    /// near/far ends of an I(n ≥ 1)* chain, or the single class of
    /// non-identity simple components everywhere else.
    pub fn component_index(&self, x: &RatFunc, y: &RatFunc) -> Result<FiberComponent> {
        let (xp, yp) = self.minimal_xy(x, y);
        let vx = valuation(&xp, &self.chart_place);
        // A pole of x′ means the section reduces to the zero section, which
        // lies on the identity component.
        if vx < 0 {
            return Ok(FiberComponent::Identity);
        }
        match self.kodaira {
            // Fibers whose smooth locus is connected: II and II* carry a
            // single simple component, so every section lands on it.
            KodairaType::I(0) | KodairaType::II | KodairaType::IIStar => {
                Ok(FiberComponent::Identity)
            }
            KodairaType::I(n) => {
                let fld = self.field();
                let xbar = fld.reduce_fn(&xp);
                let ybar = fld.reduce_fn(&yp);
                let node = self.node_x.as_ref().expect("node of a multiplicative fiber");
                if !ybar.is_zero() || !fld.sub(&xbar, node).is_zero() {
                    return Ok(FiberComponent::Identity);
                }
                // Component index along the cycle, folded into 0..n/2: the
                // valuation of y′ measures how deep into the node the
                // section sinks, capped at the opposite side of the cycle.
                let i = valuation(&yp, &self.chart_place).min(n as i64 / 2);
                if i == 0 {
                    Ok(FiberComponent::Identity)
                } else {
                    Ok(FiberComponent::Cycle(i as u32))
                }
            }
            other => {
                // Additive fibers: the reduction is a cusp at the origin of
                // the minimal model, so x′ a unit means the section avoids
                // the singular point and stays on the identity component.
                if vx == 0 {
                    return Ok(FiberComponent::Identity);
                }
                match other {
                    KodairaType::IStar(n) if n >= 1 => {
                        let theta = self.star_theta.as_ref().expect("double root data");
                        let shift = RatFunc::from_poly(self.uniformizer() * theta);
                        let d = valuation(&(&xp - &shift), &self.chart_place);
                        if d < 1 {
                            return Err(Error::ComponentIdentification {
                                place: self.place.to_string(),
                                detail: format!("x′ ≡ {d} against the chain root"),
                            });
                        }
                        if d >= 2 {
                            Ok(FiberComponent::Far)
                        } else {
                            Ok(FiberComponent::Near)
                        }
                    }
                    _ => Ok(FiberComponent::NonIdentity),
                }
            }
        }
    }

    /// The height correction attached to a component of this fiber (not yet
    /// weighted by the degree of the place).
    pub fn correction_of(&self, comp: &FiberComponent) -> Rat {
        match (comp, self.kodaira) {
            (FiberComponent::Identity, _) => Rat::zero(),
            (FiberComponent::Cycle(i), KodairaType::I(n)) => {
                let i = *i as i64;
                rat(i * (n as i64 - i), n as i64)
            }
            (FiberComponent::Near, KodairaType::IStar(_)) => Rat::one(),
            (FiberComponent::Far, KodairaType::IStar(n)) => rat(n as i64 + 4, 4),
            (FiberComponent::NonIdentity, KodairaType::III) => rat(1, 2),
            (FiberComponent::NonIdentity, KodairaType::IV) => rat(2, 3),
            (FiberComponent::NonIdentity, KodairaType::IStar(0)) => Rat::one(),
            (FiberComponent::NonIdentity, KodairaType::IVStar) => rat(4, 3),
            (FiberComponent::NonIdentity, KodairaType::IIIStar) => rat(3, 2),
            _ => unreachable!("component {comp:?} cannot occur on {}", self.kodaira),
        }
    }

    /// The component term of the height at this place: 0 on the identity
    /// component, the fixed rational of the met component otherwise.
    pub fn component_correction(&self, x: &RatFunc, y: &RatFunc) -> Result<Rat> {
        Ok(self.correction_of(&self.component_index(x, y)?))
    }
}

/// Identifier of the fiber component a section meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberComponent {
    Identity,
    /// Multiplicative fibers: position along the cycle, folded to 1..⌊n/2⌋.
    Cycle(u32),
    /// I(n ≥ 1)*: the simple component at the end nearest the identity.
    Near,
    /// I(n ≥ 1)*: the pair of simple components at the far end of the chain.
    Far,
    /// The single correction class of the remaining additive types.
    NonIdentity,
}

/// Largest e with 4e ≤ v(c4) and 6e ≤ v(c6); the scaling x = π^{2e} x′,
/// y = π^{3e} y′ then lands on the minimal model. When one of c4, c6
/// vanishes identically, the other alone decides.
fn scaling_exponent(v4: Option<i64>, v6: Option<i64>) -> i64 {
    match (v4, v6) {
        (Some(a), Some(b)) => a.div_euclid(4).min(b.div_euclid(6)),
        (Some(a), None) => a.div_euclid(4),
        (None, Some(b)) => b.div_euclid(6),
        (None, None) => unreachable!("c4 = c6 = 0 forces Δ = 0"),
    }
}

/// Fiber type from the minimal valuations of (Δ, c4). Exhaustive in
/// characteristic zero: the identity 1728Δ = c4³ − c6² rules every other
/// combination out.
fn classify(vd: i64, v4: Option<i64>) -> KodairaType {
    if vd == 0 {
        return KodairaType::I(0);
    }
    if v4 == Some(0) {
        return KodairaType::I(vd as u32);
    }
    match vd {
        2 => KodairaType::II,
        3 => KodairaType::III,
        4 => KodairaType::IV,
        6 => KodairaType::IStar(0),
        _ if v4 == Some(2) && vd >= 7 => KodairaType::IStar((vd - 6) as u32),
        8 => KodairaType::IVStar,
        9 => KodairaType::IIIStar,
        10 => KodairaType::IIStar,
        _ => unreachable!("no fiber type for minimal valuations vΔ = {vd}, vc4 = {v4:?}"),
    }
}

/// Full local analysis of a model at one place.
pub fn tate_at(model: &Model, place: &Place) -> Result<LocalData> {
    match place {
        Place::Infinity => {
            let chart = model.at_infinity();
            let s_place = Place::Finite(Poly::var());
            let mut data = tate_finite(&chart, &s_place)?;
            data.place = Place::Infinity;
            Ok(data)
        }
        Place::Finite(_) => tate_finite(model, place),
    }
}

fn tate_finite(chart_model: &Model, v: &Place) -> Result<LocalData> {
    let p = match v {
        Place::Finite(p) => p.clone(),
        Place::Infinity => unreachable!(),
    };
    let c4 = chart_model.c4();
    let c6 = chart_model.c6();
    let delta = chart_model.delta();
    let v4 = (!c4.is_zero()).then(|| valuation(&c4, v));
    let v6 = (!c6.is_zero()).then(|| valuation(&c6, v));
    let e = scaling_exponent(v4, v6);

    let pi = RatFunc::from_poly(p.clone());
    let substitution = Transform::to_short(chart_model).then(&Transform::scaling(pi.pow(e)?));
    let minimal = substitution.apply(chart_model);
    let v_delta_min = valuation(&delta, v) - 12 * e;
    let v4_min = v4.map(|a| a - 4 * e);
    let kodaira = classify(v_delta_min, v4_min);
    debug_assert_eq!(v_delta_min, kodaira.delta_valuation());
    debug_assert!(valuation(&minimal.a4, v) >= 0 && valuation(&minimal.a6, v) >= 0);

    let fld = ResidueField::new(p.clone());
    let mut node_x = None;
    let mut star_theta = None;
    match kodaira {
        KodairaType::I(n) if n >= 1 => {
            // Node of ȳ² = x̄³ + Āx̄ + B̄: the unique multiple root of the cubic.
            let abar = fld.reduce_fn(&minimal.a4);
            let bbar = fld.reduce_fn(&minimal.a6);
            let cubic = KPoly::new(&fld, vec![bbar, abar, Poly::zero(), Poly::one()]);
            node_x = Some(
                cubic
                    .multiple_root(&fld)
                    .expect("multiplicative fiber carries a unique node"),
            );
        }
        KodairaType::IStar(n) if n >= 1 => {
            // Here v(A) = 2 and v(B) = 3 exactly; the depth-one cubic
            // X³ + (A/π²)X + (B/π³) has the double root θ = −3b/2a.
            debug_assert_eq!(valuation(&minimal.a4, v), 2);
            debug_assert_eq!(valuation(&minimal.a6, v), 3);
            let pi2 = &pi * &pi;
            let pi3 = &pi2 * &pi;
            let a = fld.reduce_fn(&(&minimal.a4 / &pi2));
            let b = fld.reduce_fn(&(&minimal.a6 / &pi3));
            let theta = fld.scale(&fld.mul(&b, &fld.inv(&a)), &rat(-3, 2));
            star_theta = Some(theta);
        }
        _ => {}
    }

    Ok(LocalData {
        place: v.clone(),
        kodaira,
        v_delta_min,
        conductor_exponent: kodaira.conductor_exponent(),
        component_count: kodaira.component_count(),
        minimal_substitution: substitution,
        minimal_model: minimal,
        scaling_exponent: e,
        chart_place: v.clone(),
        node_x,
        star_theta,
    })
}
