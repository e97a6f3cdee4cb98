//! Long Weierstrass models over Q(t) and coordinate changes.
//!
//! A model is y² + a1 xy + a3 y = x³ + a2 x² + a4 x + a6 with coefficients in
//! Q(t). The standard quantities b2..b8, c4, c6, Δ, j are computed exactly,
//! and admissible coordinate changes (u, r, s, w) — meaning
//! x = u²x′ + r, y = u³y′ + s u²x′ + w — act on models and points with exact
//! composition.

use crate::error::Error;
use crate::rat::rat;
use crate::ratfunc::RatFunc;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A long Weierstrass model with nonzero discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub a1: RatFunc,
    pub a2: RatFunc,
    pub a3: RatFunc,
    pub a4: RatFunc,
    pub a6: RatFunc,
}

impl Model {
    pub fn new(a1: RatFunc, a2: RatFunc, a3: RatFunc, a4: RatFunc, a6: RatFunc) -> Result<Model> {
        let m = Model { a1, a2, a3, a4, a6 };
        if m.delta().is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(m)
    }

    /// Short form y² = x³ + a4 x + a6.
    pub fn short(a4: RatFunc, a6: RatFunc) -> Result<Model> {
        Model::new(
            RatFunc::zero(),
            RatFunc::zero(),
            RatFunc::zero(),
            a4,
            a6,
        )
    }

    pub fn b2(&self) -> RatFunc {
        &(&self.a1 * &self.a1) + &self.a2.scale_int(4)
    }

    pub fn b4(&self) -> RatFunc {
        &self.a4.scale_int(2) + &(&self.a1 * &self.a3)
    }

    pub fn b6(&self) -> RatFunc {
        &(&self.a3 * &self.a3) + &self.a6.scale_int(4)
    }

    pub fn b8(&self) -> RatFunc {
        let a1a6 = &(&self.a1 * &self.a1) * &self.a6;
        let a2a6 = (&self.a2 * &self.a6).scale_int(4);
        let a134 = &(&self.a1 * &self.a3) * &self.a4;
        let a233 = &self.a2 * &(&self.a3 * &self.a3);
        let a44 = &self.a4 * &self.a4;
        &(&(&(&a1a6 + &a2a6) - &a134) + &a233) - &a44
    }

    pub fn c4(&self) -> RatFunc {
        let b2 = self.b2();
        &(&b2 * &b2) - &self.b4().scale_int(24)
    }

    pub fn c6(&self) -> RatFunc {
        let b2 = self.b2();
        let b2cube = &(&b2 * &b2) * &b2;
        &(&(&b2 * &self.b4()).scale_int(36) - &b2cube) - &self.b6().scale_int(216)
    }

    pub fn delta(&self) -> RatFunc {
        let b2 = self.b2();
        let b4 = self.b4();
        let b6 = self.b6();
        let b8 = self.b8();
        let t1 = -&(&(&b2 * &b2) * &b8);
        let t2 = (&(&b4 * &b4) * &b4).scale_int(-8);
        let t3 = (&b6 * &b6).scale_int(-27);
        let t4 = (&(&b2 * &b4) * &b6).scale_int(9);
        &(&(&t1 + &t2) + &t3) + &t4
    }

    /// j = c4³ / Δ.
    pub fn j(&self) -> RatFunc {
        let c4 = self.c4();
        let c4cube = &(&c4 * &c4) * &c4;
        &c4cube / &self.delta()
    }

    /// Exact check of the defining identity 1728 Δ = c4³ − c6².
    pub fn identity_holds(&self) -> bool {
        let c4 = self.c4();
        let c6 = self.c6();
        let lhs = self.delta().scale_int(1728);
        let rhs = &(&(&c4 * &c4) * &c4) - &(&c6 * &c6);
        lhs == rhs
    }

    /// Does (x, y) satisfy the model equation exactly?
    pub fn contains(&self, x: &RatFunc, y: &RatFunc) -> bool {
        let lhs = &(y * y) + &(&(&(&self.a1 * x) * y) + &(&self.a3 * y));
        let x2 = x * x;
        let rhs = &(&(&x2 * x) + &(&self.a2 * &x2)) + &(&(&self.a4 * x) + &self.a6);
        lhs == rhs
    }

    /// The same curve with coefficients rewritten in the coordinate s = 1/t.
    /// Places at infinity of the t-line become the place (s) of the s-line.
    pub fn at_infinity(&self) -> Model {
        Model {
            a1: self.a1.subst_inverse(),
            a2: self.a2.subst_inverse(),
            a3: self.a3.subst_inverse(),
            a4: self.a4.subst_inverse(),
            a6: self.a6.subst_inverse(),
        }
    }

    /// Parse {"a1": "...", ..., "a6": "..."} with rational-function strings
    /// in the variable `var`.
    pub fn from_json(text: &str, var: &str) -> Result<Model> {
        let raw: BTreeMap<String, String> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("curve JSON: {e}")))?;
        let get = |key: &str| -> Result<RatFunc> {
            match raw.get(key) {
                Some(s) => RatFunc::parse_named(s, var),
                None => Ok(RatFunc::zero()),
            }
        };
        for key in raw.keys() {
            if !matches!(key.as_str(), "a1" | "a2" | "a3" | "a4" | "a6") {
                return Err(Error::Parse(format!("unknown curve coefficient `{key}`")));
            }
        }
        Model::new(get("a1")?, get("a2")?, get("a3")?, get("a4")?, get("a6")?)
    }

    pub fn to_json(&self, var: &str) -> String {
        let obj = CurveJson {
            a1: self.a1.to_string_with(var),
            a2: self.a2.to_string_with(var),
            a3: self.a3.to_string_with(var),
            a4: self.a4.to_string_with(var),
            a6: self.a6.to_string_with(var),
        };
        serde_json::to_string(&obj).expect("serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct CurveJson {
    a1: String,
    a2: String,
    a3: String,
    a4: String,
    a6: String,
}

/// An admissible change of coordinates x = u²x′ + r, y = u³y′ + s u²x′ + w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform {
    pub u: RatFunc,
    pub r: RatFunc,
    pub s: RatFunc,
    pub w: RatFunc,
}

impl Transform {
    pub fn identity() -> Transform {
        Transform {
            u: RatFunc::one(),
            r: RatFunc::zero(),
            s: RatFunc::zero(),
            w: RatFunc::zero(),
        }
    }

    pub fn scaling(u: RatFunc) -> Transform {
        assert!(!u.is_zero());
        Transform {
            u,
            r: RatFunc::zero(),
            s: RatFunc::zero(),
            w: RatFunc::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.r.is_zero() && self.s.is_zero() && self.w.is_zero()
    }

    /// The transformed model: a1′ = (a1 + 2s)/u and so on.
    pub fn apply(&self, m: &Model) -> Model {
        let (u, r, s, w) = (&self.u, &self.r, &self.s, &self.w);
        let u2 = u * u;
        let u3 = &u2 * u;
        let u4 = &u2 * &u2;
        let u6 = &u3 * &u3;
        let a1 = &(&m.a1 + &s.scale_int(2)) / u;
        let a2 = {
            let n = &(&(&m.a2 - &(s * &m.a1)) + &r.scale_int(3)) - &(s * s);
            &n / &u2
        };
        let a3 = {
            let n = &(&m.a3 + &(r * &m.a1)) + &w.scale_int(2);
            &n / &u3
        };
        let a4 = {
            let rs = r * s;
            let n = &(&(&(&m.a4 - &(s * &m.a3)) + &(r * &m.a2).scale_int(2))
                - &(&(w + &rs) * &m.a1))
                + &(&(r * r).scale_int(3) - &(s * w).scale_int(2));
            &n / &u4
        };
        let a6 = {
            let r2 = r * r;
            let n = &(&(&(&(&m.a6 + &(r * &m.a4)) + &(&r2 * &m.a2)) + &(&r2 * r))
                - &(&(w * &m.a3) + &(w * w)))
                - &(&(r * w) * &m.a1);
            &n / &u6
        };
        Model { a1, a2, a3, a4, a6 }
    }

    /// Map a point of the source model to the transformed coordinates:
    /// x′ = (x − r)/u², y′ = (y − s(x − r) − w)/u³.
    pub fn map_xy(&self, x: &RatFunc, y: &RatFunc) -> (RatFunc, RatFunc) {
        let u2 = &self.u * &self.u;
        let u3 = &u2 * &self.u;
        let xr = x - &self.r;
        let xp = &xr / &u2;
        let yp = &(&(y - &(&self.s * &xr)) - &self.w) / &u3;
        (xp, yp)
    }

    /// Map back: x = u²x′ + r, y = u³y′ + s u²x′ + w.
    pub fn unmap_xy(&self, xp: &RatFunc, yp: &RatFunc) -> (RatFunc, RatFunc) {
        let u2 = &self.u * &self.u;
        let u3 = &u2 * &self.u;
        let x = &(&u2 * xp) + &self.r;
        let y = &(&(&u3 * yp) + &(&(&self.s * &u2) * xp)) + &self.w;
        (x, y)
    }

    /// Composite transform: self first, then `next` on the primed
    /// coordinates.
    pub fn then(&self, next: &Transform) -> Transform {
        let u = &self.u * &next.u;
        let u1sq = &self.u * &self.u;
        let r = &(&u1sq * &next.r) + &self.r;
        let s = &(&self.u * &next.s) + &self.s;
        let w = &(&(&(&u1sq * &self.u) * &next.w) + &(&(&self.s * &u1sq) * &next.r)) + &self.w;
        Transform { u, r, s, w }
    }

    /// The transform to the short form y² = x³ − (c4/48)x − (c6/864) of a
    /// given model (u = 1; only translations and shears).
    pub fn to_short(m: &Model) -> Transform {
        let half = rat(1, 2);
        let s = -&m.a1.scale(&half);
        let w = -&m.a3.scale(&half);
        let depress = Transform {
            u: RatFunc::one(),
            r: RatFunc::zero(),
            s,
            w,
        };
        let b2 = m.b2();
        let shift = Transform {
            u: RatFunc::one(),
            r: -&b2.scale(&rat(1, 12)),
            s: RatFunc::zero(),
            w: RatFunc::zero(),
        };
        depress.then(&shift)
    }
}
