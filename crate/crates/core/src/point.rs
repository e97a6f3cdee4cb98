//! The group of sections: chord–tangent arithmetic on a long Weierstrass
//! model over Q(t), with exact rational-function coordinates.

use crate::error::Error;
use crate::ratfunc::RatFunc;
use crate::weierstrass::Model;
use crate::Result;

/// A point of the generic fiber: the zero section or an affine section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MWPoint {
    Zero,
    Affine { x: RatFunc, y: RatFunc },
}

impl MWPoint {
    pub fn affine(x: RatFunc, y: RatFunc) -> MWPoint {
        MWPoint::Affine { x, y }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MWPoint::Zero)
    }

    pub fn xy(&self) -> Option<(&RatFunc, &RatFunc)> {
        match self {
            MWPoint::Zero => None,
            MWPoint::Affine { x, y } => Some((x, y)),
        }
    }

    /// Parse `"O"` or `["x", "y"]` with rational-function strings.
    pub fn from_json(text: &str, var: &str) -> Result<MWPoint> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("point JSON: {e}")))?;
        match &value {
            serde_json::Value::String(s) if s == "O" => Ok(MWPoint::Zero),
            serde_json::Value::Array(items) if items.len() == 2 => {
                let coord = |v: &serde_json::Value| -> Result<RatFunc> {
                    match v {
                        serde_json::Value::String(s) => RatFunc::parse_named(s, var),
                        _ => Err(Error::Parse("point coordinates must be strings".into())),
                    }
                };
                Ok(MWPoint::Affine {
                    x: coord(&items[0])?,
                    y: coord(&items[1])?,
                })
            }
            _ => Err(Error::Parse(
                "expected \"O\" or a two-element coordinate array".into(),
            )),
        }
    }

    pub fn to_json(&self, var: &str) -> serde_json::Value {
        match self {
            MWPoint::Zero => serde_json::Value::String("O".into()),
            MWPoint::Affine { x, y } => serde_json::json!([
                x.to_string_with(var),
                y.to_string_with(var)
            ]),
        }
    }

    pub fn display(&self, var: &str) -> String {
        match self {
            MWPoint::Zero => "O".to_string(),
            MWPoint::Affine { x, y } => {
                format!("({}, {})", x.to_string_with(var), y.to_string_with(var))
            }
        }
    }
}

/// Check that a point lies on the model, exactly.
pub fn require_on(m: &Model, p: &MWPoint) -> Result<()> {
    match p {
        MWPoint::Zero => Ok(()),
        MWPoint::Affine { x, y } => {
            if m.contains(x, y) {
                Ok(())
            } else {
                Err(Error::PointNotOnCurve(p.display("t")))
            }
        }
    }
}

/// −P = (x, −y − a1·x − a3).
pub fn neg(m: &Model, p: &MWPoint) -> Result<MWPoint> {
    require_on(m, p)?;
    Ok(match p {
        MWPoint::Zero => MWPoint::Zero,
        MWPoint::Affine { x, y } => MWPoint::Affine {
            x: x.clone(),
            y: -&(&(y + &(&m.a1 * x)) + &m.a3),
        },
    })
}

/// Chord–tangent addition on the long model.
pub fn add(m: &Model, p: &MWPoint, q: &MWPoint) -> Result<MWPoint> {
    require_on(m, p)?;
    require_on(m, q)?;
    Ok(add_raw(m, p, q))
}

/// The group law itself, for arguments already known to lie on the curve:
/// the iterated operations stay on the curve, so revalidating ever-larger
/// coordinates in a loop would only burn time.
pub(crate) fn add_raw(m: &Model, p: &MWPoint, q: &MWPoint) -> MWPoint {
    let (x1, y1) = match p {
        MWPoint::Zero => return q.clone(),
        MWPoint::Affine { x, y } => (x, y),
    };
    let (x2, y2) = match q {
        MWPoint::Zero => return p.clone(),
        MWPoint::Affine { x, y } => (x, y),
    };

    let lambda = if x1 != x2 {
        &(y2 - y1) / &(x2 - x1)
    } else {
        // same x: either Q = −P (sum is O) or P = Q (tangent line)
        let neg_y1 = -&(&(y1 + &(&m.a1 * x1)) + &m.a3);
        if *y2 == neg_y1 {
            return MWPoint::Zero;
        }
        // tangent slope; the denominator ψ₂(P) = 2y + a1x + a3 is nonzero
        // here, else Q = −P would have triggered above
        let num = &(&(&(x1 * x1).scale_int(3) + &(&m.a2 * x1).scale_int(2)) + &m.a4)
            - &(&m.a1 * y1);
        let den = &(&y1.scale_int(2) + &(&m.a1 * x1)) + &m.a3;
        &num / &den
    };
    let nu = y1 - &(&lambda * x1);
    let x3 = &(&(&(&lambda * &lambda) + &(&m.a1 * &lambda)) - &m.a2) - &(x1 + x2);
    let y3 = -&(&(&(&(&lambda + &m.a1) * &x3) + &nu) + &m.a3);
    MWPoint::Affine { x: x3, y: y3 }
}

pub fn sub(m: &Model, p: &MWPoint, q: &MWPoint) -> Result<MWPoint> {
    let nq = neg(m, q)?;
    add(m, p, &nq)
}

/// n·P by double-and-add; negative n through the inverse.
pub fn mul(m: &Model, n: i64, p: &MWPoint) -> Result<MWPoint> {
    require_on(m, p)?;
    if n == 0 || p.is_zero() {
        return Ok(MWPoint::Zero);
    }
    let (mut k, base) = if n < 0 {
        (n.unsigned_abs(), neg(m, p)?)
    } else {
        (n as u64, p.clone())
    };
    let mut acc = MWPoint::Zero;
    let mut pow = base;
    loop {
        if k & 1 == 1 {
            acc = add_raw(m, &acc, &pow);
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        pow = add_raw(m, &pow, &pow);
    }
    Ok(acc)
}

/// Smallest n ≤ max_order with nP = O, if any.
pub fn is_torsion(m: &Model, p: &MWPoint, max_order: u32) -> Result<Option<u32>> {
    require_on(m, p)?;
    let mut acc = MWPoint::Zero;
    for n in 1..=max_order {
        acc = add_raw(m, &acc, p);
        if acc.is_zero() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
