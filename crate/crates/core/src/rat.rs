//! Exact rational scalars.
//!
//! `Rat` is `num::BigRational`: always reduced, denominator always positive,
//! which is exactly the invariant the rest of the crate relies on. The
//! helpers here are the few constructors and conversions everything uses.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Parse "3", "-3", "1/2", "-1/2". Whitespace around the slash is accepted.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let n: Int = a.trim().parse().ok()?;
            let d: Int = b.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Floor of an exact rational, as a big integer.
pub fn floor_rat(x: &Rat) -> Int {
    x.floor().to_integer()
}

/// Ceiling of an exact rational, as a big integer.
pub fn ceil_rat(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Integer square root (floor) of a nonnegative big integer.
pub fn isqrt(n: &Int) -> Int {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Largest integer n with (n + shift)^2 <= r, i.e. n <= sqrt(r) - shift,
/// for exact rational r >= 0. Used by the lattice enumerator so no interval
/// endpoint is ever decided in floating point.
pub fn max_int_below_sqrt(r: &Rat, shift: &Rat) -> Int {
    assert!(!r.is_negative());
    // sqrt(p/q) = sqrt(p*q)/q, and floor(floor(sqrt(pq))/q) = floor(sqrt(p/q)).
    let p = r.numer();
    let q = r.denom();
    let root = isqrt(&(p * q));
    let approx = floor_rat(&(Rat::new(root, q.clone()) - shift));
    // The floor above can be off by one in either direction once the shift is
    // folded in; fix up against the exact predicate.
    let ok = |n: &Int| {
        let v = Rat::from_integer(n.clone()) + shift;
        !v.is_positive() || &v * &v <= *r
    };
    let mut n = approx;
    while ok(&(&n + 1)) {
        n += 1;
    }
    while !ok(&n) {
        n -= 1;
    }
    n
}

/// Smallest integer n with (n + shift)^2 <= r; the mirror of
/// [`max_int_below_sqrt`].
pub fn min_int_above_neg_sqrt(r: &Rat, shift: &Rat) -> Int {
    -max_int_below_sqrt(r, &-shift.clone())
}

pub fn rat_sign(x: &Rat) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
