//! Places of the projective line over Q: monic irreducible polynomials and
//! the place at infinity, with valuations and principal divisors.

use crate::error::Error;
use crate::factor;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::Result;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Sentinel valuation for the zero function; larger than every finite
/// valuation that can occur. Never do arithmetic with it.
pub const VAL_INFINITY: i64 = i64::MAX;

/// A closed point of P¹ over Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// Monic irreducible polynomial over Q.
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Construct a finite place; the polynomial is normalized to monic and
    /// checked for irreducibility over Q.
    pub fn finite(p: Poly) -> Result<Place> {
        if p.deg() < 1 {
            return Err(Error::NotIrreducible(p.to_string()));
        }
        let p = p.monic();
        if !factor::is_irreducible(&p) {
            return Err(Error::NotIrreducible(p.to_string()));
        }
        Ok(Place::Finite(p))
    }

    /// The place t = r for a rational number r.
    pub fn at(r: i64) -> Place {
        Place::Finite(&Poly::var() - &Poly::constant_i(r))
    }

    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(p) => p.deg() as u32,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// Parse "(t-1)", "t-1", or "inf"/"oo". The parenthesized form is the
    /// canonical one the serializer emits.
    pub fn parse(s: &str) -> Result<Place> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf")
            || s.eq_ignore_ascii_case("infinity")
            || s == "oo"
        {
            return Ok(Place::Infinity);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        Place::finite(Poly::parse(inner)?)
    }

    /// Parse a comma-separated list of places, respecting parentheses:
    /// "(t),(t-1),inf".
    pub fn parse_list(s: &str) -> Result<Vec<Place>> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(vec![]);
        }
        let mut out = vec![];
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?
                }
                ',' if depth == 0 => {
                    out.push(Place::parse(&s[start..i])?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push(Place::parse(&s[start..])?);
        Ok(out)
    }

    fn sort_key(&self) -> (u8, usize) {
        match self {
            Place::Finite(p) => (0, p.deg()),
            Place::Infinity => (1, 0),
        }
    }
}

impl Ord for Place {
    /// Canonical order: finite places by degree then coefficients (constant
    /// term first), infinity last. Gives every report a stable layout.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a
                .deg()
                .cmp(&b.deg())
                .then_with(|| a.coeffs().cmp(b.coeffs())),
            _ => self.sort_key().cmp(&other.sort_key()),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place({self})")
    }
}

/// Order of vanishing of x at v. For finite v = (p): multiplicity of p in
/// num minus multiplicity in den; at infinity: deg(den) − deg(num).
/// The zero function answers [`VAL_INFINITY`].
pub fn valuation(x: &RatFunc, v: &Place) -> i64 {
    if x.is_zero() {
        return VAL_INFINITY;
    }
    match v {
        Place::Finite(p) => {
            let up = x.num().multiplicity_of(p) as i64;
            let down = x.den().multiplicity_of(p) as i64;
            up - down
        }
        Place::Infinity => x.val_at_infinity(),
    }
}

/// Divisor on P¹ with integer multiplicities, finitely supported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct P1Divisor {
    entries: BTreeMap<Place, i64>,
}

impl P1Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: Place, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.entries.entry(v.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.entries.remove(&v);
        }
    }

    pub fn multiplicity(&self, v: &Place) -> i64 {
        self.entries.get(v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ multiplicity · deg(place).
    pub fn degree(&self) -> i64 {
        self.entries
            .iter()
            .map(|(p, &m)| m * p.degree() as i64)
            .sum()
    }
}

impl fmt::Display for P1Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(p, m)| format!("{m}*{p}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Principal divisor of a nonzero rational function. Factors numerator and
/// denominator outright; total degree is always zero (the product formula).
pub fn divisor_of(x: &RatFunc) -> Result<P1Divisor> {
    if x.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut div = P1Divisor::new();
    let (_, num_factors) = factor::poly_factor(x.num())?;
    for (p, m) in num_factors {
        div.add(Place::Finite(p), m as i64);
    }
    let (_, den_factors) = factor::poly_factor(x.den())?;
    for (p, m) in den_factors {
        div.add(Place::Finite(p), -(m as i64));
    }
    div.add(Place::Infinity, x.val_at_infinity());
    Ok(div)
}
