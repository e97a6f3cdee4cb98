//! Reduced rational functions over Q and the expression parser for the
//! string formats used at every boundary (CLI flags, JSON files, corpus
//! fixtures).

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::{Int, Rat};
use crate::Result;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Element of Q(t). Invariants: den is monic and nonzero, gcd(num, den) = 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.deg() >= 1 {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        } else {
            (num, den)
        };
        let lead = den.leading();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.scale(&(Rat::one() / &lead)),
                den: den.monic(),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(Poly::constant_i(c))
    }

    /// The variable t.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The constant value, when there is one.
    pub fn as_rat(&self) -> Option<Rat> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(RatFunc {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        })
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitute t = 1/s: returns the same function expressed in the chart
    /// at infinity (the result's variable is s).
    pub fn subst_inverse(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.deg();
        let dd = self.den.deg();
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        // f(1/s) = s^(dd-dn) * rev(num)(s) / rev(den)(s)
        if dd >= dn {
            RatFunc::reduced(rn.shift_up(dd - dn), rd)
        } else {
            RatFunc::reduced(rn, rd.shift_up(dn - dd))
        }
    }

    /// Degree of the divisor of poles minus zeros at infinity, i.e.
    /// deg(den) - deg(num); the valuation of self at the infinite place.
    pub fn val_at_infinity(&self) -> i64 {
        self.den.deg() as i64 - self.num.deg() as i64
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.to_string_with(var)
        } else {
            format!(
                "({}) / ({})",
                self.num.to_string_with(var),
                self.den.to_string_with(var)
            )
        }
    }

    /// Parse an arithmetic expression over Q in one variable: `+ - * / ^`,
    /// parentheses, implicit multiplication ("3t", "2(t+1)"). Any single
    /// identifier may serve as the variable name.
    pub fn parse(s: &str) -> Result<RatFunc> {
        let tokens = lex(s)?;
        let mut p = Parser { tokens, pos: 0, var: None };
        let value = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input in {s:?}"
            )));
        }
        Ok(value)
    }

    /// Parse like [`RatFunc::parse`] but reject expressions whose variable
    /// is not `var` (guards against typos in structured input files).
    pub fn parse_named(s: &str, var: &str) -> Result<RatFunc> {
        let tokens = lex(s)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            var: Some(var.to_string()),
        };
        let value = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input in {s:?}"
            )));
        }
        Ok(value)
    }

    /// Multiply by an exact rational constant.
    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by an integer constant.
    pub fn scale_int(&self, c: i64) -> RatFunc {
        self.scale(&Rat::from_integer(c.into()))
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Poly {
    /// Parse a polynomial: any expression that reduces to denominator 1.
    pub fn parse(s: &str) -> Result<Poly> {
        let f = RatFunc::parse(s)?;
        match f.as_poly() {
            Some(p) => Ok(p.clone()),
            None => Err(Error::Parse(format!("{s:?} is not a polynomial"))),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Division panics on a zero divisor; fallible call sites use [`RatFunc::inv`].
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = vec![];
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(n.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' | '−' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            other => {
                return Err(Error::Parse(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
    var: Option<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    acc = &acc / &rhs;
                }
                // implicit multiplication: adjacency of value-starting tokens
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    base.pow(if neg { -e } else { e })
                }
                other => Err(Error::Parse(format!(
                    "expected integer exponent, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(RatFunc::from_rat(Rat::from_integer(n))),
            Some(Tok::Ident(id)) => {
                match &self.var {
                    Some(v) if *v != id => {
                        return Err(Error::Parse(format!(
                            "two different variables: {v:?} and {id:?}"
                        )))
                    }
                    None => self.var = Some(id),
                    _ => {}
                }
                Ok(RatFunc::var())
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn parser_handles_spec_formats() {
        assert_eq!(rf("t^3 - 1/2*t + 4").to_string(), "t^3 - 1/2*t + 4");
        assert_eq!(rf("t^3-1/2t+4").to_string(), "t^3 - 1/2*t + 4");
        assert_eq!(rf("16*l^2*(l-1)^2").to_string(), "16*t^4 - 32*t^3 + 16*t^2");
        assert_eq!(rf("(t^2 + 1) / (t - 1)").to_string(), "(t^2 + 1) / (t - 1)");
        assert_eq!(rf("3 / 4").as_rat(), Some(rat(3, 4)));
        assert_eq!(rf("t^-2").to_string(), "(1) / (t^2)");
        assert_eq!(rf("-(t-1)(t+1)").to_string(), "-t^2 + 1");
        assert!(RatFunc::parse("t + s").is_err());
        assert!(RatFunc::parse("1 / (t - t)").is_err());
        assert!(RatFunc::parse("t +").is_err());
    }

    #[test]
    fn reduction_keeps_denominator_monic() {
        let f = rf("(2t + 2) / (2t - 4)");
        assert_eq!(f.to_string(), "(t + 1) / (t - 2)");
        let g = rf("(t^2 - 1) / (t - 1)");
        assert_eq!(g.to_string(), "t + 1");
    }

    #[test]
    fn subst_inverse_is_an_involution() {
        for s in ["t^2", "(t^2 + 1) / (t - 1)", "5", "(t) / (t^3 - 2)"] {
            let f = rf(s);
            assert_eq!(f.subst_inverse().subst_inverse(), f);
        }
        // t |-> 1/s
        assert_eq!(rf("t").subst_inverse().to_string(), "(1) / (t)");
        // val at infinity matches the s-chart order at zero
        let f = rf("(t^2) / (t - 1)");
        assert_eq!(f.val_at_infinity(), -1);
    }

    #[test]
    fn field_ops_reduce() {
        let a = rf("(t) / (t + 1)");
        let b = rf("(1) / (t + 1)");
        assert_eq!((&a + &b).to_string(), "1");
        assert_eq!((&a / &a).to_string(), "1");
        assert!((&a - &a).is_zero());
    }
}
