//! Arithmetic in residue fields of finite places.
//!
//! A finite place v = (p) of Q(t) has residue field k_v = Q[t]/(p), a number
//! field of degree deg p presented here concretely: elements are polynomial
//! representatives of degree < deg p. Only the handful of operations the
//! reduction machinery needs are provided: normalization, field ops, and
//! gcd-based multiple-root location for polynomials over k_v.

use crate::poly::Poly;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use num::One;

/// The residue field at a finite place, with the monic irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    modulus: Poly,
}

impl ResidueField {
    pub fn new(modulus: Poly) -> Self {
        debug_assert!(modulus.is_monic() && modulus.deg() >= 1);
        ResidueField { modulus }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Canonical representative: reduce mod the modulus.
    pub fn reduce(&self, a: &Poly) -> Poly {
        let (_, r) = a.divrem(&self.modulus);
        r
    }

    /// Reduce a rational function that is integral at this place.
    /// Panics if the denominator vanishes in the residue field (i.e. the
    /// input is not integral here) — callers check valuations first.
    pub fn reduce_fn(&self, x: &RatFunc) -> Poly {
        let den = self.reduce(x.den());
        assert!(!den.is_zero(), "rational function not integral at place");
        let num = self.reduce(x.num());
        self.mul(&num, &self.inv(&den))
    }

    pub fn is_zero(&self, a: &Poly) -> bool {
        self.reduce(a).is_zero()
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a + b))
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a - b))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: &Poly) -> Poly {
        let a = self.reduce(a);
        assert!(!a.is_zero(), "inverse of zero in residue field");
        // Bezout: s*a + t*modulus = gcd = constant (modulus irreducible).
        let (mut r0, mut r1) = (a, self.modulus.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let snew = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = snew;
        }
        debug_assert_eq!(r0.deg(), 0);
        let c = r0.coeff(0);
        self.reduce(&s0.scale(&(Rat::one() / c)))
    }

    pub fn scale(&self, a: &Poly, c: &Rat) -> Poly {
        self.reduce(&a.scale(c))
    }
}

/// A polynomial over the residue field, coefficients as representatives.
/// Coefficient index = degree in the outer variable X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoly {
    pub coeffs: Vec<Poly>,
}

impl KPoly {
    pub fn new(field: &ResidueField, coeffs: Vec<Poly>) -> Self {
        let mut coeffs: Vec<Poly> = coeffs.iter().map(|c| field.reduce(c)).collect();
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Poly {
        self.coeffs.last().cloned().unwrap_or_else(Poly::zero)
    }

    pub fn derivative(&self, field: &ResidueField) -> KPoly {
        if self.coeffs.len() <= 1 {
            return KPoly { coeffs: vec![] };
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| field.scale(c, &Rat::from_integer((i as i64 + 1).into())))
            .collect();
        KPoly::new(field, coeffs)
    }

    pub fn divrem(&self, field: &ResidueField, div: &KPoly) -> (KPoly, KPoly) {
        assert!(!div.is_zero());
        let mut rem = self.coeffs.clone();
        if rem.len() < div.coeffs.len() {
            return (KPoly { coeffs: vec![] }, self.clone());
        }
        let linv = field.inv(&div.leading());
        let qlen = rem.len() - div.coeffs.len() + 1;
        let mut q = vec![Poly::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = field.mul(&rem[i + div.coeffs.len() - 1], &linv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                let sub = field.mul(&c, d);
                rem[i + j] = field.sub(&rem[i + j], &sub);
            }
            q[i] = c;
        }
        rem.truncate(div.coeffs.len() - 1);
        (KPoly::new(field, q), KPoly::new(field, rem))
    }

    pub fn gcd(&self, field: &ResidueField, other: &KPoly) -> KPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(field, &b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // monic normalization
        let linv = field.inv(&a.leading());
        let coeffs = a.coeffs.iter().map(|c| field.mul(c, &linv)).collect();
        KPoly::new(field, coeffs)
    }

    /// The unique multiple root, for polynomials known to have exactly one
    /// (the singular-point locator for degenerate Weierstrass cubics).
    /// Returns its representative in k_v.
    pub fn multiple_root(&self, field: &ResidueField) -> Option<Poly> {
        let mut d = self.gcd(field, &self.derivative(field));
        while d.deg() > 1 {
            let dd = d.derivative(field);
            d = d.gcd(field, &dd);
        }
        if d.deg() != 1 {
            return None;
        }
        // monic linear X + c: root is -c
        let c = field.reduce(&d.coeffs[0]);
        Some(field.reduce(&(-&c)))
    }

    pub fn eval(&self, field: &ResidueField, x: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn field_t2_minus_2() -> ResidueField {
        // k = Q(sqrt 2)
        ResidueField::new(Poly::from_ints(&[-2, 0, 1]))
    }

    #[test]
    fn inverse_in_quadratic_field() {
        let k = field_t2_minus_2();
        // (1 + t)^{-1} in Q(sqrt2): (1+sqrt2)^{-1} = sqrt2 - 1
        let a = Poly::from_ints(&[1, 1]);
        let inv = k.inv(&a);
        assert_eq!(inv, Poly::from_ints(&[-1, 1]));
        assert_eq!(k.mul(&a, &inv), Poly::one());
    }

    #[test]
    fn reduce_fn_requires_integrality() {
        let k = ResidueField::new(Poly::from_ints(&[0, 1])); // place (t)
        let x = RatFunc::parse("(t + 1) / (t - 1)").unwrap();
        assert_eq!(k.reduce_fn(&x), Poly::constant(rat(-1, 1)));
    }

    #[test]
    fn multiple_root_of_degenerate_cubic() {
        let k = ResidueField::new(Poly::from_ints(&[0, 1]));
        // X^3 - 3X + 2 = (X-1)^2 (X+2) over Q
        let g = KPoly::new(
            &k,
            vec![
                Poly::constant(rat(2, 1)),
                Poly::constant(rat(-3, 1)),
                Poly::zero(),
                Poly::one(),
            ],
        );
        assert_eq!(g.multiple_root(&k), Some(Poly::one()));
        // triple root: X^3 (all coefficients zero but the cube)
        let g3 = KPoly::new(&k, vec![Poly::zero(), Poly::zero(), Poly::zero(), Poly::one()]);
        assert_eq!(g3.multiple_root(&k), Some(Poly::zero()));
    }

    #[test]
    fn multiple_root_over_extension() {
        let k = field_t2_minus_2();
        // (X - sqrt2)^2 (X + 1) = X^3 + (1 - 2 sqrt2) X^2 + (2 - 2 sqrt2) X + 2
        let s2 = Poly::var();
        let one = Poly::one();
        let c2 = &one - &(&s2 + &s2); // 1 - 2 sqrt2
        let c1 = &Poly::constant(rat(2, 1)) - &(&s2 + &s2);
        let c0 = Poly::constant(rat(2, 1));
        let g = KPoly::new(&k, vec![c0, c1, c2, one.clone()]);
        assert_eq!(g.multiple_root(&k), Some(s2));
    }
}
