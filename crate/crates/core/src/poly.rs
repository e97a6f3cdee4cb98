//! Univariate polynomials over Q, dense representation, constant term first.

use crate::rat::{format_rat, Int, Rat};
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one variable over Q. Invariant: no trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn constant_i(c: i64) -> Self {
        Poly::constant(Rat::from_integer(Int::from(c)))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// c * t^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial answers None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 for constants and the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let lead = self.leading();
        Poly::from_coeffs(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(Int::from(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Reverse coefficients: t^deg * p(1/t). Used by the chart at infinity.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// Number of trailing zero coefficients = multiplicity of the root t = 0.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dlen = div.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Poly::zero(), self.clone());
        }
        let lead = div.leading();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut q = vec![Rat::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dlen - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[i + j] = &rem[i + j] - t;
            }
            q[i] = c;
        }
        rem.truncate(dlen - 1);
        (Poly::from_coeffs(q), Poly::from_coeffs(rem))
    }

    /// Exact division; None when the remainder is nonzero.
    pub fn div_exact(&self, div: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(div);
        r.is_zero().then_some(q)
    }

    /// Multiplicity of `p` as a factor of self (0 when coprime). `p` must be
    /// nonconstant; self must be nonzero.
    pub fn multiplicity_of(&self, p: &Poly) -> u32 {
        assert!(!self.is_zero() && p.deg() >= 1);
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(p) {
            m += 1;
            cur = q;
        }
        m
    }

    /// Strip every factor of `p`, returning (multiplicity, cofactor).
    pub fn strip_factor(&self, p: &Poly) -> (u32, Poly) {
        assert!(!self.is_zero() && p.deg() >= 1);
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(p) {
            m += 1;
            cur = q;
        }
        (m, cur)
    }

    /// Monic gcd over Q, via the subresultant remainder sequence on integer
    /// primitive parts so intermediate coefficients stay tame.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (_, a) = self.integer_primitive();
        let (_, b) = other.integer_primitive();
        let prim = zpoly_gcd_modular(&a, &b).unwrap_or_else(|| zpoly_gcd_prs(a, b));
        zpoly_to_poly(&prim).monic()
    }

    /// Squarefree part: self / gcd(self, self'), monic.
    pub fn squarefree_part(&self) -> Poly {
        if self.deg() == 0 {
            return Poly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: returns [(squarefree monic factor, multiplicity)],
    /// multiplicities strictly increasing, product with multiplicity = monic
    /// part of self.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() == 0 {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut out = vec![];
        let mut i = 1u32;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                if b.deg() >= 1 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let a = b.gcd(&d);
            if a.deg() >= 1 {
                out.push((a.monic(), i));
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            i += 1;
        }
        out
    }

    /// Exact square root of a monic polynomial; None when self is not a
    /// perfect square. Used for the even-pole-order sanity check without
    /// factoring.
    pub fn sqrt_exact(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let n = self.degree()?;
        if n % 2 != 0 || !self.is_monic() {
            return None;
        }
        let half = n / 2;
        let mut root = vec![Rat::zero(); half + 1];
        root[half] = Rat::one();
        // Solve coefficients from the top down: (sum root_i t^i)^2 = self.
        for k in (0..half).rev() {
            // Coefficient of t^{k + half} in root^2 equals self's.
            let mut acc = Rat::zero();
            for i in (k + 1)..=half {
                let j = k + half - i;
                if j > half || j <= k {
                    continue;
                }
                acc += &root[i] * &root[j];
            }
            let target = self.coeff(k + half);
            // 2 * root[half] * root[k] + acc = target, root[half] = 1.
            root[k] = (target - acc) / Rat::from_integer(Int::from(2));
        }
        let candidate = Poly::from_coeffs(root);
        (&candidate * &candidate == *self).then_some(candidate)
    }

    /// Clear denominators and content: self = (num/den) * primitive with
    /// primitive ∈ Z[t], content 1, positive leading coefficient. Returns
    /// (rational content, integer coefficients of the primitive part).
    pub fn integer_primitive(&self) -> (Rat, Vec<BigInt>) {
        assert!(!self.is_zero());
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num::integer::gcd(content, c.clone());
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (Rat::new(content, den), prim)
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (k, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coef_part = if abs.is_one() && k > 0 {
                String::new()
            } else {
                format_rat(&abs)
            };
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if !coef_part.is_empty() && !var_part.is_empty() {
                out.push_str(&coef_part);
                out.push('*');
                out.push_str(&var_part);
            } else {
                out.push_str(&coef_part);
                out.push_str(&var_part);
            }
        }
        out
    }
}

fn zpoly_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of a by b over Z: exactly lc(b)^(deg a - deg b + 1) * a
/// mod b, the normalization the subresultant divisions rely on.
fn zpoly_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let lb = b.last().unwrap();
    let db = b.len() - 1;
    let mut scalings = (a.len() - b.len() + 1) as i64;
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lead = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        scalings -= 1;
        for j in 0..b.len() {
            r[dr - db + j] -= &lead * &b[j];
        }
        zpoly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    // Degree can drop by more than one per step; top up so the total scaling
    // is uniform regardless of the path taken.
    if !r.is_empty() && scalings > 0 {
        let extra = lb.pow(scalings as u32);
        for c in r.iter_mut() {
            *c *= &extra;
        }
    }
    r
}

/// Gcd of primitive integer polynomials by the subresultant remainder
/// sequence. Exact at any size, but intermediate coefficients swell badly
/// on the cancellation-heavy inputs the group law produces; kept as the
/// fallback for the modular algorithm.
fn zpoly_gcd_prs(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.len() - b.len();
        let r = zpoly_pseudo_rem(&a, &b);
        if r.is_empty() {
            return zpoly_primitive(&b);
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * h.pow(delta as u32);
        a = b;
        b = r.iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            // h^{1-delta} g^delta, delta >= 1
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            num / den
        };
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin; the listed witness set decides primality
/// for every 64-bit integer.
fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 2 {
        return false;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The i-th prime above 2^62, from a lazily extended shared cache so the
/// scan is paid once per process, not once per gcd.
fn nth_scan_prime(i: usize) -> u64 {
    static CACHE: std::sync::Mutex<Vec<u64>> = std::sync::Mutex::new(Vec::new());
    let mut primes = CACHE.lock().unwrap();
    while primes.len() <= i {
        let mut c = primes.last().copied().unwrap_or(1 << 62) + 1;
        if c % 2 == 0 {
            c += 1;
        }
        while !is_prime_u64(c) {
            c += 2;
        }
        primes.push(c);
    }
    primes[i]
}

fn zpoly_mod(v: &[BigInt], p: &BigInt) -> Vec<u64> {
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| c.mod_floor(p).to_u64().expect("residue fits in u64"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Remainder in F_p[x]; operands trimmed of leading zeros, `b` nonzero.
fn ppoly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let lb_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let q = mul_mod(*r.last().unwrap(), lb_inv, p);
        let k = r.len() - b.len();
        for i in 0..b.len() - 1 {
            let sub = mul_mod(q, b[i], p);
            r[k + i] = (r[k + i] + p - sub) % p;
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// Monic gcd in F_p[x].
fn ppoly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = ppoly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Balanced representative of `c` (taken in [0, m)) in (-m/2, m/2].
fn symmetric_lift(c: &BigInt, m: &BigInt) -> BigInt {
    if c * 2 > *m {
        c - m
    } else {
        c.clone()
    }
}

/// Exact-division test over Z for primitive `den`: sound because a
/// primitive polynomial divides a primitive one over Q exactly when the
/// integer long division never leaves a fractional quotient coefficient.
fn zpoly_divides(num: &[BigInt], den: &[BigInt]) -> bool {
    if den.len() == 1 {
        return true;
    }
    if num.len() < den.len() {
        return false;
    }
    let lb = den.last().unwrap();
    let mut r: Vec<BigInt> = num.to_vec();
    while r.len() >= den.len() {
        let (q, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return false;
        }
        let k = r.len() - den.len();
        for i in 0..den.len() - 1 {
            r[k + i] -= &q * &den[i];
        }
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    r.is_empty()
}

/// Gcd of primitive integer polynomials from images modulo word-size
/// primes, recombined coefficient-wise by the Chinese remainder theorem.
/// An image of larger degree than the best one seen marks an unlucky prime
/// and is discarded; a constant image proves coprimality outright. Once
/// the balanced lift stops changing, the candidate is confirmed by exact
/// division, so a coincidental agreement costs a retry, never a wrong
/// answer. Returns None if the images refuse to stabilize within the
/// prime budget (the caller then falls back to the remainder sequence).
fn zpoly_gcd_modular(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let lc_gcd = num::integer::gcd(a.last().unwrap().clone(), b.last().unwrap().clone());
    let in_bits = a
        .iter()
        .chain(b.iter())
        .map(|c| c.bits())
        .max()
        .unwrap_or(0)
        + lc_gcd.bits();
    let max_deg = a.len().max(b.len()) as u64;
    // Each prime contributes ~62 bits; the gcd's coefficients are bounded
    // by the inputs' up to a 2^deg factor, so this cap is a few times the
    // worst case rather than a guess.
    let cap = 32 + ((in_bits + max_deg) / 24) as usize;

    let mut deg = usize::MAX;
    let mut modulus = BigInt::one();
    let mut crt: Vec<BigInt> = vec![];
    let mut prev_lift: Option<Vec<BigInt>> = None;
    let mut used = 0;
    let mut index = 0;
    while used < cap && index < 2 * cap + 64 {
        let p = nth_scan_prime(index);
        index += 1;
        let bp = BigInt::from(p);
        if a.last().unwrap().mod_floor(&bp).is_zero()
            || b.last().unwrap().mod_floor(&bp).is_zero()
        {
            continue; // p divides a leading coefficient
        }
        used += 1;
        let gp = ppoly_gcd(zpoly_mod(a, &bp), zpoly_mod(b, &bp), p);
        let d = gp.len() - 1;
        if d == 0 {
            // Coprime modulo a good prime means coprime over Q.
            return Some(vec![BigInt::one()]);
        }
        if d > deg {
            continue; // unlucky prime
        }
        // Scale the monic image so every image agrees on the leading
        // coefficient; lc(gcd) divides gcd of the leading coefficients,
        // so the integer polynomial being reconstructed is an integer
        // multiple of the primitive gcd.
        let scale = lc_gcd.mod_floor(&bp).to_u64().expect("residue fits");
        let scaled: Vec<u64> = gp.iter().map(|&c| mul_mod(c, scale, p)).collect();
        if d < deg {
            deg = d;
            modulus = bp;
            crt = scaled.iter().map(|&c| BigInt::from(c)).collect();
            prev_lift = None;
            continue;
        }
        let m_inv = inv_mod(modulus.mod_floor(&bp).to_u64().expect("residue fits"), p);
        for (c, &cp) in crt.iter_mut().zip(scaled.iter()) {
            let c_mod_p = c.mod_floor(&bp).to_u64().expect("residue fits");
            let k = mul_mod((cp + p - c_mod_p) % p, m_inv, p);
            *c += &modulus * BigInt::from(k);
        }
        modulus *= &bp;
        let lift: Vec<BigInt> = crt.iter().map(|c| symmetric_lift(c, &modulus)).collect();
        if prev_lift.as_ref() == Some(&lift) {
            let candidate = zpoly_primitive(&lift);
            if zpoly_divides(a, &candidate) && zpoly_divides(b, &candidate) {
                return Some(candidate);
            }
        }
        prev_lift = Some(lift);
    }
    None
}

fn zpoly_primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in v {
        content = num::integer::gcd(content, c.clone());
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

fn zpoly_to_poly(v: &[BigInt]) -> Poly {
    Poly::from_coeffs(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
