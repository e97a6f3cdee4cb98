//! Deterministic polynomial factorization over Q.
//!
//! Strategy: square-free decomposition first (Yun), complete rational-root
//! extraction, direct irreducibility for what remains in degree ≤ 3, and for
//! degree ≥ 4 the kernel method: factor modulo a small good prime via the
//! Berlekamp subalgebra (kernel of Frobenius − id), Hensel-lift the modular
//! factors, and recombine subsets against the Mignotte coefficient bound.
//! Every step is exact; no step depends on randomness.

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::{Int, Rat};
use crate::Result;
use num::{Integer, One, Signed, Zero};

/// Factor p over Q: returns (leading coefficient, [(monic irreducible,
/// multiplicity)]) with the factors sorted canonically (degree, then
/// coefficients). Product of factors^mult times the lead reproduces p.
pub fn poly_factor(p: &Poly) -> Result<(Rat, Vec<(Poly, u32)>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = p.leading();
    let mut out: Vec<(Poly, u32)> = vec![];
    for (sqfree, mult) in p.squarefree_decomposition() {
        for irr in factor_squarefree(&sqfree) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok((lead, out))
}

/// True iff p is irreducible over Q (constants answer false).
pub fn is_irreducible(p: &Poly) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            let factors = factor_squarefree_checked(p);
            match factors {
                Some(fs) => fs.len() == 1,
                None => false, // not squarefree => g^2 divides => reducible
            }
        }
    }
}

fn factor_squarefree_checked(p: &Poly) -> Option<Vec<Poly>> {
    let monic = p.monic();
    if monic.gcd(&monic.derivative()).deg() >= 1 {
        return None;
    }
    Some(factor_squarefree(&monic))
}

/// Factor a monic squarefree polynomial of degree >= 1 into monic
/// irreducibles over Q.
fn factor_squarefree(g: &Poly) -> Vec<Poly> {
    debug_assert!(g.is_monic());
    let mut out = vec![];
    let mut rest = g.clone();
    // Complete rational-root pass: each root contributes a linear factor.
    for r in rational_roots(&rest) {
        let linear = &Poly::var() - &Poly::constant(r);
        rest = rest.div_exact(&linear).expect("root divides");
        out.push(linear);
    }
    match rest.degree() {
        None | Some(0) => {}
        // No rational root: quadratics and cubics are irreducible outright.
        Some(1) | Some(2) | Some(3) => out.push(rest.monic()),
        _ => out.extend(berlekamp_zassenhaus(&rest)),
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

/// All rational roots of a nonzero polynomial, by the rational-root theorem
/// on the primitive integer model. Complete and deterministic.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    let mut roots = vec![];
    if p.is_zero() || p.deg() == 0 {
        return roots;
    }
    let mut work = p.clone();
    let k = work.order_at_zero();
    if k > 0 {
        roots.push(Rat::zero());
        work = Poly::from_coeffs(work.coeffs()[k..].to_vec());
    }
    if work.deg() == 0 {
        return roots;
    }
    let (_, ints) = work.integer_primitive();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let num_divs = divisors(&a0.abs());
    let den_divs = divisors(&an.abs());
    for nd in &num_divs {
        for dd in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(nd * Int::from(sign), dd.clone());
                if work.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Positive divisors of a positive integer by trial division. Intended for
/// the small constant terms that reach the rational-root path.
fn divisors(n: &Int) -> Vec<Int> {
    assert!(n.is_positive());
    let mut small = vec![];
    let mut large = vec![];
    let mut d = Int::one();
    loop {
        let dd = &d * &d;
        if dd > *n {
            break;
        }
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p a small odd-or-even prime held in u64.

type FPoly = Vec<u64>;

fn fp_trim(v: &mut FPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime, a != 0 mod p
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

fn fp_sub(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = *a.get(i).unwrap_or(&0);
        let y = *b.get(i).unwrap_or(&0);
        out[i] = (x + p - y) % p;
    }
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + fp_mulmod(x, y, p)) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_divrem(a: &FPoly, b: &FPoly, p: u64) -> (FPoly, FPoly) {
    assert!(!b.is_empty());
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let linv = fp_inv(*b.last().unwrap(), p);
    let qlen = rem.len() - b.len() + 1;
    let mut q = vec![0u64; qlen];
    for i in (0..qlen).rev() {
        let c = fp_mulmod(rem[i + b.len() - 1], linv, p);
        if c == 0 {
            continue;
        }
        q[i] = c;
        for (j, &d) in b.iter().enumerate() {
            let sub = fp_mulmod(c, d, p);
            rem[i + j] = (rem[i + j] + p - sub) % p;
        }
    }
    rem.truncate(b.len() - 1);
    fp_trim(&mut rem);
    (q, rem)
}

fn fp_gcd(a: &FPoly, b: &FPoly, p: u64) -> FPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = fp_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

fn fp_monic(a: &FPoly, p: u64) -> FPoly {
    match a.last() {
        None => vec![],
        Some(&l) if l == 1 => a.clone(),
        Some(&l) => {
            let inv = fp_inv(l, p);
            a.iter().map(|&c| fp_mulmod(c, inv, p)).collect()
        }
    }
}

fn fp_derivative(a: &FPoly, p: u64) -> FPoly {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out: FPoly = a[1..]
        .iter()
        .enumerate()
        .map(|(i, &c)| fp_mulmod(c, (i as u64 + 1) % p, p))
        .collect();
    fp_trim(&mut out);
    out
}

/// x^e mod (f, p) by square-and-multiply.
fn fp_xpow_mod(e: u64, f: &FPoly, p: u64) -> FPoly {
    let mut result: FPoly = vec![1];
    let mut base: FPoly = vec![0, 1];
    base = fp_divrem(&base, f, p).1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_divrem(&fp_mul(&result, &base, p), f, p).1;
        }
        base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
        e >>= 1;
    }
    result
}

/// Berlekamp: factor a monic squarefree polynomial mod p into monic
/// irreducibles, deterministically.
fn berlekamp(f: &FPoly, p: u64) -> Vec<FPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    // Frobenius matrix columns: x^{jp} mod f.
    let xp = fp_xpow_mod(p, f, p);
    let mut cols: Vec<FPoly> = Vec::with_capacity(n);
    let mut cur: FPoly = vec![1];
    for _ in 0..n {
        cols.push(cur.clone());
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // Kernel of (Q - I) acting on coefficient vectors.
    let mut m = vec![vec![0u64; n]; n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            m[i][j] = *col.get(i).unwrap_or(&0);
        }
        m[j][j] = (m[j][j] + p - 1) % p;
    }
    let kernel = fp_kernel(m, p);
    let r = kernel.len();
    let mut factors: Vec<FPoly> = vec![f.clone()];
    if r == 1 {
        return factors;
    }
    'outer: for v in kernel.iter() {
        if v.iter().skip(1).all(|&c| c == 0) {
            continue; // the constants split nothing
        }
        let mut vpoly: FPoly = v.clone();
        fp_trim(&mut vpoly);
        for c in 0..p {
            let mut next = vec![];
            let shifted = if c == 0 {
                vpoly.clone()
            } else {
                fp_sub(&vpoly, &vec![c], p)
            };
            for g in factors.iter() {
                if g.len() <= 2 {
                    next.push(g.clone());
                    continue;
                }
                let h = fp_gcd(g, &shifted, p);
                if h.len() > 1 && h.len() < g.len() {
                    let (q, rem) = fp_divrem(g, &h, p);
                    debug_assert!(rem.is_empty());
                    next.push(fp_monic(&q, p));
                    next.push(h);
                } else {
                    next.push(g.clone());
                }
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
        }
    }
    debug_assert_eq!(factors.len(), r);
    factors.sort();
    factors
}

/// Reduced-row-echelon kernel basis of an n×n matrix over F_p.
fn fp_kernel(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = vec![];
    let mut row = 0;
    for col in 0..n {
        let piv = (row..n).find(|&i| m[i][col] != 0);
        let Some(piv) = piv else { continue };
        m.swap(row, piv);
        let inv = fp_inv(m[row][col], p);
        for j in 0..n {
            m[row][j] = fp_mulmod(m[row][j], inv, p);
        }
        for i in 0..n {
            if i != row && m[i][col] != 0 {
                let factor = m[i][col];
                for j in 0..n {
                    let sub = fp_mulmod(factor, m[row][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row;
    let mut basis = vec![];
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot variable = -sum of free columns
            v[pc] = (p - m[r][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting and recombination over Z.

fn zmod(a: &Int, m: &Int) -> Int {
    let r = a.mod_floor(m);
    r
}

fn zpoly_mod(a: &[Int], m: &Int) -> Vec<Int> {
    let mut out: Vec<Int> = a.iter().map(|c| zmod(c, m)).collect();
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn zpoly_mul_mod(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zpoly_mod(&out, m)
}

fn zpoly_add_mod(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for i in 0..n {
        let mut c = Int::zero();
        if let Some(x) = a.get(i) {
            c += x;
        }
        if let Some(y) = b.get(i) {
            c += y;
        }
        out[i] = c;
    }
    zpoly_mod(&out, m)
}

fn zpoly_sub_mod(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for i in 0..n {
        let mut c = Int::zero();
        if let Some(x) = a.get(i) {
            c += x;
        }
        if let Some(y) = b.get(i) {
            c -= y;
        }
        out[i] = c;
    }
    zpoly_mod(&out, m)
}

/// Division by a monic divisor, coefficients mod m.
fn zpoly_divrem_monic(a: &[Int], b: &[Int], m: &Int) -> (Vec<Int>, Vec<Int>) {
    assert!(b.last().map_or(false, |c| c.is_one()));
    let mut rem: Vec<Int> = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], zpoly_mod(&rem, m));
    }
    let qlen = rem.len() - b.len() + 1;
    let mut q = vec![Int::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = zmod(&rem[i + b.len() - 1], m);
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            let sub = &c * d;
            rem[i + j] -= sub;
        }
        q[i] = c;
    }
    rem.truncate(b.len() - 1);
    (zpoly_mod(&q, m), zpoly_mod(&rem, m))
}

struct HenselPair {
    g: Vec<Int>,
    h: Vec<Int>, // monic
    s: Vec<Int>,
    t: Vec<Int>,
    modulus: Int,
}

/// One quadratic step: modulus m -> m^2 keeping f ≡ g·h and s·g + t·h ≡ 1.
fn hensel_step(f: &[Int], pair: &HenselPair) -> HenselPair {
    let m2 = &pair.modulus * &pair.modulus;
    let e = zpoly_sub_mod(f, &zpoly_mul_mod(&pair.g, &pair.h, &m2), &m2);
    let se = zpoly_mul_mod(&pair.s, &e, &m2);
    let (q, r) = zpoly_divrem_monic(&se, &pair.h, &m2);
    let g_new = zpoly_add_mod(
        &zpoly_add_mod(&pair.g, &zpoly_mul_mod(&pair.t, &e, &m2), &m2),
        &zpoly_mul_mod(&q, &pair.g, &m2),
        &m2,
    );
    let h_new = zpoly_add_mod(&pair.h, &r, &m2);
    let one = vec![Int::one()];
    let b = zpoly_sub_mod(
        &zpoly_add_mod(
            &zpoly_mul_mod(&pair.s, &g_new, &m2),
            &zpoly_mul_mod(&pair.t, &h_new, &m2),
            &m2,
        ),
        &one,
        &m2,
    );
    let sb = zpoly_mul_mod(&pair.s, &b, &m2);
    let (c, d) = zpoly_divrem_monic(&sb, &h_new, &m2);
    let s_new = zpoly_sub_mod(&pair.s, &d, &m2);
    let t_new = zpoly_sub_mod(
        &pair.t,
        &zpoly_add_mod(
            &zpoly_mul_mod(&pair.t, &b, &m2),
            &zpoly_mul_mod(&c, &g_new, &m2),
            &m2,
        ),
        &m2,
    );
    HenselPair {
        g: g_new,
        h: h_new,
        s: s_new,
        t: t_new,
        modulus: m2,
    }
}

fn fpoly_to_zpoly(a: &FPoly) -> Vec<Int> {
    a.iter().map(|&c| Int::from(c)).collect()
}

/// Bezout s·g + t·h = 1 in F_p[x] with deg s < deg h, deg t < deg g.
fn fp_bezout(g: &FPoly, h: &FPoly, p: u64) -> (FPoly, FPoly) {
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1): (FPoly, FPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (FPoly, FPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let snew = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let tnew = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, snew);
        (t0, t1) = (t1, tnew);
    }
    // r0 is a nonzero constant: gcd(g, h) = 1 for distinct irreducible parts
    assert_eq!(r0.len(), 1, "hensel pair must be coprime mod p");
    let inv = fp_inv(r0[0], p);
    let s: FPoly = s0.iter().map(|&c| fp_mulmod(c, inv, p)).collect();
    let t: FPoly = t0.iter().map(|&c| fp_mulmod(c, inv, p)).collect();
    (s, t)
}

/// Lift f ≡ g·h (mod p) to mod p^(2^j) >= target, returning the lifted pair.
fn hensel_lift_pair(
    f: &[Int],
    g0: &FPoly,
    h0: &FPoly,
    p: u64,
    target: &Int,
) -> (Vec<Int>, Vec<Int>) {
    let (s0, t0) = fp_bezout(g0, h0, p);
    let mut pair = HenselPair {
        g: fpoly_to_zpoly(g0),
        h: fpoly_to_zpoly(h0),
        s: fpoly_to_zpoly(&s0),
        t: fpoly_to_zpoly(&t0),
        modulus: Int::from(p),
    };
    while pair.modulus < *target {
        pair = hensel_step(f, &pair);
    }
    (pair.g, pair.h)
}

/// Coefficients into the symmetric range (-m/2, m/2].
fn symmetric(a: &[Int], m: &Int) -> Vec<Int> {
    let half = m / Int::from(2);
    a.iter()
        .map(|c| {
            let r = zmod(c, m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn zpoly_primitive_poly(v: &[Int]) -> Poly {
    let mut content = Int::zero();
    for c in v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    Poly::from_coeffs(
        v.iter()
            .map(|c| Rat::from_integer(c / &content))
            .collect(),
    )
}

/// Kernel-based factorization for monic squarefree rational polynomials of
/// degree >= 4 with no rational roots. Returns monic irreducible factors.
fn berlekamp_zassenhaus(g: &Poly) -> Vec<Poly> {
    let (_, prim) = g.integer_primitive();
    let n = prim.len() - 1;

    // Smallest prime keeping the leading coefficient a unit and the
    // reduction squarefree.
    let mut p = 0u64;
    let mut fp: FPoly = vec![];
    for cand in PrimeIter::new() {
        let pc = cand;
        let reduced: FPoly = {
            let m = Int::from(pc);
            let mut v: FPoly = prim
                .iter()
                .map(|c| {
                    let r = zmod(c, &m);
                    r.to_u64_digits().1.first().copied().unwrap_or(0)
                })
                .collect();
            fp_trim(&mut v);
            v
        };
        if reduced.len() != prim.len() {
            continue; // lead vanished
        }
        let d = fp_derivative(&reduced, pc);
        if d.is_empty() {
            continue;
        }
        if fp_gcd(&reduced, &d, pc).len() == 1 {
            p = pc;
            fp = fp_monic(&reduced, pc);
            break;
        }
    }
    assert!(p != 0, "no good prime found");

    let modular = berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![g.monic()];
    }

    // Mignotte-style bound: |coef of any integer factor| <= 2^n * ||f||_2 * |lc|.
    let norm2_sq: Int = prim.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + Int::one();
    let lc = prim.last().unwrap().clone();
    let bound: Int = (Int::one() << n) * &norm2 * lc.abs();
    let target: Int = &bound * Int::from(2) + Int::one();

    // Fixed lifting modulus: square up from p until past the bound, so all
    // pair lifts end at the same PK.
    let mut pk = Int::from(p);
    while pk < target {
        pk = &pk * &pk;
    }

    // Peel modular factors one at a time with pair lifting. The first pair
    // carries the integer leading coefficient; every cofactor stays monic.
    let lc = prim.last().unwrap().clone();
    let lc_mod_p = {
        let r = zmod(&lc, &Int::from(p));
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    };
    let mut lifted: Vec<Vec<Int>> = Vec::with_capacity(modular.len());
    let mut remaining: Vec<FPoly> = modular;
    let mut fcur: Vec<Int> = zpoly_mod(&prim, &pk);
    let mut carry_lc = true;
    while remaining.len() > 1 {
        let gi = remaining.remove(0);
        let mut rest: FPoly = vec![1];
        for r in &remaining {
            rest = fp_mul(&rest, r, p);
        }
        let g0 = if carry_lc {
            gi.iter().map(|&c| fp_mulmod(c, lc_mod_p, p)).collect()
        } else {
            gi.clone()
        };
        let (g_lift, h_lift) = hensel_lift_pair(&fcur, &g0, &rest, p, &pk);
        let g_monic = if carry_lc {
            let inv = int_inv_mod(&lc, &pk);
            let scaled: Vec<Int> = g_lift.iter().map(|c| c * &inv).collect();
            zpoly_mod(&scaled, &pk)
        } else {
            g_lift
        };
        lifted.push(g_monic);
        fcur = h_lift; // monic, ≡ product of the remaining factors mod p
        carry_lc = false;
    }
    lifted.push(fcur);

    // Subset recombination with symmetric representatives and exact
    // trial division over Z.
    let r = lifted.len();
    let mut active: Vec<usize> = (0..r).collect();
    let mut current = Poly::from_coeffs(prim.iter().map(|c| Rat::from_integer(c.clone())).collect());
    let mut out: Vec<Poly> = vec![];
    let mut size = 1usize;
    while 2 * size <= active.len() {
        let mut found = false;
        for combo in combinations(active.len(), size) {
            let subset: Vec<usize> = combo.iter().map(|&i| active[i]).collect();
            let (_, cur_ints) = current.integer_primitive();
            let mut prod: Vec<Int> = vec![zmod(cur_ints.last().unwrap(), &pk)];
            for &i in &subset {
                prod = zpoly_mul_mod(&prod, &lifted[i], &pk);
            }
            let sym = symmetric(&prod, &pk);
            if sym.iter().all(|c| c.is_zero()) {
                continue;
            }
            let cand = zpoly_primitive_poly(&sym);
            if cand.deg() < 1 {
                continue;
            }
            if let Some(q) = current.div_exact(&cand) {
                out.push(cand.monic());
                current = q;
                active.retain(|i| !subset.contains(i));
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if current.deg() >= 1 {
        out.push(current.monic());
    }
    out
}

/// Inverse of a mod m (gcd(a, m) = 1), via the extended Euclidean algorithm.
fn int_inv_mod(a: &Int, m: &Int) -> Int {
    let eg = a.extended_gcd(m);
    assert!(eg.gcd.is_one() || (-&eg.gcd).is_one(), "not invertible");
    let x = if eg.gcd.is_one() { eg.x } else { -eg.x };
    zmod(&x, m)
}

/// All size-k index subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) struct PrimeIter {
    current: u64,
}

impl PrimeIter {
    fn new() -> Self {
        PrimeIter { current: 1 }
    }
}

impl Iterator for PrimeIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let mut c = self.current + 1;
        'search: loop {
            let mut d = 2u64;
            while d * d <= c {
                if c % d == 0 {
                    c += 1;
                    continue 'search;
                }
                d += 1;
            }
            self.current = c;
            return Some(c);
        }
    }
}
