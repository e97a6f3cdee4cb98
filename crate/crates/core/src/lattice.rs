//! Exact short-vector enumeration for rational positive-definite forms.
//!
//! The Mordell–Weil lattice of a nonisotrivial elliptic surface carries the
//! height pairing, an exact rational quadratic form. Enumerating all points
//! below a height bound means enumerating all integer vectors inside an
//! ellipsoid, which is done here with an LDLᵀ split and per-coordinate
//! interval bounds decided in exact arithmetic — no floating point, so no
//! boundary vector is ever missed or spuriously included.

use num::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::rat::{max_int_below_sqrt, min_int_above_neg_sqrt, Rat};
use crate::Result;

/// Symmetric matrix of exact rationals, used as the Gram matrix of a
/// positive-definite pairing.
#[derive(Clone, Debug, PartialEq)]
pub struct Gram {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl Gram {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Gram> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Domain("Gram matrix must be symmetric".into()));
                }
            }
        }
        Ok(Gram { n, rows })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    /// The form xᵀGx.
    pub fn evaluate(&self, x: &[i64]) -> Rat {
        assert_eq!(x.len(), self.n);
        let mut acc = Rat::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if x[i] != 0 && x[j] != 0 {
                    acc = &acc + &(&self.rows[i][j] * Rat::from_integer((x[i] * x[j]).into()));
                }
            }
        }
        acc
    }

    /// Unit lower-triangular L and positive diagonal d with G = L·diag(d)·Lᵀ.
    /// A pivot ≤ 0 means the form is not positive definite, i.e. the basis
    /// behind it is linearly dependent.
    fn ldlt(&self) -> Result<(Vec<Vec<Rat>>, Vec<Rat>)> {
        let n = self.n;
        let mut l = vec![vec![Rat::zero(); n]; n];
        let mut d = vec![Rat::zero(); n];
        for j in 0..n {
            let mut dj = self.rows[j][j].clone();
            for k in 0..j {
                dj = &dj - &(&(&l[j][k] * &l[j][k]) * &d[k]);
            }
            if dj <= Rat::zero() {
                return Err(Error::DependentBasis);
            }
            l[j][j] = Rat::one();
            for i in j + 1..n {
                let mut v = self.rows[i][j].clone();
                for k in 0..j {
                    v = &v - &(&(&l[i][k] * &l[j][k]) * &d[k]);
                }
                l[i][j] = &v / &dj;
            }
            d[j] = dj;
        }
        Ok((l, d))
    }

    /// All nonzero integer vectors x with xᵀGx ≤ bound, ordered by
    /// coordinates with the last one most significant. Fails with
    /// `DependentBasis` when the form is not positive definite.
    pub fn vectors_in_ball(&self, bound: &Rat) -> Result<Vec<Vec<i64>>> {
        if self.n == 0 || bound < &Rat::zero() {
            return Ok(vec![]);
        }
        let (l, d) = self.ldlt()?;
        // With G = L·diag(d)·Lᵀ the form splits as
        //   Q(x) = Σ_i d_i (x_i + c_i)²,  c_i = Σ_{j>i} L_{j,i}·x_j,
        // so fixing x from the last coordinate down leaves an exact interval
        // for each earlier one.
        let mut out: Vec<Vec<i64>> = vec![];
        let mut x = vec![0i64; self.n];
        descend(&l, &d, self.n - 1, bound, &mut x, &mut out)?;
        Ok(out)
    }
}

fn descend(
    l: &[Vec<Rat>],
    d: &[Rat],
    level: usize,
    budget: &Rat,
    x: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) -> Result<()> {
    let center: Rat = (level + 1..x.len())
        .fold(Rat::zero(), |acc, j| &acc + &(&l[j][level] * Rat::from_integer(x[j].into())));
    let radius_sq = budget / &d[level];
    let lo = min_int_above_neg_sqrt(&radius_sq, &center);
    let hi = max_int_below_sqrt(&radius_sq, &center);
    let mut k = lo.clone();
    while k <= hi {
        let ki = k
            .to_i64()
            .ok_or_else(|| Error::Domain("lattice coordinate exceeds i64".into()))?;
        x[level] = ki;
        let off = Rat::from_integer(k.clone()) + &center;
        let spent = &d[level] * &(&off * &off);
        let rest = budget - &spent;
        if level == 0 {
            if x.iter().any(|&c| c != 0) {
                out.push(x.clone());
            }
        } else {
            descend(l, d, level - 1, &rest, x, out)?;
        }
        k += 1;
    }
    x[level] = 0;
    Ok(())
}
