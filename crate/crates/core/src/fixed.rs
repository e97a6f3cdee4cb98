//! Fixed-point arithmetic on big-integer mantissas.
//!
//! Some of the explicit bounds mix an exact integer factor with a
//! transcendental one (π²/12, natural logs). To print those to a provable
//! number of decimal digits we evaluate the transcendental parts in fixed
//! point: a `Fixed` with `bits` fractional bits stores value·2^bits as a
//! big integer, every operation is an exact integer operation followed by
//! a truncating shift, and the constants come from fast alternating series
//! (Machin's arctangent identity for π, the atanh series for logs) run
//! with 64 guard bits so the printed digits are exact for any practical
//! request.

use num::{One, Signed, Zero};

use crate::Int;

/// Extra fractional bits carried while a series is summed, dropped before
/// the result is returned. Series tails and per-term floor divisions stay
/// far below one ulp of the returned precision.
const GUARD_BITS: u32 = 64;

/// A number with a fixed count of fractional binary digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    mant: Int,
    bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Fixed {
        Fixed {
            mant: Int::zero(),
            bits,
        }
    }

    pub fn from_int(n: &Int, bits: u32) -> Fixed {
        Fixed {
            mant: n << (bits as usize),
            bits,
        }
    }

    pub fn from_i64(n: i64, bits: u32) -> Fixed {
        Fixed::from_int(&Int::from(n), bits)
    }

    /// num/den rounded toward zero in the last fractional bit.
    pub fn ratio(num: &Int, den: &Int, bits: u32) -> Fixed {
        assert!(!den.is_zero(), "zero denominator");
        Fixed {
            mant: &(num << (bits as usize)) / den,
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        assert_eq!(self.bits, other.bits, "mixed precisions");
        Fixed {
            mant: &self.mant + &other.mant,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Fixed) -> Fixed {
        assert_eq!(self.bits, other.bits, "mixed precisions");
        Fixed {
            mant: &self.mant - &other.mant,
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        assert_eq!(self.bits, other.bits, "mixed precisions");
        Fixed {
            mant: (&self.mant * &other.mant) >> (self.bits as usize),
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, n: &Int) -> Fixed {
        Fixed {
            mant: &self.mant * n,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, n: &Int) -> Fixed {
        assert!(!n.is_zero(), "division by zero");
        Fixed {
            mant: &self.mant / n,
            bits: self.bits,
        }
    }

    /// π from Machin's identity π = 16·atan(1/5) − 4·atan(1/239).
    pub fn pi(bits: u32) -> Fixed {
        let work = bits + GUARD_BITS;
        let mant = Int::from(16) * atan_inv_mant(5, work) - Int::from(4) * atan_inv_mant(239, work);
        Fixed {
            mant: mant >> (GUARD_BITS as usize),
            bits,
        }
    }

    /// Natural log of 2, as 2·atanh(1/3).
    pub fn ln2(bits: u32) -> Fixed {
        let work = bits + GUARD_BITS;
        Fixed {
            mant: (atanh_mant(&Int::one(), &Int::from(3), work) << 1usize) >> (GUARD_BITS as usize),
            bits,
        }
    }

    /// Natural log of a positive integer: split off the power of two, then
    /// ln(m) = k·ln2 + 2·atanh((m−2^k)/(m+2^k)) with the fraction in
    /// (0, 1/3), so the series converges fast for every m.
    pub fn ln_int(m: u64, bits: u32) -> Fixed {
        assert!(m >= 1, "log of a nonpositive integer");
        if m == 1 {
            return Fixed::zero(bits);
        }
        let work = bits + GUARD_BITS;
        let k = 63 - m.leading_zeros() as u64; // floor(log2 m)
        let pow2 = Int::one() << (k as usize);
        let m_int = Int::from(m);
        let mut mant = Int::from(k) * ((atanh_mant(&Int::one(), &Int::from(3), work)) << 1usize);
        if m_int != pow2 {
            mant += atanh_mant(&(&m_int - &pow2), &(&m_int + &pow2), work) << 1usize;
        }
        Fixed {
            mant: mant >> (GUARD_BITS as usize),
            bits,
        }
    }

    /// Decimal expansion truncated toward zero after `digits` fractional
    /// digits (exact for the stored mantissa).
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.mant.is_negative();
        let abs = self.mant.abs();
        let int_part = &abs >> (self.bits as usize);
        let frac_part = &abs - (&int_part << (self.bits as usize));
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        let scaled = (frac_part * num::pow::pow(Int::from(10), digits)) >> (self.bits as usize);
        format!("{sign}{int_part}.{scaled:0>width$}", width = digits)
    }
}

/// Mantissa of atan(1/x) at the given precision, by the alternating series
/// Σ (−1)^k / ((2k+1)·x^(2k+1)).
fn atan_inv_mant(x: u64, bits: u32) -> Int {
    let x = Int::from(x);
    let x2 = &x * &x;
    let mut term = &(Int::one() << (bits as usize)) / &x;
    let mut sum = Int::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        let contrib = &term / &Int::from(2 * k + 1);
        if k % 2 == 0 {
            sum += contrib;
        } else {
            sum -= contrib;
        }
        term = &term / &x2;
        k += 1;
    }
    sum
}

/// Mantissa of atanh(num/den) for 0 ≤ num/den < 1, by the series
/// Σ z^(2k+1)/(2k+1).
fn atanh_mant(num: &Int, den: &Int, bits: u32) -> Int {
    assert!(num >= &Int::zero() && num < den, "atanh argument outside [0, 1)");
    let z = &(num << (bits as usize)) / den;
    let z2 = (&z * &z) >> (bits as usize);
    let mut term = z;
    let mut sum = Int::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        sum += &term / &Int::from(2 * k + 1);
        term = (&term * &z2) >> (bits as usize);
        k += 1;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436025";

    #[test]
    fn pi_matches_the_reference_digits() {
        assert_eq!(Fixed::pi(384).to_decimal(50), PI_50);
    }

    #[test]
    fn ln2_matches_the_reference_digits() {
        assert_eq!(Fixed::ln2(384).to_decimal(50), LN2_50);
        assert_eq!(Fixed::ln_int(2, 384).to_decimal(50), LN2_50);
    }

    #[test]
    fn logs_respect_multiplicativity() {
        let bits = 384;
        // ln 8 = 3 ln 2
        let diff = Fixed::ln_int(8, bits).sub(&Fixed::ln2(bits).mul_int(&Int::from(3)));
        assert!(diff.to_decimal(45).ends_with(&"0".repeat(45)), "{diff:?}");
        // ln 6 = ln 2 + ln 3
        let six = Fixed::ln_int(6, bits);
        let sum = Fixed::ln_int(2, bits).add(&Fixed::ln_int(3, bits));
        let gap = six.sub(&sum);
        let text = gap.to_decimal(45);
        assert!(
            text == format!("0.{}", "0".repeat(45)) || text == format!("-0.{}", "0".repeat(45)),
            "{text}"
        );
    }

    #[test]
    fn arithmetic_is_exact_on_dyadic_values() {
        let bits = 128;
        let half = Fixed::ratio(&Int::one(), &Int::from(2), bits);
        let two = Fixed::from_i64(2, bits);
        assert_eq!(two.mul(&half).to_decimal(5), "1.00000");
        assert_eq!(half.add(&half).to_decimal(3), "1.000");
        assert_eq!(half.sub(&two).to_decimal(2), "-1.50");
        assert_eq!(Fixed::from_i64(7, bits).div_int(&Int::from(4)).to_decimal(4), "1.7500");
        assert_eq!(Fixed::from_i64(-3, bits).to_decimal(0), "-3");
    }
}
