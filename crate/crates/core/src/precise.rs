//! Binary fixed-point reals with a few hundred fractional bits.
//!
//! Used for the radical closed forms of the quadratic and cubic means. Every
//! operation truncates toward negative infinity, so each one contributes at
//! most one unit in the last place; at the default 256 bits that is far
//! below any enclosure width the library produces.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const DEFAULT_BITS: u32 = 256;

/// The value `mantissa / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precise {
    mantissa: BigInt,
    bits: u32,
}

impl Precise {
    pub fn from_int(v: i64, bits: u32) -> Self {
        Self {
            mantissa: BigInt::from(v) << bits as usize,
            bits,
        }
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        Self {
            mantissa: v << bits as usize,
            bits,
        }
    }

    /// `num / den`, truncated.
    pub fn from_ratio(num: i64, den: i64, bits: u32) -> Self {
        Self::from_rational(&BigRational::new(num.into(), den.into()), bits)
    }

    pub fn from_rational(v: &BigRational, bits: u32) -> Self {
        let scaled = v.numer() << bits as usize;
        Self {
            mantissa: scaled.div_floor(v.denom()),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << self.bits as usize)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    /// Square root, `None` for negative input.
    pub fn sqrt(&self) -> Option<Self> {
        if self.mantissa.is_negative() {
            return None;
        }
        let scaled = &self.mantissa << self.bits as usize;
        Some(Self {
            mantissa: scaled.sqrt(),
            bits: self.bits,
        })
    }

    /// Real cube root; sign follows the input.
    pub fn cbrt(&self) -> Self {
        let scaled = &self.mantissa.abs() << (2 * self.bits as usize);
        let root = scaled.cbrt();
        let mantissa = if self.mantissa.is_negative() {
            -root
        } else {
            root
        };
        Self {
            mantissa,
            bits: self.bits,
        }
    }

    /// Decimal rendering truncated to `places` fractional digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let scaled =
            (&self.mantissa * num_traits::pow(BigInt::from(10), places)) >> self.bits as usize;
        format_scaled(&scaled, places)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.bits, other.bits, "mixed fixed-point precisions");
    }
}

/// Formats `v / 10^places` with exactly `places` fractional digits.
pub(crate) fn format_scaled(v: &BigInt, places: usize) -> String {
    let neg = v.is_negative();
    let digits = v.abs().to_string();
    let digits = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

impl Add for &Precise {
    type Output = Precise;
    fn add(self, rhs: Self) -> Precise {
        self.check(rhs);
        Precise {
            mantissa: &self.mantissa + &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Sub for &Precise {
    type Output = Precise;
    fn sub(self, rhs: Self) -> Precise {
        self.check(rhs);
        Precise {
            mantissa: &self.mantissa - &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Mul for &Precise {
    type Output = Precise;
    fn mul(self, rhs: Self) -> Precise {
        self.check(rhs);
        Precise {
            mantissa: (&self.mantissa * &rhs.mantissa) >> self.bits as usize,
            bits: self.bits,
        }
    }
}

impl Div for &Precise {
    type Output = Precise;
    fn div(self, rhs: Self) -> Precise {
        self.check(rhs);
        assert!(!rhs.mantissa.is_zero(), "fixed-point division by zero");
        Precise {
            mantissa: (&self.mantissa << self.bits as usize).div_floor(&rhs.mantissa),
            bits: self.bits,
        }
    }
}

impl Neg for &Precise {
    type Output = Precise;
    fn neg(self) -> Precise {
        Precise {
            mantissa: -&self.mantissa,
            bits: self.bits,
        }
    }
}

impl fmt::Display for Precise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(20)))
    }
}
