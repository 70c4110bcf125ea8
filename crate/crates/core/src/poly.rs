//! Integer polynomials and the characteristic polynomial family
//! `p_m(x) = x^k - m*x^(k-1) - x^(k-2) - ... - x - 1`.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::sequences::SequenceSpec;

/// Exact rational number, always reduced with a positive denominator.
pub type RationalValue = BigRational;

/// Dense integer polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are stripped, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `d`: the remainder of `lc(d)^e * self`
    /// for some `e >= 0`, exact over the integers. Agrees with the rational
    /// remainder up to a nonzero constant factor.
    ///
    /// # Panics
    /// If `d` is the zero polynomial.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            // r <- lc*r - lr*x^(dr-dd)*d; the leading term cancels.
            r = r.scale(&lc) - d.shift(dr - dd).scale(&lr);
        }
        r
    }

    /// Primitive gcd over the rationals (result primitive, positive leading
    /// coefficient). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// True iff `gcd(p, p')` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        debug_assert!(self.degree().unwrap_or(0) >= 1);
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(Signed::is_positive)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Exact value at a rational point (Horner).
    pub fn eval_exact(&self, x: &RationalValue) -> RationalValue {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact sign of `p(x)`, from the integer `den^deg * p(num / den)` so no
    /// intermediate rationals are reduced.
    pub fn sign_at(&self, x: &RationalValue) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        let mut terms = self.coeffs.iter().rev();
        if let Some(lead) = terms.next() {
            acc = lead.clone();
        }
        for c in terms {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        sign_of(&acc)
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coeffs.iter().map(bigint_to_f64).collect()
    }

    /// JSON array of decimal coefficient strings, ascending degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn bigint_to_f64(v: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Renders like `x^3 - 2*x^2 - x - 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `p_m(x) = x^k - m*x^(k-1) - x^(k-2) - ... - x - 1`.
pub fn metallic_charpoly(spec: SequenceSpec) -> IntPolynomial {
    let k = spec.k();
    let mut coeffs = vec![BigInt::from(-1); k + 1];
    coeffs[k] = BigInt::one();
    coeffs[k - 1] = -BigInt::from(spec.m());
    IntPolynomial::new(coeffs)
}

/// `q(x) = (x - 1) p_m(x) = x^(k+1) - (m+1)x^k + (m-1)x^(k-1) + 1`, built
/// from the closed form rather than by multiplication.
pub fn q_poly(spec: SequenceSpec) -> IntPolynomial {
    let k = spec.k();
    let m = BigInt::from(spec.m());
    let mut coeffs = vec![BigInt::zero(); k + 2];
    coeffs[0] = BigInt::one();
    coeffs[k - 1] += &m - 1u32;
    coeffs[k] = -(&m + 1u32);
    coeffs[k + 1] = BigInt::one();
    IntPolynomial::new(coeffs)
}

/// `(p_m(m), p_m(m+1))` from the closed forms
/// `p_m(m) = 1 - k` (m = 1), `(1 - m^(k-1)) / (m - 1)` (m > 1) and
/// `p_m(m+1) = ((m-1)(m+1)^(k-1) + 1) / m`.
pub fn endpoint_values(spec: SequenceSpec) -> (RationalValue, RationalValue) {
    let k = spec.k();
    let m = BigInt::from(spec.m());
    let at_m = if spec.m() == 1 {
        BigRational::from_integer(BigInt::from(1) - BigInt::from(k))
    } else {
        BigRational::new(BigInt::one() - num_traits::pow(m.clone(), k - 1), &m - 1u32)
    };
    let at_m1 = BigRational::new(
        (&m - 1u32) * num_traits::pow(&m + 1u32, k - 1) + 1u32,
        m.clone(),
    );
    (at_m, at_m1)
}

/// The quadratic factor `(k+1)x^2 - k(m+1)x + (k-1)(m-1)` of `q'(x) / x^(k-2)`.
pub fn q_derivative_quadratic(spec: SequenceSpec) -> IntPolynomial {
    let k = BigInt::from(spec.k());
    let m = BigInt::from(spec.m());
    IntPolynomial::new(vec![
        (&k - 1u32) * (&m - 1u32),
        -(&k * (&m + 1u32)),
        &k + 1u32,
    ])
}

/// Closed-form discriminant `k^2 (m-1)^2 + 4(k^2 + m - 1)` of
/// [`q_derivative_quadratic`].
pub fn q_derivative_discriminant(spec: SequenceSpec) -> BigInt {
    let k = BigInt::from(spec.k());
    let m = BigInt::from(spec.m());
    &k * &k * (&m - 1u32) * (&m - 1u32) + 4u32 * (&k * &k + &m - 1u32)
}

/// `b^2 - 4ac` of a degree-2 polynomial.
pub fn quadratic_discriminant(p: &IntPolynomial) -> Option<BigInt> {
    (p.degree() == Some(2)).then(|| {
        let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
        &b * &b - 4u32 * a * c
    })
}
