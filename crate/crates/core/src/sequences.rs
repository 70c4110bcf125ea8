//! Exact terms of the k-th order Fibonacci sequence and its iterated INVERT
//! transforms.
//!
//! All sequences are indexed from `n = 0` with `g(0) = 0`, `g(1) = 1`. The
//! familiar listing `1, 2, 5, 13, ...` for `k = 3, m = 2` is the same
//! sequence read from `n = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Degree `k` and invert level `m` of a generalized metallic sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SequenceSpec {
    k: usize,
    m: u64,
}

impl SequenceSpec {
    pub fn new(k: usize, m: u64) -> Result<Self> {
        if k < 2 || m < 1 {
            return Err(Error::InvalidSpec { k, m });
        }
        Ok(Self { k, m })
    }

    /// Recurrence order.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Leading recurrence coefficient; the sequence is the `(m - 1)`-fold
    /// INVERT transform of the `k`-bonacci sequence.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Denominator `1 - m*x - x^2 - ... - x^k` of the generating function.
    pub fn gf_denominator(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::from(-1); self.k + 1];
        coeffs[0] = BigInt::one();
        coeffs[1] = -BigInt::from(self.m);
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, m={}", self.k, self.m)
    }
}

/// Where a [`TermVector`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Spec(SequenceSpec),
    Raw,
}

/// Exact integer terms `a(0), a(1), ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermVector {
    origin: Origin,
    terms: Vec<BigInt>,
}

impl TermVector {
    /// Wraps externally supplied terms.
    pub fn raw(terms: Vec<BigInt>) -> Self {
        Self {
            origin: Origin::Raw,
            terms,
        }
    }

    pub fn from_i64s(terms: &[i64]) -> Self {
        Self::raw(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub(crate) fn with_origin(origin: Origin, terms: Vec<BigInt>) -> Self {
        Self { origin, terms }
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.terms.get(n)
    }

    /// OEIS b-file: one `n a(n)` line per term, `n` starting at 1 (the
    /// leading `a(0) = 0` is dropped).
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (n, t) in self.terms.iter().enumerate().skip(1) {
            out.push_str(&format!("{n} {t}\n"));
        }
        out
    }

    /// CSV with header `n,value`, `n` starting at 0.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, t) in self.terms.iter().enumerate() {
            out.push_str(&format!("{n},{t}\n"));
        }
        out
    }

    /// JSON array of decimal strings, `a(0)` first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|t| serde_json::Value::String(t.to_string()))
                .collect(),
        )
    }

    /// Comma-separated decimal terms.
    pub fn to_plain(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Parses integers separated by commas, whitespace or newlines.
pub fn parse_terms(text: &str) -> Result<TermVector> {
    let terms = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TermVector::raw(terms))
}

/// Terms `g(0) .. g(count - 1)` of `g(n) = m*g(n-1) + g(n-2) + ... + g(n-k)`
/// with `g(0) = 0`, `g(1) = 1` and the sum truncated at index 0 for `n < k`.
pub fn recurrence_terms(spec: SequenceSpec, count: usize) -> Result<TermVector> {
    if count < 2 {
        return Err(Error::TooFewTerms { count, min: 2 });
    }
    let m = BigInt::from(spec.m());
    let mut terms: Vec<BigInt> = Vec::with_capacity(count);
    terms.push(BigInt::zero());
    terms.push(BigInt::one());
    for n in 2..count {
        let mut next = &m * &terms[n - 1];
        for j in 2..=spec.k().min(n) {
            next += &terms[n - j];
        }
        terms.push(next);
    }
    Ok(TermVector::with_origin(Origin::Spec(spec), terms))
}

/// First `count` coefficients of the formal power series
/// `numerator / denominator`.
///
/// The quotient must have integer coefficients; a denominator whose constant
/// term is `+-1` always qualifies.
pub fn gf_terms(
    numerator: &IntPolynomial,
    denominator: &IntPolynomial,
    count: usize,
) -> Result<TermVector> {
    let den = denominator.coeffs();
    let lead = match den.first() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(Error::ZeroConstantTerm),
    };
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut acc = numerator.coeff(n);
        for (i, d) in den.iter().enumerate().skip(1).take_while(|(i, _)| *i <= n) {
            acc -= d * &out[n - i];
        }
        let (q, r) = acc.div_rem(lead);
        if !r.is_zero() {
            return Err(Error::NonIntegralSeries { index: n });
        }
        out.push(q);
    }
    Ok(TermVector::raw(out))
}

/// `recurrence_terms` computed through the generating function instead.
pub fn gf_terms_for_spec(spec: SequenceSpec, count: usize) -> Result<TermVector> {
    let x = IntPolynomial::monomial(1);
    let tv = gf_terms(&x, &spec.gf_denominator(), count)?;
    Ok(TermVector::with_origin(Origin::Spec(spec), tv.into_terms()))
}
