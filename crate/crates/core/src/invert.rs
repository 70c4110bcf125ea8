//! The INVERT transform `1 + B(x) = 1 / (1 - A(x))` on sequences with
//! `a(0) = 0`, and its inverse.
//!
//! Both act on prefixes: the transform of a prefix is the prefix of the
//! transform, and the output has the same length as the input.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sequences::{Origin, TermVector};

fn check_leading_zero(a: &TermVector) -> Result<()> {
    match a.terms().first() {
        Some(t) if !t.is_zero() => Err(Error::NonZeroLeadingTerm {
            found: t.to_string(),
        }),
        _ => Ok(()),
    }
}

/// `b(n) = a(n) + sum_{i=1}^{n-1} a(i) b(n-i)`, the coefficients of
/// `A / (1 - A)`.
pub fn invert_once(a: &TermVector) -> Result<TermVector> {
    check_leading_zero(a)?;
    let a = a.terms();
    let mut b: Vec<BigInt> = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let mut t = a[n].clone();
        for i in 1..n {
            t += &a[i] * &b[n - i];
        }
        b.push(t);
    }
    Ok(TermVector::raw(b))
}

/// `times`-fold [`invert_once`]. The `(m-1)`-fold transform of the
/// `k`-bonacci sequence is the level-`m` sequence, and the result is tagged
/// accordingly when the input came from a spec.
pub fn invert_iterate(a: &TermVector, times: usize) -> Result<TermVector> {
    check_leading_zero(a)?;
    let mut cur = a.clone();
    for _ in 0..times {
        cur = invert_once(&cur)?;
    }
    let origin = match a.origin() {
        Origin::Spec(s) if times > 0 => {
            crate::sequences::SequenceSpec::new(s.k(), s.m() + times as u64)
                .map(Origin::Spec)
                .unwrap_or(Origin::Raw)
        }
        o => o,
    };
    Ok(TermVector::with_origin(origin, cur.into_terms()))
}

/// Inverse of [`invert_once`]: `a(n) = b(n) - sum_{i=1}^{n-1} a(i) b(n-i)`.
/// The result may contain negative terms.
pub fn deinvert(b: &TermVector) -> Result<TermVector> {
    check_leading_zero(b)?;
    let b = b.terms();
    let mut a: Vec<BigInt> = Vec::with_capacity(b.len());
    for n in 0..b.len() {
        let mut t = b[n].clone();
        for i in 1..n {
            t -= &a[i] * &b[n - i];
        }
        a.push(t);
    }
    Ok(TermVector::raw(a))
}
