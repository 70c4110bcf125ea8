//! Grid-wide invariant checks, shared by the `verify` command and the
//! acceptance tests.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::analysis::{binet_coefficients, ratio_sequence};
use crate::error::Result;
use crate::invert::invert_iterate;
use crate::poly::{
    endpoint_values, metallic_charpoly, q_derivative_discriminant, q_derivative_quadratic, q_poly,
    quadratic_discriminant, IntPolynomial,
};
use crate::roots::{all_roots, dominant_root, DEFAULT_RESIDUAL_TOL};
use crate::sequences::{gf_terms_for_spec, recurrence_terms, SequenceSpec};
use crate::tilings::oracle_agreement;

pub const PIPELINE_TERMS: usize = 40;
pub const DOMINANCE_SLACK: f64 = 1e-9;
pub const MODULUS_PRODUCT_TOL: f64 = 1e-10;
pub const CONJUGATE_TOL: f64 = 1e-9;
pub const FINAL_RATIO_INDEX: usize = 60;
pub const FINAL_RATIO_TOL: f64 = 1e-12;
pub const BINET_TERMS: usize = 31;
pub const BINET_TOL: f64 = 1e-6;
pub const MODULUS_LAW_TOL: f64 = 1e-10;
pub const TILING_MAX_LEN: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub k: usize,
    pub m: u64,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} k={} m={} {}", self.k, self.m, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

struct Cell<'a> {
    spec: SequenceSpec,
    out: &'a mut Vec<CheckOutcome>,
}

impl Cell<'_> {
    fn record(&mut self, name: &'static str, result: Result<std::result::Result<(), String>>) {
        let (passed, detail) = match result {
            Ok(Ok(())) => (true, String::new()),
            Ok(Err(msg)) => (false, msg),
            Err(e) => (false, e.to_string()),
        };
        self.out.push(CheckOutcome {
            name,
            k: self.spec.k(),
            m: self.spec.m(),
            passed,
            detail,
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Invert-chain equivalence and generating-function agreement.
pub fn check_sequences(spec: SequenceSpec) -> Result<std::result::Result<(), String>> {
    let base = recurrence_terms(SequenceSpec::new(spec.k(), 1)?, PIPELINE_TERMS)?;
    let direct = recurrence_terms(spec, PIPELINE_TERMS)?;
    let inverted = invert_iterate(&base, spec.m() as usize - 1)?;
    let gf = gf_terms_for_spec(spec, PIPELINE_TERMS)?;
    Ok(ensure(inverted.terms() == direct.terms(), || {
        "invert chain differs from recurrence".into()
    })
    .and(ensure(gf == direct, || {
        "generating function differs from recurrence".into()
    })))
}

/// Endpoint bracket, Descartes count, `q = (x-1) p_m`, the `q'` factorization,
/// its discriminant, and squarefreeness.
pub fn check_polynomial(spec: SequenceSpec) -> Result<std::result::Result<(), String>> {
    let p = metallic_charpoly(spec);
    let (at_m, at_m1) = endpoint_values(spec);
    let m = BigRational::from_integer(BigInt::from(spec.m()));
    let m1 = &m + BigRational::from_integer(1.into());
    let quad = q_derivative_quadratic(spec);
    let disc = quadratic_discriminant(&quad).unwrap_or_default();
    let checks = [
        (
            at_m.is_negative() && at_m1.is_positive(),
            "endpoint values are not (negative, positive)",
        ),
        (
            p.eval_exact(&m) == at_m && p.eval_exact(&m1) == at_m1,
            "endpoint closed forms disagree with evaluation",
        ),
        (p.sign_changes() == 1, "coefficient sign changes != 1"),
        (
            &IntPolynomial::from_i64s(&[-1, 1]) * &p == q_poly(spec),
            "(x-1) p_m != q",
        ),
        (
            q_poly(spec).derivative() == quad.shift(spec.k() - 2),
            "q' != x^(k-2) * quadratic",
        ),
        (
            disc == q_derivative_discriminant(spec) && disc.is_positive(),
            "discriminant mismatch or not positive",
        ),
        (p.is_squarefree(), "p_m is not squarefree"),
    ];
    Ok(checks
        .iter()
        .try_for_each(|&(ok, msg)| ensure(ok, || msg.to_string())))
}

/// Enclosure containment, dominance, conjugate closure, modulus product, and
/// (for k = 3) the modulus law of the complex pair.
pub fn check_roots(spec: SequenceSpec) -> Result<std::result::Result<(), String>> {
    let enc = dominant_root(spec, 60)?;
    let m = BigRational::from_integer(BigInt::from(spec.m()));
    let m1 = &m + BigRational::from_integer(1.into());
    if !(&m < enc.lo() && enc.hi() < &m1) {
        return Ok(Err(format!(
            "enclosure [{}, {}] not inside (m, m+1)",
            enc.lo(),
            enc.hi()
        )));
    }
    let set = all_roots(spec, DEFAULT_RESIDUAL_TOL)?;
    let lo = enc.lo().to_f64().unwrap_or(f64::NAN);
    if set.positive_real_count(DOMINANCE_SLACK) != 1 {
        return Ok(Err("positive real root count != 1".into()));
    }
    if let Some(z) = set
        .non_dominant()
        .find(|z| z.norm() >= lo - DOMINANCE_SLACK)
    {
        return Ok(Err(format!("root {z} has modulus {} >= lo {lo}", z.norm())));
    }
    if !set.is_conjugate_closed(CONJUGATE_TOL) {
        return Ok(Err("root set not closed under conjugation".into()));
    }
    let prod = set.modulus_product();
    if (prod - 1.0).abs() > MODULUS_PRODUCT_TOL {
        return Ok(Err(format!("modulus product {prod} != 1")));
    }
    if spec.k() == 3 {
        let law = 1.0 / set.dominant().re.sqrt();
        if let Some(z) = set
            .non_dominant()
            .find(|z| (z.norm() - law).abs() > MODULUS_LAW_TOL)
        {
            return Ok(Err(format!(
                "|gamma| = {} but 1/sqrt(tau) = {law}",
                z.norm()
            )));
        }
    }
    Ok(Ok(()))
}

/// `g(61)/g(60)` against the certified root, and Binet reconstruction.
pub fn check_convergence(spec: SequenceSpec) -> Result<std::result::Result<(), String>> {
    let pts = ratio_sequence(spec, FINAL_RATIO_INDEX + 1)?;
    let last = &pts[FINAL_RATIO_INDEX - 1];
    debug_assert_eq!(last.n, FINAL_RATIO_INDEX);
    if last.abs_error.is_nan() || last.abs_error >= FINAL_RATIO_TOL {
        return Ok(Err(format!("|g(61)/g(60) - rho| = {:e}", last.abs_error)));
    }
    let binet = binet_coefficients(spec)?;
    let err = binet.max_relative_error(&recurrence_terms(spec, BINET_TERMS)?);
    Ok(ensure(err < BINET_TOL, || {
        format!("Binet relative error {err:e}")
    }))
}

pub fn check_tilings(spec: SequenceSpec) -> Result<std::result::Result<(), String>> {
    match oracle_agreement(spec, TILING_MAX_LEN) {
        Ok(()) => Ok(Ok(())),
        Err(e) => Ok(Err(e.to_string())),
    }
}

/// Runs every check on `2 <= k <= kmax`, `1 <= m <= mmax`.
pub fn verify_grid(kmax: usize, mmax: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for k in 2..=kmax {
        for m in 1..=mmax {
            let spec = SequenceSpec::new(k, m)?;
            let mut cell = Cell {
                spec,
                out: &mut report.outcomes,
            };
            cell.record("sequences", check_sequences(spec));
            cell.record("polynomial", check_polynomial(spec));
            cell.record("roots", check_roots(spec));
            cell.record("convergence", check_convergence(spec));
            cell.record("tilings", check_tilings(spec));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let report = verify_grid(4, 3).unwrap();
        assert_eq!(report.outcomes.len(), 3 * 3 * 5);
        for o in &report.outcomes {
            assert!(o.passed, "{o}");
        }
        assert!(report.all_passed());
    }

    #[test]
    fn outcome_display() {
        let o = CheckOutcome {
            name: "roots",
            k: 3,
            m: 2,
            passed: false,
            detail: "boom".into(),
        };
        assert_eq!(o.to_string(), "FAIL k=3 m=2 roots: boom");
    }
}
