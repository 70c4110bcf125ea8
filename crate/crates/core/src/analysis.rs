//! Convergence of `g(n+1)/g(n)` to `rho_m`, Binet coefficients, and two
//! small identities: the refined triangle inequality for three complex
//! numbers and the segment-ratio property of the golden-type means.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::bigint_to_f64;
use crate::roots::{all_roots, dominant_root, gap_of, DEFAULT_RESIDUAL_TOL};
use crate::sequences::{recurrence_terms, SequenceSpec, TermVector};

/// Minimum enclosure precision used as the reference value for errors.
pub const REFERENCE_BITS: u64 = 64;

/// `g(n+1) / g(n)` and its distance to `rho_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioPoint {
    pub n: usize,
    pub ratio: BigRational,
    pub value: f64,
    pub abs_error: f64,
}

/// Ratios for `n = 1 ..= count - 1`. Errors are measured against the
/// midpoint of an enclosure at least ten times narrower than the smallest
/// error in the table; the precision is raised until that holds.
pub fn ratio_sequence(spec: SequenceSpec, count: usize) -> Result<Vec<RatioPoint>> {
    if count < 3 {
        return Err(Error::TooFewTerms { count, min: 3 });
    }
    let terms = recurrence_terms(spec, count + 1)?;
    let ratios: Vec<BigRational> = (1..count)
        .map(|n| BigRational::new(terms.terms()[n + 1].clone(), terms.terms()[n].clone()))
        .collect();

    let mut enc = dominant_root(spec, REFERENCE_BITS)?;
    let errors = loop {
        let mid = enc.midpoint();
        let errors: Vec<BigRational> = ratios.iter().map(|r| (r - &mid).abs()).collect();
        let smallest = errors
            .iter()
            .filter(|e| !e.is_zero())
            .min()
            .cloned()
            .unwrap_or_else(BigRational::one);
        let ten = BigRational::from_integer(BigInt::from(10));
        if enc.width() * &ten <= smallest {
            break errors;
        }
        enc.refine_to_width(&(smallest / (&ten * &ten)))?;
    };

    Ok(ratios
        .into_iter()
        .zip(errors)
        .enumerate()
        .map(|(i, (ratio, err))| RatioPoint {
            n: i + 1,
            value: ratio.to_f64().unwrap_or(f64::NAN),
            abs_error: err.to_f64().unwrap_or(f64::NAN),
            ratio,
        })
        .collect())
}

/// Fitted geometric decay of the ratio error against the spectral gap.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub k: usize,
    pub m: u64,
    pub count: usize,
    pub fitted_rate: f64,
    pub spectral_gap: f64,
    /// `fitted_rate / spectral_gap`.
    pub rate_ratio: f64,
    #[serde(skip)]
    pub points: Vec<RatioPoint>,
}

impl ConvergenceReport {
    /// CSV table `n,ratio,abs_error`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,ratio,abs_error\n");
        for p in &self.points {
            out.push_str(&format!("{},{:.17e},{:.6e}\n", p.n, p.value, p.abs_error));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["ratios"] = self
            .points
            .iter()
            .map(|p| {
                serde_json::json!({
                    "n": p.n,
                    "ratio": p.ratio.to_string(),
                    "value": p.value,
                    "abs_error": p.abs_error,
                })
            })
            .collect();
        v
    }
}

/// Least-squares slope of `ln(abs_error)` over the last half of the window,
/// exponentiated, compared with the spectral gap.
pub fn convergence_report(spec: SequenceSpec, count: usize) -> Result<ConvergenceReport> {
    if count < 10 {
        return Err(Error::TooFewTerms { count, min: 10 });
    }
    let points = ratio_sequence(spec, count)?;
    let tail: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.n >= count / 2 && p.abs_error > 0.0)
        .map(|p| (p.n as f64, p.abs_error.ln()))
        .collect();
    let fitted_rate = least_squares_slope(&tail).exp();
    let set = all_roots(spec, DEFAULT_RESIDUAL_TOL)?;
    let spectral_gap = gap_of(&set);
    Ok(ConvergenceReport {
        k: spec.k(),
        m: spec.m(),
        count,
        fitted_rate,
        spectral_gap,
        rate_ratio: fitted_rate / spectral_gap,
        points,
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Constants `c_j` with `g(n) = sum_j c_j gamma_j^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinetDecomposition {
    pub roots: Vec<Complex64>,
    pub coefficients: Vec<Complex64>,
    /// Smallest over largest pivot magnitude of the Vandermonde solve.
    pub pivot_ratio: f64,
}

impl BinetDecomposition {
    pub fn term(&self, n: usize) -> Complex64 {
        self.roots
            .iter()
            .zip(&self.coefficients)
            .map(|(g, c)| c * g.powu(n as u32))
            .sum()
    }

    /// `max_n |term(n) - g(n)| / max(|g(n)|, 1)` over the given exact terms.
    pub fn max_relative_error(&self, exact: &TermVector) -> f64 {
        exact
            .terms()
            .iter()
            .enumerate()
            .map(|(n, g)| {
                let g = bigint_to_f64(g);
                (self.term(n) - g).norm() / g.abs().max(1.0)
            })
            .fold(0.0, f64::max)
    }
}

/// Smallest pivot ratio accepted before the system is declared singular.
pub const MIN_PIVOT_RATIO: f64 = 1e-12;

/// Solves the Vandermonde system `gamma_j^n c_j = g(n)`, `n < k`.
pub fn binet_coefficients(spec: SequenceSpec) -> Result<BinetDecomposition> {
    let k = spec.k();
    let roots = all_roots(spec, DEFAULT_RESIDUAL_TOL)?.roots;
    let terms = recurrence_terms(spec, k.max(2))?;
    let mut a: Vec<Vec<Complex64>> = (0..k)
        .map(|n| roots.iter().map(|g| g.powu(n as u32)).collect())
        .collect();
    let mut b: Vec<Complex64> = terms.terms()[..k]
        .iter()
        .map(|t| Complex64::new(bigint_to_f64(t), 0.0))
        .collect();
    let (coefficients, pivot_ratio) = solve_complex(&mut a, &mut b);
    if pivot_ratio.is_nan() || pivot_ratio < MIN_PIVOT_RATIO {
        return Err(Error::SingularSystem { pivot_ratio });
    }
    Ok(BinetDecomposition {
        roots,
        coefficients,
        pivot_ratio,
    })
}

/// Gaussian elimination with partial pivoting. Returns the solution and the
/// ratio of the smallest to the largest pivot magnitude.
fn solve_complex(a: &mut [Vec<Complex64>], b: &mut [Complex64]) -> (Vec<Complex64>, f64) {
    let n = b.len();
    let (mut pmin, mut pmax) = (f64::INFINITY, 0.0f64);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col];
        pmin = pmin.min(p.norm());
        pmax = pmax.max(p.norm());
        if p.is_zero() {
            return (vec![Complex64::zero(); n], 0.0);
        }
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for (i, row) in rest.iter_mut().enumerate() {
            let f = row[col] / p;
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= f * src;
            }
            let v = b[col];
            b[col + 1 + i] -= f * v;
        }
    }
    let mut x = vec![Complex64::zero(); n];
    for row in (0..n).rev() {
        let s: Complex64 = (row + 1..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    (x, pmin / pmax)
}

/// Both sides of
/// `|z1+z2+z3| + (3 - |z1/|z1| + z2/|z2| + z3/|z3||) |z1| <= |z1|+|z2|+|z3|`
/// for `|z1| <= |z2| <= |z3|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub const TRIANGLE_TOL: f64 = 1e-12;

/// Evaluates the refined triangle inequality; inputs are sorted by modulus
/// first, so any order is accepted.
pub fn triangle_refinement_check(
    z1: Complex64,
    z2: Complex64,
    z3: Complex64,
) -> Result<TriangleCheck> {
    let mut zs = [z1, z2, z3];
    if zs.iter().any(|z| z.is_zero()) {
        return Err(Error::ZeroInput);
    }
    zs.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    let [z1, z2, z3] = zs;
    let units = z1 / z1.norm() + z2 / z2.norm() + z3 / z3.norm();
    let lhs = (z1 + z2 + z3).norm() + (3.0 - units.norm()) * z1.norm();
    let rhs = z1.norm() + z2.norm() + z3.norm();
    Ok(TriangleCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + TRIANGLE_TOL,
    })
}

pub const SEGMENT_TOL: f64 = 1e-12;

/// Splits a segment into `k` parts `root^(k-1), ..., root, 1` and checks that
/// total/first and each consecutive part ratio all equal `root`. True for the
/// golden mean of degree `k` (m = 1) and false off the root.
pub fn segment_ratio_check(root: f64, k: usize) -> bool {
    let parts: Vec<f64> = (0..k).rev().map(|e| root.powi(e as i32)).collect();
    let total: f64 = parts.iter().sum();
    let close = |r: f64| (r - root).abs() <= SEGMENT_TOL * root.abs().max(1.0);
    close(total / parts[0]) && parts.windows(2).all(|w| close(w[0] / w[1]))
}
