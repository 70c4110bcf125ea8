//! The dominant root `rho_m` of `p_m`, certified by exact bisection, and the
//! full complex root set by Aberth-Ehrlich iteration.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{metallic_charpoly, IntPolynomial, RationalValue};
use crate::precise::{format_scaled, Precise};
use crate::sequences::SequenceSpec;

/// Default enclosure width `2^-53`.
pub const DEFAULT_BITS: u64 = 53;
/// Relative Aberth step below which the iteration is considered converged.
pub const ABERTH_STEP_TOL: f64 = 1e-13;
pub const ABERTH_MAX_ITER: usize = 500;
/// Default scaled residual bound for [`all_roots`].
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-12;

/// A rational interval `[lo, hi]` with `p(lo) < 0 < p(hi)`, exactly checked.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRootEnclosure {
    lo: RationalValue,
    hi: RationalValue,
    poly: IntPolynomial,
    sign_lo: i8,
    sign_hi: i8,
}

impl RealRootEnclosure {
    /// Builds an enclosure after checking the endpoint signs exactly.
    pub fn new(poly: IntPolynomial, lo: RationalValue, hi: RationalValue) -> Result<Self> {
        let sign_lo = poly.sign_at(&lo);
        let sign_hi = poly.sign_at(&hi);
        if lo >= hi || sign_lo >= 0 || sign_hi <= 0 {
            return Err(Error::RootSet(format!(
                "[{lo}, {hi}] is not a sign-certified bracket (signs {sign_lo}, {sign_hi})"
            )));
        }
        Ok(Self {
            lo,
            hi,
            poly,
            sign_lo,
            sign_hi,
        })
    }

    pub fn lo(&self) -> &RationalValue {
        &self.lo
    }

    pub fn hi(&self) -> &RationalValue {
        &self.hi
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn signs(&self) -> (i8, i8) {
        (self.sign_lo, self.sign_hi)
    }

    pub fn width(&self) -> RationalValue {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> RationalValue {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// `lo < x < hi`.
    pub fn strictly_contains(&self, x: &RationalValue) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// One bisection step, halving the width.
    pub fn bisect(&mut self) -> Result<()> {
        let mid = self.midpoint();
        match self.poly.sign_at(&mid) {
            s if s < 0 => self.lo = mid,
            s if s > 0 => self.hi = mid,
            _ => {
                return Err(Error::ExactRoot {
                    at: mid.to_string(),
                })
            }
        }
        Ok(())
    }

    /// Bisects until `hi - lo <= 2^-bits`.
    pub fn refine_to_bits(&mut self, bits: u64) -> Result<()> {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        while self.width() > target {
            self.bisect()?;
        }
        Ok(())
    }

    /// Bisects until the width is at most `tol`.
    pub fn refine_to_width(&mut self, tol: &RationalValue) -> Result<()> {
        assert!(tol.is_positive());
        while &self.width() > tol {
            self.bisect()?;
        }
        Ok(())
    }

    /// `lo` rounded down to `places` decimals.
    pub fn lo_decimal(&self, places: usize) -> String {
        let s = scale10(&self.lo, places).floor().to_integer();
        format_scaled(&s, places)
    }

    /// `hi` rounded up to `places` decimals.
    pub fn hi_decimal(&self, places: usize) -> String {
        let s = scale10(&self.hi, places).ceil().to_integer();
        format_scaled(&s, places)
    }

    /// The root truncated to `digits` significant digits, if `lo` and `hi`
    /// already agree on all of them. Requires a positive enclosure.
    pub fn agreed_digits(&self, digits: usize) -> Option<String> {
        let int_digits = self.lo.floor().to_integer().to_string().len();
        let places = digits.saturating_sub(int_digits);
        let lo = scale10(&self.lo, places).floor().to_integer();
        let hi = scale10(&self.hi, places).floor().to_integer();
        (lo == hi && self.lo.floor() == self.hi.floor()).then(|| format_scaled(&lo, places))
    }

    /// Refines until `digits` significant digits are determined and returns
    /// them, truncated (never rounded up past the true value).
    pub fn certified_digits(&mut self, digits: usize) -> Result<String> {
        loop {
            if let Some(s) = self.agreed_digits(digits) {
                return Ok(s);
            }
            self.bisect()?;
        }
    }

    /// Number of significant digits currently certified.
    pub fn digit_count(&self) -> usize {
        let mut d = 1;
        while self.agreed_digits(d + 1).is_some() && d < 10_000 {
            d += 1;
        }
        if self.agreed_digits(1).is_some() {
            d
        } else {
            0
        }
    }
}

fn scale10(v: &RationalValue, places: usize) -> RationalValue {
    v * BigRational::from_integer(num_traits::pow(BigInt::from(10), places))
}

/// Certified enclosure of the dominant root `rho_m` of `p_m`, starting from
/// `[m, m + 1]` and bisecting until the width is at most `2^-precision_bits`.
pub fn dominant_root(spec: SequenceSpec, precision_bits: u64) -> Result<RealRootEnclosure> {
    if precision_bits < 1 {
        return Err(Error::InvalidPrecision);
    }
    let m = BigInt::from(spec.m());
    let mut enc = RealRootEnclosure::new(
        metallic_charpoly(spec),
        BigRational::from_integer(m.clone()),
        BigRational::from_integer(m + 1u32),
    )?;
    enc.refine_to_bits(precision_bits)?;
    Ok(enc)
}

/// `rho_m` truncated to `digits` significant digits, every printed digit
/// certified by the enclosure.
pub fn certified_mean(spec: SequenceSpec, digits: usize) -> Result<String> {
    let mut enc = dominant_root(spec, 8)?;
    enc.certified_digits(digits.max(1))
}

/// `(m + sqrt(m^2 + 4)) / 2`, the quadratic metallic mean.
pub fn quadratic_closed_form(m: u64, bits: u32) -> Precise {
    let m = BigInt::from(m);
    let disc = Precise::from_bigint(&(&m * &m + 4u32), bits);
    let root = disc.sqrt().expect("m^2 + 4 > 0");
    let sum = &Precise::from_bigint(&m, bits) + &root;
    &sum / &Precise::from_int(2, bits)
}

/// Real root of `x^3 - m x^2 - x - 1` by Cardano's formula.
///
/// With `x = y + m/3` the cubic becomes `y^3 + p y + q` where
/// `p = -1 - m^2/3` and `q = -2m^3/27 - m/3 - 1`; the discriminant
/// `(q/2)^2 + (p/3)^3` is positive, so `y = cbrt(-q/2 + s) + cbrt(-q/2 - s)`.
pub fn cubic_closed_form(m: u64, bits: u32) -> Result<Precise> {
    let m = BigInt::from(m);
    let m_r = BigRational::from_integer(m.clone());
    let three = BigRational::from_integer(3.into());
    let p = -BigRational::one() - &m_r * &m_r / &three;
    let q = -BigRational::from_integer(2.into()) * &m_r * &m_r * &m_r
        / BigRational::from_integer(27.into())
        - &m_r / &three
        - BigRational::one();
    let half_q = &q / BigRational::from_integer(2.into());
    let third_p = &p / &three;
    let disc = &half_q * &half_q + &third_p * &third_p * &third_p;
    if disc.is_zero() {
        return Err(Error::CardanoBranch("repeated"));
    }
    if disc.is_negative() {
        return Err(Error::CardanoBranch("three distinct"));
    }
    let s = Precise::from_rational(&disc, bits)
        .sqrt()
        .expect("positive discriminant");
    let minus_half_q = Precise::from_rational(&-half_q, bits);
    let y = &(&minus_half_q + &s).cbrt() + &(&minus_half_q - &s).cbrt();
    Ok(&y + &Precise::from_rational(&(m_r / three), bits))
}

/// All complex roots of `p_m` with per-root residual diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRootSet {
    pub roots: Vec<Complex64>,
    /// `|p(root)|` for each root.
    pub residuals: Vec<f64>,
    /// Index of the root approximating `rho_m`.
    pub dominant_index: usize,
    pub iterations: usize,
}

impl ComplexRootSet {
    pub fn dominant(&self) -> Complex64 {
        self.roots[self.dominant_index]
    }

    pub fn non_dominant(&self) -> impl Iterator<Item = &Complex64> {
        self.roots
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.dominant_index)
            .map(|(_, z)| z)
    }

    /// Roots with `|im| <= tol * |z|` and positive real part.
    pub fn positive_real_count(&self, tol: f64) -> usize {
        self.roots
            .iter()
            .filter(|z| z.im.abs() <= tol * z.norm() && z.re > 0.0)
            .count()
    }

    pub fn modulus_product(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).product()
    }

    /// Every root has a distinct partner within `tol` of its conjugate (a
    /// real root is its own partner).
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        let n = self.roots.len();
        let mut used = vec![false; n];
        for i in 0..n {
            if used[i] {
                continue;
            }
            let target = self.roots[i].conj();
            let scale = tol * self.roots[i].norm().max(1.0);
            if (target - self.roots[i]).norm() <= scale {
                used[i] = true;
                continue;
            }
            let partner = (0..n).filter(|&j| j != i && !used[j]).min_by(|&a, &b| {
                (self.roots[a] - target)
                    .norm()
                    .total_cmp(&(self.roots[b] - target).norm())
            });
            match partner {
                Some(j) if (self.roots[j] - target).norm() <= scale => {
                    used[i] = true;
                    used[j] = true;
                }
                _ => return false,
            }
        }
        true
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `sum |c_i| |z|^i`, the natural scale for a residual at `z`.
fn residual_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
}

/// Aberth-Ehrlich simultaneous iteration. Coefficients ascending, leading
/// coefficient nonzero. Initial guesses sit equally spaced on the circle of
/// radius `1 + max |c_i / c_n|`.
pub fn aberth_ehrlich(
    coeffs: &[f64],
    step_tol: f64,
    max_iter: usize,
) -> Result<(Vec<Complex64>, usize)> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let offset = PI / (2.0 * n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(radius, 2.0 * PI * j as f64 / n as f64 + offset))
        .collect();
    for iter in 1..=max_iter {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::one() - ratio * repulsion);
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(f64::MIN_POSITIVE));
        }
        if max_step < step_tol {
            return Ok((z, iter));
        }
    }
    let residuals = z.iter().map(|&r| horner(coeffs, r).0.norm()).collect();
    Err(Error::NonConvergence {
        iterations: max_iter,
        residuals,
    })
}

/// All `k` roots of `p_m`. Each root satisfies `|p(z)| <= tol * sum |c_i||z|^i`
/// and exactly one root lies in the certified enclosure of `rho_m`.
pub fn all_roots(spec: SequenceSpec, tol: f64) -> Result<ComplexRootSet> {
    let poly = metallic_charpoly(spec);
    let coeffs = poly.to_f64s();
    let (roots, iterations) = aberth_ehrlich(&coeffs, ABERTH_STEP_TOL, ABERTH_MAX_ITER)?;
    let residuals: Vec<f64> = roots.iter().map(|&z| horner(&coeffs, z).0.norm()).collect();
    for (z, r) in roots.iter().zip(&residuals) {
        if *r > tol * residual_scale(&coeffs, *z) {
            return Err(Error::NonConvergence {
                iterations,
                residuals,
            });
        }
    }
    let enc = dominant_root(spec, DEFAULT_BITS)?;
    let (lo, hi) = (enc.lo().to_f64().unwrap(), enc.hi().to_f64().unwrap());
    let slack = 1e-9 * hi;
    let inside: Vec<usize> = roots
        .iter()
        .enumerate()
        .filter(|(_, z)| z.im.abs() <= slack && z.re >= lo - slack && z.re <= hi + slack)
        .map(|(i, _)| i)
        .collect();
    match inside.as_slice() {
        [i] => Ok(ComplexRootSet {
            roots,
            residuals,
            dominant_index: *i,
            iterations,
        }),
        _ => Err(Error::RootSet(format!(
            "{} roots found inside the dominant enclosure, expected exactly one",
            inside.len()
        ))),
    }
}

/// `max_{j != dominant} |gamma_j| / rho_m`.
pub fn spectral_gap(spec: SequenceSpec) -> Result<f64> {
    let set = all_roots(spec, DEFAULT_RESIDUAL_TOL)?;
    Ok(gap_of(&set))
}

pub(crate) fn gap_of(set: &ComplexRootSet) -> f64 {
    let rho = set.dominant().norm();
    set.non_dominant().map(|z| z.norm()).fold(0.0, f64::max) / rho
}

#[derive(Debug, Clone, Serialize)]
pub struct RootEntry {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

/// Per-(k, m) root report.
#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub k: usize,
    pub m: u64,
    pub lo: String,
    pub hi: String,
    pub digits: usize,
    pub roots: Vec<RootEntry>,
    pub spectral_gap: f64,
}

/// Builds the report with an enclosure of width `2^-bits`; `lo` is rounded
/// down and `hi` up so the decimal interval still contains the root.
pub fn root_report(spec: SequenceSpec, bits: u64) -> Result<RootReport> {
    let enc = dominant_root(spec, bits)?;
    let set = all_roots(spec, DEFAULT_RESIDUAL_TOL)?;
    let places = (bits as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
    Ok(RootReport {
        k: spec.k(),
        m: spec.m(),
        lo: enc.lo_decimal(places),
        hi: enc.hi_decimal(places),
        digits: enc.digit_count(),
        roots: set
            .roots
            .iter()
            .map(|z| RootEntry {
                re: z.re,
                im: z.im,
                modulus: z.norm(),
            })
            .collect(),
        spectral_gap: gap_of(&set),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: usize, m: u64) -> SequenceSpec {
        SequenceSpec::new(k, m).unwrap()
    }

    fn contains_f64(enc: &RealRootEnclosure, v: f64) -> bool {
        enc.lo().to_f64().unwrap() <= v && v <= enc.hi().to_f64().unwrap()
    }

    #[test]
    fn dominant_examples() {
        let phi = dominant_root(spec(2, 1), 40).unwrap();
        assert!(contains_f64(&phi, 1.618_033_988_749_895));
        let tau1 = dominant_root(spec(3, 1), 40).unwrap();
        assert!((tau1.midpoint_f64() - 1.839).abs() < 5e-4);
        let tau3 = dominant_root(spec(3, 3), 40).unwrap();
        assert!((tau3.midpoint_f64() - 3.383).abs() < 5e-4);
    }

    #[test]
    fn enclosure_width_and_signs() {
        let enc = dominant_root(spec(5, 2), 70).unwrap();
        assert!(enc.width() <= BigRational::new(1.into(), BigInt::one() << 70usize));
        assert_eq!(enc.signs(), (-1, 1));
        let p = enc.poly();
        assert!(p.eval_exact(enc.lo()).is_negative());
        assert!(p.eval_exact(enc.hi()).is_positive());
        assert_eq!(dominant_root(spec(2, 1), 0), Err(Error::InvalidPrecision));
    }

    #[test]
    fn bisection_halves_width() {
        let mut enc = dominant_root(spec(3, 2), 1).unwrap();
        for _ in 0..20 {
            let before = enc.width();
            enc.bisect().unwrap();
            assert_eq!(enc.width() * BigRational::from_integer(2.into()), before);
            assert_eq!(enc.signs(), (-1, 1));
        }
    }

    #[test]
    fn rejects_non_bracket() {
        let p = IntPolynomial::from_i64s(&[-1, -1, 1]);
        let r = |n: i64| BigRational::from_integer(n.into());
        assert!(RealRootEnclosure::new(p.clone(), r(2), r(3)).is_err());
        assert!(RealRootEnclosure::new(p, r(1), r(2)).is_ok());
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(quadratic_closed_form(1, 128).to_decimal(10), "1.6180339887");
        assert_eq!(quadratic_closed_form(2, 128).to_decimal(10), "2.4142135623");
        assert_eq!(quadratic_closed_form(3, 128).to_decimal(10), "3.3027756377");
    }

    /// The radical expressions for tau_1, tau_2, tau_3 as printed, evaluated
    /// directly; independent of the general-m reduction.
    fn printed_radicals(bits: u32) -> [Precise; 3] {
        let r = |n, d| Precise::from_ratio(n, d, bits);
        let third = r(1, 3);
        let s33 = Precise::from_int(33, bits).sqrt().unwrap();
        let s29 = Precise::from_int(29, bits).sqrt().unwrap();
        let tau1 = {
            let a = &r(19, 1) + &(&r(3, 1) * &s33);
            let b = &r(19, 1) - &(&r(3, 1) * &s33);
            &third * &(&(&r(1, 1) + &a.cbrt()) + &b.cbrt())
        };
        let tau2 = {
            let a = &(&r(61, 1) + &(&r(9, 1) * &s29)) / &r(2, 1);
            let b = &(&r(61, 1) - &(&r(9, 1) * &s29)) / &r(2, 1);
            &third * &(&(&r(2, 1) + &a.cbrt()) + &b.cbrt())
        };
        let tau3 = {
            let a = &r(54, 1) + &(&r(6, 1) * &s33);
            let b = &r(54, 1) - &(&r(6, 1) * &s33);
            &third * &(&(&r(3, 1) + &a.cbrt()) + &b.cbrt())
        };
        [tau1, tau2, tau3]
    }

    #[test]
    fn cubic_matches_printed_radicals() {
        let printed = printed_radicals(256);
        for (m, expected) in (1..=3).zip(printed.iter()) {
            let got = cubic_closed_form(m, 256).unwrap();
            let err = (&got - expected).abs().to_f64();
            assert!(err < 1e-70, "m={m} err={err}");
        }
        assert_eq!(printed[0].to_decimal(16), "1.8392867552141611");
        assert!((printed[0].to_f64() - 1.839_286_755_214_161_2).abs() < 1e-15);
        assert!((printed[1].to_f64() - 2.547).abs() < 5e-4);
    }

    #[test]
    fn closed_forms_inside_enclosures() {
        for m in 1..=8 {
            let q = dominant_root(spec(2, m), 60).unwrap();
            assert!(q.strictly_contains(&quadratic_closed_form(m, 256).to_rational()));
            let c = dominant_root(spec(3, m), 60).unwrap();
            assert!(c.strictly_contains(&cubic_closed_form(m, 256).unwrap().to_rational()));
        }
    }

    #[test]
    fn certified_digit_strings() {
        assert_eq!(certified_mean(spec(3, 1), 10).unwrap(), "1.839286755");
        assert_eq!(certified_mean(spec(2, 1), 12).unwrap(), "1.61803398874");
        assert_eq!(certified_mean(spec(2, 12), 4).unwrap(), "12.08");
        assert_eq!(certified_mean(spec(2, 1), 1).unwrap(), "1");
    }

    #[test]
    fn all_roots_quadratic() {
        let set = all_roots(spec(2, 1), 1e-12).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((set.dominant().re - phi).abs() < 1e-13);
        let other = set.non_dominant().next().unwrap();
        assert!((other.re + 1.0 / phi).abs() < 1e-13 && other.im.abs() < 1e-13);
    }

    #[test]
    fn tribonacci_complex_pair() {
        for m in 1..=6 {
            let set = all_roots(spec(3, m), 1e-12).unwrap();
            let tau = set.dominant().re;
            // gamma = -(tau + 1 +- i sqrt(4 tau^3 - (tau+1)^2)) / (2 tau^2)
            let re = -(tau + 1.0) / (2.0 * tau * tau);
            let im = (4.0 * tau.powi(3) - (tau + 1.0).powi(2)).sqrt() / (2.0 * tau * tau);
            for z in set.non_dominant() {
                assert!((z.re - re).abs() < 1e-12, "m={m}");
                assert!((z.im.abs() - im).abs() < 1e-12, "m={m}");
                assert!((z.norm() - 1.0 / tau.sqrt()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn gap_examples() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((spectral_gap(spec(2, 1)).unwrap() - phi.powi(-2)).abs() < 1e-12);
        let tau1 = 1.839_286_755_214_161_2_f64;
        let g = spectral_gap(spec(3, 1)).unwrap();
        assert!((g - tau1.powf(-1.5)).abs() < 1e-10);
        assert!((g - 0.4009).abs() < 1e-4);
        let enc = dominant_root(spec(4, 2), 53).unwrap();
        let set = all_roots(spec(4, 2), 1e-12).unwrap();
        let lo = enc.lo().to_f64().unwrap();
        assert!(set.non_dominant().all(|z| z.norm() < lo));
        let g = gap_of(&set);
        assert!(g > 0.0 && g < 1.0);
    }

    #[test]
    fn root_set_invariants_on_grid() {
        for k in 2..=8 {
            for m in 1..=6 {
                let set = all_roots(spec(k, m), 1e-12).unwrap();
                assert_eq!(set.roots.len(), k);
                assert_eq!(set.positive_real_count(1e-9), 1, "k={k} m={m}");
                assert!(set.is_conjugate_closed(1e-9), "k={k} m={m}");
                assert!((set.modulus_product() - 1.0).abs() < 1e-10, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn conjugate_closure_detects_unpaired_root() {
        let set = ComplexRootSet {
            roots: vec![Complex64::new(1.0, 1.0), Complex64::new(2.0, 0.0)],
            residuals: vec![0.0, 0.0],
            dominant_index: 1,
            iterations: 0,
        };
        assert!(!set.is_conjugate_closed(1e-9));
    }

    #[test]
    fn aberth_reports_non_convergence() {
        let err = aberth_ehrlich(&[-6.0, 11.0, -6.0, 1.0], 1e-13, 1).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { iterations: 1, .. }));
        let (roots, _) = aberth_ehrlich(&[-6.0, 11.0, -6.0, 1.0], 1e-13, 500).unwrap();
        let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (r, e) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r - e).abs() < 1e-12);
        }
    }

    #[test]
    fn report_shape() {
        let r = root_report(spec(3, 1), 53).unwrap();
        assert!(r.lo.starts_with("1.83928675521416") && r.hi.starts_with("1.83928675521416"));
        assert!(r.digits >= 15);
        assert_eq!(r.roots.len(), 3);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["k"], 3);
        assert!(json["lo"].is_string());
    }
}
