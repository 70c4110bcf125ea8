//! Command-line front end for the `metallic` crate.
//!
//! Exit codes: 0 on success, 1 on numerical failure (root iteration, cap
//! exceeded, failed verification), 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use metallic::analysis::convergence_report;
use metallic::invert::invert_iterate;
use metallic::poly::{endpoint_values, metallic_charpoly, q_poly};
use metallic::roots::{dominant_root, root_report, DEFAULT_BITS};
use metallic::sequences::{parse_terms, recurrence_terms};
use metallic::tilings::{
    count_tilings_dp, enumerate_tilings, TilingProblem, DEFAULT_ENUMERATION_CAP,
};
use metallic::verify::verify_grid;
use metallic::{Error, SequenceSpec, TermVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
    /// OEIS b-file, integer sequences only.
    Bfile,
}

#[derive(Debug, Parser)]
#[command(
    name = "metallic",
    version,
    about = "Generalized metallic means of degree k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Terms g(0), ..., g(count-1) of x / (1 - m x - x^2 - ... - x^k).
    ///
    /// Sequences start at n = 0 with g(0) = 0, g(1) = 1. The b-file format
    /// numbers lines from n = 1, so `1 1`, `2 m`, ...
    Seq {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Apply the INVERT transform to a sequence starting with 0.
    Invert {
        #[arg(long, default_value_t = 1)]
        times: usize,
        /// File with one integer per line.
        #[arg(long, conflicts_with = "terms")]
        file: Option<PathBuf>,
        /// Inline comma-separated integers.
        #[arg(long, required_unless_present = "file")]
        terms: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Characteristic polynomial p_m, q = (x-1) p_m, endpoint values, squarefree verdict.
    Poly {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Certified significant digits of the metallic mean (truncated, never rounded).
    Mean {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 15)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// All complex roots of p_m with the spectral gap.
    Roots {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = DEFAULT_BITS)]
        bits: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Ratios g(n+1)/g(n), their errors, and the fitted decay rate.
    Ratios {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 40)]
        count: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Count (and optionally list) tilings of a 1 x L board. The count for
    /// length L equals g(L+1).
    Tilings {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run every invariant check on 2 <= k <= kmax, 1 <= m <= mmax.
    Verify {
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value_t = 6)]
        mmax: u64,
    },
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec { .. }
            | Error::TooFewTerms { .. }
            | Error::InvalidPrecision
            | Error::Parse(_)
            | Error::NonZeroLeadingTerm { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Numeric(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `argv` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn reject_format(cmd: &str, format: OutputFormat, allowed: &[OutputFormat]) -> Outcome {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(
            format!("format {format:?} is not supported by `{cmd}`").to_lowercase(),
        ))
    }
}

fn write_sequence(tv: &TermVector, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    match format {
        OutputFormat::Plain => writeln!(out, "{}", tv.to_plain())?,
        OutputFormat::Json => writeln!(out, "{}", tv.to_json())?,
        OutputFormat::Csv => write!(out, "{}", tv.to_csv())?,
        OutputFormat::Bfile => write!(out, "{}", tv.to_bfile())?,
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    use OutputFormat::*;
    match command {
        Command::Seq {
            k,
            m,
            count,
            format,
        } => {
            let tv = recurrence_terms(SequenceSpec::new(k, m)?, count)?;
            write_sequence(&tv, format, out)
        }
        Command::Invert {
            times,
            file,
            terms,
            format,
        } => {
            let text = match (file, terms) {
                (Some(path), _) => std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                (None, Some(t)) => t,
                (None, None) => unreachable!("clap requires one source"),
            };
            let tv = invert_iterate(&parse_terms(&text)?, times)?;
            write_sequence(&tv, format, out)
        }
        Command::Poly { k, m, format } => {
            reject_format("poly", format, &[Plain, Json])?;
            let spec = SequenceSpec::new(k, m)?;
            let p = metallic_charpoly(spec);
            let q = q_poly(spec);
            let (at_m, at_m1) = endpoint_values(spec);
            let squarefree = p.is_squarefree();
            if format == Json {
                let v = json!({
                    "k": k,
                    "m": m,
                    "p": p.to_json(),
                    "p_text": p.to_string(),
                    "q": q.to_json(),
                    "q_text": q.to_string(),
                    "endpoint_values": [at_m.to_string(), at_m1.to_string()],
                    "sign_changes": p.sign_changes(),
                    "squarefree": squarefree,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "p(x) = {p}")?;
                writeln!(out, "q(x) = {q}")?;
                writeln!(out, "p({m}) = {at_m}")?;
                writeln!(out, "p({}) = {at_m1}", m + 1)?;
                writeln!(out, "squarefree = {squarefree}")?;
            }
            Ok(())
        }
        Command::Mean {
            k,
            m,
            digits,
            format,
        } => {
            reject_format("mean", format, &[Plain, Json])?;
            if digits == 0 {
                return Err(Failure::Usage("--digits must be at least 1".into()));
            }
            let spec = SequenceSpec::new(k, m)?;
            let mut enc = dominant_root(spec, 8)?;
            let value = enc.certified_digits(digits)?;
            if format == Json {
                let places = value.split('.').nth(1).map_or(0, str::len) + 2;
                let v = json!({
                    "k": k,
                    "m": m,
                    "digits": digits,
                    "value": value,
                    "lo": enc.lo_decimal(places),
                    "hi": enc.hi_decimal(places),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{value}")?;
            }
            Ok(())
        }
        Command::Roots { k, m, bits, format } => {
            reject_format("roots", format, &[Plain, Json])?;
            let report = root_report(SequenceSpec::new(k, m)?, bits)?;
            if format == Json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                )?;
            } else {
                writeln!(out, "enclosure = [{}, {}]", report.lo, report.hi)?;
                writeln!(out, "certified digits = {}", report.digits)?;
                for r in &report.roots {
                    writeln!(
                        out,
                        "{:+.15e} {:+.15e}i  |z| = {:.15e}",
                        r.re, r.im, r.modulus
                    )?;
                }
                writeln!(out, "spectral gap = {:.15e}", report.spectral_gap)?;
            }
            Ok(())
        }
        Command::Ratios {
            k,
            m,
            count,
            format,
        } => {
            reject_format("ratios", format, &[Plain, Json, Csv])?;
            let report = convergence_report(SequenceSpec::new(k, m)?, count)?;
            match format {
                Json => writeln!(out, "{}", report.to_json())?,
                Csv => write!(out, "{}", report.to_csv())?,
                _ => {
                    for p in &report.points {
                        writeln!(out, "{:>4} {:.17} {:.6e}", p.n, p.value, p.abs_error)?;
                    }
                    writeln!(out, "fitted rate = {:.6}", report.fitted_rate)?;
                    writeln!(out, "spectral gap = {:.6}", report.spectral_gap)?;
                    writeln!(out, "ratio = {:.6}", report.rate_ratio)?;
                }
            }
            Ok(())
        }
        Command::Tilings {
            length,
            k,
            m,
            enumerate,
            cap,
            format,
        } => {
            reject_format("tilings", format, &[Plain, Json])?;
            let problem = TilingProblem::new(length, k, m)?;
            let count = count_tilings_dp(problem);
            let listing = if enumerate {
                Some(enumerate_tilings(problem, cap)?)
            } else {
                None
            };
            if format == Json {
                let mut v = json!({ "length": length, "k": k, "m": m, "count": count.to_string() });
                if let Some(list) = &listing {
                    v["tilings"] = list.iter().map(|t| t.to_json()).collect();
                }
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{count}")?;
                for t in listing.iter().flatten() {
                    writeln!(out, "{t}")?;
                }
            }
            Ok(())
        }
        Command::Verify { kmax, mmax } => {
            if kmax < 2 || mmax < 1 {
                return Err(Failure::Usage("need --kmax >= 2 and --mmax >= 1".into()));
            }
            let report = verify_grid(kmax, mmax)?;
            for o in &report.outcomes {
                writeln!(out, "{o}")?;
            }
            let failed = report.failures().count();
            writeln!(out, "{} checks, {} failed", report.outcomes.len(), failed)?;
            if failed > 0 {
                return Err(Failure::Numeric(format!(
                    "{failed} verification checks failed"
                )));
            }
            Ok(())
        }
    }
}
