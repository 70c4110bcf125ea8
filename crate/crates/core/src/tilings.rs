//! Tilings of a `1 x L` board by pieces of length `1..=k`, where length-1
//! pieces come in `m` colors.
//!
//! Board length `L` corresponds to sequence index `n = L + 1`: the number of
//! tilings of a `1 x L` board is `g(L + 1)`, and the empty board (one empty
//! tiling) matches `g(1) = 1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sequences::{recurrence_terms, SequenceSpec};

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingProblem {
    pub length: usize,
    pub k: usize,
    pub m: u32,
}

impl TilingProblem {
    pub fn new(length: usize, k: usize, m: u32) -> Result<Self> {
        if k < 2 || m < 1 {
            return Err(Error::InvalidSpec { k, m: m as u64 });
        }
        Ok(Self { length, k, m })
    }
}

/// A piece of the given size; `color` is `Some(1..=m)` exactly when size is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Piece {
    pub size: usize,
    pub color: Option<u32>,
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color {
            Some(c) => write!(f, "{}(c{c})", self.size),
            None => write!(f, "{}", self.size),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling(pub Vec<Piece>);

impl Tiling {
    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.size).collect()
    }

    pub fn length(&self) -> usize {
        self.0.iter().map(|p| p.size).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.0
            .iter()
            .map(|p| match p.color {
                Some(c) => serde_json::json!({ "size": p.size, "color": c }),
                None => serde_json::json!({ "size": p.size }),
            })
            .collect()
    }
}

/// Comma-separated pieces, e.g. `2,1(c1)`; the empty tiling renders as `""`.
impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `c(0) = 1`, `c(L) = m c(L-1) + sum_{s=2}^{min(k,L)} c(L-s)`.
pub fn count_tilings_dp(p: TilingProblem) -> BigUint {
    let m = BigUint::from(p.m);
    let mut c: Vec<BigUint> = Vec::with_capacity(p.length + 1);
    c.push(BigUint::one());
    for len in 1..=p.length {
        let mut v = &m * &c[len - 1];
        for s in 2..=p.k.min(len) {
            v += &c[len - s];
        }
        c.push(v);
    }
    c.pop().unwrap()
}

/// Counts by trying every first piece; exponential, used as an oracle.
pub fn count_tilings_brute(p: TilingProblem) -> u64 {
    fn go(rest: usize, k: usize, m: u64) -> u64 {
        if rest == 0 {
            return 1;
        }
        (1..=k.min(rest))
            .map(|s| {
                if s == 1 {
                    m * go(rest - 1, k, m)
                } else {
                    go(rest - s, k, m)
                }
            })
            .sum()
    }
    go(p.length, p.k, p.m as u64)
}

/// All tilings in canonical order: size sequences in descending
/// lexicographic order (so `[2]` precedes `[1, 1]`), and for equal size
/// sequences colors ascending left to right. Fails without partial output if the count
/// exceeds `cap`.
pub fn enumerate_tilings(p: TilingProblem, cap: usize) -> Result<Vec<Tiling>> {
    let count = count_tilings_dp(p);
    if count.to_usize().is_none_or(|c| c > cap) {
        return Err(Error::EnumerationCap {
            count: count.to_string(),
            cap,
        });
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap());
    let mut current = Vec::new();
    fill(p, p.length, &mut current, &mut out);
    // fill() emits colors ascending within each size sequence; the stable
    // sort keeps that order.
    out.sort_by_key(|t| std::cmp::Reverse(t.sizes()));
    Ok(out)
}

fn fill(p: TilingProblem, rest: usize, current: &mut Vec<Piece>, out: &mut Vec<Tiling>) {
    if rest == 0 {
        out.push(Tiling(current.clone()));
        return;
    }
    for size in (2..=p.k.min(rest)).rev() {
        current.push(Piece { size, color: None });
        fill(p, rest - size, current, out);
        current.pop();
    }
    for color in 1..=p.m {
        current.push(Piece {
            size: 1,
            color: Some(color),
        });
        fill(p, rest - 1, current, out);
        current.pop();
    }
}

/// Checks `count_tilings_dp(L, k, m) = g(L + 1)` for `0 <= L <= max_len`,
/// reporting the first mismatch.
pub fn oracle_agreement(spec: SequenceSpec, max_len: usize) -> Result<()> {
    let terms = recurrence_terms(spec, max_len + 2)?;
    let m = u32::try_from(spec.m()).map_err(|_| Error::InvalidSpec {
        k: spec.k(),
        m: spec.m(),
    })?;
    for length in 0..=max_len {
        let dp = count_tilings_dp(TilingProblem::new(length, spec.k(), m)?);
        let seq = &terms.terms()[length + 1];
        if seq.to_biguint().as_ref() != Some(&dp) || dp.is_zero() {
            return Err(Error::TilingMismatch {
                length,
                dp: dp.to_string(),
                sequence: seq.to_string(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(l: usize, k: usize, m: u32) -> TilingProblem {
        TilingProblem::new(l, k, m).unwrap()
    }

    #[test]
    fn dp_examples() {
        assert_eq!(count_tilings_dp(problem(3, 3, 2)), BigUint::from(13u32));
        for k in 2..5 {
            for m in 1..4 {
                assert_eq!(count_tilings_dp(problem(0, k, m)), BigUint::one());
                assert_eq!(count_tilings_dp(problem(1, k, m)), BigUint::from(m));
            }
        }
    }

    #[test]
    fn rejects_bad_problem() {
        assert!(TilingProblem::new(3, 1, 1).is_err());
        assert!(TilingProblem::new(3, 2, 0).is_err());
    }

    #[test]
    fn thirteen_tilings_inventory() {
        let all = enumerate_tilings(problem(3, 3, 2), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(all.len(), 13);
        let with_sizes = |s: &[usize]| all.iter().filter(|t| t.sizes() == s).count();
        assert_eq!(with_sizes(&[3]), 1);
        assert_eq!(with_sizes(&[2, 1]), 2);
        assert_eq!(with_sizes(&[1, 2]), 2);
        assert_eq!(with_sizes(&[1, 1, 1]), 8);
        let rendered: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(rendered[0], "3");
        assert_eq!(rendered[1], "2,1(c1)");
        assert_eq!(rendered[2], "2,1(c2)");
        assert_eq!(rendered[3], "1(c1),2");
        assert_eq!(rendered[4], "1(c2),2");
        assert_eq!(rendered[5], "1(c1),1(c1),1(c1)");
        assert_eq!(rendered[6], "1(c1),1(c1),1(c2)");
        assert_eq!(rendered[12], "1(c2),1(c2),1(c2)");
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), 13);
        assert!(all.iter().all(|t| t.length() == 3));
    }

    #[test]
    fn small_enumerations() {
        let two = enumerate_tilings(problem(2, 2, 1), 10).unwrap();
        assert_eq!(
            two.iter().map(Tiling::sizes).collect::<Vec<_>>(),
            vec![vec![2], vec![1, 1]]
        );
        assert_eq!(enumerate_tilings(problem(4, 3, 2), 100).unwrap().len(), 33);
        let empty = enumerate_tilings(problem(0, 3, 2), 10).unwrap();
        assert_eq!(empty, vec![Tiling(vec![])]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_tilings(problem(4, 3, 2), 32).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationCap {
                count: "33".into(),
                cap: 32
            }
        );
    }

    #[test]
    fn brute_force_matches_dp() {
        for k in 2..=5 {
            for m in 1..=3 {
                for l in 0..=15 {
                    let p = problem(l, k, m);
                    assert_eq!(count_tilings_dp(p), BigUint::from(count_tilings_brute(p)));
                }
            }
        }
    }

    #[test]
    fn enumeration_length_matches_dp() {
        for k in 2..=4 {
            for m in 1..=3 {
                for l in 0..=7 {
                    let p = problem(l, k, m);
                    let n = enumerate_tilings(p, DEFAULT_ENUMERATION_CAP).unwrap().len();
                    assert_eq!(BigUint::from(n), count_tilings_dp(p));
                }
            }
        }
    }

    #[test]
    fn agreement_with_sequences() {
        let s = |k, m| SequenceSpec::new(k, m).unwrap();
        assert!(oracle_agreement(s(3, 2), 12).is_ok());
        assert_eq!(count_tilings_dp(problem(12, 3, 2)), BigUint::from(58396u32));
        assert!(oracle_agreement(s(2, 1), 10).is_ok());
        assert!(oracle_agreement(s(4, 3), 10).is_ok());
        for k in 2..=6 {
            for m in 1..=4 {
                assert!(oracle_agreement(s(k, m), 12).is_ok());
            }
        }
    }

    #[test]
    fn json_form() {
        let t = Tiling(vec![
            Piece {
                size: 2,
                color: None,
            },
            Piece {
                size: 1,
                color: Some(2),
            },
        ]);
        assert_eq!(
            t.to_json().to_string(),
            r#"[{"size":2},{"color":2,"size":1}]"#
        );
    }
}
