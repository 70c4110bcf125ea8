//! Generalized metallic means of arbitrary degree.
//!
//! The `m`th metallic mean of degree `k` is the limiting ratio of consecutive
//! terms of the sequence with generating function
//! `x / (1 - m*x - x^2 - ... - x^k)`, obtained from the k-th order Fibonacci
//! sequence by `m - 1` applications of the INVERT transform. It is the unique
//! positive root of `x^k - m*x^(k-1) - x^(k-2) - ... - x - 1` and lies in
//! `(m, m + 1)`.
//!
//! Everything that decides a sign or a term is exact ([`num_bigint::BigInt`],
//! [`num_rational::BigRational`]). Floating point appears only in diagnostics
//! (complex roots, Binet fits, convergence rates).

pub mod analysis;
pub mod error;
pub mod invert;
pub mod poly;
pub mod precise;
pub mod roots;
pub mod sequences;
pub mod tilings;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, RationalValue};
pub use roots::{ComplexRootSet, RealRootEnclosure};
pub use sequences::{SequenceSpec, TermVector};
