//! Log-concavity, no-internal-zeros and unimodality of integer sequences,
//! plus the convolution under which the first two are preserved.
//!
//! Sequences of length at most two, and all-zero sequences, satisfy every
//! predicate vacuously. Leading and trailing zeros never count as internal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactalg::BpsSequence;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("entry {index} is negative")]
    NegativeEntry { index: usize },
}

fn check_nonnegative(a: &[BigInt]) -> Result<(), SequenceError> {
    match a.iter().position(Signed::is_negative) {
        Some(index) => Err(SequenceError::NegativeEntry { index }),
        None => Ok(()),
    }
}

fn first_log_concavity_failure(a: &[BigInt]) -> Option<usize> {
    (1..a.len().saturating_sub(1)).find(|&j| &a[j] * &a[j] < &a[j - 1] * &a[j + 1])
}

fn first_internal_zero(a: &[BigInt]) -> Option<usize> {
    let first = a.iter().position(|x| !x.is_zero())?;
    let last = a.iter().rposition(|x| !x.is_zero())?;
    (first..last).find(|&j| a[j].is_zero())
}

/// Index of the first rise after a strict descent.
fn first_unimodality_failure(a: &[BigInt]) -> Option<usize> {
    let mut descending = false;
    for j in 1..a.len() {
        if a[j] < a[j - 1] {
            descending = true;
        } else if descending && a[j] > a[j - 1] {
            return Some(j);
        }
    }
    None
}

/// `a_j^2 >= a_{j-1} a_{j+1}` for every interior `j`.
pub fn is_log_concave(a: &[BigInt]) -> Result<bool, SequenceError> {
    check_nonnegative(a)?;
    Ok(first_log_concavity_failure(a).is_none())
}

/// No zero strictly between two nonzero entries.
pub fn no_internal_zeros(a: &[BigInt]) -> Result<bool, SequenceError> {
    check_nonnegative(a)?;
    Ok(first_internal_zero(a).is_none())
}

/// Weakly increasing up to some index, weakly decreasing after it.
pub fn is_unimodal(a: &[BigInt]) -> Result<bool, SequenceError> {
    check_nonnegative(a)?;
    Ok(first_unimodality_failure(a).is_none())
}

/// Coefficients of the product of two polynomials.
pub fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    NegativeEntry,
    InternalZero,
    LogConcavity,
    Unimodality,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NegativeEntry => "negative_entry",
            Self::InternalZero => "internal_zero",
            Self::LogConcavity => "log_concavity",
            Self::Unimodality => "unimodality",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub index: usize,
}

/// The three predicates for one sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConjectureReport {
    pub log_concave: bool,
    pub no_internal_zeros: bool,
    pub unimodal: bool,
    /// Lowest-index failure across all predicates; ties go to the kind
    /// listed first in [`ViolationKind`].
    pub first_violation: Option<Violation>,
}

impl ConjectureReport {
    pub fn all_pass(&self) -> bool {
        self.log_concave && self.no_internal_zeros && self.unimodal
    }

    /// Log-concave with no internal zeros, the property conjectured for BPS
    /// sequences. Implies unimodality.
    pub fn conjecture_holds(&self) -> bool {
        self.log_concave && self.no_internal_zeros
    }

    /// `log_concave && no_internal_zeros => unimodal`.
    pub fn implication_holds(&self) -> bool {
        !self.conjecture_holds() || self.unimodal
    }
}

/// Evaluates all predicates. Total: a sequence with a negative entry gets
/// every predicate false and a [`ViolationKind::NegativeEntry`] violation.
pub fn conjecture_report(a: &BpsSequence) -> ConjectureReport {
    let a = a.coeffs();
    if let Some(index) = a.iter().position(Signed::is_negative) {
        return ConjectureReport {
            log_concave: false,
            no_internal_zeros: false,
            unimodal: false,
            first_violation: Some(Violation {
                kind: ViolationKind::NegativeEntry,
                index,
            }),
        };
    }
    let zero = first_internal_zero(a);
    let lc = first_log_concavity_failure(a);
    let uni = first_unimodality_failure(a);
    let first_violation = [
        (ViolationKind::InternalZero, zero),
        (ViolationKind::LogConcavity, lc),
        (ViolationKind::Unimodality, uni),
    ]
    .into_iter()
    .filter_map(|(kind, idx)| idx.map(|index| Violation { kind, index }))
    .min_by_key(|v| v.index);
    ConjectureReport {
        log_concave: lc.is_none(),
        no_internal_zeros: zero.is_none(),
        unimodal: uni.is_none(),
        first_violation,
    }
}
