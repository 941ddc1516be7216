use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ZLaurent;

/// Coefficients `(a_0, ..., a_delta)` of a polynomial in `z^2`; entry `h`
/// multiplies `z^{2h}`.
///
/// Always holds at least one entry. Sequences produced from rainbow closures
/// are nonnegative, but the type does not enforce it: `to_zsq` may legitimately
/// produce negative entries for arbitrary palindromic input.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BpsSequence(Vec<BigInt>);

impl BpsSequence {
    /// Wraps `coeffs`; an empty vector becomes the zero sequence `(0)`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            Self(vec![BigInt::zero()])
        } else {
            Self(coeffs)
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Top index, i.e. `delta` when the trailing coefficient is nonzero.
    pub fn delta(&self) -> usize {
        self.0.len() - 1
    }

    /// Drops trailing zeros, keeping at least one entry.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Self(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().cloned().collect())
    }

    /// Product as polynomials in `z^2`.
    pub fn product(&self, other: &Self) -> Self {
        Self::new(crate::concavity::convolve(&self.0, &other.0))
    }

    /// `sum_h a_h z^{2h}` as a Laurent polynomial in `z`.
    pub fn to_z_laurent(&self) -> ZLaurent {
        ZLaurent::from_terms(self.0.iter().enumerate().map(|(h, c)| (2 * h as i64, c.clone())))
    }

    /// Comma-joined decimal coefficients, as used by the cache format.
    pub fn to_csv(&self) -> String {
        self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }

    /// Polynomial rendering such as `4 + 20z^2 + 33z^4`.
    pub fn to_poly_string(&self) -> String {
        let p = self.to_z_laurent();
        if p.is_zero() {
            "0".to_string()
        } else {
            p.to_string()
        }
    }
}

impl fmt::Display for BpsSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        )
    }
}

impl FromStr for BpsSequence {
    type Err = num_bigint::ParseBigIntError;

    /// Parses comma-separated decimal integers; surrounding parentheses,
    /// brackets and whitespace are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let coeffs = body
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl From<Vec<BigInt>> for BpsSequence {
    fn from(v: Vec<BigInt>) -> Self {
        Self::new(v)
    }
}

impl AsRef<[BigInt]> for BpsSequence {
    fn as_ref(&self) -> &[BigInt] {
        &self.0
    }
}
