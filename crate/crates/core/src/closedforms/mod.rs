//! Closed forms: torus knots through Jones' formula and Gaussian binomials,
//! ADE singularities through binomial formulas and Dynkin-diagram
//! independence polynomials, and the polynomial identities behind the
//! type-D log-concavity argument.

mod ade;
mod chebyshev;
mod dtype;
mod graph;
mod torus;

pub use ade::{ade_bps, ade_braid, ade_graph, two_strand_rtilde, AdeFamily, AdeLabel};
pub use chebyshev::{a_odd_factor_roots, chebyshev_p, monic_product_coeffs};
pub use dtype::{d_poly_f, d_poly_f_defect, mk_dn, mk_dn_factorial};
pub use graph::{independence_poly, DynkinGraph};
pub use torus::{torus_homfly, torus_rtilde};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::AlgebraError;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("torus parameters ({n}, {m}) are not coprime")]
    NotCoprime { n: u32, m: u32 },
    #[error("torus parameters must be positive (got ({n}, {m}))")]
    InvalidTorus { n: u32, m: u32 },
    #[error("invalid ADE label {0:?}")]
    InvalidLabel(String),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut c = BigInt::one();
    for i in 0..b {
        c = c * (a - i) / (i + 1);
    }
    c
}

/// `C(a0 + h, b0 - h)` for `h = 0..len`, stepping along the anti-diagonal
/// with the ratio `C(a+1, b-1) / C(a, b) = (a+1) b / ((a-b+1)(a-b+2))`.
pub(crate) fn antidiagonal_binoms(a0: i64, b0: i64, len: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for h in 0..len as i64 {
        let (a, b) = (a0 + h, b0 - h);
        let next = match out.last() {
            Some(prev) if !prev.is_zero() && b >= 0 && b <= a => {
                let (pa, pb) = (a - 1, b + 1);
                prev * (pa + 1) * pb / ((pa - pb + 1) * (pa - pb + 2))
            }
            _ => binom(a, b),
        };
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_convention() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn antidiagonal_matches_direct() {
        for a0 in -3..8 {
            for b0 in -2..10 {
                let got = antidiagonal_binoms(a0, b0, 12);
                let want: Vec<_> = (0..12).map(|h| binom(a0 + h, b0 - h)).collect();
                assert_eq!(got, want, "a0={a0} b0={b0}");
            }
        }
    }
}
