//! Exact sparse polynomial arithmetic in `q^{1/2}`, `z` and `(a, q^{1/2})`.
//!
//! Half-integer powers of `q` are handled by a single integer-exponent
//! variable `s` with `s^2 = q`, so `z = s - s^{-1}` and `z^2 = q - 2 + q^{-1}`
//! live in the same ring as everything else. No floating point is used.

mod azpoly;
mod laurent;
mod sequence;

pub use azpoly::AZPoly;
pub use laurent::{HalfLaurent, Laurent, QHalf, Variable, ZLaurent, ZVar};
pub use sequence::BpsSequence;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("polynomial is not invariant under q -> 1/q")]
    NotPalindromic,
    #[error("odd power s^{exponent} of s = q^(1/2) where only integer powers of q are allowed")]
    FractionalPower { exponent: i64 },
    #[error("polynomial is not invariant under s -> -1/s, so it is not a polynomial in z = s - 1/s")]
    NotZExpressible,
    #[error("division is not exact; remainder {remainder}")]
    DivisionInexact { remainder: Box<HalfLaurent> },
    #[error("division is not exact; remainder {remainder}")]
    AzDivisionInexact { remainder: Box<AZPoly> },
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Binomial coefficients `C(n, 0), ..., C(n, n)`.
fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

/// Writes a palindromic Laurent polynomial in integer powers of `q` as
/// `sum_h c_h (q - 2 + q^{-1})^h`, i.e. as a polynomial in `z^2`.
///
/// Peels the current top `q`-degree `d` against `(z^2)^d` until nothing is
/// left; palindromicity guarantees the bottom term cancels with the top.
pub fn to_zsq(l: &HalfLaurent) -> Result<BpsSequence, AlgebraError> {
    if let Some((e, _)) = l.terms().find(|(e, _)| e % 2 != 0) {
        return Err(AlgebraError::FractionalPower { exponent: e });
    }
    if l.invert_variable() != *l {
        return Err(AlgebraError::NotPalindromic);
    }
    let Some(top) = l.degree() else {
        return Ok(BpsSequence::new(vec![BigInt::zero()]));
    };
    let d = (top / 2) as usize;
    // dense[i] is the coefficient of q^{i - d}
    let mut dense = vec![BigInt::zero(); 2 * d + 1];
    for (e, c) in l.terms() {
        dense[(e / 2 + d as i64) as usize] = c.clone();
    }
    let mut out = vec![BigInt::zero(); d + 1];
    for h in (1..=d).rev() {
        let lead = std::mem::take(&mut dense[d + h]);
        if lead.is_zero() {
            continue;
        }
        // (q - 2 + q^{-1})^h = sum_i (-1)^i C(2h, i) q^{h - i}
        for (i, b) in binomial_row(2 * h as u64).into_iter().enumerate().skip(1) {
            let term = &lead * b;
            let slot = &mut dense[d + h - i];
            if i % 2 == 0 {
                *slot -= term;
            } else {
                *slot += term;
            }
        }
        out[h] = lead;
    }
    out[0] = std::mem::take(&mut dense[d]);
    debug_assert!(dense.iter().all(Zero::is_zero));
    Ok(BpsSequence::new(out))
}

/// Expands `sum_h c_h (q - 2 + q^{-1})^h` into a Laurent polynomial in `q`.
pub fn from_zsq(c: &BpsSequence) -> HalfLaurent {
    let mut out = HalfLaurent::zero();
    for (h, ch) in c.coeffs().iter().enumerate() {
        if ch.is_zero() {
            continue;
        }
        for (i, b) in binomial_row(2 * h as u64).into_iter().enumerate() {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            out.add_term(2 * (h as i64 - i as i64), ch * b * sign);
        }
    }
    out
}

/// Rewrites a Laurent polynomial in `s` as a polynomial in `z = s - s^{-1}`.
///
/// Requires `c(s) = c(-s^{-1})`, the symmetry that characterises the image
/// of `Z[z]`. Peels the top `s`-term against `(s - s^{-1})^m`.
pub fn s_laurent_to_z(c: &HalfLaurent) -> Result<ZLaurent, AlgebraError> {
    let mirrored = HalfLaurent::from_terms(c.terms().map(|(e, v)| (-e, if e % 2 == 0 { v.clone() } else { -v })));
    if mirrored != *c {
        return Err(AlgebraError::NotZExpressible);
    }
    let z_in_s = HalfLaurent::from_terms([(1, 1), (-1, -1)]);
    let mut rem = c.clone();
    let mut out = ZLaurent::zero();
    while let Some((m, lead)) = rem.leading_term() {
        if m < 0 {
            return Err(AlgebraError::NotZExpressible);
        }
        let lead = lead.clone();
        rem = &rem - &z_in_s.pow(m as u32).scale(&lead);
        out.add_term(m, lead);
    }
    Ok(out)
}

/// `[r]_q! = (1 - q)(1 - q^2)...(1 - q^r)`, with `[0]_q! = 1`.
pub fn q_factorial(r: u32) -> HalfLaurent {
    (1..=r as i64).fold(HalfLaurent::one(), |acc, i| &acc * &one_minus_q_pow(i))
}

/// `1 - q^k`.
pub fn one_minus_q_pow(k: i64) -> HalfLaurent {
    HalfLaurent::from_terms([(0, 1), (2 * k, -1)])
}

/// Gaussian binomial `[a choose b]_q = [a]_q! / ([b]_q! [a-b]_q!)`.
///
/// Built as `prod_{i=1}^{b'} (1 - q^{a-b'+i}) / (1 - q^i)` with
/// `b' = min(b, a-b)`, dividing after every factor so each intermediate is
/// itself a Gaussian binomial and stays small. Zero when `b > a`.
pub fn q_binomial(a: u32, b: u32) -> Result<HalfLaurent, AlgebraError> {
    if b > a {
        return Ok(HalfLaurent::zero());
    }
    let b = b.min(a - b) as i64;
    let a = a as i64;
    let mut acc = HalfLaurent::one();
    for i in 1..=b {
        acc = (&acc * &one_minus_q_pow(a - b + i)).exact_div(&one_minus_q_pow(i))?;
    }
    Ok(acc)
}
