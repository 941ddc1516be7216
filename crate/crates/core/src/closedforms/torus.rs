use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::ClosedFormError;
use crate::exactalg::{one_minus_q_pow, q_binomial, q_factorial, to_zsq, AZPoly, BpsSequence, HalfLaurent};

fn check(n: u32, m: u32) -> Result<(), ClosedFormError> {
    if n == 0 || m == 0 {
        return Err(ClosedFormError::InvalidTorus { n, m });
    }
    if n.gcd(&m) != 1 {
        return Err(ClosedFormError::NotCoprime { n, m });
    }
    Ok(())
}

/// `R~` of the `(n, m)` torus knot:
/// `q^{-(n-1)(m-1)/2} [m+n choose n]_q / [m+n choose 1]_q` in the `z^2` basis.
pub fn torus_rtilde(n: u32, m: u32) -> Result<BpsSequence, ClosedFormError> {
    check(n, m)?;
    let delta = ((n - 1) * (m - 1) / 2) as i64;
    let top = q_binomial(m + n, n)?;
    let bottom = q_binomial(m + n, 1)?;
    let quotient = top.exact_div(&bottom)?;
    Ok(to_zsq(&quotient.shift(-2 * delta))?)
}

/// HOMFLY-PT polynomial of the `(n, m)` torus knot by Jones' formula, as a
/// polynomial in `a` and `s = q^{1/2}`.
///
/// The sum over `j` carries denominators `[j]_q! [n-1-j]_q!`; multiplying
/// through by `[n-1]_q!` turns them into Gaussian binomials, so the whole
/// numerator is a polynomial and the single division by
/// `[n-1]_q! (1 - q^n)(1 - a^2)` at the end must be exact.
pub fn torus_homfly(n: u32, m: u32) -> Result<AZPoly, ClosedFormError> {
    check(n, m)?;
    let mu = ((n - 1) * (m - 1)) as i64;
    let (n_i, m_i) = (n as i64, m as i64);
    let a2 = AZPoly::a_monomial(2, HalfLaurent::one());
    let mut sum = AZPoly::zero();
    for j in 0..n_i {
        let q_exp = j * m_i + (n_i - j - 1) * (n_i - j) / 2;
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let coeff = q_binomial(n - 1, j as u32)?.shift(2 * q_exp).scale(&sign);
        let mut term = AZPoly::from_half(coeff);
        for i in -(n_i - 1 - j)..=j {
            let factor = &AZPoly::from_half(HalfLaurent::q_monomial(1, i)) - &a2;
            term = &term * &factor;
        }
        sum = &sum + &term;
    }
    // (1 - q) (a / s)^mu
    let prefactor = AZPoly::a_monomial(mu, one_minus_q_pow(1).shift(-mu));
    let numerator = &prefactor * &sum;
    let denominator = &AZPoly::from_half(&q_factorial(n - 1) * &one_minus_q_pow(n_i)) * &(&AZPoly::one() - &a2);
    Ok(numerator.exact_div(&denominator)?)
}
