use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{s_laurent_to_z, AlgebraError, HalfLaurent, ZLaurent};

/// Two-variable Laurent polynomial in `a` and `s = q^{1/2}`.
///
/// Stored as a sparse map from `a`-exponent to a nonzero [`HalfLaurent`]
/// coefficient, which is the same data as a map `(a_exp, s_exp) -> coeff`
/// without zero entries.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AZPoly {
    by_a: BTreeMap<i64, HalfLaurent>,
}

impl AZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_half(HalfLaurent::one())
    }

    /// `c` as a polynomial of `a`-degree zero.
    pub fn from_half(c: HalfLaurent) -> Self {
        Self::a_monomial(0, c)
    }

    /// `c * a^a_exp`.
    pub fn a_monomial(a_exp: i64, c: HalfLaurent) -> Self {
        let mut p = Self::zero();
        p.add_coeff(a_exp, &c);
        p
    }

    fn add_coeff(&mut self, a_exp: i64, c: &HalfLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.by_a.entry(a_exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.by_a.remove(&a_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.by_a.is_empty()
    }

    pub fn lowest_a_degree(&self) -> Option<i64> {
        self.by_a.keys().next().copied()
    }

    pub fn highest_a_degree(&self) -> Option<i64> {
        self.by_a.keys().next_back().copied()
    }

    /// Coefficient of `a^a_exp`, a Laurent polynomial in `s`.
    pub fn a_coeff(&self, a_exp: i64) -> HalfLaurent {
        self.by_a.get(&a_exp).cloned().unwrap_or_default()
    }

    /// Coefficient of `a^a_exp s^s_exp`.
    pub fn coeff(&self, a_exp: i64, s_exp: i64) -> BigInt {
        self.by_a.get(&a_exp).map(|c| c.coeff(s_exp)).unwrap_or_default()
    }

    /// Nonzero `a`-coefficients in increasing `a`-degree.
    pub fn a_terms(&self) -> impl Iterator<Item = (i64, &HalfLaurent)> + '_ {
        self.by_a.iter().map(|(a, c)| (*a, c))
    }

    /// Each `a`-coefficient rewritten as a polynomial in `z = s - s^{-1}`.
    pub fn z_coefficients(&self) -> Result<BTreeMap<i64, ZLaurent>, AlgebraError> {
        self.by_a.iter().map(|(a, c)| Ok((*a, s_laurent_to_z(c)?))).collect()
    }

    /// Exact quotient, peeling the lowest `a`-degree term of the remainder
    /// against the lowest `a`-degree term of the divisor.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (&d_low, d_low_coeff) = divisor.by_a.iter().next().ok_or(AlgebraError::DivisionByZero)?;
        let d_high = divisor.highest_a_degree().unwrap_or(d_low);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let Some(p_high) = self.highest_a_degree() else {
            return Ok(quot);
        };
        let ceiling = p_high - d_high;
        while let Some((&low, low_coeff)) = rem.by_a.iter().next() {
            let exp = low - d_low;
            if exp > ceiling {
                break;
            }
            let c = match low_coeff.exact_div(d_low_coeff) {
                Ok(c) => c,
                Err(AlgebraError::DivisionInexact { .. }) => break,
                Err(e) => return Err(e),
            };
            let step = Self::a_monomial(exp, c);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(AlgebraError::AzDivisionInexact {
                remainder: Box::new(rem),
            })
        }
    }
}

impl fmt::Display for AZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.by_a.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .by_a
            .iter()
            .map(|(a, c)| match a {
                0 => format!("({c})"),
                1 => format!("({c})a"),
                _ => format!("({c})a^{a}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AZPoly({self})")
    }
}

impl Add for &AZPoly {
    type Output = AZPoly;
    fn add(self, rhs: &AZPoly) -> AZPoly {
        let mut out = self.clone();
        for (a, c) in &rhs.by_a {
            out.add_coeff(*a, c);
        }
        out
    }
}

impl Sub for &AZPoly {
    type Output = AZPoly;
    fn sub(self, rhs: &AZPoly) -> AZPoly {
        self + &(-rhs)
    }
}

impl Neg for &AZPoly {
    type Output = AZPoly;
    fn neg(self) -> AZPoly {
        AZPoly {
            by_a: self.by_a.iter().map(|(a, c)| (*a, -c)).collect(),
        }
    }
}

impl Mul for &AZPoly {
    type Output = AZPoly;
    fn mul(self, rhs: &AZPoly) -> AZPoly {
        let mut out = AZPoly::zero();
        for (ea, ca) in &self.by_a {
            for (eb, cb) in &rhs.by_a {
                out.add_coeff(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus_a2() -> AZPoly {
        &AZPoly::one() - &AZPoly::a_monomial(2, HalfLaurent::one())
    }

    #[test]
    fn division_by_one_minus_a_squared() {
        let c = HalfLaurent::from_terms([(-2, 3), (4, -1)]);
        let p = &AZPoly::a_monomial(1, c.clone()) + &AZPoly::a_monomial(5, HalfLaurent::one());
        let prod = &p * &one_minus_a2();
        assert_eq!(prod.exact_div(&one_minus_a2()).unwrap(), p);
        assert_eq!(prod.coeff(1, -2), BigInt::from(3));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let p = &AZPoly::one() + &AZPoly::a_monomial(1, HalfLaurent::one());
        assert!(matches!(
            p.exact_div(&one_minus_a2()),
            Err(AlgebraError::AzDivisionInexact { .. })
        ));
    }
}
