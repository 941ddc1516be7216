//! Polynomials from the type-D log-concavity argument.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::binom;

/// `f(n, k) = n(n-2k+1)(n-2k+2) + k(k-1)(n-k)`.
pub fn d_poly_f(n: i128, k: i128) -> i128 {
    n * (n - 2 * k + 1) * (n - 2 * k + 2) + k * (k - 1) * (n - k)
}

/// `F(n, k) = f(n, k-1) f(n, k+1) - f(n, k)^2` in expanded form:
/// `-3k^4 + (20n+4)k^3 - (50n^2+20n-1)k^2 + (34n^3+60n^2-8n-2)k
///  - 6n^4 - 24n^3 - 6n^2`.
pub fn d_poly_f_defect(n: i128, k: i128) -> i128 {
    let (n2, n3, n4) = (n * n, n * n * n, n * n * n * n);
    let (k2, k3, k4) = (k * k, k * k * k, k * k * k * k);
    -3 * k4 + (20 * n + 4) * k3 - (50 * n2 + 20 * n - 1) * k2 + (34 * n3 + 60 * n2 - 8 * n - 2) * k
        - 6 * n4
        - 24 * n3
        - 6 * n2
}

/// Number of independent `k`-sets in `D_n`:
/// `C(n-k, k) + C(n-k-1, k-1) + C(n-k, k-2)`, zero-extended.
pub fn mk_dn(n: i64, k: i64) -> BigInt {
    binom(n - k, k) + binom(n - k - 1, k - 1) + binom(n - k, k - 2)
}

fn factorial(n: i64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// The simplified form `(n-k-1)! / (k! (n-2k+2)!) * f(n, k)`.
///
/// `None` outside the range where all three factorials exist, or if the
/// quotient is not an integer.
pub fn mk_dn_factorial(n: i64, k: i64) -> Option<BigInt> {
    if k < 0 || n - k - 1 < 0 || n - 2 * k + 2 < 0 {
        return None;
    }
    let num = factorial(n - k - 1) * BigInt::from(d_poly_f(n as i128, k as i128));
    let den = factorial(k) * factorial(n - 2 * k + 2);
    let (q, r) = num.div_rem(&den);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        for n in 0..20 {
            assert_eq!(d_poly_f(n, 0), n * (n + 1) * (n + 2));
        }
        assert_eq!(d_poly_f(4, 2), 12);
        assert_eq!(d_poly_f(10, 3), 342);
    }

    #[test]
    fn f_defect_examples() {
        assert_eq!(
            d_poly_f_defect(10, 3),
            d_poly_f(10, 2) * d_poly_f(10, 4) - d_poly_f(10, 3).pow(2)
        );
        assert_eq!(d_poly_f_defect(4, 0), -3168);
    }

    #[test]
    fn mk_dn_examples() {
        assert_eq!(mk_dn(4, 2), BigInt::from(3));
        assert_eq!(mk_dn(9, 0), BigInt::from(1));
        assert_eq!(mk_dn(8, 3), BigInt::from(21));
        assert_eq!(mk_dn_factorial(4, 2), Some(BigInt::from(3)));
        assert_eq!(mk_dn_factorial(4, 4), None);
    }
}
