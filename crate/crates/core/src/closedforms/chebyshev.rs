use std::f64::consts::PI;

use super::antidiagonal_binoms;
use crate::exactalg::BpsSequence;

/// `p_delta(w) = sum_h C(delta+h, 2h) w^h`, the `A_{2 delta - 1}` sequence.
pub fn chebyshev_p(delta: usize) -> BpsSequence {
    // C(delta+h, 2h) = C(delta+h, delta-h)
    let d = delta as i64;
    BpsSequence::new(antidiagonal_binoms(d, d, delta + 1))
}

/// The constants `c_j = 4 sin^2((2j+1) pi / (2(2 delta + 1)))`,
/// `j = 0..delta`, with `p_delta(w) = prod_j (w + c_j)`. All lie in `(0, 4)`.
pub fn a_odd_factor_roots(delta: usize) -> Vec<f64> {
    let denom = 2.0 * (2 * delta + 1) as f64;
    (0..delta)
        .map(|j| {
            let s = ((2 * j + 1) as f64 * PI / denom).sin();
            4.0 * s * s
        })
        .collect()
}

/// Coefficients, lowest degree first, of `prod_j (w + c_j)`.
pub fn monic_product_coeffs(constants: &[f64]) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for &c in constants {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, &a) in coeffs.iter().enumerate() {
            next[i] += a * c;
            next[i + 1] += a;
        }
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_one() {
        let r = a_odd_factor_roots(1);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 1.0).abs() < 1e-12);
        assert_eq!(chebyshev_p(1), BpsSequence::from_i64s(&[1, 1]));
        assert_eq!(chebyshev_p(0), BpsSequence::from_i64s(&[1]));
    }

    #[test]
    fn delta_two_reconstructs() {
        assert_eq!(chebyshev_p(2), BpsSequence::from_i64s(&[1, 3, 1]));
        let c = monic_product_coeffs(&a_odd_factor_roots(2));
        for (got, want) in c.iter().zip([1.0, 3.0, 1.0]) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn constants_in_open_interval() {
        for d in 1..40 {
            assert!(a_odd_factor_roots(d).iter().all(|&c| c > 0.0 && c < 4.0));
        }
    }
}
