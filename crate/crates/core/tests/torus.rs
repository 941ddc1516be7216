mod common;

use bps_core::braidcore::BraidWord;
use bps_core::closedforms::{torus_homfly, torus_rtilde};
use bps_core::concavity::conjecture_report;
use bps_core::exactalg::{q_binomial, ZLaurent};
use bps_core::rulingdp::{bps_from_braid, ruling_poly};
use nalgebra::DMatrix;
use num_integer::Integer;
use num_traits::ToPrimitive;

fn coprime_pairs(max_delta: u32, max_n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for m in n + 1.. {
            if (n - 1) * (m - 1) / 2 > max_delta {
                break;
            }
            if n.gcd(&m) == 1 {
                out.push((n, m));
            }
        }
    }
    out
}

#[test]
fn closed_form_matches_rulings() {
    for (n, m) in coprime_pairs(40, 5) {
        let w = BraidWord::torus(n as usize, m as usize).unwrap();
        assert_eq!(torus_rtilde(n, m).unwrap(), bps_from_braid(&w).unwrap(), "T({n},{m})");
    }
}

#[test]
fn homfly_lowest_a_coefficient_is_z_times_r() {
    for (n, m) in [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (3, 7), (4, 5)] {
        let p = torus_homfly(n, m).unwrap();
        let mu = ((n - 1) * (m - 1)) as i64;
        assert_eq!(p.lowest_a_degree(), Some(mu), "T({n},{m})");
        let z = p.z_coefficients().unwrap();
        let w = BraidWord::torus(n as usize, m as usize).unwrap();
        let zr = &ZLaurent::monomial(1, 1) * &ruling_poly(&w).unwrap();
        assert_eq!(z[&mu], zr, "T({n},{m})");
    }
}

#[test]
fn homfly_is_symmetric_in_parameters() {
    for (n, m) in [(2, 3), (2, 5), (3, 4)] {
        assert_eq!(torus_homfly(n, m).unwrap(), torus_homfly(m, n).unwrap());
    }
}

/// Roots of `sum c_i w^i` via companion-matrix eigenvalues.
fn roots(c: &[f64]) -> Vec<(f64, f64)> {
    let d = c.len() - 1;
    let lead = c[d];
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i] / lead;
    }
    m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect()
}

#[test]
fn roots_in_z_squared_lie_in_minus_four_to_zero() {
    // each factor 1 - q^k has roots on the unit circle, and
    // w = xi - 2 + 1/xi lies in [-4, 0] for |xi| = 1
    for (n, m) in coprime_pairs(12, 5) {
        let s = torus_rtilde(n, m).unwrap();
        if s.delta() == 0 {
            continue;
        }
        let c: Vec<f64> = s.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
        for (re, im) in roots(&c) {
            assert!(im.abs() < 1e-5, "T({n},{m}) root {re}+{im}i");
            assert!((-4.0 - 1e-6..=1e-6).contains(&re), "T({n},{m}) root {re}");
        }
    }
}

#[test]
fn q_binomial_symmetry_and_pascal() {
    for a in 0..14u32 {
        for b in 0..=a {
            let x = q_binomial(a, b).unwrap();
            assert_eq!(x, q_binomial(a, a - b).unwrap());
            // palindromic, and evaluates to the ordinary binomial at q = 1
            let top = x.degree().unwrap();
            assert_eq!(x.invert_variable().shift(top), x);
            let at_one: num_bigint::BigInt = x.terms().map(|(_, c)| c.clone()).sum();
            assert_eq!(at_one, common::pascal(a as i64, b as i64));
        }
    }
}

#[test]
fn torus_sequences_are_log_concave() {
    for (n, m) in coprime_pairs(60, 12) {
        let r = conjecture_report(&torus_rtilde(n, m).unwrap());
        assert!(r.conjecture_holds(), "T({n},{m})");
    }
}
