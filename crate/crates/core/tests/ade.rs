mod common;

use bps_core::closedforms::{
    a_odd_factor_roots, ade_bps, ade_braid, ade_graph, chebyshev_p, d_poly_f, d_poly_f_defect, independence_poly,
    mk_dn, mk_dn_factorial, monic_product_coeffs, AdeLabel,
};
use bps_core::concavity::conjecture_report;
use bps_core::rulingdp::bps_from_braid;
use bps_core::BpsSequence;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

fn labels() -> Vec<AdeLabel> {
    let mut v: Vec<_> = (1..=12).map(AdeLabel::a).collect();
    v.extend((4..=10).map(AdeLabel::d));
    v.extend((6..=8).map(AdeLabel::e));
    v
}

#[test]
fn closed_form_graph_and_braid_agree() {
    for label in labels() {
        let closed = ade_bps(label);
        let g = ade_graph(label);
        let indep = independence_poly(&g).unwrap();
        assert_eq!(
            indep,
            common::brute_force_independent_sets(g.vertices(), g.edges()),
            "{label}"
        );
        assert_eq!(BpsSequence::new(indep).reversed(), closed, "{label}");
        assert_eq!(bps_from_braid(&ade_braid(label)).unwrap(), closed, "{label}");
        assert_eq!(closed.delta(), label.delta(), "{label}");
    }
}

#[test]
fn type_a_and_d_formulas_against_pascal() {
    for n in 1..40usize {
        let d = AdeLabel::a(n).delta() as i64;
        let want: Vec<BigInt> = (0..=d)
            .map(|h| {
                if n % 2 == 1 {
                    common::pascal(d + h, d - h)
                } else {
                    common::pascal(d + h + 1, d - h)
                }
            })
            .collect();
        assert_eq!(ade_bps(AdeLabel::a(n)).coeffs(), &want[..], "A{n}");
    }
    for n in 4..40usize {
        let d = AdeLabel::d(n).delta() as i64;
        let s = if n % 2 == 1 { 2 } else { 3 };
        let want: Vec<BigInt> = (0..=d)
            .map(|h| {
                common::pascal(d + h - s, d - h)
                    + common::pascal(d + h - s, d - h - 1) * 2
                    + common::pascal(d + h - s + 1, d - h - 2)
            })
            .collect();
        assert_eq!(ade_bps(AdeLabel::d(n)).coeffs(), &want[..], "D{n}");
    }
}

#[test]
fn independence_recursion_for_d() {
    // m_k(D_n) = m_k(A_{n-1}) + m_{k-1}(A_{n-3}) + m_{k-2}(A_{n-3})
    let m = |v: &[BigInt], k: i64| -> BigInt {
        if k < 0 {
            BigInt::from(0)
        } else {
            v.get(k as usize).cloned().unwrap_or_default()
        }
    };
    for n in 4..=12usize {
        let d = independence_poly(&ade_graph(AdeLabel::d(n))).unwrap();
        let a1 = independence_poly(&ade_graph(AdeLabel::a(n - 1))).unwrap();
        let a3 = independence_poly(&ade_graph(AdeLabel::a(n - 3))).unwrap();
        for k in 0..=(n as i64) {
            assert_eq!(m(&d, k), m(&a1, k) + m(&a3, k - 1) + m(&a3, k - 2), "D{n}, k = {k}");
        }
    }
}

#[test]
fn mk_dn_counts_independent_sets() {
    for n in 4..=16usize {
        let g = ade_graph(AdeLabel::d(n));
        let brute = common::brute_force_independent_sets(n, g.edges());
        for k in 0..=n {
            let want = brute.get(k).cloned().unwrap_or_default();
            assert_eq!(mk_dn(n as i64, k as i64), want, "D{n}, k = {k}");
        }
    }
}

#[test]
fn binomial_and_factorial_forms_agree() {
    for n in 4..=60i64 {
        for k in 1..=(n - 1) / 2 {
            assert_eq!(mk_dn_factorial(n, k), Some(mk_dn(n, k)), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn defect_polynomial_identities() {
    for n in 4..=100i128 {
        for k in 0..=n {
            let f = |j| d_poly_f(n, j);
            let big_f = d_poly_f_defect(n, k);
            assert_eq!(big_f, f(k - 1) * f(k + 1) - f(k) * f(k), "n = {n}, k = {k}");
            // f is cubic in k, so central differences give its Taylor data:
            // f' = (f(k+1) - f(k-1)) / 2, f'' = f(k+1) - 2f(k) + f(k-1)
            let d1_twice = f(k + 1) - f(k - 1);
            let d2 = f(k + 1) - 2 * f(k) + f(k - 1);
            // F = f f'' - f'^2 + f''^2/4 + 2f' - 1, with f' and f'' the exact
            // derivatives; multiply through by 4
            let fp = 3 * (-k * k) + 2 * (5 * n + 1) * k - (4 * n * n + 7 * n);
            let fpp = -6 * k + 2 * (5 * n + 1);
            assert_eq!(
                4 * big_f,
                4 * f(k) * fpp - 4 * fp * fp + fpp * fpp + 8 * fp - 4,
                "n = {n}, k = {k}"
            );
            // the central differences of a cubic differ from f', f'' by the third derivative
            assert_eq!(d1_twice, 2 * fp - 2, "n = {n}, k = {k}");
            assert_eq!(d2, fpp, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn chebyshev_recurrence() {
    // p_{d+1} = (2 + w) p_d - p_{d-1}
    for d in 1..=50usize {
        let (prev, cur, next) = (chebyshev_p(d - 1), chebyshev_p(d), chebyshev_p(d + 1));
        let mut rhs = vec![BigInt::from(0); d + 2];
        for (i, c) in cur.coeffs().iter().enumerate() {
            rhs[i] += c * 2;
            rhs[i + 1] += c;
        }
        for (i, c) in prev.coeffs().iter().enumerate() {
            rhs[i] -= c;
        }
        assert_eq!(next.coeffs(), &rhs[..], "d = {d}");
        assert_eq!(cur, ade_bps(AdeLabel::a(2 * d - 1)), "d = {d}");
    }
}

#[test]
fn chebyshev_root_product() {
    for d in 1..=20usize {
        let rebuilt = monic_product_coeffs(&a_odd_factor_roots(d));
        let exact = chebyshev_p(d);
        for (i, c) in exact.coeffs().iter().enumerate() {
            let c = c.to_f64().unwrap();
            assert!(
                (rebuilt[i] - c).abs() <= 1e-9 * c.max(1.0),
                "d = {d}, i = {i}: {} vs {c}",
                rebuilt[i]
            );
        }
    }
}

#[test]
fn ade_sequences_are_log_concave() {
    for label in AdeLabel::all_up_to(300) {
        assert!(conjecture_report(&ade_bps(label)).conjecture_holds(), "{label}");
    }
}
