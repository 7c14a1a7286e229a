use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use proptest::prelude::*;
use sfkit::gamma::{field_gamma, FieldGammaArg};
use sfkit::hyperbolic::{gamma2, ModularPair};
use sfkit::limits::{
    elliptic_to_hyperbolic_ratio, eta_ratio_limit, eta_ratio_modular, extrasign_powers, limit_b_to_1, limit_b_to_i,
    limit_b_to_minus_i, BetaPoint, EtaMode, DEFAULT_DELTAS, DEFAULT_VS, ETA_DELTAS, SMALL_DELTAS,
};
use sfkit::numerics::richardson_extrapolate;
use sfkit::Error;

const I: C64 = C64 { re: 0.0, im: 1.0 };

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

// γ^(2) near the degeneration points, mpmath at 30 digits
#[test]
fn gamma2_oracles_near_limits() {
    let mp = ModularPair::from_b(c(0.025, 1.0)).unwrap();
    let v = gamma2(c(0.025, 0.0), &mp).unwrap();
    assert!(rel(v, c(0.99890755821645058991, 0.038995923149215843353)) < 1e-12, "{v}");

    let mp = ModularPair::from_b(c(1.0, 0.05)).unwrap();
    let v = gamma2(c(2.05, 0.0), &mp).unwrap();
    assert!(rel(v, c(-0.34609106913328817013, 0.00086341344753657716654)) < 1e-12, "{v}");
}

#[test]
fn b_to_i_converges() {
    let s = limit_b_to_i(0, -I, &DEFAULT_DELTAS).unwrap();
    assert!(s.is_monotone());
    assert!(s.abs_errors().last().unwrap() < &0.05);
    let s = limit_b_to_i(0, -I, &SMALL_DELTAS).unwrap();
    assert!(s.is_monotone());
    assert!(s.fitted_order >= 0.8, "{}", s.fitted_order);
}

#[test]
fn b_to_i_n1_is_exactly_linear() {
    // ratio = 1 − iδ for n = 1, x = −i
    let s = limit_b_to_i(1, -I, &DEFAULT_DELTAS).unwrap();
    for (d, r) in &s.observed {
        assert!((r - c(1.0, -d)).norm() < 1e-10, "δ={d}: {r}");
    }
    assert!((s.fitted_order - 1.0).abs() < 1e-3);
}

#[test]
fn b_to_i_parity_of_targets() {
    // Γ(x, −n) = (−1)^n Γ(x, n) carries over to the limits
    let x = c(0.3, -0.8);
    let a = limit_b_to_i(1, x, &DEFAULT_DELTAS).unwrap();
    let b = limit_b_to_i(-1, x, &DEFAULT_DELTAS).unwrap();
    for (ta, tb) in a.target.iter().zip(&b.target) {
        assert!(rel(*ta, -*tb) < 1e-13);
    }
    assert!(a.is_monotone() && b.is_monotone());
}

#[test]
fn b_to_minus_i_same_limit_up_to_parity() {
    for n in [0, 1, 2] {
        let s = limit_b_to_minus_i(n, -I, &DEFAULT_DELTAS).unwrap();
        assert!(s.is_monotone(), "n={n}");
        assert!(s.abs_errors().last().unwrap() < &0.1, "n={n}");
    }
}

#[test]
fn b_to_1_targets() {
    // n = 0 → 1; n = 1, y = 1 → e^{−iπ/2} 4πδ (−i/2)
    let s = limit_b_to_1(0, c(1.0, 0.0), &DEFAULT_DELTAS).unwrap();
    assert!(s.target.iter().all(|t| (t - 1.0).norm() < 1e-15));
    let s = limit_b_to_1(1, c(1.0, 0.0), &DEFAULT_DELTAS).unwrap();
    for (d, t) in DEFAULT_DELTAS.iter().zip(&s.target) {
        let want = (-I * PI / 2.0).exp() * 4.0 * PI * d * (-I / 2.0);
        assert!(rel(*t, want) < 1e-14);
    }
    // (a)_{−1} = 1/(a − 1), a = (2 − i)/2
    let s = limit_b_to_1(-1, c(1.0, 0.0), &DEFAULT_DELTAS).unwrap();
    let a = c(1.0, -0.5);
    let want = (-I * PI / 2.0).exp() / (4.0 * PI * DEFAULT_DELTAS[0]) / (a - 1.0);
    assert!(rel(s.target[0], want) < 1e-14);
}

#[test]
fn b_to_1_converges_at_first_order() {
    for n in [-1, 0, 1, 2] {
        let s = limit_b_to_1(n, c(1.0, 0.0), &DEFAULT_DELTAS).unwrap();
        assert!(s.is_monotone(), "n={n}");
        assert!(s.fitted_order >= 0.8, "n={n}: {}", s.fitted_order);
    }
}

#[test]
fn richardson_on_b_to_1() {
    let s = limit_b_to_1(0, c(1.0, 0.0), &DEFAULT_DELTAS).unwrap();
    let raw = s.abs_errors()[4];
    let x = richardson_extrapolate(&s.observed, 1).unwrap();
    let e = (x - 1.0).norm();
    assert!(e < raw / 100.0, "extrapolated error {e:.2e} vs raw {raw:.2e}");
}

#[test]
fn eta_ratio_limits() {
    for mode in [EtaMode::BToI, EtaMode::BTo1] {
        let s = eta_ratio_limit(mode, &ETA_DELTAS).unwrap();
        assert!(s.is_monotone());
        assert!(s.abs_errors()[4] < 0.01);
        // b = i + 0.05 and b = 1 + 0.05i within 0.05 of the limit
        assert!(s.abs_errors()[1] < 0.05);
        // termwise cancellation would predict 1
        let raw = s.last_ratio().unwrap() * s.target[4];
        assert!((raw - 1.0).norm() > 0.2, "{raw}");
    }
}

#[test]
fn eta_ratio_matches_modular_law() {
    for mode in [EtaMode::BToI, EtaMode::BTo1] {
        let s = eta_ratio_limit(mode, &ETA_DELTAS).unwrap();
        for ((d, r), t) in s.observed.iter().zip(&s.target) {
            let m = eta_ratio_modular(mode, *d).unwrap();
            assert!(rel(r * t, m) < 1e-10, "{mode:?} δ={d}: {} vs {m}", r * t);
        }
    }
}

#[test]
fn sweep_rejects_bad_grids() {
    assert!(matches!(limit_b_to_i(0, -I, &[0.1]), Err(Error::InvalidParameters(_) | Error::InsufficientSamples { .. })));
    assert!(limit_b_to_i(0, -I, &[0.05, 0.1]).is_err());
    assert!(limit_b_to_i(0, -I, &[0.1, -0.05]).is_err());
}

fn elliptic_pair() -> ModularPair<f64> {
    ModularPair::new(c(1.0, 0.0), c(1.3, 0.0)).unwrap()
}

#[test]
fn elliptic_ratio_exact_at_half_period() {
    let mp = elliptic_pair();
    let s = elliptic_to_hyperbolic_ratio(mp.big_q / 2.0, &mp, &DEFAULT_VS).unwrap();
    assert!(s.abs_errors().iter().all(|e| *e < 1e-12));
}

#[test]
fn elliptic_ratio_first_order_off_center() {
    let mp = elliptic_pair();
    for u in [0.7, 1.25] {
        let s = elliptic_to_hyperbolic_ratio(c(u, 0.0), &mp, &DEFAULT_VS).unwrap();
        assert!(s.is_monotone(), "u={u}");
        assert!((s.fitted_order - 1.0).abs() < 0.15, "u={u}: {}", s.fitted_order);
    }
}

#[test]
fn elliptic_ratio_reflection() {
    // ratio(u)·ratio(Q − u) = 1
    let mp = elliptic_pair();
    let a = elliptic_to_hyperbolic_ratio(c(0.8, 0.1), &mp, &DEFAULT_VS).unwrap();
    let b = elliptic_to_hyperbolic_ratio(mp.big_q - c(0.8, 0.1), &mp, &DEFAULT_VS).unwrap();
    for ((_, x), (_, y)) in a.observed.iter().zip(&b.observed) {
        assert!((x * y - 1.0).norm() < 1e-10);
    }
}

fn beta_point(half: bool) -> BetaPoint {
    let mut a = [c(0.1, -0.3), c(-0.2, -0.4), c(0.05, -0.35), c(0.15, -0.3), c(-0.1, -0.32), c(0.0, 0.0)];
    a[5] = c(0.0, -2.0) - a[..5].iter().sum::<C64>();
    let (labels, n) = if half {
        ([0.5, -0.5, 0.5, -0.5, 1.5, -1.5], 0.5)
    } else {
        ([1.0, 0.0, -1.0, 0.0, 1.0, -1.0], 0.0)
    };
    BetaPoint { a, labels, y: c(0.3, 0.0), n }
}

#[test]
fn extrasign_power_counting() {
    for half in [false, true] {
        let p = beta_point(half);
        let groups = extrasign_powers(&p, 0.002).unwrap();
        let expected: Vec<i32> = groups.iter().map(|g| g.expected).collect();
        assert_eq!(expected, vec![-8, -5, -2]);
        // numerator over the ±2z group, times dz ∝ δ, matches the right side
        assert_eq!(expected[0] - expected[2] + 1, expected[1]);
        for g in groups {
            assert!((g.fitted - g.expected as f64).abs() < 0.01, "half={half}: {g:?}");
            assert!((g.ratio - 1.0).norm() < 0.05, "half={half}: {g:?}");
        }
    }
}

#[test]
fn extrasign_requires_balancing() {
    let mut p = beta_point(false);
    p.a[0] += 0.1;
    assert!(matches!(extrasign_powers(&p, 0.002), Err(Error::BalancingViolated(_))));
    let mut p = beta_point(false);
    p.labels[0] = 0.5;
    assert!(extrasign_powers(&p, 0.002).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn b_to_i_generic_x(xr in -1.0..1.0f64, xi in -1.5..-0.3f64, n in -2i64..=2) {
        // away from poles of Γ(x, n) the sweep converges toward 1
        let x = c(xr, xi);
        prop_assume!(field_gamma(FieldGammaArg::new(x, n)).map(|v| v.norm() > 1e-3).unwrap_or(false));
        let s = limit_b_to_i(n, x, &SMALL_DELTAS).unwrap();
        let e = s.abs_errors();
        prop_assert!(e[4] < e[0], "{:?}", e);
        prop_assert!(e[4] < 0.05, "{:?}", e);
    }
}
