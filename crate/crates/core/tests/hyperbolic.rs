use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use proptest::prelude::*;
use sfkit::hyperbolic::{
    asymptotic_phase, gamma2, gamma_h, gamma_h_integral, gamma_h_product, in_cone, ln_gamma2, ModularPair, Region,
};
use sfkit::Error;

const I: C64 = C64 { re: 0.0, im: 1.0 };

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn pair(r: f64, theta: f64) -> ModularPair<f64> {
    ModularPair::new(c(1.0, 0.0), C64::from_polar(r, theta)).unwrap()
}

#[test]
fn integral_oracle() {
    // mpmath quadrature of the integral representation on Im x = 1/2
    let mp = pair(1.0, PI / 5.0);
    let u = c(0.6, 0.2);
    let want = c(0.782635444621226078104771833044, -0.0390928625068471013476095964844);
    assert!(rel(gamma_h_integral(u, &mp).unwrap(), want) < 1e-12);
    assert!(rel(gamma_h_product(u, &mp).unwrap(), want) < 1e-12);
}

#[test]
fn mixed_strip_integral_is_its_own_function() {
    // Re ω2 < 0 < Re ω1: the integral converges but is not the product form
    let mp = ModularPair::new(c(1.0, 0.0), c(-0.3, 1.0)).unwrap();
    let u = c(0.2, 0.1);
    let v = gamma_h_integral(u, &mp).unwrap();
    assert!(rel(v, c(0.617301238967250, 0.446503952505013)) < 1e-12, "{v}");
    let p = gamma_h_product(u, &mp).unwrap();
    assert!(rel(p, c(0.885355, 0.524101)) < 1e-5, "{p}");
}

#[test]
fn negative_strip_integral_oracle() {
    let mp = ModularPair::new(c(-1.0, 0.0), -C64::from_polar(1.0, 0.6)).unwrap();
    let v = gamma_h_integral(c(-0.7, 0.2), &mp).unwrap();
    assert!(rel(v, c(1.035196, 0.013363)) < 1e-5, "{v}");
}

#[test]
fn integral_outside_strip() {
    let mp = pair(1.0, 0.5);
    assert!(matches!(gamma_h_integral(c(-0.2, 0.0), &mp), Err(Error::OutsideConvergenceStrip)));
    assert!(matches!(gamma_h_integral(mp.big_q + 0.1, &mp), Err(Error::OutsideConvergenceStrip)));
}

#[test]
fn half_period_value() {
    // γ^(2)(Q/2) = 1
    let mp = pair(1.2, 0.9);
    assert!((gamma2(mp.big_q / 2.0, &mp).unwrap() - 1.0).norm() < 1e-13);
}

#[test]
fn zero_and_pole() {
    let mp = pair(1.1, 0.6);
    // poles at u = −nω1 − mω2, zeros at Q + nω1 + mω2
    assert!(matches!(gamma_h(-mp.omega1, &mp), Err(Error::PoleHit)));
    for z in [mp.big_q, mp.big_q + mp.omega2, mp.big_q + mp.omega1 + mp.omega2] {
        assert!(gamma2(z, &mp).unwrap().norm() < 1e-12);
    }
}

#[test]
fn from_b_normalises_periods() {
    let mp = ModularPair::from_b(c(0.9, 0.4)).unwrap();
    assert!((mp.sqrt_product() - 1.0).norm() < 1e-15);
    assert!((mp.omega1 - c(0.9, 0.4)).norm() < 1e-15);
    assert!((mp.big_q - mp.omega1 - 1.0 / mp.omega1).norm() < 1e-15);
}

#[test]
fn beta_kernel_decays_at_two_pi() {
    // Π γ2(g_k ± z)/γ2(±2z), Σ g_k = Q, along z = i√(ω1ω2) t
    let mp = pair(1.1, 0.7);
    let s = mp.sqrt_product();
    let raw: Vec<C64> = (0..6).map(|k| s * c(0.1 + 0.05 * k as f64, 0.02 * k as f64 - 0.05)).collect();
    let mean = raw.iter().sum::<C64>() / 6.0;
    let g: Vec<C64> = raw.iter().map(|x| x - mean + mp.big_q / 6.0).collect();
    let l2 = |u: C64| ln_gamma2(u, &mp).unwrap().unwrap();
    let ln_kernel = |t: f64| {
        let z = I * s * t;
        g.iter().map(|gk| l2(gk + z) + l2(gk - z)).sum::<C64>() - l2(2.0 * z) - l2(-2.0 * z)
    };
    let rate = 2.0 * PI * (mp.big_q / s).re;
    for (a, b) in [(4.0, 5.0), (-4.0, -5.0)] {
        let slope = ln_kernel(b).re - ln_kernel(a).re;
        assert!((slope + rate).abs() < 1e-3 * rate, "slope {slope}, want {}", -rate);
    }
}

#[test]
fn asymptotic_cones() {
    let mp = pair(1.0, 0.8);
    let far = C64::from_polar(40.0, 0.8 + 0.5 * (PI - 0.8));
    assert!(in_cone(far, &mp, Region::A));
    let a = asymptotic_phase(far, &mp, Region::A).unwrap();
    assert!((a - 1.0).norm() < 1e-8, "{a}");
    let far_b = C64::from_polar(40.0, -0.5 * (PI - 0.8));
    assert!(in_cone(far_b, &mp, Region::B));
    let b = asymptotic_phase(far_b, &mp, Region::B).unwrap();
    assert!((b - 1.0).norm() < 1e-8, "{b}");
    assert!(matches!(asymptotic_phase(far_b, &mp, Region::A), Err(Error::OutsideCone)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_matches_integral(r in 0.8..1.25f64, th in 0.2..1.3f64, a in 0.05..0.95f64, im in -0.8..0.8f64) {
        let mp = pair(r, th);
        let u = c(a * mp.big_q.re, im);
        let x = gamma_h_integral(u, &mp).unwrap();
        let y = gamma_h_product(u, &mp).unwrap();
        prop_assert!(rel(x, y) < 1e-9, "{} vs {}", x, y);
    }

    #[test]
    fn gamma2_reflection(r in 0.8..1.25f64, th in 0.2..1.3f64, ur in -1.0..2.0f64, ui in -1.0..1.0f64) {
        let mp = pair(r, th);
        let u = c(ur, ui);
        let p = gamma2(u, &mp).unwrap() * gamma2(mp.big_q - u, &mp).unwrap();
        prop_assert!((p - 1.0).norm() < 1e-10, "{}", p);
    }

    #[test]
    fn gamma2_shift(r in 0.8..1.25f64, th in 0.2..1.3f64, ur in 0.0..1.5f64, ui in -0.8..0.8f64) {
        // γ2(u + ω1) = 2 sin(πu/ω2) γ2(u)
        let mp = pair(r, th);
        let u = c(ur, ui);
        let lhs = gamma2(u + mp.omega1, &mp).unwrap();
        let rhs = 2.0 * (PI * u / mp.omega2).sin() * gamma2(u, &mp).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-10, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn gamma_h_shift(r in 0.8..1.25f64, th in 0.2..1.3f64, ur in 0.0..1.5f64, ui in -0.8..0.8f64) {
        // γ(u + ω1) = (1 − e^{2πiu/ω2}) γ(u)
        let mp = pair(r, th);
        let u = c(ur, ui);
        let lhs = gamma_h(u + mp.omega1, &mp).unwrap();
        let rhs = (1.0 - (2.0 * PI * I * u / mp.omega2).exp()) * gamma_h(u, &mp).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-10, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn periods_are_symmetric(r in 0.8..1.25f64, th in 0.2..1.3f64, ur in 0.1..1.5f64, ui in -0.8..0.8f64) {
        let a = pair(r, th);
        let b = ModularPair::new(a.omega2, a.omega1).unwrap();
        let u = c(ur, ui);
        prop_assert!(rel(gamma2(u, &a).unwrap(), gamma2(u, &b).unwrap()) < 1e-11);
    }
}
