use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use proptest::prelude::*;
use sfkit::numerics::{
    bilateral_alternating_sum, bilateral_sum, fitted_order, integrate_interval, integrate_line, integrate_plane,
    outward_labels, richardson_extrapolate, HalfInt, LineContour, MbSpec, PlaneWindow, QuadratureSpec, Sector, Side,
};

const I: C64 = C64 { re: 0.0, im: 1.0 };

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn tight() -> QuadratureSpec<f64> {
    QuadratureSpec::new(0.0, 1e-12)
}

#[test]
fn interval_oscillatory() {
    let e = integrate_interval(|x: f64| (I * x).exp(), 0.0, 1.0, &tight()).unwrap();
    let want = (I.exp() - 1.0) / I;
    assert!(rel(e.value, want) < 1e-13, "{}", e.value);
    assert!(e.err_est < 1e-10);
}

#[test]
fn interval_endpoint_singularity() {
    // ∫_0^1 x^{-1/2} dx = 2
    let e = integrate_interval(|x: f64| c(x.powf(-0.5), 0.0), 0.0, 1.0, &tight()).unwrap();
    assert!((e.value - 2.0).norm() < 1e-8, "{}", e.value);
}

#[test]
fn real_axis_lorentzian() {
    let e = integrate_line(|z: C64| 1.0 / (1.0 + z * z), &LineContour::real_axis(), &tight()).unwrap();
    assert!(rel(e.value, c(PI, 0.0)) < 1e-11, "{}", e.value);
}

#[test]
fn tilted_line_gaussian() {
    // contour rotation leaves ∫ e^{−z²} dz unchanged for small angles
    let dir = C64::from_polar(1.0, 0.3);
    let e = integrate_line(|z: C64| (-z * z).exp(), &LineContour::unbounded(c(0.0, 0.2), dir), &tight()).unwrap();
    assert!(rel(e.value, c(PI.sqrt(), 0.0)) < 1e-11, "{}", e.value);
}

#[test]
fn indentation_picks_the_residue() {
    // 1/(z(z − 2i)): passing above 0 gives π, below gives 0
    let f = |z: C64| 1.0 / (z * (z - 2.0 * I));
    let above = LineContour::real_axis().with_indentation(c(0.0, 0.0), 0.3, Side::Above);
    let below = LineContour::real_axis().with_indentation(c(0.0, 0.0), 0.3, Side::Below);
    // the below-detour result is zero, so a relative target alone never closes
    let spec = QuadratureSpec::new(1e-13, 1e-12);
    let a = integrate_line(f, &above, &spec).unwrap().value;
    let b = integrate_line(f, &below, &spec).unwrap().value;
    assert!((a - PI).norm() < 1e-10, "{a}");
    assert!(b.norm() < 1e-10, "{b}");
}

#[test]
fn segment_contour() {
    // ∫ z² dz from 1 to i
    let e = integrate_line(|z: C64| z * z, &LineContour::segment(c(1.0, 0.0), I), &tight()).unwrap();
    assert!(rel(e.value, (I * I * I - 1.0) / 3.0) < 1e-13);
}

#[test]
fn contour_validation() {
    let bad_dir = LineContour::unbounded(c(0.0, 0.0), c(2.0, 0.0));
    assert!(integrate_line(|z: C64| z, &bad_dir, &tight()).is_err());
    let off_line = LineContour::real_axis().with_indentation(c(0.0, 0.5), 0.1, Side::Above);
    assert!(integrate_line(|z: C64| z, &off_line, &tight()).is_err());
    let overlap = LineContour::real_axis()
        .with_indentation(c(0.0, 0.0), 0.3, Side::Above)
        .with_indentation(c(0.4, 0.0), 0.3, Side::Above);
    assert!(integrate_line(|z: C64| z, &overlap, &tight()).is_err());
}

#[test]
fn quadrature_spec_validation() {
    assert!(QuadratureSpec::<f64>::default().validate().is_ok());
    assert!(QuadratureSpec::new(0.0, 0.0).validate().is_err());
    assert!(QuadratureSpec::new(-1.0, 1e-8).validate().is_err());
    let mut s = QuadratureSpec::<f64>::default();
    s.panel_order = 17;
    assert!(s.validate().is_err());
    s.panel_order = 21;
    assert!(s.validate().is_ok());
    s.max_subdivisions = 0;
    assert!(s.validate().is_err());
}

fn sum_spec() -> MbSpec<f64> {
    MbSpec {
        n_max: 200,
        tail_exponent: 2.0,
        ..MbSpec::default()
    }
}

#[test]
fn bilateral_sums_of_lorentzian() {
    let g = |n: HalfInt| c(1.0 / (n.to_f64().powi(2) + 1.0), 0.0);
    let (z, t) = bilateral_sum(g, Sector::Integer, &sum_spec()).unwrap();
    // leading-order tail leaves O(n_max^{-3})
    assert!(rel(z, c(PI / PI.tanh(), 0.0)) < 1e-6, "{z}");
    assert!(t.n_used <= 200);
    let (h, _) = bilateral_sum(g, Sector::Half, &sum_spec()).unwrap();
    assert!(rel(h, c(PI * PI.tanh(), 0.0)) < 1e-6, "{h}");
}

#[test]
fn alternating_sum() {
    // Σ (−1)^N/(N² + 1) = π/sinh π
    let g = |n: HalfInt| c(1.0 / (n.to_f64().powi(2) + 1.0), 0.0);
    let (z, _) = bilateral_alternating_sum(g, Sector::Integer, &sum_spec()).unwrap();
    assert!(rel(z, c(PI / PI.sinh(), 0.0)) < 1e-8, "{z}");
}

#[test]
fn mb_spec_validation() {
    let mut s = MbSpec::<f64>::default();
    assert!(s.validate().is_ok());
    s.tail_exponent = 1.0;
    assert!(s.validate().is_err());
    s.tail_correction = false;
    assert!(s.validate().is_ok());
    s.y_max = 0.0;
    assert!(s.validate().is_err());
}

#[test]
fn labels_fan_out_from_nu() {
    let l: Vec<i64> = outward_labels(Sector::Integer, 2).iter().map(|n| n.twice()).collect();
    assert_eq!(l, vec![0, -2, 2, -4, 4]);
    let h: Vec<i64> = outward_labels(Sector::Half, 1).iter().map(|n| n.twice()).collect();
    assert_eq!(h, vec![1, -1, 3, -3]);
}

#[test]
fn half_int_basics() {
    let n = HalfInt::from_twice(3);
    assert!(!n.is_integer());
    assert_eq!(n.sector(), Sector::Half);
    assert_eq!(n.to_f64(), 1.5);
    assert_eq!(HalfInt::from_int(2).to_int(), Some(2));
    assert_eq!(Sector::Half.flip(), Sector::Integer);
}

#[test]
fn plane_integrals() {
    // ∫ (1+|w|²)^{-2} d²w = π
    let f = |w: C64| c((1.0 + w.norm_sqr()).powi(-2), 0.0);
    let e = integrate_plane(f, &PlaneWindow::around(vec![c(0.0, 0.0)]), &tight()).unwrap();
    assert!(rel(e.value, c(PI, 0.0)) < 1e-8, "{}", e.value);
    // |w|^{-1}(1+|w|²)^{-2} has an integrable point singularity; total π²/2
    let g = |w: C64| c((1.0 + w.norm_sqr()).powi(-2) / w.norm(), 0.0);
    let e = integrate_plane(g, &PlaneWindow::around(vec![c(0.0, 0.0)]), &tight()).unwrap();
    assert!(rel(e.value, c(PI * PI / 2.0, 0.0)) < 1e-7, "{}", e.value);
}

#[test]
fn richardson_removes_leading_terms() {
    let hs = [0.1, 0.05, 0.025, 0.0125];
    let v: Vec<(f64, C64)> = hs.iter().map(|&h| (h, c(1.0 + 2.0 * h + 3.0 * h * h, -h))).collect();
    let x = richardson_extrapolate(&v, 1).unwrap();
    assert!((x - c(1.0, 0.0)).norm() < 1e-10, "{x}");
}

#[test]
fn fitted_order_degenerate() {
    assert_eq!(fitted_order(&[(0.1, 0.2)]), None);
    assert_eq!(fitted_order(&[(0.1, 0.0), (0.05, 0.0)]), None);
}

proptest! {
    #[test]
    fn fitted_order_recovers_power(p in 0.3..4.0f64, a in 0.01..100.0f64) {
        let s: Vec<(f64, f64)> = [0.1f64, 0.05, 0.02, 0.01].iter().map(|&h| (h, a * h.powf(p))).collect();
        prop_assert!((fitted_order(&s).unwrap() - p).abs() < 1e-10);
    }

    #[test]
    fn interval_polynomial(a in -2.0..2.0f64, b in -2.0..2.0f64) {
        // ∫_a^b 3x² dx
        let e = integrate_interval(|x: f64| c(3.0 * x * x, x), a, b, &tight()).unwrap();
        let want = c(b.powi(3) - a.powi(3), (b * b - a * a) / 2.0);
        prop_assert!((e.value - want).norm() < 1e-12);
    }
}
