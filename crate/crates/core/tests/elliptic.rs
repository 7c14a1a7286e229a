use num_complex::Complex64 as C64;
use proptest::prelude::*;
use sfkit::elliptic::{
    elliptic_beta_lhs, elliptic_beta_rhs, elliptic_gamma, v_function_adaptive, v_transform, EllipticBase, VParams,
    VTransform,
};
use sfkit::gamma::q_pochhammer_inf;
use sfkit::Error;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn base() -> EllipticBase<f64> {
    EllipticBase::new(c(0.1, 0.05), c(0.2, -0.1)).unwrap()
}

#[test]
fn elliptic_gamma_oracle() {
    // truncated double product in mpmath, 60 x 60 factors
    let v = elliptic_gamma(c(0.3, 0.1), &base()).unwrap();
    assert!(rel(v, c(1.41658870303849868147119320686, 0.278536683467363705331639125903)) < 1e-13, "{v}");
}

#[test]
fn base_must_be_inside_unit_disc() {
    assert!(matches!(EllipticBase::new(c(1.0, 0.0), c(0.1, 0.0)), Err(Error::ModulusNotLessThanOne)));
}

#[test]
fn pole_at_one() {
    assert!(matches!(elliptic_gamma(c(1.0, 0.0), &base()), Err(Error::PoleHit)));
}

/// Six parameters with Π t = pq, all inside the unit disc.
fn beta_params(b: &EllipticBase<f64>) -> [C64; 6] {
    let mut t = [c(0.6, 0.2), c(-0.5, 0.45), c(0.7, -0.2), c(0.3, 0.6), c(-0.6, -0.3), c(0.0, 0.0)];
    let partial: C64 = t[..5].iter().product();
    t[5] = b.pq() / partial;
    t
}

#[test]
fn elliptic_beta_integral() {
    let b = base();
    let t = beta_params(&b);
    assert!(t[5].norm() < 0.99);
    let lhs = elliptic_beta_lhs(&t, &b).unwrap();
    let rhs = elliptic_beta_rhs(&t, &b).unwrap();
    assert!(rel(lhs, rhs) < 1e-10, "{lhs} vs {rhs}");
}

#[test]
fn elliptic_beta_balancing() {
    let b = base();
    let mut t = beta_params(&b);
    t[0] *= 1.01;
    assert!(matches!(elliptic_beta_rhs(&t, &b), Err(Error::BalancingViolated(_))));
}

fn v_params() -> VParams<f64> {
    // |t_j| near (|pq|²)^{1/8} keeps all three images inside the unit disc
    let b = EllipticBase::new(c(0.15, 0.0), c(0.1, 0.05)).unwrap();
    let mut t = [C64::new(0.0, 0.0); 8];
    for (k, tk) in t.iter_mut().enumerate().take(7) {
        *tk = C64::from_polar(if k % 2 == 0 { 0.3 } else { 0.42 }, 0.9 * k as f64 - 2.5);
    }
    let partial: C64 = t[..7].iter().product();
    t[7] = b.pq() * b.pq() / partial;
    VParams::new(t, b).unwrap()
}

#[test]
fn v_transformations() {
    let p = v_params();
    let v = v_function_adaptive(&p).unwrap();
    let mut checked = 0;
    for rule in [VTransform::First, VTransform::Second, VTransform::Third] {
        let (pre, s) = v_transform(&p, rule).unwrap();
        if s.iter().any(|x| x.norm() >= 0.995) {
            continue;
        }
        let w = v_function_adaptive(&VParams::new(s, p.base).unwrap()).unwrap();
        assert!(rel(v, pre * w) < 1e-9, "{rule:?}: {v} vs {}", pre * w);
        checked += 1;
    }
    assert_eq!(checked, 3);
}

fn theta(z: C64, p: C64) -> C64 {
    q_pochhammer_inf(z, p).unwrap() * q_pochhammer_inf(p / z, p).unwrap()
}

proptest! {
    #[test]
    fn reflection(r in 0.2..0.9f64, th in -3.0..3.0f64) {
        // Γ(z)Γ(pq/z) = 1
        let b = base();
        let z = C64::from_polar(r, th);
        let v = elliptic_gamma(z, &b).unwrap() * elliptic_gamma(b.pq() / z, &b).unwrap();
        prop_assert!((v - 1.0).norm() < 1e-11, "{}", v);
    }

    #[test]
    fn q_shift(r in 0.2..0.9f64, th in -3.0..3.0f64) {
        // Γ(qz) = θ(z; p) Γ(z)
        let b = base();
        let z = C64::from_polar(r, th);
        let lhs = elliptic_gamma(b.q * z, &b).unwrap();
        let rhs = theta(z, b.p) * elliptic_gamma(z, &b).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-11, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn p_q_symmetry(r in 0.2..0.9f64, th in -3.0..3.0f64) {
        let b = base();
        let swapped = EllipticBase::new(b.q, b.p).unwrap();
        let z = C64::from_polar(r, th);
        prop_assert!(rel(elliptic_gamma(z, &b).unwrap(), elliptic_gamma(z, &swapped).unwrap()) < 1e-12);
    }
}
