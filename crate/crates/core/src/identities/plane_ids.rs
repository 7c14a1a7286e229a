//! Complex beta integral and the star-triangle relation over ℂ.

use std::f64::consts::PI;

use super::sampling::Draw;
use super::{
    Arity, EvalOptions, EvalSpec, IdentityDescriptor, IdentityKind, Params, PlaneParams, SideValue, TOL_PLANE,
};
use crate::gamma::{bracket_power, field_gamma_bracket, BracketExponent};
use crate::numerics::{integrate_plane, PlaneWindow, QuadratureSpec, Truncation};
use crate::{Error, Result, C64};

const ONE: C64 = C64::new(1.0, 0.0);

fn pp(p: &Params) -> Result<&PlaneParams> {
    p.as_plane()
}

fn plane_quad(spec: &EvalSpec) -> QuadratureSpec<f64> {
    QuadratureSpec {
        abs_tol: 0.0,
        rel_tol: spec.quad.rel_tol.max(1e-7),
        ..spec.quad
    }
}

/// ∫ Π_j [±(z_j − w)]^{e_j − 1} d²w/π; `flip[j]` selects w − z_j.
fn plane_integral(p: &PlaneParams, flip: &[bool], spec: &EvalSpec) -> Result<SideValue> {
    let shifted: Vec<BracketExponent<f64>> = p.exponents.iter().map(|e| e.shift(-ONE)).collect();
    let f = |w: C64| -> C64 {
        let mut acc = ONE;
        for ((e, z), fl) in shifted.iter().zip(&p.z).zip(flip) {
            let base = if *fl { w - z } else { z - w };
            match bracket_power(base, *e) {
                Ok(v) => acc *= v,
                Err(_) => return C64::new(f64::NAN, f64::NAN),
            }
        }
        acc
    };
    let window = PlaneWindow::around(p.z.clone());
    let est = integrate_plane(f, &window, &plane_quad(spec))?;
    Ok(SideValue {
        value: est.value / PI,
        trunc: Truncation {
            n_used: 0,
            y_used: window.radius,
            est_tail: est.err_est / PI,
        },
    })
}

fn strength(e: &BracketExponent<f64>) -> f64 {
    (e.alpha + e.alpha_prime).re
}

fn check_shape(p: &PlaneParams, k: usize) -> Result<()> {
    if p.exponents.len() != k || p.z.len() != k {
        return Err(Error::InvalidParameters(format!("expected {k} exponents and {k} points")));
    }
    for e in &p.exponents {
        e.n()?;
        if !(strength(e) > 0.0) {
            return Err(Error::InvalidParameters("requires Re(α + α′) > 0".into()));
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if (p.z[i] - p.z[j]).norm() < 0.1 {
                return Err(Error::InvalidParameters("points must be separated".into()));
            }
        }
    }
    Ok(())
}

/// (α | α′) = ((s + n)/2 + iκ | (s − n)/2 + iκ).
fn exponent(s: f64, n: i64, kappa: f64) -> BracketExponent<f64> {
    let h = n as f64 / 2.0;
    BracketExponent {
        alpha: C64::new(s / 2.0 + h, kappa),
        alpha_prime: C64::new(s / 2.0 - h, kappa),
    }
}

fn draw_points(d: &mut Draw, k: usize) -> Vec<C64> {
    loop {
        let z: Vec<C64> = (0..k)
            .map(|_| C64::from_polar(d.uniform(0.0, 1.5), d.uniform(0.0, 2.0 * PI)))
            .collect();
        let ok = (0..k).all(|i| ((i + 1)..k).all(|j| (z[i] - z[j]).norm() > 0.6));
        if ok {
            return z;
        }
    }
}

fn draw_n(d: &mut Draw) -> i64 {
    (d.uniform(0.0, 3.0).floor() as i64).clamp(0, 2) - 1
}

// ---- complex beta integral -------------------------------------------------------

fn cb_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    plane_integral(pp(p)?, &[true, false], spec)
}

fn cb_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = pp(p)?;
    let (a, b) = (p.exponents[0], p.exponents[1]);
    let v = field_gamma_bracket(a)? * field_gamma_bracket(b)? / field_gamma_bracket(a + b)?
        * bracket_power(p.z[1] - p.z[0], (a + b).shift(-ONE))?;
    Ok(SideValue::exact(v))
}

fn cb_check(p: &Params) -> Result<()> {
    let p = pp(p)?;
    check_shape(p, 2)?;
    if !(strength(&p.exponents[0]) + strength(&p.exponents[1]) < 2.0) {
        return Err(Error::InvalidParameters("requires Re(α + α′ + β + β′) < 2".into()));
    }
    Ok(())
}

fn cb_sample(d: &mut Draw) -> Result<Params> {
    let exponents = (0..2)
        .map(|_| {
            let s = d.uniform(0.3, 0.9);
            let n = draw_n(d);
            exponent(s, n, d.uniform(-0.3, 0.3))
        })
        .collect();
    let z = draw_points(d, 2);
    Ok(Params::Plane(PlaneParams { exponents, z }))
}

// ---- star-triangle relation ------------------------------------------------------

fn str_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    plane_integral(pp(p)?, &[false, false, false], spec)
}

fn str_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = pp(p)?;
    let [a, b, c] = [p.exponents[0], p.exponents[1], p.exponents[2]];
    let z = &p.z;
    let num = field_gamma_bracket(a)? * field_gamma_bracket(b)? * field_gamma_bracket(c)?;
    let den = bracket_power(z[2] - z[1], a)? * bracket_power(z[0] - z[2], b)? * bracket_power(z[1] - z[0], c)?;
    Ok(SideValue::exact(num / den))
}

fn str_check(p: &Params) -> Result<()> {
    let p = pp(p)?;
    check_shape(p, 3)?;
    let sa: C64 = p.exponents.iter().map(|e| e.alpha).sum();
    let sb: C64 = p.exponents.iter().map(|e| e.alpha_prime).sum();
    if (sa - ONE).norm() > 1e-13 || (sb - ONE).norm() > 1e-13 {
        return Err(Error::BalancingViolated(format!(
            "α + β + γ = {sa}, α′ + β′ + γ′ = {sb}, both must equal 1"
        )));
    }
    Ok(())
}

fn str_sample(d: &mut Draw) -> Result<Params> {
    let s = d.parts(3, 2.0, 0.3, 0.9)?;
    let kappa = d.free_parts(3, 0.0, 0.3);
    let n = loop {
        let n: Vec<i64> = (0..2).map(|_| draw_n(d)).collect();
        let last = -n[0] - n[1];
        if last.abs() <= 1 {
            break vec![n[0], n[1], last];
        }
    };
    let exponents = (0..3).map(|j| exponent(s[j], n[j], kappa[j])).collect();
    let z = draw_points(d, 3);
    Ok(Params::Plane(PlaneParams { exponents, z }))
}

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "complex_plane_beta",
            kind: IdentityKind::ComplexPlane,
            arity: Arity {
                continuous: 4,
                discrete: 2,
                sector_rule: "alpha - alpha' in Z",
            },
            balancing: "none",
            domain: "Re(alpha + alpha') > 0, Re(beta + beta') > 0, sum < 2",
            tail_exponent: None,
            tolerance: TOL_PLANE,
            anchor: "complex beta integral evaluation formula",
            lhs: cb_lhs,
            rhs: cb_rhs,
            sampler: cb_sample,
            check: cb_check,
        },
        IdentityDescriptor {
            id: "complex_plane_str",
            kind: IdentityKind::ComplexPlane,
            arity: Arity {
                continuous: 6,
                discrete: 3,
                sector_rule: "alpha - alpha' in Z",
            },
            balancing: "alpha + beta + gamma = 1, alpha' + beta' + gamma' = 1",
            domain: "Re(alpha + alpha') > 0 for each exponent",
            tail_exponent: None,
            tolerance: TOL_PLANE,
            anchor: "the form of a star-triangle relation",
            lhs: str_lhs,
            rhs: str_rhs,
            sampler: str_sample,
            check: str_check,
        },
    ]
}
