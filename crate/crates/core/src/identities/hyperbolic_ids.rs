//! Hyperbolic beta integral, its transformations and degenerations.
//!
//! Integrals run along z = i√(ω1ω2)·t, t ∈ ℝ, so dz/(i√(ω1ω2)) = dt.

use std::cell::RefCell;
use std::f64::consts::PI;

use super::sampling::Draw;
use super::{
    check_sum, Arity, EvalOptions, EvalSpec, HyperbolicParams, IdentityDescriptor, IdentityKind, Params,
    SideValue, TOL_HYPERBOLIC,
};
use crate::hyperbolic::{ln_gamma2, ModularPair};
use crate::numerics::{integrate_interval, QuadratureSpec, Truncation};
use crate::{Error, Result, C64};

const I: C64 = C64::new(0.0, 1.0);
const STEP: f64 = 0.05;
const DROP: f64 = 40.0;
const T_LIMIT: f64 = 400.0;

fn march(ln_abs: &dyn Fn(f64) -> Result<f64>, dir: f64) -> Result<(f64, f64)> {
    let mut peak = f64::NEG_INFINITY;
    let mut below = 0;
    let mut t = 0.0;
    let mut last = f64::NEG_INFINITY;
    while below < 20 || t < 1.0 {
        t += STEP;
        if t > T_LIMIT {
            return Err(Error::NonConvergence(format!(
                "integrand not decaying along the contour by |t| = {T_LIMIT}"
            )));
        }
        last = ln_abs(dir * t)?;
        peak = peak.max(last);
        below = if last < peak - DROP { below + 1 } else { 0 };
    }
    Ok((t, last))
}

/// ∫ F(z) dz/(i√(ω1ω2)) along the rotated imaginary axis. `ln_f` returns ln F,
/// or None where F vanishes. The window extends until |F| has dropped e^{−40}
/// below its running peak on both sides.
pub fn hyperbolic_line_integral<F>(
    ln_f: F,
    mp: &ModularPair<f64>,
    quad: &QuadratureSpec<f64>,
) -> Result<(C64, Truncation<f64>)>
where
    F: Fn(C64) -> Result<Option<C64>>,
{
    let s = mp.sqrt_product();
    let ln_abs = |t: f64| -> Result<f64> {
        Ok(ln_f(I * s * t)?.map(|l| l.re).unwrap_or(f64::NEG_INFINITY))
    };
    let (hi, ln_hi) = march(&ln_abs, 1.0)?;
    let (lo, ln_lo) = march(&ln_abs, -1.0)?;
    let err: RefCell<Option<Error>> = RefCell::new(None);
    let f = |t: f64| match ln_f(I * s * t) {
        Ok(Some(l)) => l.exp(),
        Ok(None) => C64::new(0.0, 0.0),
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            C64::new(0.0, 0.0)
        }
    };
    let est = integrate_interval(f, -lo, hi, quad);
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    let est = est?;
    Ok((
        est.value,
        Truncation {
            n_used: 0,
            y_used: lo.max(hi),
            est_tail: est.err_est + ln_hi.exp() + ln_lo.exp(),
        },
    ))
}

fn lg2(u: C64, mp: &ModularPair<f64>) -> Result<Option<C64>> {
    ln_gamma2(u, mp)
}

/// ln Π γ2 over a list; None if any factor vanishes.
fn ln_prod(args: impl IntoIterator<Item = C64>, mp: &ModularPair<f64>) -> Result<Option<C64>> {
    let mut acc = C64::new(0.0, 0.0);
    for u in args {
        match lg2(u, mp)? {
            Some(l) => acc += l,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

fn prod(args: impl IntoIterator<Item = C64>, mp: &ModularPair<f64>) -> Result<C64> {
    Ok(ln_prod(args, mp)?.map(|l| l.exp()).unwrap_or(C64::new(0.0, 0.0)))
}

/// Π_k γ2(g_k ± z) / γ2(±2z), the denominator written as γ2(Q ∓ 2z).
fn symmetric_ln(g: &[C64], z: C64, mp: &ModularPair<f64>) -> Result<Option<C64>> {
    let q = mp.big_q;
    ln_prod(
        g.iter()
            .flat_map(|gk| [gk + z, gk - z])
            .chain([q - 2.0 * z, q + 2.0 * z]),
        mp,
    )
}

/// Π_j γ2(f_j + z) γ2(h_j − z).
fn split_ln(f: &[C64], h: &[C64], z: C64, mp: &ModularPair<f64>) -> Result<Option<C64>> {
    ln_prod(f.iter().map(|a| a + z).chain(h.iter().map(|b| b - z)), mp)
}

fn line(ln_f: impl Fn(C64) -> Result<Option<C64>>, mp: &ModularPair<f64>, spec: &EvalSpec, scale: C64) -> Result<SideValue> {
    let (v, trunc) = hyperbolic_line_integral(ln_f, mp, &spec.quad)?;
    Ok(SideValue { value: v * scale, trunc })
}

/// ∫ Π γ2(g ± z)/γ2(±2z) dz/(2i√(ω1ω2)).
fn symmetric_integral(g: &[C64], mp: &ModularPair<f64>, spec: &EvalSpec) -> Result<SideValue> {
    line(|z| symmetric_ln(g, z, mp), mp, spec, C64::new(0.5, 0.0))
}

fn pairs(g: &[C64], pick: impl Fn(usize, usize) -> bool) -> Vec<C64> {
    let mut v = Vec::new();
    for j in 0..g.len() {
        for k in (j + 1)..g.len() {
            if pick(j, k) {
                v.push(g[j] + g[k]);
            }
        }
    }
    v
}

fn cross(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

fn hp(p: &Params) -> Result<&HyperbolicParams> {
    p.as_hyperbolic()
}

fn check(p: &HyperbolicParams, len: usize, sum: Option<C64>, sides: &[&[C64]]) -> Result<()> {
    if p.g.len() != len {
        return Err(Error::InvalidParameters(format!("expected {len} parameters")));
    }
    if let Some(t) = sum {
        check_sum(&p.g, t, "hyperbolic parameters")?;
    }
    let s = p.mp.sqrt_product();
    if !(p.mp.omega1.re > 0.0 && p.mp.omega2.re > 0.0) {
        return Err(Error::InvalidParameters("requires Re ω1, Re ω2 > 0".into()));
    }
    for side in sides {
        for g in *side {
            if !((g / s).re > 0.0) {
                return Err(Error::ContourPinch(format!(
                    "Re(g/√(ω1ω2)) = {} is not positive",
                    (g / s).re
                )));
            }
        }
    }
    Ok(())
}

// ---- sampling ----------------------------------------------------------------

fn draw_periods(d: &mut Draw) -> Result<ModularPair<f64>> {
    let r = d.uniform(0.8, 1.25);
    let theta = d.uniform(0.4, 1.2);
    ModularPair::new(C64::new(1.0, 0.0), C64::from_polar(r, theta))
}

/// k parameters g = √(ω1ω2)·c with Re c in (lo, hi)·Re(Q/s) and Σ c = total.
fn draw_units(d: &mut Draw, mp: &ModularPair<f64>, k: usize, total: C64, lo: f64, hi: f64) -> Result<Vec<C64>> {
    let s = mp.sqrt_product();
    let unit = (mp.big_q / s).re;
    let re = d.parts(k, total.re, lo * unit, hi * unit)?;
    let im = d.free_parts(k, total.im, 0.3);
    Ok(re.iter().zip(&im).map(|(x, y)| s * C64::new(*x, *y)).collect())
}

fn q_over_s(mp: &ModularPair<f64>) -> C64 {
    mp.big_q / mp.sqrt_product()
}

// ---- hyperbolic beta integral ------------------------------------------------

fn beta_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    symmetric_integral(&p.g, &p.mp, spec)
}

fn beta_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    Ok(SideValue::exact(prod(pairs(&p.g, |_, _| true), &p.mp)?))
}

fn beta_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 6, Some(p.mp.big_q), &[&p.g])
}

fn beta_sample(d: &mut Draw) -> Result<Params> {
    let mp = draw_periods(d)?;
    let g = draw_units(d, &mp, 6, q_over_s(&mp), 0.05, 0.35)?;
    Ok(Params::Hyperbolic(HyperbolicParams { g, mp }))
}

// ---- I_h transformations -------------------------------------------------------

fn ih(g: &[C64], mp: &ModularPair<f64>, spec: &EvalSpec) -> Result<SideValue> {
    symmetric_integral(g, mp, spec)
}

fn ih_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    ih(&p.g, &p.mp, spec)
}

fn trafo1_image(p: &HyperbolicParams) -> Vec<C64> {
    let xi = (p.mp.big_q - p.g[..4].iter().sum::<C64>()) / 2.0;
    (0..8).map(|j| if j < 4 { p.g[j] + xi } else { p.g[j] - xi }).collect()
}

fn trafo1_rhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let pre = prod(pairs(&p.g, |j, k| (j < 4 && k < 4) || (j >= 4 && k >= 4)), &p.mp)?;
    let v = ih(&trafo1_image(p), &p.mp, spec)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn trafo1_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 8, Some(2.0 * p.mp.big_q), &[&p.g, &trafo1_image(p)])
}

fn eight_sample(d: &mut Draw, image: fn(&HyperbolicParams) -> Vec<C64>) -> Result<Params> {
    let mp = draw_periods(d)?;
    let s = mp.sqrt_product();
    for _ in 0..10_000 {
        let g = draw_units(d, &mp, 8, 2.0 * q_over_s(&mp), 0.05, 0.45)?;
        let p = HyperbolicParams { g, mp };
        let unit = q_over_s(&mp).re;
        if image(&p).iter().all(|x| (x / s).re > 0.05 * unit) {
            return Ok(Params::Hyperbolic(p));
        }
    }
    Err(Error::NonConvergence("no admissible draw".into()))
}

fn trafo1_sample(d: &mut Draw) -> Result<Params> {
    eight_sample(d, trafo1_image)
}

fn trafo2_image(p: &HyperbolicParams) -> Vec<C64> {
    let big_g = p.g[..4].iter().sum::<C64>() / 2.0;
    let q = p.mp.big_q;
    (0..8)
        .map(|j| if j < 4 { big_g - p.g[j] } else { q - big_g - p.g[j] })
        .collect()
}

fn trafo2_rhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let pre = prod(cross(&p.g[..4], &p.g[4..]), &p.mp)?;
    let v = ih(&trafo2_image(p), &p.mp, spec)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn trafo2_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 8, Some(2.0 * p.mp.big_q), &[&p.g, &trafo2_image(p)])
}

fn trafo2_sample(d: &mut Draw) -> Result<Params> {
    eight_sample(d, trafo2_image)
}

fn reflect(g: &[C64], mp: &ModularPair<f64>) -> Vec<C64> {
    g.iter().map(|x| mp.big_q / 2.0 - x).collect()
}

fn trafo3_image(p: &HyperbolicParams) -> Vec<C64> {
    reflect(&p.g, &p.mp)
}

fn trafo3_rhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let pre = prod(pairs(&p.g, |_, _| true), &p.mp)?;
    let v = ih(&trafo3_image(p), &p.mp, spec)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn trafo3_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 8, Some(2.0 * p.mp.big_q), &[&p.g, &trafo3_image(p)])
}

fn trafo3_sample(d: &mut Draw) -> Result<Params> {
    eight_sample(d, trafo3_image)
}

// ---- ξ → −∞ limit: three plus three parameters --------------------------------

fn limit_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    line(|z| split_ln(&p.g[..3], &p.g[3..], z, &p.mp), &p.mp, spec, C64::new(1.0, 0.0))
}

fn limit_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    Ok(SideValue::exact(prod(cross(&p.g[..3], &p.g[3..]), &p.mp)?))
}

fn limit_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 6, Some(p.mp.big_q), &[&p.g])
}

fn limit_sample(d: &mut Draw) -> Result<Params> {
    beta_sample(d)
}

// ---- Askey–Wilson analogue -----------------------------------------------------

fn aw_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let num = prod(pairs(&p.g, |_, _| true), &p.mp)?;
    let den = prod([p.g.iter().sum::<C64>()], &p.mp)?;
    Ok(SideValue::exact(num / den))
}

fn aw_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 4, None, &[&p.g])?;
    let slack = (p.mp.big_q - p.g.iter().sum::<C64>()) / p.mp.sqrt_product();
    if !(slack.re > 0.0) {
        return Err(Error::InvalidParameters("requires Re((Q − Σg)/√(ω1ω2)) > 0".into()));
    }
    Ok(())
}

fn aw_sample(d: &mut Draw) -> Result<Params> {
    let mp = draw_periods(d)?;
    let total = C64::new(0.6 * q_over_s(&mp).re, d.uniform(-0.5, 0.5));
    let g = draw_units(d, &mp, 4, total, 0.05, 0.3)?;
    Ok(Params::Hyperbolic(HyperbolicParams { g, mp }))
}

// ---- six-parameter reflection ------------------------------------------------

fn plain_symmetric(g: &[C64], mp: &ModularPair<f64>, spec: &EvalSpec) -> Result<SideValue> {
    line(|z| symmetric_ln(g, z, mp), mp, spec, I * mp.sqrt_product())
}

fn gmro_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    plain_symmetric(&p.g, &p.mp, spec)
}

fn gmro_rhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let big_g: C64 = p.g.iter().sum();
    let pre = prod(pairs(&p.g, |_, _| true), &p.mp)? / prod([big_g - p.mp.big_q], &p.mp)?;
    let v = plain_symmetric(&reflect(&p.g, &p.mp), &p.mp, spec)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn gmro_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    check(p, 6, None, &[&p.g, &reflect(&p.g, &p.mp)])?;
    let u = (p.g.iter().sum::<C64>() / p.mp.sqrt_product()).re / q_over_s(&p.mp).re;
    if !(u > 1.0 && u < 2.0) {
        return Err(Error::InvalidParameters(
            "requires Re(Q/√(ω1ω2)) < Re(Σg/√(ω1ω2)) < 2 Re(Q/√(ω1ω2))".into(),
        ));
    }
    Ok(())
}

fn gmro_sample(d: &mut Draw) -> Result<Params> {
    let mp = draw_periods(d)?;
    let total = C64::new(1.5 * q_over_s(&mp).re, d.uniform(-0.5, 0.5));
    let g = draw_units(d, &mp, 6, total, 0.1, 0.4)?;
    Ok(Params::Hyperbolic(HyperbolicParams { g, mp }))
}

// ---- four plus four parameters, ξ → −∞ in the reflection -------------------------

fn plain_split(f: &[C64], h: &[C64], mp: &ModularPair<f64>, spec: &EvalSpec) -> Result<SideValue> {
    line(|z| split_ln(f, h, z, mp), mp, spec, I * mp.sqrt_product())
}

/// (Q/2 − f_j, Q/2 − g_j): the new "plus" parameters come from f.
fn infy_image(p: &HyperbolicParams, split: usize) -> (Vec<C64>, Vec<C64>) {
    (reflect(&p.g[split..], &p.mp), reflect(&p.g[..split], &p.mp))
}

fn infy_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    plain_split(&p.g[..4], &p.g[4..], &p.mp, spec)
}

fn infy_rhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let pre = prod(cross(&p.g[..4], &p.g[4..]), &p.mp)?;
    let (a, b) = infy_image(p, 4);
    let v = plain_split(&a, &b, &p.mp, spec)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn infy_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    let (a, b) = infy_image(p, 4);
    check(p, 8, Some(2.0 * p.mp.big_q), &[&p.g, &a, &b])
}

fn infy_sample(d: &mut Draw) -> Result<Params> {
    let mp = draw_periods(d)?;
    let g = draw_units(d, &mp, 8, 2.0 * q_over_s(&mp), 0.1, 0.4)?;
    Ok(Params::Hyperbolic(HyperbolicParams { g, mp }))
}

// ---- g_4 → i∞ further degeneration with exponential kernels --------------------

fn ln_expo(x: C64, z: C64, mp: &ModularPair<f64>) -> C64 {
    PI * I * z * x / (mp.omega1 * mp.omega2)
}

/// ∫ e^{πiz(Q−Σ(f+g))/(ω1ω2)} Π γ2(g_k + z) γ2(f_k − z) dz with g then f in `p`.
fn expo_integral(g: &[C64], f: &[C64], mp: &ModularPair<f64>, spec: &EvalSpec) -> Result<SideValue> {
    let x = mp.big_q - g.iter().sum::<C64>() - f.iter().sum::<C64>();
    line(
        |z| Ok(split_ln(g, f, z, mp)?.map(|l| l + ln_expo(x, z, mp))),
        mp,
        spec,
        I * mp.sqrt_product(),
    )
}

fn infydeg_lhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    expo_integral(&p.g[..3], &p.g[3..], &p.mp, spec)
}

fn infydeg_rhs(p: &Params, spec: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = hp(p)?;
    let (g, f) = (&p.g[..3], &p.g[3..]);
    let q = p.mp.big_q;
    let w = p.mp.omega1 * p.mp.omega2;
    let sym = |v: &[C64]| v[0] * v[1] + v[0] * v[2] + v[1] * v[2];
    let diff: C64 = f.iter().sum::<C64>() - g.iter().sum::<C64>();
    let phase = PI * I / (2.0 * w) * (q * diff + 2.0 * (sym(g) - sym(f)));
    let s: C64 = p.g.iter().sum();
    let pre = phase.exp() * prod(cross(g, f), &p.mp)? / prod([s - q], &p.mp)?;
    let (a, b) = infy_image(p, 3);
    let v = expo_integral(&a, &b, &p.mp, spec)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn infydeg_check(p: &Params) -> Result<()> {
    let p = hp(p)?;
    let (a, b) = infy_image(p, 3);
    check(p, 6, None, &[&p.g, &a, &b])?;
    let u = (p.g.iter().sum::<C64>() / p.mp.sqrt_product()).re / q_over_s(&p.mp).re;
    if !(u > 1.0 && u < 2.0) {
        return Err(Error::InvalidParameters(
            "requires Re(Q/√(ω1ω2)) < Re(Σ(f+g)/√(ω1ω2)) < 2 Re(Q/√(ω1ω2))".into(),
        ));
    }
    Ok(())
}

fn infydeg_sample(d: &mut Draw) -> Result<Params> {
    gmro_sample(d)
}

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    let h = |id, continuous, balancing, domain, anchor, lhs, rhs, sampler, check| IdentityDescriptor {
        id,
        kind: IdentityKind::HyperbolicLine,
        arity: Arity {
            continuous,
            discrete: 0,
            sector_rule: "none",
        },
        balancing,
        domain,
        tail_exponent: None,
        tolerance: TOL_HYPERBOLIC,
        anchor,
        lhs,
        rhs,
        sampler,
        check,
    };
    vec![
        h(
            "hyperbolic_beta",
            6,
            "sum g_k = Q",
            "Re w1, Re w2 > 0; Re(g_k/sqrt(w1 w2)) > 0",
            "hyperbolic beta integral evaluation formula",
            beta_lhs,
            beta_rhs,
            beta_sample,
            beta_check,
        ),
        h(
            "hyperbolic_trafo_I",
            8,
            "sum g_j = 2Q",
            "Re(g_j/sqrt(w1 w2)) > 0 and Re(lambda_j/sqrt(w1 w2)) > 0",
            "I_h transformation with lambda_j = g_j +- xi",
            ih_lhs,
            trafo1_rhs,
            trafo1_sample,
            trafo1_check,
        ),
        h(
            "hyperbolic_trafo_II",
            8,
            "sum g_j = 2Q",
            "Re of all parameters over sqrt(w1 w2) positive on both sides",
            "I_h transformation with G - g_j, Q - G - g_j",
            ih_lhs,
            trafo2_rhs,
            trafo2_sample,
            trafo2_check,
        ),
        h(
            "hyperbolic_trafo_III",
            8,
            "sum g_j = 2Q",
            "0 < Re(g_j/sqrt(w1 w2)) < Re(Q/sqrt(w1 w2))/2",
            "I_h reflection with lambda_j = Q/2 - g_j",
            ih_lhs,
            trafo3_rhs,
            trafo3_sample,
            trafo3_check,
        ),
        h(
            "hyperbolic_limit_I",
            6,
            "sum (f_j + h_j) = Q",
            "Re(f_j/sqrt(w1 w2)), Re(h_j/sqrt(w1 w2)) > 0",
            "xi -> -infinity limit of the beta integral",
            limit_lhs,
            limit_rhs,
            limit_sample,
            limit_check,
        ),
        h(
            "hyperbolic_AW",
            4,
            "none",
            "Re(g_k/sqrt(w1 w2)) > 0; Re((Q - sum g_k)/sqrt(w1 w2)) > 0",
            "hyperbolic Askey-Wilson integral (Ruijsenaars)",
            beta_lhs,
            aw_rhs,
            aw_sample,
            aw_check,
        ),
        h(
            "hyperbolic_gmro",
            6,
            "none",
            "0 < Re(g_j/sqrt(w1 w2)) < Re(Q/sqrt(w1 w2))/2; Re(Q) < Re(G) < 2 Re(Q) in units of sqrt(w1 w2)",
            "six-parameter reflection with 1/gamma2(G - Q)",
            gmro_lhs,
            gmro_rhs,
            gmro_sample,
            gmro_check,
        ),
        h(
            "hyperbolic_infy",
            8,
            "sum (f_j + g_j) = 2Q",
            "0 < Re(g_j/sqrt(w1 w2)), Re(f_j/sqrt(w1 w2)) < Re(Q/sqrt(w1 w2))/2",
            "four plus four parameter transformation with Q/2 - f_j + z, Q/2 - g_j - z",
            infy_lhs,
            infy_rhs,
            infy_sample,
            infy_check,
        ),
        h(
            "hyperbolic_infy_degenerate",
            6,
            "none",
            "0 < Re(g_k/sqrt(w1 w2)), Re(f_k/sqrt(w1 w2)) < Re(Q/sqrt(w1 w2))/2; 1 < Re(sum/Q) < 2 in units of sqrt(w1 w2)",
            "three plus three parameter transformation with exponential kernels",
            infydeg_lhs,
            infydeg_rhs,
            infydeg_sample,
            infydeg_check,
        ),
    ]
}
