//! Elliptic beta integral and the V-function transformations.

use super::sampling::Draw;
use super::{
    Arity, EllipticParams, EvalOptions, EvalSpec, IdentityDescriptor, IdentityKind, Params, SideValue,
    TOL_ELLIPTIC,
};
use crate::elliptic::{
    circle_integral_adaptive, elliptic_beta_lhs, elliptic_beta_rhs, v_transform, EllipticBase, VParams,
    VTransform,
};
use crate::numerics::Truncation;
use crate::{Error, Result, C64};

fn ep(p: &Params) -> Result<&EllipticParams> {
    p.as_elliptic()
}

fn circle(value: C64, nodes: usize) -> SideValue {
    SideValue {
        value,
        trunc: Truncation {
            n_used: nodes,
            y_used: 0.0,
            est_tail: 0.0,
        },
    }
}

fn six(p: &EllipticParams) -> Result<[C64; 6]> {
    p.t.as_slice()
        .try_into()
        .map_err(|_| Error::InvalidParameters("expected 6 parameters".into()))
}

fn vparams(p: &EllipticParams) -> Result<VParams<f64>> {
    let t: [C64; 8] = p
        .t
        .as_slice()
        .try_into()
        .map_err(|_| Error::InvalidParameters("expected 8 parameters".into()))?;
    VParams::new(t, p.base)
}

fn beta_lhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = ep(p)?;
    let t = six(p)?;
    elliptic_beta_lhs(&t, &p.base)?;
    let (v, n) = circle_integral_adaptive(&t, &p.base)?;
    Ok(circle(v, n))
}

fn beta_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let p = ep(p)?;
    Ok(SideValue::exact(elliptic_beta_rhs(&six(p)?, &p.base)?))
}

fn beta_check(p: &Params) -> Result<()> {
    let p = ep(p)?;
    let t = six(p)?;
    elliptic_beta_rhs(&t, &p.base)?;
    if t.iter().any(|x| !(x.norm() < 0.995)) {
        return Err(Error::ContourPinch("|t_j| must stay below 0.995".into()));
    }
    Ok(())
}

fn draw_base(d: &mut Draw) -> Result<EllipticBase<f64>> {
    let p = C64::from_polar(d.uniform(0.1, 0.2), d.uniform(-0.3, 0.3));
    let q = C64::from_polar(d.uniform(0.1, 0.2), d.uniform(-0.3, 0.3));
    EllipticBase::new(p, q)
}

/// k parameters near (target)^{1/k}, the last one closing the product.
fn draw_t(d: &mut Draw, k: usize, target: C64) -> Vec<C64> {
    let root = target.powf(1.0 / k as f64);
    let mut t: Vec<C64> = (0..k - 1)
        .map(|_| root * C64::new(d.uniform(-0.25, 0.25), d.uniform(-0.5, 0.5)).exp())
        .collect();
    let rest: C64 = t.iter().product();
    t.push(target / rest);
    t
}

fn beta_sample(d: &mut Draw) -> Result<Params> {
    let base = draw_base(d)?;
    for _ in 0..10_000 {
        let t = draw_t(d, 6, base.pq());
        if t.iter().all(|x| x.norm() < 0.9) {
            return Ok(Params::Elliptic(EllipticParams { t, base }));
        }
    }
    Err(Error::NonConvergence("no admissible draw".into()))
}

fn v_lhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    let v = vparams(ep(p)?)?;
    let (val, n) = circle_integral_adaptive(&v.t, &v.base)?;
    Ok(circle(val, n))
}

fn v_rhs(p: &Params, rule: VTransform) -> Result<SideValue> {
    let v = vparams(ep(p)?)?;
    let (pre, s) = v_transform(&v, rule)?;
    let image = VParams::new(s, v.base)?;
    let (val, n) = circle_integral_adaptive(&image.t, &image.base)?;
    Ok(circle(pre * val, n))
}

fn v1_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    v_rhs(p, VTransform::First)
}

fn v2_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    v_rhs(p, VTransform::Second)
}

fn v3_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    v_rhs(p, VTransform::Third)
}

fn v_check_rule(p: &Params, rule: VTransform) -> Result<()> {
    let v = vparams(ep(p)?)?;
    let (_, s) = v_transform(&v, rule)?;
    VParams::new(s, v.base)?;
    Ok(())
}

fn v1_check(p: &Params) -> Result<()> {
    v_check_rule(p, VTransform::First)
}

fn v2_check(p: &Params) -> Result<()> {
    v_check_rule(p, VTransform::Second)
}

fn v3_check(p: &Params) -> Result<()> {
    v_check_rule(p, VTransform::Third)
}

fn v_sample_rule(d: &mut Draw, rule: VTransform) -> Result<Params> {
    let base = draw_base(d)?;
    let pq = base.pq();
    for _ in 0..10_000 {
        let t = draw_t(d, 8, pq * pq);
        let Ok(arr) = <[C64; 8]>::try_from(t.as_slice()) else { continue };
        let Ok(v) = VParams::new(arr, base) else { continue };
        let Ok((_, s)) = v_transform(&v, rule) else { continue };
        if t.iter().chain(s.iter()).all(|x| x.norm() < 0.9) {
            return Ok(Params::Elliptic(EllipticParams { t, base }));
        }
    }
    Err(Error::NonConvergence("no admissible draw".into()))
}

fn v1_sample(d: &mut Draw) -> Result<Params> {
    v_sample_rule(d, VTransform::First)
}

fn v2_sample(d: &mut Draw) -> Result<Params> {
    v_sample_rule(d, VTransform::Second)
}

fn v3_sample(d: &mut Draw) -> Result<Params> {
    v_sample_rule(d, VTransform::Third)
}

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    let e = |id, continuous, balancing, anchor, lhs, rhs, sampler, check| IdentityDescriptor {
        id,
        kind: IdentityKind::EllipticCircle,
        arity: Arity {
            continuous,
            discrete: 0,
            sector_rule: "none",
        },
        balancing,
        domain: "|p|, |q| < 1; |t_j| < 1",
        tail_exponent: None,
        tolerance: TOL_ELLIPTIC,
        anchor,
        lhs,
        rhs,
        sampler,
        check,
    };
    vec![
        e(
            "elliptic_beta",
            6,
            "prod t_j = pq",
            "elliptic beta integral",
            beta_lhs,
            beta_rhs,
            beta_sample,
            beta_check,
        ),
        e(
            "v_trafo_1",
            8,
            "prod t_a = p^2 q^2",
            "V-function transformation s_j = t_j/rho, t_j rho",
            v_lhs,
            v1_rhs,
            v1_sample,
            v1_check,
        ),
        e(
            "v_trafo_2",
            8,
            "prod t_a = p^2 q^2",
            "V-function transformation T^(1/2)/t_j, U^(1/2)/t_j",
            v_lhs,
            v2_rhs,
            v2_sample,
            v2_check,
        ),
        e(
            "v_trafo_3",
            8,
            "prod t_a = p^2 q^2",
            "V-function transformation sqrt(pq)/t_j",
            v_lhs,
            v3_rhs,
            v3_sample,
            v3_check,
        ),
    ]
}
