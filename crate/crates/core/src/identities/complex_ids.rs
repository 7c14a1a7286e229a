//! Mellin–Barnes identities for the complex-field gamma function.

use std::f64::consts::PI;

use super::mb::{FieldFactor, MbKernel};
use super::sampling::Draw;
use super::{
    check_sum, Arity, ComplexMbParams, EvalOptions, EvalSpec, IdentityDescriptor, IdentityKind, Params,
    SideValue, TOL_MB,
};
use crate::gamma::{field_gamma, FieldGammaArg};
use crate::numerics::{HalfInt, Sector};
use crate::{Error, Result, C64};

const I: C64 = C64::new(0.0, 1.0);

fn fg(x: C64, n: HalfInt) -> Result<C64> {
    let k = n
        .to_int()
        .ok_or_else(|| Error::InvalidParameters(format!("discrete index {n} is not an integer")))?;
    field_gamma(FieldGammaArg::new(x, k))
}

fn sign_of(n: HalfInt) -> f64 {
    n.parity_sign().expect("integer exponent")
}

/// Π over pairs selected by `pick` of Γ(a_j + a_k, N_j + N_k).
fn pair_product(p: &ComplexMbParams, pick: impl Fn(usize, usize) -> bool) -> Result<C64> {
    let mut acc = C64::new(1.0, 0.0);
    for j in 0..p.a.len() {
        for k in (j + 1)..p.a.len() {
            if pick(j, k) {
                acc *= fg(p.a[j] + p.a[k], p.n[j] + p.n[k])?;
            }
        }
    }
    Ok(acc)
}

/// Π_{j,k} Γ(s_j + t_k, N_j + M_k) with s, N the first `split` entries.
fn cross_product(p: &ComplexMbParams, split: usize) -> Result<C64> {
    let mut acc = C64::new(1.0, 0.0);
    for j in 0..split {
        for k in split..p.a.len() {
            acc *= fg(p.a[j] + p.a[k], p.n[j] + p.n[k])?;
        }
    }
    Ok(acc)
}

fn apply_shift(kernel: &mut MbKernel, a: &[C64], opts: &EvalOptions) {
    kernel.shift = if opts.contour_shift != 0.0 {
        opts.contour_shift
    } else if a.iter().any(|z| z.im.abs() < 1e-12) {
        1e-2
    } else {
        0.0
    };
}

fn symmetric_kernel(a: &[C64], n: &[HalfInt], nu: Sector, opts: &EvalOptions) -> MbKernel {
    let factors = a
        .iter()
        .zip(n)
        .flat_map(|(c, m)| FieldFactor::pm(*c, *m))
        .collect();
    let mut k = MbKernel::new(factors, nu).weighted();
    apply_shift(&mut k, a, opts);
    k
}

/// Γ(s_k + y, N_k + N) Γ(t_k − y, M_k − N).
fn split_kernel(s: &[C64], nn: &[HalfInt], t: &[C64], mm: &[HalfInt], nu: Sector, opts: &EvalOptions) -> MbKernel {
    let mut factors = Vec::new();
    for (c, m) in s.iter().zip(nn) {
        factors.push(FieldFactor::new(*c, 1.0, *m, 1));
    }
    for (c, m) in t.iter().zip(mm) {
        factors.push(FieldFactor::new(*c, -1.0, *m, -1));
    }
    let all: Vec<C64> = s.iter().chain(t).copied().collect();
    let mut k = MbKernel::new(factors, nu);
    apply_shift(&mut k, &all, opts);
    k
}

fn run(kernel: MbKernel, spec: &EvalSpec, scale: f64) -> Result<SideValue> {
    let (v, trunc) = kernel.evaluate(&spec.mb)?;
    Ok(SideValue { value: v * scale, trunc })
}

fn with_window(mut k: MbKernel, opts: &EvalOptions) -> MbKernel {
    if let Some(w) = opts.window_sector {
        k.window = w;
    }
    k
}

fn check_common(p: &ComplexMbParams, len: usize, a_sum: Option<C64>, n_sum: Option<HalfInt>) -> Result<()> {
    if p.a.len() != len || p.n.len() != len {
        return Err(Error::InvalidParameters(format!("expected {len} parameter pairs")));
    }
    for n in &p.n {
        if !p.nu.contains(*n) {
            return Err(Error::InvalidParameters(format!("label {n} is outside the sector")));
        }
    }
    if let Some(t) = a_sum {
        check_sum(&p.a, t, "continuous parameters")?;
    }
    if let Some(t) = n_sum {
        let s: HalfInt = p.n.iter().copied().sum();
        if s != t {
            return Err(Error::BalancingViolated(format!("discrete labels sum to {s}, expected {t}")));
        }
    }
    Ok(())
}

fn mbp(p: &Params) -> Result<&ComplexMbParams> {
    p.as_complex_mb()
}

// ---- key complex beta integral -------------------------------------------------

fn beta_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    run(with_window(symmetric_kernel(&p.a, &p.n, p.nu, o), o), spec, 1.0 / (8.0 * PI))
}

fn beta_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    Ok(SideValue::exact(pair_product(mbp(p)?, |_, _| true)?))
}

fn beta_check(p: &Params) -> Result<()> {
    check_common(mbp(p)?, 6, Some(-2.0 * I), Some(HalfInt::ZERO))
}

fn beta_sample(d: &mut Draw) -> Result<Params> {
    let re = d.free_parts(6, 0.0, 0.8);
    let im = d.parts(6, -2.0, -0.9, -0.1)?;
    let a = re.iter().zip(&im).map(|(x, y)| C64::new(*x, *y)).collect();
    let n = d.labels(6, HalfInt::ZERO, 2)?;
    Ok(Params::ComplexMb(ComplexMbParams { a, n, nu: d.sector }))
}

// ---- eight-parameter transformations --------------------------------------------

fn v8(p: &ComplexMbParams, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    run(with_window(symmetric_kernel(&p.a, &p.n, p.nu, o), o), spec, 1.0 / (8.0 * PI))
}

fn v8_rhs_kernel(a: Vec<C64>, n: Vec<HalfInt>, mu: Sector, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let sector = o.force_sector.unwrap_or(mu);
    run(symmetric_kernel(&a, &n, sector, o), spec, 1.0 / (8.0 * PI))
}

fn eight_check(p: &Params) -> Result<()> {
    check_common(mbp(p)?, 8, Some(-4.0 * I), Some(HalfInt::ZERO))
}

fn v8_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    v8(mbp(p)?, spec, o)
}

/// New parameters and sector for the first transformation.
fn trafo1_image(p: &ComplexMbParams) -> Result<(Vec<C64>, Vec<HalfInt>, Sector, HalfInt)> {
    let x: C64 = p.a[..4].iter().sum();
    let l: HalfInt = p.n[..4].iter().copied().sum();
    let half_l = l.halve()?;
    let a = (0..8)
        .map(|k| if k < 4 { p.a[k] - x / 2.0 - I } else { p.a[k] + x / 2.0 + I })
        .collect();
    let n = (0..8)
        .map(|k| if k < 4 { p.n[k] - half_l } else { p.n[k] + half_l })
        .collect();
    let mu = if l.is_integer() && l.to_int().unwrap().rem_euclid(2) == 1 {
        p.nu.flip()
    } else {
        p.nu
    };
    Ok((a, n, mu, l))
}

fn trafo1_rhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let (a, n, mu, l) = trafo1_image(p)?;
    let sign = if o.drop_sign_factor { 1.0 } else { sign_of(l) };
    let pre = pair_product(p, |j, k| (j < 4 && k < 4) || (j >= 4 && k >= 4))? * sign;
    let v = v8_rhs_kernel(a, n, mu, spec, o)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn interior(a: &[C64], lo: f64, hi: f64) -> bool {
    a.iter().all(|z| z.im > lo && z.im < hi)
}

/// Odd seeds ask for an odd L so the sector rule and the sign are both exercised.
fn wants_odd(d: &Draw) -> bool {
    d.seed % 2 == 1
}

fn eight_draw(d: &mut Draw) -> Result<ComplexMbParams> {
    let re = d.free_parts(8, 0.0, 0.6);
    let im = d.parts(8, -4.0, -0.7, -0.3)?;
    let a = re.iter().zip(&im).map(|(x, y)| C64::new(*x, *y)).collect();
    let n = d.labels(8, HalfInt::ZERO, 1)?;
    Ok(ComplexMbParams { a, n, nu: d.sector })
}

fn odd_l(p: &ComplexMbParams) -> bool {
    let l: HalfInt = p.n[..4].iter().copied().sum();
    l.to_int().map(|k| k.rem_euclid(2) == 1).unwrap_or(false)
}

fn trafo1_sample(d: &mut Draw) -> Result<Params> {
    let odd = wants_odd(d);
    for _ in 0..100_000 {
        let p = eight_draw(d)?;
        let (a, ..) = trafo1_image(&p)?;
        if interior(&a, -0.9, -0.05) && odd_l(&p) == odd {
            return Ok(Params::ComplexMb(p));
        }
    }
    Err(Error::NonConvergence("no admissible draw".into()))
}

fn trafo2_image(p: &ComplexMbParams) -> Result<(Vec<C64>, Vec<HalfInt>, Sector, HalfInt)> {
    let y1: C64 = p.a[..4].iter().sum();
    let y2: C64 = p.a[4..].iter().sum();
    let l1: HalfInt = p.n[..4].iter().copied().sum();
    let l2 = -l1;
    let (h1, h2) = (l1.halve()?, l2.halve()?);
    let a = (0..8)
        .map(|k| if k < 4 { y1 / 2.0 - p.a[k] } else { y2 / 2.0 - p.a[k] })
        .collect();
    let n = (0..8)
        .map(|k| if k < 4 { h1 - p.n[k] } else { h2 - p.n[k] })
        .collect();
    let mu = if l1.to_int().map(|k| k.rem_euclid(2) == 1).unwrap_or(false) {
        p.nu.flip()
    } else {
        p.nu
    };
    Ok((a, n, mu, l1))
}

fn trafo2_rhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let (a, n, mu, l1) = trafo2_image(p)?;
    let sign = if o.drop_sign_factor { 1.0 } else { sign_of(l1) };
    let pre = cross_product(p, 4)? * sign;
    let v = v8_rhs_kernel(a, n, mu, spec, o)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn trafo2_sample(d: &mut Draw) -> Result<Params> {
    let odd = wants_odd(d);
    for _ in 0..100_000 {
        let p = eight_draw(d)?;
        let (a, ..) = trafo2_image(&p)?;
        if interior(&a, -0.9, -0.05) && interior(&p.a, -0.9, -0.05) && odd_l(&p) == odd {
            return Ok(Params::ComplexMb(p));
        }
    }
    Err(Error::NonConvergence("no admissible draw".into()))
}

fn trafo3_rhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let a = p.a.iter().map(|z| -I - z).collect();
    let n = p.n.iter().map(|m| -*m).collect();
    let pre = pair_product(p, |_, _| true)?;
    let v = v8_rhs_kernel(a, n, p.nu, spec, o)?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn trafo3_check(p: &Params) -> Result<()> {
    eight_check(p)?;
    if !interior(&mbp(p)?.a, -1.0, 0.0) {
        return Err(Error::InvalidParameters("requires -1 < Im a_k < 0".into()));
    }
    Ok(())
}

fn trafo3_sample(d: &mut Draw) -> Result<Params> {
    Ok(Params::ComplexMb(eight_draw(d)?))
}

// ---- star-triangle form (three plus three parameters) ---------------------------

fn str_kernel(p: &ComplexMbParams, o: &EvalOptions) -> MbKernel {
    // Γ(s_j + y, N + N_j) Γ(t_j − y, N − M_j)
    let mut factors = Vec::new();
    for j in 0..3 {
        factors.push(FieldFactor::new(p.a[j], 1.0, p.n[j], 1));
    }
    for j in 3..6 {
        factors.push(FieldFactor::new(p.a[j], -1.0, -p.n[j], 1));
    }
    let mut k = MbKernel::new(factors, p.nu);
    apply_shift(&mut k, &p.a, o);
    with_window(k, o)
}

fn str_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    run(str_kernel(p, o), spec, 1.0 / (4.0 * PI))
}

fn str_rhs(p: &Params, _: &EvalSpec, _: &EvalOptions) -> Result<SideValue> {
    Ok(SideValue::exact(cross_product(mbp(p)?, 3)?))
}

fn str_check(p: &Params) -> Result<()> {
    check_common(mbp(p)?, 6, Some(-2.0 * I), Some(HalfInt::ZERO))
}

fn str_sample(d: &mut Draw) -> Result<Params> {
    let re = d.free_parts(6, 0.0, 0.6);
    let im = d.parts(6, -2.0, -0.6, -0.1)?;
    let a = re.iter().zip(&im).map(|(x, y)| C64::new(*x, *y)).collect();
    let n = d.labels(6, HalfInt::ZERO, 1)?;
    Ok(Params::ComplexMb(ComplexMbParams { a, n, nu: d.sector }))
}

/// The ν = 0 parameters N_j + ν, M_k − ν equivalent to a ν = 1/2 draw.
/// Evaluate with `window_sector = Some(Sector::Half)` to keep the same truncation.
pub fn str_mb_shift_image(p: &ComplexMbParams) -> ComplexMbParams {
    let nu = p.nu.nu();
    let n = (0..p.n.len())
        .map(|k| if k < 3 { p.n[k] + nu } else { p.n[k] - nu })
        .collect();
    ComplexMbParams {
        a: p.a.clone(),
        n,
        nu: Sector::Integer,
    }
}

// ---- de Branges–Wilson analogue -------------------------------------------------

fn dbw_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let norm = if o.alt_normalization {
        1.0 / (4.0 * PI * PI)
    } else {
        1.0 / (8.0 * PI)
    };
    run(with_window(symmetric_kernel(&p.a, &p.n, p.nu, o), o), spec, norm)
}

fn nu_sign(nu: Sector, o: &EvalOptions) -> f64 {
    if o.drop_sign_factor || nu == Sector::Integer {
        1.0
    } else {
        -1.0
    }
}

fn dbw_rhs(p: &Params, _: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let sa: C64 = p.a.iter().sum();
    let sn: HalfInt = p.n.iter().copied().sum();
    let v = pair_product(p, |_, _| true)? / fg(sa, sn)? * nu_sign(p.nu, o);
    Ok(SideValue::exact(v))
}

fn dbw_check(p: &Params) -> Result<()> {
    let p = mbp(p)?;
    check_common(p, 4, None, None)?;
    if !interior(&p.a, f64::NEG_INFINITY, 0.0) {
        return Err(Error::InvalidParameters("requires Im a_k < 0".into()));
    }
    Ok(())
}

fn dbw_sample(d: &mut Draw) -> Result<Params> {
    let re = d.free_parts(4, 0.0, 0.6);
    let a = re.iter().map(|x| C64::new(*x, d.uniform(-0.35, -0.15))).collect();
    let n = (0..4).map(|_| d.label(1)).collect();
    Ok(Params::ComplexMb(ComplexMbParams { a, n, nu: d.sector }))
}

// ---- degenerate first transformation ------------------------------------------

fn deg1_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    run(with_window(symmetric_kernel(&p.a, &p.n, p.nu, o), o), spec, 1.0 / (8.0 * PI))
}

fn deg1_rhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let sa: C64 = p.a.iter().sum();
    let sn: HalfInt = p.n.iter().copied().sum();
    let pre = pair_product(p, |_, _| true)? / fg(sa + 2.0 * I, sn)? * nu_sign(p.nu, o);
    let a: Vec<C64> = p.a.iter().map(|z| -I - z).collect();
    let n: Vec<HalfInt> = p.n.iter().map(|m| -*m).collect();
    let v = run(symmetric_kernel(&a, &n, p.nu, o), spec, 1.0 / (8.0 * PI))?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn deg1_check(p: &Params) -> Result<()> {
    let p = mbp(p)?;
    check_common(p, 6, None, None)?;
    if !interior(&p.a, -1.0, 0.0) {
        return Err(Error::InvalidParameters("requires -1 < Im a_k < 0".into()));
    }
    Ok(())
}

fn deg1_sample(d: &mut Draw) -> Result<Params> {
    let re = d.free_parts(6, 0.3, 0.6);
    let im = d.parts(6, -3.0, -0.7, -0.3)?;
    let a = re.iter().zip(&im).map(|(x, y)| C64::new(*x, *y)).collect();
    let n = (0..6).map(|_| d.label(1)).collect();
    Ok(Params::ComplexMb(ComplexMbParams { a, n, nu: d.sector }))
}

// ---- degenerate second transformation, balanced eight-parameter form ------------

fn deg2_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let k = split_kernel(&p.a[..4], &p.n[..4], &p.a[4..], &p.n[4..], p.nu, o);
    run(with_window(k, o), spec, 1.0 / (4.0 * PI))
}

fn reflected_split(p: &ComplexMbParams, split: usize) -> (Vec<C64>, Vec<HalfInt>, Vec<C64>, Vec<HalfInt>) {
    // Γ(−i − t_k + y, N − M_k) Γ(−i − s_k − y, −N − N_k)
    let s2 = p.a[split..].iter().map(|t| -I - t).collect();
    let n2 = p.n[split..].iter().map(|m| -*m).collect();
    let t2 = p.a[..split].iter().map(|s| -I - s).collect();
    let m2 = p.n[..split].iter().map(|n| -*n).collect();
    (s2, n2, t2, m2)
}

fn deg2_rhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let sn: HalfInt = p.n[..4].iter().copied().sum();
    let sign = if o.drop_sign_factor { 1.0 } else { sign_of(sn) };
    let pre = cross_product(p, 4)? * sign;
    let (s2, n2, t2, m2) = reflected_split(p, 4);
    let v = run(split_kernel(&s2, &n2, &t2, &m2, p.nu, o), spec, 1.0 / (4.0 * PI))?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn deg2_check(p: &Params) -> Result<()> {
    check_common(mbp(p)?, 8, Some(-4.0 * I), Some(HalfInt::ZERO))
}

fn deg2_sample(d: &mut Draw) -> Result<Params> {
    Ok(Params::ComplexMb(eight_draw(d)?))
}

// ---- degenerate second transformation, alternating form -------------------------

fn deg2alt_lhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let k = split_kernel(&p.a[..3], &p.n[..3], &p.a[3..], &p.n[3..], p.nu, o).alternating();
    run(with_window(k, o), spec, 1.0 / (4.0 * PI))
}

fn deg2alt_rhs(p: &Params, spec: &EvalSpec, o: &EvalOptions) -> Result<SideValue> {
    let p = mbp(p)?;
    let st: C64 = p.a.iter().sum();
    let sn: HalfInt = p.n.iter().copied().sum();
    let sign = if o.drop_sign_factor { 1.0 } else { sign_of(sn) };
    let pre = cross_product(p, 3)? / fg(st + 2.0 * I, sn)? * sign;
    let (s2, n2, t2, m2) = reflected_split(p, 3);
    let k = split_kernel(&s2, &n2, &t2, &m2, p.nu, o).alternating();
    let v = run(k, spec, 1.0 / (4.0 * PI))?;
    Ok(SideValue { value: v.value * pre, trunc: v.trunc })
}

fn deg2alt_check(p: &Params) -> Result<()> {
    let p = mbp(p)?;
    check_common(p, 6, None, None)?;
    if !interior(&p.a, -1.0, 0.0) {
        return Err(Error::InvalidParameters("requires -1 < Im of every parameter < 0".into()));
    }
    Ok(())
}

fn deg2alt_sample(d: &mut Draw) -> Result<Params> {
    let re = d.free_parts(6, 0.2, 0.6);
    let im = d.parts(6, -3.0, -0.7, -0.3)?;
    let a = re.iter().zip(&im).map(|(x, y)| C64::new(*x, *y)).collect();
    let n = (0..6).map(|_| d.label(1)).collect();
    Ok(Params::ComplexMb(ComplexMbParams { a, n, nu: d.sector }))
}

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    let mb = |id, continuous, sector_rule, balancing, domain, tail, anchor, lhs, rhs, sampler, check| {
        IdentityDescriptor {
            id,
            kind: IdentityKind::ComplexMb,
            arity: Arity {
                continuous,
                discrete: continuous,
                sector_rule,
            },
            balancing,
            domain,
            tail_exponent: Some(tail),
            tolerance: TOL_MB,
            anchor,
            lhs,
            rhs,
            sampler,
            check,
        }
    };
    vec![
        mb(
            "complex_beta",
            6,
            "N_k in Z+nu, nu in {0, 1/2}",
            "sum a_k = -2i; sum N_k = 0",
            "Im a_k < 0",
            6.0,
            "key complex beta integral",
            beta_lhs,
            beta_rhs,
            beta_sample,
            beta_check,
        ),
        mb(
            "complex_trafo_I",
            8,
            "right side summed over mu, mu != nu iff L is odd",
            "sum a_k = -4i; sum N_k = 0",
            "Im a_k < 0; Im(a_k - X/2) < 1 (k<=4); Im(a_k + X/2) < -1 (k>=5)",
            6.0,
            "first symmetry transformation with (-1)^L",
            v8_lhs,
            trafo1_rhs,
            trafo1_sample,
            eight_check,
        ),
        mb(
            "complex_trafo_II",
            8,
            "right side summed over mu, mu != nu iff L1 is odd",
            "sum a_k = -4i; sum N_k = 0",
            "Im a_k < 0; Im(Y1/2 - a_k) < 0; Im(Y2/2 - a_k) < 0",
            6.0,
            "second symmetry transformation with (-1)^L1",
            v8_lhs,
            trafo2_rhs,
            trafo2_sample,
            eight_check,
        ),
        mb(
            "complex_trafo_III",
            8,
            "same nu on both sides",
            "sum a_k = -4i; sum N_k = 0",
            "-1 < Im a_k < 0",
            6.0,
            "third transformation, parameters -i - a_k, -N_k",
            v8_lhs,
            trafo3_rhs,
            trafo3_sample,
            trafo3_check,
        ),
        mb(
            "complex_str_MB",
            6,
            "N_j, M_j in Z+nu; nu = 1/2 reduces to nu = 0 by shifts",
            "sum (s_j + t_j) = -2i; sum (N_j + M_j) = 0",
            "Im s_j < 0; Im t_j < 0",
            4.0,
            "Mellin-Barnes star-triangle form",
            str_lhs,
            str_rhs,
            str_sample,
            str_check,
        ),
        mb(
            "complex_dBW",
            4,
            "N_k in Z+nu; right side carries (-1)^(2 nu)",
            "none",
            "Im a_k < 0; integrand decay 6 + 2 sum Im a_k > 2",
            4.0,
            "complex de Branges-Wilson analogue, normalization 1/(8 pi)",
            dbw_lhs,
            dbw_rhs,
            dbw_sample,
            dbw_check,
        ),
        mb(
            "complex_degtrafo_I",
            6,
            "N_k in Z+nu; right side carries (-1)^(2 nu)",
            "none",
            "-1 < Im a_k < 0",
            4.0,
            "degenerate first transformation",
            deg1_lhs,
            deg1_rhs,
            deg1_sample,
            deg1_check,
        ),
        mb(
            "complex_trafo_II_deg",
            8,
            "N_k, M_k in Z+nu; sign (-1)^(sum N_k)",
            "sum (s_k + t_k) = -4i; sum (N_k + M_k) = 0",
            "-1 < Im s_k, Im t_k < 0",
            4.0,
            "degenerate second transformation, balanced form",
            deg2_lhs,
            deg2_rhs,
            deg2_sample,
            deg2_check,
        ),
        mb(
            "complex_trafo_II_deg_alt",
            6,
            "N_k, M_k in Z+nu; alternating (-1)^(N - nu) kernel",
            "none",
            "-1 < Im s_k, Im t_k < 0",
            3.0,
            "degenerate second transformation, alternating form",
            deg2alt_lhs,
            deg2alt_rhs,
            deg2alt_sample,
            deg2alt_check,
        ),
    ]
}
