//! Degeneration limits of the hyperbolic gamma function.
//!
//! Each sweep evaluates the function at a decreasing sequence of deformation
//! parameters, divides by the closed-form limit and records the ratio.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::elliptic::{ln_elliptic_gamma, EllipticBase};
use crate::gamma::{field_gamma, ln_q_pochhammer_inf, pochhammer, FieldGammaArg};
use crate::hyperbolic::{ln_gamma2, ModularPair};
use crate::numerics::fitted_order;
use crate::{Error, Result, C64};

const I: C64 = C64::new(0.0, 1.0);
const ONE: C64 = C64::new(1.0, 0.0);

pub const DEFAULT_DELTAS: [f64; 5] = [0.1, 0.07, 0.05, 0.035, 0.025];

/// Deeper b → i sweep; the δ log δ correction only settles below δ ≈ 0.01.
pub const SMALL_DELTAS: [f64; 5] = [0.002, 0.0014, 0.001, 0.0007, 0.0005];

/// Eta-ratio sweep; the ratio approaches its limit like δ with unit coefficient.
pub const ETA_DELTAS: [f64; 5] = [0.1, 0.05, 0.02, 0.01, 0.005];

/// Elliptic degeneration default: v ∈ {0.2, 0.1, 0.05, 0.02}.
pub const DEFAULT_VS: [f64; 4] = [0.2, 0.1, 0.05, 0.02];

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaSweep {
    pub deltas: Vec<f64>,
    /// Closed-form limit at each δ.
    pub target: Vec<C64>,
    /// (δ, value / target).
    pub observed: Vec<(f64, C64)>,
    /// Slope of ln|ratio − 1| against ln δ; NaN when fewer than two nonzero errors.
    pub fitted_order: f64,
}

impl DeltaSweep {
    fn build(deltas: &[f64], rows: Vec<(C64, C64)>) -> Self {
        let observed: Vec<(f64, C64)> = deltas.iter().zip(&rows).map(|(d, (v, t))| (*d, v / t)).collect();
        let errs: Vec<(f64, f64)> = observed.iter().map(|(d, r)| (*d, (r - ONE).norm())).collect();
        Self {
            deltas: deltas.to_vec(),
            target: rows.iter().map(|r| r.1).collect(),
            observed,
            fitted_order: fitted_order(&errs).unwrap_or(f64::NAN),
        }
    }

    pub fn abs_errors(&self) -> Vec<f64> {
        self.observed.iter().map(|(_, r)| (r - ONE).norm()).collect()
    }

    /// |ratio − 1| strictly decreasing along the sweep.
    pub fn is_monotone(&self) -> bool {
        self.abs_errors().windows(2).all(|w| w[1] < w[0])
    }

    pub fn last_ratio(&self) -> Option<C64> {
        self.observed.last().map(|o| o.1)
    }
}

fn check_deltas(deltas: &[f64]) -> Result<()> {
    if deltas.len() < 2 {
        return Err(Error::InsufficientSamples {
            needed: 2,
            got: deltas.len(),
        });
    }
    let ok = deltas.iter().all(|d| d.is_finite() && *d > 0.0) && deltas.windows(2).all(|w| w[1] < w[0]);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters("deltas must be positive and strictly decreasing".into()))
    }
}

/// γ^(2) through the product form; |q| = e^{−4π|δ|} stays below the dispatch cutoff.
fn g2(u: C64, mp: &ModularPair<f64>) -> Result<C64> {
    ln_gamma2(u, mp)?.ok_or(Error::PoleHit)
}

/// b = ±i + δ; δ carries its sign into u, the target uses |δ|.
fn b_to_i_row(n: i64, x: C64, b: C64, delta: f64) -> Result<(C64, C64)> {
    let mp = ModularPair::from_b(b)?;
    let u = I * mp.sqrt_product() * (n as f64 + x * delta);
    let value = g2(u, &mp)?.exp();
    let gamma = field_gamma(FieldGammaArg::new(x, n))?;
    let d = C64::new(4.0 * PI * delta.abs(), 0.0);
    let target = (FRAC_PI_2 * I * (n * n) as f64).exp() * d.powc(I * x - 1.0) * gamma;
    Ok((value, target))
}

/// γ^(2)(i√(ω1ω2)(n + xδ)) with b = i + δ against e^{(πi/2)n²}(4πδ)^{ix−1} Γ(x, n).
pub fn limit_b_to_i(n: i64, x: C64, deltas: &[f64]) -> Result<DeltaSweep> {
    check_deltas(deltas)?;
    let rows = deltas
        .iter()
        .map(|&d| b_to_i_row(n, x, I + d, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaSweep::build(deltas, rows))
}

/// Mirror approach b = −i + δ, δ → 0⁻; `deltas` are the magnitudes |δ|.
/// The limit picks up (−1)^n, i.e. Γ(x, −n) in place of Γ(x, n).
pub fn limit_b_to_minus_i(n: i64, x: C64, deltas: &[f64]) -> Result<DeltaSweep> {
    check_deltas(deltas)?;
    let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
    let rows = deltas
        .iter()
        .map(|&d| b_to_i_row(n, x, -I - d, -d).map(|(v, t)| (v, t * parity)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaSweep::build(deltas, rows))
}

/// γ^(2)(√(ω1ω2)(n + 1 + yδ)) with b = 1 + iδ against e^{−(πi/2)n²}(4πδ)^n ((1 − n − iy)/2)_n.
pub fn limit_b_to_1(n: i64, y: C64, deltas: &[f64]) -> Result<DeltaSweep> {
    check_deltas(deltas)?;
    let poch = pochhammer((ONE - n as f64 - I * y) / 2.0, n)?;
    let rows = deltas
        .iter()
        .map(|&d| {
            let mp = ModularPair::from_b(C64::new(1.0, d))?;
            let u = mp.sqrt_product() * (n as f64 + 1.0 + y * d);
            let value = g2(u, &mp)?.exp();
            let target = (-FRAC_PI_2 * I * (n * n) as f64).exp() * (4.0 * PI * d).powi(n as i32) * poch;
            Ok((value, target))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaSweep::build(deltas, rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaMode {
    /// b = i + δ, limit e^{iπ/12}.
    BToI,
    /// b = 1 + iδ, limit e^{−iπ/12}.
    BTo1,
}

impl EtaMode {
    pub fn limit(self) -> C64 {
        match self {
            EtaMode::BToI => (I * PI / 12.0).exp(),
            EtaMode::BTo1 => (-I * PI / 12.0).exp(),
        }
    }

    fn b(self, delta: f64) -> C64 {
        match self {
            EtaMode::BToI => C64::new(delta, 1.0),
            EtaMode::BTo1 => C64::new(1.0, delta),
        }
    }
}

/// (q̃; q̃)_∞ / (q; q)_∞ along the sweep, both products summed directly.
pub fn eta_ratio_limit(mode: EtaMode, deltas: &[f64]) -> Result<DeltaSweep> {
    check_deltas(deltas)?;
    let rows = deltas
        .iter()
        .map(|&d| {
            let mp = ModularPair::from_b(mode.b(d))?;
            let ratio = (ln_q_pochhammer_inf(mp.q_tilde, mp.q_tilde)? - ln_q_pochhammer_inf(mp.q, mp.q)?).exp();
            Ok((ratio, mode.limit()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaSweep::build(deltas, rows))
}

/// The same ratio from the modular law e^{(πi/12)(τ + 1/τ)} (−iτ)^{1/2}, τ = ω1/ω2.
pub fn eta_ratio_modular(mode: EtaMode, delta: f64) -> Result<C64> {
    let mp = ModularPair::from_b(mode.b(delta))?;
    let tau = mp.omega1 / mp.omega2;
    Ok((I * PI / 12.0 * (tau + tau.inv())).exp() * (-I * tau).sqrt())
}

/// Γ(e^{−2πvu}; e^{−2πvω1}, e^{−2πvω2}) against e^{−π(2u−Q)/(12vω1ω2)} γ^(2)(u), v → 0⁺.
/// Both sides are combined in log space, so the diverging prefactor never materialises.
pub fn elliptic_to_hyperbolic_ratio(u: C64, mp: &ModularPair<f64>, vs: &[f64]) -> Result<DeltaSweep> {
    check_deltas(vs)?;
    let ln_h = ln_gamma2(u, mp)?.ok_or(Error::PoleHit)?;
    let w = mp.omega1 * mp.omega2;
    let rows = vs
        .iter()
        .map(|&v| {
            let s = -2.0 * PI * v;
            let base = EllipticBase::new((mp.omega1 * s).exp(), (mp.omega2 * s).exp())?;
            let ln_e = ln_elliptic_gamma((u * s).exp(), &base)?;
            let ln_pre = -PI * (2.0 * u - mp.big_q) / (12.0 * v * w);
            Ok(((ln_e - ln_pre - ln_h).exp(), ONE))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaSweep::build(vs, rows))
}

/// One group of hyperbolic gamma factors in the beta integrand near b = i.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerCount {
    /// Power of 4πδ predicted by the limit formula.
    pub expected: i32,
    /// ln|P(δ)/P(δ/2)| / ln 2, with the oscillating part removed.
    pub fitted: f64,
    /// P(δ) divided by its limiting form.
    pub ratio: C64,
}

/// Parameters of the beta integrand under g_k = i√(ω1ω2)(N_k + a_kδ), z = i√(ω1ω2)(N + yδ).
#[derive(Debug, Clone, PartialEq)]
pub struct BetaPoint {
    pub a: [C64; 6],
    /// N_k ∈ ℤ + ν.
    pub labels: [f64; 6],
    pub y: C64,
    /// N ∈ ℤ + ν.
    pub n: f64,
}

impl BetaPoint {
    fn two_nu(&self) -> Result<i64> {
        let s: Vec<i64> = self
            .labels
            .iter()
            .chain([&self.n])
            .map(|l| (2.0 * l).round() as i64)
            .collect();
        let parity = s[0].rem_euclid(2);
        let ok = self
            .labels
            .iter()
            .chain([&self.n])
            .zip(&s)
            .all(|(l, t)| (2.0 * l - *t as f64).abs() < 1e-12 && t.rem_euclid(2) == parity);
        if ok {
            Ok(parity)
        } else {
            Err(Error::InvalidParameters("labels must share one sector ℤ + ν".into()))
        }
    }
}

fn int(x: f64) -> i64 {
    x.round() as i64
}

/// Products Π γ^(2)(g_k ± z), Π_{j<k} γ^(2)(g_j + g_k) and γ^(2)(±2z) at one δ.
fn beta_groups(p: &BetaPoint, delta: f64) -> Result<[C64; 3]> {
    let mp = ModularPair::from_b(C64::new(delta, 1.0))?;
    let s = I * mp.sqrt_product();
    let g = |a: C64, n: f64| s * (n + a * delta);
    let ln = |u: C64| g2(u, &mp);
    let z = g(p.y, p.n);
    let mut first = C64::new(0.0, 0.0);
    let mut second = C64::new(0.0, 0.0);
    for k in 0..6 {
        let gk = g(p.a[k], p.labels[k]);
        first += ln(gk + z)? + ln(gk - z)?;
        for j in 0..k {
            second += ln(gk + g(p.a[j], p.labels[j]))?;
        }
    }
    let third = ln(z * 2.0)? + ln(z * -2.0)?;
    Ok([first, second, third])
}

/// (4πδ)-power bookkeeping for the b → i reduction of the hyperbolic beta integral.
/// The three groups scale like (4πδ)^{−8}, (4πδ)^{−5} and (4πδ)^{−2}; with dz ∝ δ the
/// integrand carries (4πδ)^{−5}, the same power as the right-hand side.
pub fn extrasign_powers(p: &BetaPoint, delta: f64) -> Result<[PowerCount; 3]> {
    let two_nu = p.two_nu()?;
    let sum: C64 = p.a.iter().sum();
    if (sum + 2.0 * I).norm() > 1e-10 {
        return Err(Error::BalancingViolated(format!("Σa = {sum}, expected −2i")));
    }
    if p.labels.iter().sum::<f64>().abs() > 1e-12 {
        return Err(Error::BalancingViolated("ΣN_k must vanish".into()));
    }
    let sign = if two_nu == 1 { -1.0 } else { 1.0 };
    let fg = |x: C64, n: f64| field_gamma(FieldGammaArg::new(x, int(n)));
    let mut limit1 = C64::new(sign, 0.0);
    let mut limit2 = C64::new(sign, 0.0);
    for k in 0..6 {
        limit1 *= fg(p.a[k] + p.y, p.labels[k] + p.n)? * fg(p.a[k] - p.y, p.labels[k] - p.n)?;
        for j in 0..k {
            limit2 *= fg(p.a[j] + p.a[k], p.labels[j] + p.labels[k])?;
        }
    }
    // the two field gammas of ±2z already carry (−1)^{2ν}
    let limit3 = ONE / (p.y * p.y + p.n * p.n);
    let expected = [-8, -5, -2];
    let limits = [limit1, limit2, limit3];
    let at = beta_groups(p, delta)?;
    let half = beta_groups(p, delta / 2.0)?;
    let d = 4.0 * PI * delta;
    let mut out = [PowerCount {
        expected: 0,
        fitted: 0.0,
        ratio: ONE,
    }; 3];
    for g in 0..3 {
        // the oscillating factors (4πδ)^{i·Σx} have real total exponent here
        out[g] = PowerCount {
            expected: expected[g],
            fitted: (at[g].re - half[g].re) / 2f64.ln(),
            ratio: (at[g] - expected[g] as f64 * d.ln()).exp() / limits[g],
        };
    }
    Ok(out)
}
