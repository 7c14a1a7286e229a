//! Elliptic gamma function, elliptic beta integral and the V-function.

use num_complex::Complex;
use rayon::prelude::*;

use crate::gamma::ln_q_pochhammer_inf;
use crate::scalar::{cln1m, KahanSum};
use crate::{Error, Real, Result};

/// Bases (p, q) with |p|, |q| < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticBase<T> {
    pub p: Complex<T>,
    pub q: Complex<T>,
}

impl<T: Real> EllipticBase<T> {
    pub fn new(p: Complex<T>, q: Complex<T>) -> Result<Self> {
        if !(p.norm() < T::one()) || !(q.norm() < T::one()) {
            return Err(Error::ModulusNotLessThanOne);
        }
        Ok(Self { p, q })
    }

    pub fn pq(&self) -> Complex<T> {
        self.p * self.q
    }

    /// (p;p)_∞ (q;q)_∞
    fn kappa(&self) -> Result<Complex<T>> {
        Ok((ln_q_pochhammer_inf(self.p, self.p)? + ln_q_pochhammer_inf(self.q, self.q)?).exp())
    }
}

fn truncation_depth<T: Real>(z: Complex<T>, base: &EllipticBase<T>) -> usize {
    let r = base.p.norm().max(base.q.norm());
    if r == T::zero() {
        return 0;
    }
    let m = z.norm().max((base.pq() / z).norm()).max(T::one());
    let j = (T::lit(1e-17).ln() - m.ln()) / r.ln();
    j.ceil().to_usize().unwrap_or(0).min(100_000)
}

/// ln Γ(z; p, q) over the triangle j + k ≤ J. With `skip_origin` the
/// j = k = 0 denominator factor 1 − z is left out.
fn ln_elliptic_gamma_impl<T: Real>(
    z: Complex<T>,
    base: &EllipticBase<T>,
    skip_origin: bool,
) -> Result<Complex<T>> {
    if z.norm() == T::zero() {
        return Err(Error::DivisionByZero);
    }
    let depth = truncation_depth(z, base);
    let zi = z.inv();
    let pq = base.pq();
    let one = Complex::new(T::one(), T::zero());
    let guard = T::lit(1e-14);
    let mut acc = KahanSum::new();
    let mut pj = one;
    for j in 0..=depth {
        let mut w = z * pj;
        let mut v = zi * pq * pj;
        for k in 0..=(depth - j) {
            if !(skip_origin && j == 0 && k == 0) {
                if (one - w).norm() < guard {
                    return Err(Error::PoleHit);
                }
                acc.add(-cln1m(w));
            }
            acc.add(cln1m(v));
            w = w * base.q;
            v = v * base.q;
        }
        pj = pj * base.p;
    }
    Ok(acc.value())
}

/// ln Γ(z; p, q) modulo 2πi.
pub fn ln_elliptic_gamma<T: Real>(z: Complex<T>, base: &EllipticBase<T>) -> Result<Complex<T>> {
    ln_elliptic_gamma_impl(z, base, false)
}

/// Γ(z; p, q) = Π_{j,k≥0} (1 − z⁻¹p^{j+1}q^{k+1})/(1 − z p^j q^k).
pub fn elliptic_gamma<T: Real>(z: Complex<T>, base: &EllipticBase<T>) -> Result<Complex<T>> {
    Ok(ln_elliptic_gamma(z, base)?.exp())
}

const MIN_LEVEL: u32 = 8;
const MAX_LEVEL: u32 = 14;

/// ln of Π_a Γ(t_a z^{±1}) / Γ(z^{±2}) at z = e^{iθ}.
fn ln_circle_kernel<T: Real>(t: &[Complex<T>], base: &EllipticBase<T>, theta: T) -> Result<Option<Complex<T>>> {
    let z = Complex::from_polar(T::one(), theta);
    let zi = z.conj();
    let one = Complex::new(T::one(), T::zero());
    let z2 = z * z;
    let zi2 = zi * zi;
    // (1 − z²)(1 − z⁻²) is pulled out so θ = 0, π give exact zeros.
    let edge = (one - z2) * (one - zi2);
    if edge.norm() == T::zero() {
        return Ok(None);
    }
    let mut l = edge.ln() - ln_elliptic_gamma_impl(z2, base, true)? - ln_elliptic_gamma_impl(zi2, base, true)?;
    for ta in t {
        l = l + ln_elliptic_gamma(*ta * z, base)? + ln_elliptic_gamma(*ta * zi, base)?;
    }
    Ok(Some(l))
}

fn node_sum<T: Real>(
    t: &[Complex<T>],
    base: &EllipticBase<T>,
    n: usize,
    odd_only: bool,
) -> Result<Complex<T>> {
    let idx: Vec<usize> = if odd_only {
        (0..n).filter(|k| k % 2 == 1).collect()
    } else {
        (0..n).collect()
    };
    let vals: Vec<Result<Complex<T>>> = idx
        .par_iter()
        .map(|&k| {
            let theta = T::two_pi() * T::lit(k as f64) / T::lit(n as f64);
            Ok(ln_circle_kernel(t, base, theta)?
                .map(|l| l.exp())
                .unwrap_or_else(|| Complex::new(T::zero(), T::zero())))
        })
        .collect();
    let mut acc = KahanSum::new();
    for v in vals {
        acc.add(v?);
    }
    Ok(acc.value())
}

/// (p;p)(q;q)/(4πi) ∮ Π_a Γ(t_a z^{±1})/Γ(z^{±2}) dz/z on an `nodes`-point trapezoid rule.
pub fn circle_integral<T: Real>(
    t: &[Complex<T>],
    base: &EllipticBase<T>,
    nodes: usize,
) -> Result<Complex<T>> {
    if nodes == 0 {
        return Err(Error::InvalidParameters("node count must be positive".into()));
    }
    let s = node_sum(t, base, nodes, false)?;
    Ok(s * base.kappa()? / T::lit(2.0 * nodes as f64))
}

/// Adaptive version: 2^k nodes, k = 8..14, doubling until the relative change drops below 1e-13.
pub fn circle_integral_adaptive<T: Real>(
    t: &[Complex<T>],
    base: &EllipticBase<T>,
) -> Result<(Complex<T>, usize)> {
    let kappa = base.kappa()?;
    let mut n = 1usize << MIN_LEVEL;
    let mut sum = node_sum(t, base, n, false)?;
    let mut prev = sum * kappa / T::lit(2.0 * n as f64);
    for _ in MIN_LEVEL..MAX_LEVEL {
        n *= 2;
        sum = sum + node_sum(t, base, n, true)?;
        let cur = sum * kappa / T::lit(2.0 * n as f64);
        if (cur - prev).norm() <= T::lit(1e-13) * cur.norm() {
            return Ok((cur, n));
        }
        prev = cur;
    }
    Err(Error::NonConvergence(format!(
        "trapezoid rule unconverged at {n} nodes"
    )))
}

fn check_pinch<T: Real>(t: &[Complex<T>]) -> Result<()> {
    for ta in t {
        if !(ta.norm() < T::lit(0.995)) {
            return Err(Error::ContourPinch(format!(
                "|t| = {} too close to the unit circle",
                ta.norm()
            )));
        }
    }
    Ok(())
}

fn check_product<T: Real>(t: &[Complex<T>], target: Complex<T>) -> Result<()> {
    let prod = t.iter().fold(Complex::new(T::one(), T::zero()), |a, b| a * b);
    if (prod - target).norm() > T::lit(1e-12) * target.norm().max(T::min_positive_value()) {
        return Err(Error::BalancingViolated(format!(
            "product of parameters {prod} differs from {target}"
        )));
    }
    Ok(())
}

/// Left side of the elliptic beta integral; Π t_j = pq.
pub fn elliptic_beta_lhs<T: Real>(t: &[Complex<T>; 6], base: &EllipticBase<T>) -> Result<Complex<T>> {
    check_product(t, base.pq())?;
    check_pinch(t)?;
    Ok(circle_integral_adaptive(t, base)?.0)
}

/// Π_{j<k} Γ(t_j t_k; p, q).
pub fn elliptic_beta_rhs<T: Real>(t: &[Complex<T>; 6], base: &EllipticBase<T>) -> Result<Complex<T>> {
    check_product(t, base.pq())?;
    pair_product(t, |_, _| true, base)
}

fn pair_product<T: Real>(
    t: &[Complex<T>],
    pick: impl Fn(usize, usize) -> bool,
    base: &EllipticBase<T>,
) -> Result<Complex<T>> {
    let mut l = Complex::new(T::zero(), T::zero());
    for j in 0..t.len() {
        for k in (j + 1)..t.len() {
            if pick(j, k) {
                l = l + ln_elliptic_gamma(t[j] * t[k], base)?;
            }
        }
    }
    Ok(l.exp())
}

/// Eight parameters of the V-function with Π t_a = p²q².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VParams<T> {
    pub t: [Complex<T>; 8],
    pub base: EllipticBase<T>,
}

impl<T: Real> VParams<T> {
    pub fn new(t: [Complex<T>; 8], base: EllipticBase<T>) -> Result<Self> {
        let pq = base.pq();
        check_product(&t, pq * pq)?;
        check_pinch(&t)?;
        Ok(Self { t, base })
    }
}

/// V(t) on an `nodes`-point trapezoid rule.
pub fn v_function<T: Real>(params: &VParams<T>, nodes: usize) -> Result<Complex<T>> {
    circle_integral(&params.t, &params.base, nodes)
}

/// V(t) with adaptive node doubling.
pub fn v_function_adaptive<T: Real>(params: &VParams<T>) -> Result<Complex<T>> {
    Ok(circle_integral_adaptive(&params.t, &params.base)?.0)
}

/// The three W(E7) transformations of V.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VTransform {
    /// s_j = ρ⁻¹t_j (j ≤ 4), s_j = ρt_j (j ≥ 5), ρ = √(t1t2t3t4/pq).
    First,
    /// T^{1/2}/t_j (j ≤ 4), U^{1/2}/t_j (j ≥ 5).
    Second,
    /// √(pq)/t_j.
    Third,
}

/// Prefactor and transformed parameters with V(t) = prefactor · V(s).
pub fn v_transform<T: Real>(params: &VParams<T>, rule: VTransform) -> Result<(Complex<T>, [Complex<T>; 8])> {
    let t = &params.t;
    let base = &params.base;
    let one = Complex::new(T::one(), T::zero());
    let mut s = [one; 8];
    let prefactor = match rule {
        VTransform::First => {
            let rho = (t[0] * t[1] * t[2] * t[3] / base.pq()).sqrt();
            for j in 0..8 {
                s[j] = if j < 4 { t[j] / rho } else { t[j] * rho };
            }
            pair_product(t, |j, k| (j < 4 && k < 4) || (j >= 4 && k >= 4), base)?
        }
        VTransform::Second => {
            let big_t = (t[0] * t[1] * t[2] * t[3]).sqrt();
            let big_u = (t[4] * t[5] * t[6] * t[7]).sqrt();
            for j in 0..8 {
                s[j] = if j < 4 { big_t / t[j] } else { big_u / t[j] };
            }
            pair_product(t, |j, k| j < 4 && k >= 4, base)?
        }
        VTransform::Third => {
            let r = base.pq().sqrt();
            for j in 0..8 {
                s[j] = r / t[j];
            }
            pair_product(t, |_, _| true, base)?
        }
    };
    Ok((prefactor, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    #[test]
    fn skip_origin_drops_one_factor() {
        let base = EllipticBase::new(C64::new(0.2, 0.0), C64::new(0.3, 0.0)).unwrap();
        let z = C64::new(0.4, 0.3);
        let full = ln_elliptic_gamma_impl(z, &base, false).unwrap();
        let cut = ln_elliptic_gamma_impl(z, &base, true).unwrap();
        let d = (full - cut).exp() * (C64::new(1.0, 0.0) - z);
        assert!((d - C64::new(1.0, 0.0)).norm() < 1e-13);
    }
}
