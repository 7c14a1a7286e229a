//! Hyperbolic gamma function γ(u; ω1, ω2) and its normalized form γ^(2).

use num_complex::Complex;

use crate::gamma::ln_q_pochhammer_inf;
use crate::numerics::{integrate_pieces, Piece, QuadratureSpec};
use crate::scalar::cexpm1;
use crate::{Error, Real, Result};

/// Period pair (ω1, ω2) with its derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularPair<T> {
    pub omega1: Complex<T>,
    pub omega2: Complex<T>,
    /// Q = ω1 + ω2.
    pub big_q: Complex<T>,
    /// b = √(ω1/ω2), principal branch.
    pub b: Complex<T>,
    /// q = e^{2πi ω1/ω2}.
    pub q: Complex<T>,
    /// q̃ = e^{−2πi ω2/ω1}.
    pub q_tilde: Complex<T>,
    /// Im(ω1/ω2) ≠ 0, so one labelling gives |q|, |q̃| < 1.
    pub product_valid: bool,
    /// Re ω1 ≠ 0 and Re ω2 ≠ 0.
    pub integral_valid: bool,
}

impl<T: Real> ModularPair<T> {
    pub fn new(omega1: Complex<T>, omega2: Complex<T>) -> Result<Self> {
        let zero = T::zero();
        if omega1.norm() == zero || omega2.norm() == zero {
            return Err(Error::InvalidParameters("periods must be nonzero".into()));
        }
        let i = Complex::new(zero, T::one());
        let tau = omega1 / omega2;
        Ok(Self {
            omega1,
            omega2,
            big_q: omega1 + omega2,
            b: tau.sqrt(),
            q: (i * tau * T::two_pi()).exp(),
            q_tilde: (-i * T::two_pi() / tau).exp(),
            product_valid: tau.im != zero,
            integral_valid: omega1.re != zero && omega2.re != zero,
        })
    }

    /// ω1 = b, ω2 = 1/b.
    pub fn from_b(b: Complex<T>) -> Result<Self> {
        Self::new(b, b.inv())
    }

    /// √(ω1ω2), principal branch.
    pub fn sqrt_product(&self) -> Complex<T> {
        (self.omega1 * self.omega2).sqrt()
    }

    pub fn scaled(&self, lambda: Complex<T>) -> Result<Self> {
        Self::new(self.omega1 * lambda, self.omega2 * lambda)
    }

    /// (ωa, ωb) with Im(ωa/ωb) > 0.
    fn ordered(&self) -> Result<(Complex<T>, Complex<T>)> {
        let tau = self.omega1 / self.omega2;
        if tau.im > T::zero() {
            Ok((self.omega1, self.omega2))
        } else if tau.im < T::zero() {
            Ok((self.omega2, self.omega1))
        } else {
            Err(Error::ProductNotConvergent)
        }
    }

    /// Real coordinates (s, t) with u = sω1 + tω2; None for collinear periods.
    pub fn lattice_coords(&self, u: Complex<T>) -> Option<(T, T)> {
        let (a, b) = (self.omega1, self.omega2);
        let det = a.re * b.im - a.im * b.re;
        if det == T::zero() {
            return None;
        }
        let s = (u.re * b.im - u.im * b.re) / det;
        let t = (a.re * u.im - a.im * u.re) / det;
        Some((s, t))
    }

    /// Nearest pole −nω1−mω2 within 1e-8 in lattice coordinates.
    fn guard_pole(&self, u: Complex<T>) -> Result<()> {
        let eps = T::lit(1e-8);
        let hit = |c: T| c <= eps && (c - c.round()).abs() < eps;
        match self.lattice_coords(u) {
            Some((s, t)) if hit(s) && hit(t) => Err(Error::PoleHit),
            Some(_) => Ok(()),
            None => {
                // Collinear periods: only u = 0 is guarded exactly.
                if u.norm() < eps {
                    Err(Error::PoleHit)
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// B_{2,2}(u; ω) = ((u − Q/2)² − (ω1² + ω2²)/12)/(ω1ω2).
pub fn bernoulli_b22<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Complex<T> {
    let v = u - mp.big_q * T::lit(0.5);
    let w = (mp.omega1 * mp.omega1 + mp.omega2 * mp.omega2) / T::lit(12.0);
    (v * v - w) / (mp.omega1 * mp.omega2)
}

fn i_times<T: Real>(z: Complex<T>) -> Complex<T> {
    Complex::new(-z.im, z.re)
}

/// ln γ(u; ω) from the infinite-product form, modulo 2πi.
/// None when u is a zero of γ.
pub fn ln_gamma_h_product<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Option<Complex<T>>> {
    let (wa, wb) = mp.ordered()?;
    mp.guard_pole(u)?;
    let tau = wa / wb;
    let tp = T::two_pi();
    let q = (i_times(tau) * tp).exp();
    let qt = (-i_times(tau.inv()) * tp).exp();
    if !(q.norm() < T::one()) || !(qt.norm() < T::one()) {
        return Err(Error::ProductNotConvergent);
    }
    let num_arg = qt * (i_times(u / wa) * tp).exp();
    let den_arg = (i_times(u / wb) * tp).exp();
    let den = match ln_q_pochhammer_inf(den_arg, q) {
        Err(Error::PoleHit) => return Err(Error::PoleHit),
        Err(Error::NonConvergence(_)) => return Err(Error::ProductNotConvergent),
        r => r?,
    };
    match ln_q_pochhammer_inf(num_arg, qt) {
        Ok(num) => Ok(Some(num - den)),
        Err(Error::PoleHit) => Ok(None),
        Err(Error::NonConvergence(_)) => Err(Error::ProductNotConvergent),
        Err(e) => Err(e),
    }
}

/// γ(u; ω) = (q̃ e^{2πiu/ω1}; q̃)_∞ / (e^{2πiu/ω2}; q)_∞, with the periods
/// relabelled so that Im(ω1/ω2) > 0.
pub fn gamma_h_product<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Complex<T>> {
    Ok(ln_gamma_h_product(u, mp)?
        .map(|l| l.exp())
        .unwrap_or_else(|| Complex::new(T::zero(), T::zero())))
}

/// Decay rates (κ₊, κ₋) of the integral representation at ±∞.
fn decay_rates<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<(T, T)> {
    if !mp.integral_valid {
        return Err(Error::OutsideConvergenceStrip);
    }
    let zero = T::zero();
    let pos: T = [mp.omega1, mp.omega2]
        .iter()
        .filter(|w| w.re > zero)
        .fold(zero, |s, w| s + w.re);
    let neg: T = [mp.omega1, mp.omega2]
        .iter()
        .filter(|w| w.re < zero)
        .fold(zero, |s, w| s + w.re);
    let kp = pos - u.re;
    let km = u.re - neg;
    if kp > zero && km > zero {
        Ok((kp, km))
    } else {
        Err(Error::OutsideConvergenceStrip)
    }
}

/// e^{ux}/((1−e^{ω1x})(1−e^{ω2x}) x) without overflow for large |x|.
fn int_rep_kernel<T: Real>(u: Complex<T>, w: [Complex<T>; 2], x: Complex<T>) -> Complex<T> {
    let mut e = u * x;
    let mut den = x;
    for wj in w {
        let a = wj * x;
        if a.re > T::zero() {
            // 1 − e^{a} = e^{a}·expm1(−a)
            e = e - a;
            den = den * cexpm1(-a);
        } else {
            den = -den * cexpm1(a);
        }
    }
    e.exp() / den
}

/// ln γ(u; ω) from the integral representation over ℝ + i0.
pub fn ln_gamma_h_integral<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Complex<T>> {
    let (kp, km) = decay_rates(u, mp)?;
    let tol = T::lit(1e-13);
    let pad = (T::one() / tol).ln() + T::lit(10.0);
    let x_plus = pad / kp;
    let x_minus = pad / km;
    let nearest = mp.omega1.norm().max(mp.omega2.norm());
    let r = T::one().min(T::lit(0.45) * T::two_pi() / nearest);
    let w = [mp.omega1, mp.omega2];
    let one = T::one();
    let zero = T::zero();
    let line = move |x: T| int_rep_kernel(u, w, Complex::new(x, zero));
    let arc = move |s: T| {
        // φ runs from π down to 0 above the origin.
        let e = Complex::from_polar(one, T::PI() - s);
        let x = e * r;
        int_rep_kernel(u, w, x) * Complex::new(zero, -one) * x
    };
    let mut pieces = Vec::new();
    if x_minus > r {
        pieces.push(Piece {
            f: Box::new(line),
            a: -x_minus,
            b: -r,
        });
    }
    pieces.push(Piece {
        f: Box::new(arc),
        a: zero,
        b: T::PI(),
    });
    if x_plus > r {
        pieces.push(Piece {
            f: Box::new(line),
            a: r,
            b: x_plus,
        });
    }
    let spec = QuadratureSpec {
        abs_tol: tol,
        rel_tol: tol,
        max_subdivisions: 4000,
        panel_order: 21,
    };
    Ok(-integrate_pieces(&pieces, &spec)?.value)
}

/// γ(u; ω) = exp(−∫_{ℝ+i0} e^{ux}/((1−e^{ω1x})(1−e^{ω2x})) dx/x).
pub fn gamma_h_integral<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Complex<T>> {
    Ok(ln_gamma_h_integral(u, mp)?.exp())
}

const PRODUCT_CUTOFF: f64 = 0.9999;

/// ln γ(u; ω): product form when the nome satisfies |q| ≤ 0.9999, integral form otherwise.
/// None at zeros of γ.
pub fn ln_gamma_h<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Option<Complex<T>>> {
    if let Ok((wa, wb)) = mp.ordered() {
        let q = (i_times(wa / wb) * T::two_pi()).exp();
        if q.norm() <= T::lit(PRODUCT_CUTOFF) {
            return ln_gamma_h_product(u, mp);
        }
    }
    mp.guard_pole(u)?;
    ln_gamma_h_integral(u, mp).map(Some)
}

/// γ(u; ω) with automatic representation choice.
pub fn gamma_h<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Complex<T>> {
    Ok(ln_gamma_h(u, mp)?
        .map(|l| l.exp())
        .unwrap_or_else(|| Complex::new(T::zero(), T::zero())))
}

/// ln γ^(2)(u; ω) modulo 2πi; None at zeros.
pub fn ln_gamma2<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Option<Complex<T>>> {
    let phase = i_times(bernoulli_b22(u, mp)) * (-T::FRAC_PI_2());
    Ok(ln_gamma_h(u, mp)?.map(|l| l + phase))
}

/// γ^(2)(u; ω) = e^{−(πi/2) B_{2,2}(u; ω)} γ(u; ω).
pub fn gamma2<T: Real>(u: Complex<T>, mp: &ModularPair<T>) -> Result<Complex<T>> {
    Ok(ln_gamma2(u, mp)?
        .map(|l| l.exp())
        .unwrap_or_else(|| Complex::new(T::zero(), T::zero())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    A,
    B,
}

/// Whether arg u lies in the open cone of the given region.
pub fn in_cone<T: Real>(u: Complex<T>, mp: &ModularPair<T>, region: Region) -> bool {
    let a1 = mp.omega1.arg();
    let a2 = mp.omega2.arg();
    let (lo, hi) = (a1.min(a2), a1.max(a2));
    let pi = T::PI();
    let a = u.arg();
    let inside = |x: T, l: T, h: T| {
        // Compare modulo 2π.
        [x - pi - pi, x, x + pi + pi].iter().any(|&y| y > l && y < h)
    };
    match region {
        Region::A => inside(a, hi, lo + pi),
        Region::B => inside(a, hi - pi, lo),
    }
}

/// e^{±(πi/2)B22} γ^(2)(u): + in region A, − in region B. Tends to 1 as |u| → ∞ inside the cone.
pub fn asymptotic_phase<T: Real>(
    u: Complex<T>,
    mp: &ModularPair<T>,
    region: Region,
) -> Result<Complex<T>> {
    if !in_cone(u, mp, region) {
        return Err(Error::OutsideCone);
    }
    let Some(l) = ln_gamma_h(u, mp)? else {
        return Ok(Complex::new(T::zero(), T::zero()));
    };
    Ok(match region {
        Region::A => l.exp(),
        Region::B => (l - i_times(bernoulli_b22(u, mp)) * T::PI()).exp(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// base + nω1 + mω2
    Up,
    /// −(base + nω1 + mω2)
    Down,
}

/// One half-lattice of poles, n, m ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPoleSet<T> {
    pub base: Complex<T>,
    pub omega1: Complex<T>,
    pub omega2: Complex<T>,
    pub orientation: Orientation,
}

impl<T: Real> HyperbolicPoleSet<T> {
    pub fn new(base: Complex<T>, mp: &ModularPair<T>, orientation: Orientation) -> Self {
        Self {
            base,
            omega1: mp.omega1,
            omega2: mp.omega2,
            orientation,
        }
    }

    /// The `count` points nearest the base, ordered by |nω1 + mω2| then (n, m).
    pub fn points(&self, count: usize) -> Vec<Complex<T>> {
        let span = count as i64;
        let mut cand: Vec<(T, i64, i64, Complex<T>)> = Vec::new();
        for n in 0..=span {
            for m in 0..=span {
                let off = self.omega1 * T::lit(n as f64) + self.omega2 * T::lit(m as f64);
                cand.push((off.norm(), n, m, off));
            }
        }
        cand.sort_by(|a, b| {
            a.0.partial_cmp(&b.0)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.1.cmp(&b.1))
                .then(a.2.cmp(&b.2))
        });
        let mut out: Vec<Complex<T>> = Vec::with_capacity(count);
        let tol = T::lit(1e-12);
        for (_, _, _, off) in cand {
            if out.len() == count {
                break;
            }
            let p = match self.orientation {
                Orientation::Up => self.base + off,
                Orientation::Down => -(self.base + off),
            };
            if out.iter().all(|q| (*q - p).norm() > tol) {
                out.push(p);
            }
        }
        out
    }
}

/// First `count` poles of the half-lattice through `base`.
pub fn enumerate_poles<T: Real>(
    base: Complex<T>,
    mp: &ModularPair<T>,
    orientation: Orientation,
    count: usize,
) -> Vec<Complex<T>> {
    HyperbolicPoleSet::new(base, mp, orientation).points(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn kernel_matches_naive_form_for_small_x() {
        let u = c(0.4, 0.1);
        let w = [c(1.0, 0.0), c(0.7, 0.7)];
        let x = c(0.8, 0.0);
        let naive = (u * x).exp()
            / ((C64::new(1.0, 0.0) - (w[0] * x).exp()) * (C64::new(1.0, 0.0) - (w[1] * x).exp()) * x);
        assert!((int_rep_kernel(u, w, x) - naive).norm() < 1e-13 * naive.norm());
    }

    #[test]
    fn lattice_coords_round_trip() {
        let mp = ModularPair::new(c(1.0, 0.0), c(0.3, 0.9)).unwrap();
        let (s, t) = mp.lattice_coords(c(-1.2, 0.45)).unwrap();
        let back = mp.omega1 * s + mp.omega2 * t;
        assert!((back - c(-1.2, 0.45)).norm() < 1e-14);
    }

    #[test]
    fn cone_intersection() {
        let mp = ModularPair::new(c(1.0, 0.0), C64::from_polar(1.0, 0.7)).unwrap();
        assert!(in_cone(c(0.0, 1.0), &mp, Region::A));
        assert!(!in_cone(c(1.0, 0.1), &mp, Region::A));
        assert!(in_cone(c(0.0, -1.0), &mp, Region::B));
        assert!(!in_cone(c(0.0, 1.0), &mp, Region::B));
    }
}
