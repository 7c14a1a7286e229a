use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex;
use rayon::prelude::*;

use crate::scalar::KahanSum;
use crate::{Error, Real, Result};

/// Integer or half-integer, stored as twice its value so sums stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn halve(self) -> Result<HalfInt> {
        if self.0 % 2 == 0 {
            Ok(HalfInt(self.0 / 2))
        } else {
            Err(Error::InvalidParameters(format!(
                "{self} is not divisible by two in Z/2"
            )))
        }
    }

    pub fn sector(self) -> Sector {
        if self.is_integer() {
            Sector::Integer
        } else {
            Sector::Half
        }
    }

    /// (−1)^self for integer self.
    pub fn parity_sign(self) -> Option<f64> {
        self.to_int().map(|n| if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 })
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// The discrete sector ν: labels live in Z (ν = 0) or Z + 1/2 (ν = 1/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    Integer,
    Half,
}

impl Sector {
    pub fn nu(self) -> HalfInt {
        match self {
            Sector::Integer => HalfInt(0),
            Sector::Half => HalfInt(1),
        }
    }

    pub fn flip(self) -> Sector {
        match self {
            Sector::Integer => Sector::Half,
            Sector::Half => Sector::Integer,
        }
    }

    pub fn contains(self, n: HalfInt) -> bool {
        n.sector() == self
    }
}

/// Truncation policy for a bilateral sum over N ∈ Z + ν, optionally of line integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MbSpec<T> {
    pub n_max: usize,
    pub y_max: T,
    /// Power-law decay exponent p. In [`bilateral_sum`] it is the decay of the
    /// summand; for Mellin–Barnes kernels it is the decay of the integrand in y.
    pub tail_exponent: T,
    pub tail_correction: bool,
    pub extrapolation_levels: usize,
}

impl<T: Real> Default for MbSpec<T> {
    fn default() -> Self {
        Self {
            n_max: 40,
            y_max: T::lit(200.0),
            tail_exponent: T::lit(6.0),
            tail_correction: true,
            extrapolation_levels: 1,
        }
    }
}

impl<T: Real> MbSpec<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.y_max > T::zero()) {
            return Err(Error::InvalidParameters("y_max must be positive".into()));
        }
        if self.tail_correction && !(self.tail_exponent > T::one()) {
            return Err(Error::InvalidParameters(
                "tail correction needs a tail exponent above one".into(),
            ));
        }
        if self.extrapolation_levels == 0 {
            return Err(Error::InvalidParameters(
                "extrapolation_levels must be at least one".into(),
            ));
        }
        Ok(())
    }
}

/// What a truncated evaluation actually used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation<T> {
    pub n_used: usize,
    pub y_used: T,
    pub est_tail: T,
}

/// Labels N ∈ Z + ν with |N| ≤ n_max + ν in the order ν, ν−1, ν+1, ν−2, …
pub fn outward_labels(nu: Sector, n_max: usize) -> Vec<HalfInt> {
    let base = nu.nu().twice();
    let mut out = Vec::with_capacity(2 * n_max + 2);
    out.push(HalfInt(base));
    let last = match nu {
        Sector::Integer => n_max as i64,
        Sector::Half => n_max as i64 + 1,
    };
    for k in 1..=last {
        out.push(HalfInt(base - 2 * k));
        if k < last || nu == Sector::Integer {
            out.push(HalfInt(base + 2 * k));
        }
    }
    out
}

fn power_law_fit<T: Real>(
    g_last: Complex<T>,
    g_prev: Complex<T>,
    m: T,
    s: T,
) -> (Complex<T>, Complex<T>) {
    // g(N) ≈ D N^{-s} + F N^{-s-1}, matched at M and M−1.
    let a = g_last * m.powf(s);
    let b = g_prev * (m - T::one()).powf(s);
    let f = (b - a) * m * (m - T::one());
    let d = a - f / m;
    (d, f)
}

fn tail_estimate<T: Real>(
    g_last: Complex<T>,
    g_prev: Complex<T>,
    m: T,
    s: T,
    alternating_sign: Option<T>,
) -> Complex<T> {
    let (d, f) = power_law_fit(g_last, g_prev, m, s);
    let x = m + T::lit(0.5);
    match alternating_sign {
        None => {
            // Local complex exponent picks up a slowly turning phase N^{iω}.
            if g_prev.norm() > T::zero() {
                let lam = (g_last / g_prev).ln() / (m / (m - T::one())).ln();
                if (lam.re + s).abs() < T::lit(0.5) && lam.re < -T::one() {
                    let one = Complex::new(T::one(), T::zero());
                    let ratio = Complex::new(x / m, T::zero()).powc(lam);
                    return -g_last * ratio * x / (lam + one);
                }
            }
            d * x.powf(T::one() - s) / (s - T::one()) + f * x.powf(-s) / s
        }
        Some(sign) => {
            let gx = d * x.powf(-s) + f * x.powf(-s - T::one());
            gx * (sign * T::lit(0.5))
        }
    }
}

fn sum_with_tails<T: Real>(
    labels: &[HalfInt],
    terms: &[Complex<T>],
    nu: Sector,
    spec: &MbSpec<T>,
    tail_alternates: [bool; 2],
) -> Result<(Complex<T>, Truncation<T>)> {
    let mut acc = KahanSum::new();
    for t in terms {
        acc.add(*t);
    }
    let n_max = spec.n_max;
    let m = n_max as f64 + nu.nu().to_f64();
    let mut est_tail = T::zero();
    if m >= 2.0 {
        let lookup = |n: HalfInt| -> Complex<T> {
            let i = labels.iter().position(|&l| l == n).expect("label in window");
            terms[i]
        };
        let top = HalfInt::from_twice((2.0 * m) as i64);
        let one = HalfInt::from_int(1);
        let sides = [(top, top - one, top + one), (-top, -top + one, -top - one)];
        for ((last, prev, first_out), alternating) in sides.into_iter().zip(tail_alternates) {
            let gl = lookup(last);
            let gp = lookup(prev);
            if gl.norm() > gp.norm() * T::lit(1.0 + 1e-9) {
                return Err(Error::TailDiverging);
            }
            if gl.norm() == T::zero() && gp.norm() == T::zero() {
                continue;
            }
            let sign = if alternating {
                let k = (first_out - nu.nu()).to_int().expect("integer offset");
                Some(if k.rem_euclid(2) == 0 { T::one() } else { -T::one() })
            } else {
                None
            };
            // The alternating sign is applied to the summand already; strip it for the fit.
            let (gl, gp) = match sign {
                Some(s) => (gl * (-s), gp * s),
                None => (gl, gp),
            };
            let tail = tail_estimate(gl, gp, T::lit(m), spec.tail_exponent, sign);
            est_tail = est_tail + tail.norm();
            if spec.tail_correction {
                acc.add(tail);
            }
        }
    }
    Ok((
        acc.value(),
        Truncation {
            n_used: n_max,
            y_used: T::zero(),
            est_tail,
        },
    ))
}

fn bilateral_impl<T: Real, G>(
    g: G,
    nu: Sector,
    spec: &MbSpec<T>,
    alternating: bool,
    tail_alternates: [bool; 2],
) -> Result<(Complex<T>, Truncation<T>)>
where
    G: Fn(HalfInt) -> Result<Complex<T>> + Sync,
{
    spec.validate()?;
    let labels = outward_labels(nu, spec.n_max);
    let terms: Vec<Complex<T>> = labels
        .par_iter()
        .map(|&n| {
            let v = g(n)?;
            if alternating {
                let k = (n - nu.nu()).to_int().expect("label in sector");
                Ok(if k.rem_euclid(2) == 0 { v } else { -v })
            } else {
                Ok(v)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let (value, trunc) = sum_with_tails(&labels, &terms, nu, spec, tail_alternates)?;
    if spec.extrapolation_levels <= 1 || spec.n_max < 4 {
        return Ok((value, trunc));
    }
    // Richardson over the cutoff: re-sum at smaller windows of the same terms.
    let mut samples = vec![(T::one() / T::lit(spec.n_max as f64), value)];
    for level in 1..spec.extrapolation_levels {
        let n = spec.n_max.saturating_sub(2 * level);
        if n < 2 {
            break;
        }
        let sub = MbSpec { n_max: n, ..*spec };
        let keep: Vec<usize> = labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.to_f64().abs() <= n as f64 + nu.nu().to_f64())
            .map(|(i, _)| i)
            .collect();
        let l2: Vec<HalfInt> = keep.iter().map(|&i| labels[i]).collect();
        let t2: Vec<Complex<T>> = keep.iter().map(|&i| terms[i]).collect();
        let (v, _) = sum_with_tails(&l2, &t2, nu, &sub, tail_alternates)?;
        samples.push((T::one() / T::lit(n as f64), v));
    }
    if samples.len() < 2 {
        return Ok((value, trunc));
    }
    let order = if spec.tail_correction {
        spec.tail_exponent + T::one()
    } else {
        spec.tail_exponent - T::one()
    };
    let order = order.round().to_u32().unwrap_or(1).max(1);
    let extrapolated = super::richardson_extrapolate(&samples, order)?;
    let est = trunc.est_tail.max((extrapolated - value).norm());
    Ok((
        extrapolated,
        Truncation {
            est_tail: est,
            ..trunc
        },
    ))
}

/// Σ_{N ∈ Z+ν, |N| ≤ n_max+ν} g(N), summed outward from ν with compensation, plus the
/// power-law tail beyond the cutoff when `spec.tail_correction` is set.
pub fn bilateral_sum<T: Real, G>(g: G, nu: Sector, spec: &MbSpec<T>) -> Result<(Complex<T>, Truncation<T>)>
where
    G: Fn(HalfInt) -> Complex<T> + Sync,
{
    bilateral_impl(|n| Ok(g(n)), nu, spec, false, [false; 2])
}

/// Σ (−1)^{N−ν} g(N) with an Euler-transform tail estimate.
pub fn bilateral_alternating_sum<T: Real, G>(
    g: G,
    nu: Sector,
    spec: &MbSpec<T>,
) -> Result<(Complex<T>, Truncation<T>)>
where
    G: Fn(HalfInt) -> Complex<T> + Sync,
{
    bilateral_impl(|n| Ok(g(n)), nu, spec, true, [true; 2])
}

/// Fallible-summand variant used by kernels whose terms are themselves integrals.
/// `tail_alternates` gives, for the N → +∞ and N → −∞ ends, whether the signed
/// terms alternate there; it picks the tail model independently of `alternating`.
pub(crate) fn bilateral_sum_try<T: Real, G>(
    g: G,
    nu: Sector,
    spec: &MbSpec<T>,
    alternating: bool,
    tail_alternates: [bool; 2],
) -> Result<(Complex<T>, Truncation<T>)>
where
    G: Fn(HalfInt) -> Result<Complex<T>> + Sync,
{
    bilateral_impl(g, nu, spec, alternating, tail_alternates)
}
