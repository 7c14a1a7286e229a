//! Euler, q-, and complex-field gamma functions with their companions.

use num_complex::Complex;

use crate::scalar::cln1m;
use crate::{Error, Real, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

fn is_nonpositive_integer<T: Real>(z: Complex<T>) -> bool {
    z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round()
}

/// ln sin(πz), stable for large |Im z|.
fn ln_sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let pi = T::PI();
    let i = Complex::new(T::zero(), T::one());
    let half = T::lit(0.5).ln();
    if z.im >= T::zero() {
        let w = (i * z * (pi + pi)).exp();
        -i * z * pi + cln1m(w) + Complex::new(half, pi * T::lit(0.5))
    } else {
        let w = (-i * z * (pi + pi)).exp();
        i * z * pi + cln1m(w) + Complex::new(half, -pi * T::lit(0.5))
    }
}

fn ln_gamma_lanczos<T: Real>(z: Complex<T>) -> Complex<T> {
    let zm = z - T::one();
    let mut x = Complex::new(T::lit(LANCZOS[0]), T::zero());
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        x = x + Complex::new(T::lit(*c), T::zero()) / (zm + T::lit(k as f64));
    }
    let t = zm + T::lit(LANCZOS_G + 0.5);
    let half_ln_tau = T::lit(0.5) * T::two_pi().ln();
    (zm + T::lit(0.5)) * t.ln() - t + x.ln() + half_ln_tau
}

/// ln Γ(z) modulo 2πi.
pub fn ln_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonPositiveInteger);
    }
    if z.re < T::lit(0.5) {
        let one = Complex::new(T::one(), T::zero());
        Ok(Complex::new(T::PI().ln(), T::zero()) - ln_sin_pi(z) - ln_gamma_lanczos(one - z))
    } else {
        Ok(ln_gamma_lanczos(z))
    }
}

/// Γ(z) via the Lanczos approximation with reflection for Re z < 1/2.
pub fn euler_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonPositiveInteger);
    }
    if z.im == T::zero() && z.re > T::zero() && z.re == z.re.round() && z.re <= T::lit(20.0) {
        // Exact factorials for small positive integers.
        let mut acc = T::one();
        let mut k = T::lit(2.0);
        while k < z.re {
            acc = acc * k;
            k = k + T::one();
        }
        return Ok(Complex::new(acc, T::zero()));
    }
    Ok(ln_gamma(z)?.exp())
}

/// Two-sided Pochhammer symbol: a(a+1)…(a+n−1) for n > 0, 1/((a−1)…(a+n)) for n < 0.
pub fn pochhammer<T: Real>(a: Complex<T>, n: i64) -> Result<Complex<T>> {
    let mut acc = Complex::new(T::one(), T::zero());
    if n >= 0 {
        for k in 0..n {
            acc = acc * (a + T::lit(k as f64));
        }
        Ok(acc)
    } else {
        for k in 1..=(-n) {
            let f = a - T::lit(k as f64);
            if f.norm() == T::zero() {
                return Err(Error::DivisionByZero);
            }
            acc = acc * f;
        }
        Ok(acc.inv())
    }
}

/// Argument (x, n) of the complex-field gamma function, α = (n+ix)/2, α′ = (−n+ix)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldGammaArg<T> {
    pub x: Complex<T>,
    pub n: i64,
}

impl<T: Real> FieldGammaArg<T> {
    pub fn new(x: Complex<T>, n: i64) -> Self {
        Self { x, n }
    }

    pub fn alpha(&self) -> Complex<T> {
        (Complex::new(T::lit(self.n as f64), T::zero()) + Complex::new(-self.x.im, self.x.re))
            * T::lit(0.5)
    }

    pub fn alpha_prime(&self) -> Complex<T> {
        (Complex::new(T::lit(-self.n as f64), T::zero()) + Complex::new(-self.x.im, self.x.re))
            * T::lit(0.5)
    }

    /// Inverse of (alpha, alpha_prime); α − α′ must be an integer.
    pub fn from_alphas(alpha: Complex<T>, alpha_prime: Complex<T>) -> Result<Self> {
        let d = alpha - alpha_prime;
        let n = d.re.round();
        if (d - Complex::new(n, T::zero())).norm() > T::lit(1e-12) * T::one().max(d.norm()) {
            return Err(Error::InvalidParameters("alpha - alpha' is not an integer".into()));
        }
        // ix = α + α′
        let s = alpha + alpha_prime;
        let x = Complex::new(s.im, -s.re);
        Ok(Self {
            x,
            n: n.to_i64().expect("finite"),
        })
    }

    /// The pair (x₁+x₂, n₁+n₂), (x₁−x₂, n₁−n₂).
    pub fn pm(x1: Complex<T>, x2: Complex<T>, n1: i64, n2: i64) -> [Self; 2] {
        [Self::new(x1 + x2, n1 + n2), Self::new(x1 - x2, n1 - n2)]
    }
}

/// ln Γ(x, n) for real-valued n; only integral n gives the field gamma proper.
/// Returns None when 1−α′ sits on a pole of Γ (the function vanishes there).
pub fn ln_field_gamma_continuous<T: Real>(x: Complex<T>, n: T) -> Result<Option<Complex<T>>> {
    let ix = Complex::new(-x.im, x.re);
    let half = T::lit(0.5);
    let alpha = (ix + n) * half;
    let denom = Complex::new(T::one(), T::zero()) + (-ix + n) * half;
    if is_nonpositive_integer(alpha) {
        return Err(Error::PoleAtLatticePoint);
    }
    if is_nonpositive_integer(denom) {
        return Ok(None);
    }
    Ok(Some(ln_gamma(alpha)? - ln_gamma(denom)?))
}

/// ln Γ(x, n) modulo 2πi, together with the sign from the parity reduction.
/// None when the value is exactly zero.
pub fn ln_field_gamma<T: Real>(arg: FieldGammaArg<T>) -> Result<Option<Complex<T>>> {
    let n = arg.n.abs();
    let v = ln_field_gamma_continuous(arg.x, T::lit(n as f64))?;
    Ok(v.map(|l| {
        if arg.n < 0 && n % 2 == 1 {
            l + Complex::new(T::zero(), T::PI())
        } else {
            l
        }
    }))
}

/// Γ(x, n) = Γ((n+ix)/2)/Γ(1+(n−ix)/2). Negative n is reduced through Γ(x,−n) = (−1)^n Γ(x,n),
/// so only the true poles α ∈ Z≤0 (for |n|) are reported.
pub fn field_gamma<T: Real>(arg: FieldGammaArg<T>) -> Result<Complex<T>> {
    let n = arg.n.abs();
    let Some(l) = ln_field_gamma_continuous(arg.x, T::lit(n as f64))? else {
        return Ok(Complex::new(T::zero(), T::zero()));
    };
    let v = l.exp();
    Ok(if arg.n < 0 && n % 2 == 1 { -v } else { v })
}

/// Π field_gamma(args); the empty product is 1.
pub fn field_gamma_product<T: Real>(args: &[FieldGammaArg<T>]) -> Result<Complex<T>> {
    args.iter().try_fold(Complex::new(T::one(), T::zero()), |acc, a| {
        Ok(acc * field_gamma(*a)?)
    })
}

fn check_q<T: Real>(q: Complex<T>) -> Result<()> {
    if q.norm() < T::one() {
        Ok(())
    } else {
        Err(Error::ModulusNotLessThanOne)
    }
}

const POCHHAMMER_CAP: usize = 1_000_000;

/// ln (z; q)_∞ modulo 2πi; PoleHit when a factor vanishes exactly.
pub fn ln_q_pochhammer_inf<T: Real>(z: Complex<T>, q: Complex<T>) -> Result<Complex<T>> {
    check_q(q)?;
    let eps = T::lit(1e-17);
    let mut acc = Complex::new(T::zero(), T::zero());
    let mut w = z;
    for _ in 0..POCHHAMMER_CAP {
        if w.norm() < eps {
            return Ok(acc);
        }
        if w == Complex::new(T::one(), T::zero()) {
            return Err(Error::PoleHit);
        }
        acc = acc + cln1m(w);
        w = w * q;
    }
    Err(Error::NonConvergence(
        "q-Pochhammer product reached 10^6 factors".into(),
    ))
}

/// (z; q)_∞ = Π_{k≥0} (1 − z q^k).
pub fn q_pochhammer_inf<T: Real>(z: Complex<T>, q: Complex<T>) -> Result<Complex<T>> {
    match ln_q_pochhammer_inf(z, q) {
        Ok(l) => Ok(l.exp()),
        Err(Error::PoleHit) => Ok(Complex::new(T::zero(), T::zero())),
        Err(e) => Err(e),
    }
}

/// Γ_q(x) = (q;q)_∞ (1−q)^{1−x} / (q^x;q)_∞, principal branches throughout.
pub fn q_gamma<T: Real>(x: Complex<T>, q: Complex<T>) -> Result<Complex<T>> {
    check_q(q)?;
    if q.norm() == T::zero() {
        return Err(Error::InvalidParameters("q must be nonzero".into()));
    }
    let one = Complex::new(T::one(), T::zero());
    let qx = (x * q.ln()).exp();
    // Guard q^{x+k} = 1.
    let mut w = qx;
    for _ in 0..POCHHAMMER_CAP {
        if w.norm() < T::lit(1e-17) {
            break;
        }
        if (one - w).norm() < T::lit(1e-14) {
            return Err(Error::PoleAtQLattice);
        }
        w = w * q;
    }
    let num = ln_q_pochhammer_inf(q, q)?;
    let den = ln_q_pochhammer_inf(qx, q)?;
    let pow = (one - x) * cln1m(q);
    Ok((num + pow - den).exp())
}

/// η(τ) = e^{iπτ/12} (e^{2πiτ}; e^{2πiτ})_∞.
pub fn dedekind_eta<T: Real>(tau: Complex<T>) -> Result<Complex<T>> {
    if !(tau.im > T::zero()) {
        return Err(Error::NotInUpperHalfPlane);
    }
    let i = Complex::new(T::zero(), T::one());
    let q = (i * tau * T::two_pi()).exp();
    let l = ln_q_pochhammer_inf(q, q)?;
    Ok((i * tau * (T::PI() / T::lit(12.0)) + l).exp())
}

/// Exponent pair (α | α′) of the bracket power [z]^α = z^α z̄^{α′}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketExponent<T> {
    pub alpha: Complex<T>,
    pub alpha_prime: Complex<T>,
}

impl<T: Real> BracketExponent<T> {
    pub fn new(alpha: Complex<T>, alpha_prime: Complex<T>) -> Result<Self> {
        let e = Self { alpha, alpha_prime };
        e.n()?;
        Ok(e)
    }

    /// n_α = α − α′.
    pub fn n(&self) -> Result<i64> {
        let d = self.alpha - self.alpha_prime;
        let n = d.re.round();
        if (d - Complex::new(n, T::zero())).norm() > T::lit(1e-12) * T::one().max(d.norm()) {
            return Err(Error::InvalidParameters("alpha - alpha' must be an integer".into()));
        }
        Ok(n.to_i64().expect("finite"))
    }

    /// (α+s | α′+s).
    pub fn shift(&self, s: Complex<T>) -> Self {
        Self {
            alpha: self.alpha + s,
            alpha_prime: self.alpha_prime + s,
        }
    }
}

impl<T: Real> std::ops::Add for BracketExponent<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            alpha: self.alpha + o.alpha,
            alpha_prime: self.alpha_prime + o.alpha_prime,
        }
    }
}

/// [z]^α = |z|^{2α′} z^{n_α}.
pub fn bracket_power<T: Real>(z: Complex<T>, e: BracketExponent<T>) -> Result<Complex<T>> {
    let n = e.n()?;
    let r = z.norm();
    if r == T::zero() {
        let eff = (e.alpha + e.alpha_prime).re;
        return if eff > T::zero() {
            Ok(Complex::new(T::zero(), T::zero()))
        } else {
            Err(Error::ZeroBase)
        };
    }
    let modulus = (e.alpha_prime * (r.ln() * T::lit(2.0))).exp();
    Ok(modulus * z.powi(n as i32))
}

/// Γ(α | α′) = Γ(α)/Γ(1−α′) for a bracket exponent.
pub fn field_gamma_bracket<T: Real>(e: BracketExponent<T>) -> Result<Complex<T>> {
    field_gamma(FieldGammaArg::from_alphas(e.alpha, e.alpha_prime)?)
}
