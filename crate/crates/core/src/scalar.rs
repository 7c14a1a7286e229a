use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display};

/// Real scalar the numerical engine is written against.
pub trait Real:
    Float + FloatConst + FromPrimitive + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an f64 literal; exact for f64, rounded for narrower types.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    fn two_pi() -> Self {
        Self::TAU()
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub(crate) fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// e^z − 1 without cancellation for small |z|.
pub(crate) fn cexpm1<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let s = (z.im * half).sin();
    let re = z.re.exp_m1() * z.im.cos() - T::lit(2.0) * s * s;
    let im = z.re.exp() * z.im.sin();
    Complex::new(re, im)
}

/// ln(1 − w), accurate for small |w|.
pub(crate) fn cln1m<T: Real>(w: Complex<T>) -> Complex<T> {
    if w.norm() < T::lit(1e-3) {
        // −Σ w^k/k, six terms suffice below 1e-3.
        let mut acc = Complex::new(T::zero(), T::zero());
        let mut p = w;
        for k in 1..=6 {
            acc = acc - p / T::lit(k as f64);
            p = p * w;
        }
        acc
    } else {
        (Complex::new(T::one(), T::zero()) - w).ln()
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum<T: Real> {
    sum: Complex<T>,
    comp: Complex<T>,
}

impl<T: Real> KahanSum<T> {
    pub(crate) fn new() -> Self {
        Self {
            sum: Complex::new(T::zero(), T::zero()),
            comp: Complex::new(T::zero(), T::zero()),
        }
    }

    fn step(sum: T, comp: &mut T, x: T) -> T {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            *comp = *comp + ((sum - t) + x);
        } else {
            *comp = *comp + ((x - t) + sum);
        }
        t
    }

    pub(crate) fn add(&mut self, x: Complex<T>) {
        self.sum.re = Self::step(self.sum.re, &mut self.comp.re, x.re);
        self.sum.im = Self::step(self.sum.im, &mut self.comp.im, x.im);
    }

    pub(crate) fn value(&self) -> Complex<T> {
        self.sum + self.comp
    }
}
