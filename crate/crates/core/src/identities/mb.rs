//! Mellin–Barnes sum-integrals Σ_N ∫ Π Γ(c ± y, m ± N) dy over the real y axis.

use std::cell::RefCell;

use crate::gamma::{ln_field_gamma, ln_field_gamma_continuous, FieldGammaArg};
use crate::numerics::{bilateral_sum_try, integrate_interval, HalfInt, MbSpec, QuadratureSpec, Sector, Truncation};
use crate::{Error, Result, C64};

/// Γ(c + y_sign·y, m + n_sign·N).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldFactor {
    pub c: C64,
    pub y_sign: f64,
    pub m: HalfInt,
    pub n_sign: i64,
}

impl FieldFactor {
    pub fn new(c: C64, y_sign: f64, m: HalfInt, n_sign: i64) -> Self {
        Self { c, y_sign, m, n_sign }
    }

    /// The pair Γ(c + y, m + N) Γ(c − y, m − N).
    pub fn pm(c: C64, m: HalfInt) -> [Self; 2] {
        [Self::new(c, 1.0, m, 1), Self::new(c, -1.0, m, -1)]
    }
}

/// Σ_{N∈Z+ν} [(−1)^{N−ν}] ∫ [(y²+N²)] Π factors dy.
#[derive(Debug, Clone, PartialEq)]
pub struct MbKernel {
    pub factors: Vec<FieldFactor>,
    pub weighted: bool,
    pub alternating: bool,
    pub nu: Sector,
    /// Sector whose symmetric label window is summed; N = label − window.ν + ν.
    pub window: Sector,
    /// Contour y ∈ ℝ − i·shift.
    pub shift: f64,
}

const PINCH_MARGIN: f64 = 1e-3;
const TAIL_FIT: f64 = 0.9;
const Y_PER_LABEL: f64 = 8.0;

impl MbKernel {
    pub fn new(factors: Vec<FieldFactor>, nu: Sector) -> Self {
        Self {
            factors,
            weighted: false,
            alternating: false,
            nu,
            window: nu,
            shift: 0.0,
        }
    }

    pub fn weighted(mut self) -> Self {
        self.weighted = true;
        self
    }

    pub fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    /// Decay exponent p of the y-integrand, |F| ~ |y|^{−p}.
    pub fn tail_exponent(&self) -> f64 {
        let s: f64 = self.factors.iter().map(|f| 1.0 + f.c.im).sum();
        if self.weighted {
            s - 2.0
        } else {
            s
        }
    }

    /// Every pole sequence must stay on its own side of the contour by the margin.
    /// Each factor reaches discrete index 0 somewhere in the sum, so its nearest
    /// pole sits at y = ∓c; on the shifted contour that needs Im c − y_sign·shift < −margin.
    pub fn pinch_guard(&self) -> Result<()> {
        for f in &self.factors {
            let eff = f.c.im - f.y_sign * self.shift;
            if eff >= -PINCH_MARGIN {
                return Err(Error::ContourPinch(format!(
                    "pole of Γ({} {} y, ·) within {PINCH_MARGIN} of the contour",
                    f.c,
                    if f.y_sign > 0.0 { "+" } else { "-" }
                )));
            }
        }
        Ok(())
    }

    /// Γ(x, −n) = (−1)^n Γ(x, n): every factor whose index runs to −∞ adds a sign
    /// (−1)^N to the terms, on top of the explicit alternation.
    fn tail_alternates(&self) -> [bool; 2] {
        let down = |s: i64| self.factors.iter().filter(|f| f.n_sign == s).count() % 2 == 1;
        [down(-1) != self.alternating, down(1) != self.alternating]
    }

    fn in_sector(&self, f: &FieldFactor) -> bool {
        f.m.sector() == self.nu
    }

    fn label_to_n(&self, label: HalfInt) -> HalfInt {
        label - self.window.nu() + self.nu.nu()
    }

    /// ln of the product of factors at (y, N); None when some factor vanishes.
    fn ln_integrand(&self, y: C64, n: HalfInt) -> Result<Option<C64>> {
        let mut acc = C64::new(0.0, 0.0);
        for f in &self.factors {
            let x = f.c + y * f.y_sign;
            let idx = f.m + if f.n_sign > 0 { n } else { -n };
            let v = match idx.to_int() {
                Some(k) if self.in_sector(f) => ln_field_gamma(FieldGammaArg::new(x, k))?,
                _ => ln_field_gamma_continuous(x, idx.to_f64())?,
            };
            match v {
                Some(l) => acc += l,
                None => return Ok(None),
            }
        }
        Ok(Some(acc))
    }

    fn integrand(&self, y: C64, n: HalfInt) -> Result<C64> {
        let Some(l) = self.ln_integrand(y, n)? else {
            return Ok(C64::new(0.0, 0.0));
        };
        let mut v = l.exp();
        if self.weighted {
            let nn = n.to_f64();
            v *= y * y + nn * nn;
        }
        Ok(v)
    }

    /// ∫ F(y, N) dy for one label, with power-law tails beyond ±y_max.
    fn line_integral(&self, n: HalfInt, spec: &MbSpec<f64>, quad: &QuadratureSpec<f64>) -> Result<(C64, f64)> {
        let shift = C64::new(0.0, -self.shift);
        let err: RefCell<Option<Error>> = RefCell::new(None);
        let f = |tau: f64| {
            let y = C64::new(tau.sinh(), 0.0) + shift;
            match self.integrand(y, n) {
                Ok(v) => v * tau.cosh(),
                Err(e) => {
                    err.borrow_mut().get_or_insert(e);
                    C64::new(0.0, 0.0)
                }
            }
        };
        // The y-decay only sets in once |y| ≫ |N|.
        let y_max = spec.y_max.max(Y_PER_LABEL * n.to_f64().abs());
        let tmax = y_max.asinh();
        let est = integrate_interval(f, -tmax, tmax, quad);
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        let mut value = est?.value;
        let p = self.tail_exponent();
        let mut tail_est = 0.0;
        if p > 1.0 {
            for side in [1.0, -1.0] {
                let y1 = C64::new(side * y_max, 0.0) + shift;
                let y0 = C64::new(side * TAIL_FIT * y_max, 0.0) + shift;
                let f1 = self.integrand(y1, n)?;
                let f0 = self.integrand(y0, n)?;
                // F ~ C|y|^λ with complex λ: the split kernels carry a |y|^{iω} phase.
                let mut lambda = C64::new(-p, 0.0);
                if f0.norm() > 0.0 && f1.norm() > 0.0 {
                    let fit = (f1 / f0).ln() / (1.0 / TAIL_FIT).ln();
                    if (fit.re + p).abs() < 0.5 {
                        lambda = fit;
                    }
                }
                let tail = -f1 * y_max / (lambda + 1.0);
                tail_est += tail.norm();
                if spec.tail_correction {
                    value += tail;
                }
            }
        }
        Ok((value, tail_est))
    }

    /// Evaluates the sum-integral; the per-label terms run in parallel.
    pub fn evaluate(&self, spec: &MbSpec<f64>) -> Result<(C64, Truncation<f64>)> {
        spec.validate()?;
        self.pinch_guard()?;
        let p = self.tail_exponent();
        if p <= 1.0 {
            return Err(Error::InvalidParameters(format!(
                "integrand decays like |y|^-{p:.3}, not integrable"
            )));
        }
        let first = self.window.nu();
        let head_spec = QuadratureSpec {
            abs_tol: 0.0,
            rel_tol: 1e-11,
            max_subdivisions: 4000,
            panel_order: 21,
        };
        let (head, head_tail) = self.line_integral(self.label_to_n(first), spec, &head_spec)?;
        let quad = QuadratureSpec {
            abs_tol: 1e-11 * head.norm(),
            rel_tol: 1e-10,
            max_subdivisions: 4000,
            panel_order: 21,
        };
        let y_tails = std::sync::Mutex::new(Vec::new());
        let term = |label: HalfInt| -> Result<C64> {
            let (v, t) = if label == first {
                (head, head_tail)
            } else {
                self.line_integral(self.label_to_n(label), spec, &quad)?
            };
            y_tails.lock().expect("poisoned").push((label, t));
            Ok(v)
        };
        let tail_alternates = self.tail_alternates();
        let sum_spec = MbSpec {
            tail_exponent: p - 1.0,
            ..*spec
        };
        let sum_spec = if tail_alternates.contains(&false) && sum_spec.tail_exponent <= 1.0 {
            MbSpec {
                tail_correction: false,
                ..sum_spec
            }
        } else {
            sum_spec
        };
        let (value, trunc) = bilateral_sum_try(term, self.window, &sum_spec, self.alternating, tail_alternates)?;
        let mut tails = y_tails.into_inner().expect("poisoned");
        tails.sort_by_key(|(l, _)| *l);
        let y_tail: f64 = tails.iter().map(|(_, t)| t).sum();
        Ok((
            value,
            Truncation {
                n_used: trunc.n_used,
                y_used: spec.y_max.max(Y_PER_LABEL * (spec.n_max as f64 + 1.0)),
                est_tail: trunc.est_tail + y_tail,
            },
        ))
    }
}
