use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex;

use crate::scalar::{is_finite, KahanSum};
use crate::{Error, Real, Result};

const XGK15: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK15: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG7: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const XGK21: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];
const WGK21: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208643474262,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
const WG10: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Tolerances and budget for adaptive Gauss–Kronrod integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_subdivisions: usize,
    /// Kronrod node count: 15 or 21.
    pub panel_order: usize,
}

impl<T: Real> Default for QuadratureSpec<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::zero(),
            rel_tol: T::lit(1e-10),
            max_subdivisions: 2000,
            panel_order: 15,
        }
    }
}

impl<T: Real> QuadratureSpec<T> {
    pub fn new(abs_tol: T, rel_tol: T) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol >= T::zero() && self.rel_tol >= T::zero())
            || self.abs_tol + self.rel_tol <= T::zero()
        {
            return Err(Error::InvalidParameters(
                "abs_tol + rel_tol must be positive".into(),
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidParameters(
                "max_subdivisions must be at least 1".into(),
            ));
        }
        if self.panel_order != 15 && self.panel_order != 21 {
            return Err(Error::InvalidParameters(format!(
                "unsupported panel order {}",
                self.panel_order
            )));
        }
        Ok(())
    }
}

/// Integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: Complex<T>,
    pub err_est: T,
}

/// One parametrized piece of a contour: ∫_a^b f(s) ds, with the Jacobian folded into f.
pub(crate) struct Piece<'a, T> {
    pub f: Box<dyn Fn(T) -> Complex<T> + 'a>,
    pub a: T,
    pub b: T,
}

struct Panel<T> {
    piece: usize,
    a: T,
    b: T,
    value: Complex<T>,
    err: T,
    resabs: T,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: Real> Eq for Panel<T> {}
impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .partial_cmp(&other.err)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.piece.cmp(&self.piece))
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

fn gk_rule(order: usize) -> (&'static [f64], &'static [f64], &'static [f64]) {
    if order == 21 {
        (&XGK21, &WGK21, &WG10)
    } else {
        (&XGK15, &WGK15, &WG7)
    }
}

fn gk_panel<T: Real>(
    f: &dyn Fn(T) -> Complex<T>,
    a: T,
    b: T,
    order: usize,
) -> Result<(Complex<T>, T, T)> {
    let (xgk, wgk, wg) = gk_rule(order);
    let half = T::lit(0.5);
    let center = half * (a + b);
    let h = half * (b - a);
    let n = xgk.len();
    let mut fv = Vec::with_capacity(2 * n - 1);
    let eval = |x: T| -> Result<Complex<T>> {
        let v = f(x);
        if is_finite(v) {
            Ok(v)
        } else {
            Err(Error::SingularOnContour(format!("{x:?}")))
        }
    };
    let fc = eval(center)?;
    let mut kron = fc * T::lit(wgk[n - 1]);
    // Gauss centre weight only for the odd-point Gauss rule.
    let mut gauss = if order == 15 {
        fc * T::lit(wg[wg.len() - 1])
    } else {
        Complex::new(T::zero(), T::zero())
    };
    let mut resabs = fc.norm() * T::lit(wgk[n - 1]);
    for j in 0..n - 1 {
        let dx = h * T::lit(xgk[j]);
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        kron = kron + (f1 + f2) * T::lit(wgk[j]);
        resabs = resabs + (f1.norm() + f2.norm()) * T::lit(wgk[j]);
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * T::lit(wg[j / 2]);
        }
        fv.push((f1, f2));
    }
    let mean = kron * half;
    let mut resasc = (fc - mean).norm() * T::lit(wgk[n - 1]);
    for (j, (f1, f2)) in fv.iter().enumerate() {
        resasc = resasc + ((*f1 - mean).norm() + (*f2 - mean).norm()) * T::lit(wgk[j]);
    }
    let habs = h.abs();
    let value = kron * h;
    let resabs = resabs * habs;
    let resasc = resasc * habs;
    let mut err = ((kron - gauss) * h).norm();
    if resasc != T::zero() && err != T::zero() {
        let r = (T::lit(200.0) * err / resasc).powf(T::lit(1.5));
        err = resasc * if r < T::one() { r } else { T::one() };
    }
    let floor = T::lit(50.0) * T::epsilon() * resabs;
    if resabs > T::min_positive_value() / (T::lit(50.0) * T::epsilon()) && floor > err {
        err = floor;
    }
    Ok((value, err, resabs))
}

/// Globally adaptive integration over several pieces sharing one error budget.
pub(crate) fn integrate_pieces<T: Real>(
    pieces: &[Piece<'_, T>],
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>> {
    integrate_pieces_with(pieces, spec, false)
}

/// As [`integrate_pieces`]; with `l1` the relative tolerance applies to ∫|f|
/// instead of |∫f|, which keeps heavily cancelling integrals affordable.
pub(crate) fn integrate_pieces_with<T: Real>(
    pieces: &[Piece<'_, T>],
    spec: &QuadratureSpec<T>,
    l1: bool,
) -> Result<Estimate<T>> {
    spec.validate()?;
    let mut heap = BinaryHeap::new();
    let mut done: Vec<Panel<T>> = Vec::new();
    let mut total_err = T::zero();
    for (k, p) in pieces.iter().enumerate() {
        let (value, err, resabs) = gk_panel(&*p.f, p.a, p.b, spec.panel_order)?;
        total_err = total_err + err;
        heap.push(Panel {
            piece: k,
            a: p.a,
            b: p.b,
            value,
            err,
            resabs,
        });
    }
    let total = |heap: &BinaryHeap<Panel<T>>, done: &[Panel<T>]| -> Complex<T> {
        let mut acc = KahanSum::new();
        let mut all: Vec<&Panel<T>> = heap.iter().chain(done.iter()).collect();
        all.sort_by(|x, y| {
            x.piece
                .cmp(&y.piece)
                .then(x.a.partial_cmp(&y.a).unwrap_or(Ordering::Equal))
        });
        for p in all {
            acc.add(p.value);
        }
        acc.value()
    };
    let mut splits = 0usize;
    loop {
        let value = total(&heap, &done);
        let scale = if l1 {
            heap.iter()
                .chain(done.iter())
                .fold(T::zero(), |s, p| s + p.resabs)
        } else {
            value.norm()
        };
        let tol = spec.abs_tol.max(spec.rel_tol * scale);
        // Recompute the error sum to avoid drift from repeated updates.
        total_err = heap
            .iter()
            .chain(done.iter())
            .fold(T::zero(), |s, p| s + p.err);
        if total_err <= tol {
            return Ok(Estimate {
                value,
                err_est: total_err,
            });
        }
        let Some(worst) = heap.pop() else {
            return Err(Error::NonConvergence(format!(
                "panels exhausted with error {total_err:?} above tolerance {tol:?}"
            )));
        };
        if splits >= spec.max_subdivisions {
            return Err(Error::NonConvergence(format!(
                "subdivision budget {} exhausted, error {total_err:?} above tolerance {tol:?}",
                spec.max_subdivisions
            )));
        }
        let mid = T::lit(0.5) * (worst.a + worst.b);
        let width = (worst.b - worst.a).abs();
        let scale = worst.a.abs().max(worst.b.abs()).max(T::min_positive_value());
        if width <= T::lit(100.0) * T::epsilon() * scale {
            done.push(worst);
            continue;
        }
        let f = &*pieces[worst.piece].f;
        let (v1, e1, r1) = gk_panel(f, worst.a, mid, spec.panel_order)?;
        let (v2, e2, r2) = gk_panel(f, mid, worst.b, spec.panel_order)?;
        heap.push(Panel {
            piece: worst.piece,
            a: worst.a,
            b: mid,
            value: v1,
            err: e1,
            resabs: r1,
        });
        heap.push(Panel {
            piece: worst.piece,
            a: mid,
            b: worst.b,
            value: v2,
            err: e2,
            resabs: r2,
        });
        splits += 1;
    }
}

/// Adaptive integral of a complex-valued function over a real interval.
pub fn integrate_interval<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    a: T,
    b: T,
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>> {
    let piece = Piece {
        f: Box::new(f),
        a,
        b,
    };
    integrate_pieces(std::slice::from_ref(&piece), spec)
}

pub(crate) fn integrate_interval_l1<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    a: T,
    b: T,
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>> {
    let piece = Piece {
        f: Box::new(f),
        a,
        b,
    };
    integrate_pieces_with(std::slice::from_ref(&piece), spec, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// Semicircular detour of the given radius around a point on the line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Indentation<T> {
    pub center: Complex<T>,
    pub radius: T,
    pub side: Side,
}

/// Straight contour `anchor + direction·t`, finite (|t| ≤ half_length) or unbounded,
/// with optional semicircular indentations. "Above" is the left-hand side of the
/// direction of travel, i.e. the `+i·direction` side.
#[derive(Debug, Clone, PartialEq)]
pub struct LineContour<T> {
    pub anchor: Complex<T>,
    pub direction: Complex<T>,
    pub half_length: Option<T>,
    pub indentations: Vec<Indentation<T>>,
}

impl<T: Real> LineContour<T> {
    pub fn finite(anchor: Complex<T>, direction: Complex<T>, half_length: T) -> Self {
        Self {
            anchor,
            direction,
            half_length: Some(half_length),
            indentations: Vec::new(),
        }
    }

    pub fn unbounded(anchor: Complex<T>, direction: Complex<T>) -> Self {
        Self {
            anchor,
            direction,
            half_length: None,
            indentations: Vec::new(),
        }
    }

    /// Straight segment from `a` to `b`.
    pub fn segment(a: Complex<T>, b: Complex<T>) -> Self {
        let d = b - a;
        let len = d.norm();
        Self::finite((a + b) * T::lit(0.5), d / len, len * T::lit(0.5))
    }

    pub fn real_axis() -> Self {
        Self::unbounded(Complex::new(T::zero(), T::zero()), Complex::new(T::one(), T::zero()))
    }

    pub fn with_indentation(mut self, center: Complex<T>, radius: T, side: Side) -> Self {
        self.indentations.push(Indentation {
            center,
            radius,
            side,
        });
        self
    }

    pub fn point(&self, t: T) -> Complex<T> {
        self.anchor + self.direction * t
    }

    fn validate(&self) -> Result<Vec<(T, Indentation<T>)>> {
        let unit = self.direction.norm();
        if (unit - T::one()).abs() > T::lit(1e-12) {
            return Err(Error::InvalidParameters(
                "contour direction must have unit modulus".into(),
            ));
        }
        if let Some(h) = self.half_length {
            if !(h > T::zero()) {
                return Err(Error::InvalidParameters("half_length must be positive".into()));
            }
        }
        let mut cuts = Vec::new();
        for ind in &self.indentations {
            if !(ind.radius > T::zero()) {
                return Err(Error::InvalidParameters("indentation radius must be positive".into()));
            }
            let rel = (ind.center - self.anchor) / self.direction;
            let scale = T::one().max(rel.norm());
            if rel.im.abs() > T::lit(1e-10) * scale {
                return Err(Error::InvalidParameters(
                    "indentation centre is not on the contour line".into(),
                ));
            }
            if let Some(h) = self.half_length {
                if rel.re.abs() + ind.radius >= h {
                    return Err(Error::InvalidParameters(
                        "indentation reaches the contour end".into(),
                    ));
                }
            }
            cuts.push((rel.re, *ind));
        }
        cuts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(Ordering::Equal));
        for w in cuts.windows(2) {
            if w[0].0 + w[0].1.radius >= w[1].0 - w[1].1.radius {
                return Err(Error::InvalidParameters("indentations overlap".into()));
            }
        }
        Ok(cuts)
    }
}

/// Integral of `f` along a [`LineContour`]; unbounded ends use t = t0 ± s/(1−s).
pub fn integrate_line<T: Real, F: Fn(Complex<T>) -> Complex<T>>(
    f: F,
    contour: &LineContour<T>,
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>> {
    let cuts = contour.validate()?;
    let f = &f;
    let d = contour.direction;
    let one = T::one();
    let segment = move |a: T, b: T| Piece {
        f: Box::new(move |t: T| f(contour.point(t)) * d),
        a,
        b,
    };
    let right_tail = move |t0: T| Piece {
        f: Box::new(move |s: T| {
            let w = one - s;
            f(contour.point(t0 + s / w)) * d / (w * w)
        }),
        a: T::zero(),
        b: one,
    };
    let left_tail = move |t1: T| Piece {
        f: Box::new(move |s: T| {
            let w = one - s;
            f(contour.point(t1 - s / w)) * d / (w * w)
        }),
        a: T::zero(),
        b: one,
    };
    let arc = move |tc: T, ind: Indentation<T>| {
        let c = contour.point(tc);
        let r = ind.radius;
        let pi = T::PI();
        Piece {
            f: Box::new(move |s: T| {
                let (phi, sign) = match ind.side {
                    Side::Above => (pi - s, -one),
                    Side::Below => (s - pi, one),
                };
                let e = Complex::from_polar(one, phi);
                let w = c + d * e * r;
                f(w) * Complex::new(T::zero(), one) * d * e * r * sign
            }),
            a: T::zero(),
            b: pi,
        }
    };

    let mut pieces = Vec::new();
    let mut cursor: Option<T> = contour.half_length.map(|h| -h);
    for (tc, ind) in &cuts {
        let left = *tc - ind.radius;
        match cursor {
            Some(c) => pieces.push(segment(c, left)),
            None => pieces.push(left_tail(left)),
        }
        pieces.push(arc(*tc, *ind));
        cursor = Some(*tc + ind.radius);
    }
    match (cursor, contour.half_length) {
        (Some(c), Some(h)) => pieces.push(segment(c, h)),
        (Some(c), None) => pieces.push(right_tail(c)),
        (None, None) => {
            pieces.push(left_tail(T::zero()));
            pieces.push(right_tail(T::zero()));
        }
        (None, Some(_)) => unreachable!(),
    }
    integrate_pieces(&pieces, spec)
}
