use std::cell::RefCell;

use num_complex::Complex;

use super::quadrature::{integrate_interval_l1, Estimate, QuadratureSpec};
use crate::scalar::is_finite;
use crate::{Error, Real, Result};

/// Integration window for ∫_C f d²w: a disc of `radius` around `center`, polar
/// patches of `patch_radius` around each declared singular point, and an exact
/// power-law substitution for the exterior of the disc.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWindow<T> {
    pub center: Complex<T>,
    pub radius: T,
    pub patch_radius: T,
    pub singular_points: Vec<Complex<T>>,
}

impl<T: Real> PlaneWindow<T> {
    /// Window of radius 8 around the centroid of the singular points, patches 0.25.
    pub fn around(singular_points: Vec<Complex<T>>) -> Self {
        let n = T::lit(singular_points.len().max(1) as f64);
        let center = singular_points
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |a, z| a + z)
            / n;
        Self {
            center,
            radius: T::lit(8.0),
            patch_radius: T::lit(0.25),
            singular_points,
        }
    }
}

fn smooth_step<T: Real>(t: T) -> T {
    if t > T::zero() {
        (-T::one() / t).exp()
    } else {
        T::zero()
    }
}

/// C^∞ cutoff: 1 on [0, 1/2], 0 on [1, ∞).
fn bump<T: Real>(s: T) -> T {
    let a = smooth_step(T::one() - s);
    let b = smooth_step(s - T::lit(0.5));
    if a + b == T::zero() {
        T::zero()
    } else {
        a / (a + b)
    }
}

const PROBE_ANGLES: [f64; 4] = [0.3, 1.9, 3.4, 5.0];

/// Average slope of ln|f| against ln r along rays from `origin`; None when f vanishes there.
fn probe_exponent<T: Real, F: Fn(Complex<T>) -> Complex<T>>(
    f: &F,
    origin: Complex<T>,
    r1: T,
    r2: T,
) -> Option<T> {
    let mut acc = T::zero();
    let mut count = 0;
    for th in PROBE_ANGLES {
        let e = Complex::from_polar(T::one(), T::lit(th));
        let f1 = f(origin + e * r1).norm();
        let f2 = f(origin + e * r2).norm();
        if f1 > T::zero() && f2 > T::zero() && f1.is_finite() && f2.is_finite() {
            acc = acc + (f2 / f1).ln() / (r2 / r1).ln();
            count += 1;
        }
    }
    (count > 0).then(|| acc / T::lit(count as f64))
}

fn polar_integral<T: Real, R, G>(
    radial: R,
    angular: G,
    s_range: (T, T),
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>>
where
    R: Fn(T) -> (T, T),
    G: Fn(T, T) -> Complex<T>,
{
    // radial(s) -> (r, dr/ds); angular(r, θ) is the integrand at that point.
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let inner_spec = QuadratureSpec {
        abs_tol: T::zero(),
        rel_tol: spec.rel_tol * T::lit(0.1),
        ..*spec
    };
    let tau = T::two_pi();
    let outer = |s: T| -> Complex<T> {
        if failure.borrow().is_some() {
            return Complex::new(T::zero(), T::zero());
        }
        let (r, jac) = radial(s);
        if r == T::zero() || jac == T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        match integrate_interval_l1(|th: T| angular(r, th), T::zero(), tau, &inner_spec) {
            Ok(est) => est.value * (r * jac),
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                Complex::new(T::zero(), T::zero())
            }
        }
    };
    let est = integrate_interval_l1(outer, s_range.0, s_range.1, spec);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    est
}

/// ∫_C f(w) d²w with polar refinement at the declared singular points and a
/// power-law substitution beyond the window; local decay exponents are probed numerically.
pub fn integrate_plane<T: Real, F>(
    f: F,
    window: &PlaneWindow<T>,
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>>
where
    F: Fn(Complex<T>) -> Complex<T>,
{
    spec.validate()?;
    let pts = &window.singular_points;
    let mut rho = window.patch_radius;
    for (i, a) in pts.iter().enumerate() {
        for b in pts.iter().skip(i + 1) {
            rho = rho.min(T::lit(0.45) * (*a - *b).norm());
        }
        if (*a - window.center).norm() + rho >= window.radius {
            return Err(Error::InvalidParameters(
                "singular point patch leaves the integration window".into(),
            ));
        }
    }
    if !(rho > T::zero()) {
        return Err(Error::InvalidParameters("coincident singular points".into()));
    }
    let n_regions = T::lit((pts.len() + 2) as f64);
    let region_spec = QuadratureSpec {
        abs_tol: spec.abs_tol / n_regions,
        ..*spec
    };
    let checked = |w: Complex<T>| -> Complex<T> {
        let v = f(w);
        if is_finite(v) {
            v
        } else {
            Complex::new(T::nan(), T::nan())
        }
    };
    let mut value = Complex::new(T::zero(), T::zero());
    let mut err = T::zero();

    for &z in pts {
        let lambda = probe_exponent(&checked, z, rho * T::lit(1e-2), rho * T::lit(1e-3))
            .unwrap_or(T::zero());
        if lambda <= T::lit(-2.0 + 1e-2) {
            return Err(Error::NonIntegrableSingularity(format!("{z:?}")));
        }
        let m = (T::lit(2.0) / (lambda + T::lit(2.0))).max(T::one()).min(T::lit(200.0));
        let r_min = rho.min(T::lit(1e-5) * (z.norm() + rho));
        let est = polar_integral(
            |s: T| (rho * s.powf(m), rho * m * s.powf(m - T::one())),
            |r: T, th: T| {
                // below r_min, z + r e^{iθ} loses the offset to rounding; extend the local
                // (complex) power law fitted along the ray
                if r < r_min {
                    let e = Complex::from_polar(T::one(), th);
                    let f1 = checked(z + e * r_min);
                    let f2 = checked(z + e * (r_min * T::lit(2.0)));
                    let mu = (f2 / f1).ln() / T::lit(2.0).ln();
                    f1 * (mu * (r / r_min).ln()).exp()
                } else {
                    let w = z + Complex::from_polar(r, th);
                    checked(w) * bump(r / rho)
                }
            },
            (T::zero(), T::one()),
            &region_spec,
        )?;
        value = value + est.value;
        err = err + est.err_est;
    }

    let c = window.center;
    let big_r = window.radius;
    let est = polar_integral(
        |s: T| (s, T::one()),
        |r: T, th: T| {
            let w = c + Complex::from_polar(r, th);
            let mut weight = T::one();
            for &z in pts {
                weight = weight - bump((w - z).norm() / rho);
            }
            if weight == T::zero() {
                Complex::new(T::zero(), T::zero())
            } else {
                checked(w) * weight
            }
        },
        (T::zero(), big_r),
        &region_spec,
    )?;
    value = value + est.value;
    err = err + est.err_est;

    if let Some(lambda) =
        probe_exponent(&checked, c, big_r * T::lit(4.0), big_r * T::lit(16.0))
    {
        if lambda >= T::lit(-2.0 - 1e-2) {
            return Err(Error::NonIntegrableSingularity("infinity".into()));
        }
        let kappa = -(lambda + T::lit(2.0));
        let m = (T::lit(2.0) / kappa).max(T::lit(0.25)).min(T::lit(8.0));
        let est = polar_integral(
            |s: T| {
                let r = big_r * s.powf(-m);
                (r, big_r * m * s.powf(-m - T::one()))
            },
            |r: T, th: T| checked(c + Complex::from_polar(r, th)),
            (T::zero(), T::one()),
            &region_spec,
        )?;
        value = value + est.value;
        err = err + est.err_est;
    }
    Ok(Estimate {
        value,
        err_est: err,
    })
}
