//! Registry of integral identities with seeded samplers and a single verification entry point.

mod complex_ids;
mod elliptic_ids;
mod hyperbolic_ids;
mod mb;
mod plane_ids;
mod sampling;

use std::fmt;
use std::time::Instant;

pub use complex_ids::str_mb_shift_image;
pub use hyperbolic_ids::hyperbolic_line_integral;
pub use mb::{FieldFactor, MbKernel};

use crate::elliptic::EllipticBase;
use crate::gamma::BracketExponent;
use crate::hyperbolic::ModularPair;
use crate::numerics::{HalfInt, MbSpec, QuadratureSpec, Sector, Truncation};
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    HyperbolicLine,
    ComplexMb,
    ComplexPlane,
    EllipticCircle,
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityKind::HyperbolicLine => "hyperbolic-line",
            IdentityKind::ComplexMb => "complex-MB",
            IdentityKind::ComplexPlane => "complex-plane",
            IdentityKind::EllipticCircle => "elliptic-circle",
        })
    }
}

/// Parameter shape of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arity {
    pub continuous: usize,
    pub discrete: usize,
    pub sector_rule: &'static str,
}

/// Parameters of Mellin–Barnes identities: a_k (or s_k then t_k), N_k (or N_k then M_k), ν.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMbParams {
    pub a: Vec<C64>,
    pub n: Vec<HalfInt>,
    pub nu: Sector,
}

/// Parameters of hyperbolic identities: g_k (or f_j then h_j) and the periods.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicParams {
    pub g: Vec<C64>,
    pub mp: ModularPair<f64>,
}

/// Exponents (α|α′), (β|β′), … and the points z_1, z_2, … of a plane integral.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneParams {
    pub exponents: Vec<BracketExponent<f64>>,
    pub z: Vec<C64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EllipticParams {
    pub t: Vec<C64>,
    pub base: EllipticBase<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    Hyperbolic(HyperbolicParams),
    ComplexMb(ComplexMbParams),
    Plane(PlaneParams),
    Elliptic(EllipticParams),
}

fn fmt_c(z: C64) -> String {
    format!("{:.17e}{:+.17e}i", z.re, z.im)
}

fn fmt_list(v: &[C64]) -> String {
    v.iter().map(|z| fmt_c(*z)).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Hyperbolic(p) => write!(
                f,
                "omega=[{},{}];g=[{}]",
                fmt_c(p.mp.omega1),
                fmt_c(p.mp.omega2),
                fmt_list(&p.g)
            ),
            Params::ComplexMb(p) => {
                let n: Vec<String> = p.n.iter().map(|x| x.to_string()).collect();
                write!(f, "nu={};a=[{}];N=[{}]", p.nu.nu(), fmt_list(&p.a), n.join(","))
            }
            Params::Plane(p) => {
                let e: Vec<String> = p
                    .exponents
                    .iter()
                    .map(|e| format!("({}|{})", fmt_c(e.alpha), fmt_c(e.alpha_prime)))
                    .collect();
                write!(f, "exponents=[{}];z=[{}]", e.join(","), fmt_list(&p.z))
            }
            Params::Elliptic(p) => write!(
                f,
                "p={};q={};t=[{}]",
                fmt_c(p.base.p),
                fmt_c(p.base.q),
                fmt_list(&p.t)
            ),
        }
    }
}

impl Params {
    pub fn as_complex_mb(&self) -> Result<&ComplexMbParams> {
        match self {
            Params::ComplexMb(p) => Ok(p),
            _ => Err(Error::InvalidParameters("expected Mellin-Barnes parameters".into())),
        }
    }

    pub fn as_hyperbolic(&self) -> Result<&HyperbolicParams> {
        match self {
            Params::Hyperbolic(p) => Ok(p),
            _ => Err(Error::InvalidParameters("expected hyperbolic parameters".into())),
        }
    }

    pub fn as_plane(&self) -> Result<&PlaneParams> {
        match self {
            Params::Plane(p) => Ok(p),
            _ => Err(Error::InvalidParameters("expected plane parameters".into())),
        }
    }

    pub fn as_elliptic(&self) -> Result<&EllipticParams> {
        match self {
            Params::Elliptic(p) => Ok(p),
            _ => Err(Error::InvalidParameters("expected elliptic parameters".into())),
        }
    }
}

/// Truncation and tolerance settings for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalSpec {
    pub mb: MbSpec<f64>,
    pub quad: QuadratureSpec<f64>,
    /// Replaces the descriptor tolerance for the pass/fail decision.
    pub tolerance: Option<f64>,
}

impl Default for EvalSpec {
    fn default() -> Self {
        Self {
            mb: MbSpec::default(),
            quad: QuadratureSpec::new(1e-14, 1e-10),
            tolerance: None,
        }
    }
}

/// Deliberate deviations used to check that an identity is sensitive to them.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvalOptions {
    /// Omit the sign prefactor ((−1)^L, (−1)^{2ν}, …) on the right side.
    pub drop_sign_factor: bool,
    /// Sum the transformed kernel over this sector instead of the one the sector rule picks.
    pub force_sector: Option<Sector>,
    /// Use 1/(4π²) in place of 1/(8π) on the left of the de Branges–Wilson analogue.
    pub alt_normalization: bool,
    /// Contour y ∈ ℝ − i·shift for Mellin–Barnes kernels; 0 selects 1e-2 automatically
    /// when some continuous parameter is real.
    pub contour_shift: f64,
    /// Label window for the left-hand sum (see [`MbKernel::window`]).
    pub window_sector: Option<Sector>,
}

/// One side of an identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideValue {
    pub value: C64,
    pub trunc: Truncation<f64>,
}

impl SideValue {
    pub(crate) fn exact(value: C64) -> Self {
        Self {
            value,
            trunc: Truncation {
                n_used: 0,
                y_used: 0.0,
                est_tail: 0.0,
            },
        }
    }
}

type Builder = fn(&Params, &EvalSpec, &EvalOptions) -> Result<SideValue>;
type Sampler = fn(&mut sampling::Draw) -> Result<Params>;
type Checker = fn(&Params) -> Result<()>;

/// A registered LHS = RHS identity.
#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub kind: IdentityKind,
    pub arity: Arity,
    pub balancing: &'static str,
    pub domain: &'static str,
    /// Nominal |y|^{−p} decay of the Mellin–Barnes integrand; per-draw values are recomputed.
    pub tail_exponent: Option<f64>,
    pub tolerance: f64,
    pub anchor: &'static str,
    pub(crate) lhs: Builder,
    pub(crate) rhs: Builder,
    pub(crate) sampler: Sampler,
    pub(crate) check: Checker,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("arity", &self.arity)
            .field("balancing", &self.balancing)
            .field("domain", &self.domain)
            .field("tail_exponent", &self.tail_exponent)
            .field("tolerance", &self.tolerance)
            .field("anchor", &self.anchor)
            .finish()
    }
}

impl IdentityDescriptor {
    /// Canonical one-line description, stable across builds; hashed by the CLI.
    pub fn canonical(&self) -> String {
        format!(
            "{}|{}|{}|{}|{}|{}|{}|{:?}|{:e}|{}",
            self.id,
            self.kind,
            self.arity.continuous,
            self.arity.discrete,
            self.arity.sector_rule,
            self.balancing,
            self.domain,
            self.tail_exponent,
            self.tolerance,
            self.anchor
        )
    }
}

pub const TOL_HYPERBOLIC: f64 = 1e-6;
pub const TOL_ELLIPTIC: f64 = 1e-8;
pub const TOL_MB: f64 = 1e-4;
pub const TOL_PLANE: f64 = 1e-3;

/// All registered identities in a fixed order.
pub fn registry() -> Vec<IdentityDescriptor> {
    let mut v = hyperbolic_ids::descriptors();
    v.extend(complex_ids::descriptors());
    v.extend(plane_ids::descriptors());
    v.extend(elliptic_ids::descriptors());
    v
}

pub fn lookup(id: &str) -> Result<IdentityDescriptor> {
    registry()
        .into_iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Deterministic draw for (id, seed); odd seeds use ν = 1/2 where a sector applies.
pub fn sample_params(id: &str, seed: u64) -> Result<Params> {
    sample_params_in(id, seed, None)
}

/// As [`sample_params`] with an explicit ν-sector.
pub fn sample_params_in(id: &str, seed: u64, sector: Option<Sector>) -> Result<Params> {
    let d = lookup(id)?;
    let mut draw = sampling::Draw::new(id, seed, sector);
    let p = (d.sampler)(&mut draw)?;
    (d.check)(&p)?;
    Ok(p)
}

/// Result of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub params: Params,
    pub lhs: C64,
    pub rhs: C64,
    pub rel_residual: f64,
    pub truncation: Truncation<f64>,
    pub elapsed_ms: u64,
    pub tolerance: f64,
    pub pass: bool,
}

/// |a − b| / max(|a|, |b|); 0 when both vanish.
pub fn rel_residual(a: C64, b: C64) -> f64 {
    let m = a.norm().max(b.norm());
    if m == 0.0 {
        0.0
    } else {
        (a - b).norm() / m
    }
}

pub fn evaluate_identity(id: &str, params: &Params, spec: &EvalSpec) -> Result<VerificationReport> {
    evaluate_identity_with(id, params, spec, &EvalOptions::default())
}

/// Evaluates both sides independently and compares them.
pub fn evaluate_identity_with(
    id: &str,
    params: &Params,
    spec: &EvalSpec,
    options: &EvalOptions,
) -> Result<VerificationReport> {
    let d = lookup(id)?;
    (d.check)(params)?;
    let start = Instant::now();
    let lhs = (d.lhs)(params, spec, options)?;
    let rhs = (d.rhs)(params, spec, options)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let rel = rel_residual(lhs.value, rhs.value);
    let tolerance = spec.tolerance.unwrap_or(d.tolerance);
    let truncation = Truncation {
        n_used: lhs.trunc.n_used.max(rhs.trunc.n_used),
        y_used: lhs.trunc.y_used.max(rhs.trunc.y_used),
        est_tail: lhs.trunc.est_tail + rhs.trunc.est_tail,
    };
    Ok(VerificationReport {
        id: id.to_string(),
        params: params.clone(),
        lhs: lhs.value,
        rhs: rhs.value,
        rel_residual: rel,
        truncation,
        elapsed_ms,
        tolerance,
        pass: rel.is_finite() && rel <= tolerance,
    })
}

pub(crate) fn check_sum(values: &[C64], target: C64, what: &str) -> Result<()> {
    let s: C64 = values.iter().sum();
    let scale = values.iter().map(|z| z.norm()).fold(1.0, f64::max);
    if (s - target).norm() > 1e-14 * scale * values.len() as f64 {
        return Err(Error::BalancingViolated(format!(
            "{what}: sum is {s}, expected {target}"
        )));
    }
    Ok(())
}
