//! Batch runner for identity checks.

use num_complex::Complex64;
use rayon::prelude::*;
use sfkit::identities::{evaluate_identity, sample_params, EvalSpec};

use crate::config::RunConfig;

/// One (identity, seed) outcome; evaluation errors become failing records.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub id: String,
    pub seed: u64,
    pub params: String,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub rel_residual: f64,
    pub n_used: usize,
    pub y_used: f64,
    pub est_tail: f64,
    pub elapsed_ms: u64,
    pub tolerance: f64,
    pub pass: bool,
    pub error: Option<String>,
}

fn nan() -> Complex64 {
    Complex64::new(f64::NAN, f64::NAN)
}

pub fn eval_spec(cfg: &RunConfig) -> EvalSpec {
    let mut spec = EvalSpec::default();
    if let Some(n) = cfg.n_max {
        spec.mb.n_max = n;
    }
    if let Some(y) = cfg.y_max {
        spec.mb.y_max = y;
    }
    spec.tolerance = cfg.tol;
    spec
}

fn run_one(id: &str, seed: u64, spec: &EvalSpec) -> Record {
    let failed = |params: String, err: String| Record {
        id: id.to_string(),
        seed,
        params,
        lhs: nan(),
        rhs: nan(),
        rel_residual: f64::NAN,
        n_used: 0,
        y_used: 0.0,
        est_tail: 0.0,
        elapsed_ms: 0,
        tolerance: spec.tolerance.unwrap_or(f64::NAN),
        pass: false,
        error: Some(err),
    };
    let params = match sample_params(id, seed) {
        Ok(p) => p,
        Err(e) => return failed(String::new(), e.to_string()),
    };
    match evaluate_identity(id, &params, spec) {
        Ok(r) => Record {
            id: r.id,
            seed,
            params: params.to_string(),
            lhs: r.lhs,
            rhs: r.rhs,
            rel_residual: r.rel_residual,
            n_used: r.truncation.n_used,
            y_used: r.truncation.y_used,
            est_tail: r.truncation.est_tail,
            elapsed_ms: r.elapsed_ms,
            tolerance: r.tolerance,
            pass: r.pass,
            error: None,
        },
        Err(e) => failed(params.to_string(), e.to_string()),
    }
}

/// Runs every (id, seed) pair on a pool of `cfg.jobs` threads; output is in
/// (id, seed) order whatever the completion order.
pub fn run(cfg: &RunConfig) -> Result<Vec<Record>, rayon::ThreadPoolBuildError> {
    let spec = eval_spec(cfg);
    let mut jobs: Vec<(&str, u64)> = cfg
        .ids
        .iter()
        .flat_map(|id| cfg.seeds.iter().map(move |s| (id.as_str(), *s)))
        .collect();
    jobs.sort();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    Ok(pool.install(|| jobs.par_iter().map(|(id, seed)| run_one(id, *seed, &spec)).collect()))
}
