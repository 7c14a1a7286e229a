//! `sweep`: degeneration-limit tables as CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use sfkit::hyperbolic::ModularPair;
use sfkit::limits::{
    elliptic_to_hyperbolic_ratio, eta_ratio_limit, limit_b_to_1, limit_b_to_i, limit_b_to_minus_i, DeltaSweep,
    EtaMode, DEFAULT_DELTAS, DEFAULT_VS, ETA_DELTAS,
};

use crate::config::{parse_complex, split_list, usage, UsageError};

pub const LIMITS: &[(&str, &str)] = &[
    ("b_to_i", "n x [deltas]"),
    ("b_to_minus_i", "n x [deltas]"),
    ("b_to_1", "n y [deltas]"),
    ("eta_ratio", "mode=b_to_i|b_to_1 [deltas]"),
    ("elliptic", "u omega1 omega2 [vs]"),
];

pub enum Outcome {
    Table(String),
    Failed(String),
}

struct Args(BTreeMap<String, String>);

impl Args {
    fn take(&mut self, key: &str) -> Option<String> {
        self.0.remove(key)
    }

    fn c(&mut self, key: &str, default: Option<Complex64>) -> Result<Complex64, UsageError> {
        match (self.take(key), default) {
            (Some(v), _) => parse_complex(&v),
            (None, Some(d)) => Ok(d),
            (None, None) => usage(format!("missing argument `{key}`")),
        }
    }

    fn int(&mut self, key: &str) -> Result<i64, UsageError> {
        match self.take(key) {
            Some(v) => v.parse().map_err(|_| UsageError(format!("`{key}` must be an integer"))),
            None => Ok(0),
        }
    }

    fn list(&mut self, key: &str, default: &[f64]) -> Result<Vec<f64>, UsageError> {
        match self.take(key) {
            None => Ok(default.to_vec()),
            Some(v) => split_list(&v)
                .iter()
                .map(|s| s.parse::<f64>().map_err(|_| UsageError(format!("bad {key} entry `{s}`"))))
                .collect(),
        }
    }

    fn done(self) -> Result<(), UsageError> {
        match self.0.keys().next() {
            Some(k) => usage(format!("unexpected argument `{k}`")),
            None => Ok(()),
        }
    }
}

pub fn table(s: &DeltaSweep) -> String {
    let mut out = String::from("delta,ratio_re,ratio_im,abs_err\n");
    for ((d, r), e) in s.observed.iter().zip(s.abs_errors()) {
        let _ = writeln!(out, "{d:?},{:?},{:?},{e:?}", r.re, r.im);
    }
    let _ = writeln!(out, "# fitted_order,{:?}", s.fitted_order);
    out
}

pub fn sweep(name: &str, map: BTreeMap<String, String>) -> Result<Outcome, UsageError> {
    let mut a = Args(map);
    let r = match name {
        "b_to_i" | "b_to_minus_i" => {
            let n = a.int("n")?;
            let x = a.c("x", Some(Complex64::new(0.0, -1.0)))?;
            let d = a.list("deltas", &DEFAULT_DELTAS)?;
            a.done()?;
            if name == "b_to_i" {
                limit_b_to_i(n, x, &d)
            } else {
                limit_b_to_minus_i(n, x, &d)
            }
        }
        "b_to_1" => {
            let n = a.int("n")?;
            let y = a.c("y", Some(Complex64::new(1.0, 0.0)))?;
            let d = a.list("deltas", &DEFAULT_DELTAS)?;
            a.done()?;
            limit_b_to_1(n, y, &d)
        }
        "eta_ratio" => {
            let mode = match a.take("mode").as_deref() {
                None | Some("b_to_i") => EtaMode::BToI,
                Some("b_to_1") => EtaMode::BTo1,
                Some(m) => return usage(format!("unknown mode `{m}`")),
            };
            let d = a.list("deltas", &ETA_DELTAS)?;
            a.done()?;
            eta_ratio_limit(mode, &d)
        }
        "elliptic" => {
            let w1 = a.c("omega1", Some(Complex64::new(1.0, 0.0)))?;
            let w2 = a.c("omega2", Some(Complex64::new(1.3, 0.0)))?;
            let u = a.c("u", Some((w1 + w2) / 2.0))?;
            let vs = a.list("vs", &DEFAULT_VS)?;
            a.done()?;
            ModularPair::new(w1, w2).and_then(|mp| elliptic_to_hyperbolic_ratio(u, &mp, &vs))
        }
        other => return usage(format!("unknown limit `{other}`")),
    };
    Ok(match r {
        Ok(s) => Outcome::Table(table(&s)),
        // a bad grid is the caller's fault
        Err(e @ (sfkit::Error::InvalidParameters(_) | sfkit::Error::InsufficientSamples { .. })) => {
            return usage(e.to_string())
        }
        Err(e) => Outcome::Failed(e.to_string()),
    })
}
