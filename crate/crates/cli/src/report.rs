//! CSV and JSON report writers.

use std::fmt::Write as _;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use sfkit::identities::registry;

use crate::check::Record;
use crate::config::RunConfig;

pub const CSV_HEADER: &str =
    "identity,seed,lhs_re,lhs_im,rhs_re,rhs_im,rel_residual,n_used,y_used,elapsed_ms,pass";

/// Shortest round-trip rendering, so identical values print identically.
fn f(x: f64) -> String {
    format!("{x:?}")
}

pub fn csv(records: &[Record]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in records {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.id,
            r.seed,
            f(r.lhs.re),
            f(r.lhs.im),
            f(r.rhs.re),
            f(r.rhs.im),
            f(r.rel_residual),
            r.n_used,
            f(r.y_used),
            r.elapsed_ms,
            r.pass
        );
    }
    s
}

/// Git-style object hash over the canonical registry description:
/// sha256("blob <len>\0" + lines).
pub fn registry_hash() -> String {
    let body: String = registry().iter().map(|d| d.canonical() + "\n").collect();
    let mut h = Sha256::new();
    h.update(format!("blob {}\0", body.len()).as_bytes());
    h.update(body.as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn num(x: f64) -> Value {
    // serde_json renders non-finite values as null
    json!(x)
}

fn record_json(r: &Record) -> Value {
    json!({
        "identity": r.id,
        "seed": r.seed,
        "params": r.params,
        "lhs": [num(r.lhs.re), num(r.lhs.im)],
        "rhs": [num(r.rhs.re), num(r.rhs.im)],
        "rel_residual": num(r.rel_residual),
        "n_used": r.n_used,
        "y_used": num(r.y_used),
        "est_tail": num(r.est_tail),
        "elapsed_ms": r.elapsed_ms,
        "tolerance": num(r.tolerance),
        "pass": r.pass,
        "error": r.error,
    })
}

pub fn json(cfg: &RunConfig, records: &[Record]) -> String {
    let doc = json!({
        "metadata": {
            "tool": "sfkit",
            "version": env!("CARGO_PKG_VERSION"),
            "registry_hash": registry_hash(),
            "config": {
                "ids": cfg.ids,
                "seeds": cfg.seeds,
                "tol": cfg.tol,
                "n_max": cfg.n_max,
                "y_max": cfg.y_max,
                "format": cfg.format.name(),
                "jobs": cfg.jobs,
            },
        },
        "records": records.iter().map(record_json).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serialises");
    s.push('\n');
    s
}
