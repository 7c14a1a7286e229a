//! Run configuration: flags, flat key=value config files, and value parsing.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use num_complex::Complex64;

/// Invalid user input; maps to exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, UsageError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => usage(format!("unknown format `{other}` (json or csv)")),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Registry ids, sorted and deduplicated; "all" is expanded before this point.
    pub ids: Vec<String>,
    pub seeds: Vec<u64>,
    pub tol: Option<f64>,
    pub n_max: Option<usize>,
    pub y_max: Option<f64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
}

/// Raw settings before validation; flags override the config file.
#[derive(Debug, Clone, Default)]
pub struct RawConfig {
    pub ids: Vec<String>,
    pub seeds: Option<String>,
    pub tol: Option<String>,
    pub n_max: Option<String>,
    pub y_max: Option<String>,
    pub format: Option<String>,
    pub out: Option<String>,
    pub jobs: Option<String>,
}

impl RawConfig {
    /// Flat `key = value` lines; `#` starts a comment. Keys mirror the flags.
    pub fn from_text(text: &str) -> Result<Self, UsageError> {
        let mut map = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return usage(format!("config line {}: expected key=value", lineno + 1));
            };
            let key = k.trim().replace('-', "_");
            map.insert(key, v.trim().to_string());
        }
        let mut raw = RawConfig::default();
        for (k, v) in map {
            match k.as_str() {
                "id" | "ids" => raw.ids = split_list(&v),
                "seeds" => raw.seeds = Some(v),
                "tol" => raw.tol = Some(v),
                "n_max" => raw.n_max = Some(v),
                "y_max" => raw.y_max = Some(v),
                "format" => raw.format = Some(v),
                "out" => raw.out = Some(v),
                "jobs" => raw.jobs = Some(v),
                other => return usage(format!("unknown config key `{other}`")),
            }
        }
        Ok(raw)
    }

    pub fn overlay(mut self, flags: RawConfig) -> Self {
        if !flags.ids.is_empty() {
            self.ids = flags.ids;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if flags.$f.is_some() { self.$f = flags.$f; } )* };
        }
        take!(seeds, tol, n_max, y_max, format, out, jobs);
        self
    }

    pub fn validate(self, known: &[&str]) -> Result<RunConfig, UsageError> {
        let mut ids = Vec::new();
        for id in &self.ids {
            if id == "all" {
                ids.extend(known.iter().map(|s| s.to_string()));
            } else if known.contains(&id.as_str()) {
                ids.push(id.clone());
            } else {
                return usage(format!("unknown identity `{id}`"));
            }
        }
        ids.sort();
        ids.dedup();
        if ids.is_empty() {
            return usage("at least one --id is required");
        }
        let seeds = parse_seeds(self.seeds.as_deref().unwrap_or("1"))?;
        let tol = self.tol.as_deref().map(parse_positive).transpose()?;
        let y_max = self.y_max.as_deref().map(parse_positive).transpose()?;
        let n_max = self
            .n_max
            .as_deref()
            .map(|s| s.trim().parse::<usize>().map_err(|_| UsageError(format!("bad n_max `{s}`"))))
            .transpose()?;
        let format = self.format.as_deref().map(Format::parse).transpose()?.unwrap_or(Format::Csv);
        let jobs = match self.jobs.as_deref() {
            Some(s) => parse_jobs(s)?,
            None => default_jobs()?,
        };
        Ok(RunConfig {
            ids,
            seeds,
            tol,
            n_max,
            y_max,
            format,
            out: self.out.map(PathBuf::from),
            jobs,
        })
    }
}

pub fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

fn parse_positive(s: &str) -> Result<f64, UsageError> {
    match s.trim().parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => usage(format!("expected a positive number, got `{s}`")),
    }
}

fn parse_jobs(s: &str) -> Result<usize, UsageError> {
    match s.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => usage(format!("jobs must be a positive integer, got `{s}`")),
    }
}

/// `SFKIT_JOBS`, else the number of available cores.
fn default_jobs() -> Result<usize, UsageError> {
    match std::env::var("SFKIT_JOBS") {
        Ok(s) => parse_jobs(&s),
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

/// "1,2,5", "1..3" (inclusive), "1..=3", or mixtures; sorted, deduplicated.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, UsageError> {
    let mut out = Vec::new();
    for part in split_list(s) {
        let bad = || UsageError(format!("bad seed list entry `{part}`"));
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if b < a {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return usage("seed list is empty");
    }
    Ok(out)
}

/// Complex literal: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`; whitespace ignored, `j` accepted for `i`.
pub fn parse_complex(s: &str) -> Result<Complex64, UsageError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || UsageError(format!("malformed complex number `{s}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let num = |x: &str| -> Result<f64, UsageError> {
        let v: f64 = x.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let unit = |x: &str| -> Result<f64, UsageError> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => num(x),
        }
    };
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return Ok(Complex64::new(num(&t)?, 0.0));
    };
    // split at the last sign that is not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(num(&body[..k])?, unit(&body[k..])?)),
        None => Ok(Complex64::new(0.0, unit(body)?)),
    }
}

/// `key=value` arguments of `eval` and `sweep`.
pub fn parse_kv(args: &[String]) -> Result<BTreeMap<String, String>, UsageError> {
    let mut map = BTreeMap::new();
    for a in args {
        let Some((k, v)) = a.split_once('=') else {
            return usage(format!("expected key=value, got `{a}`"));
        };
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return usage(format!("duplicate argument `{k}`"));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let c = |s| parse_complex(s).unwrap();
        assert_eq!(c("-1i"), Complex64::new(0.0, -1.0));
        assert_eq!(c("i"), Complex64::new(0.0, 1.0));
        assert_eq!(c("-i"), Complex64::new(0.0, -1.0));
        assert_eq!(c("2"), Complex64::new(2.0, 0.0));
        assert_eq!(c("0.5 - 2i"), Complex64::new(0.5, -2.0));
        assert_eq!(c("1e-3+2.5e+1i"), Complex64::new(1e-3, 25.0));
        assert_eq!(c("-1e-2-i"), Complex64::new(-1e-2, -1.0));
        for s in ["", "1+", "abc", "1+2k", "1++2i", "nan"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }

    #[test]
    fn seed_lists() {
        assert_eq!(parse_seeds("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_seeds("5, 1..=2, 2").unwrap(), vec![1, 2, 5]);
        assert!(parse_seeds("3..1").is_err());
        assert!(parse_seeds("").is_err());
        assert!(parse_seeds("x").is_err());
    }

    #[test]
    fn config_file_and_overlay() {
        let raw = RawConfig::from_text("# run\nid = complex_beta, hyperbolic_beta\nseeds=1..2\nn-max = 30\n").unwrap();
        let flags = RawConfig {
            seeds: Some("7".into()),
            jobs: Some("2".into()),
            ..RawConfig::default()
        };
        let cfg = raw.overlay(flags).validate(&["complex_beta", "hyperbolic_beta"]).unwrap();
        assert_eq!(cfg.ids, vec!["complex_beta", "hyperbolic_beta"]);
        assert_eq!(cfg.seeds, vec![7]);
        assert_eq!(cfg.n_max, Some(30));
        assert_eq!(cfg.jobs, 2);
        assert!(RawConfig::from_text("bogus = 1").is_err());
        assert!(RawConfig::from_text("no equals sign").is_err());
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let raw = RawConfig {
            ids: vec!["nonexistent".into()],
            ..RawConfig::default()
        };
        assert!(raw.validate(&["complex_beta"]).is_err());
    }
}
