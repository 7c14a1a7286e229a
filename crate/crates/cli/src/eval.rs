//! `eval`: single function values.

use std::collections::BTreeMap;

use num_complex::Complex64;
use sfkit::elliptic::{elliptic_gamma, EllipticBase};
use sfkit::gamma::{
    dedekind_eta, euler_gamma, field_gamma, ln_gamma, pochhammer, q_gamma, q_pochhammer_inf, FieldGammaArg,
};
use sfkit::hyperbolic::{gamma2, gamma_h, ModularPair};

use crate::config::{parse_complex, usage, UsageError};

pub const FUNCTIONS: &[(&str, &str)] = &[
    ("gamma", "z"),
    ("ln_gamma", "z"),
    ("pochhammer", "a n"),
    ("field_gamma", "x n"),
    ("q_pochhammer", "z q"),
    ("q_gamma", "x q"),
    ("eta", "tau"),
    ("gamma_h", "u (omega1 omega2 | b)"),
    ("gamma2", "u (omega1 omega2 | b)"),
    ("elliptic_gamma", "z p q"),
];

pub enum Outcome {
    Value(Complex64),
    /// Numerical failure (pole, divergence); exit code 1.
    Failed(String),
}

struct Args {
    map: BTreeMap<String, String>,
}

impl Args {
    fn c(&self, key: &str) -> Result<Complex64, UsageError> {
        match self.map.get(key) {
            Some(v) => parse_complex(v),
            None => usage(format!("missing argument `{key}`")),
        }
    }

    fn int(&self, key: &str) -> Result<i64, UsageError> {
        match self.map.get(key).map(|v| v.parse::<i64>()) {
            Some(Ok(n)) => Ok(n),
            Some(Err(_)) => usage(format!("`{key}` must be an integer")),
            None => usage(format!("missing argument `{key}`")),
        }
    }

    fn periods(&self) -> Result<sfkit::Result<ModularPair<f64>>, UsageError> {
        if self.map.contains_key("b") {
            Ok(ModularPair::from_b(self.c("b")?))
        } else {
            Ok(ModularPair::new(self.c("omega1")?, self.c("omega2")?))
        }
    }

    fn only(&self, allowed: &[&str]) -> Result<(), UsageError> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => usage(format!("unexpected argument `{k}`")),
            None => Ok(()),
        }
    }
}

pub fn eval(name: &str, map: BTreeMap<String, String>) -> Result<Outcome, UsageError> {
    let a = Args { map };
    let r: sfkit::Result<Complex64> = match name {
        "gamma" => {
            a.only(&["z"])?;
            euler_gamma(a.c("z")?)
        }
        "ln_gamma" => {
            a.only(&["z"])?;
            ln_gamma(a.c("z")?)
        }
        "pochhammer" => {
            a.only(&["a", "n"])?;
            pochhammer(a.c("a")?, a.int("n")?)
        }
        "field_gamma" => {
            a.only(&["x", "n"])?;
            field_gamma(FieldGammaArg::new(a.c("x")?, a.int("n")?))
        }
        "q_pochhammer" => {
            a.only(&["z", "q"])?;
            q_pochhammer_inf(a.c("z")?, a.c("q")?)
        }
        "q_gamma" => {
            a.only(&["x", "q"])?;
            q_gamma(a.c("x")?, a.c("q")?)
        }
        "eta" => {
            a.only(&["tau"])?;
            dedekind_eta(a.c("tau")?)
        }
        "gamma_h" | "gamma2" => {
            a.only(&["u", "omega1", "omega2", "b"])?;
            let u = a.c("u")?;
            a.periods()?.and_then(|mp| if name == "gamma2" { gamma2(u, &mp) } else { gamma_h(u, &mp) })
        }
        "elliptic_gamma" => {
            a.only(&["z", "p", "q"])?;
            let z = a.c("z")?;
            EllipticBase::new(a.c("p")?, a.c("q")?).and_then(|b| elliptic_gamma(z, &b))
        }
        other => return usage(format!("unknown function `{other}`")),
    };
    Ok(match r {
        Ok(v) if v.re.is_finite() && v.im.is_finite() => Outcome::Value(v),
        Ok(v) => Outcome::Failed(format!("non-finite value {v}")),
        Err(e) => Outcome::Failed(e.to_string()),
    })
}

fn component(x: f64) -> String {
    let m = x.abs();
    if x == 0.0 || (1e-3..1e3).contains(&m) {
        format!("{:.15}", if x == 0.0 { 0.0 } else { x })
    } else {
        format!("{x:.14e}")
    }
}

/// `re im`, fixed 15 decimals in [1e-3, 1e3), 15 significant digits otherwise.
pub fn render(v: Complex64) -> String {
    format!("{} {}", component(v.re), component(v.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    fn value(name: &str, pairs: &[(&str, &str)]) -> Complex64 {
        match eval(name, kv(pairs)).unwrap() {
            Outcome::Value(v) => v,
            Outcome::Failed(e) => panic!("{e}"),
        }
    }

    #[test]
    fn field_gamma_at_minus_i_is_one() {
        let v = value("field_gamma", &[("x", "-1i"), ("n", "0")]);
        assert_eq!(render(v), "1.000000000000000 0.000000000000000");
    }

    #[test]
    fn pochhammer_negative_index() {
        let v = value("pochhammer", &[("a", "3"), ("n", "-1")]);
        assert_eq!(render(v), "0.500000000000000 0.000000000000000");
    }

    #[test]
    fn malformed_and_unknown_are_usage_errors() {
        assert!(eval("gamma2", kv(&[("u", "1+"), ("b", "1+0.2i")])).is_err());
        assert!(eval("nosuch", kv(&[])).is_err());
        assert!(eval("gamma", kv(&[("z", "1"), ("w", "2")])).is_err());
        assert!(eval("field_gamma", kv(&[("x", "1"), ("n", "0.5")])).is_err());
    }

    #[test]
    fn poles_are_numerical_failures() {
        assert!(matches!(eval("gamma", kv(&[("z", "-2")])).unwrap(), Outcome::Failed(_)));
    }

    #[test]
    fn scientific_outside_fixed_range() {
        assert_eq!(component(1.5e-7), "1.50000000000000e-7");
        assert_eq!(component(-0.0), "0.000000000000000");
    }
}
