//! Name-based evaluation of the library's real-valued functions.

use super::HarnessError;
use crate::lagrange::{bethe_gf, tree_function, tree_sum};
use crate::special::{
    self, bernoulli_euler, central_binomial, BernoulliKind, BesselKind, CentralBinomialKind, EllipticKind, ExpIntKind,
};

/// `(name, argument synopsis)` for every function [`evaluate`] knows.
pub const EVAL_FUNCTIONS: &[(&str, &str)] = &[
    ("gamma", "x"),
    ("lngamma", "x"),
    ("binom", "r n"),
    ("pochhammer", "z n"),
    ("gammastar", "a x"),
    ("uppergamma", "a x"),
    ("erf", "x"),
    ("ei", "z"),
    ("e1", "z"),
    ("en", "n z"),
    ("si", "z"),
    ("ci", "z"),
    ("shi", "z"),
    ("chi", "z"),
    ("besselj", "nu z"),
    ("besseli", "nu z"),
    ("ellipk", "m"),
    ("ellipe", "m"),
    ("zeta", "s"),
    ("polylog", "s z"),
    ("bernoulli", "n [a]"),
    ("euler", "n [a]"),
    ("euler-gamma", ""),
    ("central", "n"),
    ("tree", "z"),
    ("treesum", "k x"),
    ("bethe", "r z"),
];

fn arity(name: &str, args: &[f64], min: usize, max: usize) -> Result<(), HarnessError> {
    if args.len() < min || args.len() > max {
        let synopsis = EVAL_FUNCTIONS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s).unwrap_or("");
        return Err(HarnessError::BadParameters(format!("{name} takes `{synopsis}`, got {} argument(s)", args.len())));
    }
    Ok(())
}

fn index(name: &str, v: f64) -> Result<u64, HarnessError> {
    if v >= 0.0 && v == v.floor() && v < 1e9 {
        Ok(v as u64)
    } else {
        Err(HarnessError::BadParameters(format!("{name}: index {v} must be a non-negative integer")))
    }
}

/// Evaluate the named function at real arguments.
pub fn evaluate(name: &str, args: &[f64]) -> Result<f64, HarnessError> {
    let expint = |kind: ExpIntKind| -> Result<f64, HarnessError> {
        arity(name, args, 1, 1)?;
        Ok(special::exp_integral(kind, args[0])?)
    };
    let value = match name {
        "gamma" | "lngamma" | "erf" | "ellipk" | "ellipe" | "zeta" | "central" | "tree" => {
            arity(name, args, 1, 1)?;
            let x = args[0];
            match name {
                "gamma" => special::gamma(x)?,
                "lngamma" => special::ln_gamma(x)?,
                "erf" => special::erf(x),
                "ellipk" => special::elliptic(EllipticKind::K, x)?,
                "ellipe" => special::elliptic(EllipticKind::E, x)?,
                "zeta" => special::zeta(x)?,
                "central" => central_binomial(CentralBinomialKind::Exact, index(name, x)?),
                _ => tree_function(x)?,
            }
        }
        "binom" | "pochhammer" | "gammastar" | "uppergamma" | "en" | "besselj" | "besseli" | "polylog" | "treesum"
        | "bethe" => {
            arity(name, args, 2, 2)?;
            let (a, b) = (args[0], args[1]);
            match name {
                "binom" => special::binom(a, index(name, b)?),
                "pochhammer" => special::pochhammer(a, index(name, b)?),
                "gammastar" => special::gamma_star(a, b)?,
                "uppergamma" => special::upper_gamma(a, b)?,
                "en" => special::exp_integral(ExpIntKind::En(index(name, a)? as u32), b)?,
                "besselj" => special::bessel(BesselKind::J, a, b)?,
                "besseli" => special::bessel(BesselKind::I, a, b)?,
                "polylog" => special::polylog(a, b)?,
                "treesum" => {
                    if a != a.floor() || a.abs() > 1e6 {
                        return Err(HarnessError::BadParameters(format!("treesum: offset {a} must be an integer")));
                    }
                    tree_sum(a as i32, b)?
                }
                _ => bethe_gf(a, b)?,
            }
        }
        "bernoulli" | "euler" => {
            arity(name, args, 1, 2)?;
            let n = index(name, args[0])? as usize;
            let kind = match (name, args.get(1)) {
                ("bernoulli", None) => BernoulliKind::BernoulliNumber,
                ("bernoulli", Some(_)) => BernoulliKind::BernoulliPoly,
                (_, None) => BernoulliKind::EulerNumber,
                (_, Some(_)) => BernoulliKind::EulerPoly,
            };
            bernoulli_euler(kind, n, args.get(1).copied().unwrap_or(0.0))
        }
        "euler-gamma" => {
            arity(name, args, 0, 0)?;
            special::euler_gamma()
        }
        "ei" => expint(ExpIntKind::Ei)?,
        "e1" => expint(ExpIntKind::E1)?,
        "si" => expint(ExpIntKind::Si)?,
        "ci" => expint(ExpIntKind::Ci)?,
        "shi" => expint(ExpIntKind::Shi)?,
        "chi" => expint(ExpIntKind::Chi)?,
        _ => return Err(HarnessError::UnknownFunction(name.to_string())),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_function_evaluates() {
        for (name, synopsis) in EVAL_FUNCTIONS {
            let args: Vec<f64> = synopsis
                .split_whitespace()
                .filter(|a| !a.starts_with('['))
                .map(|a| match a {
                    "n" | "k" => 2.0,
                    "z" => 0.125,
                    _ => 0.5,
                })
                .collect();
            let v = evaluate(name, &args);
            assert!(v.as_ref().is_ok_and(|v| v.is_finite()), "{name}: {v:?}");
        }
    }

    #[test]
    fn values() {
        assert!((evaluate("zeta", &[2.0]).unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
        assert_eq!(evaluate("bernoulli", &[2.0]).unwrap(), 1.0 / 6.0);
        assert_eq!(evaluate("central", &[1.0]).unwrap(), 0.5);
    }

    #[test]
    fn errors() {
        assert!(matches!(evaluate("nope", &[]), Err(HarnessError::UnknownFunction(_))));
        assert!(matches!(evaluate("gamma", &[]), Err(HarnessError::BadParameters(_))));
        assert!(matches!(evaluate("binom", &[0.5, 1.5]), Err(HarnessError::BadParameters(_))));
        assert!(matches!(evaluate("gamma", &[-2.0]), Err(HarnessError::Special(_))));
    }
}
