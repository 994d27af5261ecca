//! Check configuration and its `key = value` file format.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for `{key}`: {value}")]
    BadValue { line: usize, key: String, value: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

/// Sample points are `fraction * radius`, with radius 4 for entire functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplePolicy {
    pub fractions: Vec<f64>,
}

impl Default for SamplePolicy {
    fn default() -> Self {
        SamplePolicy { fractions: vec![0.0, 0.1, -0.1, 0.5, -0.5, 0.8] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Highest power of `z` in each partial sum.
    pub terms: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub quadrature_tol: f64,
    pub sample_policy: SamplePolicy,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            terms: 200,
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            quadrature_tol: 1e-11,
            sample_policy: SamplePolicy::default(),
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.terms < 8 {
            return Err(ConfigError::Invalid(format!("terms = {} must be at least 8", self.terms)));
        }
        for (name, v) in [("abs_tol", self.abs_tol), ("rel_tol", self.rel_tol), ("quadrature_tol", self.quadrature_tol)]
        {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::Invalid(format!("{name} = {v} must be positive")));
            }
        }
        if self.sample_policy.fractions.is_empty() || self.sample_policy.fractions.iter().any(|f| !(f.abs() <= 1.0)) {
            return Err(ConfigError::Invalid("sample fractions must be non-empty and within [-1, 1]".into()));
        }
        Ok(())
    }

    /// Parse `key = value` lines over the defaults. `#` starts a comment.
    pub fn parse(text: &str) -> Result<CheckConfig, ConfigError> {
        let mut config = CheckConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or(ConfigError::Syntax { line })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || ConfigError::BadValue { line, key: key.to_string(), value: value.to_string() };
            match key {
                "terms" => config.terms = value.parse().map_err(|_| bad())?,
                "abs_tol" => config.abs_tol = value.parse().map_err(|_| bad())?,
                "rel_tol" => config.rel_tol = value.parse().map_err(|_| bad())?,
                "quadrature_tol" => config.quadrature_tol = value.parse().map_err(|_| bad())?,
                "sample_fractions" => {
                    config.sample_policy.fractions = value
                        .split(',')
                        .map(|p| p.trim().parse::<f64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| bad())?;
                }
                _ => return Err(ConfigError::UnknownKey { line, key: key.to_string() }),
            }
        }
        config.validate()?;
        Ok(config)
    }

    /// Inverse of [`CheckConfig::parse`].
    pub fn to_config_text(&self) -> String {
        let fractions: Vec<String> = self.sample_policy.fractions.iter().map(|f| f.to_string()).collect();
        format!(
            "terms = {}\nabs_tol = {:e}\nrel_tol = {:e}\nquadrature_tol = {:e}\nsample_fractions = {}\n",
            self.terms,
            self.abs_tol,
            self.rel_tol,
            self.quadrature_tol,
            fractions.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        CheckConfig::default().validate().unwrap();
    }

    #[test]
    fn parse_overrides_and_comments() {
        let c = CheckConfig::parse(
            "# suite settings\nterms = 64\nabs_tol=1e-30  # unattainable\n\nsample_fractions = 0.1, -0.2\n",
        )
        .unwrap();
        assert_eq!(c.terms, 64);
        assert_eq!(c.abs_tol, 1e-30);
        assert_eq!(c.rel_tol, 1e-9);
        assert_eq!(c.sample_policy.fractions, vec![0.1, -0.2]);
    }

    #[test]
    fn text_round_trip() {
        let c = CheckConfig { terms: 99, abs_tol: 3e-10, ..CheckConfig::default() };
        assert_eq!(CheckConfig::parse(&c.to_config_text()).unwrap(), c);
    }

    #[test]
    fn errors() {
        assert!(matches!(CheckConfig::parse("terms"), Err(ConfigError::Syntax { line: 1 })));
        assert!(matches!(CheckConfig::parse("\ncolour = red"), Err(ConfigError::UnknownKey { line: 2, .. })));
        assert!(matches!(CheckConfig::parse("terms = many"), Err(ConfigError::BadValue { .. })));
        assert!(matches!(CheckConfig::parse("terms = 4"), Err(ConfigError::Invalid(_))));
        assert!(matches!(CheckConfig::parse("rel_tol = -1"), Err(ConfigError::Invalid(_))));
    }
}
