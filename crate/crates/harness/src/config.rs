//! Flat `key = value` run configuration.
//!
//! Keys are `filter`, `parallel`, `zeros`, and `<check>.<param>` (with
//! `<check>.tol` for the tolerance). `#` starts a comment.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{HarnessError, HarnessResult};

const ZEROS_CHECK: &str = "zeta_zero_sum";

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub filter: String,
    pub parallel: bool,
    pub overrides: BTreeMap<String, BTreeMap<String, String>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            filter: "*".to_string(),
            parallel: false,
            overrides: BTreeMap::new(),
        }
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> HarnessResult<Self> {
        let mut cfg = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| HarnessError::Config {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "filter" => cfg.filter = value.to_string(),
                "parallel" => {
                    cfg.parallel = value
                        .parse()
                        .map_err(|_| err("parallel must be true or false"))?
                }
                "zeros" => cfg.set_zeros(value),
                _ => {
                    let (check, param) = key
                        .rsplit_once('.')
                        .filter(|(c, p)| !c.is_empty() && !p.is_empty())
                        .ok_or_else(|| err("expected <check>.<param>"))?;
                    cfg.set(check, param, value);
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> HarnessResult<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn set(&mut self, check: &str, param: &str, value: &str) {
        self.overrides
            .entry(check.to_string())
            .or_default()
            .insert(param.to_string(), value.to_string());
    }

    /// Points the zeta zero-sum check at an ordinate file.
    pub fn set_zeros(&mut self, path: &str) {
        self.set(ZEROS_CHECK, "zeros", path);
    }
}
