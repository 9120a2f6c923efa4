//! Typed check parameters carried as validated strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Real,
    Complex,
    Int,
    Bool,
    Text,
}

impl ParamKind {
    fn validate(self, raw: &str) -> Result<(), String> {
        let ok = match self {
            ParamKind::Real => raw
                .trim()
                .parse::<f64>()
                .map(|v| v.is_finite())
                .unwrap_or(false),
            ParamKind::Complex => parse_complex(raw).is_some(),
            ParamKind::Int => raw.trim().parse::<u64>().is_ok(),
            ParamKind::Bool => raw.trim().parse::<bool>().is_ok(),
            ParamKind::Text => true,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("`{raw}` is not a valid {self:?} value"))
        }
    }
}

/// Parses `1`, `-2.5`, `i`, `-i`, `2.253i`, `0.2+0.1i`.
pub fn parse_complex(raw: &str) -> Option<Complex64> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    let v = match s.as_str() {
        "i" | "+i" => Complex64::i(),
        "-i" => -Complex64::i(),
        _ => Complex64::from_str(&s).ok()?,
    };
    (v.re.is_finite() && v.im.is_finite()).then_some(v)
}

/// A parameter a check accepts, with its default value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDefault {
    pub key: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
}

pub const fn p(key: &'static str, kind: ParamKind, default: &'static str) -> ParamDefault {
    ParamDefault { key, kind, default }
}

/// Resolved parameters of one check run.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    kinds: BTreeMap<String, ParamKind>,
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn from_defaults(defaults: &[ParamDefault]) -> Self {
        Self {
            kinds: defaults
                .iter()
                .map(|d| (d.key.to_string(), d.kind))
                .collect(),
            values: defaults
                .iter()
                .map(|d| (d.key.to_string(), d.default.to_string()))
                .collect(),
        }
    }

    /// Replaces a value after checking the key exists and the value parses.
    pub fn set(&mut self, key: &str, raw: &str) -> Result<(), String> {
        let kind = *self
            .kinds
            .get(key)
            .ok_or_else(|| format!("unknown parameter `{key}`"))?;
        kind.validate(raw)?;
        self.values.insert(key.to_string(), raw.trim().to_string());
        Ok(())
    }

    pub fn as_map(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    fn raw(&self, key: &str) -> &str {
        self.values
            .get(key)
            .unwrap_or_else(|| panic!("check reads undeclared parameter `{key}`"))
    }

    pub fn real(&self, key: &str) -> f64 {
        self.raw(key).parse().expect("validated real")
    }

    pub fn complex(&self, key: &str) -> Complex64 {
        parse_complex(self.raw(key)).expect("validated complex")
    }

    pub fn int(&self, key: &str) -> u64 {
        self.raw(key).parse().expect("validated integer")
    }

    pub fn flag(&self, key: &str) -> bool {
        self.raw(key).parse().expect("validated bool")
    }

    pub fn text(&self, key: &str) -> &str {
        self.raw(key)
    }
}
