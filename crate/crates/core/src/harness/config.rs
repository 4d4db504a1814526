use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentId {
    MetricsOrdering,
    KernelProperties,
    Theorem1Approx,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Theorem2Rate,
    Theorem3Separation,
    Theorem4Separation,
    MeanValue,
}

impl ExperimentId {
    pub const ALL: [ExperimentId; 11] = [
        ExperimentId::MetricsOrdering,
        ExperimentId::KernelProperties,
        ExperimentId::Theorem1Approx,
        ExperimentId::Lemma1,
        ExperimentId::Lemma2,
        ExperimentId::Lemma3,
        ExperimentId::Lemma4,
        ExperimentId::Theorem2Rate,
        ExperimentId::Theorem3Separation,
        ExperimentId::Theorem4Separation,
        ExperimentId::MeanValue,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ExperimentId::MetricsOrdering => "metrics-ordering",
            ExperimentId::KernelProperties => "kernel-properties",
            ExperimentId::Theorem1Approx => "theorem1-approx",
            ExperimentId::Lemma1 => "lemma1",
            ExperimentId::Lemma2 => "lemma2",
            ExperimentId::Lemma3 => "lemma3",
            ExperimentId::Lemma4 => "lemma4",
            ExperimentId::Theorem2Rate => "theorem2-rate",
            ExperimentId::Theorem3Separation => "theorem3-separation",
            ExperimentId::Theorem4Separation => "theorem4-separation",
            ExperimentId::MeanValue => "mean-value",
        }
    }

    pub fn summary(&self) -> &'static str {
        match self {
            ExperimentId::MetricsOrdering => "Besicovitch <= Weyl <= uniform, p-monotonicity, Stepanov-Weyl bridge",
            ExperimentId::KernelProperties => "Bochner-Fejér coefficient tables, nonnegativity, monotone weights",
            ExperimentId::Theorem1Approx => "Weyl-1 distance from the T2 separator to its Bochner-Fejér sums",
            ExperimentId::Lemma1 => "separator values on members and nonmembers of I",
            ExperimentId::Lemma2 => "progressions I(q) inside I whose q-shift leaves I",
            ExperimentId::Lemma3 => "points where a shift by tau moves the separator by more than gamma",
            ExperimentId::Lemma4 => "(Σκ)^p <= 2^{p-1} Σκ for Gaussian bumps on 3Z",
            ExperimentId::Theorem2Rate => "Weyl-1 distance between the T2 separator and its partial sums",
            ExperimentId::Theorem3Separation => "T3 windows at level centers grow while Besicovitch-2 stays bounded",
            ExperimentId::Theorem4Separation => "T4 p'-windows grow like 3^{l p'/p0} while Besicovitch-p stays bounded",
            ExperimentId::MeanValue => "mean value of the T2 separator and of exponential sums",
        }
    }

    pub fn params(&self) -> &'static [ParamDef] {
        super::schema::params(*self)
    }
}

impl fmt::Display for ExperimentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExperimentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::param("experiment", format!("unknown experiment id '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Int,
    Real,
    Ints,
    Reals,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamDef {
    pub name: &'static str,
    pub kind: Kind,
    pub default: &'static str,
    pub doc: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Ints(Vec<i64>),
    Reals(Vec<f64>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join<T: fmt::Display>(v: &[T]) -> String {
            v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Real(v) => write!(f, "{v}"),
            ParamValue::Ints(v) => f.write_str(&join(v)),
            ParamValue::Reals(v) => f.write_str(&join(v)),
        }
    }
}

fn parse_value(name: &'static str, kind: Kind, text: &str) -> Result<ParamValue> {
    let bad = |what: &str| Error::param(name, format!("expected {what}, got '{text}'"));
    let real = |s: &str| -> Result<f64> {
        s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| bad("a finite real"))
    };
    let int = |s: &str| -> Result<i64> { s.trim().parse::<i64>().map_err(|_| bad("an integer")) };
    match kind {
        Kind::Int => int(text).map(ParamValue::Int),
        Kind::Real => real(text).map(ParamValue::Real),
        Kind::Ints => text.split(',').map(int).collect::<Result<Vec<_>>>().map(ParamValue::Ints),
        Kind::Reals => text.split(',').map(real).collect::<Result<Vec<_>>>().map(ParamValue::Reals),
    }
}

/// A validated experiment configuration with every default filled in.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentId,
    pub params: BTreeMap<&'static str, ParamValue>,
    /// Output directory named in the document, if any.
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    /// The config with all parameters at their defaults.
    pub fn defaults(experiment: ExperimentId) -> Self {
        let params = experiment
            .params()
            .iter()
            .map(|d| (d.name, parse_value(d.name, d.kind, d.default).expect("defaults parse")))
            .collect();
        Self { experiment, params, out: None }
    }

    fn get(&self, name: &str) -> &ParamValue {
        self.params.get(name).unwrap_or_else(|| panic!("no parameter '{name}' for {}", self.experiment))
    }

    pub fn int(&self, name: &str) -> i64 {
        match self.get(name) {
            ParamValue::Int(v) => *v,
            other => panic!("parameter '{name}' is not an integer: {other:?}"),
        }
    }

    pub fn real(&self, name: &str) -> f64 {
        match self.get(name) {
            ParamValue::Real(v) => *v,
            other => panic!("parameter '{name}' is not a real: {other:?}"),
        }
    }

    pub fn ints(&self, name: &str) -> &[i64] {
        match self.get(name) {
            ParamValue::Ints(v) => v,
            other => panic!("parameter '{name}' is not an integer list: {other:?}"),
        }
    }

    pub fn reals(&self, name: &str) -> &[f64] {
        match self.get(name) {
            ParamValue::Reals(v) => v,
            other => panic!("parameter '{name}' is not a real list: {other:?}"),
        }
    }

    /// Replace one parameter from its text form and revalidate.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let def = self
            .experiment
            .params()
            .iter()
            .find(|d| d.name == canonical_key(key))
            .ok_or_else(|| Error::param("key", format!("unknown key '{key}' for {}", self.experiment)))?;
        self.params.insert(def.name, parse_value(def.name, def.kind, value)?);
        super::schema::validate(self)
    }

    /// The document form: `experiment = ...` followed by every parameter.
    pub fn to_text(&self) -> String {
        let mut s = format!("experiment = {}\n", self.experiment);
        for (k, v) in &self.params {
            s.push_str(&format!("{k} = {v}\n"));
        }
        if let Some(out) = &self.out {
            s.push_str(&format!("out = {}\n", out.display()));
        }
        s
    }
}

fn canonical_key(key: &str) -> &str {
    if key == "p'" {
        "p_prime"
    } else {
        key
    }
}

/// Parse a flat `key = value` document. `#` starts a comment; blank lines are
/// ignored; `experiment` is required; keys may not repeat.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let mut entries: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::param("config", format!("line {}: expected 'key = value'", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || v.is_empty() {
            return Err(Error::param("config", format!("line {}: empty key or value", i + 1)));
        }
        let canon = canonical_key(k);
        if entries.iter().any(|(_, seen, _)| seen == canon) {
            return Err(Error::param("config", format!("duplicate key '{k}' on line {}", i + 1)));
        }
        entries.push((i + 1, canon.to_string(), v.to_string()));
    }
    let id = entries
        .iter()
        .find(|(_, k, _)| k == "experiment")
        .ok_or_else(|| Error::param("experiment", "missing required key 'experiment'"))?;
    let mut cfg = ExperimentConfig::defaults(id.2.parse()?);
    for (line, key, value) in &entries {
        match key.as_str() {
            "experiment" => {}
            "out" => cfg.out = Some(PathBuf::from(value)),
            _ => {
                let def = cfg.experiment.params().iter().find(|d| d.name == key).ok_or_else(|| {
                    Error::param("config", format!("line {line}: unknown key '{key}' for {}", cfg.experiment))
                })?;
                cfg.params.insert(def.name, parse_value(def.name, def.kind, value)?);
            }
        }
    }
    super::schema::validate(&cfg)?;
    Ok(cfg)
}
