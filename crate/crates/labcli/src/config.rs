//! Experiment configuration: a flat `key = value` file plus command line
//! overrides, merged with the overrides taking precedence.
//!
//! ```text
//! name = euler_regime
//! n = 150
//! c = 2, 3, 4        # or: alpha = 0.8, 0.45   or: p = 0.01, 0.02
//! trials = 200
//! seed = 7
//! pattern = tetrahedron
//! out = euler.csv
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::{LabError, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExperimentKind {
    EulerRegime,
    CollapseRate,
    ContainmentCurve,
    MomentCheck,
}

impl ExperimentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExperimentKind::EulerRegime => "euler_regime",
            ExperimentKind::CollapseRate => "collapse_rate",
            ExperimentKind::ContainmentCurve => "containment_curve",
            ExperimentKind::MomentCheck => "moment_check",
        }
    }

    pub fn needs_pattern(self) -> bool {
        matches!(self, ExperimentKind::ContainmentCurve | ExperimentKind::MomentCheck)
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExperimentKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "euler_regime" => Ok(ExperimentKind::EulerRegime),
            "collapse_rate" => Ok(ExperimentKind::CollapseRate),
            "containment_curve" => Ok(ExperimentKind::ContainmentCurve),
            "moment_check" => Ok(ExperimentKind::MomentCheck),
            other => Err(format!("unknown experiment `{other}`")),
        }
    }
}

/// How the grid values translate into a face probability.
#[derive(Clone, Debug, PartialEq)]
pub enum Grid {
    /// `p = c / n`
    C(Vec<f64>),
    /// `p = n^(-alpha)`
    Alpha(Vec<f64>),
    /// `p` given directly
    P(Vec<f64>),
}

impl Grid {
    pub fn values(&self) -> &[f64] {
        match self {
            Grid::C(v) | Grid::Alpha(v) | Grid::P(v) => v,
        }
    }

    pub fn key(&self) -> &'static str {
        match self {
            Grid::C(_) => "c",
            Grid::Alpha(_) => "alpha",
            Grid::P(_) => "p",
        }
    }

    pub fn probability(&self, n: u32, value: f64) -> f64 {
        let n = n as f64;
        match self {
            Grid::C(_) => value / n,
            Grid::Alpha(_) => n.powf(-value),
            Grid::P(_) => value,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub name: ExperimentKind,
    pub n: u32,
    pub grid: Grid,
    pub trials: u64,
    pub seed: u64,
    pub pattern: Option<String>,
    pub out: Option<PathBuf>,
}

/// A configuration with every field optional, as read from one source.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PartialConfig {
    pub name: Option<ExperimentKind>,
    pub n: Option<u32>,
    pub grid: Option<Grid>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub pattern: Option<String>,
    pub out: Option<PathBuf>,
}

fn parse_list(value: &str) -> Result<Vec<f64>, String> {
    value
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("not a number: `{}`", t.trim())))
        .collect()
}

impl PartialConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = PartialConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| LabError::Config { line: i + 1, msg };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            cfg.set(key.trim(), value.trim()).map_err(err)?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
            value.parse().map_err(|_| format!("{key}: cannot parse `{value}`"))
        }
        match key {
            "name" => self.name = Some(value.parse()?),
            "n" => self.n = Some(num(key, value)?),
            "trials" => self.trials = Some(num(key, value)?),
            "seed" => self.seed = Some(num(key, value)?),
            "pattern" => self.pattern = Some(value.to_string()),
            "out" => self.out = Some(PathBuf::from(value)),
            "c" | "alpha" | "p" => {
                if self.grid.as_ref().is_some_and(|g| g.key() != key) {
                    return Err(format!("grid given twice (`{key}` after `{}`)", self.grid.as_ref().unwrap().key()));
                }
                let values = parse_list(value)?;
                self.grid = Some(match key {
                    "c" => Grid::C(values),
                    "alpha" => Grid::Alpha(values),
                    _ => Grid::P(values),
                });
            }
            other => return Err(format!("unknown key `{other}`")),
        }
        Ok(())
    }

    /// Fields set in `over` replace those in `self`.
    pub fn merge(self, over: PartialConfig) -> PartialConfig {
        PartialConfig {
            name: over.name.or(self.name),
            n: over.n.or(self.n),
            grid: over.grid.or(self.grid),
            trials: over.trials.or(self.trials),
            seed: over.seed.or(self.seed),
            pattern: over.pattern.or(self.pattern),
            out: over.out.or(self.out),
        }
    }

    pub fn finish(self) -> Result<ExperimentConfig> {
        let missing = |k: &str| LabError::Invalid(format!("missing `{k}`"));
        let cfg = ExperimentConfig {
            name: self.name.ok_or_else(|| missing("name"))?,
            n: self.n.ok_or_else(|| missing("n"))?,
            grid: self.grid.ok_or_else(|| missing("c, alpha or p"))?,
            trials: self.trials.ok_or_else(|| missing("trials"))?,
            seed: self.seed.unwrap_or(0),
            pattern: self.pattern,
            out: self.out,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(LabError::Invalid(m));
        if self.n < 3 {
            return bad(format!("n must be at least 3, got {}", self.n));
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.grid.values().is_empty() {
            return bad("grid is empty".into());
        }
        for &v in self.grid.values() {
            let p = self.grid.probability(self.n, v);
            if !(0.0..=1.0).contains(&p) || !v.is_finite() {
                return bad(format!("{} = {v} gives p = {p} outside [0, 1]", self.grid.key()));
            }
        }
        if self.name.needs_pattern() {
            match &self.pattern {
                None => return bad(format!("{} needs a pattern", self.name)),
                Some(spec) => {
                    crate::pattern_by_spec(spec)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TEXT: &str = "
        # Euler regimes
        name = euler_regime
        n = 150
        c = 2, 3,4
        trials = 200
        seed = 11   # pinned
    ";

    #[test]
    fn parses_flat_file() {
        let cfg = PartialConfig::parse(TEXT).unwrap().finish().unwrap();
        assert_eq!(cfg.name, ExperimentKind::EulerRegime);
        assert_eq!(cfg.grid, Grid::C(vec![2.0, 3.0, 4.0]));
        assert_eq!((cfg.n, cfg.trials, cfg.seed), (150, 200, 11));
        assert!((cfg.grid.probability(150, 3.0) - 0.02).abs() < 1e-15);
    }

    #[test]
    fn flags_win() {
        let file = PartialConfig::parse(TEXT).unwrap();
        let mut flags = PartialConfig::default();
        flags.set("trials", "5").unwrap();
        flags.set("alpha", "0.5").unwrap();
        let cfg = file.merge(flags).finish().unwrap();
        assert_eq!(cfg.trials, 5);
        assert_eq!(cfg.grid, Grid::Alpha(vec![0.5]));
        assert_eq!(cfg.n, 150);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match PartialConfig::parse("name = euler_regime\nn = many\n") {
            Err(LabError::Config { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(PartialConfig::parse("bogus = 1").is_err());
        assert!(PartialConfig::parse("c = 1\nalpha = 2").is_err());
        assert!(PartialConfig::parse("just words").is_err());
    }

    #[test]
    fn validation() {
        let base = PartialConfig::parse(TEXT).unwrap();
        let with = |k: &str, v: &str| {
            let mut o = PartialConfig::default();
            o.set(k, v).unwrap();
            base.clone().merge(o).finish()
        };
        assert!(with("trials", "0").is_err());
        assert!(with("p", "1.5").is_err());
        assert!(with("n", "2").is_err());
        assert!(with("name", "moment_check").is_err());
        let mut o = PartialConfig::default();
        o.set("name", "moment_check").unwrap();
        o.set("pattern", "tetrahedron").unwrap();
        assert!(base.clone().merge(o.clone()).finish().is_ok());
        o.set("pattern", "dodecahedron").unwrap();
        assert!(matches!(base.merge(o).finish(), Err(LabError::UnknownPattern(_))));
    }
}
