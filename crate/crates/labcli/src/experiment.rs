//! Seeded Monte Carlo experiments over random 2-complexes.
//!
//! Trial `i` at grid point `g` draws its complex from the stream
//! `trial_seed(seed, g * trials + i)`, so the records do not depend on how
//! rayon schedules the work. The harness measures and reports; it never
//! decides pass or fail.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use complex2::collapse::collapse_to_core;
use complex2::patterns::{count_embeddings, expected_embedding_count, find_embedding, non_embeddability_sum};
use complex2::random::{sample_complex, trial_seed, SampleSpec};
use complex2::Complex2;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::theoretical_bounds;
use crate::config::{ExperimentConfig, ExperimentKind};
use crate::{LabError, Result};

/// One sampled complex. Columns that the experiment does not measure are empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub n: u32,
    pub grid_value: f64,
    pub p: f64,
    pub f2: u64,
    pub chi: i64,
    pub collapse_kind: Option<String>,
    pub steps: Option<u64>,
    /// Whether `chi` was unchanged after every collapse step.
    pub chi_preserved: Option<bool>,
    pub contained: Option<bool>,
    pub embedding_count: Option<u64>,
}

/// Aggregates for one grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub experiment: String,
    pub n: u32,
    pub grid_key: String,
    pub grid_value: f64,
    pub p: f64,
    pub trials: u64,
    pub freq_chi_negative: f64,
    pub freq_chi_above_one: f64,
    pub freq_collapsed: Option<f64>,
    pub freq_contained: Option<f64>,
    /// Predicted miss-rate curve of the pattern, up to a constant factor.
    pub non_embeddability: Option<f64>,
    pub mean_count: Option<f64>,
    pub se_count: Option<f64>,
    pub expected_count: Option<f64>,
    /// `lambda`, `mu` or `critical`, for `c = p n`.
    pub bound_name: String,
    pub bound_value: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutput {
    pub records: Vec<TrialRecord>,
    pub summary: Vec<SummaryRow>,
}

fn run_trial(cfg: &ExperimentConfig, pattern: Option<&Complex2>, grid_value: f64, trial: u64, seed: u64) -> Result<TrialRecord> {
    let p = cfg.grid.probability(cfg.n, grid_value);
    let host = sample_complex(&SampleSpec::new(cfg.n, p, seed)?);
    let mut rec = TrialRecord {
        trial,
        seed,
        n: cfg.n,
        grid_value,
        p,
        f2: host.num_faces() as u64,
        chi: host.euler_characteristic(),
        collapse_kind: None,
        steps: None,
        chi_preserved: None,
        contained: None,
        embedding_count: None,
    };
    match cfg.name {
        ExperimentKind::EulerRegime => {}
        ExperimentKind::CollapseRate => {
            let out = collapse_to_core(&host);
            rec.collapse_kind = Some(out.kind.as_str().to_string());
            rec.steps = Some(out.steps as u64);
            rec.chi_preserved = Some(out.chi_per_step.iter().all(|&c| c == rec.chi));
        }
        ExperimentKind::ContainmentCurve => {
            rec.contained = Some(find_embedding(pattern.unwrap(), &host).is_some());
        }
        ExperimentKind::MomentCheck => {
            let count = count_embeddings(pattern.unwrap(), &host);
            rec.embedding_count = Some(u64::try_from(count).unwrap_or(u64::MAX));
        }
    }
    Ok(rec)
}

fn frequency(records: &[TrialRecord], pred: impl Fn(&TrialRecord) -> bool) -> f64 {
    records.iter().filter(|r| pred(r)).count() as f64 / records.len() as f64
}

fn summarize(cfg: &ExperimentConfig, pattern: Option<&Complex2>, grid_value: f64, records: &[TrialRecord]) -> Result<SummaryRow> {
    let p = cfg.grid.probability(cfg.n, grid_value);
    let (bound_name, bound_value) = match theoretical_bounds(p * cfg.n as f64) {
        Ok(b) => (b.name().to_string(), Some(b.value())),
        Err(LabError::CriticalCase) => ("critical".to_string(), None),
        Err(_) => ("none".to_string(), None),
    };
    let counts: Vec<f64> = records.iter().filter_map(|r| r.embedding_count).map(|c| c as f64).collect();
    let (mean_count, se_count) = if counts.is_empty() {
        (None, None)
    } else {
        let k = counts.len() as f64;
        let mean = counts.iter().sum::<f64>() / k;
        let var = if counts.len() > 1 {
            counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (k - 1.0)
        } else {
            0.0
        };
        (Some(mean), Some((var / k).sqrt()))
    };
    let non_embeddability = match (cfg.name, pattern) {
        (ExperimentKind::ContainmentCurve, Some(s)) => Some(non_embeddability_sum(s, cfg.n as u64, p)?),
        _ => None,
    };
    Ok(SummaryRow {
        experiment: cfg.name.to_string(),
        n: cfg.n,
        grid_key: cfg.grid.key().to_string(),
        grid_value,
        p,
        trials: records.len() as u64,
        freq_chi_negative: frequency(records, |r| r.chi < 0),
        freq_chi_above_one: frequency(records, |r| r.chi > 1),
        freq_collapsed: (cfg.name == ExperimentKind::CollapseRate)
            .then(|| frequency(records, |r| r.collapse_kind.as_deref() == Some("graph"))),
        freq_contained: (cfg.name == ExperimentKind::ContainmentCurve)
            .then(|| frequency(records, |r| r.contained == Some(true))),
        non_embeddability,
        mean_count,
        se_count,
        expected_count: (cfg.name == ExperimentKind::MomentCheck)
            .then(|| expected_embedding_count(pattern.unwrap(), cfg.n as u64, p)),
        bound_name,
        bound_value,
    })
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    cfg.validate()?;
    let pattern = match &cfg.pattern {
        Some(spec) if cfg.name.needs_pattern() => Some(crate::pattern_by_spec(spec)?),
        _ => None,
    };
    let mut records = Vec::new();
    let mut summary = Vec::new();
    for (g, &value) in cfg.grid.values().iter().enumerate() {
        let base = g as u64 * cfg.trials;
        let point: Vec<TrialRecord> = (0..cfg.trials)
            .into_par_iter()
            .map(|i| run_trial(cfg, pattern.as_ref(), value, i, trial_seed(cfg.seed, base + i)))
            .collect::<Result<_>>()?;
        summary.push(summarize(cfg, pattern.as_ref(), value, &point)?);
        records.extend(point);
    }
    Ok(ExperimentOutput { records, summary })
}

/// `runs/euler.csv` becomes `runs/euler.summary.csv`.
pub fn summary_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.summary.csv"))
}

pub fn write_rows<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let file = File::create(path).map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(())
}

/// Writes the trial records to `out` and the summary rows next to it.
pub fn write_output(out: &Path, output: &ExperimentOutput) -> Result<PathBuf> {
    write_rows(out, &output.records)?;
    let summary = summary_path(out);
    write_rows(&summary, &output.summary)?;
    Ok(summary)
}
