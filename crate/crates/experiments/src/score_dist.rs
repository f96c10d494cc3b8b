//! Distributions of the single-copy and two-copy monogamy scores over
//! fixed bins, plus the per-class nonmonogamous fractions.

use std::collections::BTreeMap;
use std::time::Instant;

use monoscope_core::tol;
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, SampleClass};
use crate::error::Result;
use crate::manifest::{write_run, RunManifest};
use crate::output::{render_rows, CsvRow};
use crate::sample::{fold_samples, with_pool};

pub const DATA_FILE_STEM: &str = "score_dist";

/// Fixed binning of the score axis: width 0.05 on [−0.6, 1.6].
pub const BIN_COUNT: usize = 44;

pub fn bin_lo(k: usize) -> f64 {
    (-60 + 5 * k as i64) as f64 / 100.0
}

fn bin_index(x: f64) -> usize {
    // Scale by 1/width as a multiplication so the exact scores 0, 0.5 and
    // 1.5 land in their lower-inclusive bins.
    let idx = (x * 20.0 + 12.0).floor();
    idx.clamp(0.0, (BIN_COUNT - 1) as f64) as usize
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreDistRow {
    pub class: String,
    pub m_copies: u32,
    pub bin_lo: f64,
    pub bin_hi: f64,
    pub count: u64,
    pub probability: f64,
}

impl CsvRow for ScoreDistRow {
    fn header() -> &'static str {
        "class,m_copies,bin_lo,bin_hi,count,probability"
    }

    fn push_line(&self, out: &mut String) {
        out.push_str(&format!(
            "{},{},{},{},{},{}",
            self.class, self.m_copies, self.bin_lo, self.bin_hi, self.count, self.probability
        ));
    }
}

#[derive(Debug, Clone)]
struct Accum {
    total: u64,
    bins_one: [u64; BIN_COUNT],
    bins_two: [u64; BIN_COUNT],
    negative_one: u64,
    negative_two: u64,
}

impl Default for Accum {
    fn default() -> Self {
        Self {
            total: 0,
            bins_one: [0; BIN_COUNT],
            bins_two: [0; BIN_COUNT],
            negative_one: 0,
            negative_two: 0,
        }
    }
}

impl Accum {
    fn merge(mut self, other: Accum) -> Accum {
        self.total += other.total;
        self.negative_one += other.negative_one;
        self.negative_two += other.negative_two;
        for k in 0..BIN_COUNT {
            self.bins_one[k] += other.bins_one[k];
            self.bins_two[k] += other.bins_two[k];
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreDistSummary {
    pub class: SampleClass,
    pub samples: u64,
    /// P(δ⁽¹⁾ < 0).
    pub fraction_delta1_negative: f64,
    /// P(δ⁽²⁾ < 0).
    pub fraction_delta2_negative: f64,
}

#[derive(Debug)]
pub struct ScoreDistOutcome {
    pub rows: Vec<ScoreDistRow>,
    pub summaries: Vec<ScoreDistSummary>,
    pub manifest: RunManifest,
}

pub fn run_score_distribution(cfg: &ExperimentConfig) -> Result<ScoreDistOutcome> {
    cfg.validate()?;
    let started = Instant::now();
    let (rows, summaries) = with_pool(cfg.threads, || compute(cfg))?;

    let bytes = render_rows(&rows, cfg.format)?;
    let name = format!("{DATA_FILE_STEM}.{}", cfg.format.extension());
    let mut summary = BTreeMap::new();
    for s in &summaries {
        let c = s.class.name();
        summary.insert(
            format!("fraction_delta1_negative_{c}"),
            s.fraction_delta1_negative,
        );
        summary.insert(
            format!("fraction_delta2_negative_{c}"),
            s.fraction_delta2_negative,
        );
    }
    let manifest = write_run(cfg, vec![(name, bytes)], summary, started)?;
    Ok(ScoreDistOutcome {
        rows,
        summaries,
        manifest,
    })
}

fn compute(cfg: &ExperimentConfig) -> Result<(Vec<ScoreDistRow>, Vec<ScoreDistSummary>)> {
    let mut rows = Vec::new();
    let mut summaries = Vec::new();
    for &class in &cfg.classes {
        let acc = fold_samples(
            cfg.master_seed,
            class,
            cfg.samples,
            cfg.m_max,
            Accum::default,
            |acc, rec| {
                acc.total += 1;
                acc.bins_one[bin_index(rec.record.delta_1)] += 1;
                acc.bins_two[bin_index(rec.record.delta_2)] += 1;
                if rec.record.delta_1 < -tol::MONOGAMY {
                    acc.negative_one += 1;
                }
                if rec.record.delta_2 < -tol::MONOGAMY {
                    acc.negative_two += 1;
                }
            },
            Accum::merge,
        )?;

        let total = acc.total as f64;
        for (m_copies, bins) in [(1u32, &acc.bins_one), (2u32, &acc.bins_two)] {
            for (k, &count) in bins.iter().enumerate() {
                rows.push(ScoreDistRow {
                    class: class.name().to_string(),
                    m_copies,
                    bin_lo: bin_lo(k),
                    bin_hi: bin_lo(k + 1),
                    count,
                    probability: count as f64 / total,
                });
            }
        }
        summaries.push(ScoreDistSummary {
            class,
            samples: acc.total,
            fraction_delta1_negative: acc.negative_one as f64 / total,
            fraction_delta2_negative: acc.negative_two as f64 / total,
        });
    }
    Ok((rows, summaries))
}
