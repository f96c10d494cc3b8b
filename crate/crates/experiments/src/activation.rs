//! Minimal-copies histogram: for every nonmonogamous sample, the smallest
//! copy count whose multicopy score turns nonnegative, binned per class.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, SampleClass};
use crate::error::Result;
use crate::manifest::{write_run, RunManifest};
use crate::output::{render_rows, CsvRow};
use crate::sample::{fold_samples, with_pool};

pub const DATA_FILE_STEM: &str = "activation_hist";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActivationHistRow {
    pub class: String,
    pub m: u32,
    pub count: u64,
    /// Probability conditioned on the state being nonmonogamous.
    pub probability: f64,
}

impl CsvRow for ActivationHistRow {
    fn header() -> &'static str {
        "class,m,count,probability"
    }

    fn push_line(&self, out: &mut String) {
        out.push_str(&format!(
            "{},{},{},{}",
            self.class, self.m, self.count, self.probability
        ));
    }
}

#[derive(Debug, Clone, Default)]
struct Accum {
    total: u64,
    nonmonogamous: u64,
    bins: BTreeMap<u32, u64>,
    not_found: u64,
}

impl Accum {
    fn merge(mut self, other: Accum) -> Accum {
        self.total += other.total;
        self.nonmonogamous += other.nonmonogamous;
        self.not_found += other.not_found;
        for (m, c) in other.bins {
            *self.bins.entry(m).or_insert(0) += c;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActivationSummary {
    pub class: SampleClass,
    pub samples: u64,
    pub nonmonogamous: u64,
    pub not_found: u64,
    pub nonmono_fraction: f64,
    /// P(m_min = 2 | nonmonogamous).
    pub p_two_copies: f64,
    /// Fraction of nonmonogamous states that activate within m_max.
    pub activated_fraction: f64,
}

#[derive(Debug)]
pub struct ActivationOutcome {
    pub rows: Vec<ActivationHistRow>,
    pub summaries: Vec<ActivationSummary>,
    pub manifest: RunManifest,
}

pub fn run_activation_histogram(cfg: &ExperimentConfig) -> Result<ActivationOutcome> {
    cfg.validate()?;
    let started = Instant::now();
    let (rows, summaries) = with_pool(cfg.threads, || compute(cfg))?;

    let bytes = render_rows(&rows, cfg.format)?;
    let name = format!("{DATA_FILE_STEM}.{}", cfg.format.extension());

    let mut summary = BTreeMap::new();
    for s in &summaries {
        let c = s.class.name();
        summary.insert(format!("nonmono_fraction_{c}"), s.nonmono_fraction);
        summary.insert(format!("p_m2_given_nonmono_{c}"), s.p_two_copies);
        summary.insert(format!("activated_fraction_{c}"), s.activated_fraction);
        summary.insert(format!("not_found_{c}"), s.not_found as f64);
    }
    let manifest = write_run(cfg, vec![(name, bytes)], summary, started)?;
    Ok(ActivationOutcome {
        rows,
        summaries,
        manifest,
    })
}

fn compute(cfg: &ExperimentConfig) -> Result<(Vec<ActivationHistRow>, Vec<ActivationSummary>)> {
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
                match rec.record.m_min {
                    Some(1) => {}
                    Some(m) => {
                        acc.nonmonogamous += 1;
                        *acc.bins.entry(m).or_insert(0) += 1;
                    }
                    None => {
                        acc.nonmonogamous += 1;
                        acc.not_found += 1;
                    }
                }
            },
            Accum::merge,
        )?;

        let nonmono = acc.nonmonogamous.max(1) as f64;
        for (&m, &count) in &acc.bins {
            rows.push(ActivationHistRow {
                class: class.name().to_string(),
                m,
                count,
                probability: count as f64 / nonmono,
            });
        }
        let activated: u64 = acc.bins.values().sum();
        let two = acc.bins.get(&2).copied().unwrap_or(0);
        summaries.push(ActivationSummary {
            class,
            samples: acc.total,
            nonmonogamous: acc.nonmonogamous,
            not_found: acc.not_found,
            nonmono_fraction: acc.nonmonogamous as f64 / acc.total as f64,
            p_two_copies: two as f64 / nonmono,
            activated_fraction: activated as f64 / nonmono,
        });
    }
    Ok((rows, summaries))
}
