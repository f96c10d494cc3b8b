//! Pair activation: for every nonmonogamous sample, search pools of
//! nonmonogamous partners (same class and cross class) for one whose joint
//! three-party score is nonnegative; re-test the failures with the
//! four-party score.

use std::collections::BTreeMap;
use std::time::Instant;

use monoscope_core::{
    monogamy_score, pair_score_four_party, pair_score_three_party, tol, ScoreParts, SeededRng,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, SampleClass};
use crate::error::{ExpError, Result};
use crate::manifest::{write_run, RunManifest};
use crate::output::{render_rows, CsvRow};
use crate::sample::{self, with_pool};

pub const DATA_FILE_STEM: &str = "pair_activation";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRow {
    pub class_rho: String,
    /// Partner pool: a concrete class, or "any" for the union of pools.
    pub class_sigma: String,
    /// "three" or "four": which joint monogamy score was used.
    pub mode: String,
    pub attempted: u64,
    pub activated: u64,
    pub failure_rate: f64,
}

impl CsvRow for PairRow {
    fn header() -> &'static str {
        "class_rho,class_sigma,mode,attempted,activated,failure_rate"
    }

    fn push_line(&self, out: &mut String) {
        out.push_str(&format!(
            "{},{},{},{},{},{}",
            self.class_rho, self.class_sigma, self.mode, self.attempted, self.activated,
            self.failure_rate
        ));
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairSummary {
    pub class: SampleClass,
    pub nonmonogamous: u64,
    pub three_party_failures: u64,
    pub three_party_failure_rate: f64,
    pub four_party_residual_failures: u64,
}

#[derive(Debug)]
pub struct PairOutcome {
    pub rows: Vec<PairRow>,
    pub summaries: Vec<PairSummary>,
    pub manifest: RunManifest,
}

fn rate(attempted: u64, activated: u64) -> f64 {
    if attempted == 0 {
        0.0
    } else {
        1.0 - activated as f64 / attempted as f64
    }
}

/// Nonmonogamous score parts drawn from the dedicated pool stream of a
/// class, in stream order.
fn build_pool(master: u64, class: SampleClass, size: usize) -> Result<Vec<ScoreParts>> {
    let pool_master = sample::pool_master(master, class);
    let mut pool = Vec::with_capacity(size);
    // Pool members are rare in the GHZ class (~9%), so allow a generous
    // number of draws before giving up.
    let max_draws = (size as u64).saturating_mul(2000).max(100_000);
    let mut draws = 0u64;
    while pool.len() < size && draws < max_draws {
        let mut rng = SeededRng::stream(pool_master, draws);
        draws += 1;
        let psi = sample::draw_state(class, &mut rng)?;
        let parts = ScoreParts::from_pure(&psi, 0)?;
        if monogamy_score(&parts) < -tol::MONOGAMY {
            pool.push(parts);
        }
    }
    if pool.len() < size {
        return Err(ExpError::PoolExhausted {
            needed: size,
            found: pool.len(),
            draws,
        });
    }
    Ok(pool)
}

/// Per-target search outcome: which pools activated it under each score.
#[derive(Debug, Clone, Default)]
struct SearchHit {
    three_by_pool: Vec<bool>,
    four_by_pool: Vec<bool>,
}

pub fn run_pair_activation(cfg: &ExperimentConfig) -> Result<PairOutcome> {
    cfg.validate()?;
    let started = Instant::now();
    let (rows, summaries) = with_pool(cfg.threads, || compute(cfg))?;

    let bytes = render_rows(&rows, cfg.format)?;
    let name = format!("{DATA_FILE_STEM}.{}", cfg.format.extension());
    let mut summary = BTreeMap::new();
    for s in &summaries {
        let c = s.class.name();
        summary.insert(format!("nonmonogamous_{c}"), s.nonmonogamous as f64);
        summary.insert(
            format!("three_party_failure_rate_{c}"),
            s.three_party_failure_rate,
        );
        summary.insert(
            format!("four_party_residual_failures_{c}"),
            s.four_party_residual_failures as f64,
        );
    }
    let manifest = write_run(cfg, vec![(name, bytes)], summary, started)?;
    Ok(PairOutcome {
        rows,
        summaries,
        manifest,
    })
}

fn compute(cfg: &ExperimentConfig) -> Result<(Vec<PairRow>, Vec<PairSummary>)> {
    // One partner pool per requested class, shared by all target classes.
    let pools: Vec<(SampleClass, Vec<ScoreParts>)> = cfg
        .classes
        .iter()
        .map(|&c| Ok((c, build_pool(cfg.master_seed, c, cfg.partner_pool)?)))
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut summaries = Vec::new();
    for &class in &cfg.classes {
        // Nonmonogamous targets in sample-index order.
        let targets: Vec<ScoreParts> = (0..cfg.samples)
            .into_par_iter()
            .map(|i| {
                let rec = sample::sample_record(cfg.master_seed, class, i, 1)?;
                Ok(
                    if monogamy_score(&rec.parts) < -tol::MONOGAMY {
                        Some(rec.parts)
                    } else {
                        None
                    },
                )
            })
            .collect::<Result<Vec<Option<ScoreParts>>>>()?
            .into_iter()
            .flatten()
            .collect();

        let hits: Vec<SearchHit> = targets
            .par_iter()
            .map(|target| {
                let three_by_pool: Vec<bool> = pools
                    .iter()
                    .map(|(_, pool)| {
                        pool.iter().any(|partner| {
                            pair_score_three_party(target, partner).expect("three-party parts")
                                >= -tol::MONOGAMY
                        })
                    })
                    .collect();
                let need_four = !three_by_pool.iter().any(|&b| b);
                let four_by_pool: Vec<bool> = pools
                    .iter()
                    .map(|(_, pool)| {
                        need_four
                            && pool.iter().any(|partner| {
                                pair_score_four_party(target, partner).expect("three-party parts")
                                    >= -tol::MONOGAMY
                            })
                    })
                    .collect();
                SearchHit {
                    three_by_pool,
                    four_by_pool,
                }
            })
            .collect();

        let attempted = hits.len() as u64;
        let three_any = hits
            .iter()
            .filter(|h| h.three_by_pool.iter().any(|&b| b))
            .count() as u64;
        let failures = attempted - three_any;
        let four_any = hits
            .iter()
            .filter(|h| {
                !h.three_by_pool.iter().any(|&b| b) && h.four_by_pool.iter().any(|&b| b)
            })
            .count() as u64;

        for (k, (pool_class, _)) in pools.iter().enumerate() {
            let activated = hits.iter().filter(|h| h.three_by_pool[k]).count() as u64;
            rows.push(PairRow {
                class_rho: class.name().to_string(),
                class_sigma: pool_class.name().to_string(),
                mode: "three".to_string(),
                attempted,
                activated,
                failure_rate: rate(attempted, activated),
            });
        }
        rows.push(PairRow {
            class_rho: class.name().to_string(),
            class_sigma: "any".to_string(),
            mode: "three".to_string(),
            attempted,
            activated: three_any,
            failure_rate: rate(attempted, three_any),
        });
        for (k, (pool_class, _)) in pools.iter().enumerate() {
            let activated = hits.iter().filter(|h| h.four_by_pool[k]).count() as u64;
            rows.push(PairRow {
                class_rho: class.name().to_string(),
                class_sigma: pool_class.name().to_string(),
                mode: "four".to_string(),
                attempted: failures,
                activated,
                failure_rate: rate(failures, activated),
            });
        }
        rows.push(PairRow {
            class_rho: class.name().to_string(),
            class_sigma: "any".to_string(),
            mode: "four".to_string(),
            attempted: failures,
            activated: four_any,
            failure_rate: rate(failures, four_any),
        });

        summaries.push(PairSummary {
            class,
            nonmonogamous: attempted,
            three_party_failures: failures,
            three_party_failure_rate: rate(attempted, three_any),
            four_party_residual_failures: failures - four_any,
        });
    }
    Ok((rows, summaries))
}
