//! Score-vs-GGM scatter data with the generalized-GHZ lower boundary, for
//! one and two copies, plus the boundary curve itself.

use std::collections::BTreeMap;
use std::time::Instant;

use monoscope_core::{
    gghz_boundary, gghz_boundary_two_copies, monogamy_score, monogamy_score_m_copies, tol,
    ScoreParts,
};
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, SampleClass};
use crate::error::Result;
use crate::manifest::{write_run, RunManifest};
use crate::output::{fmt_opt, fmt_opt_bool, render_rows, CsvRow};
use crate::sample::{collect_samples, with_pool};

pub const DATA_FILE_STEM: &str = "ggm_scatter";
pub const CURVE_FILE_STEM: &str = "gghz_curve";

/// Points on the generalized-GHZ boundary curve.
pub const CURVE_POINTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatterRow {
    pub class: String,
    pub delta1: f64,
    pub delta2: f64,
    pub ggm: f64,
    pub nodal_attains_max: bool,
    /// Boundary value at δ⁽¹⁾; absent when δ⁽¹⁾ < 0 (bound undefined there).
    pub bound1: Option<f64>,
    /// Boundary value at δ⁽²⁾; absent when δ⁽²⁾ < 0.
    pub bound2: Option<f64>,
    pub holds1: Option<bool>,
    pub holds2: Option<bool>,
}

impl CsvRow for ScatterRow {
    fn header() -> &'static str {
        "class,delta1,delta2,ggm,nodal_attains_max,bound1,bound2,holds1,holds2"
    }

    fn push_line(&self, out: &mut String) {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}",
            self.class,
            self.delta1,
            self.delta2,
            self.ggm,
            self.nodal_attains_max,
            fmt_opt(self.bound1),
            fmt_opt(self.bound2),
            fmt_opt_bool(self.holds1),
            fmt_opt_bool(self.holds2),
        ));
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub alpha: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub ggm: f64,
}

impl CsvRow for CurveRow {
    fn header() -> &'static str {
        "alpha,delta1,delta2,ggm"
    }

    fn push_line(&self, out: &mut String) {
        out.push_str(&format!(
            "{},{},{},{}",
            self.alpha, self.delta1, self.delta2, self.ggm
        ));
    }
}

#[derive(Debug)]
pub struct ScatterOutcome {
    pub rows: Vec<ScatterRow>,
    pub curve: Vec<CurveRow>,
    /// (checked, violations) for the single-copy boundary.
    pub boundary1: (u64, u64),
    /// (checked, violations) for the two-copy boundary.
    pub boundary2: (u64, u64),
    pub manifest: RunManifest,
}

pub fn run_ggm_scatter(cfg: &ExperimentConfig) -> Result<ScatterOutcome> {
    cfg.validate()?;
    let started = Instant::now();
    let rows = with_pool(cfg.threads, || compute_rows(cfg))?;
    let curve = boundary_curve();

    let mut checked1 = 0u64;
    let mut violations1 = 0u64;
    let mut checked2 = 0u64;
    let mut violations2 = 0u64;
    for row in &rows {
        if let Some(h) = row.holds1 {
            checked1 += 1;
            violations1 += u64::from(!h);
        }
        if let Some(h) = row.holds2 {
            checked2 += 1;
            violations2 += u64::from(!h);
        }
    }

    let scatter_bytes = render_rows(&rows, cfg.format)?;
    let curve_bytes = render_rows(&curve, cfg.format)?;
    let ext = cfg.format.extension();
    let files = vec![
        (format!("{DATA_FILE_STEM}.{ext}"), scatter_bytes),
        (format!("{CURVE_FILE_STEM}.{ext}"), curve_bytes),
    ];

    let mut summary = BTreeMap::new();
    summary.insert("boundary1_checked".into(), checked1 as f64);
    summary.insert("boundary1_violations".into(), violations1 as f64);
    summary.insert("boundary2_checked".into(), checked2 as f64);
    summary.insert("boundary2_violations".into(), violations2 as f64);
    let manifest = write_run(cfg, files, summary, started)?;
    Ok(ScatterOutcome {
        rows,
        curve,
        boundary1: (checked1, violations1),
        boundary2: (checked2, violations2),
        manifest,
    })
}

/// One scatter row from already-computed scores; boundary fields are only
/// present where the score is nonnegative.
pub fn scatter_row(
    class: SampleClass,
    parts: &ScoreParts,
    ggm_value: f64,
    nodal_attains_max: bool,
) -> ScatterRow {
    let delta1 = monogamy_score(parts);
    let delta2 = monogamy_score_m_copies(parts, 2);
    let (bound1, holds1) = if delta1 >= -tol::MONOGAMY {
        let b = gghz_boundary(delta1.clamp(0.0, 0.5)).expect("clamped into domain");
        (Some(b), Some(ggm_value >= b - tol::BOUNDARY_SLACK))
    } else {
        (None, None)
    };
    let (bound2, holds2) = if delta2 >= -tol::MONOGAMY {
        let b = gghz_boundary_two_copies(delta2.clamp(0.0, 1.5)).expect("clamped into domain");
        (Some(b), Some(ggm_value >= b - tol::BOUNDARY_SLACK))
    } else {
        (None, None)
    };
    ScatterRow {
        class: class.name().to_string(),
        delta1,
        delta2,
        ggm: ggm_value,
        nodal_attains_max,
        bound1,
        bound2,
        holds1,
        holds2,
    }
}

fn compute_rows(cfg: &ExperimentConfig) -> Result<Vec<ScatterRow>> {
    let mut rows = Vec::with_capacity(cfg.classes.len() * cfg.samples as usize);
    for &class in &cfg.classes {
        let records = collect_samples(cfg.master_seed, class, cfg.samples, 1)?;
        for rec in records {
            rows.push(scatter_row(
                class,
                &rec.parts,
                rec.record.ggm,
                rec.nodal_attains_max,
            ));
        }
    }
    Ok(rows)
}

/// The generalized-GHZ boundary sampled on `α ∈ [½, 1]`:
/// `δ⁽¹⁾ = √(α(1−α))`, `δ⁽²⁾ = 2δ⁽¹⁾(1+δ⁽¹⁾)`, `GGM = 1−α`.
pub fn boundary_curve() -> Vec<CurveRow> {
    (0..CURVE_POINTS)
        .map(|k| {
            let alpha = 0.5 + 0.5 * k as f64 / (CURVE_POINTS - 1) as f64;
            let delta1 = (alpha * (1.0 - alpha)).max(0.0).sqrt();
            let delta2 = 2.0 * delta1 * (1.0 + delta1);
            CurveRow {
                alpha,
                delta1,
                delta2,
                ggm: 1.0 - alpha,
            }
        })
        .collect()
}
