use std::path::PathBuf;

use monoscope_core::ClassLabel;
use serde::{Deserialize, Serialize};

use crate::error::{ExpError, Result};

/// Which experiment a config drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    ActivationHist,
    ScoreDist,
    PairActivation,
    GgmScatter,
}

/// Samplable SLOCC classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleClass {
    Ghz,
    W,
}

impl SampleClass {
    pub fn label(self) -> ClassLabel {
        match self {
            SampleClass::Ghz => ClassLabel::GhzClass,
            SampleClass::W => ClassLabel::WClass,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SampleClass::Ghz => "ghz",
            SampleClass::W => "w",
        }
    }
}

impl std::fmt::Display for SampleClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Full description of one experiment run. Identical configs (including
/// the master seed) reproduce byte-identical data files regardless of the
/// worker count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub classes: Vec<SampleClass>,
    pub samples: u64,
    pub master_seed: u64,
    /// Cap for the minimal-copies scan.
    pub m_max: u32,
    /// Partner pool size for the pair-activation search.
    pub partner_pool: usize,
    pub output_dir: PathBuf,
    pub format: OutputFormat,
    /// Worker threads; 0 picks the rayon default.
    pub threads: usize,
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind, output_dir: impl Into<PathBuf>) -> Self {
        Self {
            experiment,
            classes: vec![SampleClass::Ghz, SampleClass::W],
            samples: 100_000,
            master_seed: 1,
            m_max: 10_000,
            partner_pool: 1_000,
            output_dir: output_dir.into(),
            format: OutputFormat::Csv,
            threads: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(ExpError::InvalidConfig("samples must be at least 1".into()));
        }
        if self.m_max == 0 {
            return Err(ExpError::InvalidConfig("m_max must be at least 1".into()));
        }
        if self.classes.is_empty() {
            return Err(ExpError::InvalidConfig(
                "at least one state class is required".into(),
            ));
        }
        let mut seen = self.classes.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.classes.len() {
            return Err(ExpError::InvalidConfig("duplicate class in class list".into()));
        }
        if self.experiment == ExperimentKind::PairActivation && self.partner_pool == 0 {
            return Err(ExpError::InvalidConfig(
                "partner_pool must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        let cfg = ExperimentConfig::new(ExperimentKind::ActivationHist, "out");
        assert!(cfg.validate().is_ok());
        assert_eq!(cfg.samples, 100_000);
        assert_eq!(cfg.m_max, 10_000);
        assert_eq!(cfg.partner_pool, 1_000);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = ExperimentConfig::new(ExperimentKind::ScoreDist, "out");
        cfg.samples = 0;
        assert!(cfg.validate().is_err());

        let mut cfg = ExperimentConfig::new(ExperimentKind::ScoreDist, "out");
        cfg.classes = vec![];
        assert!(cfg.validate().is_err());

        let mut cfg = ExperimentConfig::new(ExperimentKind::PairActivation, "out");
        cfg.classes = vec![SampleClass::W, SampleClass::W];
        assert!(cfg.validate().is_err());

        let mut cfg = ExperimentConfig::new(ExperimentKind::PairActivation, "out");
        cfg.partner_pool = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn config_round_trips_through_json() {
        let cfg = ExperimentConfig::new(ExperimentKind::GgmScatter, "runs/demo");
        let text = serde_json::to_string(&cfg).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }
}
