//! Seeded, parallel Monte-Carlo harness over the monogamy-activation
//! library: per-class sampling with deterministic per-index streams,
//! aggregation, and reproducible CSV/JSON data files with digest manifests.

pub mod activation;
pub mod config;
pub mod error;
pub mod manifest;
pub mod output;
pub mod pair;
pub mod sample;
pub mod scatter;
pub mod score_dist;
pub mod verify;

pub use activation::{run_activation_histogram, ActivationHistRow, ActivationOutcome};
pub use config::{ExperimentConfig, ExperimentKind, OutputFormat, SampleClass};
pub use error::{ExpError, Result};
pub use manifest::RunManifest;
pub use pair::{run_pair_activation, PairOutcome, PairRow};
pub use sample::{sample_record, SampleRecord};
pub use scatter::{run_ggm_scatter, CurveRow, ScatterOutcome, ScatterRow};
pub use score_dist::{run_score_distribution, ScoreDistOutcome, ScoreDistRow};
