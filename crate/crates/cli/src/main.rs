//! `monoscope`: negativity monogamy scores, multicopy activation, pair
//! activation, and GGM boundary experiments from the command line.

mod inspect;

use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use monoscope_experiments::{
    run_activation_histogram, run_ggm_scatter, run_pair_activation, run_score_distribution,
    verify, ExperimentConfig, ExperimentKind, OutputFormat, SampleClass,
};

/// Reference values printed alongside measured statistics.
mod reference {
    pub const GHZ_NONMONO_FRACTION: f64 = 0.088;
    pub const GHZ_P_TWO_COPIES: f64 = 0.88;
    pub const W_NONMONO_FRACTION: f64 = 0.433;
    pub const W_P_TWO_COPIES: f64 = 0.47;
    pub const W_PAIR_FAILURE_CEILING: f64 = 0.01;
}

#[derive(Parser)]
#[command(
    name = "monoscope",
    version,
    about = "Entanglement monogamy scores, activation statistics, and GGM boundaries for multiqubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score report for one state: a fixture (ghz | w | gghz:alpha[:phi])
    /// or an amplitude file ("re im" per line, qubit 0 most significant).
    Inspect {
        /// State to inspect.
        state: String,
        /// Emit the report as JSON instead of aligned text.
        #[arg(long)]
        json: bool,
        /// Cap for the minimal-copies scan.
        #[arg(long = "m-max", default_value_t = 10_000)]
        m_max: u32,
    },
    /// Histogram of the minimal activating copy count over sampled states.
    #[command(alias = "fig2")]
    Activate(RunArgs),
    /// Distributions of the one- and two-copy monogamy scores.
    Fig3(RunArgs),
    /// Pair-activation search with nonmonogamous partners.
    Pair(RunArgs),
    /// Monogamy score vs GGM scatter with the generalized-GHZ boundary.
    Fig4(RunArgs),
    /// Same scatter data, summarized for the two-copy boundary.
    Fig5(RunArgs),
    /// Run the self-check suite (closed forms vs oracles, theorem
    /// properties, boundary relations).
    Verify {
        /// Print check names without running them.
        #[arg(long)]
        list: bool,
        /// Seed for the check sampling.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassChoice {
    Ghz,
    W,
    Both,
}

impl ClassChoice {
    fn classes(self) -> Vec<SampleClass> {
        match self {
            ClassChoice::Ghz => vec![SampleClass::Ghz],
            ClassChoice::W => vec![SampleClass::W],
            ClassChoice::Both => vec![SampleClass::Ghz, SampleClass::W],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Csv,
    Json,
}

impl From<FormatChoice> for OutputFormat {
    fn from(f: FormatChoice) -> Self {
        match f {
            FormatChoice::Csv => OutputFormat::Csv,
            FormatChoice::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Sampled states per class.
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// Master seed; identical seeds reproduce identical data files.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// State ensemble to sample.
    #[arg(long, value_enum, default_value_t = ClassChoice::Both)]
    class: ClassChoice,
    /// Cap for the minimal-copies scan.
    #[arg(long = "m-max", default_value_t = 10_000)]
    m_max: u32,
    /// Partner-pool size for the pair search.
    #[arg(long, default_value_t = 1_000)]
    pool: usize,
    /// Output directory for data files and manifest.
    #[arg(long, env = "MONOSCOPE_OUT", default_value = "out")]
    out: PathBuf,
    /// Data-file format.
    #[arg(long, value_enum, default_value_t = FormatChoice::Csv)]
    format: FormatChoice,
    /// Worker threads (0 = auto).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl RunArgs {
    fn config(&self, kind: ExperimentKind) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(kind, &self.out);
        cfg.classes = self.class.classes();
        cfg.samples = self.samples;
        cfg.master_seed = self.seed;
        cfg.m_max = self.m_max;
        cfg.partner_pool = self.pool;
        cfg.format = self.format.into();
        cfg.threads = self.threads;
        cfg
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Inspect { state, json, m_max } => {
            let (psi, description) = inspect::parse_state_spec(&state)?;
            let ins = inspect::inspect_state(&psi, description, m_max)?;
            if json {
                inspect::print_json(&ins)?;
            } else {
                inspect::print_text(&ins);
            }
        }
        Command::Activate(args) => run_activation(&args)?,
        Command::Fig3(args) => run_fig3(&args)?,
        Command::Pair(args) => run_pair(&args)?,
        Command::Fig4(args) => run_scatter(&args, false)?,
        Command::Fig5(args) => run_scatter(&args, true)?,
        Command::Verify { list, seed } => run_verify(list, seed),
    }
    Ok(())
}

fn class_reference(class: SampleClass) -> (f64, f64) {
    match class {
        SampleClass::Ghz => (
            reference::GHZ_NONMONO_FRACTION,
            reference::GHZ_P_TWO_COPIES,
        ),
        SampleClass::W => (reference::W_NONMONO_FRACTION, reference::W_P_TWO_COPIES),
    }
}

fn measure_caveat(class: SampleClass) -> &'static str {
    match class {
        SampleClass::Ghz => "",
        SampleClass::W => ", measure-dependent",
    }
}

fn run_activation(args: &RunArgs) -> Result<()> {
    let cfg = args.config(ExperimentKind::ActivationHist);
    let outcome = run_activation_histogram(&cfg)?;
    println!("== activation histogram ==");
    for s in &outcome.summaries {
        let (ref_frac, ref_p2) = class_reference(s.class);
        println!(
            "class {}: samples {}, nonmonogamous fraction {:.4} (reference {:.3}{})",
            s.class,
            s.samples,
            s.nonmono_fraction,
            ref_frac,
            measure_caveat(s.class)
        );
        println!(
            "  P(m_min = 2 | nonmonogamous) = {:.4} (reference {:.2}{})",
            s.p_two_copies,
            ref_p2,
            measure_caveat(s.class)
        );
        println!(
            "  not activated within m_max: {} (reference 0)",
            s.not_found
        );
    }
    print_files(&outcome.manifest);
    Ok(())
}

fn run_fig3(args: &RunArgs) -> Result<()> {
    let cfg = args.config(ExperimentKind::ScoreDist);
    let outcome = run_score_distribution(&cfg)?;
    println!("== monogamy score distribution ==");
    for s in &outcome.summaries {
        let (ref_frac, _) = class_reference(s.class);
        println!(
            "class {}: P(delta_1 < 0) = {:.4} (reference {:.3}{})",
            s.class,
            s.fraction_delta1_negative,
            ref_frac,
            measure_caveat(s.class)
        );
        println!(
            "class {}: P(delta_2 < 0) = {:.4}",
            s.class, s.fraction_delta2_negative
        );
    }
    print_files(&outcome.manifest);
    Ok(())
}

fn run_pair(args: &RunArgs) -> Result<()> {
    let cfg = args.config(ExperimentKind::PairActivation);
    let outcome = run_pair_activation(&cfg)?;
    println!("== pair activation ==");
    for s in &outcome.summaries {
        println!(
            "class {}: nonmonogamous targets {}, three-party failure rate {:.4} (reference < {:.2})",
            s.class,
            s.nonmonogamous,
            s.three_party_failure_rate,
            reference::W_PAIR_FAILURE_CEILING
        );
        println!(
            "class {}: four-party residual failures {} (reference 0)",
            s.class, s.four_party_residual_failures
        );
    }
    print_files(&outcome.manifest);
    Ok(())
}

fn run_scatter(args: &RunArgs, two_copy_focus: bool) -> Result<()> {
    let cfg = args.config(ExperimentKind::GgmScatter);
    let outcome = run_ggm_scatter(&cfg)?;
    println!("== monogamy score vs GGM ==");
    let (checked1, viol1) = outcome.boundary1;
    let (checked2, viol2) = outcome.boundary2;
    if two_copy_focus {
        println!(
            "two-copy boundary: {viol2} violations / {checked2} checked (reference 0)"
        );
        println!(
            "single-copy boundary: {viol1} violations / {checked1} checked (reference 0)"
        );
    } else {
        println!(
            "single-copy boundary: {viol1} violations / {checked1} checked (reference 0)"
        );
        println!(
            "two-copy boundary: {viol2} violations / {checked2} checked (reference 0)"
        );
    }
    print_files(&outcome.manifest);
    Ok(())
}

fn run_verify(list: bool, seed: u64) {
    if list {
        for name in verify::check_names() {
            println!("{name}");
        }
        return;
    }
    let results = verify::run_checks(seed);
    let mut failures = 0;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {} — {}", r.name, r.detail);
        if !r.passed {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} check(s) failed");
        std::process::exit(1);
    }
    println!("all {} checks passed", results.len());
}

fn print_files(manifest: &monoscope_experiments::RunManifest) {
    for name in manifest.files.keys() {
        println!("wrote {}", manifest.config.output_dir.join(name).display());
    }
    println!(
        "wrote {}",
        manifest.config.output_dir.join("manifest.json").display()
    );
}
