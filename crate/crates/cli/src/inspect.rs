//! Single-state inspection: parse a fixture name or amplitude file, then
//! report its score parts, activation data, tangle, and GGM.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use monoscope_core::linalg::{SubsystemDims, C64};
use monoscope_core::{
    ggm, ghz_state, gghz_state, minimal_activation_copies, monogamy_score,
    monogamy_score_m_copies, three_tangle, w_state, GghzParams, PureState, ScoreParts,
};

/// How far the squared norm of a state file may deviate from one before the
/// input is rejected instead of silently renormalized.
const RENORMALIZE_WINDOW: f64 = 1e-8;

pub struct Inspection {
    pub description: String,
    pub parts: ScoreParts,
    pub delta_1: f64,
    pub delta_2: f64,
    pub m_min: Option<u32>,
    pub three_tangle: Option<f64>,
    pub ggm: Option<f64>,
    pub ggm_site: Option<usize>,
}

/// Parse `ghz`, `w`, `gghz:alpha[:phi]`, or a path to an amplitude file.
pub fn parse_state_spec(spec: &str) -> Result<(PureState, String)> {
    match spec {
        "ghz" => return Ok((ghz_state(), "ghz".to_string())),
        "w" => return Ok((w_state(), "w".to_string())),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("gghz:") {
        let mut it = rest.split(':');
        let alpha: f64 = it
            .next()
            .ok_or_else(|| anyhow!("gghz spec needs an alpha"))?
            .parse()
            .context("alpha must be a real number")?;
        let phi: f64 = match it.next() {
            Some(p) => p.parse().context("phi must be a real number")?,
            None => 0.0,
        };
        if it.next().is_some() {
            bail!("gghz spec takes at most alpha and phi");
        }
        let params = GghzParams::new(alpha, phi)?;
        return Ok((gghz_state(&params), format!("gghz(alpha={alpha}, phi={phi})")));
    }
    let path = Path::new(spec);
    let psi = read_state_file(path)?;
    Ok((psi, spec.to_string()))
}

/// Amplitude file: one complex amplitude per line as "re im", 2^n lines,
/// qubit 0 most significant. Blank lines and '#' comments are skipped.
pub fn read_state_file(path: &Path) -> Result<PureState> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read state file {}", path.display()))?;
    let mut amps = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split_whitespace();
        let re: f64 = cols
            .next()
            .ok_or_else(|| anyhow!("line {}: missing real part", lineno + 1))?
            .parse()
            .with_context(|| format!("line {}: bad real part", lineno + 1))?;
        let im: f64 = match cols.next() {
            Some(c) => c
                .parse()
                .with_context(|| format!("line {}: bad imaginary part", lineno + 1))?,
            None => 0.0,
        };
        if cols.next().is_some() {
            bail!("line {}: expected at most two columns", lineno + 1);
        }
        amps.push(C64::new(re, im));
    }
    if amps.len() < 2 || !amps.len().is_power_of_two() {
        bail!(
            "state file holds {} amplitudes; expected a power of two (2^n qubits)",
            amps.len()
        );
    }
    let qubits = amps.len().trailing_zeros() as usize;
    let dims = SubsystemDims::qubits(qubits);

    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    let deviation = (norm - 1.0).abs();
    if deviation > RENORMALIZE_WINDOW {
        bail!("amplitudes have norm {norm}; deviation {deviation:e} exceeds {RENORMALIZE_WINDOW:e}");
    }
    if deviation > 0.0 {
        eprintln!("warning: renormalizing input state (norm deviation {deviation:e})");
    }
    Ok(PureState::normalized(amps, dims)?)
}

pub fn inspect_state(psi: &PureState, description: String, m_max: u32) -> Result<Inspection> {
    let parts = ScoreParts::from_pure(psi, 0)?;
    let delta_1 = monogamy_score(&parts);
    let delta_2 = monogamy_score_m_copies(&parts, 2);
    let m_min = minimal_activation_copies(&parts, m_max);
    let three_qubit = psi.dims().as_slice() == [2, 2, 2];
    let (tangle, ggm_value, ggm_site) = if three_qubit {
        let g = ggm(psi)?;
        (
            Some(three_tangle(psi)?),
            Some(g.value()),
            Some(g.max_eigen_site()),
        )
    } else {
        (None, None, None)
    };
    Ok(Inspection {
        description,
        parts,
        delta_1,
        delta_2,
        m_min,
        three_tangle: tangle,
        ggm: ggm_value,
        ggm_site,
    })
}

pub fn print_text(ins: &Inspection) {
    println!("state        : {}", ins.description);
    println!("nodal        : party 0");
    println!("N(0:rest)    : {:.9}", ins.parts.n_one_rest());
    for (i, n) in ins.parts.n_pair().iter().enumerate() {
        println!("N(0:{})       : {:.9}", i + 1, n);
    }
    println!("delta_1      : {:.9}", ins.delta_1);
    println!("delta_2      : {:.9}", ins.delta_2);
    match ins.m_min {
        Some(m) => println!("m_min        : {m}"),
        None => println!("m_min        : not found"),
    }
    if let Some(t) = ins.three_tangle {
        println!("three_tangle : {t:.9}");
    }
    if let (Some(g), Some(site)) = (ins.ggm, ins.ggm_site) {
        println!("ggm          : {g:.9} (max eigenvalue at site {site})");
    }
}

pub fn print_json(ins: &Inspection) -> Result<()> {
    let value = serde_json::json!({
        "state": ins.description,
        "nodal": 0,
        "n_one_rest": ins.parts.n_one_rest(),
        "n_pair": ins.parts.n_pair(),
        "delta_1": ins.delta_1,
        "delta_2": ins.delta_2,
        "m_min": ins.m_min,
        "three_tangle": ins.three_tangle,
        "ggm": ins.ggm,
        "ggm_site": ins.ggm_site,
    });
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(())
}
