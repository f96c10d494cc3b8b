//! Self-check suite behind the `verify` command: closed forms against the
//! explicit Kronecker oracle, the multicopy monogamy theorems as sampled
//! properties, pair-condition consistency, and the boundary relations.
//!
//! Any deliberate sign flip or formula edit in the closed forms makes at
//! least one of these checks fail.

use monoscope_core::linalg::SubsystemDims;
use monoscope_core::{
    gghz_boundary, gghz_boundary_two_copies, ggm, haar_random_pure, minimal_activation_copies,
    monogamy_score, monogamy_score_m_copies, negativity, negativity_m_copies,
    negativity_m_copies_explicit, negativity_product, pair_score_four_party,
    pair_score_three_party, pure_negativity_one_vs_rest, random_density_matrix, tol, ScoreParts,
    SeededRng,
};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckFn = fn(u64) -> CheckResult;

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

pub fn run_checks(seed: u64) -> Vec<CheckResult> {
    CHECKS.iter().map(|(_, f)| f(seed)).collect()
}

const CHECKS: [(&str, CheckFn); 9] = [
    ("multicopy_closed_form_vs_explicit", check_multicopy_oracle),
    ("product_closed_form_vs_explicit", check_product_oracle),
    ("pure_state_shortcut", check_pure_shortcut),
    ("monogamous_stays_monogamous_multicopy", check_multicopy_monogamy),
    ("four_party_multicopy_monogamy", check_four_party_monogamy),
    ("nonmonogamous_always_activate", check_finite_activation),
    ("pair_condition_sign_consistency", check_pair_condition),
    ("four_party_reduction_identity", check_four_party_identity),
    ("gghz_boundary_lower_bounds", check_boundaries),
];

fn pass(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: true,
        detail,
    }
}

fn fail(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: false,
        detail,
    }
}

fn check_multicopy_oracle(seed: u64) -> CheckResult {
    let name = "multicopy_closed_form_vs_explicit";
    let dims = SubsystemDims::qubits(2);
    let mut rng = SeededRng::stream(seed, 0x05);
    let mask = [true, false];
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let rho = match random_density_matrix(&dims, &mut rng) {
            Ok(r) => r,
            Err(e) => return fail(name, e.to_string()),
        };
        let n = negativity(&rho, &mask).unwrap();
        let explicit = negativity_m_copies_explicit(&rho, &mask, 2).unwrap();
        worst = worst.max((negativity_m_copies(n, 2) - explicit).abs());
    }
    if worst < 1e-9 {
        pass(name, format!("max |closed − explicit| = {worst:.3e} over 1000 states"))
    } else {
        fail(name, format!("max deviation {worst:.3e} exceeds 1e-9"))
    }
}

fn check_product_oracle(seed: u64) -> CheckResult {
    let name = "product_closed_form_vs_explicit";
    let dims = SubsystemDims::qubits(2);
    let mut rng = SeededRng::stream(seed, 0x06);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let rho = random_density_matrix(&dims, &mut rng).unwrap();
        let sigma = random_density_matrix(&dims, &mut rng).unwrap();
        let n_rho = negativity(&rho, &[true, false]).unwrap();
        let n_sigma = negativity(&sigma, &[true, false]).unwrap();
        let joint = rho.tensor(&sigma).unwrap();
        let explicit = negativity(&joint, &[true, false, true, false]).unwrap();
        worst = worst.max((negativity_product(n_rho, n_sigma) - explicit).abs());
    }
    if worst < 1e-9 {
        pass(name, format!("max |closed − explicit| = {worst:.3e} over 1000 pairs"))
    } else {
        fail(name, format!("max deviation {worst:.3e} exceeds 1e-9"))
    }
}

fn check_pure_shortcut(seed: u64) -> CheckResult {
    let name = "pure_state_shortcut";
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::stream(seed, 0x22);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let psi = haar_random_pure(&dims, &mut rng);
        let spectral = negativity(&psi.density(), &[true, false, false]).unwrap();
        let shortcut = pure_negativity_one_vs_rest(&psi, 0).unwrap();
        worst = worst.max((spectral - shortcut).abs());
    }
    if worst < 1e-9 {
        pass(name, format!("max route disagreement {worst:.3e} over 10000 states"))
    } else {
        fail(name, format!("max disagreement {worst:.3e} exceeds 1e-9"))
    }
}

fn check_multicopy_monogamy(seed: u64) -> CheckResult {
    let name = "monogamous_stays_monogamous_multicopy";
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::stream(seed, 0x01);
    let mut checked = 0u64;
    for _ in 0..10_000 {
        let parts = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        if monogamy_score(&parts) < 0.0 {
            continue;
        }
        checked += 1;
        for m in 1..=50 {
            if monogamy_score_m_copies(&parts, m) < 0.0 {
                return fail(name, format!("counterexample at m = {m}"));
            }
        }
    }
    pass(name, format!("{checked} monogamous states, m ∈ [1,50], no counterexamples"))
}

fn check_four_party_monogamy(seed: u64) -> CheckResult {
    let name = "four_party_multicopy_monogamy";
    let dims = SubsystemDims::qubits(4);
    let mut rng = SeededRng::stream(seed, 0x04);
    let mut checked = 0u64;
    for _ in 0..1000 {
        let parts = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        if monogamy_score(&parts) < 0.0 {
            continue;
        }
        checked += 1;
        for m in 1..=50 {
            if monogamy_score_m_copies(&parts, m) < 0.0 {
                return fail(name, format!("counterexample at m = {m}"));
            }
        }
    }
    pass(name, format!("{checked} monogamous four-qubit states, no counterexamples"))
}

fn check_finite_activation(seed: u64) -> CheckResult {
    let name = "nonmonogamous_always_activate";
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::stream(seed, 0x02);
    let mut nonmono = 0u64;
    let mut max_m = 0u32;
    for _ in 0..10_000 {
        let parts = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        if monogamy_score(&parts) >= -tol::MONOGAMY {
            continue;
        }
        nonmono += 1;
        match minimal_activation_copies(&parts, 10_000) {
            Some(m) => max_m = max_m.max(m),
            None => return fail(name, "a nonmonogamous state never activated".into()),
        }
    }
    pass(name, format!("{nonmono} nonmonogamous states all activate; max m = {max_m}"))
}

fn check_pair_condition(seed: u64) -> CheckResult {
    let name = "pair_condition_sign_consistency";
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::stream(seed, 0x16);
    let mut pairs = 0u64;
    let mut draws = 0u64;
    while pairs < 200 && draws < 200_000 {
        draws += 1;
        let r = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        let s = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        let (dr, ds) = (monogamy_score(&r), monogamy_score(&s));
        if dr >= 0.0 || ds >= 0.0 {
            continue;
        }
        pairs += 1;
        let direct = pair_score_three_party(&r, &s).unwrap();
        let condition = 2.0 * r.n_one_rest() * s.n_one_rest()
            - 2.0 * r.n_pair()[0] * s.n_pair()[0]
            - 2.0 * r.n_pair()[1] * s.n_pair()[1]
            - (dr.abs() + ds.abs());
        if (direct - condition).abs() > 1e-12 || (direct >= 0.0) != (condition >= 0.0) {
            return fail(name, format!("forms disagree: {direct} vs {condition}"));
        }
    }
    pass(name, format!("{pairs} nonmonogamous pairs, forms agree"))
}

fn check_four_party_identity(seed: u64) -> CheckResult {
    let name = "four_party_reduction_identity";
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::stream(seed, 0x18);
    for _ in 0..500 {
        let r = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        let s = ScoreParts::from_pure(&haar_random_pure(&dims, &mut rng), 0).unwrap();
        let three = pair_score_three_party(&r, &s).unwrap();
        let four = pair_score_four_party(&r, &s).unwrap();
        let gap = four - three - 2.0 * r.n_pair()[0] * s.n_pair()[0];
        if gap.abs() > 1e-12 {
            return fail(name, format!("identity residual {gap:.3e}"));
        }
        if four < three - 1e-12 {
            return fail(name, "four-party score fell below three-party score".into());
        }
    }
    pass(name, "500 pairs, four-party gap equals 2·N₁₂ᵨ·N₁₂ᵩ".into())
}

fn check_boundaries(seed: u64) -> CheckResult {
    let name = "gghz_boundary_lower_bounds";
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::stream(seed, 0x20);
    let mut checked = 0u64;
    for _ in 0..10_000 {
        let psi = haar_random_pure(&dims, &mut rng);
        let parts = ScoreParts::from_pure(&psi, 0).unwrap();
        let g = ggm(&psi).unwrap().value();
        let d1 = monogamy_score(&parts);
        if d1 >= 0.0 {
            checked += 1;
            let bound = gghz_boundary(d1.clamp(0.0, 0.5)).unwrap();
            if g < bound - tol::BOUNDARY_SLACK {
                return fail(name, format!("single-copy violation: ggm {g} < bound {bound}"));
            }
        }
        let d2 = monogamy_score_m_copies(&parts, 2);
        if d2 >= 0.0 {
            let bound = gghz_boundary_two_copies(d2.clamp(0.0, 1.5)).unwrap();
            if g < bound - tol::BOUNDARY_SLACK {
                return fail(name, format!("two-copy violation: ggm {g} < bound {bound}"));
            }
        }
    }
    pass(name, format!("no violations; {checked} states had δ ≥ 0"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_on_default_seed() {
        for result in run_checks(7) {
            assert!(result.passed, "{}: {}", result.name, result.detail);
        }
    }

    #[test]
    fn names_match_checks() {
        assert_eq!(check_names().len(), CHECKS.len());
    }
}
