//! Negativity-based entanglement monogamy for small multiqubit systems.
//!
//! The crate computes monogamy scores of negativity for pure and mixed
//! states, their closed-form behavior under multiple copies and under
//! pairing with a second state (the "activation" of nonmonogamous states),
//! and the generalized geometric measure with its generalized-GHZ lower
//! boundary.
//!
//! Layout:
//! - [`linalg`]: dense complex kernel — Kronecker products, partial
//!   transpose/trace, Jacobi eigenvalues, trace norm.
//! - [`states`]: pure states, density matrices, fixtures, Haar and W-class
//!   samplers, three-tangle classification.
//! - [`monogamy`]: negativity, monogamy scores, multicopy/pair closed
//!   forms, activation searches, and the explicit-power oracle.
//! - [`ggm`]: generalized geometric measure and boundary relations.
//! - [`rng`]: splittable counter-based generator for reproducible
//!   parallel sampling.

pub mod error;
pub mod ggm;
pub mod linalg;
pub mod monogamy;
pub mod rng;
pub mod states;
pub mod tol;

pub use error::{Error, Result};
pub use ggm::{ggm, gghz_boundary, gghz_boundary_two_copies, proposition_check, GgmValue};
pub use linalg::{ComplexMatrix, Spectrum, SubsystemDims, C64};
pub use monogamy::{
    minimal_activation_copies, monogamy_score, monogamy_score_m_copies, negativity,
    negativity_m_copies, negativity_m_copies_explicit, negativity_product,
    pair_score_four_party, pair_score_three_party, pure_negativity_one_vs_rest,
    ActivationRecord, ScoreParts,
};
pub use rng::SeededRng;
pub use states::{
    classify, gghz_state, ghz_state, haar_random_pure, random_density_matrix, reduced_density,
    sample_ghz_class, sample_w_class, three_tangle, w_state, ClassLabel, DensityMatrix,
    GghzParams, PureState,
};
