//! Per-index sample evaluation. Sample `i` of a class depends only on the
//! child stream `mix(class master, i)`, which is what makes runs
//! reproducible under any parallel schedule.

use monoscope_core::rng::child_seed;
use monoscope_core::{
    ggm, sample_ghz_class, sample_w_class, ActivationRecord, PureState, ScoreParts, SeededRng,
};
use rayon::prelude::*;

use crate::config::SampleClass;
use crate::error::Result;

/// Stream tag separating the per-class sample spaces under one master seed.
fn class_tag(class: SampleClass) -> u64 {
    match class {
        SampleClass::Ghz => 0x6768_7a63,
        SampleClass::W => 0x0077_636c,
    }
}

/// Salt separating partner-pool streams from sample streams.
const POOL_SALT: u64 = u64::MAX;

pub fn class_master(master: u64, class: SampleClass) -> u64 {
    child_seed(master, class_tag(class))
}

pub fn pool_master(master: u64, class: SampleClass) -> u64 {
    child_seed(class_master(master, class), POOL_SALT)
}

pub fn draw_state(class: SampleClass, rng: &mut SeededRng) -> Result<PureState> {
    Ok(match class {
        SampleClass::Ghz => sample_ghz_class(rng)?,
        SampleClass::W => sample_w_class(rng)?,
    })
}

/// Everything the experiments need to know about one sampled state.
#[derive(Debug, Clone)]
pub struct SampleRecord {
    pub class: SampleClass,
    pub parts: ScoreParts,
    pub record: ActivationRecord,
    pub nodal_attains_max: bool,
}

/// Evaluate sample `index` of `class` from scratch; the only inputs are the
/// master seed, the class, and the index.
pub fn sample_record(
    master: u64,
    class: SampleClass,
    index: u64,
    m_max: u32,
) -> Result<SampleRecord> {
    let mut rng = SeededRng::stream(class_master(master, class), index);
    let psi = draw_state(class, &mut rng)?;
    let parts = ScoreParts::from_pure(&psi, 0)?;
    let g = ggm(&psi)?;
    let record = ActivationRecord::from_parts(&parts, class.label(), g.value(), m_max);
    Ok(SampleRecord {
        class,
        parts,
        record,
        nodal_attains_max: g.max_eigen_site() == 0,
    })
}

/// Parallel fold over all sample indices of one class. The merge must be
/// commutative and associative (integer counters only) so the result is
/// independent of the work split.
pub fn fold_samples<A>(
    master: u64,
    class: SampleClass,
    samples: u64,
    m_max: u32,
    init: impl Fn() -> A + Sync + Send,
    fold: impl Fn(&mut A, SampleRecord) + Sync + Send,
    merge: impl Fn(A, A) -> A + Sync + Send,
) -> Result<A>
where
    A: Send,
{
    (0..samples)
        .into_par_iter()
        .try_fold(&init, |mut acc, i| {
            let rec = sample_record(master, class, i, m_max)?;
            fold(&mut acc, rec);
            Ok(acc)
        })
        .try_reduce(&init, |a, b| Ok(merge(a, b)))
}

/// All sample records of one class, in index order.
pub fn collect_samples(
    master: u64,
    class: SampleClass,
    samples: u64,
    m_max: u32,
) -> Result<Vec<SampleRecord>> {
    (0..samples)
        .into_par_iter()
        .map(|i| sample_record(master, class, i, m_max))
        .collect()
}

/// Run a closure on a dedicated rayon pool of `threads` workers
/// (0 = library default).
pub fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f)
    }
}
