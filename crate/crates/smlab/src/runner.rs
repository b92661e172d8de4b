//! Runs selected checks in parallel and returns them in id order.

use std::time::Instant;

use rayon::prelude::*;
use smlab_core::{check_theorem, Result, Session, THEOREM_IDS};

use crate::report::Timed;

/// Resolves `all` or a comma list into known ids, in canonical order.
pub fn select_ids(spec: &str) -> Result<Vec<&'static str>> {
    if spec.trim() == "all" {
        return Ok(THEOREM_IDS.to_vec());
    }
    let wanted: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if let Some(bad) = wanted.iter().find(|w| !THEOREM_IDS.contains(w)) {
        return Err(smlab_core::Error::Input(format!("unknown theorem id `{bad}`")));
    }
    Ok(THEOREM_IDS.iter().copied().filter(|id| wanted.contains(id)).collect())
}

/// Checks are independent and pure over the shared catalog; the merge
/// keeps the order of `ids` regardless of completion order.
pub fn run_checks(session: &Session, ids: &[&'static str], timings: bool) -> Result<Vec<Timed>> {
    ids.par_iter()
        .map(|id| {
            let t = Instant::now();
            let report = check_theorem(id, session)?;
            let wall_time_ms = timings.then(|| t.elapsed().as_millis() as u64);
            Ok(Timed { report, wall_time_ms })
        })
        .collect()
}
