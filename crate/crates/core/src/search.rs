//! First submodule in catalog order separating two classification flags.

use alloc::format;

use crate::catalog::Catalog;
use crate::classify::{Classifier, Flag, Verdict};
use crate::error::{Error, Result};
use crate::module::{FiniteModule, Module, Submodule};
use crate::theorems::{sub_witness, Witness};

pub struct Separation {
    pub module: Module,
    pub submodule: Submodule,
    pub witness: Witness,
}

fn flag_verdict(m: &FiniteModule, n: &Submodule, flag: Flag) -> Result<Verdict> {
    let c = Classifier::default();
    match c.core_flags(m, n.members()).get(flag) {
        Some(v) => Ok(v.clone()),
        None => Ok(c.classify_submodule(m, n)?.get(flag).clone()),
    }
}

/// The first proper submodule with `a` true and `b` false, or `None` once
/// the catalog is exhausted. Lattices over the caps are skipped.
pub fn search_separating(a: Flag, b: Flag, catalog: &Catalog) -> Result<Option<Separation>> {
    if a == b {
        return Ok(None);
    }
    for m in &catalog.modules {
        let subs = match m.submodules() {
            Ok(subs) => subs,
            Err(Error::Capacity { .. }) => continue,
            Err(e) => return Err(e),
        };
        for n in subs.iter().filter(|n| n.is_proper()) {
            let va = flag_verdict(m, n, a)?;
            if !va.holds() {
                continue;
            }
            let vb = flag_verdict(m, n, b)?;
            if vb.fails() {
                let witness = sub_witness(
                    format!("{} in {}: {a} holds, {b} fails", m.submodule_label(n), m.full_label()),
                    m,
                    &[(a, n.members(), &va), (b, n.members(), &vb)],
                );
                return Ok(Some(Separation { module: m.clone(), submodule: n.clone(), witness }));
            }
        }
    }
    Ok(None)
}
