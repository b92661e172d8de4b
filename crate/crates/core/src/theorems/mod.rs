//! Executable checks, one per result, scanned over a [`Catalog`].
//!
//! A check counts every instance it scans, the subset on which the
//! hypotheses hold, and fails only when hypotheses hold and the conclusion
//! does not. The first failure carries a replayable witness.

mod basic;
mod constructions;
mod multiplication;
mod structure;

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::catalog::Catalog;
use crate::classify::{ideal_is_semi_n, integer_ideal_is_semi_n, Classifier, CoreFlags, Flag, Verdict};
use crate::elemset::ElemSet;
use crate::error::{input_err, Error, Result};
use crate::module::{FiniteModule, Module, Submodule};
use crate::replay::SpecWriter;
use crate::scalars::multiples_from_reps;

/// Every check id, in report order.
pub const THEOREM_IDS: [&str; 43] = [
    "cor-Dup1-n",
    "cor-Dup1-semin",
    "cor-Dup2-n",
    "cor-Dup2-semin",
    "cor-NM-equiv",
    "cor-cc",
    "cor-colon-ideal",
    "cor-quotient",
    "cor-torsionfree-equiv",
    "diagram",
    "lemma-N-colon-I",
    "lemma-amalg-nilrad",
    "lemma-int",
    "lemma-majed",
    "lemma-smith",
    "obs-colon-torsionfree",
    "prop-fsub-1",
    "prop-fsub-2",
    "prop-maximal-prime",
    "rad-remark",
    "remark-Ide",
    "thm-Amalg-conv",
    "thm-Amalg-fwd",
    "thm-Amalg2-1",
    "thm-Amalg2-2",
    "thm-Amalg2-3",
    "thm-IM-1",
    "thm-IM-2",
    "thm-IN-1",
    "thm-IN-2",
    "thm-Ide-conv",
    "thm-Ide-fwd",
    "thm-SM-1",
    "thm-SM-2",
    "thm-amalgN1-semi-1",
    "thm-amalgN1-semi-2",
    "thm-amalgN2-semi-1",
    "thm-amalgN2-semi-2",
    "thm-cart-conv",
    "thm-cart-fwd",
    "thm-char-conv",
    "thm-char-fwd",
    "thm-char1",
];

/// A replayable counterexample or example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub detail: String,
    /// Workspace text declaring the objects plus `expect` lines.
    pub spec: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    Skipped(String),
}

impl Status {
    pub fn word(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail(_) => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub theorem: &'static str,
    pub instances_scanned: u64,
    pub hypothesis_satisfied: u64,
    pub vacuous: u64,
    pub status: Status,
    pub seed: u64,
    /// Named sub-counts, e.g. per direction of an equivalence.
    pub counters: BTreeMap<&'static str, u64>,
    /// For existence claims: the instance found.
    pub example: Option<Witness>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

/// Which reading of the undefined set `Z_N` the localization check uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZnReading {
    /// `{r : rm ∈ N for some m ∉ N}`.
    #[default]
    Elementwise,
    /// Zero divisors of `R/(N:M)`: `{r : rs ∈ (N:M) for some s ∉ (N:M)}`.
    ColonZeroDivisors,
}

/// Memoized flags of one catalog module, indexed like its submodule list.
struct ModuleFacts {
    core: Vec<CoreFlags>,
}

/// One run of the suite: a catalog, a (possibly mutated) classifier, and
/// the seed for sampled families.
pub struct Session<'a> {
    pub catalog: &'a Catalog,
    pub classifier: Classifier,
    pub seed: u64,
    pub zn_reading: ZnReading,
    facts: Vec<OnceBox<Result<ModuleFacts>>>,
}

impl<'a> Session<'a> {
    pub fn new(catalog: &'a Catalog, seed: u64) -> Self {
        Self::with_classifier(catalog, seed, Classifier::default())
    }

    pub fn with_classifier(catalog: &'a Catalog, seed: u64, classifier: Classifier) -> Self {
        Session {
            catalog,
            classifier,
            seed,
            zn_reading: ZnReading::default(),
            facts: (0..catalog.modules.len()).map(|_| OnceBox::new()).collect(),
        }
    }

    fn facts(&self, mi: usize) -> Result<&ModuleFacts> {
        let r = self.facts[mi].get_or_init(|| {
            let m = &self.catalog.modules[mi];
            Box::new(
                m.submodules().map(|subs| ModuleFacts { core: subs.iter().map(|n| self.classifier.core_flags(m, n.members())).collect() }),
            )
        });
        match r {
            Ok(f) => Ok(f),
            Err(e) => Err(e.clone()),
        }
    }

    /// Core flags of submodule `si` of catalog module `mi`.
    fn core(&self, mi: usize, si: usize) -> Result<&CoreFlags> {
        Ok(&self.facts(mi)?.core[si])
    }

    fn semi_n(&self, m: &FiniteModule, n: &ElemSet) -> Verdict {
        self.classifier.semi_n_set(m, n)
    }

    fn n_sub(&self, m: &FiniteModule, n: &ElemSet) -> Verdict {
        self.classifier.n_sub_set(m, n)
    }
}

/// Tally shared by all checks.
#[derive(Default)]
pub(crate) struct Scan {
    scanned: u64,
    satisfied: u64,
    counters: BTreeMap<&'static str, u64>,
    failure: Option<Witness>,
    example: Option<Witness>,
}

impl Scan {
    pub(crate) fn instance(&mut self, satisfied: bool) {
        self.scanned += 1;
        if satisfied {
            self.satisfied += 1;
        }
    }

    pub(crate) fn bump(&mut self, key: &'static str) {
        *self.counters.entry(key).or_insert(0) += 1;
    }

    /// Records a violation; only the first one builds a witness.
    pub(crate) fn fail(&mut self, build: impl FnOnce() -> Witness) {
        self.bump("violations");
        if self.failure.is_none() {
            self.failure = Some(build());
        }
    }

    pub(crate) fn found(&mut self, build: impl FnOnce() -> Witness) {
        if self.example.is_none() {
            self.example = Some(build());
        }
    }

    pub(crate) fn has_example(&self) -> bool {
        self.example.is_some()
    }

    fn into_report(self, id: &'static str, seed: u64, status_override: Option<Status>) -> CheckReport {
        let status = match (status_override, self.failure) {
            (_, Some(w)) => Status::Fail(w),
            (Some(s), None) => s,
            (None, None) => Status::Pass,
        };
        CheckReport {
            theorem: id,
            instances_scanned: self.scanned,
            hypothesis_satisfied: self.satisfied,
            vacuous: self.scanned - self.satisfied,
            status,
            seed,
            counters: self.counters,
            example: self.example,
        }
    }
}

/// Builds a witness; objects that cannot be printed leave a note instead.
pub(crate) fn witness(detail: String, build: impl FnOnce(&mut SpecWriter) -> Result<()>) -> Witness {
    let mut w = SpecWriter::new();
    w.comment(&detail);
    let spec = match build(&mut w) {
        Ok(()) => w.finish(),
        Err(e) => format!("# {detail}\n# not replayable: {e}\n"),
    };
    Witness { detail, spec }
}

pub fn check_theorem(id: &str, session: &Session) -> Result<CheckReport> {
    let id: &'static str = THEOREM_IDS.iter().copied().find(|&t| t == id).ok_or_else(|| input_err!("unknown theorem id `{id}`"))?;
    let mut scan = Scan::default();
    let outcome = match id {
        "diagram" => basic::diagram(session, &mut scan),
        "thm-char1" => basic::char1(session, &mut scan),
        "obs-colon-torsionfree" => basic::colon_torsionfree(session, &mut scan),
        "thm-char-fwd" => basic::char_fwd(session, &mut scan),
        "thm-char-conv" => basic::char_conv(session, &mut scan),
        "cor-torsionfree-equiv" => basic::torsionfree_equiv(session, &mut scan),
        "cor-colon-ideal" => basic::colon_ideal(session, &mut scan),
        "lemma-smith" => multiplication::smith(session, &mut scan),
        "lemma-majed" => multiplication::majed(session, &mut scan),
        "thm-IM-1" => multiplication::im1(session, &mut scan),
        "thm-IM-2" => multiplication::im2(session, &mut scan),
        "cor-NM-equiv" => multiplication::nm_equiv(session, &mut scan),
        "rad-remark" => multiplication::rad_remark(session, &mut scan),
        "thm-IN-1" => multiplication::in1(session, &mut scan),
        "thm-IN-2" => multiplication::in2(session, &mut scan),
        "lemma-N-colon-I" => structure::n_colon_i(session, &mut scan),
        "prop-maximal-prime" => structure::maximal_prime(session, &mut scan),
        "prop-fsub-1" => structure::fsub1(session, &mut scan),
        "prop-fsub-2" => structure::fsub2(session, &mut scan),
        "cor-quotient" => structure::quotient(session, &mut scan),
        "thm-SM-1" => structure::sm(session, &mut scan, 1),
        "thm-SM-2" => structure::sm(session, &mut scan, 2),
        "lemma-int" => structure::intersections(session, &mut scan),
        "thm-cart-fwd" => structure::cart(session, &mut scan, structure::CartPart::Forward),
        "thm-cart-conv" => structure::cart(session, &mut scan, structure::CartPart::Converse),
        "cor-cc" => structure::cart(session, &mut scan, structure::CartPart::Corollary),
        "thm-Ide-fwd" => constructions::ide_fwd(session, &mut scan),
        "thm-Ide-conv" => constructions::ide_conv(session, &mut scan),
        "remark-Ide" => constructions::ide_remark(session, &mut scan),
        "lemma-amalg-nilrad" => constructions::amalg_nilrad(session, &mut scan),
        "thm-Amalg-fwd" => constructions::amalg(session, &mut scan, id),
        "thm-Amalg-conv" => constructions::amalg(session, &mut scan, id),
        "thm-amalgN1-semi-1" => constructions::amalg(session, &mut scan, id),
        "thm-amalgN1-semi-2" => constructions::amalg(session, &mut scan, id),
        "thm-Amalg2-1" => constructions::amalg(session, &mut scan, id),
        "thm-Amalg2-2" => constructions::amalg(session, &mut scan, id),
        "thm-Amalg2-3" => constructions::amalg(session, &mut scan, id),
        "thm-amalgN2-semi-1" => constructions::amalg(session, &mut scan, id),
        "thm-amalgN2-semi-2" => constructions::amalg(session, &mut scan, id),
        "cor-Dup1-n" => constructions::dup(session, &mut scan, id),
        "cor-Dup1-semin" => constructions::dup(session, &mut scan, id),
        "cor-Dup2-n" => constructions::dup(session, &mut scan, id),
        "cor-Dup2-semin" => constructions::dup(session, &mut scan, id),
        _ => unreachable!("every id has a checker"),
    };
    let status = match outcome {
        Ok(s) => s,
        Err(Error::Capacity { what, cap }) => Some(Status::Skipped(format!("{what} exceeds cap {cap}"))),
        Err(e) => return Err(e),
    };
    Ok(scan.into_report(id, session.seed, status))
}

/// Runs every check in id order.
pub fn check_all(session: &Session) -> Result<Vec<CheckReport>> {
    THEOREM_IDS.iter().map(|id| check_theorem(id, session)).collect()
}

/// Catalog modules with their submodule lattices. Lattices over the caps
/// are counted under `modules_over_cap` and skipped.
pub(crate) fn lattices<'s>(session: &'s Session, scan: &mut Scan) -> Result<Vec<(usize, &'s Module, &'s [Submodule])>> {
    let mut out = Vec::new();
    for (mi, m) in session.catalog.modules.iter().enumerate() {
        match m.submodules() {
            Ok(subs) => out.push((mi, m, subs)),
            Err(Error::Capacity { .. }) => scan.bump("modules_over_cap"),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Submodule lattice of a construction module, `None` when over the caps.
pub(crate) fn lattice<'m>(m: &'m FiniteModule, scan: &mut Scan) -> Result<Option<&'m [Submodule]>> {
    match m.submodules() {
        Ok(subs) => Ok(Some(subs)),
        Err(Error::Capacity { .. }) => {
            scan.bump("modules_over_cap");
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub(crate) fn sub_label(m: &FiniteModule, n: &ElemSet) -> String {
    m.submodule_label(&m.submodule_from_closed(n.clone()))
}

/// Witness declaring `m` and submodules with their expected verdicts.
pub fn sub_witness(detail: String, m: &FiniteModule, expects: &[(Flag, &ElemSet, &Verdict)]) -> Witness {
    witness(detail, |w| {
        w.module(m)?;
        for (flag, n, v) in expects {
            w.expect_submodule(*flag, m, n, v)?;
        }
        Ok(())
    })
}

/// semi n-ideal test on a scalar-domain ideal: on the ring for finite bases,
/// as `gℤ` over `ℤ`.
pub(crate) fn scalar_ideal_is_semi_n(m: &FiniteModule, set: &ElemSet) -> Verdict {
    match m.base_ring() {
        Some(r) => ideal_is_semi_n(r, set),
        None => integer_ideal_is_semi_n(multiples_from_reps(set)),
    }
}

/// Declares a scalar-domain ideal of `m`'s base and its semi_n verdict.
pub(crate) fn expect_scalar_ideal(w: &mut SpecWriter, m: &FiniteModule, set: &ElemSet, v: &Verdict) -> Result<()> {
    match m.base_ring() {
        Some(r) => w.expect_ideal(Flag::SemiN, r, set, v),
        None => {
            let name = w.integer_ideal(multiples_from_reps(set));
            w.expect(Flag::SemiN, &name, v);
            Ok(())
        }
    }
}

pub(crate) fn describe_scalars(m: &FiniteModule, set: &ElemSet) -> String {
    match m.base_ring() {
        Some(r) => r.ideal_label(&r.ideal_from_closed_set(set.clone())),
        None => format!("{}Z", multiples_from_reps(set)),
    }
}
