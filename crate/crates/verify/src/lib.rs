//! The acceptance gate: each criterion evaluated on the standard catalog,
//! with a one-line note of what was measured.

use std::process::Command;
use std::time::{Duration, Instant};

use smlab::report::{summarize, Timed};
use smlab::runner::run_checks;
use smlab_core::classify::{classify_ideal, is_semi_n_submodule};
use smlab_core::{BaseRing, Caps, Catalog, Classifier, FiniteModule, Flag, Mutation, Preset, Session, THEOREM_IDS};

pub struct Outcome {
    pub ok: bool,
    pub note: String,
}

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub outcome: Outcome,
}

impl Criterion {
    pub fn line(&self) -> String {
        format!("{} {:>2} {}: {}", if self.outcome.ok { "PASS" } else { "FAIL" }, self.id, self.title, self.outcome.note)
    }
}

fn find<'a>(runs: &'a [Timed], id: &str) -> &'a smlab_core::CheckReport {
    &runs.iter().find(|t| t.report.theorem == id).expect("id in suite").report
}

fn prime_power(k: usize) -> bool {
    let p = (2..=k).find(|p| k.is_multiple_of(*p)).unwrap();
    let mut r = k;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

fn ex5() -> Outcome {
    let t = Instant::now();
    let caps = Caps::preset(Preset::Standard);
    let c = Classifier::default();
    let mut bad = Vec::new();
    let mut scanned = 0;
    let mut pp_counts = Vec::new();
    for k in 2..=64usize {
        let m = FiniteModule::cyclic(k, &BaseRing::Integers).unwrap();
        let mut n_count = 0;
        let mut all_semi_n = true;
        for n in m.enumerate_submodules(&caps).unwrap().iter().filter(|n| n.is_proper()) {
            scanned += 1;
            n_count += c.n_sub(&m, n).unwrap().holds() as usize;
            all_semi_n &= c.semi_n(&m, n).unwrap().holds();
        }
        if prime_power(k) {
            pp_counts.push(format!("{k}:{n_count}"));
        } else if k <= 60 && (n_count > 0 || !all_semi_n) {
            bad.push(k);
        }
    }
    let el = t.elapsed();
    Outcome {
        ok: bad.is_empty() && el < Duration::from_secs(5),
        note: format!(
            "{scanned} proper submodules, violations at k = {bad:?}, {el:.2?}; n-submodule counts at prime powers {}",
            pp_counts.join(" ")
        ),
    }
}

fn diagram(cat: &Catalog) -> Outcome {
    let session = Session::new(cat, 7);
    let t = Instant::now();
    let r = smlab_core::check_theorem("diagram", &session).unwrap();
    let el = t.elapsed();
    Outcome {
        ok: r.passed() && r.hypothesis_satisfied >= 500 && el < Duration::from_secs(60),
        note: format!("{} on {} proper submodules, {el:.2?}", r.status.word(), r.hypothesis_satisfied),
    }
}

fn char1(runs: &[Timed]) -> Outcome {
    let r = find(runs, "thm-char1");
    let eligible = r.counters.get("eligible_m").copied().unwrap_or(0);
    Outcome {
        ok: r.passed() && eligible >= 50,
        note: format!("{} on {} submodules, {eligible} eligible m", r.status.word(), r.instances_scanned),
    }
}

fn idealization(cat: &Catalog, runs: &[Timed]) -> Outcome {
    let conv = find(runs, "thm-Ide-conv");
    let fwd = find(runs, "thm-Ide-fwd");
    let remark = find(runs, "remark-Ide");
    let nil = conv.counters.get("nilradical_identity").copied().unwrap_or(0);
    let nil_ok = nil == cat.idealizations.len() as u64;
    let fwd_ok = fwd.passed() && fwd.hypothesis_satisfied >= 5;
    let conv_ok = conv.passed() && conv.hypothesis_satisfied >= 1;
    let remark_ok = remark.passed() && remark.example.is_some();
    let mut note = format!(
        "nilradical identity {nil}/{}; forward {} ({} nonvacuous); converse {} ({}); remark {}",
        cat.idealizations.len(),
        fwd.status.word(),
        fwd.hypothesis_satisfied,
        conv.status.word(),
        conv.hypothesis_satisfied,
        if remark_ok { "reproduced" } else { "not reproduced" }
    );
    if let smlab_core::Status::Fail(w) = &fwd.status {
        note.push_str(&format!("; forward counterexample: {}", w.detail));
    }
    Outcome { ok: nil_ok && fwd_ok && conv_ok && remark_ok, note }
}

fn amalgamation(runs: &[Timed]) -> Outcome {
    let lemma = find(runs, "lemma-amalg-nilrad");
    let c = |k: &str| lemma.counters.get(k).copied().unwrap_or(0);
    let lemma_ok = lemma.passed() && lemma.hypothesis_satisfied >= 10 && c("j_in_nilradical") >= 1 && c("j_not_in_nilradical") >= 1;
    let ids = [
        "thm-Amalg-fwd",
        "thm-Amalg-conv",
        "thm-amalgN1-semi-1",
        "thm-amalgN1-semi-2",
        "thm-Amalg2-1",
        "thm-Amalg2-2",
        "thm-Amalg2-3",
        "thm-amalgN2-semi-1",
        "thm-amalgN2-semi-2",
        "cor-Dup1-n",
        "cor-Dup1-semin",
        "cor-Dup2-n",
        "cor-Dup2-semin",
    ];
    let block: Vec<_> = ids.iter().map(|id| find(runs, id)).collect();
    let failed: Vec<_> = block.iter().filter(|r| !r.passed()).map(|r| r.theorem).collect();
    let vacuous: Vec<_> = block.iter().filter(|r| r.hypothesis_satisfied == 0).map(|r| r.theorem).collect();
    let summary = summarize(runs);
    let listed = vacuous.iter().all(|id| summary.vacuous_ids.iter().any(|v| v == id));
    let mut note = format!(
        "lemma {} on {} amalgams ({} with J in nilradical, {} not); failing {failed:?}; vacuous {vacuous:?} (listed in summary: {listed})",
        lemma.status.word(),
        lemma.hypothesis_satisfied,
        c("j_in_nilradical"),
        c("j_not_in_nilradical")
    );
    for r in &block {
        if let smlab_core::Status::Fail(w) = &r.status {
            note.push_str(&format!("; {} counterexample: {}", r.theorem, w.detail));
        }
    }
    Outcome { ok: lemma_ok && failed.is_empty() && listed, note }
}

fn cited(runs: &[Timed]) -> Outcome {
    let smith = find(runs, "lemma-smith");
    let majed = find(runs, "lemma-majed");
    let rad = smith.counters.get("rad_identity").copied().unwrap_or(0);
    Outcome {
        ok: smith.passed() && majed.passed() && smith.hypothesis_satisfied >= 5 && majed.hypothesis_satisfied >= 5 && rad >= 5,
        note: format!(
            "smith {} ({} modules), majed {} ({} instances), rad identity on {rad} submodules",
            smith.status.word(),
            smith.hypothesis_satisfied,
            majed.status.word(),
            majed.hypothesis_satisfied
        ),
    }
}

fn bridge(cat: &Catalog) -> Outcome {
    let mut ideals = 0;
    let mut mismatches = Vec::new();
    for entry in &cat.rings {
        let r = &entry.ring;
        let reg = FiniteModule::regular(r).unwrap();
        for i in r.ideals().unwrap() {
            ideals += 1;
            let sub = reg.submodule_from_members(i.members().clone()).unwrap();
            let a = classify_ideal(r, i).unwrap().get(Flag::SemiN).as_bool();
            let b = is_semi_n_submodule(&reg, &sub).unwrap().as_bool();
            if a != b {
                mismatches.push(format!("{} {}", r.label(), r.ideal_label(i)));
            }
        }
    }
    Outcome {
        ok: mismatches.is_empty(),
        note: format!("{ideals} ideals over {} rings, {} mismatches {mismatches:?}", cat.rings.len(), mismatches.len()),
    }
}

fn mutations(cat: &Catalog, runs: &[Timed]) -> Outcome {
    let ids = THEOREM_IDS.to_vec();
    let mut notes = Vec::new();
    let mut ok = true;
    for m in Mutation::ALL {
        let session = Session::with_classifier(cat, 7, Classifier::mutated(m));
        let mutated = run_checks(&session, &ids, false).unwrap();
        let newly: Vec<_> =
            mutated.iter().zip(runs).filter(|(a, b)| a.report.failed() && !b.report.failed()).map(|(a, _)| a.report.theorem).collect();
        ok &= !newly.is_empty();
        notes.push(format!("{} breaks {newly:?}", m.name()));
    }
    Outcome { ok, note: notes.join("; ") }
}

fn determinism(cli: &dyn Fn() -> Command) -> (Outcome, Outcome) {
    let run = || cli().args(["theorems", "--suite", "all", "--seed", "7"]).output().unwrap();
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let det = Outcome { ok: same, note: format!("{} bytes, identical: {same}", a.stdout.len()) };
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap_or_default();
    let passed = json["summary"]["passed"].as_u64().unwrap_or(0);
    let code = a.status.code().unwrap_or(-1);
    let example = Outcome { ok: code == 0 && passed == 43, note: format!("exit {code}, {passed} of {} pass", THEOREM_IDS.len()) };
    (det, example)
}

/// Evaluates every criterion. `cli` yields a command that runs the
/// `smlab` entry point in a fresh process.
pub fn evaluate(cli: &dyn Fn() -> Command) -> Vec<Criterion> {
    let cat = Catalog::default_catalog(&Caps::preset(Preset::Standard)).unwrap();
    let session = Session::new(&cat, 7);
    let ids = THEOREM_IDS.to_vec();
    let runs = run_checks(&session, &ids, false).unwrap();
    let (det, example) = determinism(cli);
    let c = |id, title, outcome| Criterion { id, title, outcome };
    vec![
        c("1", "integer-module example ex5(1)", ex5()),
        c("2", "diagram implications", diagram(&cat)),
        c("3", "char1 equivalence", char1(&runs)),
        c("4", "idealization block", idealization(&cat, &runs)),
        c("5", "amalgamation block", amalgamation(&runs)),
        c("6", "cited lemmas", cited(&runs)),
        c("7", "ideal/submodule bridge", bridge(&cat)),
        c("8", "mutation sensitivity", mutations(&cat, &runs)),
        c("9", "deterministic reports", det),
        c("9a", "CLI example `theorems --suite all` exits 0 with 43 pass", example),
    ]
}
