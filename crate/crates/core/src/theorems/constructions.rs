//! Idealization, amalgamation and duplication checks.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;

use super::{lattice, witness, Scan, Session, Status, Witness};
use crate::classify::{ideal_is_semi_n, Flag, Verdict};
use crate::construct::embed_ideal;
use crate::elemset::ElemSet;
use crate::error::Result;

type Outcome = Result<Option<Status>>;

/// One `(I, N)` pair of an idealization with `IM ⊆ N`, `I` and `N` proper.
struct IdePair<'a> {
    entry: &'a crate::catalog::IdealizationEntry,
    i: &'a crate::ring::Ideal,
    n: &'a crate::module::Submodule,
    joined: ElemSet,
}

fn ide_pairs<'a>(s: &'a Session, scan: &mut Scan, mut f: impl FnMut(&mut Scan, IdePair<'a>)) -> Result<()> {
    for entry in &s.catalog.idealizations {
        let Some(subs) = lattice(&entry.module, scan)? else { continue };
        for i in entry.base.ideals()?.iter().filter(|i| i.is_proper()) {
            let im = entry.module.scalars_times_set(i.members(), &ElemSet::full(entry.module.order()));
            for n in subs.iter().filter(|n| n.is_proper() && im.is_subset(n.members())) {
                let joined = embed_ideal(&entry.ring, i, n)?.members().clone();
                f(scan, IdePair { entry, i, n, joined });
            }
        }
    }
    Ok(())
}

fn ide_witness(detail: String, p: &IdePair, vi: &Verdict, vn: &Verdict, vj: &Verdict) -> Witness {
    witness(detail, |w| {
        w.expect_ideal(Flag::SemiN, &p.entry.base, p.i.members(), vi)?;
        w.expect_submodule(Flag::NSub, &p.entry.module, p.n.members(), vn)?;
        w.expect_ideal(Flag::SemiN, &p.entry.ring, &p.joined, vj)
    })
}

fn ide_detail(p: &IdePair, what: &str) -> String {
    format!("{}: I={}, N={}: {what}", p.entry.ring.label(), p.entry.base.ideal_label(p.i), p.entry.module.submodule_label(p.n))
}

pub(super) fn ide_fwd(s: &Session, scan: &mut Scan) -> Outcome {
    ide_pairs(s, scan, |scan, p| {
        let vj = ideal_is_semi_n(&p.entry.ring, &p.joined);
        scan.instance(vj.holds());
        if !vj.holds() {
            return;
        }
        let vi = ideal_is_semi_n(&p.entry.base, p.i.members());
        let vn = s.n_sub(&p.entry.module, p.n.members());
        if !(vi.holds() && vn.holds()) {
            scan.fail(|| {
                ide_witness(
                    ide_detail(&p, &format!("I(+)N is a semi n-ideal, I semi n-ideal={}, N n-submodule={}", vi.holds(), vn.holds())),
                    &p,
                    &vi,
                    &vn,
                    &vj,
                )
            });
        }
    })?;
    Ok(None)
}

/// `√0_{R(+)M} = √0(+)M`, read on the ids `r·|M| + m`.
fn nilradical_identity(entry: &crate::catalog::IdealizationEntry) -> bool {
    let k = entry.module.order();
    let nil = entry.base.nilradical_set();
    let formula = ElemSet::from_predicate(entry.ring.order(), |x| nil.contains(x / k));
    entry.ring.nilradical_set() == &formula
}

pub(super) fn ide_conv(s: &Session, scan: &mut Scan) -> Outcome {
    for entry in &s.catalog.idealizations {
        scan.bump("nilradical_identity");
        if !nilradical_identity(entry) {
            scan.fail(|| {
                witness(format!("{}: nilradical differs from sqrt(0)(+)M", entry.ring.label()), |w| w.ring(&entry.ring).map(|_| ()))
            });
        }
    }
    ide_pairs(s, scan, |scan, p| {
        let m = &p.entry.module;
        let vi = ideal_is_semi_n(&p.entry.base, p.i.members());
        let vn = s.n_sub(m, p.n.members());
        let hyp = m.rad_ann_scalars() == m.nilpotent_scalars() && vi.holds() && vn.holds();
        scan.instance(hyp);
        if !hyp {
            return;
        }
        let vj = ideal_is_semi_n(&p.entry.ring, &p.joined);
        if !vj.holds() {
            scan.fail(|| {
                ide_witness(
                    ide_detail(&p, "sqrt Ann(M) = sqrt 0, I semi n-ideal, N n-submodule, I(+)N not a semi n-ideal"),
                    &p,
                    &vi,
                    &vn,
                    &vj,
                )
            });
        }
    })?;
    Ok(None)
}

pub(super) fn ide_remark(s: &Session, scan: &mut Scan) -> Outcome {
    ide_pairs(s, scan, |scan, p| {
        let m = &p.entry.module;
        let vi = ideal_is_semi_n(&p.entry.base, p.i.members());
        let vn = s.n_sub(m, p.n.members());
        let hyp = m.rad_ann_scalars() != m.nilpotent_scalars() && vi.holds() && vn.holds();
        scan.instance(hyp);
        if !hyp {
            return;
        }
        let vj = ideal_is_semi_n(&p.entry.ring, &p.joined);
        if !vj.holds() {
            scan.bump("converse_fails");
            scan.found(|| {
                ide_witness(
                    ide_detail(&p, "sqrt Ann(M) != sqrt 0, I semi n-ideal, N n-submodule, IM in N, I(+)N not a semi n-ideal"),
                    &p,
                    &vi,
                    &vn,
                    &vj,
                )
            });
        }
    })?;
    if scan.has_example() {
        Ok(None)
    } else {
        scan.fail(|| Witness {
            detail: String::from("no idealization in the catalog shows the converse failing"),
            spec: String::from("# no instance\n"),
        });
        Ok(None)
    }
}

pub(super) fn amalg_nilrad(s: &Session, scan: &mut Scan) -> Outcome {
    let mut seen = BTreeSet::new();
    for a in s.catalog.amalgams.iter().filter(|a| seen.insert(a.ring.recipe())) {
        scan.instance(true);
        let j_nil = a.j_in_nilradical();
        scan.bump(if j_nil { "j_in_nilradical" } else { "j_not_in_nilradical" });
        let identity = a.ring.nilradical_set() == &a.nilradical_formula();
        if identity != j_nil {
            scan.fail(|| {
                witness(format!("{}: nilradical identity={identity}, J in sqrt(0)={j_nil}", a.ring.label()), |w| {
                    w.ring(&a.ring).map(|_| ())
                })
            });
        }
    }
    Ok(None)
}

/// The submodule flag a check reads on both sides.
fn flag_of(id: &str) -> Flag {
    match id {
        "thm-Amalg-fwd" | "thm-Amalg-conv" | "thm-Amalg2-1" | "thm-Amalg2-2" | "cor-Dup1-n" | "cor-Dup2-n" => Flag::NSub,
        _ => Flag::SemiN,
    }
}

fn verdict(s: &Session, flag: Flag, m: &crate::module::FiniteModule, n: &ElemSet) -> Verdict {
    match flag {
        Flag::NSub => s.n_sub(m, n),
        _ => s.semi_n(m, n),
    }
}

pub(super) fn amalg(s: &Session, scan: &mut Scan, id: &'static str) -> Outcome {
    let flag = flag_of(id);
    let on_n1 = matches!(id, "thm-Amalg-fwd" | "thm-Amalg-conv" | "thm-amalgN1-semi-1" | "thm-amalgN1-semi-2");
    for a in &s.catalog.amalgams {
        let (m1, m2, big) = (a.m1(), a.m2(), &a.module);
        let f_iso = a.hom.is_isomorphism();
        let f_epi = a.hom.is_surjective();
        let phi_iso = a.phi.is_isomorphism();
        let phi_epi = a.phi.is_surjective();
        let jm2_zero = a.jm2_is_zero();
        let r2 = a.hom.dst();
        let j_nil_ann = a.ideal.members().is_subset(&r2.nilradical_set().intersection(m2.ann_scalars()));
        let small = if on_n1 { m1 } else { m2 };
        let Some(subs) = lattice(small, scan)? else { continue };
        for n in subs.iter().filter(|n| !on_n1 || n.is_proper()) {
            let lifted = if on_n1 { a.n1_join(n)? } else { a.n2_bar(n)? };
            let v_small = verdict(s, flag, small, n.members());
            let v_big = verdict(s, flag, big, lifted.members());
            // (hypothesis, conclusion)
            let (hyp, concl) = match id {
                "thm-Amalg-fwd" => (v_big.holds(), v_small.holds()),
                "thm-Amalg-conv" => (jm2_zero && v_small.holds(), v_big.holds()),
                "thm-amalgN1-semi-1" => (jm2_zero && a.j_in_nilradical() && v_small.holds(), v_big.holds()),
                "thm-amalgN1-semi-2" => (jm2_zero && m2.is_faithful() && v_big.holds(), v_small.holds()),
                "thm-Amalg2-1" => (v_small.holds() && jm2_zero && phi_iso, v_big.holds()),
                "thm-Amalg2-2" => (f_epi && phi_epi && v_big.holds(), v_small.holds()),
                "thm-Amalg2-3" | "thm-amalgN2-semi-1" => (f_iso && phi_epi && v_big.holds(), v_small.holds()),
                "thm-amalgN2-semi-2" => (f_iso && phi_epi && j_nil_ann && v_small.holds(), v_big.holds()),
                _ => unreachable!("not an amalgamation check"),
            };
            scan.instance(hyp);
            if hyp && !concl {
                scan.fail(|| {
                    witness(
                        format!(
                            "{}: {}={} in {} ({flag}={}), lifted {} ({flag}={}); f iso={f_iso}, phi epi={phi_epi}, phi injective={}, JM2=0: {jm2_zero}",
                            big.full_label(),
                            if on_n1 { "N1" } else { "N2" },
                            small.submodule_label(n),
                            small.full_label(),
                            v_small.holds(),
                            big.submodule_label(&lifted),
                            v_big.holds(),
                            a.phi.is_injective()
                        ),
                        |w| {
                            w.expect_submodule(flag, small, n.members(), &v_small)?;
                            w.expect_submodule(flag, big, lifted.members(), &v_big)
                        },
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn dup(s: &Session, scan: &mut Scan, id: &'static str) -> Outcome {
    let flag = flag_of(id);
    let bar = id.starts_with("cor-Dup2");
    for d in &s.catalog.duplications {
        if id == "cor-Dup1-n" {
            scan.bump("ann_formula");
            if d.dup.ann_scalars() != &d.ann_formula() {
                scan.fail(|| {
                    witness(format!("{}: Ann(M dup J) differs from the pair formula", d.dup.full_label()), |w| w.module(&d.dup).map(|_| ()))
                });
            }
        }
        let m = &d.module;
        let converse_hyp = match flag {
            Flag::NSub => d.jm().count() == 1,
            _ => d.ideal.members().is_subset(&d.base.nilradical_set().intersection(m.ann_scalars())),
        };
        let Some(subs) = lattice(m, scan)? else { continue };
        for n in subs.iter().filter(|n| n.is_proper()) {
            let lifted = if bar { d.n_bar(n)? } else { d.n_join(n)? };
            let v_small = verdict(s, flag, m, n.members());
            let v_big = verdict(s, flag, &d.dup, lifted.members());
            for (key, hyp, concl) in
                [("forward", v_big.holds(), v_small.holds()), ("converse", converse_hyp && v_small.holds(), v_big.holds())]
            {
                scan.instance(hyp);
                if !hyp {
                    continue;
                }
                scan.bump(key);
                if !concl {
                    scan.fail(|| {
                        witness(
                            format!(
                                "{} ({key}): N={} ({flag}={}), lifted {} ({flag}={})",
                                d.dup.full_label(),
                                m.submodule_label(n),
                                v_small.holds(),
                                d.dup.submodule_label(&lifted),
                                v_big.holds()
                            ),
                            |w| {
                                w.expect_submodule(flag, m, n.members(), &v_small)?;
                                w.expect_submodule(flag, &d.dup, lifted.members(), &v_big)
                            },
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}
