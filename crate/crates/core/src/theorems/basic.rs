//! The diagram, the characterizations, and the torsion-free corollaries.

use alloc::format;
use alloc::vec::Vec;

use super::{
    describe_scalars, expect_scalar_ideal, lattices, scalar_ideal_is_semi_n, sub_label, sub_witness, witness, Scan, Session, Status,
};
use crate::classify::{describe_violation, semi_n_power_variant, Flag};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::module::FiniteModule;

type Outcome = Result<Option<Status>>;

const DIAGRAM: [(Flag, Flag); 7] = [
    (Flag::Prime, Flag::Semiprime),
    (Flag::Prime, Flag::Primary),
    (Flag::Semiprime, Flag::SemiN),
    (Flag::SemiN, Flag::SemiR),
    (Flag::NSub, Flag::SemiN),
    (Flag::NSub, Flag::RSub),
    (Flag::RSub, Flag::SemiR),
];

pub(super) fn diagram(s: &Session, scan: &mut Scan) -> Outcome {
    for (mi, m, subs) in lattices(s, scan)? {
        for (si, n) in subs.iter().enumerate().filter(|(_, n)| n.is_proper()) {
            scan.instance(true);
            let c = s.core(mi, si)?;
            for (a, b) in DIAGRAM {
                let (va, vb) = (c.get(a).expect("core flag"), c.get(b).expect("core flag"));
                if va.holds() && !vb.holds() {
                    scan.fail(|| {
                        let why = vb.violation().map(|v| describe_violation(m, v)).unwrap_or_default();
                        sub_witness(
                            format!("{} in {}: {a} holds but {b} fails ({why})", m.submodule_label(n), m.full_label()),
                            m,
                            &[(a, n.members(), va), (b, n.members(), vb)],
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn char1(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let kmax = m.order().max(m.scalar_count());
        for n in subs.iter().filter(|n| n.is_proper()) {
            scan.instance(true);
            let one = s.semi_n(m, n.members()).holds();
            let two = semi_n_power_variant(m, n.members(), kmax).holds();
            let mut three = true;
            for x in m.regular_elements().iter() {
                scan.bump("eligible_m");
                if m.sqrt_colon_decomposition_holds(n, x)? == Some(false) {
                    three = false;
                }
            }
            if one != two || two != three {
                scan.fail(|| {
                    sub_witness(
                        format!("{} in {}: (1)={one}, (2)={two}, (3)={three}", m.submodule_label(n), m.full_label()),
                        m,
                        &[(Flag::SemiN, n.members(), &s.semi_n(m, n.members()))],
                    )
                });
            }
        }
    }
    Ok(None)
}

/// `(N :_M a)` as a member set.
fn colon_by(m: &FiniteModule, n: &ElemSet, a: usize) -> ElemSet {
    ElemSet::from_predicate(m.order(), |x| n.contains(m.act(a, x)))
}

pub(super) fn colon_torsionfree(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let tf = m.is_torsion_free();
        let nil = m.nilpotent_scalars();
        for n in subs.iter().filter(|n| n.is_proper()) {
            scan.instance(tf);
            if !tf {
                continue;
            }
            let semi = s.semi_n(m, n.members());
            let stable = m
                .scalars()
                .filter(|&r| !nil.contains(r))
                .find(|&r| colon_by(m, n.members(), m.squares()[r] as usize) != colon_by(m, n.members(), r));
            if semi.holds() != stable.is_none() {
                scan.fail(|| {
                    let at = stable.map(|r| format!(", (N:r^2) != (N:r) at r={}", m.describe_scalar(r))).unwrap_or_default();
                    sub_witness(
                        format!("{} in torsion-free {}: semi_n={}{at}", m.submodule_label(n), m.full_label(), semi.holds()),
                        m,
                        &[(Flag::SemiN, n.members(), &semi)],
                    )
                });
            }
        }
    }
    Ok(None)
}

/// Nonzero submodules meeting the torsion elements only in 0.
fn torsion_free_subs(m: &FiniteModule, subs: &[crate::module::Submodule]) -> Vec<ElemSet> {
    let t = m.torsion();
    subs.iter().filter(|k| !k.is_zero() && k.members().intersection(t).count() == 1).map(|k| k.members().clone()).collect()
}

fn maps_into(m: &FiniteModule, r: usize, k: &ElemSet, n: &ElemSet) -> bool {
    k.iter().all(|x| n.contains(m.act(r, x)))
}

/// First `(r, K)` with `r ∉ √0`, `r²K ⊆ N` and `rK ⊄ N`.
fn k_condition_breaks(m: &FiniteModule, n: &ElemSet, ks: &[ElemSet]) -> Option<(usize, usize)> {
    let nil = m.nilpotent_scalars();
    for r in m.scalars().filter(|&r| !nil.contains(r)) {
        let r2 = m.squares()[r] as usize;
        for (ki, k) in ks.iter().enumerate() {
            if maps_into(m, r2, k, n) && !maps_into(m, r, k, n) {
                return Some((r, ki));
            }
        }
    }
    None
}

pub(super) fn char_fwd(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let ks = torsion_free_subs(m, subs);
        for n in subs.iter().filter(|n| n.is_proper()) {
            let semi = s.semi_n(m, n.members());
            for (ki, k) in ks.iter().enumerate() {
                scan.instance(semi.holds());
                if !semi.holds() {
                    continue;
                }
                if let Some((r, _)) = k_condition_breaks(m, n.members(), core::slice::from_ref(k)) {
                    scan.fail(|| {
                        sub_witness(
                            format!(
                                "{} is semi_n in {} but r={} has r^2K in N, rK not in N for K={} (K #{ki})",
                                m.submodule_label(n),
                                m.full_label(),
                                m.describe_scalar(r),
                                sub_label(m, k)
                            ),
                            m,
                            &[(Flag::SemiN, n.members(), &semi)],
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn char_conv(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let domain = m.base().is_integral_domain();
        let ks = torsion_free_subs(m, subs);
        for n in subs.iter().filter(|n| n.is_proper()) {
            let cond = domain && k_condition_breaks(m, n.members(), &ks).is_none();
            scan.instance(cond);
            if !cond {
                continue;
            }
            let semi = s.semi_n(m, n.members());
            if !semi.holds() {
                scan.fail(|| {
                    let why = semi.violation().map(|v| describe_violation(m, v)).unwrap_or_default();
                    sub_witness(
                        format!(
                            "{} in {} over a domain meets the K-condition but is not semi_n ({why})",
                            m.submodule_label(n),
                            m.full_label()
                        ),
                        m,
                        &[(Flag::SemiN, n.members(), &semi)],
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn torsionfree_equiv(s: &Session, scan: &mut Scan) -> Outcome {
    for (mi, m, subs) in lattices(s, scan)? {
        let tf = m.is_torsion_free();
        for (si, n) in subs.iter().enumerate().filter(|(_, n)| n.is_proper()) {
            scan.instance(tf);
            if !tf {
                continue;
            }
            let c = s.core(mi, si)?;
            let (a, b, d) = (c.semi_r.holds(), c.semiprime.holds(), c.semi_n.holds());
            if a != b || b != d {
                scan.fail(|| {
                    sub_witness(
                        format!("{} in torsion-free {}: semi_r={a}, semiprime={b}, semi_n={d}", m.submodule_label(n), m.full_label()),
                        m,
                        &[
                            (Flag::SemiR, n.members(), &c.semi_r),
                            (Flag::Semiprime, n.members(), &c.semiprime),
                            (Flag::SemiN, n.members(), &c.semi_n),
                        ],
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn colon_ideal(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let tf = m.is_torsion_free();
        for n in subs.iter().filter(|n| n.is_proper()) {
            let semi = s.semi_n(m, n.members());
            let hyp = tf && semi.holds();
            scan.instance(hyp);
            if !hyp {
                continue;
            }
            let colon = m.colon_module_set(n.members());
            let v = scalar_ideal_is_semi_n(m, &colon);
            if !v.holds() {
                scan.fail(|| {
                    witness(
                        format!(
                            "{} is semi_n in torsion-free {} but (N:M)={} is not a semi n-ideal",
                            m.submodule_label(n),
                            m.full_label(),
                            describe_scalars(m, &colon)
                        ),
                        |w| {
                            w.expect_submodule(Flag::SemiN, m, n.members(), &semi)?;
                            expect_scalar_ideal(w, m, &colon, &v)
                        },
                    )
                });
            }
        }
    }
    Ok(None)
}
