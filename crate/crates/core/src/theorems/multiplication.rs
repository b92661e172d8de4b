//! Checks on multiplication modules: the two cited lemmas, `IM`, residuals,
//! `rad(N)` and `IN`.

use alloc::format;

use super::{
    describe_scalars, expect_scalar_ideal, lattices, scalar_ideal_is_semi_n, sub_label, sub_witness, witness, Scan, Session, Status,
};
use crate::classify::{weakly_pure_set, Flag};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::module::FiniteModule;
use crate::ring::FiniteRing;

type Outcome = Result<Option<Status>>;

/// `IJ` inside the ring, as members.
fn ideal_product(r: &FiniteRing, i: &ElemSet, j: &ElemSet) -> Result<ElemSet> {
    Ok(r.ideal_product(&r.ideal_from_closed_set(i.clone()), &r.ideal_from_closed_set(j.clone()))?.members().clone())
}

/// `(K :_R I)`.
fn ring_colon(r: &FiniteRing, k: &ElemSet, i: &ElemSet) -> ElemSet {
    ElemSet::from_predicate(r.order(), |x| i.iter().all(|a| k.contains(r.mul(x, a))))
}

/// `I` is faithful (`Ann_R(I) = 0`) and every ideal `K ⊆ I` equals `(K:I)I`.
/// Finitely generated holds for every ideal of a finite ring.
pub(super) fn faithful_multiplication_ideal(r: &FiniteRing, i: &ElemSet) -> Result<bool> {
    let ann = ElemSet::from_predicate(r.order(), |x| i.iter().all(|a| r.mul(x, a) == 0));
    if ann.count() != 1 {
        return Ok(false);
    }
    for k in r.ideals()?.iter().filter(|k| k.members().is_subset(i)) {
        if &ideal_product(r, &ring_colon(r, k.members(), i), i)? != k.members() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(super) fn smith(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let hyp = m.is_faithful() && m.is_multiplication()?;
        scan.instance(hyp);
        if !hyp {
            continue;
        }
        let r = m.base_ring().expect("a faithful module has a finite base here");
        let whole = ElemSet::full(m.order());
        for n in subs {
            let colon = m.colon_module_set(n.members());
            for i in m.scalar_ideals()? {
                scan.bump("pairs");
                let lhs = m.colon_module_set(&m.scalars_times_set(i, n.members()));
                let rhs = ideal_product(r, i, &colon)?;
                let im = m.colon_module_set(&m.scalars_times_set(i, &whole));
                if lhs != rhs || &im != i {
                    scan.fail(|| {
                        witness(
                            format!(
                                "{}: N={}, I={}: (IN:M)={}, I(N:M)={}, (IM:M)={}",
                                m.full_label(),
                                m.submodule_label(n),
                                describe_scalars(m, i),
                                describe_scalars(m, &lhs),
                                describe_scalars(m, &rhs),
                                describe_scalars(m, &im)
                            ),
                            |w| {
                                w.submodule(m, n.members())?;
                                w.ideal(r, i)?;
                                Ok(())
                            },
                        )
                    });
                }
            }
            let rad = m.rad_set(n.members())?;
            let formula = m.scalars_times_set(&m.scalar_radical(&colon), &whole);
            scan.bump("rad_identity");
            if rad != formula {
                scan.fail(|| {
                    witness(
                        format!(
                            "{}: rad({})={} but sqrt(N:M)M={}",
                            m.full_label(),
                            m.submodule_label(n),
                            sub_label(m, &rad),
                            sub_label(m, &formula)
                        ),
                        |w| w.submodule(m, n.members()).map(|_| ()),
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn majed(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        if !(m.is_faithful() && m.is_multiplication()?) {
            scan.instance(false);
            continue;
        }
        let r = m.base_ring().expect("a faithful module has a finite base here");
        for i in m.scalar_ideals()? {
            let hyp = faithful_multiplication_ideal(r, i)?;
            scan.instance(hyp);
            if !hyp {
                continue;
            }
            for n in subs {
                let back = m.colon_scalars_set(&m.scalars_times_set(i, n.members()), i);
                if &back != n.members() {
                    scan.fail(|| {
                        witness(
                            format!(
                                "{}: I={}, N={}, (IN:I)={}",
                                m.full_label(),
                                describe_scalars(m, i),
                                m.submodule_label(n),
                                sub_label(m, &back)
                            ),
                            |w| {
                                w.submodule(m, n.members())?;
                                w.ideal(r, i)?;
                                Ok(())
                            },
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}

fn ideal_module(m: &FiniteModule, i: &ElemSet) -> ElemSet {
    m.scalars_times_set(i, &ElemSet::full(m.order()))
}

pub(super) fn im1(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, _) in lattices(s, scan)? {
        let setting = m.is_multiplication()?;
        let tf = m.is_torsion_free();
        for i in m.scalar_ideals()? {
            let n = ideal_module(m, i);
            let semi = s.semi_n(m, &n);
            let hyp = setting && tf && semi.holds();
            scan.instance(hyp);
            if !hyp {
                continue;
            }
            let v = scalar_ideal_is_semi_n(m, i);
            if !v.holds() {
                scan.fail(|| {
                    witness(
                        format!(
                            "{}: N=IM={} is semi_n, I={} is not a semi n-ideal",
                            m.full_label(),
                            sub_label(m, &n),
                            describe_scalars(m, i)
                        ),
                        |w| {
                            w.expect_submodule(Flag::SemiN, m, &n, &semi)?;
                            expect_scalar_ideal(w, m, i, &v)
                        },
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn im2(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, _) in lattices(s, scan)? {
        let setting = m.base().is_integral_domain() && m.is_multiplication()?;
        for i in m.scalar_ideals()? {
            let v = scalar_ideal_is_semi_n(m, i);
            let hyp = setting && v.holds();
            scan.instance(hyp);
            if !hyp {
                continue;
            }
            let n = ideal_module(m, i);
            let semi = s.semi_n(m, &n);
            if !semi.holds() {
                scan.fail(|| {
                    witness(
                        format!(
                            "{}: I={} is a semi n-ideal, IM={} is not semi_n",
                            m.full_label(),
                            describe_scalars(m, i),
                            sub_label(m, &n)
                        ),
                        |w| {
                            expect_scalar_ideal(w, m, i, &v)?;
                            w.expect_submodule(Flag::SemiN, m, &n, &semi)
                        },
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn nm_equiv(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let setting = m.is_multiplication()? && m.is_torsion_free();
        for n in subs.iter().filter(|n| n.is_proper()) {
            scan.instance(setting);
            if !setting {
                continue;
            }
            let semi = s.semi_n(m, n.members());
            let colon = m.colon_module_set(n.members());
            let two = scalar_ideal_is_semi_n(m, &colon).holds();
            let three = m.scalar_ideals()?.iter().any(|i| &ideal_module(m, i) == n.members() && scalar_ideal_is_semi_n(m, i).holds());
            if semi.holds() != two || two != three {
                scan.fail(|| {
                    sub_witness(
                        format!(
                            "{} in {}: semi_n={}, (N:M) semi n-ideal={two}, N=IM with I semi n-ideal={three}",
                            m.submodule_label(n),
                            m.full_label(),
                            semi.holds()
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

pub(super) fn rad_remark(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let setting = m.base().is_integral_domain() && m.is_multiplication()?;
        for n in subs {
            let root = m.scalar_radical(&m.colon_module_set(n.members()));
            let hyp = setting && scalar_ideal_is_semi_n(m, &root).holds();
            scan.instance(hyp);
            if !hyp {
                continue;
            }
            let rad = m.rad_set(n.members())?;
            let semi = s.semi_n(m, &rad);
            if !semi.holds() {
                scan.fail(|| {
                    sub_witness(
                        format!(
                            "{}: sqrt(N:M)={} is a semi n-ideal for N={} but rad(N)={} is not semi_n",
                            m.full_label(),
                            describe_scalars(m, &root),
                            m.submodule_label(n),
                            sub_label(m, &rad)
                        ),
                        m,
                        &[(Flag::SemiN, &rad, &semi)],
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn in1(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let setting = m.base().is_integral_domain() && m.is_faithful() && m.is_multiplication()?;
        for n in subs.iter().filter(|n| n.is_proper()) {
            let semi = s.semi_n(m, n.members());
            let pure = setting && semi.holds() && weakly_pure_set(m, n.members())?.holds();
            for i in m.scalar_ideals()? {
                let hyp = pure && scalar_ideal_is_semi_n(m, i).holds();
                scan.instance(hyp);
                if !hyp {
                    continue;
                }
                let i_n = m.scalars_times_set(i, n.members());
                let v = s.semi_n(m, &i_n);
                if !v.holds() {
                    scan.fail(|| {
                        sub_witness(
                            format!(
                                "{}: N={} weakly pure semi_n, I={} semi n-ideal, IN={} not semi_n",
                                m.full_label(),
                                m.submodule_label(n),
                                describe_scalars(m, i),
                                sub_label(m, &i_n)
                            ),
                            m,
                            &[(Flag::SemiN, n.members(), &semi), (Flag::SemiN, &i_n, &v)],
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn in2(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let setting = m.base().is_integral_domain() && m.is_faithful() && m.is_multiplication()?;
        for n in subs.iter().filter(|n| n.is_proper()) {
            for i in m.scalar_ideals()? {
                let hyp = setting
                    && faithful_multiplication_ideal(m.base_ring().expect("faithful implies finite base"), i)?
                    && s.semi_n(m, &m.scalars_times_set(i, n.members())).holds();
                scan.instance(hyp);
                if !hyp {
                    continue;
                }
                let semi = s.semi_n(m, n.members());
                if !semi.holds() {
                    let i_n = m.scalars_times_set(i, n.members());
                    scan.fail(|| {
                        sub_witness(
                            format!(
                                "{}: I={} faithful multiplication, IN={} semi_n, N={} not semi_n",
                                m.full_label(),
                                describe_scalars(m, i),
                                sub_label(m, &i_n),
                                m.submodule_label(n)
                            ),
                            m,
                            &[(Flag::SemiN, &i_n, &s.semi_n(m, &i_n)), (Flag::SemiN, n.members(), &semi)],
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}
