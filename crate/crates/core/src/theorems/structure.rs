//! Residuals, maximality, homomorphic images, localization, intersections and
//! direct products.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{describe_scalars, lattice, lattices, sub_label, witness, Scan, Session, Status, ZnReading};
use crate::arith::radical;
use crate::catalog::HomKind;
use crate::classify::{prime_set, Flag, Verdict};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::module::{FiniteModule, Module, ModuleHom};

type Outcome = Result<Option<Status>>;

/// `(N :_M I)` for a scalar-domain set `I`.
fn colon_set(m: &FiniteModule, n: &ElemSet, i: &ElemSet) -> ElemSet {
    m.colon_scalars_set(n, i)
}

pub(super) fn n_colon_i(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let domain = m.base().is_integral_domain();
        for n in subs.iter().filter(|n| n.is_proper()) {
            let semi = domain && s.semi_n(m, n.members()).holds();
            let check = |scan: &mut Scan, what: &'static str, i: &ElemSet, label: &dyn Fn() -> alloc::string::String| {
                let c = colon_set(m, n.members(), i);
                let hyp = semi && !c.is_full();
                scan.instance(hyp);
                if !hyp {
                    return;
                }
                scan.bump(what);
                let v = s.semi_n(m, &c);
                if !v.holds() {
                    scan.fail(|| {
                        witness(
                            format!(
                                "{}: N={} semi_n but (N:{})={} is not semi_n",
                                m.full_label(),
                                m.submodule_label(n),
                                label(),
                                sub_label(m, &c)
                            ),
                            |w| {
                                w.expect_submodule(Flag::SemiN, m, n.members(), &Verdict::Holds)?;
                                w.expect_submodule(Flag::SemiN, m, &c, &v)
                            },
                        )
                    });
                }
            };
            for i in m.scalar_ideals()? {
                check(scan, "ideals", i, &|| describe_scalars(m, i));
            }
            for a in m.scalars() {
                let single = ElemSet::from_iter(m.scalar_count(), [a]);
                check(scan, "scalars", &single, &|| m.describe_scalar(a));
            }
        }
    }
    Ok(None)
}

pub(super) fn maximal_prime(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let domain = m.base().is_integral_domain();
        let semi: Vec<&ElemSet> = subs.iter().filter(|n| n.is_proper()).map(|n| n.members()).filter(|n| s.semi_n(m, n).holds()).collect();
        for n in &semi {
            let maximal = !semi.iter().any(|o| o.count() > n.count() && n.is_subset(o));
            if !maximal {
                continue;
            }
            scan.instance(domain);
            if !domain {
                continue;
            }
            let p = prime_set(m, n);
            if !p.holds() {
                scan.fail(|| {
                    witness(format!("{}: {} is a maximal semi_n submodule but not prime", m.full_label(), sub_label(m, n)), |w| {
                        w.expect_submodule(Flag::SemiN, m, n, &Verdict::Holds)?;
                        w.expect_submodule(Flag::Prime, m, n, &p)
                    })
                });
            }
        }
    }
    Ok(None)
}

fn image(h: &ModuleHom, n: &ElemSet) -> ElemSet {
    ElemSet::from_iter(h.dst().order(), n.iter().map(|x| h.apply(x)))
}

fn preimage(h: &ModuleHom, n: &ElemSet) -> ElemSet {
    ElemSet::from_predicate(h.src().order(), |x| n.contains(h.apply(x)))
}

fn hom_witness(
    detail: alloc::string::String,
    src: &Module,
    n: &ElemSet,
    vn: &Verdict,
    dst: &Module,
    t: &ElemSet,
    vt: &Verdict,
) -> super::Witness {
    witness(detail, |w| {
        w.expect_submodule(Flag::SemiN, src, n, vn)?;
        w.expect_submodule(Flag::SemiN, dst, t, vt)
    })
}

/// Images of semi_n submodules containing the kernel, over `homs`.
fn images_of(s: &Session, scan: &mut Scan, keep: impl Fn(HomKind, &ModuleHom) -> bool) -> Outcome {
    for entry in s.catalog.homs.iter().filter(|e| keep(e.kind, &e.hom)) {
        let h = &entry.hom;
        let (src, dst) = (h.src(), h.dst());
        let Some(subs) = lattice(src, scan)? else { continue };
        let ker = h.kernel();
        for n in subs.iter().filter(|n| n.is_proper()) {
            let vn = s.semi_n(src, n.members());
            let hyp = ker.members().is_subset(n.members()) && vn.holds();
            scan.instance(hyp);
            if !hyp {
                continue;
            }
            let t = image(h, n.members());
            let vt = s.semi_n(dst, &t);
            if !vt.holds() {
                scan.fail(|| {
                    hom_witness(
                        format!(
                            "{} -> {}: N={} semi_n contains the kernel, f(N)={} is not semi_n",
                            src.full_label(),
                            dst.full_label(),
                            src.submodule_label(n),
                            sub_label(dst, &t)
                        ),
                        src,
                        n.members(),
                        &vn,
                        dst,
                        &t,
                        &vt,
                    )
                });
            }
        }
    }
    Ok(None)
}

pub(super) fn fsub1(s: &Session, scan: &mut Scan) -> Outcome {
    images_of(s, scan, |_, h| h.is_surjective())
}

pub(super) fn quotient(s: &Session, scan: &mut Scan) -> Outcome {
    images_of(s, scan, |k, _| k == HomKind::Projection)
}

pub(super) fn fsub2(s: &Session, scan: &mut Scan) -> Outcome {
    for entry in s.catalog.homs.iter().filter(|e| e.hom.is_injective() && e.hom.is_surjective()) {
        let h = &entry.hom;
        let (src, dst) = (h.src(), h.dst());
        let Some(subs) = lattice(dst, scan)? else { continue };
        for t in subs.iter().filter(|t| t.is_proper()) {
            let vt = s.semi_n(dst, t.members());
            scan.instance(vt.holds());
            if !vt.holds() {
                continue;
            }
            let n = preimage(h, t.members());
            let vn = s.semi_n(src, &n);
            if !vn.holds() {
                scan.fail(|| {
                    hom_witness(
                        format!(
                            "{} -> {} isomorphism: N'={} semi_n, f^-1(N')={} is not semi_n",
                            src.full_label(),
                            dst.full_label(),
                            dst.submodule_label(t),
                            sub_label(src, &n)
                        ),
                        dst,
                        t.members(),
                        &vt,
                        src,
                        &n,
                        &vn,
                    )
                });
            }
        }
    }
    Ok(None)
}

/// A multiplicatively closed `S ⊆ reg(R)` given by one generator, with its
/// scalar-domain members.
struct MultSet {
    gen: i64,
    members: ElemSet,
}

/// Finite bases: the powers of each unit. Over `ℤ`: the powers of each prime
/// dividing the exponent, of its radical, and of the least prime not dividing it.
fn mult_sets(m: &FiniteModule) -> Vec<MultSet> {
    let powers = |g: usize| {
        let mut set = ElemSet::empty(m.scalar_count());
        let mut p = g;
        while set.insert(p) {
            p = m.scalar_mul(p, g);
        }
        set
    };
    match m.base_ring() {
        Some(r) => r.units().iter().map(|u| MultSet { gen: u as i64, members: powers(u) }).collect(),
        None => {
            let e = m.exponent() as u64;
            let mut gens: Vec<u64> =
                crate::arith::divisors(e).into_iter().filter(|&p| p > 1 && radical(p) == p && crate::arith::is_prime_power(p)).collect();
            let rad = radical(e);
            if !gens.contains(&rad) {
                gens.push(rad);
            }
            let q = (2u64..)
                .find(|&q| crate::arith::is_prime_power(q) && radical(q) == q && !e.is_multiple_of(q))
                .expect("primes are unbounded");
            gens.push(q);
            gens.into_iter()
                .map(|g| {
                    let rep = match (g % e) as usize {
                        0 => m.exponent(),
                        x => x,
                    };
                    MultSet { gen: g as i64, members: powers(rep) }
                })
                .collect()
        }
    }
}

/// `Z_N` under the chosen reading, as scalar-domain members.
fn z_n(m: &FiniteModule, n: &ElemSet, reading: ZnReading) -> ElemSet {
    match reading {
        ZnReading::Elementwise => {
            ElemSet::from_predicate(m.scalar_count(), |r| m.elements().any(|x| !n.contains(x) && n.contains(m.act(r, x))))
        }
        ZnReading::ColonZeroDivisors => {
            let c = m.colon_module_set(n);
            ElemSet::from_predicate(m.scalar_count(), |r| m.scalars().any(|t| !c.contains(t) && c.contains(m.scalar_mul(r, t))))
        }
    }
}

pub(super) fn sm(s: &Session, scan: &mut Scan, part: u8) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        for set in mult_sets(m) {
            let (q, proj) = FiniteModule::localize(m, &[set.gen])?;
            scan.bump(if m.is_over_integers() { "integer_base" } else { "finite_base" });
            for n in subs.iter().filter(|n| n.is_proper()) {
                let local = image(&proj, n.members());
                let vn = s.semi_n(m, n.members());
                let vl = s.semi_n(&q, &local);
                let (hyp, ok) = if part == 1 {
                    let union = ElemSet::from_predicate(m.order(), |x| set.members.iter().any(|t| n.contains(m.act(t, x))));
                    (vn.holds() && !union.is_full(), vl.holds())
                } else {
                    let z = z_n(m, n.members(), s.zn_reading);
                    (vl.holds() && set.members.intersection(&z).is_empty(), vn.holds())
                };
                scan.instance(hyp);
                if hyp && !ok {
                    scan.fail(|| {
                        hom_witness(
                            format!(
                                "{}: S generated by {}, N={} (semi_n={}), S^-1N={} in S^-1M={} (semi_n={})",
                                m.full_label(),
                                set.gen,
                                m.submodule_label(n),
                                vn.holds(),
                                sub_label(&q, &local),
                                q.full_label(),
                                vl.holds()
                            ),
                            m,
                            n.members(),
                            &vn,
                            &q,
                            &local,
                            &vl,
                        )
                    });
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn intersections(s: &Session, scan: &mut Scan) -> Outcome {
    for (_, m, subs) in lattices(s, scan)? {
        let family: Vec<&ElemSet> = subs.iter().filter(|n| n.is_proper()).map(|n| n.members()).filter(|n| s.semi_n(m, n).holds()).collect();
        let check = |scan: &mut Scan, what: &'static str, result: ElemSet, members: &[&ElemSet]| {
            scan.instance(true);
            scan.bump(what);
            let v = s.semi_n(m, &result);
            if !v.holds() {
                scan.fail(|| {
                    let labels: Vec<_> = members.iter().map(|n| sub_label(m, n)).collect();
                    witness(
                        format!(
                            "{}: {what} of semi_n submodules {} is {} and not semi_n",
                            m.full_label(),
                            labels.join(", "),
                            sub_label(m, &result)
                        ),
                        |w| {
                            for n in members {
                                w.expect_submodule(Flag::SemiN, m, n, &Verdict::Holds)?;
                            }
                            w.expect_submodule(Flag::SemiN, m, &result, &v)
                        },
                    )
                });
            }
        };
        for (i, a) in family.iter().enumerate() {
            for b in &family[i + 1..] {
                check(scan, "pair_intersections", a.intersection(b), &[a, b]);
                if a.is_subset(b) || b.is_subset(a) {
                    check(scan, "chain_unions", a.union(b), &[a, b]);
                }
            }
        }
        if family.len() > 2 {
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed ^ m.key());
            for _ in 0..32 {
                let picked: Vec<&ElemSet> = family.iter().copied().filter(|_| rng.next_u32() & 1 == 1).collect();
                if picked.is_empty() {
                    continue;
                }
                let meet = picked.iter().fold(ElemSet::full(m.order()), |acc, n| acc.intersection(n));
                check(scan, "sampled_intersections", meet, &picked);
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum CartPart {
    Forward,
    Converse,
    Corollary,
}

pub(super) fn cart(s: &Session, scan: &mut Scan, part: CartPart) -> Outcome {
    for p in &s.catalog.products {
        let (Some(ls), Some(rs)) = (lattice(&p.left, scan)?, lattice(&p.right, scan)?) else { continue };
        let w = p.right.order();
        let (tf1, tf2) = (p.left.is_torsion_free(), p.right.is_torsion_free());
        for n1 in ls {
            for n2 in rs {
                if !n1.is_proper() && !n2.is_proper() {
                    continue;
                }
                let n = ElemSet::from_predicate(p.product.order(), |x| n1.contains(x / w) && n2.contains(x % w));
                let vn = s.semi_n(&p.product, &n);
                let v1 = s.semi_n(&p.left, n1.members());
                let v2 = s.semi_n(&p.right, n2.members());
                // a factor equal to its module imposes nothing
                let ok1 = !n1.is_proper() || v1.holds();
                let ok2 = !n2.is_proper() || v2.holds();
                let both_proper = n1.is_proper() && n2.is_proper();
                let direction = |scan: &mut Scan, key: &'static str, hyp: bool, concl: bool| {
                    scan.instance(hyp);
                    if !hyp {
                        return;
                    }
                    scan.bump(key);
                    if !concl {
                        scan.fail(|| {
                            witness(
                                format!(
                                    "{} x {}: N1={} (semi_n={}), N2={} (semi_n={}), N1xN2 semi_n={}",
                                    p.left.full_label(),
                                    p.right.full_label(),
                                    p.left.submodule_label(n1),
                                    v1.holds(),
                                    p.right.submodule_label(n2),
                                    v2.holds(),
                                    vn.holds()
                                ),
                                |w| {
                                    if n1.is_proper() {
                                        w.expect_submodule(Flag::SemiN, &p.left, n1.members(), &v1)?;
                                    }
                                    if n2.is_proper() {
                                        w.expect_submodule(Flag::SemiN, &p.right, n2.members(), &v2)?;
                                    }
                                    w.expect_submodule(Flag::SemiN, &p.product, &n, &vn)
                                },
                            )
                        });
                    }
                };
                match part {
                    CartPart::Forward => direction(scan, "forward", vn.holds(), ok1 && ok2),
                    CartPart::Converse => {
                        let tf = (!n1.is_proper() || tf1) && (!n2.is_proper() || tf2);
                        direction(scan, "converse", tf && ok1 && ok2, vn.holds())
                    }
                    CartPart::Corollary => {
                        if both_proper {
                            direction(scan, "forward", vn.holds(), v1.holds() && v2.holds());
                            direction(scan, "converse", tf1 && tf2 && v1.holds() && v2.holds(), vn.holds());
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}
