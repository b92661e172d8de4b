//! Module-level operations against oracles written straight from the
//! definitions, without going through the classifier.

use proptest::prelude::*;
use smlab_core::arith::{is_prime_power, radical};
use smlab_core::classify::{classify_ideal, classify_submodule, is_n_submodule, is_semi_n_submodule};
use smlab_core::construct::{embed_ideal, idealization, idealization_parts};
use smlab_core::{BaseRing, Caps, ElemSet, FiniteModule, FiniteRing, Module, ModuleHom, Ring, ScalarSet, Verdict, Violation};

fn zn(n: usize) -> Ring {
    FiniteRing::zn(n).unwrap()
}

fn over_z(k: usize) -> Module {
    FiniteModule::cyclic(k, &BaseRing::Integers).unwrap()
}

fn over_zn(k: usize, n: usize) -> Module {
    FiniteModule::cyclic(k, &BaseRing::Finite(zn(n))).unwrap()
}

fn sub(m: &Module, gens: &[usize]) -> smlab_core::Submodule {
    m.submodule(gens).unwrap()
}

/// Every submodule of a small module: each subset of the elements that
/// contains 0 and is closed under addition and the scalar action.
fn oracle_all_submodules(m: &FiniteModule) -> Vec<Vec<usize>> {
    let n = m.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let has = |x: usize| mask >> x & 1 == 1;
        let elems: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        let closed = elems.iter().all(|&a| elems.iter().all(|&b| has(m.add(a, b))) && m.scalars().all(|s| has(m.act(s, a))));
        if closed {
            out.push(elems);
        }
    }
    out.sort();
    out
}

/// Closure of every generating set of at most two elements.
fn oracle_two_generated(m: &FiniteModule) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in m.elements() {
        for b in a..m.order() {
            let mut set = vec![false; m.order()];
            for s in m.scalars() {
                for t in m.scalars() {
                    set[m.add(m.act(s, a), m.act(t, b))] = true;
                }
            }
            let v: Vec<usize> = (0..m.order()).filter(|&x| set[x]).collect();
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

fn lattice(m: &FiniteModule) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = m.submodules().unwrap().iter().map(|s| s.members().to_vec()).collect();
    v.sort();
    v
}

/// The semi n-submodule definition over `ℤ_n`-modules `ℤ_k`, on integers:
/// `r²m ∈ N, r ∉ √0, Ann(m) = 0 ⇒ rm ∈ N` with `N = dℤ_k`.
fn oracle_semi_n_zn(k: usize, n: usize, d: usize) -> bool {
    let nil = |r: usize| (1..=n).any(|e| (0..e).fold(1 % n, |x, _| x * r % n) == 0);
    let ann_zero = |m: usize| (1..n).all(|r| !(r * m).is_multiple_of(k));
    let in_n = |x: usize| x.is_multiple_of(d);
    (0..n).all(|r| nil(r) || (0..k).all(|m| !ann_zero(m) || !in_n(r * r * m % k) || in_n(r * m % k)))
}

/// The n-submodule definition over `ℤ`: `rm ∈ N, r ∉ √Ann(M) ⇒ m ∈ N`,
/// with `r` ranging over integers `1..=2e` (the action is periodic in `e`).
fn oracle_n_sub_z(k: usize, d: usize) -> bool {
    let rad = radical(k as u64) as usize;
    (1..=2 * k).filter(|r| r % rad != 0).all(|r| (0..k).all(|m| !(r * m % k).is_multiple_of(d) || m % d == 0))
}

#[test]
fn cyclic_modules() {
    let m = over_z(12);
    assert_eq!(m.exponent(), 12);
    assert_eq!(m.order(), 12);
    assert!(over_z(1).is_zero_module());
    assert_eq!(over_zn(4, 12).order(), 4);
    let err = FiniteModule::cyclic(5, &BaseRing::Finite(zn(12))).err().unwrap();
    assert!(err.to_string().contains("5 does not divide 12"), "{err}");
}

#[test]
fn submodule_enumeration_matches_oracles() {
    assert_eq!(over_z(12).submodules().unwrap().len(), 6);
    assert_eq!(over_z(1).submodules().unwrap().len(), 1);

    let z6 = zn(6);
    let r6 = FiniteModule::regular(&z6).unwrap();
    let sq = FiniteModule::product(&r6, &r6).unwrap();
    assert_eq!(lattice(&sq), oracle_two_generated(&sq));

    let z2 = over_zn(2, 2);
    let z4 = over_zn(4, 4);
    let small: Vec<Module> = vec![
        over_z(12),
        over_zn(8, 8),
        FiniteModule::product(&z2, &z2).unwrap(),
        FiniteModule::product(&z4, &over_zn(2, 4)).unwrap(),
        FiniteModule::product(&over_z(4), &over_z(2)).unwrap(),
        FiniteModule::product(&FiniteModule::product(&over_z(2), &over_z(2)).unwrap(), &over_z(2)).unwrap(),
    ];
    for m in small {
        assert_eq!(lattice(&m), oracle_all_submodules(&m), "{}", m.full_label());
    }
}

#[test]
fn annihilators() {
    let z = over_z(12);
    assert_eq!(z.ann_elem(4), ScalarSet::Multiples(3));
    assert_eq!(z.ann_module(), ScalarSet::Multiples(12));
    let r = FiniteModule::regular(&zn(12)).unwrap();
    assert!(r.ann_elem(1).is_zero());
}

#[test]
fn residuals() {
    let z = over_z(12);
    assert_eq!(z.colon_module(&sub(&z, &[4])).unwrap(), ScalarSet::Multiples(4));

    let z12 = zn(12);
    let m = over_zn(4, 12);
    let n = sub(&m, &[2]);
    assert_eq!(m.colon_scalars(&n, &ScalarSet::Ideal(z12.unit_ideal())).unwrap(), n);
    let two = ScalarSet::Ideal(z12.ideal(&[2]).unwrap());
    assert_eq!(m.colon_scalars(&n, &two).unwrap(), m.whole());
    let wrong = ScalarSet::Ideal(zn(6).ideal(&[2]).unwrap());
    assert!(m.colon_scalars(&n, &wrong).is_err());
}

#[test]
fn torsion() {
    let r6 = FiniteModule::regular(&zn(6)).unwrap();
    assert_eq!(r6.torsion().to_vec(), vec![0, 2, 3, 4]);
    assert_eq!(over_z(1).torsion().to_vec(), vec![0]);
    assert_eq!(over_z(12).torsion().count(), 12);
    assert!(!r6.is_torsion_free());
    assert!(FiniteModule::regular(&zn(5)).unwrap().is_torsion_free());
}

#[test]
fn radical_of_submodules() {
    let z = over_z(12);
    assert_eq!(z.rad_submodule(&sub(&z, &[4])).unwrap(), sub(&z, &[2]));
    assert_eq!(z.rad_submodule(&z.whole()).unwrap(), z.whole());
}

#[test]
fn classification_examples() {
    let z = over_z(12);
    let pv = classify_submodule(&z, &sub(&z, &[4])).unwrap();
    assert!(pv.semi_n.holds());
    assert_eq!(pv.n_sub, Verdict::Fails(Violation::Pair { r: 2, m: 2 }));
    for n in z.submodules().unwrap().iter().filter(|n| n.is_proper()) {
        assert!(is_n_submodule(&z, n).unwrap().fails());
        assert!(is_semi_n_submodule(&z, n).unwrap().holds());
    }

    let m = over_zn(4, 12);
    assert!(classify_submodule(&m, &sub(&m, &[2])).unwrap().n_sub.holds());
    assert!(classify_submodule(&m, &m.zero_submodule()).unwrap().semi_n.holds());
    assert_eq!(classify_submodule(&m, &m.whole()).unwrap().semi_n, Verdict::NotApplicable);

    let r = FiniteModule::regular(&zn(12)).unwrap();
    assert!(is_semi_n_submodule(&r, &sub(&r, &[2])).unwrap().holds());

    let z12 = zn(12);
    let big = idealization(&z12, &over_zn(4, 12)).unwrap();
    let i = z12.ideal(&[2]).unwrap();
    let (_, module) = idealization_parts(&big).unwrap();
    let n = sub(module, &[2]);
    let joined = embed_ideal(&big, &i, &n).unwrap();
    let reg = FiniteModule::regular(&big).unwrap();
    let as_sub = reg.submodule_from_members(joined.members().clone()).unwrap();
    let v = is_semi_n_submodule(&reg, &as_sub).unwrap();
    let Verdict::Fails(Violation::Pair { r, m }) = v else { panic!("expected a pair witness, got {v:?}") };
    assert!(!big.is_nilpotent(r));
    assert!(reg.ann_is_zero(m));
    assert!(joined.contains(big.mul(big.mul(r, r), m)));
    assert!(!joined.contains(big.mul(r, m)));
}

#[test]
fn sqrt_colon_decomposition() {
    let r = FiniteModule::regular(&zn(12)).unwrap();
    assert_eq!(r.sqrt_colon_decomposition_holds(&sub(&r, &[2]), 1).unwrap(), Some(true));
    assert_eq!(r.sqrt_colon_decomposition_holds(&r.zero_submodule(), 5).unwrap(), Some(true));
    assert_eq!(r.sqrt_colon_decomposition_holds(&sub(&r, &[2]), 2).unwrap(), None);
    assert_eq!(r.sqrt_colon_decomposition_holds(&sub(&r, &[4]), 1).unwrap(), Some(false));
}

#[test]
fn quotients_and_homs() {
    let z = over_z(12);
    let (q, proj) = FiniteModule::quotient(&z, &sub(&z, &[6])).unwrap();
    assert_eq!(q.order(), 6);
    assert_eq!(ModuleHom::identity(&z).kernel(), z.zero_submodule());
    let img = proj.image(&sub(&z, &[4])).unwrap();
    assert_eq!(img.order(), 3);
    assert_eq!(proj.kernel(), sub(&z, &[6]));
    assert_eq!(proj.preimage(&img).unwrap(), sub(&z, &[2]));
    // 1 ↦ 1 from ℤ_12 to ℤ_5 violates 12·1 = 0.
    assert!(ModuleHom::from_generators(&z, &over_z(5), &[(1, 1)]).is_err());
    let h = ModuleHom::from_generators(&z, &over_z(4), &[(1, 1)]).unwrap();
    assert!(h.is_surjective());
    assert_eq!(h.kernel(), sub(&z, &[4]));
}

#[test]
fn localization() {
    let z = over_z(12);
    let (l, _) = FiniteModule::localize(&z, &[2]).unwrap();
    assert_eq!(l.order(), 3);
    let (l, map) = FiniteModule::localize(&z, &[1]).unwrap();
    assert_eq!(l.order(), 12);
    assert!(map.is_injective());
    let (l, _) = FiniteModule::localize(&z, &[6]).unwrap();
    assert!(l.is_zero_module());
    assert!(FiniteModule::localize(&z, &[0]).is_err());
    let m = over_zn(4, 12);
    assert!(FiniteModule::localize(&m, &[5]).unwrap().0.same_as(&m));
    assert!(FiniteModule::localize(&m, &[2]).is_err());
}

#[test]
fn ideals_as_submodules_bridge() {
    let caps = Caps::default();
    for n in 2..=36 {
        let r = zn(n);
        let reg = FiniteModule::regular(&r).unwrap();
        for i in r.enumerate_ideals(&caps).unwrap() {
            let as_sub = reg.submodule_from_members(i.members().clone()).unwrap();
            let a = classify_ideal(&r, &i).unwrap().semi_n.as_bool();
            let b = is_semi_n_submodule(&reg, &as_sub).unwrap().as_bool();
            assert_eq!(a, b, "Z{n}, {:?}", i);
        }
    }
}

proptest! {
    #[test]
    fn semi_n_over_zn_matches_definition(n in 2usize..40, k_pick in 0usize..8, g in 0usize..40) {
        let divisors: Vec<usize> = (1..=n).filter(|k| n % k == 0).collect();
        let k = divisors[k_pick % divisors.len()];
        prop_assume!(k > 1);
        let m = over_zn(k, n);
        let d = gcd(g % k, k);
        let s = sub(&m, &[d % k]);
        prop_assume!(s.is_proper());
        prop_assert_eq!(is_semi_n_submodule(&m, &s).unwrap().holds(), oracle_semi_n_zn(k, n, d));
    }

    #[test]
    fn integer_modules(k in 2usize..61, g in 0usize..61) {
        let m = over_z(k);
        let d = gcd(g % k, k);
        let d = if d == 0 { k } else { d };
        let s = sub(&m, &[d % k]);
        prop_assume!(s.is_proper());
        prop_assert!(is_semi_n_submodule(&m, &s).unwrap().holds());
        prop_assert_eq!(is_n_submodule(&m, &s).unwrap().holds(), oracle_n_sub_z(k, d));
        if !is_prime_power(k as u64) {
            prop_assert!(is_n_submodule(&m, &s).unwrap().fails());
        }
    }

    #[test]
    fn module_axioms(a in 1usize..9, b in 1usize..9) {
        let m = FiniteModule::product(&over_z(a), &over_z(b)).unwrap();
        prop_assert!(m.verify_axioms().is_ok());
        let total: usize = m.submodules().unwrap().iter().filter(|s| s.is_subset(&m.whole())).count();
        prop_assert_eq!(total, m.submodules().unwrap().len());
    }

    #[test]
    fn span_is_smallest_closed_superset(k in 2usize..30, x in 0usize..30, y in 0usize..30) {
        let m = over_zn(k, k);
        let span = m.span(&[x % k, y % k]).unwrap();
        let g = gcd(gcd(x % k, y % k), k);
        let expect = ElemSet::from_predicate(k, |e| e % g == 0);
        prop_assert_eq!(span, expect);
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
