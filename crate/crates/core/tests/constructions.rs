//! Idealization, duplication and amalgamation against their defining
//! formulas, computed on the component rings and modules.

use proptest::prelude::*;
use smlab_core::construct::{amalgam_ring, embed_ideal, idealization};
use smlab_core::Amalgam;
use smlab_core::{BaseRing, Duplication, ElemSet, FiniteModule, FiniteRing, Module, Ring, RingHom, SemilinearMap};

fn zn(n: usize) -> Ring {
    FiniteRing::zn(n).unwrap()
}

fn over_zn(k: usize, n: usize) -> Module {
    FiniteModule::cyclic(k, &BaseRing::Finite(zn(n))).unwrap()
}

/// Nilpotents of any finite ring by repeated multiplication.
fn nilpotents(r: &FiniteRing) -> ElemSet {
    ElemSet::from_predicate(r.order(), |a| {
        let mut x = a;
        for _ in 0..r.order() {
            if x == 0 {
                return true;
            }
            x = r.mul(x, a);
        }
        x == 0
    })
}

#[test]
fn idealization_z12_z4() {
    let z12 = zn(12);
    let m = over_zn(4, 12);
    let r = idealization(&z12, &m).unwrap();
    assert_eq!(r.order(), 48);
    assert!(r.verify_axioms().is_ok());
    let nil = nilpotents(&r);
    assert_eq!(nil.count(), 8);
    assert_eq!(r.nilradical_set(), &nil);
    // ids are r·|M| + m; √0 = {0,6}(+)ℤ_4
    assert_eq!(nil, ElemSet::from_predicate(48, |x| x / 4 == 0 || x / 4 == 6));

    let two = z12.ideal(&[2]).unwrap();
    let n2 = m.submodule(&[2]).unwrap();
    assert!(embed_ideal(&r, &two, &n2).is_ok());
    assert!(embed_ideal(&r, &z12.ideal(&[1]).unwrap(), &n2).is_err());
    let whole = embed_ideal(&r, &z12.unit_ideal(), &m.whole()).unwrap();
    assert!(!whole.is_proper());
}

#[test]
fn embedding_legality_is_im_in_n() {
    for (n, k) in [(12, 4), (8, 8), (6, 3), (4, 2), (9, 9)] {
        let base = zn(n);
        let m = over_zn(k, n);
        let r = idealization(&base, &m).unwrap();
        for i in base.ideals().unwrap() {
            for s in m.submodules().unwrap() {
                let im = (0..k).filter(|&x| i.members().iter().any(|a| (0..k).any(|y| (a * y) % k == x)));
                let legal = im.into_iter().all(|x| s.contains(x));
                assert_eq!(embed_ideal(&r, i, s).is_ok(), legal, "{} {:?} {:?}", r.label(), i, s);
            }
        }
    }
}

#[test]
fn duplication_sizes() {
    let z8 = zn(8);
    let m = over_zn(8, 8);
    let d = Duplication::new(&m, &z8.ideal(&[4]).unwrap()).unwrap();
    assert_eq!(d.ring.order(), 16);
    assert_eq!(d.dup.order(), 16);
    assert!(d.ring.verify_axioms().is_ok());
    assert!(d.dup.verify_axioms().is_ok());

    let d0 = Duplication::new(&m, &z8.zero_ideal()).unwrap();
    assert_eq!(d0.ring.order(), 8);
    assert_eq!(d0.dup.order(), 8);

    let n0 = d.n_join(&m.zero_submodule()).unwrap();
    let expect: Vec<(usize, usize)> = vec![(0, 0), (0, 4)];
    let got: Vec<(usize, usize)> = n0
        .members()
        .iter()
        .map(|x| (0..8).flat_map(|a| (0..8).map(move |b| (a, b))).find(|&(a, b)| d.module_elem(a, b) == Some(x)).unwrap())
        .collect();
    assert_eq!(got, expect);
}

/// `Ann(M ⋈ J)` by scanning the duplication ring against the formula.
#[test]
fn duplication_annihilator_formula() {
    for (n, k, g) in [(12, 4, 2), (12, 6, 3), (8, 4, 4), (8, 8, 2), (9, 3, 3), (6, 6, 2), (12, 12, 6)] {
        let r = zn(n);
        let m = over_zn(k, n);
        let j = r.ideal(&[g]).unwrap();
        let d = Duplication::new(&m, &j).unwrap();
        let scanned = ElemSet::from_predicate(d.ring.order(), |s| d.dup.elements().all(|x| d.dup.act(s, x) == 0));
        assert_eq!(scanned, d.ann_formula(), "{}", d.dup.full_label());
        assert_eq!(d.dup.is_faithful(), m.is_faithful());
    }
}

#[test]
fn duplication_is_amalgam_along_identity() {
    for (n, k, g) in [(12, 4, 2), (8, 8, 4), (12, 12, 6), (9, 9, 3), (6, 2, 3)] {
        let r = zn(n);
        let m = over_zn(k, n);
        let j = r.ideal(&[g]).unwrap();
        let d = Duplication::new(&m, &j).unwrap();
        let id = RingHom::identity(&r);
        let phi = SemilinearMap::scaling(&id, &m, &m, 1).unwrap();
        let a = Amalgam::new(&phi, &j).unwrap();
        assert_eq!(a.ring.order(), d.ring.order());
        assert_eq!(a.module.order(), d.dup.order());
        for x in a.module.elements() {
            let (p, q) = a.module_pair(x);
            assert_eq!(d.module_elem(p, q), Some(x));
        }
        for s in a.ring.elements() {
            let (p, q) = a.ring_pair(s);
            let t = d.ring_elem(p, q).unwrap();
            for x in a.module.elements() {
                assert_eq!(a.module.act(s, x), d.dup.act(t, x));
            }
        }
        for n_sub in m.submodules().unwrap() {
            assert_eq!(a.n1_join(n_sub).unwrap().members(), d.n_join(n_sub).unwrap().members());
            assert_eq!(a.n2_bar(n_sub).unwrap().members(), d.n_bar(n_sub).unwrap().members());
        }
    }
}

#[test]
fn amalgam_reduction_example() {
    let z8 = zn(8);
    let z4 = zn(4);
    let f = RingHom::reduction(&z8, &z4).unwrap();
    let m1 = over_zn(8, 8);
    let m2 = over_zn(2, 4);
    let phi = SemilinearMap::new(&f, &m1, &m2, (0..8).map(|x| x % 2).collect()).unwrap();
    let a = Amalgam::new(&phi, &z4.ideal(&[2]).unwrap()).unwrap();
    assert!(a.jm2_is_zero());
    assert_eq!(a.module.order(), 8);
    assert!(a.module.verify_axioms().is_ok());

    let zero = amalgam_ring(&f, &z4.zero_ideal()).unwrap();
    assert_eq!(zero.order(), 8);

    // φ(1) = 1 but φ(2·1) must equal f(2)·φ(1) = 0 in ℤ_2; 1 ↦ 1, 2 ↦ 1 is not additive.
    let bad: Vec<usize> = (0..8).map(|x| usize::from(x != 0)).collect();
    assert!(SemilinearMap::new(&f, &m1, &m2, bad).is_err());
}

proptest! {
    #[test]
    fn idealization_nilradical_identity(n in 2usize..13, k_pick in 0usize..6) {
        let divisors: Vec<usize> = (1..=n).filter(|k| n % k == 0).collect();
        let k = divisors[k_pick % divisors.len()];
        let base = zn(n);
        let m = over_zn(k, n);
        let r = idealization(&base, &m).unwrap();
        let bn = nilpotents(&base);
        prop_assert_eq!(nilpotents(&r), ElemSet::from_predicate(r.order(), |x| bn.contains(x / k)));
    }

    #[test]
    fn amalgam_nilradical_lemma(n in 2usize..17, b_pick in 0usize..6, g in 0usize..16) {
        let divisors: Vec<usize> = (1..=n).filter(|b| n % b == 0 && *b > 1).collect();
        prop_assume!(!divisors.is_empty());
        let b = divisors[b_pick % divisors.len()];
        let (r1, r2) = (zn(n), zn(b));
        let f = RingHom::reduction(&r1, &r2).unwrap();
        let j = r2.ideal(&[g % b]).unwrap();
        let m1 = over_zn(b, n);
        let m2 = over_zn(b, b);
        let phi = SemilinearMap::new(&f, &m1, &m2, (0..b).collect()).unwrap();
        let a = Amalgam::new(&phi, &j).unwrap();
        let scanned = nilpotents(&a.ring);
        let j_nil = j.members().is_subset(&nilpotents(&r2));
        prop_assert_eq!(scanned == a.nilradical_formula(), j_nil);
    }
}
