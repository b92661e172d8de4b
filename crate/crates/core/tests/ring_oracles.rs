//! Ring-level operations against brute-force oracles written from the
//! definitions, plus property tests of the ring invariants.

use proptest::prelude::*;
use smlab_core::classify::{classify_ideal, ideal_is_semi_n};
use smlab_core::construct::idealization;
use smlab_core::{BaseRing, Caps, FiniteModule, FiniteRing, IdealOp, Ring, Verdict, Violation};

fn zn(n: usize) -> Ring {
    FiniteRing::zn(n).unwrap()
}

fn members(r: &FiniteRing, ideal: &smlab_core::Ideal) -> Vec<usize> {
    r.elements().filter(|&a| ideal.contains(a)).collect()
}

/// Nilpotents by `a^k = 0` for some `k ≤ n`, computed on integers.
fn oracle_nilpotents(n: usize) -> Vec<usize> {
    (0..n)
        .filter(|&a| {
            let mut x = 1 % n;
            (1..=n).any(|_| {
                x = x * a % n;
                x == 0
            })
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every ideal of a small ring, by closing every subset of at most two
/// generators under addition and multiplication.
fn oracle_ideal_sets(r: &FiniteRing) -> Vec<Vec<usize>> {
    let close = |gens: &[usize]| {
        let mut set = vec![false; r.order()];
        set[0] = true;
        for &g in gens {
            set[g] = true;
        }
        loop {
            let cur: Vec<usize> = (0..r.order()).filter(|&a| set[a]).collect();
            let mut grew = false;
            for &a in &cur {
                for x in r.elements() {
                    let y = r.mul(x, a);
                    if !set[y] {
                        set[y] = true;
                        grew = true;
                    }
                }
                for &b in &cur {
                    let s = r.add(a, b);
                    if !set[s] {
                        set[s] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return (0..r.order()).filter(|&a| set[a]).collect::<Vec<_>>();
            }
        }
    };
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in r.elements() {
        for b in a..r.order() {
            let s = close(&[a, b]);
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

#[test]
fn zn_basics() {
    let z1 = zn(1);
    assert_eq!(z1.order(), 1);
    assert!(z1.is_zero_ring());
    assert!(FiniteRing::zn(0).is_err());

    let z12 = zn(12);
    assert_eq!(z12.nilradical_set().to_vec(), oracle_nilpotents(12));
    assert_eq!(z12.nilradical_set().to_vec(), vec![0, 6]);
    assert_eq!(zn(4).units().to_vec(), vec![1, 3]);
    assert_eq!(zn(5).nilradical_set().to_vec(), vec![0]);
}

#[test]
fn annihilators_and_regular_elements() {
    let z12 = zn(12);
    assert_eq!(members(&z12, &z12.ann_ring_elem(4)), vec![0, 3, 6, 9]);
    assert_eq!(members(&z12, &z12.ann_ring_elem(1)), vec![0]);
    assert_eq!(members(&z12, &z12.ann_ring_elem(0)).len(), 12);

    let (reg, zdiv) = z12.regular_and_zero_divisors();
    let oracle: Vec<usize> = (0..12).filter(|&a| gcd(a, 12) == 1).collect();
    assert_eq!(reg.to_vec(), oracle);
    assert_eq!(reg.to_vec(), vec![1, 5, 7, 11]);
    assert_eq!(reg.count() + zdiv.count(), 12);
    assert_eq!(zn(5).regular_and_zero_divisors().0.to_vec(), vec![1, 2, 3, 4]);
    assert_eq!(zn(4).regular_and_zero_divisors().1.to_vec(), vec![0, 2]);
}

#[test]
fn ideal_enumeration_matches_oracles() {
    let caps = Caps::default();
    let z12 = zn(12);
    let ideals = z12.enumerate_ideals(&caps).unwrap();
    assert_eq!(ideals.len(), (1..=12).filter(|d| 12 % d == 0).count());
    assert_eq!(zn(5).enumerate_ideals(&caps).unwrap().len(), 2);
    let z2 = zn(2);
    let v4 = FiniteRing::product(&z2, &z2).unwrap();
    assert_eq!(v4.enumerate_ideals(&caps).unwrap().len(), 4);

    let z6 = zn(6);
    let m = FiniteModule::cyclic(3, &BaseRing::Finite(z6.clone())).unwrap();
    let big = idealization(&z6, &m).unwrap();
    for r in [z12, v4, FiniteRing::product(&zn(4), &z2).unwrap(), big] {
        let mut got: Vec<Vec<usize>> = r.enumerate_ideals(&caps).unwrap().iter().map(|i| members(&r, i)).collect();
        got.sort();
        assert_eq!(got, oracle_ideal_sets(&r), "{}", r.label());
    }
}

#[test]
fn ideal_arithmetic() {
    let z12 = zn(12);
    let four = z12.ideal(&[4]).unwrap();
    let two = z12.ideal(&[2]).unwrap();
    let three = z12.ideal(&[3]).unwrap();
    let whole = z12.unit_ideal();
    assert_eq!(z12.ideal_arith(&four, &four, IdealOp::Radical).unwrap(), two);
    assert_eq!(z12.ideal_arith(&four, &whole, IdealOp::Residual).unwrap(), four);
    assert_eq!(members(&z12, &z12.ideal_arith(&two, &three, IdealOp::Product).unwrap()), vec![0, 6]);
    assert_eq!(members(&z12, &z12.ideal_arith(&two, &three, IdealOp::Intersect).unwrap()), vec![0, 6]);
    let other = zn(6).ideal(&[2]).unwrap();
    assert!(z12.ideal_arith(&two, &other, IdealOp::Product).is_err());
}

#[test]
fn ideal_classification_examples() {
    let z12 = zn(12);
    let pv = classify_ideal(&z12, &z12.ideal(&[2]).unwrap()).unwrap();
    assert!(pv.semi_n.holds());
    assert_eq!(pv.n_sub, Verdict::Fails(Violation::Pair { r: 2, m: 1 }));

    let pv = classify_ideal(&z12, &z12.ideal(&[4]).unwrap()).unwrap();
    assert_eq!(pv.semi_n, Verdict::Fails(Violation::Scalar { r: 2 }));

    for n in 2..=30 {
        let r = zn(n);
        assert!(classify_ideal(&r, &r.zero_ideal()).unwrap().semi_n.holds(), "Z{n}");
        assert_eq!(classify_ideal(&r, &r.unit_ideal()).unwrap().semi_n, Verdict::NotApplicable);
    }
}

/// `dℤ_n` is a semi n-ideal iff no `a` outside `√0` has `a² ∈ dℤ_n` and `a ∉ dℤ_n`.
fn oracle_semi_n(n: usize, d: usize) -> bool {
    let nil = oracle_nilpotents(n);
    (0..n).all(|a| nil.contains(&a) || !(a * a % n).is_multiple_of(d) || a % d == 0)
}

proptest! {
    #[test]
    fn ring_axioms_hold(a in 1usize..13, b in 1usize..7) {
        let r = FiniteRing::product(&zn(a), &zn(b)).unwrap();
        prop_assert!(r.verify_axioms().is_ok());
        let (reg, _) = r.regular_and_zero_divisors();
        prop_assert_eq!(&reg, r.units());
    }

    #[test]
    fn radical_properties(n in 1usize..40, g in 0usize..40) {
        let r = zn(n);
        let i = r.ideal(&[g % n]).unwrap();
        let rad = r.ideal_radical(&i).unwrap();
        prop_assert!(i.is_subset(&rad));
        prop_assert_eq!(r.ideal_radical(&rad).unwrap(), rad.clone());
        prop_assert!(r.nilradical_set().is_subset(rad.members()));
    }

    #[test]
    fn semi_n_ideals_of_zn(n in 2usize..50, g in 0usize..50) {
        let r = zn(n);
        let d = gcd(g % n, n);
        let d = if d == 0 { n } else { d };
        let i = r.ideal(&[d % n]).unwrap();
        prop_assume!(i.is_proper());
        prop_assert_eq!(ideal_is_semi_n(&r, i.members()).holds(), oracle_semi_n(n, d));
    }

    #[test]
    fn ideal_implication_chain(n in 2usize..40, g in 0usize..40) {
        let r = zn(n);
        let i = r.ideal(&[g % n]).unwrap();
        prop_assume!(i.is_proper());
        let pv = classify_ideal(&r, &i).unwrap();
        let imp = |a: &Verdict, b: &Verdict| !a.holds() || b.holds();
        prop_assert!(imp(&pv.prime, &pv.semiprime));
        prop_assert!(imp(&pv.prime, &pv.primary));
        prop_assert!(imp(&pv.n_sub, &pv.semi_n));
        prop_assert!(imp(&pv.n_sub, &pv.r_sub));
        prop_assert!(imp(&pv.r_sub, &pv.semi_r));
        prop_assert!(imp(&pv.semi_n, &pv.semi_r));
        prop_assert!(imp(&pv.semiprime, &pv.semi_n));
    }
}
