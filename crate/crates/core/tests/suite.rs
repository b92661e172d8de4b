//! Catalog contents, individual checks, separating search, and independent
//! confirmation of the two counterexamples the suite reports.

use std::sync::OnceLock;

use smlab_core::classify::{ideal_is_semi_n, is_semi_n_submodule};
use smlab_core::{
    check_all, check_theorem, search_separating, Amalgam, BaseRing, Caps, Catalog, Classifier, FiniteModule, FiniteRing, Flag, Mutation,
    Preset, RingHom, SemilinearMap, Session, Status, THEOREM_IDS,
};

fn standard() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::default_catalog(&Caps::preset(Preset::Standard)).unwrap())
}

fn minimal() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::default_catalog(&Caps::preset(Preset::Minimal)).unwrap())
}

#[test]
fn catalog_contents() {
    let cat = standard();
    let z12 = cat.modules.iter().find(|m| m.is_over_integers() && m.order() == 12 && m.recipe() == "cyc(12,int)").expect("Z-module Z12");
    assert_eq!(z12.submodules().unwrap().len(), 6);
    assert!(cat
        .idealizations
        .iter()
        .any(|e| e.base.as_zn() == Some(12) && e.module.order() == 4 && e.module.recipe().starts_with("cyc(4,")));

    let min = minimal();
    let degenerate: Vec<_> = min.rings.iter().filter(|e| e.degenerate).collect();
    assert_eq!(degenerate.len(), 1);
    assert!(degenerate[0].ring.is_zero_ring());
    assert!(min.modules.iter().all(|m| !m.is_zero_module()));
    for e in &min.rings {
        assert!(e.ring.verify_axioms().is_ok());
    }
    for m in &min.modules {
        assert!(m.verify_axioms().is_ok(), "{}", m.full_label());
    }
}

#[test]
fn caps_beyond_hard_limits_are_rejected() {
    let caps = Caps { ring_order: 1 << 20, ..Caps::default() };
    assert!(matches!(Catalog::default_catalog(&caps), Err(smlab_core::Error::Capacity { .. })));
}

#[test]
fn every_id_has_a_checker() {
    let s = Session::new(minimal(), 7);
    let mut sorted = THEOREM_IDS;
    sorted.sort();
    assert_eq!(sorted, THEOREM_IDS);
    for r in check_all(&s).unwrap() {
        assert_eq!(r.hypothesis_satisfied + r.vacuous, r.instances_scanned, "{}", r.theorem);
        assert!(r.passed(), "{}: {:?}", r.theorem, r.status);
    }
    assert!(check_theorem("no-such-check", &s).is_err());
}

#[test]
fn diagram_counts_every_proper_submodule() {
    let cat = standard();
    let r = check_theorem("diagram", &Session::new(cat, 7)).unwrap();
    let proper: u64 =
        cat.modules.iter().filter_map(|m| m.submodules().ok()).map(|s| s.iter().filter(|n| n.is_proper()).count() as u64).sum();
    assert!(r.passed());
    assert_eq!(r.hypothesis_satisfied, proper);
    assert!(proper >= 500);
}

#[test]
fn idealization_remark_and_converse() {
    let s = Session::new(standard(), 7);
    let remark = check_theorem("remark-Ide", &s).unwrap();
    assert!(remark.passed());
    assert!(remark.example.is_some());
    let conv = check_theorem("thm-Ide-conv", &s).unwrap();
    assert!(conv.passed());
    assert!(conv.hypothesis_satisfied >= 1);

    // The finite analogue: ℤ_12(+)ℤ_4 with I = ⟨2⟩, N = ⟨2̄⟩.
    let z12 = FiniteRing::zn(12).unwrap();
    let m = FiniteModule::cyclic(4, &BaseRing::Finite(z12.clone())).unwrap();
    let i = z12.ideal(&[2]).unwrap();
    let n = m.submodule(&[2]).unwrap();
    assert!(ideal_is_semi_n(&z12, i.members()).holds());
    assert!(smlab_core::classify::is_n_submodule(&m, &n).unwrap().holds());
    assert_ne!(m.rad_ann_scalars(), z12.nilradical_set());
    let big = smlab_core::construct::idealization(&z12, &m).unwrap();
    let joined = smlab_core::construct::embed_ideal(&big, &i, &n).unwrap();
    assert!(ideal_is_semi_n(&big, joined.members()).fails());

    // ℤ_4(+)ℤ_4, I = ⟨2⟩, N = ⟨2⟩ satisfies the converse's hypotheses.
    let z4 = FiniteRing::zn(4).unwrap();
    let m4 = FiniteModule::cyclic(4, &BaseRing::Finite(z4.clone())).unwrap();
    assert_eq!(m4.rad_ann_scalars(), z4.nilradical_set());
    let i4 = z4.ideal(&[2]).unwrap();
    let n4 = m4.submodule(&[2]).unwrap();
    assert!(ideal_is_semi_n(&z4, i4.members()).holds());
    assert!(smlab_core::classify::is_n_submodule(&m4, &n4).unwrap().holds());
    let big4 = smlab_core::construct::idealization(&z4, &m4).unwrap();
    assert!(ideal_is_semi_n(&big4, smlab_core::construct::embed_ideal(&big4, &i4, &n4).unwrap().members()).holds());
}

/// `R = M = ℤ_6`, `I = 0`, `N = ⟨2⟩`: `I(+)N` is a semi n-ideal but `N` is
/// not an n-submodule, so the forward direction of the idealization
/// theorem cannot hold as stated.
#[test]
fn idealization_forward_counterexample_is_genuine() {
    let nil6 = |a: usize| (1..=6).any(|k| (0..k).fold(1usize, |x, _| x * a % 6) == 0);
    // (r, m)² = (r², 2rm) lies in 0(+)⟨2⟩ iff r² ≡ 0, forcing r nilpotent.
    let in_join = |r: usize, m: usize| r == 0 && m.is_multiple_of(2);
    let semi_n_ideal = (0..6).all(|r| (0..6).all(|m| nil6(r) || !in_join(r * r % 6, 2 * r * m % 6) || in_join(r, m)));
    assert!(semi_n_ideal);
    // 2·1 ∈ ⟨2⟩, Ann(ℤ_6) = 0 so 2 ∉ √Ann, and 1 ∉ ⟨2⟩.
    assert!(!nil6(2));
    assert_ne!(1, 0);

    let z6 = FiniteRing::zn(6).unwrap();
    let m = FiniteModule::cyclic(6, &BaseRing::Finite(z6.clone())).unwrap();
    let big = smlab_core::construct::idealization(&z6, &m).unwrap();
    let n = m.submodule(&[2]).unwrap();
    let joined = smlab_core::construct::embed_ideal(&big, &z6.zero_ideal(), &n).unwrap();
    assert!(ideal_is_semi_n(&big, joined.members()).holds());
    assert!(smlab_core::classify::is_n_submodule(&m, &n).unwrap().fails());

    let r = check_theorem("thm-Ide-fwd", &Session::new(standard(), 7)).unwrap();
    assert!(r.failed());
    assert!(r.hypothesis_satisfied >= 5);
}

/// `f = id` on `ℤ_12`, `φ: ℤ_12 → ℤ_4` reduction, `J = 0`, `N₂ = 0`: every
/// hypothesis holds, yet `overline(N₂)^φ` corresponds to `⟨4⟩ ⊂ ℤ_12`,
/// which is not a semi n-submodule (2²·1 ∈ ⟨4⟩, 2·1 ∉ ⟨4⟩).
#[test]
fn amalgamation_counterexample_is_genuine() {
    let z12 = FiniteRing::zn(12).unwrap();
    let base = BaseRing::Finite(z12.clone());
    let m1 = FiniteModule::cyclic(12, &base).unwrap();
    let m2 = FiniteModule::cyclic(4, &base).unwrap();
    let f = RingHom::identity(&z12);
    let phi = SemilinearMap::scaling(&f, &m1, &m2, 1).unwrap();
    assert!(f.is_isomorphism() && phi.is_surjective() && !phi.is_injective());
    let a = Amalgam::new(&phi, &z12.zero_ideal()).unwrap();
    let n2 = m2.zero_submodule();
    assert!(is_semi_n_submodule(&m2, &n2).unwrap().holds());
    let lifted = a.n2_bar(&n2).unwrap();
    let firsts: Vec<usize> = lifted.members().iter().map(|x| a.module_pair(x).0).collect();
    assert_eq!(firsts, vec![0, 4, 8]);
    assert!(is_semi_n_submodule(&a.module, &lifted).unwrap().fails());

    let r = check_theorem("thm-amalgN2-semi-2", &Session::new(standard(), 7)).unwrap();
    assert!(r.failed());
}

#[test]
fn separating_search() {
    let cat = standard();
    assert!(search_separating(Flag::SemiN, Flag::SemiN, cat).unwrap().is_none());
    let sep = search_separating(Flag::SemiN, Flag::NSub, cat).unwrap().expect("a separating submodule");
    assert!(is_semi_n_submodule(&sep.module, &sep.submodule).unwrap().holds());
    assert!(smlab_core::classify::is_n_submodule(&sep.module, &sep.submodule).unwrap().fails());
    assert!(sep.witness.spec.contains("expect semi_n"));

    // ⟨2⟩ in ℤ_12 over itself is also a valid separating witness.
    let z12 = FiniteRing::zn(12).unwrap();
    let r = FiniteModule::regular(&z12).unwrap();
    let two = r.submodule(&[2]).unwrap();
    assert!(is_semi_n_submodule(&r, &two).unwrap().holds());
    assert!(smlab_core::classify::is_n_submodule(&r, &two).unwrap().fails());
}

#[test]
fn reports_are_deterministic() {
    let a = check_all(&Session::new(minimal(), 11)).unwrap();
    let b = check_all(&Session::new(minimal(), 11)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 43);
    assert!(a.iter().all(|r| r.seed == 11));
    let ids: Vec<&str> = a.iter().map(|r| r.theorem).collect();
    assert_eq!(ids, THEOREM_IDS);
}

#[test]
fn a_mutation_breaks_some_check() {
    let s = Session::with_classifier(minimal(), 7, Classifier::mutated(Mutation::SemiNDropNilpotentGuard));
    let reports = check_all(&s).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| r.failed()).collect();
    assert!(!failed.is_empty());
    for r in failed {
        let Status::Fail(w) = &r.status else { unreachable!() };
        assert!(!w.spec.is_empty());
    }
}
