//! Exhaustive classification predicates for submodules and ideals.
//!
//! Every predicate quantifies over the module's scalar domain (ring ids, or
//! integer representatives `0..=e`) and all module elements, and reports a
//! concrete violating tuple when it fails.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::elemset::ElemSet;
use crate::error::{input_err, Error, Result};
use crate::module::{FiniteModule, Submodule};
use crate::ring::{FiniteRing, Ideal};

/// Names of the classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    Prime,
    Primary,
    Semiprime,
    RSub,
    NSub,
    SemiR,
    SemiN,
    Multiplication,
    Faithful,
    TorsionFree,
    Pure,
    WeaklyPure,
}

impl Flag {
    pub const ALL: [Flag; 12] = [
        Flag::Prime,
        Flag::Primary,
        Flag::Semiprime,
        Flag::RSub,
        Flag::NSub,
        Flag::SemiR,
        Flag::SemiN,
        Flag::Multiplication,
        Flag::Faithful,
        Flag::TorsionFree,
        Flag::Pure,
        Flag::WeaklyPure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Prime => "prime",
            Flag::Primary => "primary",
            Flag::Semiprime => "semiprime",
            Flag::RSub => "r_sub",
            Flag::NSub => "n_sub",
            Flag::SemiR => "semi_r",
            Flag::SemiN => "semi_n",
            Flag::Multiplication => "multiplication",
            Flag::Faithful => "faithful",
            Flag::TorsionFree => "torsion_free",
            Flag::Pure => "pure",
            Flag::WeaklyPure => "weakly_pure",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flag::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| input_err!("unknown classification flag `{s}`"))
    }
}

/// A concrete tuple showing why a predicate fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Scalar `r` and element `m` (ring elements `a`, `b` for ideals).
    Pair { r: usize, m: usize },
    /// A single scalar, e.g. `a` with `a² ∈ I`, `a ∉ I`, or a nonzero annihilator.
    Scalar { r: usize },
    /// A nonzero torsion element.
    Element { m: usize },
    /// An ideal `J` (by scalar generators) and an element in exactly one of the
    /// two sides of the purity equation.
    Ideal { j: Vec<usize>, m: usize },
    /// A submodule (by generators) not of the form `(N:M)M`.
    Submodule { gens: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Violation),
    /// The predicate's precondition (e.g. properness) is not met.
    NotApplicable,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails(_) => Some(false),
            Verdict::NotApplicable => None,
        }
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Fails(v) => Some(v),
            _ => None,
        }
    }

    fn from_search(found: Option<Violation>) -> Verdict {
        match found {
            Some(v) => Verdict::Fails(v),
            None => Verdict::Holds,
        }
    }
}

/// The twelve flags of one submodule (or the seven ideal flags of an ideal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVector {
    pub prime: Verdict,
    pub primary: Verdict,
    pub semiprime: Verdict,
    pub r_sub: Verdict,
    pub n_sub: Verdict,
    pub semi_r: Verdict,
    pub semi_n: Verdict,
    pub multiplication: Verdict,
    pub faithful: Verdict,
    pub torsion_free: Verdict,
    pub pure: Verdict,
    pub weakly_pure: Verdict,
}

impl PropertyVector {
    pub fn get(&self, flag: Flag) -> &Verdict {
        match flag {
            Flag::Prime => &self.prime,
            Flag::Primary => &self.primary,
            Flag::Semiprime => &self.semiprime,
            Flag::RSub => &self.r_sub,
            Flag::NSub => &self.n_sub,
            Flag::SemiR => &self.semi_r,
            Flag::SemiN => &self.semi_n,
            Flag::Multiplication => &self.multiplication,
            Flag::Faithful => &self.faithful,
            Flag::TorsionFree => &self.torsion_free,
            Flag::Pure => &self.pure,
            Flag::WeaklyPure => &self.weakly_pure,
        }
    }
}

/// The seven submodule-classification flags, which need `N` proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreFlags {
    pub prime: Verdict,
    pub primary: Verdict,
    pub semiprime: Verdict,
    pub r_sub: Verdict,
    pub n_sub: Verdict,
    pub semi_r: Verdict,
    pub semi_n: Verdict,
}

impl CoreFlags {
    fn not_applicable() -> CoreFlags {
        CoreFlags {
            prime: Verdict::NotApplicable,
            primary: Verdict::NotApplicable,
            semiprime: Verdict::NotApplicable,
            r_sub: Verdict::NotApplicable,
            n_sub: Verdict::NotApplicable,
            semi_r: Verdict::NotApplicable,
            semi_n: Verdict::NotApplicable,
        }
    }

    pub fn get(&self, flag: Flag) -> Option<&Verdict> {
        Some(match flag {
            Flag::Prime => &self.prime,
            Flag::Primary => &self.primary,
            Flag::Semiprime => &self.semiprime,
            Flag::RSub => &self.r_sub,
            Flag::NSub => &self.n_sub,
            Flag::SemiR => &self.semi_r,
            Flag::SemiN => &self.semi_n,
            _ => return None,
        })
    }
}

/// Single-guard corruptions of the two central predicates, used to show
/// that the theorem checks are not vacuously satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mutation {
    /// semi_n without the `r ∉ √0` guard.
    SemiNDropNilpotentGuard,
    /// semi_n without the `Ann(m) = 0` guard.
    SemiNDropAnnihilatorGuard,
    /// semi_n quantifying over `r ∈ √0` instead of `r ∉ √0`.
    SemiNNegateNilpotentGuard,
    /// semi_n concluding `m ∈ N` instead of `rm ∈ N`.
    SemiNConcludeElement,
    /// n_sub without the `r ∉ √Ann(M)` guard.
    NSubDropRadicalGuard,
    /// n_sub with `r ∉ √0` in place of `r ∉ √Ann(M)`.
    NSubNilradicalGuard,
}

impl Mutation {
    pub const ALL: [Mutation; 6] = [
        Mutation::SemiNDropNilpotentGuard,
        Mutation::SemiNDropAnnihilatorGuard,
        Mutation::SemiNNegateNilpotentGuard,
        Mutation::SemiNConcludeElement,
        Mutation::NSubDropRadicalGuard,
        Mutation::NSubNilradicalGuard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::SemiNDropNilpotentGuard => "semi_n-drop-nilpotent-guard",
            Mutation::SemiNDropAnnihilatorGuard => "semi_n-drop-annihilator-guard",
            Mutation::SemiNNegateNilpotentGuard => "semi_n-negate-nilpotent-guard",
            Mutation::SemiNConcludeElement => "semi_n-conclude-element",
            Mutation::NSubDropRadicalGuard => "n_sub-drop-radical-guard",
            Mutation::NSubNilradicalGuard => "n_sub-nilradical-guard",
        }
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mutation::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| input_err!("unknown mutation `{s}`"))
    }
}

/// First `(r, m)` with `r` in `scalars`, `m` in `elems`, `r·m ∈ N` after
/// scaling by `hyp`, and the conclusion failing.
fn find_pair(
    module: &FiniteModule,
    scalars: impl Iterator<Item = usize>,
    elems: &[usize],
    hyp: impl Fn(usize, usize) -> bool,
    concl: impl Fn(usize, usize) -> bool,
) -> Option<Violation> {
    let _ = module;
    for r in scalars {
        for &m in elems {
            if hyp(r, m) && !concl(r, m) {
                return Some(Violation::Pair { r, m });
            }
        }
    }
    None
}

/// Exhaustive classifier, optionally with one corrupted guard.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Classifier {
    pub mutation: Option<Mutation>,
}

impl Classifier {
    pub fn mutated(m: Mutation) -> Self {
        Classifier { mutation: Some(m) }
    }

    /// `r²m ∈ N, r ∉ √0, Ann(m) = 0 ⇒ rm ∈ N` for proper `N`.
    pub fn semi_n_set(&self, module: &FiniteModule, n: &ElemSet) -> Verdict {
        if n.is_full() {
            return Verdict::NotApplicable;
        }
        let mu = self.mutation;
        let nil = module.nilpotent_scalars();
        let sq = module.squares();
        let elems: Vec<usize> = if mu == Some(Mutation::SemiNDropAnnihilatorGuard) {
            module.elements().collect()
        } else {
            module.regular_elements().iter().collect()
        };
        let scalars = module.scalars().filter(|&r| match mu {
            Some(Mutation::SemiNDropNilpotentGuard) => true,
            Some(Mutation::SemiNNegateNilpotentGuard) => nil.contains(r),
            _ => !nil.contains(r),
        });
        let concl_elem = mu == Some(Mutation::SemiNConcludeElement);
        Verdict::from_search(find_pair(
            module,
            scalars,
            &elems,
            |r, m| n.contains(module.act(sq[r] as usize, m)),
            |r, m| if concl_elem { n.contains(m) } else { n.contains(module.act(r, m)) },
        ))
    }

    /// `rm ∈ N, r ∉ √Ann(M) ⇒ m ∈ N` for proper `N`.
    pub fn n_sub_set(&self, module: &FiniteModule, n: &ElemSet) -> Verdict {
        if n.is_full() {
            return Verdict::NotApplicable;
        }
        let guard = match self.mutation {
            Some(Mutation::NSubNilradicalGuard) => Some(module.nilpotent_scalars()),
            Some(Mutation::NSubDropRadicalGuard) => None,
            _ => Some(module.rad_ann_scalars()),
        };
        let elems: Vec<usize> = module.elements().collect();
        let scalars = module.scalars().filter(|&r| guard.is_none_or(|g| !g.contains(r)));
        Verdict::from_search(find_pair(module, scalars, &elems, |r, m| n.contains(module.act(r, m)), |_, m| n.contains(m)))
    }

    pub fn semi_n(&self, module: &FiniteModule, n: &Submodule) -> Result<Verdict> {
        module.check_owns(n)?;
        Ok(self.semi_n_set(module, n.members()))
    }

    pub fn n_sub(&self, module: &FiniteModule, n: &Submodule) -> Result<Verdict> {
        module.check_owns(n)?;
        Ok(self.n_sub_set(module, n.members()))
    }

    /// The seven proper-submodule flags; mutations affect only semi_n and n_sub.
    pub fn core_flags(&self, module: &FiniteModule, n: &ElemSet) -> CoreFlags {
        if n.is_full() {
            return CoreFlags::not_applicable();
        }
        CoreFlags {
            prime: prime_set(module, n),
            primary: primary_set(module, n),
            semiprime: semiprime_set(module, n),
            r_sub: r_sub_set(module, n),
            n_sub: self.n_sub_set(module, n),
            semi_r: semi_r_set(module, n),
            semi_n: self.semi_n_set(module, n),
        }
    }

    pub fn classify_submodule(&self, module: &FiniteModule, n: &Submodule) -> Result<PropertyVector> {
        module.check_owns(n)?;
        let c = self.core_flags(module, n.members());
        Ok(PropertyVector {
            prime: c.prime,
            primary: c.primary,
            semiprime: c.semiprime,
            r_sub: c.r_sub,
            n_sub: c.n_sub,
            semi_r: c.semi_r,
            semi_n: c.semi_n,
            multiplication: multiplication(module)?,
            faithful: faithful(module),
            torsion_free: torsion_free(module),
            pure: pure_set(module, n.members())?,
            weakly_pure: weakly_pure_set(module, n.members())?,
        })
    }
}

fn elements_of(module: &FiniteModule) -> Vec<usize> {
    module.elements().collect()
}

/// `rm ∈ N ⇒ r ∈ (N:M) or m ∈ N`.
pub fn prime_set(module: &FiniteModule, n: &ElemSet) -> Verdict {
    if n.is_full() {
        return Verdict::NotApplicable;
    }
    let colon = module.colon_module_set(n);
    let elems = elements_of(module);
    let scalars = module.scalars().filter(|&r| !colon.contains(r));
    Verdict::from_search(find_pair(module, scalars, &elems, |r, m| n.contains(module.act(r, m)), |_, m| n.contains(m)))
}

/// `rm ∈ N ⇒ r ∈ √(N:M) or m ∈ N`.
pub fn primary_set(module: &FiniteModule, n: &ElemSet) -> Verdict {
    if n.is_full() {
        return Verdict::NotApplicable;
    }
    let rad = module.scalar_radical(&module.colon_module_set(n));
    let elems = elements_of(module);
    let scalars = module.scalars().filter(|&r| !rad.contains(r));
    Verdict::from_search(find_pair(module, scalars, &elems, |r, m| n.contains(module.act(r, m)), |_, m| n.contains(m)))
}

/// `r²m ∈ N ⇒ rm ∈ N`.
pub fn semiprime_set(module: &FiniteModule, n: &ElemSet) -> Verdict {
    if n.is_full() {
        return Verdict::NotApplicable;
    }
    let sq = module.squares();
    let elems = elements_of(module);
    Verdict::from_search(find_pair(
        module,
        module.scalars(),
        &elems,
        |r, m| n.contains(module.act(sq[r] as usize, m)),
        |r, m| n.contains(module.act(r, m)),
    ))
}

/// `rm ∈ N, Ann_M(r) = 0 ⇒ m ∈ N`.
pub fn r_sub_set(module: &FiniteModule, n: &ElemSet) -> Verdict {
    if n.is_full() {
        return Verdict::NotApplicable;
    }
    let inj = module.injective_scalars();
    let elems = elements_of(module);
    let scalars = module.scalars().filter(|&r| inj.contains(r));
    Verdict::from_search(find_pair(module, scalars, &elems, |r, m| n.contains(module.act(r, m)), |_, m| n.contains(m)))
}

/// `r²m ∈ N, Ann_M(r) = 0, Ann(m) = 0 ⇒ rm ∈ N`.
pub fn semi_r_set(module: &FiniteModule, n: &ElemSet) -> Verdict {
    if n.is_full() {
        return Verdict::NotApplicable;
    }
    let inj = module.injective_scalars();
    let sq = module.squares();
    let elems: Vec<usize> = module.regular_elements().iter().collect();
    let scalars = module.scalars().filter(|&r| inj.contains(r));
    Verdict::from_search(find_pair(
        module,
        scalars,
        &elems,
        |r, m| n.contains(module.act(sq[r] as usize, m)),
        |r, m| n.contains(module.act(r, m)),
    ))
}

/// The k-power form: `r^k m ∈ N` for some `1 ≤ k ≤ kmax`, `r ∉ √0`,
/// `Ann(m) = 0 ⇒ rm ∈ N`.
pub fn semi_n_power_variant(module: &FiniteModule, n: &ElemSet, kmax: usize) -> Verdict {
    if n.is_full() {
        return Verdict::NotApplicable;
    }
    let nil = module.nilpotent_scalars();
    let elems: Vec<usize> = module.regular_elements().iter().collect();
    for r in module.scalars().filter(|&r| !nil.contains(r)) {
        let mut powers = Vec::new();
        let mut seen = ElemSet::empty(module.scalar_count());
        let mut p = r;
        for _ in 0..kmax {
            if !seen.insert(p) {
                break;
            }
            powers.push(p);
            p = module.scalar_mul(p, r);
        }
        for &m in &elems {
            if n.contains(module.act(r, m)) {
                continue;
            }
            if powers.iter().any(|&q| n.contains(module.act(q, m))) {
                return Verdict::Fails(Violation::Pair { r, m });
            }
        }
    }
    Verdict::Holds
}

pub fn faithful(module: &FiniteModule) -> Verdict {
    match module.ann_scalars().iter().find(|&r| r != 0) {
        Some(r) => Verdict::Fails(Violation::Scalar { r }),
        None => Verdict::Holds,
    }
}

pub fn torsion_free(module: &FiniteModule) -> Verdict {
    match module.torsion().iter().find(|&m| m != 0) {
        Some(m) => Verdict::Fails(Violation::Element { m }),
        None => Verdict::Holds,
    }
}

pub fn multiplication(module: &FiniteModule) -> Result<Verdict> {
    let whole = ElemSet::full(module.order());
    for n in module.submodules()? {
        let im = module.scalars_times_set(&module.colon_module_set(n.members()), &whole);
        if &im != n.members() {
            return Ok(Verdict::Fails(Violation::Submodule { gens: n.gens().to_vec() }));
        }
    }
    Ok(Verdict::Holds)
}

fn scalar_gens(module: &FiniteModule, j: &ElemSet) -> Vec<usize> {
    match module.base_ring() {
        Some(r) => r.ideal_from_closed_set(j.clone()).gens().to_vec(),
        None => alloc::vec![crate::scalars::multiples_from_reps(j) as usize],
    }
}

fn purity_against(module: &FiniteModule, n: &ElemSet, target: &ElemSet) -> Result<Verdict> {
    let whole = ElemSet::full(module.order());
    for j in module.scalar_ideals()? {
        let jn = module.scalars_times_set(j, n);
        let rhs = module.scalars_times_set(j, &whole).intersection(target);
        if jn != rhs {
            let m = module.elements().find(|&m| jn.contains(m) != rhs.contains(m)).expect("sets differ");
            return Ok(Verdict::Fails(Violation::Ideal { j: scalar_gens(module, j), m }));
        }
    }
    Ok(Verdict::Holds)
}

/// `JN = JM ∩ N` for every ideal `J`.
pub fn pure_set(module: &FiniteModule, n: &ElemSet) -> Result<Verdict> {
    purity_against(module, n, n)
}

/// `JN = JM ∩ rad(N)` for every ideal `J`.
pub fn weakly_pure_set(module: &FiniteModule, n: &ElemSet) -> Result<Verdict> {
    let rad = module.rad_set(n)?;
    purity_against(module, n, &rad)
}

pub fn classify_submodule(module: &FiniteModule, n: &Submodule) -> Result<PropertyVector> {
    Classifier::default().classify_submodule(module, n)
}

pub fn is_semi_n_submodule(module: &FiniteModule, n: &Submodule) -> Result<Verdict> {
    Classifier::default().semi_n(module, n)
}

pub fn is_n_submodule(module: &FiniteModule, n: &Submodule) -> Result<Verdict> {
    Classifier::default().n_sub(module, n)
}

// ---- ideals, computed directly on the ring ----

fn find_ring_pair(
    ring: &FiniteRing,
    a_ok: impl Fn(usize) -> bool,
    hyp: impl Fn(usize, usize) -> bool,
    concl: impl Fn(usize, usize) -> bool,
) -> Verdict {
    for a in ring.elements().filter(|&a| a_ok(a)) {
        for b in ring.elements() {
            if hyp(a, b) && !concl(a, b) {
                return Verdict::Fails(Violation::Pair { r: a, m: b });
            }
        }
    }
    Verdict::Holds
}

fn find_ring_scalar(ring: &FiniteRing, a_ok: impl Fn(usize) -> bool, i: &ElemSet) -> Verdict {
    match ring.elements().find(|&a| a_ok(a) && i.contains(ring.mul(a, a)) && !i.contains(a)) {
        Some(a) => Verdict::Fails(Violation::Scalar { r: a }),
        None => Verdict::Holds,
    }
}

/// `a² ∈ I, a ∉ √0 ⇒ a ∈ I`.
pub fn ideal_is_semi_n(ring: &FiniteRing, i: &ElemSet) -> Verdict {
    if i.is_full() {
        return Verdict::NotApplicable;
    }
    let nil = ring.nilradical_set();
    find_ring_scalar(ring, |a| !nil.contains(a), i)
}

/// `ab ∈ I, a ∉ √0 ⇒ b ∈ I`.
pub fn ideal_is_n(ring: &FiniteRing, i: &ElemSet) -> Verdict {
    if i.is_full() {
        return Verdict::NotApplicable;
    }
    let nil = ring.nilradical_set();
    find_ring_pair(ring, |a| !nil.contains(a), |a, b| i.contains(ring.mul(a, b)), |_, b| i.contains(b))
}

/// The seven ideal flags; module-level flags are not applicable.
pub fn classify_ideal(ring: &FiniteRing, i: &Ideal) -> Result<PropertyVector> {
    ring.check_owns(i)?;
    let m = i.members();
    let na = || Verdict::NotApplicable;
    if !i.is_proper() {
        return Ok(PropertyVector {
            prime: na(),
            primary: na(),
            semiprime: na(),
            r_sub: na(),
            n_sub: na(),
            semi_r: na(),
            semi_n: na(),
            multiplication: na(),
            faithful: na(),
            torsion_free: na(),
            pure: na(),
            weakly_pure: na(),
        });
    }
    let in_i = |a: usize, b: usize| m.contains(ring.mul(a, b));
    let rad = ring.radical_set(m);
    let reg = |a: usize| ring.is_regular(a);
    Ok(PropertyVector {
        prime: find_ring_pair(ring, |_| true, in_i, |a, b| m.contains(a) || m.contains(b)),
        primary: find_ring_pair(ring, |_| true, in_i, |a, b| rad.contains(a) || m.contains(b)),
        semiprime: find_ring_scalar(ring, |_| true, m),
        r_sub: find_ring_pair(ring, reg, in_i, |_, b| m.contains(b)),
        n_sub: ideal_is_n(ring, m),
        semi_r: find_ring_scalar(ring, reg, m),
        semi_n: ideal_is_semi_n(ring, m),
        multiplication: na(),
        faithful: na(),
        torsion_free: na(),
        pure: na(),
        weakly_pure: na(),
    })
}

/// `dℤ` is a semi n-ideal of `ℤ` iff `d = 0` or `d > 1` is squarefree.
/// Decided by scanning residues `a` in `1..d` for `a² ≡ 0 (mod d)`.
pub fn integer_ideal_is_semi_n(d: u64) -> Verdict {
    match d {
        1 => Verdict::NotApplicable,
        0 => Verdict::Holds,
        _ => match (1..d).find(|&a| (a * a) % d == 0) {
            Some(a) => Verdict::Fails(Violation::Scalar { r: a as usize }),
            None => Verdict::Holds,
        },
    }
}

/// Human-readable rendering of a violation in the module's notation.
pub fn describe_violation(module: &FiniteModule, v: &Violation) -> String {
    use alloc::format;
    match v {
        Violation::Pair { r, m } => format!("r={}, m={}", module.describe_scalar(*r), module.describe(*m)),
        Violation::Scalar { r } => format!("r={}", module.describe_scalar(*r)),
        Violation::Element { m } => format!("m={}", module.describe(*m)),
        Violation::Ideal { j, m } => {
            let js: Vec<String> = j.iter().map(|&s| module.describe_scalar(s)).collect();
            format!("J=<{}>, m={}", js.join(","), module.describe(*m))
        }
        Violation::Submodule { gens } => {
            let gs: Vec<String> = gens.iter().map(|&g| module.describe(g)).collect();
            format!("N=<{}>", gs.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::scalars::BaseRing;

    #[test]
    fn ideal_examples_in_z12() {
        let r = FiniteRing::zn(12).unwrap();
        let v2 = classify_ideal(&r, &r.ideal(&[2]).unwrap()).unwrap();
        assert!(v2.semi_n.holds());
        assert_eq!(v2.n_sub, Verdict::Fails(Violation::Pair { r: 2, m: 1 }));
        let v4 = classify_ideal(&r, &r.ideal(&[4]).unwrap()).unwrap();
        assert_eq!(v4.semi_n, Verdict::Fails(Violation::Scalar { r: 2 }));
        assert!(classify_ideal(&r, &r.zero_ideal()).unwrap().semi_n.holds());
        assert_eq!(classify_ideal(&r, &r.unit_ideal()).unwrap().semi_n, Verdict::NotApplicable);
    }

    #[test]
    fn integer_module_examples() {
        let m = FiniteModule::cyclic(12, &BaseRing::Integers).unwrap();
        let n4 = m.submodule(&[4]).unwrap();
        assert!(is_semi_n_submodule(&m, &n4).unwrap().holds());
        assert_eq!(is_n_submodule(&m, &n4).unwrap(), Verdict::Fails(Violation::Pair { r: 2, m: 2 }));
        let z12 = FiniteRing::zn(12).unwrap();
        let z4 = FiniteModule::cyclic(4, &BaseRing::Finite(z12)).unwrap();
        assert!(is_n_submodule(&z4, &z4.submodule(&[2]).unwrap()).unwrap().holds());
    }

    #[test]
    fn integer_ideals() {
        assert!(integer_ideal_is_semi_n(0).holds());
        assert!(integer_ideal_is_semi_n(6).holds());
        assert_eq!(integer_ideal_is_semi_n(4), Verdict::Fails(Violation::Scalar { r: 2 }));
        assert_eq!(integer_ideal_is_semi_n(1), Verdict::NotApplicable);
    }
}
