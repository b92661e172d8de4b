//! Finite modules over a [`BaseRing`], submodule lattices, residuals,
//! radicals, homomorphisms, quotients and localization.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::arith::{gcd, lcm};
use crate::caps::Caps;
use crate::construct::{RingHom, SemilinearMap};
use crate::elemset::ElemSet;
use crate::error::{input_err, Error, Result};
use crate::ring::{fnv1a, set_recipe, Ideal, PairTable, Ring};
use crate::scalars::{multiples_from_reps, reps_of_multiples, BaseRing, ScalarSet};

pub type Module = Arc<FiniteModule>;

pub enum ModuleConstruction {
    /// `ℤ_k` over `ℤ` or over `ℤ_n` with `k | n`.
    Cyclic(usize),
    /// The base ring as a module over itself.
    Regular,
    /// Ids are `a * |right| + b`.
    Product(Module, Module),
    Quotient {
        parent: Module,
        sub: Submodule,
        reps: Vec<usize>,
        class_of: Vec<u32>,
    },
    /// `M ⋈ J` over `R ⋈ J`.
    Duplication {
        module: Module,
        ideal: Ideal,
        pairs: PairTable,
    },
    /// `M₁ ⋈^φ JM₂` over `R₁ ⋈^f J`.
    Amalgam {
        m1: Module,
        m2: Module,
        hom: Arc<RingHom>,
        phi: Arc<SemilinearMap>,
        ideal: Ideal,
        pairs: PairTable,
    },
    /// A module over `f.dst()` viewed over `f.src()` through `f`.
    Restricted {
        module: Module,
        hom: Arc<RingHom>,
    },
}

#[derive(Default)]
struct ModuleCache {
    regular_elems: OnceBox<ElemSet>,
    torsion: OnceBox<ElemSet>,
    ann: OnceBox<ElemSet>,
    rad_ann: OnceBox<ElemSet>,
    injective: OnceBox<ElemSet>,
    nilpotent: OnceBox<ElemSet>,
    squares: OnceBox<Vec<u32>>,
    cyclic: OnceBox<Vec<ElemSet>>,
    submodules: OnceBox<Result<Vec<Submodule>>>,
    primes: OnceBox<Result<Vec<usize>>>,
    multiplication: OnceBox<Result<bool>>,
    scalar_ideals: OnceBox<Result<Vec<ElemSet>>>,
}

/// A finite module stored as group tables plus a full action table over the
/// scalar domain (ring ids, or representatives `0..=e` over `ℤ`).
pub struct FiniteModule {
    base: BaseRing,
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    nscalars: usize,
    act: Vec<u32>,
    exponent: usize,
    construction: ModuleConstruction,
    recipe: String,
    label: String,
    key: u64,
    cache: ModuleCache,
}

fn additive_order(order: usize, add: &impl Fn(usize, usize) -> usize, m: usize) -> usize {
    let mut k = 1;
    let mut x = m;
    while x != 0 {
        x = add(x, m);
        k += 1;
        debug_assert!(k <= order + 1);
    }
    k
}

impl FiniteModule {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn tabulate(
        base: BaseRing,
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        neg: impl Fn(usize) -> usize,
        act: Option<&dyn Fn(usize, usize) -> usize>,
        construction: ModuleConstruction,
        recipe: String,
        label: String,
    ) -> Result<Module> {
        let cap = Caps::HARD.module_order;
        if order > cap {
            return Err(Error::Capacity { what: format!("module {label} of order {order}"), cap });
        }
        let mut at = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                at.push(add(a, b) as u32);
            }
        }
        let nt: Vec<u32> = (0..order).map(|a| neg(a) as u32).collect();
        let exponent = (0..order).fold(1usize, |e, m| lcm(e as u64, additive_order(order, &add, m) as u64) as usize);
        let (nscalars, act_table) = match (&base, act) {
            (BaseRing::Finite(r), Some(f)) => {
                let mut t = Vec::with_capacity(r.order() * order);
                for s in 0..r.order() {
                    for m in 0..order {
                        t.push(f(s, m) as u32);
                    }
                }
                (r.order(), t)
            }
            (BaseRing::Integers, None) => {
                let mut t = Vec::with_capacity((exponent + 1) * order);
                t.extend(core::iter::repeat_n(0u32, order));
                for s in 1..=exponent {
                    for m in 0..order {
                        let prev = t[(s - 1) * order + m] as usize;
                        t.push(add(prev, m) as u32);
                    }
                }
                (exponent + 1, t)
            }
            _ => unreachable!("finite bases need an action, the integer action is derived"),
        };
        let key = fnv1a(&recipe);
        Ok(Arc::new(FiniteModule {
            base,
            order,
            add: at,
            neg: nt,
            nscalars,
            act: act_table,
            exponent,
            construction,
            recipe,
            label,
            key,
            cache: ModuleCache::default(),
        }))
    }

    /// `ℤ_k` over `ℤ`, or over `ℤ_n` when `k | n`.
    pub fn cyclic(k: usize, base: &BaseRing) -> Result<Module> {
        if k == 0 {
            return Err(input_err!("cyclic module order must be >= 1"));
        }
        let recipe = format!("cyc({k},{})", base.recipe());
        let label = format!("Z{k}");
        match base {
            BaseRing::Integers => Self::tabulate(
                BaseRing::Integers,
                k,
                |a, b| (a + b) % k,
                |a| (k - a) % k,
                None,
                ModuleConstruction::Cyclic(k),
                recipe,
                label,
            ),
            BaseRing::Finite(r) => {
                let Some(n) = r.as_zn() else {
                    return Err(input_err!("cyclic modules need base Z or Z_n, got {}", r.label()));
                };
                if n % k != 0 {
                    return Err(input_err!("{k} does not divide {n}"));
                }
                Self::tabulate(
                    base.clone(),
                    k,
                    |a, b| (a + b) % k,
                    |a| (k - a) % k,
                    Some(&|s, m| (s * m) % k),
                    ModuleConstruction::Cyclic(k),
                    recipe,
                    label,
                )
            }
        }
    }

    /// `R` as a module over itself.
    pub fn regular(ring: &Ring) -> Result<Module> {
        let (ra, rn, rm) = (ring.clone(), ring.clone(), ring.clone());
        Self::tabulate(
            BaseRing::Finite(ring.clone()),
            ring.order(),
            move |a, b| ra.add(a, b),
            move |a| rn.neg(a),
            Some(&move |s, m| rm.mul(s, m)),
            ModuleConstruction::Regular,
            format!("reg({})", ring.recipe()),
            String::from(ring.label()),
        )
    }

    pub fn product(left: &Module, right: &Module) -> Result<Module> {
        if !left.base.same_as(&right.base) {
            return Err(input_err!("product of modules over different rings {} and {}", left.base.label(), right.base.label()));
        }
        let w = right.order;
        let (l, r) = (left.clone(), right.clone());
        let (l2, r2) = (left.clone(), right.clone());
        let recipe = format!("mprod({},{})", left.recipe, right.recipe);
        let label = format!("{} x {}", left.paren_label(), right.paren_label());
        let construction = ModuleConstruction::Product(left.clone(), right.clone());
        match &left.base {
            BaseRing::Integers => Self::tabulate(
                BaseRing::Integers,
                left.order * w,
                move |x, y| l.add(x / w, y / w) * w + r.add(x % w, y % w),
                move |x| l2.neg(x / w) * w + r2.neg(x % w),
                None,
                construction,
                recipe,
                label,
            ),
            BaseRing::Finite(_) => {
                let (l3, r3) = (left.clone(), right.clone());
                Self::tabulate(
                    left.base.clone(),
                    left.order * w,
                    move |x, y| l.add(x / w, y / w) * w + r.add(x % w, y % w),
                    move |x| l2.neg(x / w) * w + r2.neg(x % w),
                    Some(&move |s, x| l3.act(s, x / w) * w + r3.act(s, x % w)),
                    construction,
                    recipe,
                    label,
                )
            }
        }
    }

    /// `M / L` together with the canonical projection.
    pub fn quotient(parent: &Module, sub: &Submodule) -> Result<(Module, ModuleHom)> {
        parent.check_owns(sub)?;
        let n = parent.order;
        let mut class_of = alloc::vec![u32::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if class_of[a] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(a);
            for l in sub.members.iter() {
                class_of[parent.add(a, l)] = id;
            }
        }
        let (pa, ra, ca) = (parent.clone(), reps.clone(), class_of.clone());
        let (pn, rn, cn) = (parent.clone(), reps.clone(), class_of.clone());
        let (ps, rs, cs) = (parent.clone(), reps.clone(), class_of.clone());
        let act = move |s: usize, x: usize| cs[ps.act(s, rs[x])] as usize;
        let recipe = format!("mquot({},{})", parent.recipe, set_recipe(&sub.members));
        let label = format!("{}/{}", parent.paren_label(), parent.submodule_label(sub));
        let construction =
            ModuleConstruction::Quotient { parent: parent.clone(), sub: sub.clone(), reps: reps.clone(), class_of: class_of.clone() };
        let q = Self::tabulate(
            parent.base.clone(),
            reps.len(),
            move |x, y| ca[pa.add(ra[x], ra[y])] as usize,
            move |x| cn[pn.neg(rn[x])] as usize,
            match parent.base {
                BaseRing::Finite(_) => Some(&act as &dyn Fn(usize, usize) -> usize),
                BaseRing::Integers => None,
            },
            construction,
            recipe,
            label,
        )?;
        let map = class_of.iter().map(|&c| c as usize).collect();
        let proj = ModuleHom { src: parent.clone(), dst: q.clone(), map };
        Ok((q, proj))
    }

    /// A module over `f.dst()` viewed as a module over `f.src()`.
    pub fn restrict_scalars(module: &Module, hom: &Arc<RingHom>) -> Result<Module> {
        match &module.base {
            BaseRing::Finite(r) if r.same_as(hom.dst()) => {}
            _ => return Err(input_err!("{} is not a module over {}", module.label, hom.dst().label())),
        }
        let (ma, mn, mact, h) = (module.clone(), module.clone(), module.clone(), hom.clone());
        Self::tabulate(
            BaseRing::Finite(hom.src().clone()),
            module.order,
            move |a, b| ma.add(a, b),
            move |a| mn.neg(a),
            Some(&move |s, m| mact.act(h.apply(s), m)),
            ModuleConstruction::Restricted { module: module.clone(), hom: hom.clone() },
            format!("restrict({},{})", module.recipe, hom.recipe()),
            module.label.clone(),
        )
    }

    // ---- accessors ----

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn base_ring(&self) -> Option<&Ring> {
        self.base.as_finite()
    }

    pub fn is_over_integers(&self) -> bool {
        matches!(self.base, BaseRing::Integers)
    }

    /// Smallest `e ≥ 1` with `e·m = 0` for all `m`.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn construction(&self) -> &ModuleConstruction {
        &self.construction
    }

    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// E.g. `Z12-module Z4`.
    pub fn full_label(&self) -> String {
        format!("{}-module {}", self.base.label(), self.label)
    }

    fn paren_label(&self) -> String {
        match self.construction {
            ModuleConstruction::Cyclic(_) | ModuleConstruction::Regular => self.label.clone(),
            _ => format!("({})", self.label),
        }
    }

    pub fn same_as(&self, other: &FiniteModule) -> bool {
        core::ptr::eq(self, other) || self.key == other.key && self.recipe == other.recipe
    }

    pub fn is_zero_module(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    // ---- scalar domain ----

    /// Size of the scalar quantifier domain.
    #[inline]
    pub fn scalar_count(&self) -> usize {
        self.nscalars
    }

    pub fn scalars(&self) -> core::ops::Range<usize> {
        0..self.nscalars
    }

    /// `s·m` for a scalar id or integer representative `s`.
    #[inline]
    pub fn act(&self, s: usize, m: usize) -> usize {
        self.act[s * self.order + m] as usize
    }

    #[inline]
    pub fn scalar_mul(&self, a: usize, b: usize) -> usize {
        match &self.base {
            BaseRing::Finite(r) => r.mul(a, b),
            BaseRing::Integers => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let e = self.exponent;
                match (a * b) % e {
                    0 => e,
                    p => p,
                }
            }
        }
    }

    pub fn scalar_one(&self) -> usize {
        match &self.base {
            BaseRing::Finite(r) => r.one(),
            BaseRing::Integers => 1,
        }
    }

    pub fn scalar_pow(&self, s: usize, k: usize) -> usize {
        let mut acc = self.scalar_one();
        for _ in 0..k {
            acc = self.scalar_mul(acc, s);
        }
        acc
    }

    /// `s·s` for every scalar.
    pub fn squares(&self) -> &[u32] {
        self.cache.squares.get_or_init(|| Box::new(self.scalars().map(|s| self.scalar_mul(s, s) as u32).collect()))
    }

    pub fn describe_scalar(&self, s: usize) -> String {
        match &self.base {
            BaseRing::Finite(r) => r.describe(s),
            BaseRing::Integers => format!("{s}"),
        }
    }

    /// Nilpotent scalars: `√0` of the base (over `ℤ` just `{0}`).
    pub fn nilpotent_scalars(&self) -> &ElemSet {
        self.cache.nilpotent.get_or_init(|| {
            Box::new(match &self.base {
                BaseRing::Finite(r) => r.nilradical_set().clone(),
                BaseRing::Integers => ElemSet::from_iter(self.nscalars, [0]),
            })
        })
    }

    /// Scalars with `sM = 0`.
    pub fn ann_scalars(&self) -> &ElemSet {
        self.cache.ann.get_or_init(|| Box::new(ElemSet::from_predicate(self.nscalars, |s| self.elements().all(|m| self.act(s, m) == 0))))
    }

    /// `√Ann(M)`: scalars with some power acting as zero.
    pub fn rad_ann_scalars(&self) -> &ElemSet {
        self.cache.rad_ann.get_or_init(|| {
            let ann = self.ann_scalars();
            Box::new(self.scalar_radical(ann))
        })
    }

    /// Scalars whose action is injective, i.e. `Ann_M(s) = 0_M`.
    pub fn injective_scalars(&self) -> &ElemSet {
        self.cache
            .injective
            .get_or_init(|| Box::new(ElemSet::from_predicate(self.nscalars, |s| (1..self.order).all(|m| self.act(s, m) != 0))))
    }

    /// `{s : s^k ∈ set for some k ≤ |scalars|}`.
    pub(crate) fn scalar_radical(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_predicate(self.nscalars, |s| {
            let mut p = s;
            for _ in 0..self.nscalars {
                if set.contains(p) {
                    return true;
                }
                p = self.scalar_mul(p, s);
            }
            false
        })
    }

    /// Elements with `Ann(m) = 0`. Always empty over `ℤ`.
    pub fn regular_elements(&self) -> &ElemSet {
        self.cache
            .regular_elems
            .get_or_init(|| Box::new(ElemSet::from_predicate(self.order, |m| (1..self.nscalars).all(|s| self.act(s, m) != 0))))
    }

    pub fn ann_is_zero(&self, m: usize) -> bool {
        self.regular_elements().contains(m)
    }

    /// `T(M)`: elements killed by some nonzero scalar.
    pub fn torsion(&self) -> &ElemSet {
        self.cache
            .torsion
            .get_or_init(|| Box::new(ElemSet::from_predicate(self.order, |m| (1..self.nscalars).any(|s| self.act(s, m) == 0))))
    }

    /// `(T(M), Z(M))` with `Z(M) = {r : rm = 0 for some m ≠ 0}` over the scalar domain.
    pub fn torsion_and_zdiv(&self) -> (ElemSet, ElemSet) {
        let z = ElemSet::from_predicate(self.nscalars, |s| (1..self.order).any(|m| self.act(s, m) == 0));
        (self.torsion().clone(), z)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion().count() == 1
    }

    pub fn is_faithful(&self) -> bool {
        self.ann_scalars().count() == 1
    }

    /// Reads a scalar-domain subset that is an ideal as a [`ScalarSet`].
    pub(crate) fn scalar_set_of(&self, members: ElemSet) -> ScalarSet {
        match &self.base {
            BaseRing::Finite(r) => ScalarSet::Ideal(r.ideal_from_closed_set(members)),
            BaseRing::Integers => ScalarSet::Multiples(multiples_from_reps(&members)),
        }
    }

    /// Members of a [`ScalarSet`] inside the scalar domain.
    pub fn scalar_members(&self, set: &ScalarSet) -> Result<ElemSet> {
        match (&self.base, set) {
            (BaseRing::Finite(r), ScalarSet::Ideal(i)) => {
                r.check_owns(i)?;
                Ok(i.members().clone())
            }
            (BaseRing::Integers, ScalarSet::Multiples(g)) => {
                if *g != 0 && !(self.exponent as u64).is_multiple_of(*g) {
                    let d = gcd(*g, self.exponent as u64);
                    return Err(input_err!(
                        "{g}Z is not representable on {}; it acts like {d}Z but representatives need g | {}",
                        self.label,
                        self.exponent
                    ));
                }
                Ok(reps_of_multiples(*g, self.exponent))
            }
            _ => Err(input_err!("scalar set {set:?} is not over the base of {}", self.full_label())),
        }
    }

    /// The ideals of the base ring as scalar-domain sets: every ideal for a
    /// finite base; `dℤ` for `d | e` together with `0ℤ` over `ℤ`.
    pub fn scalar_ideals(&self) -> Result<&[ElemSet]> {
        let r = self.cache.scalar_ideals.get_or_init(|| {
            Box::new(match &self.base {
                BaseRing::Finite(r) => r.ideals().map(|v| v.iter().map(|i| i.members().clone()).collect()),
                BaseRing::Integers => {
                    let mut out = alloc::vec![reps_of_multiples(0, self.exponent)];
                    for d in crate::arith::divisors(self.exponent as u64) {
                        out.push(reps_of_multiples(d, self.exponent));
                    }
                    Ok(out)
                }
            })
        });
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn ann_module(&self) -> ScalarSet {
        self.scalar_set_of(self.ann_scalars().clone())
    }

    pub fn ann_elem(&self, m: usize) -> ScalarSet {
        self.scalar_set_of(ElemSet::from_predicate(self.nscalars, |s| self.act(s, m) == 0))
    }

    // ---- submodules ----

    pub(crate) fn check_owns(&self, n: &Submodule) -> Result<()> {
        if n.module_key != self.key || n.members.universe() != self.order {
            return Err(input_err!("submodule {:?} does not belong to {}", n.members, self.full_label()));
        }
        Ok(())
    }

    /// `Rg` for every element `g`.
    fn cyclic_sets(&self) -> &[ElemSet] {
        self.cache.cyclic.get_or_init(|| {
            Box::new(self.elements().map(|g| ElemSet::from_iter(self.order, self.scalars().map(|s| self.act(s, g)))).collect())
        })
    }

    pub fn cyclic_set(&self, g: usize) -> &ElemSet {
        &self.cyclic_sets()[g]
    }

    pub(crate) fn sum_sets(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.order);
        let bs = b.to_vec();
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Span of a list of elements.
    pub fn span(&self, gens: &[usize]) -> Result<ElemSet> {
        let mut members = ElemSet::from_iter(self.order, [0]);
        for &g in gens {
            if g >= self.order {
                return Err(input_err!("{g} is not an element of {}", self.label));
            }
            if !members.contains(g) {
                members = self.sum_sets(&members, self.cyclic_set(g));
            }
        }
        Ok(members)
    }

    pub fn submodule(&self, gens: &[usize]) -> Result<Submodule> {
        let members = self.span(gens)?;
        Ok(Submodule { module_key: self.key, members, gens: gens.to_vec() })
    }

    pub(crate) fn submodule_from_closed(&self, members: ElemSet) -> Submodule {
        let mut gens = Vec::new();
        let mut span = ElemSet::from_iter(self.order, [0]);
        for x in members.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = self.sum_sets(&span, self.cyclic_set(x));
            }
        }
        debug_assert_eq!(span, members);
        Submodule { module_key: self.key, members, gens }
    }

    /// Accepts `members` if it is closed under addition and the action.
    pub fn submodule_from_members(&self, members: ElemSet) -> Result<Submodule> {
        if members.universe() != self.order || !members.contains(0) {
            return Err(input_err!("subset does not contain 0 of {}", self.label));
        }
        let ms = members.to_vec();
        for &a in &ms {
            for &b in &ms {
                if !members.contains(self.add(a, b)) {
                    return Err(input_err!("subset of {} not closed under addition", self.label));
                }
            }
            if !self.cyclic_set(a).is_subset(&members) {
                return Err(input_err!("subset of {} not closed under the action", self.label));
            }
        }
        Ok(self.submodule_from_closed(members))
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule { module_key: self.key, members: ElemSet::from_iter(self.order, [0]), gens: Vec::new() }
    }

    pub fn whole(&self) -> Submodule {
        self.submodule_from_closed(ElemSet::full(self.order))
    }

    /// All submodules exactly once: cyclic submodules closed under sums with
    /// cyclic submodules until fixpoint. Sorted by size, then members.
    pub fn enumerate_submodules(&self, caps: &Caps) -> Result<Vec<Submodule>> {
        if self.order > caps.module_order {
            return Err(Error::Capacity { what: format!("module {} of order {}", self.label, self.order), cap: caps.module_order });
        }
        let mut seeds: Vec<(usize, &ElemSet)> = Vec::new();
        let mut seen: BTreeSet<&ElemSet> = BTreeSet::new();
        for g in self.elements() {
            let s = self.cyclic_set(g);
            if seen.insert(s) {
                seeds.push((g, s));
            }
        }
        let mut seen: BTreeSet<ElemSet> = seeds.iter().map(|(_, s)| (*s).clone()).collect();
        let mut family: Vec<Submodule> = seeds
            .iter()
            .map(|&(g, s)| Submodule { module_key: self.key, members: s.clone(), gens: if g == 0 { Vec::new() } else { alloc::vec![g] } })
            .collect();
        if family.len() > caps.lattice {
            return Err(Error::Capacity { what: format!("submodule lattice of {}", self.label), cap: caps.lattice });
        }
        let mut i = 0;
        while i < family.len() {
            for &(g, s) in &seeds {
                if family[i].members.contains(g) {
                    continue;
                }
                let sum = self.sum_sets(&family[i].members, s);
                if seen.insert(sum.clone()) {
                    if family.len() >= caps.lattice {
                        return Err(Error::Capacity { what: format!("submodule lattice of {}", self.label), cap: caps.lattice });
                    }
                    let mut gens = family[i].gens.clone();
                    gens.push(g);
                    family.push(Submodule { module_key: self.key, members: sum, gens });
                }
            }
            i += 1;
        }
        family.sort_by(|x, y| x.cmp_key(y));
        Ok(family)
    }

    /// Cached enumeration under the default caps.
    pub fn submodules(&self) -> Result<&[Submodule]> {
        let r = self.cache.submodules.get_or_init(|| Box::new(self.enumerate_submodules(&Caps::default())));
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn proper_submodules(&self) -> Result<impl Iterator<Item = &Submodule>> {
        Ok(self.submodules()?.iter().filter(|n| n.is_proper()))
    }

    /// Index of a submodule with the given members in [`Self::submodules`].
    pub fn submodule_index(&self, members: &ElemSet) -> Result<Option<usize>> {
        let subs = self.submodules()?;
        Ok(subs.binary_search_by(|s| s.members.count().cmp(&members.count()).then_with(|| s.members.cmp(members))).ok())
    }

    pub fn submodule_label(&self, n: &Submodule) -> String {
        if n.members.count() == 1 {
            return String::from("<0>");
        }
        if n.members.is_full() {
            return String::from("M");
        }
        let gens: Vec<String> = n.gens.iter().map(|&g| self.describe(g)).collect();
        format!("<{}>", gens.join(","))
    }

    /// Decodes an element id into construction-level notation.
    pub fn describe(&self, m: usize) -> String {
        match &self.construction {
            ModuleConstruction::Cyclic(_) => format!("{m}"),
            ModuleConstruction::Regular => match &self.base {
                BaseRing::Finite(r) => r.describe(m),
                BaseRing::Integers => format!("{m}"),
            },
            ModuleConstruction::Product(l, r) => {
                let w = r.order;
                format!("({},{})", l.describe(m / w), r.describe(m % w))
            }
            ModuleConstruction::Quotient { parent, reps, .. } => format!("[{}]", parent.describe(reps[m])),
            ModuleConstruction::Duplication { module, pairs, .. } => {
                let (a, b) = pairs.decode(m);
                format!("({},{})", module.describe(a), module.describe(b))
            }
            ModuleConstruction::Amalgam { m1, m2, pairs, .. } => {
                let (a, b) = pairs.decode(m);
                format!("({},{})", m1.describe(a), m2.describe(b))
            }
            ModuleConstruction::Restricted { module, .. } => module.describe(m),
        }
    }

    // ---- residuals and products ----

    /// `(N :_R M)` as scalar-domain members.
    pub fn colon_module_set(&self, n: &ElemSet) -> ElemSet {
        ElemSet::from_predicate(self.nscalars, |s| self.elements().all(|m| n.contains(self.act(s, m))))
    }

    /// `(N :_R m)` as scalar-domain members.
    pub fn colon_elem_set(&self, n: &ElemSet, m: usize) -> ElemSet {
        ElemSet::from_predicate(self.nscalars, |s| n.contains(self.act(s, m)))
    }

    /// `(N :_M I)` for scalar-domain members `i`.
    pub fn colon_scalars_set(&self, n: &ElemSet, i: &ElemSet) -> ElemSet {
        let is = i.to_vec();
        ElemSet::from_predicate(self.order, |m| is.iter().all(|&s| n.contains(self.act(s, m))))
    }

    /// `IN` for scalar-domain members `i`: the span of `{s·x}`.
    pub fn scalars_times_set(&self, i: &ElemSet, n: &ElemSet) -> ElemSet {
        let mut gens = Vec::new();
        let mut seen = ElemSet::empty(self.order);
        for s in i.iter() {
            for x in n.iter() {
                let y = self.act(s, x);
                if seen.insert(y) {
                    gens.push(y);
                }
            }
        }
        self.span(&gens).expect("products are elements")
    }

    pub fn colon_module(&self, n: &Submodule) -> Result<ScalarSet> {
        self.check_owns(n)?;
        Ok(self.scalar_set_of(self.colon_module_set(&n.members)))
    }

    pub fn colon_elem(&self, n: &Submodule, m: usize) -> Result<ScalarSet> {
        self.check_owns(n)?;
        if m >= self.order {
            return Err(input_err!("{m} is not an element of {}", self.label));
        }
        Ok(self.scalar_set_of(self.colon_elem_set(&n.members, m)))
    }

    /// `(N :_M I)`.
    pub fn colon_scalars(&self, n: &Submodule, i: &ScalarSet) -> Result<Submodule> {
        self.check_owns(n)?;
        let is = self.scalar_members(i)?;
        Ok(self.submodule_from_closed(self.colon_scalars_set(&n.members, &is)))
    }

    /// `(N :_M a)`.
    pub fn colon_scalar(&self, n: &Submodule, a: usize) -> Result<Submodule> {
        self.check_owns(n)?;
        if a >= self.nscalars {
            return Err(input_err!("scalar {a} out of range for {}", self.full_label()));
        }
        let is = ElemSet::from_iter(self.nscalars, [a]);
        Ok(self.submodule_from_closed(self.colon_scalars_set(&n.members, &is)))
    }

    /// `IN`.
    pub fn scalars_times(&self, i: &ScalarSet, n: &Submodule) -> Result<Submodule> {
        self.check_owns(n)?;
        let is = self.scalar_members(i)?;
        Ok(self.submodule_from_closed(self.scalars_times_set(&is, &n.members)))
    }

    // ---- prime submodules, rad, multiplication ----

    /// `rm ∈ P ⇒ r ∈ (P:M) or m ∈ P`, for proper `P`.
    pub(crate) fn is_prime_set(&self, p: &ElemSet) -> bool {
        if p.is_full() {
            return false;
        }
        let colon = self.colon_module_set(p);
        self.scalars().filter(|&s| !colon.contains(s)).all(|s| self.elements().all(|m| !p.contains(self.act(s, m)) || p.contains(m)))
    }

    /// Indices into [`Self::submodules`] of the prime submodules.
    pub fn prime_submodules(&self) -> Result<&[usize]> {
        let r = self.cache.primes.get_or_init(|| {
            Box::new(
                self.submodules()
                    .map(|subs| subs.iter().enumerate().filter(|(_, p)| self.is_prime_set(&p.members)).map(|(i, _)| i).collect()),
            )
        });
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// Intersection of the prime submodules containing `n`; `M` if none.
    pub fn rad_set(&self, n: &ElemSet) -> Result<ElemSet> {
        let subs = self.submodules()?;
        let mut out = ElemSet::full(self.order);
        for &i in self.prime_submodules()? {
            if n.is_subset(&subs[i].members) {
                out = out.intersection(&subs[i].members);
            }
        }
        Ok(out)
    }

    pub fn rad_submodule(&self, n: &Submodule) -> Result<Submodule> {
        self.check_owns(n)?;
        Ok(self.submodule_from_closed(self.rad_set(&n.members)?))
    }

    /// Every submodule has the form `IM`; equivalently `N = (N:M)M`.
    pub fn is_multiplication(&self) -> Result<bool> {
        let r = self.cache.multiplication.get_or_init(|| {
            Box::new(self.submodules().map(|subs| {
                let whole = ElemSet::full(self.order);
                subs.iter().all(|n| self.scalars_times_set(&self.colon_module_set(&n.members), &whole) == n.members)
            }))
        });
        r.clone()
    }

    /// `√(N :_R m) = √0 ∪ (N :_R m)`; `None` when `Ann(m) ≠ 0`.
    pub fn sqrt_colon_decomposition_holds(&self, n: &Submodule, m: usize) -> Result<Option<bool>> {
        self.check_owns(n)?;
        if m >= self.order {
            return Err(input_err!("{m} is not an element of {}", self.label));
        }
        if !self.ann_is_zero(m) {
            return Ok(None);
        }
        let colon = self.colon_elem_set(&n.members, m);
        let lhs = self.scalar_radical(&colon);
        let rhs = colon.union(self.nilpotent_scalars());
        Ok(Some(lhs == rhs))
    }

    /// Full-table check of the module axioms for small modules, a
    /// deterministic sample above 64 elements.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        let one = self.scalar_one();
        for a in 0..n {
            if self.add(a, 0) != a || self.add(a, self.neg(a)) != 0 {
                return Err(input_err!("{}: group identity or inverse fails at {a}", self.label));
            }
            if self.act(one, a) != a && !(self.is_over_integers() && self.exponent == 1) {
                return Err(input_err!("{}: 1·{a} != {a}", self.label));
            }
            if self.act(0, a) != 0 {
                return Err(input_err!("{}: 0·{a} != 0", self.label));
            }
        }
        let small = n <= 64 && self.nscalars <= 64;
        let mut x: u64 = 0x2545f4914f6cdd1d;
        let mut next = |bound: usize| -> usize {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            (x % bound as u64) as usize
        };
        let triples: Vec<(usize, usize, usize)> = if small {
            let mut v = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for s in 0..self.nscalars {
                        v.push((a, b, s));
                    }
                }
            }
            v
        } else {
            (0..50_000).map(|_| (next(n), next(n), next(self.nscalars))).collect()
        };
        for (a, b, s) in triples {
            if self.add(a, b) != self.add(b, a) {
                return Err(input_err!("{}: addition not commutative at ({a},{b})", self.label));
            }
            let c = (a + b + s) % n;
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(input_err!("{}: addition not associative at ({a},{b},{c})", self.label));
            }
            if self.act(s, self.add(a, b)) != self.add(self.act(s, a), self.act(s, b)) {
                return Err(input_err!("{}: {s}·({a}+{b}) fails to distribute", self.label));
            }
            let t = (a * 7 + b) % self.nscalars;
            if self.act(self.scalar_mul(s, t), a) != self.act(s, self.act(t, a)) {
                return Err(input_err!("{}: ({s}{t})·{a} != {s}·({t}·{a})", self.label));
            }
            if let BaseRing::Finite(r) = &self.base {
                if self.act(r.add(s, t), a) != self.add(self.act(s, a), self.act(t, a)) {
                    return Err(input_err!("{}: ({s}+{t})·{a} fails to distribute", self.label));
                }
            }
        }
        Ok(())
    }

    /// `S⁻¹M` for `S` generated by `s_gens`. Over `ℤ` this is `M / T_S(M)`;
    /// over a finite ring `S` must consist of units and the result is `M`.
    pub fn localize(module: &Module, s_gens: &[i64]) -> Result<(Module, ModuleHom)> {
        if s_gens.contains(&0) {
            return Err(input_err!("0 cannot belong to a multiplicative set inside reg(R)"));
        }
        match &module.base {
            BaseRing::Finite(r) => {
                for &s in s_gens {
                    let id = usize::try_from(s).ok().filter(|&i| i < r.order());
                    match id {
                        Some(i) if r.units().contains(i) => {}
                        _ => return Err(input_err!("{s} is not a regular element of {}", r.label())),
                    }
                }
                Ok((module.clone(), ModuleHom::identity(module)))
            }
            BaseRing::Integers => {
                let e = module.exponent as i64;
                let p = s_gens.iter().fold(1i64, |acc, &s| (acc * s.rem_euclid(e.max(1))) % e.max(1));
                let rep = if p == 0 { module.exponent } else { p as usize };
                let killed = ElemSet::from_predicate(module.order, |m| {
                    let mut x = m;
                    for _ in 0..=module.order {
                        if x == 0 {
                            return true;
                        }
                        x = module.act(rep, x);
                    }
                    x == 0
                });
                let t = module.submodule_from_closed(killed);
                Self::quotient(module, &t)
            }
        }
    }
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteModule({}, order {})", self.full_label(), self.order)
    }
}

/// A submodule of a [`FiniteModule`], as its member set plus generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    pub(crate) module_key: u64,
    pub(crate) members: ElemSet,
    pub(crate) gens: Vec<usize>,
}

impl Submodule {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, m: usize) -> bool {
        self.members.contains(m)
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }

    pub fn is_zero(&self) -> bool {
        self.members.count() == 1
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn module_key(&self) -> u64 {
        self.module_key
    }

    fn cmp_key(&self, other: &Submodule) -> core::cmp::Ordering {
        self.members.count().cmp(&other.members.count()).then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{:?}", self.members)
    }
}

/// A homomorphism between modules over the same base ring.
#[derive(Clone)]
pub struct ModuleHom {
    src: Module,
    dst: Module,
    map: Vec<usize>,
}

impl ModuleHom {
    pub fn identity(m: &Module) -> Self {
        ModuleHom { src: m.clone(), dst: m.clone(), map: m.elements().collect() }
    }

    /// Validates additivity and linearity of a total element map.
    pub fn from_map(src: &Module, dst: &Module, map: Vec<usize>) -> Result<Self> {
        if !src.base.same_as(&dst.base) {
            return Err(input_err!("homomorphism between modules over different rings"));
        }
        if map.len() != src.order || map.iter().any(|&y| y >= dst.order) {
            return Err(input_err!("map must list one image in {} per element of {}", dst.label, src.label));
        }
        for a in src.elements() {
            for b in src.elements() {
                if map[src.add(a, b)] != dst.add(map[a], map[b]) {
                    return Err(input_err!("map is not additive: f({a}+{b}) != f({a})+f({b})"));
                }
            }
        }
        // over ℤ linearity follows from additivity
        let ns = if src.is_over_integers() { 0 } else { src.scalar_count() };
        for s in 0..ns {
            for a in src.elements() {
                if map[src.act(s, a)] != dst.act(s, map[a]) {
                    return Err(input_err!("map is not linear: f({s}·{a}) != {s}·f({a})"));
                }
            }
        }
        Ok(ModuleHom { src: src.clone(), dst: dst.clone(), map })
    }

    /// Extends generator images linearly, failing on a violated relation.
    pub fn from_generators(src: &Module, dst: &Module, images: &[(usize, usize)]) -> Result<Self> {
        if !src.base.same_as(&dst.base) {
            return Err(input_err!("homomorphism between modules over different rings"));
        }
        let mut map = alloc::vec![usize::MAX; src.order];
        map[0] = 0;
        let mut reached = alloc::vec![0usize];
        for &(g, img) in images {
            if g >= src.order || img >= dst.order {
                return Err(input_err!("generator image ({g} -> {img}) out of range"));
            }
            // every new element is r + s·g with r already reached
            let mut frontier = Vec::new();
            for s in src.scalars() {
                let sg = src.act(s, g);
                let ds = if dst.is_over_integers() { s % dst.exponent } else { s };
                let simg = dst.act(ds, img);
                for &r in &reached {
                    let x = src.add(r, sg);
                    let y = dst.add(map[r], simg);
                    if map[x] == usize::MAX {
                        map[x] = y;
                        frontier.push(x);
                    } else if map[x] != y {
                        return Err(input_err!(
                            "relation violated: element {} would map to both {} and {}",
                            src.describe(x),
                            dst.describe(map[x]),
                            dst.describe(y)
                        ));
                    }
                }
            }
            reached.extend(frontier);
        }
        if map.contains(&usize::MAX) {
            return Err(input_err!("generator images do not determine the map on all of {}", src.label));
        }
        Self::from_map(src, dst, map)
    }

    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn dst(&self) -> &Module {
        &self.dst
    }

    pub fn apply(&self, m: usize) -> usize {
        self.map[m]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, n: &Submodule) -> Result<Submodule> {
        self.src.check_owns(n)?;
        Ok(self.dst.submodule_from_closed(ElemSet::from_iter(self.dst.order, n.members.iter().map(|m| self.map[m]))))
    }

    pub fn preimage(&self, n: &Submodule) -> Result<Submodule> {
        self.dst.check_owns(n)?;
        Ok(self.src.submodule_from_closed(ElemSet::from_predicate(self.src.order, |m| n.contains(self.map[m]))))
    }

    pub fn kernel(&self) -> Submodule {
        self.src.submodule_from_closed(ElemSet::from_predicate(self.src.order, |m| self.map[m] == 0))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        ElemSet::from_iter(self.dst.order, self.map.iter().copied()).is_full()
    }
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom({} -> {})", self.src.label, self.dst.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn zmod(k: usize) -> Module {
        FiniteModule::cyclic(k, &BaseRing::Integers).unwrap()
    }

    #[test]
    fn integer_cyclic_basics() {
        let m = zmod(12);
        assert_eq!(m.exponent(), 12);
        assert_eq!(m.scalar_count(), 13);
        assert_eq!(m.submodules().unwrap().len(), 6);
        assert_eq!(m.ann_elem(4), ScalarSet::Multiples(3));
        assert_eq!(m.ann_module(), ScalarSet::Multiples(12));
        let n4 = m.submodule(&[4]).unwrap();
        assert_eq!(m.colon_module(&n4).unwrap(), ScalarSet::Multiples(4));
        assert_eq!(m.rad_submodule(&n4).unwrap().members(), m.submodule(&[2]).unwrap().members());
        assert!(m.regular_elements().is_empty());
        assert!(m.torsion().is_full());
        m.verify_axioms().unwrap();
        let zero = zmod(1);
        assert_eq!(zero.submodules().unwrap().len(), 1);
        assert_eq!(zero.torsion().to_vec(), [0]);
    }

    #[test]
    fn finite_base_basics() {
        let z12 = FiniteRing::zn(12).unwrap();
        let base = BaseRing::Finite(z12.clone());
        assert!(FiniteModule::cyclic(5, &base).is_err());
        let z4 = FiniteModule::cyclic(4, &base).unwrap();
        z4.verify_axioms().unwrap();
        let n2 = z4.submodule(&[2]).unwrap();
        let i2 = ScalarSet::Ideal(z12.ideal(&[2]).unwrap());
        assert!(z4.colon_scalars(&n2, &i2).unwrap().members().is_full());
        let z6 = FiniteModule::regular(&FiniteRing::zn(6).unwrap()).unwrap();
        assert_eq!(z6.torsion().to_vec(), [0, 2, 3, 4]);
        let r12 = FiniteModule::regular(&z12).unwrap();
        assert_eq!(r12.ann_elem(1), ScalarSet::Ideal(z12.zero_ideal()));
        assert_eq!(r12.sqrt_colon_decomposition_holds(&r12.submodule(&[2]).unwrap(), 1).unwrap(), Some(true));
        assert!(r12.is_multiplication().unwrap());
        assert!(r12.is_faithful());
    }

    #[test]
    fn quotient_and_homs() {
        let m = zmod(12);
        let (q, proj) = FiniteModule::quotient(&m, &m.submodule(&[6]).unwrap()).unwrap();
        assert_eq!(q.order(), 6);
        let img = proj.image(&m.submodule(&[4]).unwrap()).unwrap();
        assert_eq!(img.order(), 3);
        assert_eq!(ModuleHom::identity(&m).kernel().order(), 1);
        assert!(ModuleHom::from_generators(&m, &zmod(5), &[(1, 1)]).is_err());
        let h = ModuleHom::from_generators(&m, &zmod(4), &[(1, 1)]).unwrap();
        assert!(h.is_surjective());
        assert_eq!(h.kernel().order(), 3);
    }

    #[test]
    fn localization_over_integers() {
        let m = zmod(12);
        assert_eq!(FiniteModule::localize(&m, &[2]).unwrap().0.order(), 3);
        assert_eq!(FiniteModule::localize(&m, &[6]).unwrap().0.order(), 1);
        assert_eq!(FiniteModule::localize(&m, &[1]).unwrap().0.order(), 12);
        assert!(FiniteModule::localize(&m, &[0]).is_err());
    }
}
