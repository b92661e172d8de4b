//! Finite commutative rings with identity and their ideals.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::caps::Caps;
use crate::construct::RingHom;
use crate::elemset::ElemSet;
use crate::error::{input_err, Error, Result};
use crate::module::Module;

pub type Ring = Arc<FiniteRing>;

/// How a ring was built, together with the data needed to decode its dense
/// element ids back into construction-specific tuples.
pub enum RingConstruction {
    Zn(usize),
    /// Ids are `a * |right| + b`.
    Product(Ring, Ring),
    /// Cosets, listed by their smallest representative.
    Quotient {
        parent: Ring,
        ideal: Ideal,
        reps: Vec<usize>,
        class_of: Vec<u32>,
    },
    /// `R(+)M`; ids are `r * |M| + m`.
    Idealization {
        ring: Ring,
        module: Module,
    },
    /// `R ⋈ J = {(r, r + j)}` inside `R × R`.
    Duplication {
        ring: Ring,
        ideal: Ideal,
        pairs: PairTable,
    },
    /// `R₁ ⋈^f J = {(r, f(r) + j)}` inside `R₁ × R₂`.
    Amalgam {
        hom: Arc<RingHom>,
        ideal: Ideal,
        pairs: PairTable,
    },
}

/// Sorted list of admissible pairs with a dense reverse index.
pub struct PairTable {
    pairs: Vec<(usize, usize)>,
    width: usize,
    index: Vec<u32>,
}

impl PairTable {
    pub(crate) fn new(pairs: BTreeSet<(usize, usize)>, height: usize, width: usize) -> Self {
        let pairs: Vec<_> = pairs.into_iter().collect();
        let mut index = alloc::vec![u32::MAX; height * width];
        for (id, &(a, b)) in pairs.iter().enumerate() {
            index[a * width + b] = id as u32;
        }
        PairTable { pairs, width, index }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn decode(&self, id: usize) -> (usize, usize) {
        self.pairs[id]
    }

    pub fn encode(&self, a: usize, b: usize) -> Option<usize> {
        match self.index.get(a * self.width + b) {
            Some(&i) if i != u32::MAX => Some(i as usize),
            _ => None,
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub(crate) fn dims(&self) -> (usize, usize) {
        (self.index.len() / self.width.max(1), self.width)
    }
}

#[derive(Default)]
struct RingCache {
    nilradical: OnceBox<ElemSet>,
    units: OnceBox<ElemSet>,
    zero_divisors: OnceBox<ElemSet>,
    ideals: OnceBox<Result<Vec<Ideal>>>,
}

/// A finite commutative ring with identity, stored as full operation tables
/// over dense ids `0..order`. The zero element is always id 0.
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    one: usize,
    construction: RingConstruction,
    recipe: String,
    label: String,
    key: u64,
    cache: RingCache,
}

pub(crate) fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub(crate) fn set_recipe(set: &ElemSet) -> String {
    let items: Vec<String> = set.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", items.join(","))
}

impl FiniteRing {
    /// Tabulates a ring from element-wise operations. `zero` must be id 0.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn tabulate(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        neg: impl Fn(usize) -> usize,
        one: usize,
        construction: RingConstruction,
        recipe: String,
        label: String,
    ) -> Result<Ring> {
        let cap = Caps::HARD.ring_order;
        if order > cap {
            return Err(Error::Capacity { what: format!("ring {label} of order {order}"), cap });
        }
        let mut at = Vec::with_capacity(order * order);
        let mut mt = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                at.push(add(a, b) as u32);
                mt.push(mul(a, b) as u32);
            }
        }
        let nt = (0..order).map(|a| neg(a) as u32).collect();
        let key = fnv1a(&recipe);
        Ok(Arc::new(FiniteRing { order, add: at, mul: mt, neg: nt, one, construction, recipe, label, key, cache: RingCache::default() }))
    }

    /// The ring `ℤ_n`.
    pub fn zn(n: usize) -> Result<Ring> {
        if n == 0 {
            return Err(input_err!("Z_n requires n >= 1, got 0"));
        }
        Self::tabulate(
            n,
            |a, b| (a + b) % n,
            |a, b| (a * b) % n,
            |a| (n - a) % n,
            1 % n,
            RingConstruction::Zn(n),
            format!("zn({n})"),
            format!("Z{n}"),
        )
    }

    pub fn product(left: &Ring, right: &Ring) -> Result<Ring> {
        let w = right.order;
        let (l, r) = (left.clone(), right.clone());
        let (l2, r2, l3, r3) = (left.clone(), right.clone(), left.clone(), right.clone());
        Self::tabulate(
            left.order * w,
            move |x, y| l.add(x / w, y / w) * w + r.add(x % w, y % w),
            move |x, y| l2.mul(x / w, y / w) * w + r2.mul(x % w, y % w),
            move |x| l3.neg(x / w) * w + r3.neg(x % w),
            left.one * w + right.one,
            RingConstruction::Product(left.clone(), right.clone()),
            format!("prod({},{})", left.recipe, right.recipe),
            format!("{} x {}", left.paren_label(), right.paren_label()),
        )
    }

    pub fn quotient(parent: &Ring, ideal: &Ideal) -> Result<Ring> {
        parent.check_owns(ideal)?;
        let n = parent.order;
        let mut class_of = alloc::vec![u32::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if class_of[a] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(a);
            for i in ideal.members.iter() {
                class_of[parent.add(a, i)] = id;
            }
        }
        let p = parent.clone();
        let (reps_a, cls_a) = (reps.clone(), class_of.clone());
        let (reps_m, cls_m) = (reps.clone(), class_of.clone());
        let (reps_n, cls_n) = (reps.clone(), class_of.clone());
        let (pa, pm, pn) = (p.clone(), p.clone(), p.clone());
        Self::tabulate(
            reps.len(),
            move |x, y| cls_a[pa.add(reps_a[x], reps_a[y])] as usize,
            move |x, y| cls_m[pm.mul(reps_m[x], reps_m[y])] as usize,
            move |x| cls_n[pn.neg(reps_n[x])] as usize,
            class_of[parent.one] as usize,
            RingConstruction::Quotient { parent: parent.clone(), ideal: ideal.clone(), reps, class_of },
            format!("quot({},{})", parent.recipe, set_recipe(&ideal.members)),
            format!("{}/{}", parent.paren_label(), parent.ideal_label(ideal)),
        )
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn construction(&self) -> &RingConstruction {
        &self.construction
    }

    /// Canonical structural description; equal recipes mean equal rings.
    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn paren_label(&self) -> String {
        match self.construction {
            RingConstruction::Zn(_) => self.label.clone(),
            _ => format!("({})", self.label),
        }
    }

    pub fn same_as(&self, other: &FiniteRing) -> bool {
        core::ptr::eq(self, other) || self.key == other.key && self.recipe == other.recipe
    }

    /// `Some(n)` when this ring is literally `ℤ_n`.
    pub fn as_zn(&self) -> Option<usize> {
        match self.construction {
            RingConstruction::Zn(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    /// Decodes an element id into its construction-level notation.
    pub fn describe(&self, e: usize) -> String {
        match &self.construction {
            RingConstruction::Zn(_) => format!("{e}"),
            RingConstruction::Product(_, r) => {
                let w = r.order;
                let RingConstruction::Product(l, r) = &self.construction else { unreachable!() };
                format!("({},{})", l.describe(e / w), r.describe(e % w))
            }
            RingConstruction::Quotient { parent, reps, .. } => format!("[{}]", parent.describe(reps[e])),
            RingConstruction::Idealization { ring, module } => {
                let w = module.order();
                format!("({},{})", ring.describe(e / w), module.describe(e % w))
            }
            RingConstruction::Duplication { ring, pairs, .. } => {
                let (a, b) = pairs.decode(e);
                format!("({},{})", ring.describe(a), ring.describe(b))
            }
            RingConstruction::Amalgam { hom, pairs, .. } => {
                let (a, b) = pairs.decode(e);
                format!("({},{})", hom.src().describe(a), hom.dst().describe(b))
            }
        }
    }

    /// Full-table check of the commutative ring axioms for small rings,
    /// a deterministic sample of triples above 64 elements.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        if self.neg.len() != n || self.one >= n {
            return Err(input_err!("{}: malformed tables", self.label));
        }
        for a in 0..n {
            if self.add(a, 0) != a {
                return Err(input_err!("{}: 0 is not an additive identity for {a}", self.label));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(input_err!("{}: {a} + (-{a}) != 0", self.label));
            }
            if self.mul(self.one, a) != a {
                return Err(input_err!("{}: 1 * {a} != {a}", self.label));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(input_err!("{}: addition not commutative at ({a},{b})", self.label));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(input_err!("{}: multiplication not commutative at ({a},{b})", self.label));
                }
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(input_err!("{}: addition not associative at ({a},{b},{c})", self.label));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(input_err!("{}: multiplication not associative at ({a},{b},{c})", self.label));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(input_err!("{}: distributivity fails at ({a},{b},{c})", self.label));
            }
            Ok(())
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut x: u64 = 0x9e3779b97f4a7c15;
            for _ in 0..50_000 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                let t = x as usize;
                check(t % n, (t / n) % n, (t / n / n) % n)?;
            }
        }
        Ok(())
    }

    /// `√0`: elements with `a^k = 0` for some `k ≤ order`.
    pub fn nilradical_set(&self) -> &ElemSet {
        self.cache.nilradical.get_or_init(|| {
            alloc::boxed::Box::new(ElemSet::from_predicate(self.order, |a| {
                let mut p = a;
                for _ in 0..self.order {
                    if p == 0 {
                        return true;
                    }
                    p = self.mul(p, a);
                }
                p == 0
            }))
        })
    }

    pub fn nilradical(&self) -> Ideal {
        self.ideal_from_closed_set(self.nilradical_set().clone())
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilradical_set().contains(a)
    }

    pub fn units(&self) -> &ElemSet {
        self.cache.units.get_or_init(|| {
            alloc::boxed::Box::new(ElemSet::from_predicate(self.order, |a| (0..self.order).any(|b| self.mul(a, b) == self.one)))
        })
    }

    /// `Z(R)`: elements `a` with `ab = 0` for some `b ≠ 0`.
    pub fn zero_divisors(&self) -> &ElemSet {
        self.cache
            .zero_divisors
            .get_or_init(|| alloc::boxed::Box::new(ElemSet::from_predicate(self.order, |a| (1..self.order).any(|b| self.mul(a, b) == 0))))
    }

    /// `(reg(R), Z(R))`.
    pub fn regular_and_zero_divisors(&self) -> (ElemSet, ElemSet) {
        let zd = self.zero_divisors().clone();
        let reg = ElemSet::from_predicate(self.order, |a| !zd.contains(a));
        (reg, zd)
    }

    /// `Ann_R(a) = 0`.
    pub fn is_regular(&self, a: usize) -> bool {
        !self.zero_divisors().contains(a)
    }

    /// A nonzero ring without zero divisors; at finite scale this is a field.
    pub fn is_integral_domain(&self) -> bool {
        self.order > 1 && self.zero_divisors().count() == 1
    }

    pub fn ann_ring_elem(&self, a: usize) -> Ideal {
        self.ideal_from_closed_set(ElemSet::from_predicate(self.order, |b| self.mul(a, b) == 0))
    }

    // ---- ideals ----

    pub(crate) fn check_owns(&self, ideal: &Ideal) -> Result<()> {
        if ideal.ring_key != self.key || ideal.members.universe() != self.order {
            return Err(input_err!("ideal {:?} does not belong to ring {}", ideal.gens, self.label));
        }
        Ok(())
    }

    pub fn principal_set(&self, a: usize) -> ElemSet {
        ElemSet::from_iter(self.order, (0..self.order).map(|r| self.mul(r, a)))
    }

    fn sum_sets(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.order);
        let bs = b.to_vec();
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// The ideal generated by `gens`.
    pub fn ideal(&self, gens: &[usize]) -> Result<Ideal> {
        let mut members = ElemSet::from_iter(self.order, [0]);
        for &g in gens {
            if g >= self.order {
                return Err(input_err!("{g} is not an element of {}", self.label));
            }
            if !members.contains(g) {
                members = self.sum_sets(&members, &self.principal_set(g));
            }
        }
        Ok(Ideal { ring_key: self.key, members, gens: gens.to_vec() })
    }

    /// Wraps a set already known to be an ideal, choosing generators greedily.
    pub(crate) fn ideal_from_closed_set(&self, members: ElemSet) -> Ideal {
        let mut gens = Vec::new();
        let mut span = ElemSet::from_iter(self.order, [0]);
        for x in members.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = self.sum_sets(&span, &self.principal_set(x));
            }
        }
        debug_assert_eq!(span, members);
        Ideal { ring_key: self.key, members, gens }
    }

    /// Accepts `members` if it is closed under addition, negation and
    /// multiplication by ring elements.
    pub fn ideal_from_members(&self, members: ElemSet) -> Result<Ideal> {
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
            for r in 0..self.order {
                if !members.contains(self.mul(r, a)) {
                    return Err(input_err!("subset of {} not closed under multiplication by {r}", self.label));
                }
            }
        }
        Ok(self.ideal_from_closed_set(members))
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal { ring_key: self.key, members: ElemSet::from_iter(self.order, [0]), gens: Vec::new() }
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal { ring_key: self.key, members: ElemSet::full(self.order), gens: alloc::vec![self.one] }
    }

    /// Every ideal exactly once: principal ideals closed under pairwise sums.
    pub fn enumerate_ideals(&self, caps: &Caps) -> Result<Vec<Ideal>> {
        if self.order > caps.ring_order {
            return Err(Error::Capacity { what: format!("ring {} of order {}", self.label, self.order), cap: caps.ring_order });
        }
        let cyclic: Vec<(usize, ElemSet)> = {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for a in 0..self.order {
                let s = self.principal_set(a);
                if seen.insert(s.clone()) {
                    out.push((a, s));
                }
            }
            out
        };
        let mut seen: BTreeSet<ElemSet> = BTreeSet::new();
        let mut family: Vec<Ideal> = Vec::new();
        for (a, s) in &cyclic {
            seen.insert(s.clone());
            let gens = if *a == 0 { Vec::new() } else { alloc::vec![*a] };
            family.push(Ideal { ring_key: self.key, members: s.clone(), gens });
        }
        let mut i = 0;
        while i < family.len() {
            for (a, s) in &cyclic {
                if s.is_subset(&family[i].members) {
                    continue;
                }
                let sum = self.sum_sets(&family[i].members, s);
                if seen.insert(sum.clone()) {
                    if family.len() >= caps.lattice {
                        return Err(Error::Capacity { what: format!("ideal lattice of {}", self.label), cap: caps.lattice });
                    }
                    let mut gens = family[i].gens.clone();
                    gens.push(*a);
                    family.push(Ideal { ring_key: self.key, members: sum, gens });
                }
            }
            i += 1;
        }
        family.sort_by(|x, y| x.members.count().cmp(&y.members.count()).then_with(|| x.members.cmp(&y.members)));
        Ok(family)
    }

    /// Cached enumeration under the default caps.
    pub fn ideals(&self) -> Result<&[Ideal]> {
        let r = self.cache.ideals.get_or_init(|| alloc::boxed::Box::new(self.enumerate_ideals(&Caps::default())));
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_owns(i)?;
        self.check_owns(j)?;
        Ok(self.ideal_from_closed_set(self.sum_sets(&i.members, &j.members)))
    }

    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_owns(i)?;
        self.check_owns(j)?;
        let mut products = Vec::new();
        for a in i.members.iter() {
            for b in j.members.iter() {
                products.push(self.mul(a, b));
            }
        }
        products.sort_unstable();
        products.dedup();
        let gen = self.ideal(&products)?;
        Ok(self.ideal_from_closed_set(gen.members))
    }

    pub fn ideal_intersection(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_owns(i)?;
        self.check_owns(j)?;
        Ok(self.ideal_from_closed_set(i.members.intersection(&j.members)))
    }

    /// `(I : J) = {r : rJ ⊆ I}`.
    pub fn ideal_residual(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_owns(i)?;
        self.check_owns(j)?;
        let js = j.members.to_vec();
        Ok(self.ideal_from_closed_set(ElemSet::from_predicate(self.order, |r| js.iter().all(|&b| i.members.contains(self.mul(r, b))))))
    }

    /// `√I = {a : a^k ∈ I for some k ≤ order}`.
    pub fn ideal_radical(&self, i: &Ideal) -> Result<Ideal> {
        self.check_owns(i)?;
        Ok(self.ideal_from_closed_set(self.radical_set(&i.members)))
    }

    pub(crate) fn radical_set(&self, members: &ElemSet) -> ElemSet {
        ElemSet::from_predicate(self.order, |a| {
            let mut p = a;
            for _ in 0..self.order.max(1) {
                if members.contains(p) {
                    return true;
                }
                p = self.mul(p, a);
            }
            false
        })
    }

    pub fn ideal_arith(&self, i: &Ideal, j: &Ideal, op: IdealOp) -> Result<Ideal> {
        match op {
            IdealOp::Product => self.ideal_product(i, j),
            IdealOp::Intersect => self.ideal_intersection(i, j),
            IdealOp::Residual => self.ideal_residual(i, j),
            IdealOp::Radical => {
                self.check_owns(j)?;
                self.ideal_radical(i)
            }
        }
    }

    /// Short label for an ideal, e.g. `<4>`.
    pub fn ideal_label(&self, ideal: &Ideal) -> String {
        if ideal.members.count() == 1 {
            return String::from("<0>");
        }
        let gens: Vec<String> = ideal.gens.iter().map(|&g| self.describe(g)).collect();
        format!("<{}>", gens.join(","))
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label, self.order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Product,
    Intersect,
    Residual,
    Radical,
}

/// An ideal of a [`FiniteRing`], as its member set plus a generating list.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    pub(crate) ring_key: u64,
    pub(crate) members: ElemSet,
    pub(crate) gens: Vec<usize>,
}

impl Ideal {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
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

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn ring_key(&self) -> u64 {
        self.ring_key
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_ring_is_allowed() {
        let r = FiniteRing::zn(1).unwrap();
        assert_eq!(r.order(), 1);
        assert_eq!(r.one(), 0);
        assert!(r.is_zero_ring());
        r.verify_axioms().unwrap();
        assert!(FiniteRing::zn(0).is_err());
    }

    #[test]
    fn z12_derived_sets() {
        let r = FiniteRing::zn(12).unwrap();
        assert_eq!(r.nilradical_set().to_vec(), [0, 6]);
        let (reg, _) = r.regular_and_zero_divisors();
        assert_eq!(reg.to_vec(), [1, 5, 7, 11]);
        assert_eq!(r.ann_ring_elem(4).members().to_vec(), [0, 3, 6, 9]);
        assert_eq!(r.ann_ring_elem(1).members().to_vec(), [0]);
        assert!(r.ann_ring_elem(0).members().is_full());
    }

    #[test]
    fn small_rings() {
        let z4 = FiniteRing::zn(4).unwrap();
        assert_eq!(z4.units().to_vec(), [1, 3]);
        assert_eq!(z4.zero_divisors().to_vec(), [0, 2]);
        let z5 = FiniteRing::zn(5).unwrap();
        assert_eq!(z5.nilradical_set().to_vec(), [0]);
        assert_eq!(z5.regular_and_zero_divisors().0.to_vec(), [1, 2, 3, 4]);
        assert!(z5.is_integral_domain());
        assert_eq!(z5.enumerate_ideals(&Caps::default()).unwrap().len(), 2);
    }

    #[test]
    fn ideal_arithmetic_in_z12() {
        let r = FiniteRing::zn(12).unwrap();
        let i4 = r.ideal(&[4]).unwrap();
        assert_eq!(r.ideal_radical(&i4).unwrap().members(), r.ideal(&[2]).unwrap().members());
        let i2 = r.ideal(&[2]).unwrap();
        let i3 = r.ideal(&[3]).unwrap();
        assert_eq!(r.ideal_product(&i2, &i3).unwrap().members().to_vec(), [0, 6]);
        let whole = r.unit_ideal();
        assert_eq!(r.ideal_residual(&i4, &whole).unwrap().members(), i4.members());
        let other = FiniteRing::zn(6).unwrap();
        assert!(r.ideal_product(&i2, &other.ideal(&[2]).unwrap()).is_err());
    }

    #[test]
    fn product_and_quotient() {
        let z2 = FiniteRing::zn(2).unwrap();
        let p = FiniteRing::product(&z2, &z2).unwrap();
        p.verify_axioms().unwrap();
        assert_eq!(p.enumerate_ideals(&Caps::default()).unwrap().len(), 4);
        assert_eq!(p.describe(3), "(1,1)");
        let z12 = FiniteRing::zn(12).unwrap();
        let q = FiniteRing::quotient(&z12, &z12.ideal(&[4]).unwrap()).unwrap();
        q.verify_axioms().unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.nilradical_set().count(), 2);
    }
}
