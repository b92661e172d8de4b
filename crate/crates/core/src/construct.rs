//! Ring homomorphisms, semilinear maps, idealization, duplication and
//! amalgamation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::elemset::ElemSet;
use crate::error::{input_err, Result};
use crate::module::{FiniteModule, Module, ModuleConstruction, Submodule};
use crate::ring::{set_recipe, FiniteRing, Ideal, PairTable, Ring, RingConstruction};
use crate::scalars::BaseRing;

/// A unital ring homomorphism given by a total element map.
pub struct RingHom {
    src: Ring,
    dst: Ring,
    map: Vec<usize>,
    recipe: String,
}

impl RingHom {
    /// Validates additivity, multiplicativity and `f(1) = 1`.
    pub fn new(src: &Ring, dst: &Ring, map: Vec<usize>) -> Result<Arc<RingHom>> {
        if map.len() != src.order() || map.iter().any(|&y| y >= dst.order()) {
            return Err(input_err!("ring map must list one image in {} per element of {}", dst.label(), src.label()));
        }
        if map[src.one()] != dst.one() {
            return Err(input_err!("ring map does not send 1 to 1"));
        }
        for a in src.elements() {
            for b in src.elements() {
                if map[src.add(a, b)] != dst.add(map[a], map[b]) {
                    return Err(input_err!("ring map is not additive at ({a},{b})"));
                }
                if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                    return Err(input_err!("ring map is not multiplicative at ({a},{b})"));
                }
            }
        }
        let recipe = format!("hom({},{},{})", src.recipe(), dst.recipe(), list_recipe(&map));
        Ok(Arc::new(RingHom { src: src.clone(), dst: dst.clone(), map, recipe }))
    }

    pub fn identity(r: &Ring) -> Arc<RingHom> {
        Self::new(r, r, r.elements().collect()).expect("identity is a ring map")
    }

    /// The canonical `ℤ_a → ℤ_b` for `b | a`.
    pub fn reduction(src: &Ring, dst: &Ring) -> Result<Arc<RingHom>> {
        match (src.as_zn(), dst.as_zn()) {
            (Some(a), Some(b)) if a % b == 0 => Self::new(src, dst, (0..a).map(|x| x % b).collect()),
            (Some(a), Some(b)) => Err(input_err!("{b} does not divide {a}")),
            _ => Err(input_err!("reduce needs Z_a -> Z_b, got {} -> {}", src.label(), dst.label())),
        }
    }

    pub fn src(&self) -> &Ring {
        &self.src
    }

    pub fn dst(&self) -> &Ring {
        &self.dst
    }

    #[inline]
    pub fn apply(&self, r: usize) -> usize {
        self.map[r]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn is_injective(&self) -> bool {
        self.src.elements().all(|r| r == 0 || self.map[r] != 0)
    }

    pub fn is_surjective(&self) -> bool {
        ElemSet::from_iter(self.dst.order(), self.map.iter().copied()).is_full()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_identity(&self) -> bool {
        self.src.same_as(&self.dst) && self.map.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `Some(true)` when the map is the canonical reduction between `ℤ_n`s.
    pub fn is_reduction(&self) -> bool {
        matches!((self.src.as_zn(), self.dst.as_zn()), (Some(_), Some(b)) if self.map.iter().enumerate().all(|(i, &y)| i % b == y))
    }
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHom({} -> {})", self.src.label(), self.dst.label())
    }
}

pub(crate) fn list_recipe(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", items.join(","))
}

/// An additive map `φ: M₁ → M₂` with `φ(r·m) = f(r)·φ(m)`.
pub struct SemilinearMap {
    hom: Arc<RingHom>,
    src: Module,
    dst: Module,
    map: Vec<usize>,
    recipe: String,
}

impl SemilinearMap {
    pub fn new(hom: &Arc<RingHom>, src: &Module, dst: &Module, map: Vec<usize>) -> Result<Arc<SemilinearMap>> {
        match src.base() {
            BaseRing::Finite(r) if r.same_as(hom.src()) => {}
            _ => return Err(input_err!("{} is not a module over {}", src.full_label(), hom.src().label())),
        }
        match dst.base() {
            BaseRing::Finite(r) if r.same_as(hom.dst()) => {}
            _ => return Err(input_err!("{} is not a module over {}", dst.full_label(), hom.dst().label())),
        }
        if map.len() != src.order() || map.iter().any(|&y| y >= dst.order()) {
            return Err(input_err!("module map must list one image in {} per element of {}", dst.label(), src.label()));
        }
        for a in src.elements() {
            for b in src.elements() {
                if map[src.add(a, b)] != dst.add(map[a], map[b]) {
                    return Err(input_err!("module map is not additive at ({a},{b})"));
                }
            }
        }
        for r in src.scalars() {
            for m in src.elements() {
                if map[src.act(r, m)] != dst.act(hom.apply(r), map[m]) {
                    return Err(input_err!(
                        "module map is not semilinear: phi({}·{}) != f({})·phi({})",
                        src.describe_scalar(r),
                        src.describe(m),
                        src.describe_scalar(r),
                        src.describe(m)
                    ));
                }
            }
        }
        let recipe = format!("phi({},{},{},{})", hom.recipe(), src.recipe(), dst.recipe(), list_recipe(&map));
        Ok(Arc::new(SemilinearMap { hom: hom.clone(), src: src.clone(), dst: dst.clone(), map, recipe }))
    }

    /// `m ↦ c·m` between cyclic modules.
    pub fn scaling(hom: &Arc<RingHom>, src: &Module, dst: &Module, c: usize) -> Result<Arc<SemilinearMap>> {
        let one_img = dst.act(c % dst.scalar_count(), dst_one(dst)?);
        let map = src.elements().map(|m| dst.act(m % dst.scalar_count(), one_img)).collect();
        Self::new(hom, src, dst, map)
    }

    pub fn hom(&self) -> &Arc<RingHom> {
        &self.hom
    }

    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn dst(&self) -> &Module {
        &self.dst
    }

    #[inline]
    pub fn apply(&self, m: usize) -> usize {
        self.map[m]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn is_injective(&self) -> bool {
        self.src.elements().all(|m| m == 0 || self.map[m] != 0)
    }

    pub fn is_surjective(&self) -> bool {
        ElemSet::from_iter(self.dst.order(), self.map.iter().copied()).is_full()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

fn dst_one(m: &Module) -> Result<usize> {
    match m.construction() {
        ModuleConstruction::Cyclic(k) => Ok(1 % k),
        ModuleConstruction::Regular => Ok(m.scalar_one()),
        _ => Err(input_err!("scaling maps need cyclic modules")),
    }
}

impl fmt::Debug for SemilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemilinearMap({} -> {})", self.src.label(), self.dst.label())
    }
}

// ---- idealization ----

/// `R(+)M` with `(r₁,m₁)(r₂,m₂) = (r₁r₂, r₁m₂ + r₂m₁)`; ids are `r·|M| + m`.
pub fn idealization(base: &Ring, module: &Module) -> Result<Ring> {
    match module.base() {
        BaseRing::Finite(r) if r.same_as(base) => {}
        _ => return Err(input_err!("{} is not a module over {}", module.full_label(), base.label())),
    }
    let w = module.order();
    let (ra, ma, rm, mm, rn, mn) = (base.clone(), module.clone(), base.clone(), module.clone(), base.clone(), module.clone());
    FiniteRing::tabulate(
        base.order() * w,
        move |x, y| ra.add(x / w, y / w) * w + ma.add(x % w, y % w),
        move |x, y| {
            let (r1, m1, r2, m2) = (x / w, x % w, y / w, y % w);
            rm.mul(r1, r2) * w + mm.add(mm.act(r1, m2), mm.act(r2, m1))
        },
        move |x| rn.neg(x / w) * w + mn.neg(x % w),
        base.one() * w,
        RingConstruction::Idealization { ring: base.clone(), module: module.clone() },
        format!("ideal({},{})", base.recipe(), module.recipe()),
        format!("{}(+){}", base.paren_label(), module.label()),
    )
}

/// Splits an idealization ring into its base ring and module.
pub fn idealization_parts(ring: &Ring) -> Option<(&Ring, &Module)> {
    match ring.construction() {
        RingConstruction::Idealization { ring, module } => Some((ring, module)),
        _ => None,
    }
}

/// `I(+)N` as an ideal of `R(+)M`; legal exactly when `IM ⊆ N`.
pub fn embed_ideal(ring: &Ring, i: &Ideal, n: &Submodule) -> Result<Ideal> {
    let Some((base, module)) = idealization_parts(ring) else {
        return Err(input_err!("{} is not an idealization", ring.label()));
    };
    base.check_owns(i)?;
    if n.module_key() != module.key() {
        return Err(input_err!("submodule does not belong to {}", module.full_label()));
    }
    let whole = ElemSet::full(module.order());
    let im = module.scalars_times_set(i.members(), &whole);
    if !im.is_subset(n.members()) {
        return Err(input_err!("IM ⊄ N for idealization ideal {}(+){}", base.ideal_label(i), module.submodule_label(n)));
    }
    let w = module.order();
    let members = ElemSet::from_iter(ring.order(), i.members().iter().flat_map(|r| n.members().iter().map(move |m| r * w + m)));
    ring.ideal_from_members(members)
}

// ---- duplication ----

/// `R ⋈ J = {(r, r + j)}` inside `R × R`.
pub fn duplication_ring(base: &Ring, ideal: &Ideal) -> Result<Ring> {
    base.check_owns(ideal)?;
    let n = base.order();
    let mut pairs = BTreeSet::new();
    for r in base.elements() {
        for j in ideal.members().iter() {
            pairs.insert((r, base.add(r, j)));
        }
    }
    let table = PairTable::new(pairs, n, n);
    pair_ring(
        base,
        base,
        table,
        |pairs| RingConstruction::Duplication { ring: base.clone(), ideal: ideal.clone(), pairs },
        format!("dup({},{})", base.recipe(), set_recipe(ideal.members())),
        format!("{} dup {}", base.paren_label(), base.ideal_label(ideal)),
    )
}

fn pair_ring(
    left: &Ring,
    right: &Ring,
    table: PairTable,
    construction: impl FnOnce(PairTable) -> RingConstruction,
    recipe: String,
    label: String,
) -> Result<Ring> {
    let pairs: Vec<(usize, usize)> = table.pairs().to_vec();
    let w = right.order();
    let mut index = alloc::vec![u32::MAX; left.order() * w];
    for (id, &(a, b)) in pairs.iter().enumerate() {
        index[a * w + b] = id as u32;
    }
    let enc = move |a: usize, b: usize| -> usize {
        let i = index[a * w + b];
        assert!(i != u32::MAX, "pair ring not closed");
        i as usize
    };
    let enc = Arc::new(enc);
    let (e1, e2, e3) = (enc.clone(), enc.clone(), enc.clone());
    let (p1, p2, p3) = (pairs.clone(), pairs.clone(), pairs.clone());
    let (l1, r1, l2, r2, l3, r3) = (left.clone(), right.clone(), left.clone(), right.clone(), left.clone(), right.clone());
    let one = enc(left.one(), right.one());
    let order = pairs.len();
    let zero = enc(0, 0);
    debug_assert_eq!(zero, 0);
    FiniteRing::tabulate(
        order,
        move |x, y| {
            let ((a, b), (c, d)) = (p1[x], p1[y]);
            e1(l1.add(a, c), r1.add(b, d))
        },
        move |x, y| {
            let ((a, b), (c, d)) = (p2[x], p2[y]);
            e2(l2.mul(a, c), r2.mul(b, d))
        },
        move |x| {
            let (a, b) = p3[x];
            e3(l3.neg(a), r3.neg(b))
        },
        one,
        construction(table),
        recipe,
        label,
    )
}

/// `JM` as a member set.
fn ideal_times_module(module: &Module, ideal: &Ideal) -> ElemSet {
    module.scalars_times_set(ideal.members(), &ElemSet::full(module.order()))
}

/// The pieces of a duplication `M ⋈ J` over `R ⋈ J`.
pub struct Duplication {
    pub base: Ring,
    pub ideal: Ideal,
    pub module: Module,
    pub ring: Ring,
    pub dup: Module,
    jm: ElemSet,
}

impl Duplication {
    pub fn new(module: &Module, ideal: &Ideal) -> Result<Duplication> {
        let Some(base) = module.base_ring().cloned() else {
            return Err(input_err!("duplication needs a module over a finite ring"));
        };
        base.check_owns(ideal).map_err(|_| input_err!("ideal is not an ideal of the base ring {} of {}", base.label(), module.label()))?;
        let ring = duplication_ring(&base, ideal)?;
        let jm = ideal_times_module(module, ideal);
        let n = module.order();
        let mut pairs = BTreeSet::new();
        for m in module.elements() {
            for x in jm.iter() {
                // m - m' = x
                pairs.insert((m, module.sub(m, x)));
            }
        }
        let table = PairTable::new(pairs, n, n);
        let dup = pair_module(
            &ring,
            module,
            module,
            &table,
            |s| match ring.construction() {
                RingConstruction::Duplication { pairs, .. } => pairs.decode(s),
                _ => unreachable!(),
            },
            ModuleConstruction::Duplication { module: module.clone(), ideal: ideal.clone(), pairs: table.clone_table() },
            format!("mdup({},{})", module.recipe(), set_recipe(ideal.members())),
            format!("{} dup {}", module.label(), base.ideal_label(ideal)),
        )?;
        Ok(Duplication { base, ideal: ideal.clone(), module: module.clone(), ring, dup, jm })
    }

    fn table(&self) -> &PairTable {
        match self.dup.construction() {
            ModuleConstruction::Duplication { pairs, .. } => pairs,
            _ => unreachable!(),
        }
    }

    /// Id of `(r, s)` in `R ⋈ J`.
    pub fn ring_elem(&self, r: usize, s: usize) -> Option<usize> {
        match self.ring.construction() {
            RingConstruction::Duplication { pairs, .. } => pairs.encode(r, s),
            _ => unreachable!(),
        }
    }

    pub fn module_elem(&self, m: usize, m2: usize) -> Option<usize> {
        self.table().encode(m, m2)
    }

    pub fn jm(&self) -> &ElemSet {
        &self.jm
    }

    /// `N ⋈ J = {(n, m) : n ∈ N, n − m ∈ JM}`.
    pub fn n_join(&self, n: &Submodule) -> Result<Submodule> {
        self.module.check_owns(n)?;
        let t = self.table();
        let members = ElemSet::from_predicate(self.dup.order(), |x| n.contains(t.decode(x).0));
        self.dup.submodule_from_members(members)
    }

    /// `N̄ = {(m, n) : n ∈ N, m − n ∈ JM}`.
    pub fn n_bar(&self, n: &Submodule) -> Result<Submodule> {
        self.module.check_owns(n)?;
        let t = self.table();
        let members = ElemSet::from_predicate(self.dup.order(), |x| n.contains(t.decode(x).1));
        self.dup.submodule_from_members(members)
    }

    /// `{(r, r + j) : r ∈ Ann(M), j ∈ Ann(M) ∩ J}` as ring ids.
    pub fn ann_formula(&self) -> ElemSet {
        let ann = self.module.ann_scalars();
        let aj = ann.intersection(self.ideal.members());
        let mut out = ElemSet::empty(self.ring.order());
        for r in ann.iter() {
            for j in aj.iter() {
                out.insert(self.ring_elem(r, self.base.add(r, j)).expect("pair lies in the duplication"));
            }
        }
        out
    }
}

impl PairTable {
    pub(crate) fn clone_table(&self) -> PairTable {
        let (h, w) = self.dims();
        PairTable::new(self.pairs().iter().copied().collect(), h, w)
    }
}

#[allow(clippy::too_many_arguments)]
fn pair_module(
    ring: &Ring,
    left: &Module,
    right: &Module,
    table: &PairTable,
    decode_scalar: impl Fn(usize) -> (usize, usize),
    construction: ModuleConstruction,
    recipe: String,
    label: String,
) -> Result<Module> {
    let pairs: Vec<(usize, usize)> = table.pairs().to_vec();
    let enc = |a: usize, b: usize| -> usize { table.encode(a, b).expect("pair module not closed") };
    let order = pairs.len();
    let mut add = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let ((a, b), (c, d)) = (pairs[x], pairs[y]);
            add.push(enc(left.add(a, c), right.add(b, d)));
        }
    }
    let neg: Vec<usize> = pairs.iter().map(|&(a, b)| enc(left.neg(a), right.neg(b))).collect();
    let scal: Vec<(usize, usize)> = ring.elements().map(decode_scalar).collect();
    let mut act = Vec::with_capacity(ring.order() * order);
    for &(r, s) in &scal {
        for &(a, b) in &pairs {
            act.push(enc(left.act(r, a), right.act(s, b)));
        }
    }
    FiniteModule::tabulate(
        BaseRing::Finite(ring.clone()),
        order,
        |x, y| add[x * order + y],
        |x| neg[x],
        Some(&|s, x| act[s * order + x]),
        construction,
        recipe,
        label,
    )
}

// ---- amalgamation ----

/// `R₁ ⋈^f J = {(r, f(r) + j)}` inside `R₁ × R₂`.
pub fn amalgam_ring(hom: &Arc<RingHom>, ideal: &Ideal) -> Result<Ring> {
    let (r1, r2) = (hom.src(), hom.dst());
    r2.check_owns(ideal)?;
    let mut pairs = BTreeSet::new();
    for r in r1.elements() {
        for j in ideal.members().iter() {
            pairs.insert((r, r2.add(hom.apply(r), j)));
        }
    }
    let table = PairTable::new(pairs, r1.order(), r2.order());
    pair_ring(
        r1,
        r2,
        table,
        |pairs| RingConstruction::Amalgam { hom: hom.clone(), ideal: ideal.clone(), pairs },
        format!("amal({},{})", hom.recipe(), set_recipe(ideal.members())),
        format!("{} amal({}) {}", r1.paren_label(), r2.label(), r2.ideal_label(ideal)),
    )
}

/// The pieces of `M₁ ⋈^φ JM₂` over `R₁ ⋈^f J`.
pub struct Amalgam {
    pub hom: Arc<RingHom>,
    pub ideal: Ideal,
    pub phi: Arc<SemilinearMap>,
    pub ring: Ring,
    pub module: Module,
    jm2: ElemSet,
}

impl Amalgam {
    pub fn new(phi: &Arc<SemilinearMap>, ideal: &Ideal) -> Result<Amalgam> {
        let hom = phi.hom().clone();
        let (m1, m2) = (phi.src(), phi.dst());
        hom.dst().check_owns(ideal).map_err(|_| input_err!("ideal is not an ideal of {}", hom.dst().label()))?;
        let ring = amalgam_ring(&hom, ideal)?;
        let jm2 = ideal_times_module(m2, ideal);
        let mut pairs = BTreeSet::new();
        for a in m1.elements() {
            for x in jm2.iter() {
                pairs.insert((a, m2.add(phi.apply(a), x)));
            }
        }
        let table = PairTable::new(pairs, m1.order(), m2.order());
        let module = pair_module(
            &ring,
            m1,
            m2,
            &table,
            |s| match ring.construction() {
                RingConstruction::Amalgam { pairs, .. } => pairs.decode(s),
                _ => unreachable!(),
            },
            ModuleConstruction::Amalgam {
                m1: m1.clone(),
                m2: m2.clone(),
                hom: hom.clone(),
                phi: phi.clone(),
                ideal: ideal.clone(),
                pairs: table.clone_table(),
            },
            format!("mamal({},{})", phi.recipe(), set_recipe(ideal.members())),
            format!("{} amal({}) {}", m1.label(), m2.label(), hom.dst().ideal_label(ideal)),
        )?;
        Ok(Amalgam { hom, ideal: ideal.clone(), phi: phi.clone(), ring, module, jm2 })
    }

    fn table(&self) -> &PairTable {
        match self.module.construction() {
            ModuleConstruction::Amalgam { pairs, .. } => pairs,
            _ => unreachable!(),
        }
    }

    pub fn m1(&self) -> &Module {
        self.phi.src()
    }

    pub fn m2(&self) -> &Module {
        self.phi.dst()
    }

    pub fn ring_elem(&self, r: usize, s: usize) -> Option<usize> {
        match self.ring.construction() {
            RingConstruction::Amalgam { pairs, .. } => pairs.encode(r, s),
            _ => unreachable!(),
        }
    }

    pub fn ring_pair(&self, x: usize) -> (usize, usize) {
        match self.ring.construction() {
            RingConstruction::Amalgam { pairs, .. } => pairs.decode(x),
            _ => unreachable!(),
        }
    }

    pub fn module_pair(&self, x: usize) -> (usize, usize) {
        self.table().decode(x)
    }

    pub fn jm2(&self) -> &ElemSet {
        &self.jm2
    }

    pub fn jm2_is_zero(&self) -> bool {
        self.jm2.count() == 1
    }

    pub fn j_in_nilradical(&self) -> bool {
        self.ideal.members().is_subset(self.hom.dst().nilradical_set())
    }

    /// `N₁ ⋈^φ JM₂ = {(m₁, φ(m₁) + m₂) : m₁ ∈ N₁}`.
    pub fn n1_join(&self, n1: &Submodule) -> Result<Submodule> {
        self.m1().check_owns(n1)?;
        let t = self.table();
        self.module.submodule_from_members(ElemSet::from_predicate(self.module.order(), |x| n1.contains(t.decode(x).0)))
    }

    /// `overline(N₂)^φ = {(m₁, φ(m₁) + m₂) : φ(m₁) + m₂ ∈ N₂}`.
    pub fn n2_bar(&self, n2: &Submodule) -> Result<Submodule> {
        self.m2().check_owns(n2)?;
        let t = self.table();
        self.module.submodule_from_members(ElemSet::from_predicate(self.module.order(), |x| n2.contains(t.decode(x).1)))
    }

    /// `√0_{R₁} ⋈^f J` as ring ids.
    pub fn nilradical_formula(&self) -> ElemSet {
        let (r1, r2) = (self.hom.src(), self.hom.dst());
        let mut out = ElemSet::empty(self.ring.order());
        for r in r1.nilradical_set().iter() {
            for j in self.ideal.members().iter() {
                out.insert(self.ring_elem(r, r2.add(self.hom.apply(r), j)).expect("pair lies in the amalgam"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idealization_z12_z4() {
        let z12 = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::cyclic(4, &BaseRing::Finite(z12.clone())).unwrap();
        let a = idealization(&z12, &m).unwrap();
        assert_eq!(a.order(), 48);
        assert_eq!(a.nilradical_set().count(), 8);
        a.verify_axioms().unwrap();
        let ok = embed_ideal(&a, &z12.ideal(&[2]).unwrap(), &m.submodule(&[2]).unwrap()).unwrap();
        assert_eq!(ok.order(), 6 * 2);
        assert!(embed_ideal(&a, &z12.ideal(&[1]).unwrap(), &m.submodule(&[2]).unwrap()).is_err());
    }

    #[test]
    fn duplication_z8() {
        let z8 = FiniteRing::zn(8).unwrap();
        let m = FiniteModule::regular(&z8).unwrap();
        let d = Duplication::new(&m, &z8.ideal(&[4]).unwrap()).unwrap();
        assert_eq!(d.ring.order(), 16);
        assert_eq!(d.dup.order(), 16);
        d.ring.verify_axioms().unwrap();
        d.dup.verify_axioms().unwrap();
        let zero = d.n_join(&m.zero_submodule()).unwrap();
        assert_eq!(zero.order(), 2);
    }

    #[test]
    fn amalgam_z8_z4() {
        let z8 = FiniteRing::zn(8).unwrap();
        let z4 = FiniteRing::zn(4).unwrap();
        let f = RingHom::reduction(&z8, &z4).unwrap();
        let m1 = FiniteModule::cyclic(8, &BaseRing::Finite(z8.clone())).unwrap();
        let m2 = FiniteModule::cyclic(2, &BaseRing::Finite(z4.clone())).unwrap();
        let phi = SemilinearMap::scaling(&f, &m1, &m2, 1).unwrap();
        let a = Amalgam::new(&phi, &z4.ideal(&[2]).unwrap()).unwrap();
        assert_eq!(a.module.order(), 8);
        assert!(a.jm2_is_zero());
        a.ring.verify_axioms().unwrap();
        a.module.verify_axioms().unwrap();
        assert!(RingHom::reduction(&z4, &z8).is_err());
    }
}
