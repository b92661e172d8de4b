//! The deterministic instance catalog the theorem suite scans.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{divisors, gcd};
use crate::caps::{Caps, Preset};
use crate::construct::{idealization, Amalgam, Duplication, RingHom, SemilinearMap};
use crate::error::Result;
use crate::module::{FiniteModule, Module, ModuleHom};
use crate::ring::{FiniteRing, Ring};
use crate::scalars::BaseRing;

pub struct RingEntry {
    pub ring: Ring,
    /// The zero ring: kept for completeness, skipped by every check.
    pub degenerate: bool,
}

pub struct ProductEntry {
    pub left: Module,
    pub right: Module,
    pub product: Module,
}

pub struct IdealizationEntry {
    pub base: Ring,
    pub module: Module,
    pub ring: Ring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    Projection,
    Automorphism,
    ProductProjection,
    Crt,
}

pub struct HomEntry {
    pub hom: ModuleHom,
    pub kind: HomKind,
}

/// Bounds that differ between presets.
#[derive(Debug, Clone, Copy)]
struct Plan {
    zn_max: usize,
    int_cyclic_max: usize,
    int_product_max: usize,
    zn_module_max: usize,
    zn_product_max: usize,
    ring_product_max: usize,
    idealization_max: usize,
    dup_max: usize,
    amalgam_max: usize,
    amalgam_module_max: usize,
    hom_source_max: usize,
}

impl Plan {
    fn for_preset(p: Preset) -> Plan {
        match p {
            Preset::Minimal => Plan {
                zn_max: 12,
                int_cyclic_max: 24,
                int_product_max: 4,
                zn_module_max: 12,
                zn_product_max: 6,
                ring_product_max: 4,
                idealization_max: 32,
                dup_max: 8,
                amalgam_max: 8,
                amalgam_module_max: 32,
                hom_source_max: 12,
            },
            Preset::Standard => Plan {
                zn_max: 36,
                int_cyclic_max: 60,
                int_product_max: 8,
                zn_module_max: 36,
                zn_product_max: 12,
                ring_product_max: 6,
                idealization_max: 72,
                dup_max: 12,
                amalgam_max: 12,
                amalgam_module_max: 64,
                hom_source_max: 24,
            },
            Preset::Large => Plan {
                zn_max: 48,
                int_cyclic_max: 64,
                int_product_max: 10,
                zn_module_max: 48,
                zn_product_max: 16,
                ring_product_max: 8,
                idealization_max: 128,
                dup_max: 16,
                amalgam_max: 16,
                amalgam_module_max: 128,
                hom_source_max: 36,
            },
        }
    }
}

pub struct Catalog {
    pub caps: Caps,
    pub rings: Vec<RingEntry>,
    /// Every nonzero module the per-submodule checks scan, in catalog order.
    pub modules: Vec<Module>,
    pub products: Vec<ProductEntry>,
    pub idealizations: Vec<IdealizationEntry>,
    pub duplications: Vec<Duplication>,
    pub amalgams: Vec<Amalgam>,
    pub homs: Vec<HomEntry>,
}

struct Builder {
    caps: Caps,
    rings: Vec<RingEntry>,
    ring_keys: BTreeSet<String>,
    modules: Vec<Module>,
    module_keys: BTreeSet<String>,
}

impl Builder {
    fn add_ring(&mut self, ring: &Ring) {
        if ring.order() <= self.caps.ring_order && self.ring_keys.insert(String::from(ring.recipe())) {
            self.rings.push(RingEntry { ring: ring.clone(), degenerate: ring.is_zero_ring() });
        }
    }

    fn add_module(&mut self, m: &Module) {
        if !m.is_zero_module() && m.order() <= self.caps.module_order && self.module_keys.insert(String::from(m.recipe())) {
            self.modules.push(m.clone());
        }
    }
}

impl Catalog {
    pub fn default_catalog(caps: &Caps) -> Result<Catalog> {
        caps.validate()?;
        let plan = Plan::for_preset(caps.preset);
        let mut b =
            Builder { caps: *caps, rings: Vec::new(), ring_keys: BTreeSet::new(), modules: Vec::new(), module_keys: BTreeSet::new() };
        let z = BaseRing::Integers;

        let zn: Vec<Ring> = (1..=plan.zn_max).map(FiniteRing::zn).collect::<Result<_>>()?;
        for r in &zn {
            b.add_ring(r);
        }
        let zring = |n: usize| zn[n - 1].clone();

        // ℤ-modules
        let mut int_cyclic = Vec::new();
        for k in 2..=plan.int_cyclic_max {
            let m = FiniteModule::cyclic(k, &z)?;
            b.add_module(&m);
            int_cyclic.push(m);
        }
        let int_cyc = |k: usize| int_cyclic[k - 2].clone();
        let mut products = Vec::new();
        for a in 2..=plan.int_product_max {
            for c in a..=plan.int_product_max {
                let p = FiniteModule::product(&int_cyc(a), &int_cyc(c))?;
                b.add_module(&p);
                products.push(ProductEntry { left: int_cyc(a), right: int_cyc(c), product: p });
            }
        }

        // ℤ_n-modules
        for n in 2..=plan.zn_module_max {
            let r = zring(n);
            for k in divisors(n as u64).into_iter().map(|d| d as usize).filter(|&k| k > 1 && k < n) {
                b.add_module(&FiniteModule::cyclic(k, &BaseRing::Finite(r.clone()))?);
            }
            b.add_module(&FiniteModule::regular(&r)?);
        }
        for n in 2..=plan.zn_product_max {
            let base = BaseRing::Finite(zring(n));
            let ds: Vec<usize> = divisors(n as u64).into_iter().map(|d| d as usize).filter(|&k| k > 1).collect();
            for (i, &a) in ds.iter().enumerate() {
                for &c in &ds[i..] {
                    let left = if a == n { FiniteModule::regular(&zring(n))? } else { FiniteModule::cyclic(a, &base)? };
                    let right = if c == n { FiniteModule::regular(&zring(n))? } else { FiniteModule::cyclic(c, &base)? };
                    if left.order() * right.order() > caps.module_order {
                        continue;
                    }
                    let p = FiniteModule::product(&left, &right)?;
                    b.add_module(&p);
                    products.push(ProductEntry { left, right, product: p });
                }
            }
        }

        // product and quotient rings
        for a in 2..=plan.ring_product_max {
            for c in a..=plan.ring_product_max {
                b.add_ring(&FiniteRing::product(&zring(a), &zring(c))?);
            }
        }
        let z4 = zring(4);
        let z4sq = FiniteRing::product(&z4, &z4)?;
        let diag = z4sq.ideal(&[2 * 4 + 2])?;
        b.add_ring(&FiniteRing::quotient(&z4sq, &diag)?);

        // idealizations ℤ_n(+)ℤ_k
        let mut idealizations = Vec::new();
        for n in 2..=plan.zn_max {
            for k in divisors(n as u64).into_iter().map(|d| d as usize).filter(|&k| k > 1) {
                if n * k > plan.idealization_max {
                    continue;
                }
                let base = zring(n);
                let module = FiniteModule::cyclic(k, &BaseRing::Finite(base.clone()))?;
                let ring = idealization(&base, &module)?;
                b.add_ring(&ring);
                idealizations.push(IdealizationEntry { base, module, ring });
            }
        }

        // duplications of ℤ_n-modules ℤ_k along every ideal
        let mut duplications = Vec::new();
        for n in 2..=plan.dup_max {
            let r = zring(n);
            for k in divisors(n as u64).into_iter().map(|d| d as usize).filter(|&k| k > 1) {
                let m = if k == n { FiniteModule::regular(&r)? } else { FiniteModule::cyclic(k, &BaseRing::Finite(r.clone()))? };
                for j in r.ideals()? {
                    let d = Duplication::new(&m, j)?;
                    if d.dup.order() > caps.module_order || d.ring.order() > caps.ring_order {
                        continue;
                    }
                    b.add_ring(&d.ring);
                    duplications.push(d);
                }
            }
        }

        // amalgams along f: ℤ_a → ℤ_c (reduction or identity) and φ = g·x or 0
        let mut amalgams = Vec::new();
        for a in 2..=plan.amalgam_max {
            let r1 = zring(a);
            for c in divisors(a as u64).into_iter().map(|d| d as usize).filter(|&c| c > 1) {
                let r2 = zring(c);
                let f = if c == a { RingHom::identity(&r1) } else { RingHom::reduction(&r1, &r2)? };
                for k1 in divisors(a as u64).into_iter().map(|d| d as usize).filter(|&k| k > 1) {
                    let m1 = FiniteModule::cyclic(k1, &BaseRing::Finite(r1.clone()))?;
                    for k2 in divisors(c as u64).into_iter().map(|d| d as usize).filter(|&k| k > 1) {
                        let m2 = FiniteModule::cyclic(k2, &BaseRing::Finite(r2.clone()))?;
                        let g0 = k2 / gcd(k1 as u64, k2 as u64) as usize;
                        let mut scalings = alloc::vec![g0 % k2];
                        if !g0.is_multiple_of(k2) {
                            scalings.push(0);
                        }
                        for cscale in scalings {
                            let phi = SemilinearMap::scaling(&f, &m1, &m2, cscale)?;
                            for j in r2.ideals()? {
                                let jm2 = m2.scalars_times_set(j.members(), &crate::elemset::ElemSet::full(k2)).count();
                                let order = k1 * jm2;
                                if order > plan.amalgam_module_max || a * j.order() > caps.ring_order {
                                    continue;
                                }
                                let am = Amalgam::new(&phi, j)?;
                                b.add_ring(&am.ring);
                                amalgams.push(am);
                            }
                        }
                    }
                }
            }
        }

        // regular modules of the non-cyclic rings, then construction modules
        let extra: Vec<Ring> = b.rings.iter().filter(|e| !e.degenerate && e.ring.as_zn().is_none()).map(|e| e.ring.clone()).collect();
        for r in &extra {
            b.add_module(&FiniteModule::regular(r)?);
        }
        for d in &duplications {
            b.add_module(&d.dup);
        }
        for am in &amalgams {
            b.add_module(&am.module);
        }

        let homs = build_homs(&b.modules, &products, &plan)?;

        Ok(Catalog { caps: *caps, rings: b.rings, modules: b.modules, products, idealizations, duplications, amalgams, homs })
    }

    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        self.rings.iter().filter(|e| !e.degenerate).map(|e| &e.ring)
    }

    /// Short human summary, one line per family.
    pub fn summary(&self) -> Vec<String> {
        let degenerate = self.rings.iter().filter(|e| e.degenerate).count();
        let subs: usize = self.modules.iter().map(|m| m.submodules().map(|s| s.len()).unwrap_or(0)).sum();
        alloc::vec![
            format!("preset: {}", self.caps.preset),
            format!("rings: {} ({} degenerate)", self.rings.len(), degenerate),
            format!("modules: {} ({} submodules)", self.modules.len(), subs),
            format!("products: {}", self.products.len()),
            format!("idealizations: {}", self.idealizations.len()),
            format!("duplications: {}", self.duplications.len()),
            format!("amalgams: {}", self.amalgams.len()),
            format!("homomorphisms: {}", self.homs.len()),
        ]
    }
}

fn build_homs(modules: &[Module], products: &[ProductEntry], plan: &Plan) -> Result<Vec<HomEntry>> {
    let mut homs = Vec::new();
    for m in modules.iter().filter(|m| m.order() <= plan.hom_source_max) {
        for l in m.submodules()? {
            let (_, proj) = FiniteModule::quotient(m, l)?;
            homs.push(HomEntry { hom: proj, kind: HomKind::Projection });
        }
        // m ↦ u·m for a scalar u acting bijectively
        if let Some(u) = m.scalars().skip(2).find(|&u| m.injective_scalars().contains(u) && m.elements().any(|x| m.act(u, x) != x)) {
            let map = m.elements().map(|x| m.act(u, x)).collect();
            homs.push(HomEntry { hom: ModuleHom::from_map(m, m, map)?, kind: HomKind::Automorphism });
        }
    }
    for p in products.iter().filter(|p| p.product.order() <= plan.hom_source_max * 2) {
        let w = p.right.order();
        let map = p.product.elements().map(|x| x / w).collect();
        homs.push(HomEntry { hom: ModuleHom::from_map(&p.product, &p.left, map)?, kind: HomKind::ProductProjection });
        // ℤ_ab ≅ ℤ_a × ℤ_b over ℤ when gcd(a, b) = 1
        let (a, c) = (p.left.order(), p.right.order());
        if p.product.is_over_integers() && gcd(a as u64, c as u64) == 1 {
            if let Some(src) = modules.iter().find(|m| m.recipe() == format!("cyc({},int)", a * c)) {
                let map = src.elements().map(|x| (x % a) * c + x % c).collect();
                homs.push(HomEntry { hom: ModuleHom::from_map(src, &p.product, map)?, kind: HomKind::Crt });
            }
        }
    }
    Ok(homs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_catalog_builds() {
        let c = Catalog::default_catalog(&Caps::preset(Preset::Minimal)).unwrap();
        assert!(c.rings.iter().any(|e| e.degenerate && e.ring.order() == 1));
        assert!(c.modules.iter().all(|m| !m.is_zero_module()));
        assert!(!c.amalgams.is_empty() && !c.duplications.is_empty() && !c.idealizations.is_empty());
        assert!(c.homs.iter().any(|h| h.kind == HomKind::Crt));
    }
}
