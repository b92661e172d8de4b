//! Prints rings, modules and their sub-objects as workspace text, so that
//! every witness can be parsed back and re-evaluated.
//!
//! Element ids in `gen` lines are the dense ids of the materialized object;
//! materialization is deterministic, so the ids replay exactly.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::classify::{Flag, Verdict};
use crate::construct::{RingHom, SemilinearMap};
use crate::elemset::ElemSet;
use crate::error::{input_err, Result};
use crate::module::{FiniteModule, ModuleConstruction};
use crate::ring::{FiniteRing, RingConstruction};
use crate::scalars::BaseRing;

/// Verdict keyword used by `expect` lines.
pub fn verdict_word(v: &Verdict) -> &'static str {
    match v {
        Verdict::Holds => "true",
        Verdict::Fails(_) => "false",
        Verdict::NotApplicable => "na",
    }
}

/// Accumulates declarations, naming each distinct object once.
#[derive(Default)]
pub struct SpecWriter {
    lines: Vec<String>,
    names: BTreeMap<String, String>,
    counters: BTreeMap<&'static str, usize>,
}

impl SpecWriter {
    pub fn new() -> Self {
        Self::default()
    }

    fn fresh(&mut self, prefix: &'static str) -> String {
        let c = self.counters.entry(prefix).or_insert(0);
        *c += 1;
        format!("{prefix}{c}")
    }

    fn declare(&mut self, key: String, prefix: &'static str, body: impl FnOnce(&str) -> String) -> String {
        if let Some(n) = self.names.get(&key) {
            return n.clone();
        }
        let name = self.fresh(prefix);
        let line = body(&name);
        self.lines.push(line);
        self.names.insert(key, name.clone());
        name
    }

    pub fn comment(&mut self, text: &str) {
        for l in text.lines() {
            self.lines.push(format!("# {l}"));
        }
    }

    pub fn ring(&mut self, r: &FiniteRing) -> Result<String> {
        if let Some(n) = self.names.get(r.recipe()) {
            return Ok(n.clone());
        }
        let rhs = match r.construction() {
            RingConstruction::Zn(n) => format!("zn {n}"),
            RingConstruction::Product(a, b) => format!("product {} {}", self.ring(a)?, self.ring(b)?),
            RingConstruction::Quotient { parent, ideal, .. } => {
                let p = self.ring(parent)?;
                let i = self.ideal(parent, ideal.members())?;
                format!("quotient {p} {i}")
            }
            RingConstruction::Idealization { ring, module } => format!("idealization {} {}", self.ring(ring)?, self.module(module)?),
            RingConstruction::Duplication { ring, ideal, .. } => {
                let p = self.ring(ring)?;
                let i = self.ideal(ring, ideal.members())?;
                format!("dup-ring {p} {i}")
            }
            RingConstruction::Amalgam { hom, ideal, .. } => {
                let a = self.ring(hom.src())?;
                let b = self.ring(hom.dst())?;
                let f = self.ring_hom(hom)?;
                let i = self.ideal(hom.dst(), ideal.members())?;
                format!("amalgam {a} {b} {f} {i}")
            }
        };
        Ok(self.declare(r.recipe().to_string(), "R", |n| format!("ring {n} = {rhs}")))
    }

    fn base(&mut self, b: &BaseRing) -> Result<String> {
        match b {
            BaseRing::Integers => Ok(String::from("Z")),
            BaseRing::Finite(r) => self.ring(r),
        }
    }

    pub fn module(&mut self, m: &FiniteModule) -> Result<String> {
        if let Some(n) = self.names.get(m.recipe()) {
            return Ok(n.clone());
        }
        let rhs = match m.construction() {
            ModuleConstruction::Cyclic(k) => format!("cyclic {k} over {}", self.base(m.base())?),
            ModuleConstruction::Regular => format!("regular {}", self.base(m.base())?),
            ModuleConstruction::Product(a, b) => format!("product {} {}", self.module(a)?, self.module(b)?),
            ModuleConstruction::Quotient { parent, sub, .. } => {
                let p = self.module(parent)?;
                let s = self.submodule(parent, sub.members())?;
                format!("quotient {p} {s}")
            }
            ModuleConstruction::Duplication { module, ideal, .. } => {
                let p = self.module(module)?;
                let r = module.base_ring().expect("duplication base is finite");
                let i = self.ideal(r, ideal.members())?;
                format!("dup {p} {i}")
            }
            ModuleConstruction::Amalgam { m1, m2, hom, phi, ideal, .. } => {
                let a = self.module(m1)?;
                let b = self.module(m2)?;
                let f = self.ring_hom(hom)?;
                let p = self.module_map(phi)?;
                let i = self.ideal(hom.dst(), ideal.members())?;
                format!("amalgam-mod {a} {b} {f} {p} {i}")
            }
            ModuleConstruction::Restricted { .. } => {
                return Err(input_err!("restricted-scalar modules have no workspace syntax"));
            }
        };
        Ok(self.declare(m.recipe().to_string(), "M", |n| format!("module {n} = {rhs}")))
    }

    pub fn ring_hom(&mut self, h: &RingHom) -> Result<String> {
        let a = self.ring(h.src())?;
        let b = self.ring(h.dst())?;
        let images = if h.is_reduction() { String::from("reduce") } else { join(h.map()) };
        Ok(self.declare(h.recipe().to_string(), "f", |n| format!("hom {n} = {a} -> {b} : {images}")))
    }

    pub fn module_map(&mut self, phi: &SemilinearMap) -> Result<String> {
        let a = self.module(phi.src())?;
        let b = self.module(phi.dst())?;
        let images = join(phi.map());
        Ok(self.declare(phi.recipe().to_string(), "phi", |n| format!("modhom {n} = {a} -> {b} : {images}")))
    }

    pub fn ideal(&mut self, r: &FiniteRing, members: &ElemSet) -> Result<String> {
        let rn = self.ring(r)?;
        let ideal = r.ideal_from_members(members.clone())?;
        let key = format!("ideal:{}:{}", r.recipe(), crate::ring::set_recipe(members));
        let gens = join(ideal.gens());
        Ok(self.declare(key, "I", |n| format!("ideal {n} = gen {rn} {gens}").trim_end().to_string()))
    }

    /// `dℤ`, written `gen Z d`.
    pub fn integer_ideal(&mut self, d: u64) -> String {
        self.declare(format!("intideal:{d}"), "I", |n| format!("ideal {n} = gen Z {d}"))
    }

    pub fn submodule(&mut self, m: &FiniteModule, members: &ElemSet) -> Result<String> {
        let mn = self.module(m)?;
        let sub = m.submodule_from_members(members.clone())?;
        let key = format!("sub:{}:{}", m.recipe(), crate::ring::set_recipe(members));
        let gens = join(sub.gens());
        Ok(self.declare(key, "N", |n| format!("submodule {n} = gen {mn} {gens}").trim_end().to_string()))
    }

    pub fn expect(&mut self, flag: Flag, target: &str, v: &Verdict) {
        self.lines.push(format!("expect {flag} {target} {}", verdict_word(v)));
    }

    pub fn expect_submodule(&mut self, flag: Flag, m: &FiniteModule, members: &ElemSet, v: &Verdict) -> Result<()> {
        let n = self.submodule(m, members)?;
        self.expect(flag, &n, v);
        Ok(())
    }

    pub fn expect_ideal(&mut self, flag: Flag, r: &FiniteRing, members: &ElemSet, v: &Verdict) -> Result<()> {
        let n = self.ideal(r, members)?;
        self.expect(flag, &n, v);
        Ok(())
    }

    pub fn finish(self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
