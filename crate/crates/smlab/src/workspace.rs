//! Line-oriented workspace files: parsing, printing, materialization and
//! replay of `expect` lines.
//!
//! One declaration per line, `#` starts a comment:
//!
//! ```text
//! option caps standard
//! option seed 7
//! ring R = zn 12
//! module M = cyclic 4 over R
//! ring A = idealization R M
//! ideal I = gen R 2
//! submodule N = gen M 2
//! expect n_sub N true
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use smlab_core::classify::{classify_ideal, integer_ideal_is_semi_n};
use smlab_core::construct::{amalgam_ring, duplication_ring, idealization};
use smlab_core::replay::verdict_word;
use smlab_core::{
    Amalgam, BaseRing, Caps, Classifier, Duplication, FiniteModule, FiniteRing, Flag, Ideal, Module, Preset, Ring, RingHom, SemilinearMap,
    Submodule,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WorkspaceError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: `{name}`: {msg}")]
    Semantic { line: usize, name: String, msg: String },
    #[error("line {line}: `{name}`: capacity error: {msg}")]
    Capacity { line: usize, name: String, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(usize),
    Product(String, String),
    Quotient(String, String),
    Idealization(String, String),
    DupRing(String, String),
    Amalgam { r1: String, r2: String, hom: String, ideal: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleExpr {
    /// `cyclic k over R`; `None` is `ℤ`.
    Cyclic(usize, Option<String>),
    Regular(String),
    Product(String, String),
    Quotient(String, String),
    Dup(String, String),
    Amalgam {
        m1: String,
        m2: String,
        hom: String,
        modhom: String,
        ideal: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Images {
    List(Vec<usize>),
    /// The canonical `ℤ_a → ℤ_b` for `b | a`.
    Reduce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Ring {
        name: String,
        expr: RingExpr,
    },
    Module {
        name: String,
        expr: ModuleExpr,
    },
    /// `gen R e1 e2 ..`.
    Ideal {
        name: String,
        ring: String,
        gens: Vec<usize>,
    },
    /// `gen Z d`: the ideal `dℤ`.
    IntegerIdeal {
        name: String,
        d: u64,
    },
    Submodule {
        name: String,
        module: String,
        gens: Vec<usize>,
    },
    Hom {
        name: String,
        src: String,
        dst: String,
        images: Images,
    },
    ModHom {
        name: String,
        src: String,
        dst: String,
        images: Vec<usize>,
    },
    Expect {
        flag: Flag,
        target: String,
        value: Option<bool>,
    },
}

impl Decl {
    /// The declared name; `expect` lines declare nothing.
    pub fn name(&self) -> Option<&str> {
        match self {
            Decl::Ring { name, .. }
            | Decl::Module { name, .. }
            | Decl::Ideal { name, .. }
            | Decl::IntegerIdeal { name, .. }
            | Decl::Submodule { name, .. }
            | Decl::Hom { name, .. }
            | Decl::ModHom { name, .. } => Some(name),
            Decl::Expect { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub caps: Option<Preset>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default)]
pub struct WorkspaceSpec {
    pub options: Options,
    pub decls: Vec<Decl>,
    /// Source line of each declaration, for error messages.
    lines: Vec<usize>,
}

/// Equality ignores source positions, so a printed spec reparses equal.
impl PartialEq for WorkspaceSpec {
    fn eq(&self, other: &Self) -> bool {
        self.options == other.options && self.decls == other.decls
    }
}

impl Eq for WorkspaceSpec {}

impl WorkspaceSpec {
    pub fn parse(text: &str) -> Result<WorkspaceSpec, WorkspaceError> {
        let mut ws = WorkspaceSpec::default();
        let mut kinds: BTreeMap<String, Kind> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let toks = tokens(content);
            if toks.is_empty() {
                continue;
            }
            let mut p = Parser { line, toks: &toks, pos: 0, end_col: content.chars().count() + 1 };
            let head = p.word()?;
            if head.1 == "option" {
                p.option(&mut ws.options)?;
                continue;
            }
            let decl = p.decl(head)?;
            p.finish()?;
            resolve(&decl, &kinds, line)?;
            if let Some(name) = decl.name() {
                if name == "Z" {
                    return Err(WorkspaceError::Semantic { line, name: name.to_string(), msg: "`Z` is reserved for the integers".into() });
                }
                if kinds.insert(name.to_string(), Kind::of(&decl)).is_some() {
                    return Err(WorkspaceError::Semantic { line, name: name.to_string(), msg: "name declared twice".into() });
                }
            }
            ws.decls.push(decl);
            ws.lines.push(line);
        }
        Ok(ws)
    }

    /// Source line of declaration `i` (its position if built in memory).
    pub fn line_of(&self, i: usize) -> usize {
        self.lines.get(i).copied().unwrap_or(i + 1)
    }

    pub fn caps(&self) -> Caps {
        self.options.caps.map(Caps::preset).unwrap_or_default()
    }
}

impl fmt::Display for WorkspaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.options.caps {
            writeln!(f, "option caps {c}")?;
        }
        if let Some(s) = self.options.seed {
            writeln!(f, "option seed {s}")?;
        }
        for d in &self.decls {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| format!(" {x}")).collect()
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Ring { name, expr } => {
                write!(f, "ring {name} = ")?;
                match expr {
                    RingExpr::Zn(n) => write!(f, "zn {n}"),
                    RingExpr::Product(a, b) => write!(f, "product {a} {b}"),
                    RingExpr::Quotient(a, b) => write!(f, "quotient {a} {b}"),
                    RingExpr::Idealization(a, b) => write!(f, "idealization {a} {b}"),
                    RingExpr::DupRing(a, b) => write!(f, "dup-ring {a} {b}"),
                    RingExpr::Amalgam { r1, r2, hom, ideal } => write!(f, "amalgam {r1} {r2} {hom} {ideal}"),
                }
            }
            Decl::Module { name, expr } => {
                write!(f, "module {name} = ")?;
                match expr {
                    ModuleExpr::Cyclic(k, base) => write!(f, "cyclic {k} over {}", base.as_deref().unwrap_or("Z")),
                    ModuleExpr::Regular(r) => write!(f, "regular {r}"),
                    ModuleExpr::Product(a, b) => write!(f, "product {a} {b}"),
                    ModuleExpr::Quotient(a, b) => write!(f, "quotient {a} {b}"),
                    ModuleExpr::Dup(a, b) => write!(f, "dup {a} {b}"),
                    ModuleExpr::Amalgam { m1, m2, hom, modhom, ideal } => write!(f, "amalgam-mod {m1} {m2} {hom} {modhom} {ideal}"),
                }
            }
            Decl::Ideal { name, ring, gens } => write!(f, "ideal {name} = gen {ring}{}", join(gens)),
            Decl::IntegerIdeal { name, d } => write!(f, "ideal {name} = gen Z {d}"),
            Decl::Submodule { name, module, gens } => write!(f, "submodule {name} = gen {module}{}", join(gens)),
            Decl::Hom { name, src, dst, images } => match images {
                Images::Reduce => write!(f, "hom {name} = {src} -> {dst} : reduce"),
                Images::List(v) => write!(f, "hom {name} = {src} -> {dst} :{}", join(v)),
            },
            Decl::ModHom { name, src, dst, images } => write!(f, "modhom {name} = {src} -> {dst} :{}", join(images)),
            Decl::Expect { flag, target, value } => {
                let v = match value {
                    Some(true) => "true",
                    Some(false) => "false",
                    None => "na",
                };
                write!(f, "expect {flag} {target} {v}")
            }
        }
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (bi, ch)) in s.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, bi)),
            (true, Some((c, b))) => {
                out.push((c, &s[b..bi]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &s[b..]));
    }
    out
}

struct Parser<'a> {
    line: usize,
    toks: &'a [(usize, &'a str)],
    pos: usize,
    end_col: usize,
}

type Tok<'a> = (usize, &'a str);

impl<'a> Parser<'a> {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, WorkspaceError> {
        Err(WorkspaceError::Syntax { line: self.line, col, msg: msg.into() })
    }

    fn word(&mut self) -> Result<Tok<'a>, WorkspaceError> {
        match self.toks.get(self.pos) {
            Some(&t) => {
                self.pos += 1;
                Ok(t)
            }
            None => self.err(self.end_col, "unexpected end of line"),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), WorkspaceError> {
        let t = self.word()?;
        if t.1 == kw {
            Ok(())
        } else {
            self.err(t.0, format!("expected `{kw}`, found `{}`", t.1))
        }
    }

    fn name(&mut self) -> Result<String, WorkspaceError> {
        let t = self.word()?;
        let ok = t.1.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && t.1.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
        if ok {
            Ok(t.1.to_string())
        } else {
            self.err(t.0, format!("`{}` is not a valid name", t.1))
        }
    }

    fn number<T: std::str::FromStr>(&mut self) -> Result<T, WorkspaceError> {
        let t = self.word()?;
        match t.1.parse() {
            Ok(v) => Ok(v),
            Err(_) => self.err(t.0, format!("expected a non-negative integer, found `{}`", t.1)),
        }
    }

    fn numbers(&mut self) -> Result<Vec<usize>, WorkspaceError> {
        let mut v = Vec::new();
        while self.pos < self.toks.len() {
            v.push(self.number()?);
        }
        Ok(v)
    }

    fn finish(&self) -> Result<(), WorkspaceError> {
        match self.toks.get(self.pos) {
            Some(t) => self.err(t.0, format!("unexpected `{}`", t.1)),
            None => Ok(()),
        }
    }

    fn option(&mut self, opts: &mut Options) -> Result<(), WorkspaceError> {
        let key = self.word()?;
        match key.1 {
            "caps" => {
                let t = self.word()?;
                match t.1.parse::<Preset>() {
                    Ok(p) => opts.caps = Some(p),
                    Err(e) => return self.err(t.0, e.to_string()),
                }
            }
            "seed" => opts.seed = Some(self.number()?),
            other => return self.err(key.0, format!("unknown option `{other}` (expected caps or seed)")),
        }
        self.finish()
    }

    fn decl(&mut self, head: Tok<'a>) -> Result<Decl, WorkspaceError> {
        if head.1 == "expect" {
            let t = self.word()?;
            let flag = match t.1.parse::<Flag>() {
                Ok(f) => f,
                Err(e) => return self.err(t.0, e.to_string()),
            };
            let target = self.name()?;
            let v = self.word()?;
            let value = match v.1 {
                "true" => Some(true),
                "false" => Some(false),
                "na" => None,
                other => return self.err(v.0, format!("expected true, false or na, found `{other}`")),
            };
            return Ok(Decl::Expect { flag, target, value });
        }
        if !["ring", "module", "ideal", "submodule", "hom", "modhom"].contains(&head.1) {
            return self.err(head.0, format!("unknown declaration `{}`", head.1));
        }
        let name = self.name()?;
        self.keyword("=")?;
        let decl = match head.1 {
            "ring" => Decl::Ring { name, expr: self.ring_expr()? },
            "module" => Decl::Module { name, expr: self.module_expr()? },
            "ideal" => {
                self.keyword("gen")?;
                let owner = self.name()?;
                if owner == "Z" {
                    Decl::IntegerIdeal { name, d: self.number()? }
                } else {
                    Decl::Ideal { name, ring: owner, gens: self.numbers()? }
                }
            }
            "submodule" => {
                self.keyword("gen")?;
                Decl::Submodule { name, module: self.name()?, gens: self.numbers()? }
            }
            "hom" | "modhom" => {
                let src = self.name()?;
                self.keyword("->")?;
                let dst = self.name()?;
                self.keyword(":")?;
                if head.1 == "hom" {
                    let images = if self.toks.get(self.pos).map(|t| t.1) == Some("reduce") {
                        self.pos += 1;
                        Images::Reduce
                    } else {
                        Images::List(self.numbers()?)
                    };
                    Decl::Hom { name, src, dst, images }
                } else {
                    Decl::ModHom { name, src, dst, images: self.numbers()? }
                }
            }
            other => {
                return self.err(
                    head.0,
                    format!("unknown declaration `{other}` (expected ring, module, ideal, submodule, hom, modhom, expect or option)"),
                )
            }
        };
        Ok(decl)
    }

    fn ring_expr(&mut self) -> Result<RingExpr, WorkspaceError> {
        let t = self.word()?;
        Ok(match t.1 {
            "zn" => RingExpr::Zn(self.number()?),
            "product" => RingExpr::Product(self.name()?, self.name()?),
            "quotient" => RingExpr::Quotient(self.name()?, self.name()?),
            "idealization" => RingExpr::Idealization(self.name()?, self.name()?),
            "dup-ring" => RingExpr::DupRing(self.name()?, self.name()?),
            "amalgam" => RingExpr::Amalgam { r1: self.name()?, r2: self.name()?, hom: self.name()?, ideal: self.name()? },
            other => return self.err(t.0, format!("unknown ring construction `{other}`")),
        })
    }

    fn module_expr(&mut self) -> Result<ModuleExpr, WorkspaceError> {
        let t = self.word()?;
        Ok(match t.1 {
            "cyclic" => {
                let k = self.number()?;
                self.keyword("over")?;
                let base = self.name()?;
                ModuleExpr::Cyclic(k, (base != "Z").then_some(base))
            }
            "regular" => ModuleExpr::Regular(self.name()?),
            "product" => ModuleExpr::Product(self.name()?, self.name()?),
            "quotient" => ModuleExpr::Quotient(self.name()?, self.name()?),
            "dup" => ModuleExpr::Dup(self.name()?, self.name()?),
            "amalgam-mod" => {
                ModuleExpr::Amalgam { m1: self.name()?, m2: self.name()?, hom: self.name()?, modhom: self.name()?, ideal: self.name()? }
            }
            other => return self.err(t.0, format!("unknown module construction `{other}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ring,
    Module,
    Ideal,
    IntegerIdeal,
    Submodule,
    Hom,
    ModHom,
}

impl Kind {
    fn of(d: &Decl) -> Kind {
        match d {
            Decl::Ring { .. } => Kind::Ring,
            Decl::Module { .. } => Kind::Module,
            Decl::Ideal { .. } => Kind::Ideal,
            Decl::IntegerIdeal { .. } => Kind::IntegerIdeal,
            Decl::Submodule { .. } => Kind::Submodule,
            Decl::Hom { .. } => Kind::Hom,
            Decl::ModHom { .. } => Kind::ModHom,
            Decl::Expect { .. } => unreachable!("expect lines declare nothing"),
        }
    }

    fn word(self) -> &'static str {
        match self {
            Kind::Ring => "a ring",
            Kind::Module => "a module",
            Kind::Ideal => "an ideal of a declared ring",
            Kind::IntegerIdeal => "an ideal of Z",
            Kind::Submodule => "a submodule",
            Kind::Hom => "a ring hom",
            Kind::ModHom => "a modhom",
        }
    }
}

/// Every reference names an earlier declaration of the right kind.
fn resolve(d: &Decl, kinds: &BTreeMap<String, Kind>, line: usize) -> Result<(), WorkspaceError> {
    let me = d.name().unwrap_or("expect").to_string();
    let need = |name: &str, want: &[Kind]| -> Result<(), WorkspaceError> {
        match kinds.get(name) {
            Some(k) if want.contains(k) => Ok(()),
            Some(k) => Err(WorkspaceError::Semantic {
                line,
                name: me.clone(),
                msg: format!("`{name}` is {}, expected {}", k.word(), want[0].word()),
            }),
            None => Err(WorkspaceError::Semantic { line, name: me.clone(), msg: format!("`{name}` is not declared earlier") }),
        }
    };
    use Kind as K;
    match d {
        Decl::Ring { expr, .. } => match expr {
            RingExpr::Zn(_) => Ok(()),
            RingExpr::Product(a, b) => need(a, &[K::Ring]).and(need(b, &[K::Ring])),
            RingExpr::Quotient(r, i) | RingExpr::DupRing(r, i) => need(r, &[K::Ring]).and(need(i, &[K::Ideal])),
            RingExpr::Idealization(r, m) => need(r, &[K::Ring]).and(need(m, &[K::Module])),
            RingExpr::Amalgam { r1, r2, hom, ideal } => {
                need(r1, &[K::Ring]).and(need(r2, &[K::Ring])).and(need(hom, &[K::Hom])).and(need(ideal, &[K::Ideal]))
            }
        },
        Decl::Module { expr, .. } => match expr {
            ModuleExpr::Cyclic(_, None) => Ok(()),
            ModuleExpr::Cyclic(_, Some(r)) | ModuleExpr::Regular(r) => need(r, &[K::Ring]),
            ModuleExpr::Product(a, b) => need(a, &[K::Module]).and(need(b, &[K::Module])),
            ModuleExpr::Quotient(m, s) => need(m, &[K::Module]).and(need(s, &[K::Submodule])),
            ModuleExpr::Dup(m, i) => need(m, &[K::Module]).and(need(i, &[K::Ideal])),
            ModuleExpr::Amalgam { m1, m2, hom, modhom, ideal } => need(m1, &[K::Module])
                .and(need(m2, &[K::Module]))
                .and(need(hom, &[K::Hom]))
                .and(need(modhom, &[K::ModHom]))
                .and(need(ideal, &[K::Ideal])),
        },
        Decl::Ideal { ring, .. } => need(ring, &[K::Ring]),
        Decl::IntegerIdeal { .. } => Ok(()),
        Decl::Submodule { module, .. } => need(module, &[K::Module]),
        Decl::Hom { src, dst, .. } => need(src, &[K::Ring]).and(need(dst, &[K::Ring])),
        Decl::ModHom { src, dst, .. } => need(src, &[K::Module]).and(need(dst, &[K::Module])),
        Decl::Expect { target, .. } => need(target, &[K::Submodule, K::Ideal, K::IntegerIdeal]),
    }
}

/// A materialized declaration.
#[derive(Clone)]
pub enum Object {
    Ring(Ring),
    Module(Module),
    Ideal(Ring, Ideal),
    IntegerIdeal(u64),
    Submodule(Module, Submodule),
    Hom(Arc<RingHom>),
    /// Kept as a raw map until an amalgam fixes the ring hom it is linear over.
    ModHom(Module, Module, Vec<usize>),
}

/// Result of evaluating one `expect` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectOutcome {
    pub line: usize,
    pub flag: Flag,
    pub target: String,
    pub expected: &'static str,
    pub actual: &'static str,
}

impl ExpectOutcome {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

/// All objects of a workspace, in declaration order.
pub struct Materialized {
    pub objects: Vec<(String, Object)>,
    index: BTreeMap<String, usize>,
    expects: Vec<(usize, Flag, String, Option<bool>)>,
}

impl Materialized {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.index.get(name).map(|&i| &self.objects[i].1)
    }

    pub fn module(&self, name: &str) -> Option<&Module> {
        match self.get(name)? {
            Object::Module(m) => Some(m),
            _ => None,
        }
    }

    pub fn modules(&self) -> impl Iterator<Item = (&str, &Module)> {
        self.objects.iter().filter_map(|(n, o)| match o {
            Object::Module(m) => Some((n.as_str(), m)),
            _ => None,
        })
    }

    /// Re-evaluates every `expect` line with the unmutated predicates.
    pub fn check_expectations(&self) -> Result<Vec<ExpectOutcome>, WorkspaceError> {
        let mut out = Vec::new();
        for (line, flag, target, value) in &self.expects {
            let sem = |e: smlab_core::Error| lift(e, *line, target);
            let v = match self.get(target).expect("resolved during parsing") {
                Object::Submodule(m, n) => {
                    let c = Classifier::default();
                    match c.core_flags(m, n.members()).get(*flag) {
                        Some(v) => v.clone(),
                        None => c.classify_submodule(m, n).map_err(sem)?.get(*flag).clone(),
                    }
                }
                Object::Ideal(r, i) => classify_ideal(r, i).map_err(sem)?.get(*flag).clone(),
                Object::IntegerIdeal(d) if *flag == Flag::SemiN => integer_ideal_is_semi_n(*d),
                Object::IntegerIdeal(_) => {
                    return Err(WorkspaceError::Semantic {
                        line: *line,
                        name: target.clone(),
                        msg: format!("only semi_n is decided for ideals of Z, not {flag}"),
                    })
                }
                _ => unreachable!("expect targets are checked during parsing"),
            };
            let expected = match value {
                Some(true) => "true",
                Some(false) => "false",
                None => "na",
            };
            out.push(ExpectOutcome { line: *line, flag: *flag, target: target.clone(), expected, actual: verdict_word(&v) });
        }
        Ok(out)
    }
}

fn lift(e: smlab_core::Error, line: usize, name: &str) -> WorkspaceError {
    match e {
        smlab_core::Error::Input(msg) => WorkspaceError::Semantic { line, name: name.to_string(), msg },
        e @ smlab_core::Error::Capacity { .. } => WorkspaceError::Capacity { line, name: name.to_string(), msg: e.to_string() },
    }
}

impl WorkspaceSpec {
    /// Builds every declared object, validating axioms, closure and
    /// well-definedness along the way.
    pub fn materialize(&self) -> Result<Materialized, WorkspaceError> {
        let caps = self.caps();
        let mut mat = Materialized { objects: Vec::new(), index: BTreeMap::new(), expects: Vec::new() };
        for (i, d) in self.decls.iter().enumerate() {
            let line = self.line_of(i);
            let Some(name) = d.name() else {
                if let Decl::Expect { flag, target, value } = d {
                    mat.expects.push((line, *flag, target.clone(), *value));
                }
                continue;
            };
            let sem = |msg: String| WorkspaceError::Semantic { line, name: name.to_string(), msg };
            let lifted = |e: smlab_core::Error| lift(e, line, name);
            let ring = |n: &str| match mat.get(n) {
                Some(Object::Ring(r)) => r.clone(),
                _ => unreachable!("resolved during parsing"),
            };
            let module = |n: &str| match mat.get(n) {
                Some(Object::Module(m)) => m.clone(),
                _ => unreachable!("resolved during parsing"),
            };
            let ideal = |n: &str| match mat.get(n) {
                Some(Object::Ideal(r, i)) => (r.clone(), i.clone()),
                _ => unreachable!("resolved during parsing"),
            };
            let hom = |n: &str| match mat.get(n) {
                Some(Object::Hom(h)) => h.clone(),
                _ => unreachable!("resolved during parsing"),
            };
            let owned_ideal = |r: &Ring, n: &str| {
                let (owner, i) = ideal(n);
                if owner.same_as(r) {
                    Ok(i)
                } else {
                    Err(sem(format!("ideal `{n}` belongs to {}, not {}", owner.label(), r.label())))
                }
            };
            let check_ring_size = |order: usize| {
                if order > caps.ring_order {
                    Err(WorkspaceError::Capacity {
                        line,
                        name: name.to_string(),
                        msg: format!("ring of order {order} exceeds cap {}", caps.ring_order),
                    })
                } else {
                    Ok(())
                }
            };
            let obj = match d {
                Decl::Ring { expr, .. } => {
                    let r = match expr {
                        RingExpr::Zn(n) => FiniteRing::zn(*n).map_err(lifted)?,
                        RingExpr::Product(a, b) => {
                            let (a, b) = (ring(a), ring(b));
                            check_ring_size(a.order() * b.order())?;
                            FiniteRing::product(&a, &b).map_err(lifted)?
                        }
                        RingExpr::Quotient(r, i) => {
                            let r = ring(r);
                            FiniteRing::quotient(&r, &owned_ideal(&r, i)?).map_err(lifted)?
                        }
                        RingExpr::Idealization(r, m) => {
                            let (r, m) = (ring(r), module(m));
                            check_ring_size(r.order() * m.order())?;
                            idealization(&r, &m).map_err(lifted)?
                        }
                        RingExpr::DupRing(r, i) => {
                            let r = ring(r);
                            let i = owned_ideal(&r, i)?;
                            duplication_ring(&r, &i).map_err(lifted)?
                        }
                        RingExpr::Amalgam { r1, r2, hom: h, ideal: i } => {
                            let (r1, r2, h) = (ring(r1), ring(r2), hom(h));
                            if !h.src().same_as(&r1) || !h.dst().same_as(&r2) {
                                return Err(sem(format!(
                                    "hom goes {} -> {}, not {} -> {}",
                                    h.src().label(),
                                    h.dst().label(),
                                    r1.label(),
                                    r2.label()
                                )));
                            }
                            let i = owned_ideal(&r2, i)?;
                            amalgam_ring(&h, &i).map_err(lifted)?
                        }
                    };
                    check_ring_size(r.order())?;
                    r.verify_axioms().map_err(lifted)?;
                    Object::Ring(r)
                }
                Decl::Module { expr, .. } => {
                    let m = match expr {
                        ModuleExpr::Cyclic(k, base) => {
                            let base = match base {
                                Some(r) => BaseRing::Finite(ring(r)),
                                None => BaseRing::Integers,
                            };
                            FiniteModule::cyclic(*k, &base).map_err(lifted)?
                        }
                        ModuleExpr::Regular(r) => FiniteModule::regular(&ring(r)).map_err(lifted)?,
                        ModuleExpr::Product(a, b) => FiniteModule::product(&module(a), &module(b)).map_err(lifted)?,
                        ModuleExpr::Quotient(m, s) => {
                            let m = module(m);
                            let Some(Object::Submodule(owner, n)) = mat.get(s) else { unreachable!("resolved during parsing") };
                            if !owner.same_as(&m) {
                                return Err(sem(format!("submodule `{s}` belongs to {}, not {}", owner.full_label(), m.full_label())));
                            }
                            FiniteModule::quotient(&m, n).map_err(lifted)?.0
                        }
                        ModuleExpr::Dup(m, i) => {
                            let m = module(m);
                            let Some(base) = m.base_ring() else { return Err(sem("duplication needs a module over a finite ring".into())) };
                            let i = owned_ideal(base, i)?;
                            Duplication::new(&m, &i).map_err(lifted)?.dup
                        }
                        ModuleExpr::Amalgam { m1, m2, hom: h, modhom, ideal: i } => {
                            let (m1, m2, h) = (module(m1), module(m2), hom(h));
                            let Some(Object::ModHom(src, dst, map)) = mat.get(modhom) else { unreachable!("resolved during parsing") };
                            if !src.same_as(&m1) || !dst.same_as(&m2) {
                                return Err(sem(format!("modhom `{modhom}` does not go {} -> {}", m1.full_label(), m2.full_label())));
                            }
                            let phi = SemilinearMap::new(&h, &m1, &m2, map.clone()).map_err(lifted)?;
                            let i = owned_ideal(h.dst(), i)?;
                            Amalgam::new(&phi, &i).map_err(lifted)?.module
                        }
                    };
                    if m.order() > caps.module_order {
                        return Err(WorkspaceError::Capacity {
                            line,
                            name: name.to_string(),
                            msg: format!("module of order {} exceeds cap {}", m.order(), caps.module_order),
                        });
                    }
                    m.verify_axioms().map_err(lifted)?;
                    Object::Module(m)
                }
                Decl::Ideal { ring: r, gens, .. } => {
                    let r = ring(r);
                    if let Some(g) = gens.iter().find(|&&g| g >= r.order()) {
                        return Err(sem(format!("{g} is not an element of {} (order {})", r.label(), r.order())));
                    }
                    let i = r.ideal(gens).map_err(lifted)?;
                    Object::Ideal(r, i)
                }
                Decl::IntegerIdeal { d, .. } => Object::IntegerIdeal(*d),
                Decl::Submodule { module: m, gens, .. } => {
                    let m = module(m);
                    if let Some(g) = gens.iter().find(|&&g| g >= m.order()) {
                        return Err(sem(format!("{g} is not an element of {} (order {})", m.full_label(), m.order())));
                    }
                    let n = m.submodule(gens).map_err(lifted)?;
                    Object::Submodule(m, n)
                }
                Decl::Hom { src, dst, images, .. } => {
                    let (a, b) = (ring(src), ring(dst));
                    let h = match images {
                        Images::Reduce => RingHom::reduction(&a, &b),
                        Images::List(v) => RingHom::new(&a, &b, v.clone()),
                    };
                    Object::Hom(h.map_err(lifted)?)
                }
                Decl::ModHom { src, dst, images, .. } => {
                    let (a, b) = (module(src), module(dst));
                    if images.len() != a.order() {
                        return Err(sem(format!("{} images given for a module of order {}", images.len(), a.order())));
                    }
                    if let Some(x) = images.iter().find(|&&x| x >= b.order()) {
                        return Err(sem(format!("image {x} is not an element of {}", b.full_label())));
                    }
                    if let Some((x, y)) = a
                        .elements()
                        .flat_map(|x| a.elements().map(move |y| (x, y)))
                        .find(|&(x, y)| images[a.add(x, y)] != b.add(images[x], images[y]))
                    {
                        return Err(sem(format!("not additive at ({x}, {y})")));
                    }
                    Object::ModHom(a, b, images.clone())
                }
                Decl::Expect { .. } => unreachable!("handled above"),
            };
            mat.index.insert(name.to_string(), mat.objects.len());
            mat.objects.push((name.to_string(), obj));
        }
        Ok(mat)
    }
}
