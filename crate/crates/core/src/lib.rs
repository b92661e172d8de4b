//! Finite commutative rings, finite modules over them (or over `ℤ`), the
//! submodule classification predicates built on prime, primary, semiprime,
//! r-, n-, semi r- and semi n-submodules, the idealization / duplication /
//! amalgamation constructions, and an exhaustive theorem-checking suite.
//!
//! Everything is `no_std` with `alloc`; IO and the CLI live in the `smlab`
//! crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod caps;
pub mod catalog;
pub mod classify;
pub mod construct;
pub mod elemset;
pub mod error;
pub mod module;
pub mod replay;
pub mod ring;
pub mod scalars;
pub mod search;
pub mod theorems;

pub use caps::{Caps, Preset};
pub use catalog::{Catalog, HomKind};
pub use classify::{Classifier, CoreFlags, Flag, Mutation, PropertyVector, Verdict, Violation};
pub use construct::{Amalgam, Duplication, RingHom, SemilinearMap};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use module::{FiniteModule, Module, ModuleConstruction, ModuleHom, Submodule};
pub use replay::SpecWriter;
pub use ring::{FiniteRing, Ideal, IdealOp, Ring, RingConstruction};
pub use scalars::{BaseRing, ScalarSet};
pub use search::{search_separating, Separation};
pub use theorems::{check_all, check_theorem, CheckReport, Session, Status, Witness, ZnReading, THEOREM_IDS};
