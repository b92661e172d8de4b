//! Base rings of modules and sets of scalars.
//!
//! A module over `ℤ` with exponent `e` quantifies over the representatives
//! `0, 1, .., e`. Representative `e` stands for a nonzero integer that acts
//! as zero, so "r ≠ 0 in ℤ" and "r acts as zero" stay distinguishable.

use alloc::string::String;

use crate::arith::gcd;
use crate::elemset::ElemSet;
use crate::ring::{Ideal, Ring};

#[derive(Clone)]
pub enum BaseRing {
    Finite(Ring),
    Integers,
}

impl BaseRing {
    pub fn label(&self) -> String {
        match self {
            BaseRing::Finite(r) => String::from(r.label()),
            BaseRing::Integers => String::from("Z"),
        }
    }

    pub fn recipe(&self) -> String {
        match self {
            BaseRing::Finite(r) => String::from(r.recipe()),
            BaseRing::Integers => String::from("int"),
        }
    }

    pub fn same_as(&self, other: &BaseRing) -> bool {
        match (self, other) {
            (BaseRing::Integers, BaseRing::Integers) => true,
            (BaseRing::Finite(a), BaseRing::Finite(b)) => a.same_as(b),
            _ => false,
        }
    }

    pub fn as_finite(&self) -> Option<&Ring> {
        match self {
            BaseRing::Finite(r) => Some(r),
            BaseRing::Integers => None,
        }
    }

    /// Finite fields and `ℤ` are the only integral domains at this scale.
    pub fn is_integral_domain(&self) -> bool {
        match self {
            BaseRing::Finite(r) => r.is_integral_domain(),
            BaseRing::Integers => true,
        }
    }
}

impl core::fmt::Debug for BaseRing {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.label())
    }
}

/// An ideal of the base ring: an [`Ideal`] for finite bases, `gℤ` over `ℤ`.
#[derive(Clone, PartialEq, Eq)]
pub enum ScalarSet {
    Ideal(Ideal),
    /// `gℤ`; `g = 0` is the zero ideal and `g = 1` all of `ℤ`.
    Multiples(u64),
}

impl ScalarSet {
    pub fn is_zero(&self) -> bool {
        match self {
            ScalarSet::Ideal(i) => i.is_zero(),
            ScalarSet::Multiples(g) => *g == 0,
        }
    }

    pub fn is_whole(&self) -> bool {
        match self {
            ScalarSet::Ideal(i) => !i.is_proper(),
            ScalarSet::Multiples(g) => *g == 1,
        }
    }

    pub fn as_ideal(&self) -> Option<&Ideal> {
        match self {
            ScalarSet::Ideal(i) => Some(i),
            ScalarSet::Multiples(_) => None,
        }
    }

    pub fn as_multiples(&self) -> Option<u64> {
        match self {
            ScalarSet::Multiples(g) => Some(*g),
            ScalarSet::Ideal(_) => None,
        }
    }
}

impl core::fmt::Debug for ScalarSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ScalarSet::Ideal(i) => write!(f, "{i:?}"),
            ScalarSet::Multiples(g) => write!(f, "{g}Z"),
        }
    }
}

/// Reads a representative set over `ℤ` (exponent `e`) back as `gℤ`.
pub(crate) fn multiples_from_reps(reps: &ElemSet) -> u64 {
    reps.iter().fold(0u64, |g, s| gcd(g, s as u64))
}

/// Representatives in `0..=e` lying in `gℤ`; `g` must divide `e` or be 0.
pub(crate) fn reps_of_multiples(g: u64, e: usize) -> ElemSet {
    ElemSet::from_predicate(e + 1, |s| if g == 0 { s == 0 } else { (s as u64).is_multiple_of(g) })
}
