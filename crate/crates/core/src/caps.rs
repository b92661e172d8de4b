//! Size caps and catalog presets.

use core::fmt;
use core::str::FromStr;

use crate::error::{input_err, Error, Result};

/// How much of the instance catalog to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Preset {
    Minimal,
    Standard,
    Large,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Minimal => "minimal",
            Preset::Standard => "standard",
            Preset::Large => "large",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal" => Ok(Preset::Minimal),
            "standard" => Ok(Preset::Standard),
            "large" => Ok(Preset::Large),
            other => Err(input_err!("unknown caps preset `{other}` (expected minimal, standard or large)")),
        }
    }
}

/// Element-count and lattice-size limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub preset: Preset,
    /// Largest ring whose ideals may be enumerated or that may be built.
    pub ring_order: usize,
    /// Largest module whose submodules may be enumerated.
    pub module_order: usize,
    /// Largest number of ideals or submodules in one enumeration.
    pub lattice: usize,
}

impl Caps {
    /// Limits no preset or override may exceed.
    pub const HARD: Caps = Caps { preset: Preset::Large, ring_order: 4096, module_order: 4096, lattice: 10_000 };

    pub fn preset(preset: Preset) -> Caps {
        match preset {
            Preset::Minimal => Caps { preset, ring_order: 256, module_order: 256, lattice: 2_000 },
            Preset::Standard => Caps { preset, ..Caps::HARD },
            Preset::Large => Caps::HARD,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let h = Caps::HARD;
        for (what, v, cap) in [
            ("ring order cap", self.ring_order, h.ring_order),
            ("module order cap", self.module_order, h.module_order),
            ("lattice cap", self.lattice, h.lattice),
        ] {
            if v == 0 {
                return Err(input_err!("{what} must be positive"));
            }
            if v > cap {
                return Err(Error::Capacity { what: alloc::format!("{what} {v}"), cap });
            }
        }
        Ok(())
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::preset(Preset::Standard)
    }
}
