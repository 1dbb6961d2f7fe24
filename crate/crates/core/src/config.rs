use serde::Serialize;

use crate::error::{Error, Result};

/// Size limits for the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest universe (or poset) scanned over all `2^n` subsets.
    pub universe: usize,
    /// Largest family whose power set is enumerated (relation enumeration).
    pub family: usize,
    /// Largest closed-set poset whose hom-sets are enumerated.
    pub hom: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            universe: 16,
            family: 10,
            hom: 4,
        }
    }
}

impl Caps {
    pub fn check(&self) -> Result<()> {
        if self.universe == 0 || self.family == 0 || self.hom == 0 {
            return Err(Error::PreconditionViolated("caps must be positive".into()));
        }
        Ok(())
    }

    pub(crate) fn require(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::SizeCapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}

/// Evaluation mode for way-below and Scott continuity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Finite-poset identities: `x << y` iff `x <= y`, Scott continuous iff monotone.
    #[default]
    Fast,
    /// Definitions evaluated literally by enumerating directed subsets.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Human,
    Machine,
}

/// Settings shared by every command-line run.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub caps: Caps,
    pub mode: Mode,
    pub format: OutputFormat,
    /// Seed for randomized sampling; `None` restricts runs to exhaustive modes.
    pub seed: Option<u64>,
    pub dot: Option<std::path::PathBuf>,
    pub out_dir: Option<std::path::PathBuf>,
}
