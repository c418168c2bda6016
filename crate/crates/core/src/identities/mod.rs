//! One named check per crossing identity. Each check enumerates the relevant
//! classes by brute force, evaluates the closed form or recurrence
//! independently, and returns a [`CheckReport`] naming the first witness that
//! disagrees.
//!
//! The check names double as the command-line identifiers, so they follow
//! the numbering of the results they verify.

pub mod formulas;
mod pointwise;
mod series;
mod symmetry;
mod wilf;

pub use wilf::{wilf_classes, WilfPartition, WilfSeparation};

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt::Display;

use crate::distribution::{DistributionSource, Statistic};
use crate::error::{Error, Result};
use crate::pattern::{ClassSelector, PatternSet};
use crate::perm::Permutation;
use crate::qpoly::{QPoly, QSeries};
use crate::report::{CheckReport, Counterexample};

/// Every check the [`Verifier`] can run, in the order `run_all` uses.
pub const CHECK_NAMES: [&str; 13] = [
    "check_crs_inv_exc_nes",
    "check_lemma_insert",
    "check_lemma_symmetry",
    "check_prop21",
    "check_prop25_prop26",
    "check_thm11",
    "check_thm12",
    "check_cor32",
    "check_thm13",
    "check_thm41",
    "check_thm43_cor44_cor45",
    "check_simion_smith",
    "check_rci_invariance",
];

/// Bounds shared by a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest length for checks that sweep all of `S_n`.
    pub n_max: usize,
    /// Series truncation, and largest length for checks over
    /// Catalan-sized (or smaller) classes.
    pub order: usize,
    /// Continued-fraction depth; defaults to `2·order + 2`.
    pub depth: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 8, order: 10, depth: None }
    }
}

impl VerifyConfig {
    pub fn cf_depth(&self) -> usize {
        self.depth.unwrap_or(2 * self.order + 2)
    }
}

/// Runs checks against a [`DistributionSource`].
///
/// `crossing` is the statistic every check treats as the crossing number.
/// It is always [`Statistic::Crs`] outside of mutation tests.
pub struct Verifier<'a> {
    source: &'a dyn DistributionSource,
    crossing: Statistic,
}

impl<'a> Verifier<'a> {
    pub fn new(source: &'a dyn DistributionSource) -> Self {
        Verifier { source, crossing: Statistic::Crs }
    }

    pub fn with_crossing_statistic(mut self, stat: Statistic) -> Self {
        self.crossing = stat;
        self
    }

    pub fn run(&self, name: &str, cfg: &VerifyConfig) -> Result<CheckReport> {
        match name {
            "check_crs_inv_exc_nes" => self.check_crs_inv_exc_nes(cfg.n_max),
            "check_lemma_insert" => self.check_lemma_insert(cfg.n_max),
            "check_lemma_symmetry" => self.check_lemma_symmetry(cfg.n_max),
            "check_prop21" => self.check_prop21_standard(cfg.n_max),
            "check_prop25_prop26" => self.check_prop25_prop26(cfg.n_max),
            "check_thm11" => self.check_thm11(cfg.order, cfg.cf_depth()),
            "check_thm12" => self.check_thm12(cfg.order),
            "check_cor32" => self.check_cor32(cfg.order),
            "check_thm13" => self.check_thm13(cfg.order),
            "check_thm41" => self.check_thm41(cfg.order),
            "check_thm43_cor44_cor45" => self.check_thm43_cor44_cor45(cfg.n_max),
            "check_simion_smith" => self.check_simion_smith(cfg.n_max),
            "check_rci_invariance" => self.check_rci_invariance(cfg.n_max),
            other => Err(Error::InvalidArgument(format!("unknown check `{other}`"))),
        }
    }

    fn crs(&self, p: &Permutation) -> usize {
        self.crossing.eval(p)
    }

    fn dist(&self, n: usize, set: &PatternSet, sel: ClassSelector) -> Result<QPoly> {
        self.source.distribution(n, set, sel, self.crossing)
    }

    fn full(&self, n: usize, set: &PatternSet) -> Result<QPoly> {
        self.dist(n, set, ClassSelector::All)
    }

    fn series(&self, set: &PatternSet, order: usize) -> Result<QSeries> {
        self.source.series_of(set, self.crossing, order)
    }
}

fn set(s: &str) -> PatternSet {
    s.parse().expect("hard-coded pattern set")
}

fn cex(n: usize, witness: impl Display, lhs: impl Display, rhs: impl Display) -> Counterexample {
    Counterexample { n, witness: witness.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() }
}

/// Compares `lhs(n)` with `rhs(n)` for every `n` in `lo..=hi`.
fn compare_rows(
    name: impl Into<String>,
    lo: usize,
    hi: usize,
    witness: &str,
    mut sides: impl FnMut(usize) -> Result<(QPoly, QPoly)>,
) -> Result<CheckReport> {
    for n in lo..=hi {
        let (lhs, rhs) = sides(n)?;
        if lhs != rhs {
            return Ok(CheckReport::fail(name, (lo, hi), cex(n, witness, lhs, rhs)));
        }
    }
    Ok(CheckReport::pass(name, (lo, hi)))
}
