//! Checks on the action of the eight dihedral symmetries.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{cex, Verifier};
use crate::error::Result;
use crate::pattern::{enumerate, ClassSelector, PatternSet};
use crate::perm::{all_permutations, Permutation, Symmetry};
use crate::report::CheckReport;

/// `∅`, the six singletons and the fifteen pairs of `S_3`.
pub(crate) fn small_families() -> Vec<PatternSet> {
    let mut out = alloc::vec![PatternSet::empty()];
    out.extend(PatternSet::singletons(3));
    out.extend(PatternSet::pairs(3));
    out
}

impl Verifier<'_> {
    /// `φ(S_n(T)) = S_n(φ(T))` for every symmetry `φ` and every `T` made of
    /// at most two patterns of length 3.
    pub fn check_simion_smith(&self, n_max: usize) -> Result<CheckReport> {
        let range = (0, n_max);
        let mut parts = Vec::new();
        let families = small_families();
        for sym in Symmetry::ALL {
            let mut outcome = Ok(());
            'outer: for t in &families {
                let image_set = t.transform(sym);
                for n in 0..=n_max {
                    let lhs: BTreeSet<Permutation> =
                        enumerate(n, t, ClassSelector::All)?.map(|p| p.apply(sym)).collect();
                    let rhs: BTreeSet<Permutation> = enumerate(n, &image_set, ClassSelector::All)?.collect();
                    if lhs != rhs {
                        let stray = lhs.symmetric_difference(&rhs).next().cloned().unwrap_or_default();
                        let witness = format!("T={t}, {sym}(T)={image_set}, stray {stray}");
                        outcome = Err(cex(n, witness, lhs.len(), rhs.len()));
                        break 'outer;
                    }
                }
            }
            parts.push(CheckReport::from_outcome(format!("symmetry_{sym}"), range, outcome));
        }
        Ok(CheckReport::composite("check_simion_smith", range, parts))
    }

    /// `rci` preserves crossings pointwise, hence `F_n(T) = F_n(rci(T))`.
    pub fn check_rci_invariance(&self, n_max: usize) -> Result<CheckReport> {
        let range = (0, n_max);
        let mut pointwise = Ok(());
        'outer: for n in 0..=n_max {
            for p in all_permutations(n) {
                let image = p.apply(Symmetry::Rci);
                let (a, b) = (self.crs(&p), self.crs(&image));
                if a != b {
                    pointwise = Err(cex(n, format!("{p} -> {image}"), a, b));
                    break 'outer;
                }
            }
        }
        let mut classes = Ok(());
        'classes: for t in small_families() {
            let image = t.transform(Symmetry::Rci);
            for n in 0..=n_max {
                let (a, b) = (self.full(n, &t)?, self.full(n, &image)?);
                if a != b {
                    classes = Err(cex(n, format!("T={t}, rci(T)={image}"), a, b));
                    break 'classes;
                }
            }
        }
        Ok(CheckReport::composite(
            "check_rci_invariance",
            range,
            alloc::vec![
                CheckReport::from_outcome("pointwise", range, pointwise),
                CheckReport::from_outcome("class_distributions", range, classes),
            ],
        ))
    }
}
