//! Partitioning pattern sets by equality of their distribution rows.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::distribution::{DistributionSource, Statistic};
use crate::error::Result;
use crate::pattern::{ClassSelector, PatternSet};
use crate::qpoly::QPoly;

/// Two classes of a [`WilfPartition`] and the first length at which their
/// rows differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfSeparation {
    pub a: PatternSet,
    pub b: PatternSet,
    pub n: usize,
}

/// Classes of pattern sets whose distributions agree for every `n ≤ n_max`.
///
/// Classes are ordered by size (largest first), then by their smallest
/// member; members are sorted. `separations` lists every pair of classes by
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfPartition {
    pub n_max: usize,
    pub classes: Vec<Vec<PatternSet>>,
    pub separations: Vec<WilfSeparation>,
}

pub fn wilf_classes(
    source: &dyn DistributionSource,
    family: &[PatternSet],
    stat: Statistic,
    n_max: usize,
) -> Result<WilfPartition> {
    let mut rows: Vec<(PatternSet, Vec<QPoly>)> = Vec::with_capacity(family.len());
    for t in family {
        let row =
            (0..=n_max).map(|n| source.distribution(n, t, ClassSelector::All, stat)).collect::<Result<Vec<_>>>()?;
        rows.push((t.clone(), row));
    }

    let mut groups: Vec<(Vec<PatternSet>, &Vec<QPoly>)> = Vec::new();
    for (t, row) in &rows {
        match groups.iter_mut().find(|(_, r)| *r == row) {
            Some((members, _)) => members.push(t.clone()),
            None => groups.push((alloc::vec![t.clone()], row)),
        }
    }
    for (members, _) in &mut groups {
        members.sort();
    }
    groups.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));

    let mut separations = Vec::new();
    for (i, (a, ra)) in groups.iter().enumerate() {
        for (b, rb) in &groups[i + 1..] {
            let n = ra.iter().zip(rb.iter()).position(|(x, y)| x != y).unwrap_or(n_max);
            separations.push(WilfSeparation { a: a[0].clone(), b: b[0].clone(), n });
        }
    }
    let classes = groups.into_iter().map(|(m, _)| m).collect();
    Ok(WilfPartition { n_max, classes, separations })
}

impl WilfPartition {
    /// Whether `a` and `b` fall in the same class.
    pub fn equivalent(&self, a: &PatternSet, b: &PatternSet) -> bool {
        self.classes.iter().any(|c| c.contains(a) && c.contains(b))
    }
}

/// `{132,213,321} | {123} | {231} | {312}`; sets with several patterns are
/// braced individually.
impl fmt::Display for WilfPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, class) in self.classes.iter().enumerate() {
            if idx > 0 {
                f.write_str(" | ")?;
            }
            let members: Vec<String> = class
                .iter()
                .map(|t| if t.len() == 1 { alloc::format!("{t}") } else { alloc::format!("{{{t}}}") })
                .collect();
            write!(f, "{{{}}}", members.join(","))?;
        }
        Ok(())
    }
}
