//! Distribution polynomials `Σ q^{st(σ)}` over restricted classes.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::{enumerate, ClassSelector, PatternSet};
use crate::perm::Permutation;
use crate::qpoly::{QPoly, QSeries};

/// A named permutation statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::manual_non_exhaustive)]
pub enum Statistic {
    Crs,
    Inv,
    Exc,
    Nes,
    Ddes,
    Dasc,
    Occ31_2,
    Ut,
    Lt,
    /// Crossings with the lower inequality made strict. Exists only so
    /// tests can check that the identity harness is able to fail.
    #[cfg(feature = "mutation-hook")]
    #[doc(hidden)]
    CrsStrictLower,
}

impl Statistic {
    pub const ALL: [Statistic; 9] = [
        Statistic::Crs,
        Statistic::Inv,
        Statistic::Exc,
        Statistic::Nes,
        Statistic::Ddes,
        Statistic::Dasc,
        Statistic::Occ31_2,
        Statistic::Ut,
        Statistic::Lt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Crs => "crs",
            Statistic::Inv => "inv",
            Statistic::Exc => "exc",
            Statistic::Nes => "nes",
            Statistic::Ddes => "ddes",
            Statistic::Dasc => "dasc",
            Statistic::Occ31_2 => "occ31_2",
            Statistic::Ut => "ut",
            Statistic::Lt => "lt",
            #[cfg(feature = "mutation-hook")]
            Statistic::CrsStrictLower => "crs_strict_lower",
        }
    }

    pub fn eval(self, p: &Permutation) -> usize {
        match self {
            Statistic::Crs => p.crs(),
            Statistic::Inv => p.inv(),
            Statistic::Exc => p.exc(),
            Statistic::Nes => p.nes(),
            Statistic::Ddes => p.ddes(),
            Statistic::Dasc => p.dasc(),
            Statistic::Occ31_2 => p.occ31_2(),
            Statistic::Ut => p.ut(),
            Statistic::Lt => p.lt(),
            #[cfg(feature = "mutation-hook")]
            Statistic::CrsStrictLower => crs_strict_lower(p),
        }
    }
}

#[cfg(feature = "mutation-hook")]
fn crs_strict_lower(p: &Permutation) -> usize {
    let w = p.word();
    let n = w.len();
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (si, sj) = (w[i - 1], w[j - 1]);
            if (j < si && si < sj) || (si < sj && sj < i) {
                count += 1;
            }
        }
    }
    count
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL.iter().copied().find(|st| st.name() == s).ok_or_else(|| Error::UnknownStatistic(s.into()))
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Selector index that may depend on the row length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowIndex {
    Fixed(usize),
    /// `n - offset`.
    FromEnd(usize),
}

impl RowIndex {
    pub fn resolve(self, n: usize) -> Result<usize> {
        match self {
            RowIndex::Fixed(k) => Ok(k),
            RowIndex::FromEnd(offset) => n
                .checked_sub(offset)
                .ok_or_else(|| Error::InvalidArgument(alloc::format!("n-{offset} is negative for n={n}"))),
        }
    }
}

/// A [`ClassSelector`] whose index is resolved per row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowSelector {
    All,
    FirstValueOneAt(RowIndex),
    LastPositionValue(RowIndex),
}

impl RowSelector {
    pub fn resolve(self, n: usize) -> Result<ClassSelector> {
        let sel = match self {
            RowSelector::All => ClassSelector::All,
            RowSelector::FirstValueOneAt(k) => ClassSelector::FirstValueOneAt(k.resolve(n)?),
            RowSelector::LastPositionValue(k) => ClassSelector::LastPositionValue(k.resolve(n)?),
        };
        sel.validate(n)?;
        Ok(sel)
    }
}

impl From<ClassSelector> for RowSelector {
    fn from(sel: ClassSelector) -> Self {
        match sel {
            ClassSelector::All => RowSelector::All,
            ClassSelector::FirstValueOneAt(k) => RowSelector::FirstValueOneAt(RowIndex::Fixed(k)),
            ClassSelector::LastPositionValue(k) => RowSelector::LastPositionValue(RowIndex::Fixed(k)),
        }
    }
}

/// Histogram of `stat` over `perms`, as a polynomial.
pub fn accumulate(perms: impl Iterator<Item = Permutation>, stat: Statistic) -> Result<QPoly> {
    let mut counts: Vec<u64> = Vec::new();
    for p in perms {
        let v = stat.eval(&p);
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] = counts[v].checked_add(1).ok_or(Error::Overflow("distribution count"))?;
    }
    let coeffs = counts
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow("distribution count")))
        .collect::<Result<Vec<_>>>()?;
    Ok(QPoly::from_coeffs(coeffs))
}

/// `Σ_{σ ∈ S_n(T), σ ∈ sel} q^{st(σ)}`, computed sequentially.
pub fn distribution(n: usize, set: &PatternSet, sel: ClassSelector, stat: Statistic) -> Result<QPoly> {
    accumulate(enumerate(n, set, sel)?, stat)
}

/// Anything that can produce distribution polynomials. The identity checks
/// are written against this trait so callers can swap in parallel or
/// memoizing engines.
pub trait DistributionSource {
    fn distribution(&self, n: usize, set: &PatternSet, sel: ClassSelector, stat: Statistic) -> Result<QPoly>;

    /// `F(T; q, z)` truncated at `z^order`; the `z^0` term is the empty
    /// permutation.
    fn series_of(&self, set: &PatternSet, stat: Statistic, order: usize) -> Result<QSeries> {
        let coeffs =
            (0..=order).map(|n| self.distribution(n, set, ClassSelector::All, stat)).collect::<Result<Vec<_>>>()?;
        Ok(QSeries::from_coeffs(order, coeffs))
    }
}

/// Plain sequential enumeration.
#[derive(Debug, Clone, Copy, Default)]
pub struct BruteForce;

impl DistributionSource for BruteForce {
    fn distribution(&self, n: usize, set: &PatternSet, sel: ClassSelector, stat: Statistic) -> Result<QPoly> {
        distribution(n, set, sel, stat)
    }
}

impl<S: DistributionSource + ?Sized> DistributionSource for &S {
    fn distribution(&self, n: usize, set: &PatternSet, sel: ClassSelector, stat: Statistic) -> Result<QPoly> {
        (**self).distribution(n, set, sel, stat)
    }
}

/// Coefficient rows of `F_n` for `n = n_min..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub n_min: usize,
    pub rows: Vec<Vec<i64>>,
}

impl Triangle {
    pub fn row(&self, n: usize) -> Option<&[i64]> {
        n.checked_sub(self.n_min).and_then(|i| self.rows.get(i)).map(Vec::as_slice)
    }

    pub fn n_max(&self) -> usize {
        self.n_min + self.rows.len() - 1
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

pub fn triangle(
    source: &dyn DistributionSource,
    set: &PatternSet,
    sel: RowSelector,
    stat: Statistic,
    n_min: usize,
    n_max: usize,
) -> Result<Triangle> {
    if n_min > n_max {
        return Err(Error::InvalidArgument(alloc::format!("empty row range {n_min}..{n_max}")));
    }
    let rows = (n_min..=n_max)
        .map(|n| {
            let poly = source.distribution(n, set, sel.resolve(n)?, stat)?;
            Ok(poly.coeffs().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle { n_min, rows })
}

/// Renders a selector the way the command line spells it.
impl fmt::Display for RowSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |k: &RowIndex| match k {
            RowIndex::Fixed(k) => k.to_string(),
            RowIndex::FromEnd(0) => "n".into(),
            RowIndex::FromEnd(o) => alloc::format!("n-{o}"),
        };
        match self {
            RowSelector::All => f.write_str("all"),
            RowSelector::FirstValueOneAt(k) => write!(f, "first1@{}", idx(k)),
            RowSelector::LastPositionValue(k) => write!(f, "last@{}", idx(k)),
        }
    }
}

impl FromStr for RowSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(RowSelector::All);
        }
        let bad = || Error::InvalidArgument(alloc::format!("unknown selector `{s}`"));
        let (kind, idx) = s.split_once('@').ok_or_else(bad)?;
        let idx = if idx == "n" {
            RowIndex::FromEnd(0)
        } else if let Some(off) = idx.strip_prefix("n-") {
            RowIndex::FromEnd(off.parse().map_err(|_| bad())?)
        } else {
            RowIndex::Fixed(idx.parse().map_err(|_| bad())?)
        };
        match kind {
            "first1" => Ok(RowSelector::FirstValueOneAt(idx)),
            "last" => Ok(RowSelector::LastPositionValue(idx)),
            _ => Err(bad()),
        }
    }
}
