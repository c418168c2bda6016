//! Permutations of `[n]` and the statistics defined on their arc diagrams.
//!
//! Positions and values are 1-based everywhere in the public API: `value(i)`
//! takes `i` in `1..=n` and returns a value in `1..=n`. An arc goes from
//! position `i` to value `σ(i)`; it is an upper arc when `σ(i) > i`, a lower
//! arc when `σ(i) < i`, and fixed points draw no arc at all.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `[n]`, stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    word: Vec<usize>,
}

/// Which side of the axis a crossing lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcSide {
    Upper,
    Lower,
}

/// A crossing `(i, j)`, `i < j`, with 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingPair {
    pub i: usize,
    pub j: usize,
    pub side: ArcSide,
}

/// Every statistic the crate knows about, evaluated on one permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatProfile {
    pub crs: usize,
    pub inv: usize,
    pub exc: usize,
    pub nes: usize,
    pub ut: usize,
    pub lt: usize,
    pub ddes: usize,
    pub dasc: usize,
    pub occ31_2: usize,
}

/// Transient counts below `k` and the number of positions `≥ k` carrying a
/// value `< k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialTransients {
    pub ut_minus: usize,
    pub lt_minus: usize,
    pub alpha: usize,
}

/// The eight elements of the dihedral group generated by reverse,
/// complement and inverse. Composites read right to left: `Rc` is
/// `r ∘ c`, `Rci` is `r ∘ c ∘ i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symmetry {
    Id,
    R,
    C,
    I,
    Rc,
    Ri,
    Ci,
    Rci,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] =
        [Symmetry::Id, Symmetry::R, Symmetry::C, Symmetry::I, Symmetry::Rc, Symmetry::Ri, Symmetry::Ci, Symmetry::Rci];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Id => "id",
            Symmetry::R => "r",
            Symmetry::C => "c",
            Symmetry::I => "i",
            Symmetry::Rc => "rc",
            Symmetry::Ri => "ri",
            Symmetry::Ci => "ci",
            Symmetry::Rci => "rci",
        }
    }

    /// The group inverse. Only `ri` and `ci` are not involutions.
    pub fn inverse(self) -> Symmetry {
        match self {
            Symmetry::Ri => Symmetry::Ci,
            Symmetry::Ci => Symmetry::Ri,
            s => s,
        }
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symmetry::ALL.iter().copied().find(|sym| sym.name() == s).ok_or_else(|| Error::UnknownSymmetry(s.into()))
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Permutation {
    /// Validates `values` as a bijection of `[values.len()]`.
    pub fn from_word(values: &[usize]) -> Result<Self> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for (idx, &v) in values.iter().enumerate() {
            let index = idx + 1;
            if v == 0 {
                return Err(Error::ZeroValue { index });
            }
            if v > len {
                return Err(Error::ValueOutOfRange { index, value: v, len });
            }
            if seen[v] {
                return Err(Error::DuplicateValue { index, value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { word: values.to_vec() })
    }

    /// Builds a permutation from a word already known to be valid.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_word(&word).is_ok());
        Permutation { word }
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `σ(i)` for a 1-based position `i`.
    pub fn value(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The word of `σ⁻¹`, 1-based values, 0-based storage.
    fn inverse_word(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        inv
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { word: self.inverse_word() }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation { word: self.word.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn apply(&self, s: Symmetry) -> Permutation {
        match s {
            Symmetry::Id => self.clone(),
            Symmetry::R => self.reverse(),
            Symmetry::C => self.complement(),
            Symmetry::I => self.inverse(),
            Symmetry::Rc => self.complement().reverse(),
            Symmetry::Ri => self.inverse().reverse(),
            Symmetry::Ci => self.inverse().complement(),
            Symmetry::Rci => self.inverse().complement().reverse(),
        }
    }

    /// `a ⊕ b`: `a` followed by `b` shifted up by `|a|`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&v| v + shift));
        Permutation { word }
    }

    /// `σ^(a,b)`: bump every value `≥ b` by one, then insert `b` at
    /// position `a`.
    pub fn insert(&self, position: usize, value: usize) -> Result<Permutation> {
        let len = self.len();
        if position == 0 || position > len + 1 {
            return Err(Error::PositionOutOfRange { position, len });
        }
        if value == 0 || value > len + 1 {
            return Err(Error::ValueOutOfRange { index: position, value, len: len + 1 });
        }
        let mut word: Vec<usize> = self.word.iter().map(|&v| if v >= value { v + 1 } else { v }).collect();
        word.insert(position - 1, value);
        Ok(Permutation { word })
    }

    /// `σ^{-(a,b)}`, the insertion applied to `σ⁻¹`.
    pub fn insert_inverse(&self, position: usize, value: usize) -> Result<Permutation> {
        self.inverse().insert(position, value)
    }

    /// Every crossing, sorted by `(i, j)`.
    pub fn crossings(&self) -> Vec<CrossingPair> {
        let w = &self.word;
        let n = w.len();
        let mut out = Vec::new();
        for i in 1..=n {
            let si = w[i - 1];
            for j in i + 1..=n {
                let sj = w[j - 1];
                if j < si && si < sj {
                    out.push(CrossingPair { i, j, side: ArcSide::Upper });
                } else if si < sj && sj <= i {
                    out.push(CrossingPair { i, j, side: ArcSide::Lower });
                }
            }
        }
        out
    }

    pub fn crs(&self) -> usize {
        let w = &self.word;
        let n = w.len();
        let mut count = 0;
        for i in 1..=n {
            let si = w[i - 1];
            for j in i + 1..=n {
                let sj = w[j - 1];
                if (j < si && si < sj) || (si < sj && sj <= i) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inv(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for (a, &x) in w.iter().enumerate() {
            count += w[a + 1..].iter().filter(|&&y| y < x).count();
        }
        count
    }

    pub fn exc(&self) -> usize {
        self.word.iter().enumerate().filter(|&(pos, &v)| v > pos + 1).count()
    }

    pub fn nes(&self) -> usize {
        let w = &self.word;
        let n = w.len();
        let mut count = 0;
        for i in 1..=n {
            let si = w[i - 1];
            for j in i + 1..=n {
                let sj = w[j - 1];
                if (j < sj && sj < si) || (sj < si && si <= i) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Upper and lower transient counts `(ut, lt)`.
    pub fn transients(&self) -> (usize, usize) {
        let n = self.len();
        let t = self.partial_transients(n + 1).expect("k = n+1 is always in range");
        (t.ut_minus, t.lt_minus)
    }

    pub fn ut(&self) -> usize {
        self.transients().0
    }

    pub fn lt(&self) -> usize {
        self.transients().1
    }

    /// Is `i` an upper transient, `σ⁻¹(i) < i < σ(i)`?
    fn is_upper_transient(&self, inv: &[usize], i: usize) -> bool {
        inv[i - 1] < i && i < self.word[i - 1]
    }

    /// Is `i` a lower transient, `σ(i) < i < σ⁻¹(i)`?
    fn is_lower_transient(&self, inv: &[usize], i: usize) -> bool {
        self.word[i - 1] < i && i < inv[i - 1]
    }

    /// Counts for `k` in `1..=n+1`.
    pub fn partial_transients(&self, k: usize) -> Result<PartialTransients> {
        let n = self.len();
        if k == 0 || k > n + 1 {
            return Err(Error::IndexOutOfRange { k, lo: 1, hi: n + 1 });
        }
        let inv = self.inverse_word();
        let below = 1..k.min(n + 1);
        let ut_minus = below.clone().filter(|&i| self.is_upper_transient(&inv, i)).count();
        let lt_minus = below.filter(|&i| self.is_lower_transient(&inv, i)).count();
        let alpha = (k..=n).filter(|&i| self.word[i - 1] < k).count();
        Ok(PartialTransients { ut_minus, lt_minus, alpha })
    }

    /// Lower transients, in increasing order.
    pub fn lower_transients(&self) -> Vec<usize> {
        let inv = self.inverse_word();
        (1..=self.len()).filter(|&i| self.is_lower_transient(&inv, i)).collect()
    }

    pub fn ddes(&self) -> usize {
        self.word.windows(3).filter(|w| w[0] > w[1] && w[1] > w[2]).count()
    }

    pub fn dasc(&self) -> usize {
        self.word.windows(3).filter(|w| w[0] < w[1] && w[1] < w[2]).count()
    }

    /// Occurrences of the dashed pattern 31-2: positions `a, a+1, b` with
    /// `b > a+1` and `σ(a+1) < σ(b) < σ(a)`.
    pub fn occ31_2(&self) -> usize {
        let w = &self.word;
        let n = w.len();
        let mut count = 0;
        for a in 0..n.saturating_sub(1) {
            let (hi, lo) = (w[a], w[a + 1]);
            if lo < hi {
                count += w[a + 2..].iter().filter(|&&v| lo < v && v < hi).count();
            }
        }
        count
    }

    pub fn stat_profile(&self) -> StatProfile {
        let (ut, lt) = self.transients();
        StatProfile {
            crs: self.crs(),
            inv: self.inv(),
            exc: self.exc(),
            nes: self.nes(),
            ut,
            lt,
            ddes: self.ddes(),
            dasc: self.dasc(),
            occ31_2: self.occ31_2(),
        }
    }
}

/// Compact rendering: `4735126` when `n ≤ 9`, `4,7,3,...` otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            for (idx, v) in self.word.iter().enumerate() {
                if idx > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Parses the compact digit form (`n ≤ 9`) or the comma form. The empty
/// string is the empty permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |what: &str| Error::InvalidArgument(alloc::format!("cannot parse `{what}` as a permutation"));
        let values: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',').map(|tok| tok.trim().parse::<usize>().map_err(|_| bad(s))).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad(s))).collect::<Result<_>>()?
        };
        if !s.contains(',') && values.len() > 9 {
            return Err(Error::InvalidArgument(String::from("permutations longer than 9 must use the comma form")));
        }
        Permutation::from_word(&values)
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next: Option<Vec<usize>> = Some((1..=n).collect());
    core::iter::from_fn(move || {
        let current = next.take()?;
        let mut w = current.clone();
        if next_lex(&mut w) {
            next = Some(w);
        }
        Some(Permutation { word: current })
    })
}

fn next_lex(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn from_word_accepts_bijections() {
        let perm = Permutation::from_word(&[4, 7, 3, 5, 1, 2, 6]).unwrap();
        assert_eq!(perm.len(), 7);
        assert!(Permutation::from_word(&[]).unwrap().is_empty());
    }

    #[test]
    fn from_word_names_offending_index() {
        assert_eq!(Permutation::from_word(&[1, 1, 2]), Err(Error::DuplicateValue { index: 2, value: 1 }));
        assert_eq!(Permutation::from_word(&[0, 1]), Err(Error::ZeroValue { index: 1 }));
        assert_eq!(Permutation::from_word(&[1, 5]), Err(Error::ValueOutOfRange { index: 2, value: 5, len: 2 }));
    }

    #[test]
    fn figure_crossings() {
        let c = p("4735126").crossings();
        let pairs: Vec<_> = c.iter().map(|x| (x.i, x.j, x.side)).collect();
        assert_eq!(pairs, [(1, 2, ArcSide::Upper), (5, 6, ArcSide::Lower), (6, 7, ArcSide::Lower)]);
        assert_eq!(p("4735126").crs(), 3);
    }

    #[test]
    fn small_crossings() {
        assert!(Permutation::identity(6).crossings().is_empty());
        let c = p("312").crossings();
        assert_eq!(c, [CrossingPair { i: 2, j: 3, side: ArcSide::Lower }]);
    }

    #[test]
    fn profile_of_figure_permutation() {
        let s = p("4735126").stat_profile();
        assert_eq!((s.crs, s.inv, s.exc, s.nes, s.ut, s.lt), (3, 12, 3, 3, 1, 1));
        assert_eq!(Permutation::identity(7).stat_profile(), StatProfile { dasc: 5, ..Default::default() });
        assert_eq!(p("3142").occ31_2(), 1);
    }

    #[test]
    fn symmetry_examples() {
        let pi = p("4135762");
        assert_eq!(pi.apply(Symmetry::R), p("2675314"));
        assert_eq!(pi.apply(Symmetry::C), p("4753126"));
        assert_eq!(pi.apply(Symmetry::I), p("2731465"));
        assert_eq!(pi.apply(Symmetry::Rc), p("6213574"));
        assert_eq!(pi.apply(Symmetry::Rci), p("3247516"));
        assert_eq!(pi.apply(Symmetry::Id), pi);
    }

    #[test]
    fn symmetry_names_round_trip() {
        for s in Symmetry::ALL {
            assert_eq!(s.name().parse::<Symmetry>().unwrap(), s);
        }
        assert!(matches!("x".parse::<Symmetry>(), Err(Error::UnknownSymmetry(_))));
    }

    #[test]
    fn direct_sum_example() {
        let s = p("1432").direct_sum(&p("4231"));
        assert_eq!(s, p("14328675"));
        assert_eq!(s.crs(), p("1432").crs() + p("4231").crs());
        assert_eq!(Permutation::empty().direct_sum(&p("4231")), p("4231"));
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(p("3142").insert(2, 3).unwrap(), p("43152"));
        assert_eq!(p("3142").insert_inverse(2, 3).unwrap(), p("23514"));
        let q = p("3142").insert(2, 1).unwrap();
        assert_eq!(q, p("41253"));
        assert_eq!(q.crs(), 2);
        assert!(p("12").insert(4, 1).is_err());
        assert!(p("12").insert(1, 4).is_err());
        assert!(p("12").insert(0, 1).is_err());
    }

    #[test]
    fn partial_transient_examples() {
        let t = p("3142").partial_transients(2).unwrap();
        assert_eq!((t.ut_minus, t.lt_minus, t.alpha), (0, 0, 1));
        let t = p("3142").partial_transients(1).unwrap();
        assert_eq!((t.ut_minus, t.lt_minus, t.alpha), (0, 0, 0));
        let t = p("4735126").partial_transients(8).unwrap();
        assert_eq!((t.ut_minus, t.lt_minus, t.alpha), (1, 1, 0));
        assert!(p("12").partial_transients(0).is_err());
        assert!(p("12").partial_transients(4).is_err());
    }

    #[test]
    fn compact_and_comma_forms() {
        let long = Permutation::from_word(&[4, 7, 3, 5, 1, 2, 6, 10, 8, 9]).unwrap();
        assert_eq!(long.to_string(), "4,7,3,5,1,2,6,10,8,9");
        assert_eq!("4,7,3,5,1,2,6,10,8,9".parse::<Permutation>().unwrap(), long);
        assert_eq!(p("4735126").to_string(), "4735126");
        assert!("4735a26".parse::<Permutation>().is_err());
    }

    #[test]
    fn lexicographic_generation() {
        let all: Vec<_> = all_permutations(3).map(|x| x.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(6).count(), 720);
    }
}
