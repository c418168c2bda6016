//! Classical pattern containment and enumeration of avoidance classes.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Symmetry};

/// Number of subsequences of `p` order-isomorphic to `tau`.
pub fn occurrences(p: &Permutation, tau: &Permutation) -> usize {
    let m = tau.len();
    if m == 0 || m > p.len() {
        return usize::from(m == 0);
    }
    let mut chosen = Vec::with_capacity(m);
    count_embeddings(p.word(), tau.word(), 0, &mut chosen)
}

/// Counts completions of `chosen` (values already matched to `pat[..chosen.len()]`).
fn count_embeddings(word: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> usize {
    let k = chosen.len();
    if k == pat.len() {
        return 1;
    }
    let remaining = pat.len() - k;
    let mut total = 0;
    for idx in start..=word.len() - remaining {
        let v = word[idx];
        if consistent(chosen, pat, k, v) {
            chosen.push(v);
            total += count_embeddings(word, pat, idx + 1, chosen);
            chosen.pop();
        }
    }
    total
}

#[inline]
fn consistent(chosen: &[usize], pat: &[usize], k: usize, v: usize) -> bool {
    chosen.iter().zip(pat).all(|(&c, &pc)| (c < v) == (pc < pat[k]))
}

/// Does `word` contain an occurrence of `pat` that uses its last entry?
fn ends_with_occurrence(word: &[usize], pat: &[usize]) -> bool {
    let m = pat.len();
    let t = word.len();
    if t < m {
        return false;
    }
    let last = word[t - 1];
    let top = pat[m - 1];
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    fn search(word: &[usize], pat: &[usize], last: usize, top: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        let m = pat.len();
        if k == m - 1 {
            return true;
        }
        let stop = word.len() - 1 - (m - 1 - k);
        for idx in start..=stop {
            let v = word[idx];
            if (v < last) != (pat[k] < top) || !consistent(chosen, pat, k, v) {
                continue;
            }
            chosen.push(v);
            if search(word, pat, last, top, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    search(word, pat, last, top, 0, &mut chosen)
}

/// A finite set of forbidden patterns, kept sorted lexicographically by word.
///
/// Every pattern has length at least 2, and no pattern may contain another.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn empty() -> Self {
        PatternSet::default()
    }

    pub fn new(patterns: Vec<Permutation>) -> Result<Self> {
        let mut patterns = patterns;
        for p in &patterns {
            if p.len() < 2 {
                return Err(Error::PatternTooShort(p.to_string()));
            }
        }
        patterns.sort();
        for pair in patterns.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicatePattern(pair[0].to_string()));
            }
        }
        for a in &patterns {
            for b in &patterns {
                if a != b && a.len() <= b.len() && occurrences(b, a) > 0 {
                    return Err(Error::RedundantPattern { inner: a.to_string(), outer: b.to_string() });
                }
            }
        }
        Ok(PatternSet { patterns })
    }

    /// Builds a set from compact words, e.g. `PatternSet::from_strs(&["321", "231"])`.
    pub fn from_strs(words: &[&str]) -> Result<Self> {
        let perms = words.iter().map(|w| w.parse()).collect::<Result<Vec<Permutation>>>()?;
        PatternSet::new(perms)
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Common pattern length, if all patterns share one.
    pub fn uniform_length(&self) -> Option<usize> {
        let m = self.patterns.first()?.len();
        self.patterns.iter().all(|p| p.len() == m).then_some(m)
    }

    /// Image of every pattern under `s`.
    pub fn transform(&self, s: Symmetry) -> PatternSet {
        let mut patterns: Vec<_> = self.patterns.iter().map(|p| p.apply(s)).collect();
        patterns.sort();
        PatternSet { patterns }
    }

    pub fn inverse_set(&self) -> PatternSet {
        self.transform(Symmetry::I)
    }

    /// Adds one pattern, revalidating the set.
    pub fn with(&self, extra: Permutation) -> Result<PatternSet> {
        let mut patterns = self.patterns.clone();
        patterns.push(extra);
        PatternSet::new(patterns)
    }

    /// `(min, max)` of the positions of the value 1 over all patterns.
    pub fn first_value_preimage_bounds(&self) -> Result<(usize, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyPatternSet);
        }
        if self.uniform_length().is_none() {
            return Err(Error::MixedPatternLengths);
        }
        let positions = self.patterns.iter().map(|p| p.inverse().value(1));
        let min = positions.clone().min().unwrap_or(0);
        let max = positions.max().unwrap_or(0);
        Ok((min, max))
    }

    /// All singletons `{τ}`, `τ ∈ S_m`, in lexicographic order.
    pub fn singletons(m: usize) -> Vec<PatternSet> {
        crate::perm::all_permutations(m).map(|p| PatternSet { patterns: vec![p] }).collect()
    }

    /// All two-element subsets of `S_m`, in lexicographic order.
    pub fn pairs(m: usize) -> Vec<PatternSet> {
        let all: Vec<_> = crate::perm::all_permutations(m).collect();
        let mut out = Vec::new();
        for (a, x) in all.iter().enumerate() {
            for y in &all[a + 1..] {
                out.push(PatternSet { patterns: vec![x.clone(), y.clone()] });
            }
        }
        out
    }
}

/// Comma-separated compact words, `-` for the empty set.
impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.patterns.is_empty() {
            return f.write_str("-");
        }
        for (idx, p) in self.patterns.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(PatternSet::empty());
        }
        let words: Vec<&str> = s.split(',').map(str::trim).collect();
        if words.iter().any(|w| w.is_empty()) {
            return Err(Error::InvalidArgument(alloc::format!("cannot parse pattern set `{s}`")));
        }
        PatternSet::from_strs(&words)
    }
}

/// Returns true iff `p` avoids every pattern of `set`.
pub fn avoids(p: &Permutation, set: &PatternSet) -> bool {
    set.patterns().iter().all(|tau| occurrences(p, tau) == 0)
}

/// Restricts the enumeration to a subclass of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassSelector {
    All,
    /// `S_n^k`: value 1 at position `k`.
    FirstValueOneAt(usize),
    /// `S_{n,k}`: value `k` at the last position.
    LastPositionValue(usize),
}

impl ClassSelector {
    pub fn validate(self, n: usize) -> Result<()> {
        match self {
            ClassSelector::All => Ok(()),
            ClassSelector::FirstValueOneAt(k) | ClassSelector::LastPositionValue(k) => {
                if k == 0 || k > n {
                    Err(Error::IndexOutOfRange { k, lo: 1, hi: n })
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn matches(self, p: &Permutation) -> bool {
        match self {
            ClassSelector::All => true,
            ClassSelector::FirstValueOneAt(k) => k >= 1 && k <= p.len() && p.value(k) == 1,
            ClassSelector::LastPositionValue(k) => !p.is_empty() && p.value(p.len()) == k,
        }
    }

    /// May `value` be placed at 1-based `position` of an `n`-word?
    #[inline]
    fn allows(self, n: usize, position: usize, value: usize) -> bool {
        match self {
            ClassSelector::All => true,
            ClassSelector::FirstValueOneAt(k) => (position == k) == (value == 1),
            ClassSelector::LastPositionValue(k) => (position == n) == (value == k),
        }
    }
}

/// Lazily yields `{σ ∈ S_n : σ avoids T, σ matches sel}` in lexicographic
/// order by backtracking, pruning any prefix that already contains a
/// forbidden pattern.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    patterns: Vec<Vec<usize>>,
    selector: ClassSelector,
    first: Option<usize>,
    word: Vec<usize>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    done: bool,
}

impl Avoiders {
    pub fn new(n: usize, set: &PatternSet, selector: ClassSelector) -> Result<Self> {
        selector.validate(n)?;
        Ok(Avoiders {
            n,
            patterns: set.patterns().iter().map(|p| p.word().to_vec()).collect(),
            selector,
            first: None,
            word: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor: vec![1; n + 1],
            done: false,
        })
    }

    /// Only the members whose first entry is `first`; the union over
    /// `first ∈ 1..=n` is the full class, in the same order.
    pub fn with_first_value(mut self, first: usize) -> Self {
        self.first = Some(first);
        self
    }

    fn allowed(&self, position: usize, value: usize) -> bool {
        if position == 1 {
            if let Some(f) = self.first {
                if value != f {
                    return false;
                }
            }
        }
        self.selector.allows(self.n, position, value)
    }

    fn violates(&self) -> bool {
        self.patterns.iter().any(|pat| ends_with_occurrence(&self.word, pat))
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::empty());
        }
        loop {
            let depth = self.word.len();
            let mut placed = false;
            let mut v = self.cursor[depth];
            while v <= self.n {
                if !self.used[v] && self.allowed(depth + 1, v) {
                    self.word.push(v);
                    if self.violates() {
                        self.word.pop();
                    } else {
                        self.used[v] = true;
                        self.cursor[depth] = v + 1;
                        placed = true;
                        break;
                    }
                }
                v += 1;
            }
            if placed {
                if self.word.len() == self.n {
                    let out = Permutation::from_word_unchecked(self.word.clone());
                    let last = self.word.pop().expect("word is full");
                    self.used[last] = false;
                    return Some(out);
                }
                self.cursor[depth + 1] = 1;
            } else {
                self.cursor[depth] = self.n + 1;
                match self.word.pop() {
                    Some(last) => self.used[last] = false,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// `S_n(T)` restricted by `sel`, in lexicographic order.
pub fn enumerate(n: usize, set: &PatternSet, sel: ClassSelector) -> Result<Avoiders> {
    Avoiders::new(n, set, sel)
}

/// Reference filter over all of `S_n`; slow, but shares no code with
/// [`Avoiders`] beyond [`occurrences`].
pub fn enumerate_by_filter(n: usize, set: &PatternSet, sel: ClassSelector) -> Result<Vec<Permutation>> {
    sel.validate(n)?;
    Ok(crate::perm::all_permutations(n).filter(|p| sel.matches(p) && avoids(p, set)).collect())
}
