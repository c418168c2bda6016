//! Checks that run over every permutation of `S_n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{cex, compare_rows, formulas, Verifier};
use crate::error::Result;
use crate::pattern::{ClassSelector, PatternSet};
use crate::perm::{all_permutations, ArcSide, Permutation, Symmetry};
use crate::report::{CheckReport, Counterexample};

type Outcome = core::result::Result<(), Counterexample>;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Verifier<'_> {
    /// `crs = inv - exc - 2·nes` on every permutation of length `≤ n_max`.
    pub fn check_crs_inv_exc_nes(&self, n_max: usize) -> Result<CheckReport> {
        let name = "check_crs_inv_exc_nes";
        for n in 0..=n_max {
            for p in all_permutations(n) {
                let lhs = self.crs(&p) as i64;
                let rhs = p.inv() as i64 - p.exc() as i64 - 2 * p.nes() as i64;
                if lhs != rhs {
                    return Ok(CheckReport::fail(name, (0, n_max), cex(n, &p, lhs, rhs)));
                }
            }
        }
        Ok(CheckReport::pass(name, (0, n_max)))
    }

    /// Inserting 1 at position `k` changes the crossing number by
    /// `ut_k^- - lt_k^- + α_k`. Sweeps every `σ` with `|σ| < n_max`.
    pub fn check_lemma_insert(&self, n_max: usize) -> Result<CheckReport> {
        let name = "check_lemma_insert";
        let hi = n_max.saturating_sub(1);
        for n in 0..n_max {
            for p in all_permutations(n) {
                let base = self.crs(&p) as i64;
                for k in 1..=n + 1 {
                    let t = p.partial_transients(k)?;
                    let lhs = self.crs(&p.insert(k, 1)?) as i64;
                    let rhs = base + t.ut_minus as i64 - t.lt_minus as i64 + t.alpha as i64;
                    if lhs != rhs {
                        let witness = format!("sigma={p}, k={k}");
                        return Ok(CheckReport::fail(name, (0, hi), cex(n, witness, lhs, rhs)));
                    }
                }
            }
        }
        Ok(CheckReport::pass(name, (0, hi)))
    }

    /// `crs(σ⁻¹) = crs(rc(σ)) = crs(σ) + ut(σ) - lt(σ)`, and the lower
    /// transients are exactly the `i` with `(i, σ⁻¹(i))` a lower crossing.
    pub fn check_lemma_symmetry(&self, n_max: usize) -> Result<CheckReport> {
        let range = (0, n_max);
        let mut parts = Vec::new();
        for (label, sym) in [("inverse", Symmetry::I), ("reverse_complement", Symmetry::Rc)] {
            let outcome = self.sweep(n_max, |p| {
                let (ut, lt) = p.transients();
                let lhs = self.crs(&p.apply(sym)) as i64;
                let rhs = self.crs(p) as i64 + ut as i64 - lt as i64;
                (lhs != rhs).then(|| cex(p.len(), p, lhs, rhs))
            });
            parts.push(CheckReport::from_outcome(label, range, outcome));
        }
        let outcome = self.sweep(n_max, |p| {
            let lower: BTreeSet<usize> = p.lower_transients().into_iter().collect();
            let inv = p.inverse();
            let crossings = p.crossings();
            (1..=p.len()).find_map(|i| {
                let j = inv.value(i);
                let is_crossing = crossings.iter().any(|c| c.i == i && c.j == j && c.side == ArcSide::Lower);
                (lower.contains(&i) != is_crossing)
                    .then(|| cex(p.len(), format!("sigma={p}, i={i}"), lower.contains(&i), is_crossing))
            })
        });
        parts.push(CheckReport::from_outcome("lower_transient_iff_lower_crossing", range, outcome));
        Ok(CheckReport::composite("check_lemma_symmetry", range, parts))
    }

    fn sweep(&self, n_max: usize, mut test: impl FnMut(&Permutation) -> Option<Counterexample>) -> Outcome {
        for n in 0..=n_max {
            for p in all_permutations(n) {
                if let Some(c) = test(&p) {
                    return Err(c);
                }
            }
        }
        Ok(())
    }

    /// The maps `σ ↦ σ^{-(k,1)}` from `S_{n-1}` onto `S_n^k`: bijectivity,
    /// the crossing law for `k ∈ {n-1, n}`, and the two unrestricted
    /// recurrences that follow.
    pub fn check_prop25_prop26(&self, n_max: usize) -> Result<CheckReport> {
        let range = (1, n_max);
        let mut parts = Vec::new();

        let mut bijection: Outcome = Ok(());
        let mut crossing_law: Outcome = Ok(());
        'outer: for n in 1..=n_max {
            let sources: Vec<Permutation> = all_permutations(n - 1).collect();
            for k in 1..=n {
                let mut images = BTreeSet::new();
                for s in &sources {
                    let img = s.insert_inverse(k, 1)?;
                    if img.value(k) != 1 {
                        bijection = Err(cex(n, format!("sigma={s}, k={k}"), &img, "value 1 at position k"));
                        break 'outer;
                    }
                    images.insert(img.clone());
                    if crossing_law.is_ok() && (k == n || k + 1 == n) {
                        let bump = usize::from(k + 1 == n && s.value(n - 1) < n - 1);
                        let lhs = self.crs(&img);
                        let rhs = self.crs(s) + bump;
                        if lhs != rhs {
                            crossing_law = Err(cex(n, format!("sigma={s}, k={k}"), lhs, rhs));
                        }
                    }
                }
                if images.len() != factorial(n - 1) {
                    bijection = Err(cex(n, format!("k={k}"), images.len(), factorial(n - 1)));
                    break 'outer;
                }
            }
        }
        parts.push(CheckReport::from_outcome("phi_bijection", range, bijection));
        parts.push(CheckReport::from_outcome("phi_crossing_law", range, crossing_law));

        let empty = PatternSet::empty();
        parts.push(compare_rows("last_one_recurrence", 1, n_max, "F_n^n = F_{n-1}", |n| {
            Ok((self.dist(n, &empty, ClassSelector::FirstValueOneAt(n))?, self.full(n - 1, &empty)?))
        })?);
        parts.push(compare_rows("second_last_one_recurrence", 2, n_max, "F_n^{n-1} = qF_{n-1} + (1-q)F_{n-2}", |n| {
            let lhs = self.dist(n, &empty, ClassSelector::FirstValueOneAt(n - 1))?;
            let rhs = formulas::q_blend(&self.full(n - 1, &empty)?, &self.full(n - 2, &empty)?)?;
            Ok((lhs, rhs))
        })?);
        Ok(CheckReport::composite("check_prop25_prop26", range, parts))
    }

    /// `Ψ_{n,k}: σ^{(k,1)} ↦ rc(σ)^{(n+1-k,1)}` is a crossing-preserving
    /// bijection `S_n^k → S_n^{n+1-k}`; the four boundary classes are
    /// equidistributed; `F_{2m}(q)` has only even coefficients.
    pub fn check_thm43_cor44_cor45(&self, n_max: usize) -> Result<CheckReport> {
        let range = (1, n_max);
        let mut parts = Vec::new();

        let mut bijection: Outcome = Ok(());
        let mut preserving: Outcome = Ok(());
        'outer: for n in 1..=n_max {
            let sources: Vec<Permutation> = all_permutations(n - 1).collect();
            for k in 1..=n {
                let target = n + 1 - k;
                let mut images = BTreeSet::new();
                for s in &sources {
                    let from = s.insert(k, 1)?;
                    let to = s.apply(Symmetry::Rc).insert(target, 1)?;
                    if to.value(target) != 1 {
                        bijection = Err(cex(n, format!("{from} (k={k})"), &to, "value 1 at position n+1-k"));
                        break 'outer;
                    }
                    if preserving.is_ok() && self.crs(&from) != self.crs(&to) {
                        preserving = Err(cex(n, format!("{from} -> {to}"), self.crs(&from), self.crs(&to)));
                    }
                    images.insert(to);
                }
                if images.len() != factorial(n - 1) {
                    bijection = Err(cex(n, format!("k={k}"), images.len(), factorial(n - 1)));
                    break 'outer;
                }
            }
        }
        parts.push(CheckReport::from_outcome("psi_bijection", range, bijection));
        parts.push(CheckReport::from_outcome("psi_preserves_crossings", range, preserving));

        let empty = PatternSet::empty();
        let mut equi: Outcome = Ok(());
        'equi: for n in 1..=n_max {
            for k in 1..=n {
                let flip = n + 1 - k;
                let classes = [
                    ClassSelector::LastPositionValue(k),
                    ClassSelector::FirstValueOneAt(flip),
                    ClassSelector::FirstValueOneAt(k),
                    ClassSelector::LastPositionValue(flip),
                ];
                let first = self.dist(n, &empty, classes[0])?;
                for sel in &classes[1..] {
                    let other = self.dist(n, &empty, *sel)?;
                    if other != first {
                        equi = Err(cex(n, format!("k={k}, {:?} vs {:?}", classes[0], sel), &first, &other));
                        break 'equi;
                    }
                }
            }
        }
        parts.push(CheckReport::from_outcome("four_way_equidistribution", range, equi));

        let mut even: Outcome = Ok(());
        for n in (2..=n_max).step_by(2) {
            let f = self.full(n, &empty)?;
            if let Some(r) = f.coeffs().iter().position(|c| c % 2 != 0) {
                even = Err(cex(n, format!("coefficient of q^{r}"), f.coeff(r), "an even number"));
                break;
            }
        }
        parts.push(CheckReport::from_outcome("even_coefficients", (2, n_max), even));
        Ok(CheckReport::composite("check_thm43_cor44_cor45", range, parts))
    }
}
