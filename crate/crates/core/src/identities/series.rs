//! Checks on distribution rows and generating series of avoidance classes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{cex, compare_rows, formulas, set, Verifier};
use crate::distribution::Statistic;
use crate::error::Result;
use crate::pattern::{ClassSelector, PatternSet};
use crate::qpoly::{continued_fraction, series_relation_check, QPoly, QSeries};
use crate::report::CheckReport;

impl Verifier<'_> {
    /// The four boundary relations for `S_n^1`, `S_n^2`, `S_n^{n-1}` and
    /// `S_n^n`, each tested only when its hypothesis on the positions of 1
    /// in the patterns holds. The empty set satisfies every hypothesis.
    pub fn check_prop21(&self, t: &PatternSet, n_max: usize) -> Result<CheckReport> {
        let (guards, m) = if t.is_empty() {
            ([true; 4], 2)
        } else {
            let (lo, hi) = t.first_value_preimage_bounds()?;
            let m = t.uniform_length().unwrap_or(2);
            ([lo > 1, lo > 2, hi + 1 < m, hi < m], m)
        };
        let hypotheses = ["min T^-1(1) > 1", "min T^-1(1) > 2", "max T^-1(1) < m-1", "max T^-1(1) < m"];
        let lo = m.max(2);
        let t_inv = t.inverse_set();
        let mut parts = Vec::new();
        for (idx, name) in
            ["first_position", "second_position", "second_last_position", "last_position"].into_iter().enumerate()
        {
            if !guards[idx] {
                parts.push(CheckReport::skipped(
                    name,
                    (lo, n_max),
                    format!("hypothesis `{}` fails for {t}", hypotheses[idx]),
                ));
                continue;
            }
            let report = match idx {
                0 => compare_rows(name, lo, n_max, "F_n^1(T) = F_{n-1}(T)", |n| {
                    Ok((self.dist(n, t, ClassSelector::FirstValueOneAt(1))?, self.full(n - 1, t)?))
                })?,
                1 => compare_rows(name, lo, n_max, "F_n^2(T) = qF_{n-1}(T) + (1-q)F_{n-2}(T)", |n| {
                    let lhs = self.dist(n, t, ClassSelector::FirstValueOneAt(2))?;
                    Ok((lhs, formulas::q_blend(&self.full(n - 1, t)?, &self.full(n - 2, t)?)?))
                })?,
                2 => compare_rows(name, lo, n_max, "F_n^{n-1}(T) = qF_{n-1}(T^-1) + (1-q)F_{n-1,n-1}(T^-1)", |n| {
                    let lhs = self.dist(n, t, ClassSelector::FirstValueOneAt(n - 1))?;
                    let last = self.dist(n - 1, &t_inv, ClassSelector::LastPositionValue(n - 1))?;
                    Ok((lhs, formulas::q_blend(&self.full(n - 1, &t_inv)?, &last)?))
                })?,
                _ => compare_rows(name, lo, n_max, "F_n^n(T) = F_{n-1}(T^-1)", |n| {
                    Ok((self.dist(n, t, ClassSelector::FirstValueOneAt(n))?, self.full(n - 1, &t_inv)?))
                })?,
            };
            parts.push(report);
        }
        Ok(CheckReport::composite(format!("check_prop21[{t}]"), (lo, n_max), parts))
    }

    /// [`check_prop21`](Self::check_prop21) over the sets the rest of the
    /// suite relies on.
    pub fn check_prop21_standard(&self, n_max: usize) -> Result<CheckReport> {
        let parts = ["321,231", "123,132", "321", "123", "-"]
            .iter()
            .map(|s| self.check_prop21(&set(s), n_max))
            .collect::<Result<Vec<_>>>()?;
        Ok(CheckReport::composite("check_prop21", (2, n_max), parts))
    }

    /// Rational generating functions of `S(321,231)`, `S(123,132)` and
    /// `S(123,213)`, their linear recurrences, and the closed form.
    pub fn check_thm12(&self, order: usize) -> Result<CheckReport> {
        let range = (0, order);
        let a = set("321,231");
        let b = set("123,132");
        let c = set("123,213");
        let sa = self.series(&a, order)?;
        let sb = self.series(&b, order)?;
        let sc = self.series(&c, order)?;
        let gf_a = formulas::pair_321_231_gf().expand(order)?;
        let gf_b = formulas::pair_123_132_gf()?.expand(order)?;

        let mut parts = alloc::vec![
            series_relation_check("gf_321_231", &sa, &gf_a)?,
            series_relation_check("gf_123_132", &sb, &gf_b)?,
            series_relation_check("gf_123_213", &sc, &gf_b)?,
        ];
        let one_plus_q = QPoly::from_coeffs(alloc::vec![1, 1]);
        let one_minus_q = QPoly::from_coeffs(alloc::vec![1, -1]);
        parts.push(compare_rows("recurrence_321_231", 2, order, "F_n = (1+q)F_{n-1} + (1-q)F_{n-2}", |n| {
            let rhs =
                one_plus_q.checked_mul(sa.coeff(n - 1))?.checked_add(&one_minus_q.checked_mul(sa.coeff(n - 2))?)?;
            Ok((sa.coeff(n).clone(), rhs))
        })?);
        parts.push(compare_rows("recurrence_123_132", 2, order, "F_n = (1+q)F_{n-1} + 1 - q", |n| {
            let rhs = one_plus_q.checked_mul(sb.coeff(n - 1))?.checked_add(&one_minus_q)?;
            Ok((sb.coeff(n).clone(), rhs))
        })?);
        for (name, s) in [("closed_form_123_132", &sb), ("closed_form_123_213", &sc)] {
            parts.push(compare_rows(name, 1, order, "((1+q)^{n-1} - 1 + q)/q", |n| {
                Ok((s.coeff(n).clone(), formulas::pair_123_132_closed_form(n)?))
            })?);
        }
        Ok(CheckReport::composite("check_thm12", range, parts))
    }

    /// Pascal rows for `S_n^{n-1}(123,132)` and `S_{n,2}(123,213)`, and the
    /// coefficient formula `δ_{k,0} + C(n-1, k+1)` for both 123 pairs.
    pub fn check_cor32(&self, n_max: usize) -> Result<CheckReport> {
        let mut parts = Vec::new();
        let b = set("123,132");
        let c = set("123,213");
        parts.push(compare_rows("pascal_first_one_at_n_minus_1", 2, n_max, "binomial(n-2, k)", |n| {
            let lhs = self.dist(n, &b, ClassSelector::FirstValueOneAt(n - 1))?;
            Ok((lhs, QPoly::from_coeffs(formulas::pascal_row(n - 2))))
        })?);
        parts.push(compare_rows("pascal_last_value_2", 2, n_max, "binomial(n-2, k)", |n| {
            let lhs = self.dist(n, &c, ClassSelector::LastPositionValue(2))?;
            Ok((lhs, QPoly::from_coeffs(formulas::pascal_row(n - 2))))
        })?);
        for (name, s) in [("coefficients_123_132", &b), ("coefficients_123_213", &c)] {
            parts.push(compare_rows(name, 1, n_max, "delta(k,0) + binomial(n-1, k+1)", |n| {
                Ok((self.full(n, s)?, formulas::delta_binomial_row(n)))
            })?);
        }
        Ok(CheckReport::composite("check_cor32", (1, n_max), parts))
    }

    /// The three relations between 312- and 231-avoiders, and the
    /// recurrences they come from.
    pub fn check_thm13(&self, order: usize) -> Result<CheckReport> {
        let range = (0, order);
        let mut parts = Vec::new();
        let s312 = self.series(&set("312"), order)?;
        let s231 = self.series(&set("231"), order)?;

        let rhs = QSeries::one(order).checked_sub(&s231.mul_z())?.inverse()?;
        parts.push(series_relation_check("gf_312", &s312, &rhs)?);

        let z1 = formulas::z_over_one_minus_z();
        let z1_series = z1.expand(order)?;
        let s312_123 = self.series(&set("312,123"), order)?;
        let s231_123 = self.series(&set("231,123"), order)?;
        let rhs =
            QSeries::one(order).checked_add(&z1_series.checked_mul(&z1_series)?)?.checked_add(&s231_123.mul_z())?;
        parts.push(series_relation_check("gf_312_123", &s312_123, &rhs)?);

        let taus = ["132", "213"];
        let pair = |a: &str, tau: &str| -> Result<QSeries> { self.series(&set(&format!("{a},{tau}")), order) };
        let s312_t = [pair("312", taus[0])?, pair("312", taus[1])?];
        let s231_t = [pair("231", taus[0])?, pair("231", taus[1])?];
        for (i, tau) in taus.iter().enumerate() {
            for (j, tau_p) in taus.iter().enumerate() {
                let rhs = QSeries::one(order).checked_add(&z1_series.checked_mul(&s231_t[j])?)?;
                let name = format!("gf_312_{tau}_from_231_{tau_p}");
                parts.push(series_relation_check(&name, &s312_t[i], &rhs)?);
            }
        }

        parts.push(compare_rows("recurrence_312", 1, order, "F_n(312) = sum F_j(231) F_{n-1-j}(312)", |n| {
            let mut acc = QPoly::zero();
            for j in 0..n {
                acc = acc.checked_add(&s231.coeff(j).checked_mul(s312.coeff(n - 1 - j))?)?;
            }
            Ok((s312.coeff(n).clone(), acc))
        })?);
        parts.push(compare_rows("recurrence_123_312", 2, order, "F_n(123,312) = n-1 + F_{n-1}(123,231)", |n| {
            let rhs = QPoly::constant(n as i64 - 1).checked_add(s231_123.coeff(n - 1))?;
            Ok((s312_123.coeff(n).clone(), rhs))
        })?);
        for (i1, t1) in taus.iter().enumerate() {
            for (i2, t2) in taus.iter().enumerate() {
                for (i3, t3) in taus.iter().enumerate() {
                    let name = format!("recurrence_312_{t1}_{t2}_{t3}");
                    parts.push(compare_rows(name, 2, order, "F_n(312,t1) = F_{n-1}(312,t2) + F_{n-1}(231,t3)", |n| {
                        let rhs = s312_t[i2].coeff(n - 1).checked_add(s231_t[i3].coeff(n - 1))?;
                        Ok((s312_t[i1].coeff(n).clone(), rhs))
                    })?);
                }
            }
        }
        Ok(CheckReport::composite("check_thm13", range, parts))
    }

    /// The common crossing series of `S(321)`, `S(132)` and `S(213)`: its
    /// quadratic recurrence, equality of the three classes, the continued
    /// fraction, and agreement with `occ31_2` over `S(231)`.
    pub fn check_thm11(&self, order: usize, depth: usize) -> Result<CheckReport> {
        let range = (0, order);
        let mut parts = Vec::new();
        let names = ["321", "132", "213"];
        let series = names.iter().map(|tau| self.series(&set(tau), order)).collect::<Result<Vec<_>>>()?;
        for (tau, s) in names.iter().zip(&series) {
            let name = format!("recurrence_{tau}");
            parts.push(compare_rows(name, 1, order, "F_n = F_{n-1} + sum_{k=0}^{n-2} q^k F_k F_{n-1-k}", |n| {
                let mut acc = s.coeff(n - 1).clone();
                for k in 0..n.saturating_sub(1) {
                    acc = acc.checked_add(&s.coeff(k).checked_mul(s.coeff(n - 1 - k))?.shift(k))?;
                }
                Ok((s.coeff(n).clone(), acc))
            })?);
        }
        parts.push(series_relation_check("equal_321_132", &series[0], &series[1])?);
        parts.push(series_relation_check("equal_321_213", &series[0], &series[2])?);

        let cf = continued_fraction(&formulas::crossing_cf_levels(depth), order)?;
        let mut cf_report = series_relation_check("continued_fraction", &series[0], &cf)?;
        cf_report.name = format!("continued_fraction[depth={depth}]");
        parts.push(cf_report);

        let s231 = set("231");
        parts.push(compare_rows("occ31_2_over_231", 0, order, "occ31_2 on S_n(231) vs crs on S_n(321)", |n| {
            let lhs = self.source.distribution(n, &s231, ClassSelector::All, Statistic::Occ31_2)?;
            Ok((lhs, series[0].coeff(n).clone()))
        })?);
        Ok(CheckReport::composite("check_thm11", range, parts))
    }

    /// Closed form of `S_n(321,132)` and `S_n(321,213)`, nesting-freeness of
    /// 321-avoiders, and the crossing numbers of the rotation family.
    pub fn check_thm41(&self, n_max: usize) -> Result<CheckReport> {
        let range = (1, n_max);
        let mut parts = Vec::new();
        for tau in ["132", "213"] {
            let t = set(&format!("321,{tau}"));
            parts.push(compare_rows(
                format!("closed_form_321_{tau}"),
                1,
                n_max,
                "1 + sum_{k=1}^{n-1} [n-k]_{q^k}",
                |n| Ok((self.full(n, &t)?, formulas::pair_321_132_closed_form(n)?)),
            )?);
        }
        let nes = self.nesting_free_321(n_max)?;
        parts.push(nes);
        let mut alpha = Ok(());
        'outer: for n in 1..=n_max {
            for j in 1..=n {
                let a = formulas::alpha_family(n, j);
                let expected = (j - 1) * (n - j);
                if self.crs(&a) != expected {
                    alpha = Err(cex(n, format!("alpha_{j} = {a}"), self.crs(&a), expected));
                    break 'outer;
                }
            }
        }
        parts.push(CheckReport::from_outcome("alpha_family_crossings", range, alpha));
        Ok(CheckReport::composite("check_thm41", range, parts))
    }

    fn nesting_free_321(&self, n_max: usize) -> Result<CheckReport> {
        let name = "nesting_free_321";
        let t = set("321");
        for n in 0..=n_max {
            let d = self.source.distribution(n, &t, ClassSelector::All, Statistic::Nes)?;
            if d.degree().unwrap_or(0) > 0 {
                let witness = crate::pattern::enumerate(n, &t, ClassSelector::All)?
                    .find(|p| p.nes() > 0)
                    .map_or_else(String::new, |p| format!("{p}"));
                return Ok(CheckReport::fail(name, (0, n_max), cex(n, witness, &d, "constant")));
            }
        }
        Ok(CheckReport::pass(name, (0, n_max)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::BruteForce;
    use crate::report::Status;

    #[test]
    fn prop21_guards() {
        let v = Verifier::new(&BruteForce);
        let r = v.check_prop21(&set("321,231"), 7).unwrap();
        let statuses: Vec<_> = r.parts.iter().map(|p| p.status.label()).collect();
        assert_eq!(statuses, ["pass", "pass", "skipped", "skipped"]);
        let r = v.check_prop21(&set("123,132"), 7).unwrap();
        let statuses: Vec<_> = r.parts.iter().map(|p| p.status.label()).collect();
        assert_eq!(statuses, ["skipped", "skipped", "pass", "pass"]);
        let r = v.check_prop21(&set("321"), 7).unwrap();
        assert!(r.part("second_position").unwrap().passed());
        assert!(matches!(r.part("last_position").unwrap().status, Status::Skipped(_)));
        assert!(v.check_prop21(&PatternSet::empty(), 6).unwrap().parts.iter().all(|p| p.passed()));
    }

    #[test]
    fn series_checks_pass_at_small_order() {
        let v = Verifier::new(&BruteForce);
        assert!(v.check_thm12(7).unwrap().passed());
        assert!(v.check_cor32(7).unwrap().passed());
        assert!(v.check_thm41(7).unwrap().passed());
        let r = v.check_thm13(7).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = v.check_thm11(7, 16).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn shallow_fraction_is_detected() {
        let v = Verifier::new(&BruteForce);
        let r = v.check_thm11(6, 4).unwrap();
        assert!(r.failed());
    }
}
