use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::QPoly;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Counterexample};

/// A power series in `z` truncated after `z^order`, with polynomial
/// coefficients. Always holds exactly `order + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<QPoly>,
}

impl QSeries {
    /// Pads with zeros or truncates so the result has order `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPoly>) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        QSeries::constant(order, QPoly::one())
    }

    pub fn constant(order: usize, c: QPoly) -> Self {
        QSeries::from_coeffs(order, alloc::vec![c])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> &QPoly {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QPoly> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        QSeries::from_coeffs(order.min(self.order()), self.coeffs.clone())
    }

    fn zip_with(&self, other: &QSeries, f: impl Fn(&QPoly, &QPoly) -> Result<QPoly>) -> Result<QSeries> {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect::<Result<Vec<_>>>()?;
        Ok(QSeries { coeffs })
    }

    pub fn checked_add(&self, other: &QSeries) -> Result<QSeries> {
        self.zip_with(other, QPoly::checked_add)
    }

    pub fn checked_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.zip_with(other, QPoly::checked_sub)
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn checked_mul(&self, other: &QSeries) -> Result<QSeries> {
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = QPoly::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.checked_add(&a.checked_mul(b)?)?;
            }
            coeffs.push(acc);
        }
        Ok(QSeries { coeffs })
    }

    pub fn checked_scale(&self, c: &QPoly) -> Result<QSeries> {
        let coeffs = self.coeffs.iter().map(|a| a.checked_mul(c)).collect::<Result<Vec<_>>>()?;
        Ok(QSeries { coeffs })
    }

    /// Multiplies by `z`, dropping the term that falls past the order.
    pub fn mul_z(&self) -> QSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(QPoly::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        QSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be the constant `±1`.
    pub fn inverse(&self) -> Result<QSeries> {
        let c0 = &self.coeffs[0];
        let unit = if c0.is_constant(1) {
            1
        } else if c0.is_constant(-1) {
            -1
        } else {
            return Err(Error::NotInvertible);
        };
        let order = self.order();
        let mut inv: Vec<QPoly> = Vec::with_capacity(order + 1);
        inv.push(QPoly::constant(unit));
        for n in 1..=order {
            let mut acc = QPoly::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                acc = acc.checked_add(&a.checked_mul(&inv[n - k])?)?;
            }
            inv.push(acc.checked_scale(-unit)?);
        }
        Ok(QSeries { coeffs: inv })
    }

    /// Evaluates every coefficient at `q`.
    pub fn eval_q(&self, q: i64) -> Result<Vec<i64>> {
        self.coeffs.iter().map(|c| c.eval(q)).collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Coefficientwise comparison. A failure names the smallest differing
/// power of `z` and both coefficients.
pub fn series_relation_check(name: &str, lhs: &QSeries, rhs: &QSeries) -> Result<CheckReport> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch { left: lhs.order(), right: rhs.order() });
    }
    let range = (0, lhs.order());
    let first_diff = lhs.coeffs().iter().zip(rhs.coeffs()).position(|(a, b)| a != b);
    Ok(match first_diff {
        None => CheckReport::pass(name, range),
        Some(n) => CheckReport::fail(
            name,
            range,
            Counterexample {
                n,
                witness: String::from("coefficient of z^") + &n.to_string(),
                lhs: lhs.coeff(n).to_string(),
                rhs: rhs.coeff(n).to_string(),
            },
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn inverse_of_one_minus_z() {
        let s = QSeries::from_coeffs(4, alloc::vec![QPoly::one(), QPoly::constant(-1)]);
        let inv = s.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| c.is_constant(1)));
        assert_eq!(s.checked_mul(&inv).unwrap(), QSeries::one(4));
        let neg = QSeries::constant(3, QPoly::constant(-1));
        assert_eq!(neg.inverse().unwrap(), neg);
        assert_eq!(QSeries::constant(2, QPoly::constant(2)).inverse(), Err(Error::NotInvertible));
        assert_eq!(QSeries::constant(2, QPoly::q()).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn orders_combine_to_minimum() {
        let a = QSeries::one(5);
        let b = QSeries::one(3);
        assert_eq!(a.checked_add(&b).unwrap().order(), 3);
        assert_eq!(a.checked_mul(&b).unwrap().order(), 3);
        assert_eq!(a.truncate(2).order(), 2);
        assert_eq!(b.truncate(9).order(), 3);
    }

    #[test]
    fn mul_z_drops_top_term() {
        let s = QSeries::from_coeffs(2, alloc::vec![poly(&[1]), poly(&[2]), poly(&[3])]);
        assert_eq!(s.mul_z().coeffs(), &[QPoly::zero(), poly(&[1]), poly(&[2])]);
    }

    #[test]
    fn relation_check_reports_first_difference() {
        let a = QSeries::from_coeffs(3, alloc::vec![poly(&[1]), poly(&[1]), poly(&[2]), poly(&[3, 1])]);
        assert!(series_relation_check("same", &a, &a).unwrap().passed());
        let mut coeffs = a.coeffs().to_vec();
        coeffs[2] = poly(&[1, 1]);
        let b = QSeries::from_coeffs(3, coeffs);
        let r = series_relation_check("diff", &a, &b).unwrap();
        assert_eq!(r.status, Status::Fail);
        let cex = r.counterexample.unwrap();
        assert_eq!((cex.n, cex.lhs.as_str(), cex.rhs.as_str()), (2, "2", "1 + q"));
        assert!(matches!(
            series_relation_check("x", &a, &QSeries::one(2)),
            Err(Error::OrderMismatch { left: 3, right: 2 })
        ));
    }
}
