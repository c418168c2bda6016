use alloc::vec::Vec;

use super::{QPoly, QSeries};
use crate::error::{Error, Result};

/// A polynomial in `q` and `z`, stored densely by powers of `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    z_coeffs: Vec<QPoly>,
}

impl BiPoly {
    pub fn new(mut z_coeffs: Vec<QPoly>) -> Self {
        while z_coeffs.last().is_some_and(QPoly::is_zero) {
            z_coeffs.pop();
        }
        BiPoly { z_coeffs }
    }

    pub fn one() -> Self {
        BiPoly::new(alloc::vec![QPoly::one()])
    }

    /// `c·z^power`.
    pub fn term(c: QPoly, power: usize) -> Self {
        let mut z_coeffs = alloc::vec![QPoly::zero(); power + 1];
        z_coeffs[power] = c;
        BiPoly::new(z_coeffs)
    }

    pub fn z_coeff(&self, power: usize) -> QPoly {
        self.z_coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn z_coeffs(&self) -> &[QPoly] {
        &self.z_coeffs
    }

    pub fn checked_add(&self, other: &BiPoly) -> Result<BiPoly> {
        let len = self.z_coeffs.len().max(other.z_coeffs.len());
        let z_coeffs = (0..len).map(|i| self.z_coeff(i).checked_add(&other.z_coeff(i))).collect::<Result<Vec<_>>>()?;
        Ok(BiPoly::new(z_coeffs))
    }

    pub fn checked_sub(&self, other: &BiPoly) -> Result<BiPoly> {
        let neg = other.z_coeffs.iter().map(QPoly::checked_neg).collect::<Result<Vec<_>>>()?;
        self.checked_add(&BiPoly::new(neg))
    }

    pub fn checked_mul(&self, other: &BiPoly) -> Result<BiPoly> {
        if self.z_coeffs.is_empty() || other.z_coeffs.is_empty() {
            return Ok(BiPoly::default());
        }
        let mut z_coeffs = alloc::vec![QPoly::zero(); self.z_coeffs.len() + other.z_coeffs.len() - 1];
        for (i, a) in self.z_coeffs.iter().enumerate() {
            for (j, b) in other.z_coeffs.iter().enumerate() {
                z_coeffs[i + j] = z_coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(BiPoly::new(z_coeffs))
    }

    pub fn to_series(&self, order: usize) -> QSeries {
        QSeries::from_coeffs(order, self.z_coeffs.clone())
    }
}

/// `numerator / denominator` with a denominator whose `z^0` coefficient is
/// the constant `±1`, so the expansion stays in `ℤ[q][[z]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    numerator: BiPoly,
    denominator: BiPoly,
}

impl RationalGf {
    pub fn new(numerator: BiPoly, denominator: BiPoly) -> Result<Self> {
        let c0 = denominator.z_coeff(0);
        if !(c0.is_constant(1) || c0.is_constant(-1)) {
            return Err(Error::NotInvertible);
        }
        Ok(RationalGf { numerator, denominator })
    }

    pub fn polynomial(p: BiPoly) -> Self {
        RationalGf { numerator: p, denominator: BiPoly::one() }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.denominator
    }

    pub fn checked_add(&self, other: &RationalGf) -> Result<RationalGf> {
        let num = self
            .numerator
            .checked_mul(&other.denominator)?
            .checked_add(&other.numerator.checked_mul(&self.denominator)?)?;
        let den = self.denominator.checked_mul(&other.denominator)?;
        RationalGf::new(num, den)
    }

    pub fn checked_mul(&self, other: &RationalGf) -> Result<RationalGf> {
        RationalGf::new(
            self.numerator.checked_mul(&other.numerator)?,
            self.denominator.checked_mul(&other.denominator)?,
        )
    }

    /// The unique series `S` with `denominator · S ≡ numerator (mod z^{order+1})`.
    pub fn expand(&self, order: usize) -> Result<QSeries> {
        let inv = self.denominator.to_series(order).inverse()?;
        self.numerator.to_series(order).checked_mul(&inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.to_vec())
    }

    fn bi(z: &[&[i64]]) -> BiPoly {
        BiPoly::new(z.iter().map(|c| poly(c)).collect())
    }

    #[test]
    fn pair_gf_prefix() {
        // (1 - qz) / (1 - (1+q)z - (1-q)z^2), expanded by hand to z^3.
        let g = RationalGf::new(bi(&[&[1], &[0, -1]]), bi(&[&[1], &[-1, -1], &[-1, 1]])).unwrap();
        let s = g.expand(3).unwrap();
        assert_eq!(s.coeffs(), &[poly(&[1]), poly(&[1]), poly(&[2]), poly(&[3, 1])]);
    }

    #[test]
    fn geometric_and_constant() {
        let geo = RationalGf::new(BiPoly::one(), bi(&[&[1], &[-1]])).unwrap();
        assert!(geo.expand(4).unwrap().coeffs().iter().all(|c| c.is_constant(1)));
        let one = RationalGf::polynomial(BiPoly::one());
        assert_eq!(one.expand(5).unwrap(), QSeries::one(5));
    }

    #[test]
    fn non_unit_denominator_is_rejected() {
        assert_eq!(RationalGf::new(BiPoly::one(), bi(&[&[2], &[1]])), Err(Error::NotInvertible));
        assert_eq!(RationalGf::new(BiPoly::one(), bi(&[&[0], &[1]])), Err(Error::NotInvertible));
    }

    #[test]
    fn sums_and_products() {
        let geo = RationalGf::new(BiPoly::one(), bi(&[&[1], &[-1]])).unwrap();
        // 1/(1-z) squared has coefficients n+1.
        let sq = geo.checked_mul(&geo).unwrap().expand(5).unwrap();
        for (n, c) in sq.coeffs().iter().enumerate() {
            assert!(c.is_constant(n as i64 + 1));
        }
        let twice = geo.checked_add(&geo).unwrap().expand(3).unwrap();
        assert!(twice.coeffs().iter().all(|c| c.is_constant(2)));
    }
}
