//! Exact polynomials in `q`, truncated series in `z` over them, rational
//! functions and finite continued fractions.
//!
//! Coefficients are `i64` and every arithmetic path is checked: an overflow
//! surfaces as [`Error::Overflow`] rather than a wrapped value. The operator
//! impls (`+`, `-`, `*`) panic on overflow and exist for tests and small
//! closed forms; library code uses the `checked_*` methods.

mod cf;
mod rational;
mod series;

pub use cf::continued_fraction;
pub use rational::{BiPoly, RationalGf};
pub use series::{series_relation_check, QSeries};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A polynomial in `q` with integer coefficients, lowest degree first.
///
/// Canonical form has no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector and no degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

pub(crate) fn add_i64(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("polynomial addition"))
}

pub(crate) fn mul_i64(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("polynomial multiplication"))
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c·q^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> i64 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self, c: i64) -> bool {
        *self == QPoly::constant(c)
    }

    pub fn checked_add(&self, other: &QPoly) -> Result<QPoly> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| add_i64(self.coeff(i), other.coeff(i))).collect::<Result<Vec<_>>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn checked_neg(&self) -> Result<QPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_neg().ok_or(Error::Overflow("polynomial negation")))
            .collect::<Result<Vec<_>>>()?;
        Ok(QPoly { coeffs })
    }

    pub fn checked_sub(&self, other: &QPoly) -> Result<QPoly> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &QPoly) -> Result<QPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = add_i64(coeffs[i + j], mul_i64(a, b)?)?;
            }
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn checked_scale(&self, c: i64) -> Result<QPoly> {
        let coeffs = self.coeffs.iter().map(|&a| mul_i64(a, c)).collect::<Result<Vec<_>>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }

    pub fn checked_pow(&self, exp: u32) -> Result<QPoly> {
        let mut acc = QPoly::one();
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    /// Exact division by `q`; fails when the constant term is nonzero.
    pub fn div_q(&self) -> Result<QPoly> {
        if self.coeff(0) != 0 {
            return Err(Error::InexactDivision);
        }
        Ok(QPoly::from_coeffs(self.coeffs.iter().skip(1).copied().collect()))
    }

    /// `p(q^k)`.
    pub fn substitute_power(&self, k: usize) -> QPoly {
        if k == 0 {
            let total = self.coeffs.iter().sum();
            return QPoly::constant(total);
        }
        let mut coeffs = vec![0; self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, q: i64) -> Result<i64> {
        let mut acc = 0i64;
        for &c in self.coeffs.iter().rev() {
            acc = add_i64(mul_i64(acc, q)?, c)?;
        }
        Ok(acc)
    }

    /// `[n]_{q^k} = 1 + q^k + q^{2k} + … + q^{(n-1)k}`, for `n, k ≥ 1`.
    pub fn q_analog(n: usize, k: usize) -> Result<QPoly> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidArgument(alloc::format!("q-analog needs n >= 1 and k >= 1, got n={n}, k={k}")));
        }
        let mut coeffs = vec![0; (n - 1) * k + 1];
        for i in 0..n {
            coeffs[i * k] = 1;
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

/// Human-readable form such as `34 + 9q + 2q^2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            if power == 0 || magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{power}")?,
            }
        }
        Ok(())
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.checked_neg().unwrap_or_else(|e| panic!("{e}"))
    }
}
