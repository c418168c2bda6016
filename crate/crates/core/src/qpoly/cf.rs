use super::{BiPoly, QSeries};
use crate::error::{Error, Result};

/// Evaluates `1/(1 - a₁/(1 - a₂/(1 - …/(1 - a_D))))` to order `z^order`.
///
/// Every level must be divisible by `z`. Depth `D` pins down all
/// coefficients up to `z^D`, so deeper levels only matter past that.
pub fn continued_fraction(levels: &[BiPoly], order: usize) -> Result<QSeries> {
    for (idx, a) in levels.iter().enumerate() {
        if !a.z_coeff(0).is_zero() {
            return Err(Error::LevelNotDivisibleByZ { level: idx + 1 });
        }
    }
    let mut tail = QSeries::one(order);
    for a in levels.iter().rev() {
        let denom = QSeries::one(order).checked_sub(&a.to_series(order).checked_mul(&tail)?)?;
        tail = denom.inverse()?;
    }
    Ok(tail)
}
