//! Closed forms and generating functions that the checks compare against.

use alloc::vec::Vec;

use crate::error::Result;
use crate::perm::Permutation;
use crate::qpoly::{BiPoly, QPoly, RationalGf};

fn poly(c: &[i64]) -> QPoly {
    QPoly::from_coeffs(c.to_vec())
}

fn bi(z: &[&[i64]]) -> BiPoly {
    BiPoly::new(z.iter().map(|c| poly(c)).collect())
}

/// `(1 - qz) / (1 - (1+q)z - (1-q)z²)`, the crossing series of `S(321, 231)`.
pub fn pair_321_231_gf() -> RationalGf {
    RationalGf::new(bi(&[&[1], &[0, -1]]), bi(&[&[1], &[-1, -1], &[-1, 1]])).expect("denominator has constant term 1")
}

/// `1 + (1 - qz)z / ((1 - z)(1 - (1+q)z))`, the crossing series of
/// `S(123, 132)` and `S(123, 213)`.
pub fn pair_123_132_gf() -> Result<RationalGf> {
    let one = RationalGf::polynomial(BiPoly::one());
    let num = bi(&[&[], &[1], &[0, -1]]);
    let den = bi(&[&[1], &[-1]]).checked_mul(&bi(&[&[1], &[-1, -1]]))?;
    one.checked_add(&RationalGf::new(num, den)?)
}

/// `z / (1 - z)`.
pub fn z_over_one_minus_z() -> RationalGf {
    RationalGf::new(bi(&[&[], &[1]]), bi(&[&[1], &[-1]])).expect("denominator has constant term 1")
}

/// Levels `a_i = q^{⌊(i-1)/2⌋} z`, `i = 1..=depth`, of the continued
/// fraction for the crossing series of 321-avoiders.
pub fn crossing_cf_levels(depth: usize) -> Vec<BiPoly> {
    (1..=depth).map(|i| BiPoly::term(QPoly::monomial(1, (i - 1) / 2), 1)).collect()
}

/// `((1+q)^{n-1} - 1 + q) / q` for `n ≥ 1`.
pub fn pair_123_132_closed_form(n: usize) -> Result<QPoly> {
    let power = poly(&[1, 1]).checked_pow((n - 1) as u32)?;
    power.checked_add(&poly(&[-1, 1]))?.div_q()
}

/// `1 + Σ_{k=1}^{n-1} [n-k]_{q^k}`.
pub fn pair_321_132_closed_form(n: usize) -> Result<QPoly> {
    let mut acc = QPoly::one();
    for k in 1..n {
        acc = acc.checked_add(&QPoly::q_analog(n - k, k)?)?;
    }
    Ok(acc)
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// `Σ_k (δ_{k,0} + C(n-1, k+1)) q^k`.
pub fn delta_binomial_row(n: usize) -> QPoly {
    let coeffs = (0..n.max(1)).map(|k| i64::from(k == 0) + binomial(n - 1, k + 1)).collect();
    QPoly::from_coeffs(coeffs)
}

pub fn pascal_row(m: usize) -> Vec<i64> {
    (0..=m).map(|k| binomial(m, k)).collect()
}

/// `α_j = (n-j+2)(n-j+3)⋯n 1 2 ⋯ (n+1-j)` for `j ∈ [n]`.
pub fn alpha_family(n: usize, j: usize) -> Permutation {
    let mut word: Vec<usize> = (n + 2 - j..=n).collect();
    word.extend(1..=n + 1 - j);
    Permutation::from_word(&word).expect("rotation of the identity")
}

/// `q·x + (1-q)·y`.
pub fn q_blend(x: &QPoly, y: &QPoly) -> Result<QPoly> {
    QPoly::q().checked_mul(x)?.checked_add(&poly(&[1, -1]).checked_mul(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn pair_gf_expansion_prefix() {
        let s = pair_321_231_gf().expand(3).unwrap();
        assert_eq!(s.coeff(3), &poly(&[3, 1]));
        let s = pair_123_132_gf().unwrap().expand(4).unwrap();
        assert_eq!(s.coeff(0), &QPoly::one());
        assert_eq!(s.coeff(1), &QPoly::one());
        assert_eq!(s.coeff(4), &poly(&[4, 3, 1]));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(pair_123_132_closed_form(1).unwrap(), QPoly::one());
        assert_eq!(pair_123_132_closed_form(4).unwrap(), poly(&[4, 3, 1]));
        assert_eq!(pair_321_132_closed_form(3).unwrap(), poly(&[3, 1]));
        assert_eq!(pair_321_132_closed_form(4).unwrap(), poly(&[4, 1, 2]));
        assert_eq!(pair_321_132_closed_form(1).unwrap(), QPoly::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(pascal_row(4), vec![1, 4, 6, 4, 1]);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(delta_binomial_row(1), QPoly::one());
        assert_eq!(delta_binomial_row(4), poly(&[4, 3, 1]));
    }

    #[test]
    fn alpha_family_members() {
        assert_eq!(alpha_family(4, 2).to_string(), "4123");
        assert_eq!(alpha_family(4, 1).to_string(), "1234");
        assert_eq!(alpha_family(4, 4).to_string(), "2341");
        assert_eq!(alpha_family(4, 2).crs(), 2);
    }

    #[test]
    fn cf_levels() {
        let levels = crossing_cf_levels(4);
        let powers: Vec<_> = levels.iter().map(|l| l.z_coeff(1).degree()).collect();
        assert_eq!(powers, [Some(0), Some(0), Some(1), Some(1)]);
    }
}
