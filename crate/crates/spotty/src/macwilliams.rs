//! The MacWilliams transform for m-spotty weight enumerators.
//!
//! For a byte `c` of Hamming weight `j`, summing `chi(<c, v>) z^{ceil(w_H(v)/t)}`
//! over all `v in R^b` depends only on `j`. Splitting `v`'s support into the
//! part inside `supp(c)` (size `j1`) and outside it (size `j2`), each
//! coordinate inside contributes `-1` (the nonzero multiples of a nonzero
//! element sum to `-1` under `chi`) and each outside contributes `2^m - 1`:
//!
//! ```text
//! F_j(z) = sum_{j1=0}^{j} sum_{j2=0}^{b-j} (-1)^j1 (2^m-1)^j2 C(j,j1) C(b-j,j2) z^{ceil((j1+j2)/t)}
//! ```
//!
//! Because `chi` is multiplicative over bytes, the transform of a whole
//! codeword is the product of its byte kernels, and the dual enumerator is
//!
//! ```text
//! W_dual(z) = (1/|C|) sum_α A_α prod_j F_j(z)^{α_j}
//! ```
//!
//! ```
//! use spotty::macwilliams::f_poly;
//! use spotty::Polynomial;
//!
//! assert_eq!(f_poly(3, 3, 4, 2)?, Polynomial::from_coeffs(&[1, 0, -1]));
//! # Ok::<(), spotty::Error>(())
//! ```

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::MAX_M;
use crate::weight::DistributionTable;

/// The per-byte kernel `F_j^{(b,m)}(z)` for byte weight `j`.
pub fn f_poly(j: usize, b: usize, m: u32, t: usize) -> Result<Polynomial> {
    if b == 0 || j > b {
        return Err(Error::param(format!("byte weight j={j} outside 0..=b={b}")));
    }
    if t == 0 || t > b {
        return Err(Error::param(format!("t={t} outside 1..=b={b}")));
    }
    if !(1..=MAX_M).contains(&m) {
        return Err(Error::param(format!("m={m} outside 1..={MAX_M}")));
    }
    let nonzero = BigInt::from((1u32 << m) - 1);
    let mut out = Polynomial::zero();
    for j1 in 0..=j {
        let inside = binomial(BigInt::from(j), BigInt::from(j1));
        let inside = if j1 % 2 == 0 { inside } else { -inside };
        for j2 in 0..=(b - j) {
            let outside = binomial(BigInt::from(b - j), BigInt::from(j2)) * nonzero.pow(j2 as u32);
            out.add_term((j1 + j2).div_ceil(t) as u32, &inside * outside);
        }
    }
    Ok(out)
}

/// `[F_0, ..., F_b]`.
pub fn kernels(b: usize, m: u32, t: usize) -> Result<Vec<Polynomial>> {
    (0..=b).map(|j| f_poly(j, b, m, t)).collect()
}

/// `W(z) = sum_α A_α z^{sum_j ceil(j/t) α_j}`, from the counts alone.
pub fn enumerator_from_distribution(dist: &DistributionTable) -> Polynomial {
    let layout = dist.layout();
    Polynomial::from_terms(
        dist.entries()
            .map(|(alpha, count)| (alpha.m_spotty_weight(layout) as u32, BigInt::from(count))),
    )
}

/// `sum_α A_α prod_j F_j(z)^{α_j}`, before division by `|C|`.
pub fn transform_numerator(dist: &DistributionTable, m: u32) -> Result<Polynomial> {
    let layout = dist.layout();
    let kernels = kernels(layout.b(), m, layout.t())?;
    let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut numerator = Polynomial::zero();
    for (alpha, count) in dist.entries() {
        let mut product = Polynomial::one();
        for (j, &a) in alpha.counts().iter().enumerate() {
            if a == 0 {
                continue;
            }
            let power = powers.entry((j, a)).or_insert_with(|| kernels[j].pow(a));
            product = &product * power;
        }
        numerator = &numerator + &product.scale(&BigInt::from(count));
    }
    Ok(numerator)
}

/// The dual enumerator `W_dual(z)` from the distribution table of a linear
/// code of size `code_size` over `F2[u]/<u^m>`.
///
/// Besides the exact division by `|C|`, the result is checked for
/// non-negative coefficients, a constant term of 1 and
/// `W_dual(1) * |C| = 2^{mN}`; any violation means the input was not the
/// distribution of a linear code and is reported as [`Error::Integrity`].
pub fn transform(dist: &DistributionTable, code_size: u64, m: u32) -> Result<Polynomial> {
    if code_size == 0 {
        return Err(Error::param("code size must be positive"));
    }
    if dist.total() != code_size {
        return Err(Error::param(format!(
            "distribution tallies {} words but the code size is {code_size}",
            dist.total()
        )));
    }
    let numerator = transform_numerator(dist, m)?;
    let dual = numerator.exact_div_scalar(&BigInt::from(code_size))?;

    if !dual.has_nonnegative_coeffs() {
        return Err(Error::integrity(format!(
            "transformed enumerator has a negative coefficient: {dual}"
        )));
    }
    if !dual.coeff(0).is_one() {
        return Err(Error::integrity(format!(
            "transformed enumerator has constant term {}, expected 1",
            dual.coeff(0)
        )));
    }
    let ambient = BigInt::from(BigUint::from(2u32).pow(m * dist.layout().len() as u32));
    if dual.eval_one() * BigInt::from(code_size) != ambient {
        return Err(Error::integrity(format!(
            "|C| * |C_dual| = {} * {} differs from 2^(mN) = {ambient}",
            code_size,
            dual.eval_one()
        )));
    }
    Ok(dual)
}

/// `2^{mN} / |C|`, the size of the dual of a linear code of size `code_size`.
pub fn dual_size(code_size: u64, m: u32, len: usize) -> Result<BigUint> {
    let ambient = BigUint::from(2u32).pow(m * len as u32);
    let size = BigUint::from(code_size);
    if code_size == 0 || &ambient % &size != BigUint::ZERO {
        return Err(Error::integrity(format!(
            "code size {code_size} does not divide 2^(mN) = {ambient}"
        )));
    }
    Ok(ambient / size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::ByteLayout;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c)
    }

    pub(crate) fn example_distribution() -> DistributionTable {
        DistributionTable::from_entries(
            ByteLayout::new(3, 2, 2).unwrap(),
            [
                (vec![2, 0, 0, 0], 1),
                (vec![0, 2, 0, 0], 18),
                (vec![0, 0, 2, 0], 88),
                (vec![0, 0, 0, 2], 104),
                (vec![1, 1, 0, 0], 3),
                (vec![1, 0, 1, 0], 7),
                (vec![1, 0, 0, 1], 5),
                (vec![0, 1, 1, 0], 72),
                (vec![0, 1, 0, 1], 58),
                (vec![0, 0, 1, 1], 156),
            ],
        )
        .unwrap()
    }

    #[test]
    fn kernels_for_b3_m4_t2() {
        let k = kernels(3, 4, 2).unwrap();
        assert_eq!(k[0], p(&[1, 720, 3375]));
        assert_eq!(k[1], p(&[1, 224, -225]));
        assert_eq!(k[2], p(&[1, -16, 15]));
        assert_eq!(k[3], p(&[1, 0, -1]));
    }

    #[test]
    fn kernel_small_cases() {
        for m in 1..=5 {
            assert_eq!(f_poly(1, 1, m, 1).unwrap(), p(&[1, -1]));
        }
        assert_eq!(f_poly(0, 1, 1, 1).unwrap(), p(&[1, 1]));
        for b in 1..=4 {
            assert_eq!(f_poly(b, b, 3, b).unwrap().coeff(0), BigInt::one());
        }
    }

    #[test]
    fn kernel_range_errors() {
        assert!(f_poly(4, 3, 4, 2).is_err());
        assert!(f_poly(0, 3, 4, 0).is_err());
        assert!(f_poly(0, 3, 4, 4).is_err());
        assert!(f_poly(0, 3, 0, 1).is_err());
        assert!(f_poly(0, 3, 17, 1).is_err());
    }

    #[test]
    fn kernels_at_one() {
        for b in 1..=5 {
            for m in 1..=6 {
                for t in 1..=b {
                    let k = kernels(b, m, t).unwrap();
                    assert_eq!(k[0].eval_one(), BigInt::from(2u32).pow(m * b as u32));
                    for f in &k[1..] {
                        assert_eq!(f.eval_one(), BigInt::ZERO);
                    }
                }
            }
        }
    }

    #[test]
    fn transform_of_example_distribution() {
        let dual = transform(&example_distribution(), 512, 4).unwrap();
        assert_eq!(dual, p(&[1, 85, 3153, 9707, 19822]));
        let numerator = transform_numerator(&example_distribution(), 4).unwrap();
        assert_eq!(numerator.exact_div_scalar(&512.into()).unwrap(), dual);
    }

    #[test]
    fn enumerator_of_example_distribution() {
        assert_eq!(
            enumerator_from_distribution(&example_distribution()),
            p(&[1, 10, 183, 214, 104])
        );
    }

    #[test]
    fn transform_of_zero_code() {
        let layout = ByteLayout::new(2, 1, 3).unwrap();
        let dist = DistributionTable::from_entries(layout, [(vec![3, 0, 0], 1)]).unwrap();
        assert_eq!(enumerator_from_distribution(&dist), Polynomial::one());
        assert_eq!(
            transform(&dist, 1, 2).unwrap(),
            f_poly(0, 2, 2, 1).unwrap().pow(3)
        );
    }

    #[test]
    fn transform_rejects_bad_input() {
        assert!(matches!(
            transform(&example_distribution(), 511, 4),
            Err(Error::Param(_))
        ));
        // a single nonzero word is not a linear code
        let layout = ByteLayout::new(1, 1, 1).unwrap();
        let dist = DistributionTable::from_entries(layout, [(vec![0, 1], 1)]).unwrap();
        assert!(matches!(transform(&dist, 1, 2), Err(Error::Integrity(_))));
    }

    #[test]
    fn dual_sizes() {
        assert_eq!(dual_size(512, 4, 6).unwrap(), BigUint::from(32768u32));
        assert!(dual_size(3, 2, 2).is_err());
    }
}
