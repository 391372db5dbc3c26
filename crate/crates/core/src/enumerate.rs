//! Enumeration of feasible parameter sets for a fixed positive eigenvalue.
//!
//! With `λ₁ = q` fixed, `c` ranges over `1..=q(q+1)` (the upper end comes
//! from `K2 >= 0`). Writing `D = q^4 - q^2`, integrality of `n` forces
//! `c | D`, and integrality of `m1` then forces
//! `(c + 2q) | F + q·D/c`. Both divisibility tests are used as a cheap
//! prefilter; every surviving `c` still goes through the full feasibility
//! check of [`derive_from_qc`].

use alloc::vec::Vec;

use crate::arith::{add, ceil_sqrt, exact_div, mul, product, sub, Int};
use crate::error::{Error, Result};
use crate::params::{derive_from_qc, ParamSet};

/// The constants `A, B, D, E, F` attached to a value of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConstants {
    pub q: Int,
    /// `q^2 + 3q + 2`
    pub a: Int,
    /// `2q^3 + 3q^2 - q`
    pub b: Int,
    /// `q^4 - q^2`
    pub d: Int,
    /// `q^3 - 4q - 2`
    pub e: Int,
    /// `q(q+1)(q^2 + 2q + 3)`
    pub f: Int,
}

impl EnumerationConstants {
    pub fn new(q: Int) -> Result<Self> {
        check_q(q)?;
        let q2 = mul(q, q)?;
        let q3 = mul(q2, q)?;
        let q4 = mul(q3, q)?;
        Ok(EnumerationConstants {
            q,
            a: add(add(q2, mul(3, q)?)?, 2)?,
            b: sub(add(mul(2, q3)?, mul(3, q2)?)?, q)?,
            d: sub(q4, q2)?,
            e: sub(sub(q3, mul(4, q)?)?, 2)?,
            f: product(&[q, add(q, 1)?, add(add(q2, mul(2, q)?)?, 3)?])?,
        })
    }

    /// `q(q+1)`, the largest admissible `c`.
    pub fn c_max(&self) -> Result<Int> {
        mul(self.q, add(self.q, 1)?)
    }

    /// `n = A·c + B + D/c`, when `c | D`.
    pub fn vertex_count(&self, c: Int) -> Result<Option<Int>> {
        match exact_div(self.d, c) {
            Some(dc) => Ok(Some(add(add(mul(self.a, c)?, self.b)?, dc)?)),
            None => Ok(None),
        }
    }

    /// The two divisibility conditions: `c | D` and `(c + 2q) | F + q·D/c`.
    pub fn passes_divisibility(&self, c: Int) -> Result<bool> {
        let Some(dc) = exact_div(self.d, c) else {
            return Ok(false);
        };
        let rhs = add(self.f, mul(self.q, dc)?)?;
        Ok(exact_div(rhs, add(c, mul(2, self.q)?)?).is_some())
    }
}

fn check_q(q: Int) -> Result<()> {
    if q < 1 {
        return Err(Error::InvalidParameters(alloc::format!(
            "q = {q} must be >= 1"
        )));
    }
    Ok(())
}

/// One table row; fields are in display order `n k c s ℓ λ₁ λ₂ m₁ m₂ K₁ K₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumerationRow {
    pub params: ParamSet,
}

impl EnumerationRow {
    fn sort_key(&self) -> (Int, Int) {
        (self.params.n, self.params.k)
    }
}

impl From<ParamSet> for EnumerationRow {
    fn from(params: ParamSet) -> Self {
        EnumerationRow { params }
    }
}

/// `(n_min, n_max)` for SRNT graphs with `λ₁ = q`.
///
/// `n_min = B + ⌈2q(q+1)√(q²+q-2)⌉`, computed as `B + t` with `t` the
/// least nonnegative integer whose square is at least
/// `4q²(q+1)²(q²+q-2)`. `n_max = q²(q+3)²`.
pub fn n_bounds(q: Int) -> Result<(Int, Int)> {
    let consts = EnumerationConstants::new(q)?;
    let q1 = add(q, 1)?;
    let v = product(&[4, q, q, q1, q1, sub(add(mul(q, q)?, q)?, 2)?])?;
    let t = ceil_sqrt(v).ok_or(Error::Overflow)?;
    let n_min = add(consts.b, t)?;
    let q3 = add(q, 3)?;
    let n_max = product(&[q, q, q3, q3])?;
    Ok((n_min, n_max))
}

/// All feasible rows with `λ₁ = q`, sorted by `(n, k)`.
pub fn enumerate_for_q(q: Int) -> Result<Vec<EnumerationRow>> {
    let consts = EnumerationConstants::new(q)?;
    let mut rows = Vec::new();
    for c in 1..=consts.c_max()? {
        // For q = 1, D = 0 and every c divides it.
        if !consts.passes_divisibility(c)? {
            continue;
        }
        if let Some(params) = derive_from_qc(q, c)?.params {
            rows.push(EnumerationRow::from(params));
        }
    }
    rows.sort_by_key(EnumerationRow::sort_key);
    Ok(rows)
}

/// All feasible rows with `n <= max_n`, sorted by `(n, k)`.
///
/// Scans `q = 1, 2, ...` while `n_min(q) <= max_n`; this relies on
/// `n_min` being increasing in `q`.
pub fn enumerate_up_to_n(max_n: Int) -> Result<Vec<EnumerationRow>> {
    if max_n < 10 {
        return Err(Error::InvalidParameters(alloc::format!(
            "N = {max_n} must be >= 10"
        )));
    }
    let mut rows = Vec::new();
    let mut q = 1;
    while n_bounds(q)?.0 <= max_n {
        rows.extend(
            enumerate_for_q(q)?
                .into_iter()
                .filter(|r| r.params.n <= max_n),
        );
        q = add(q, 1)?;
    }
    rows.sort_by_key(EnumerationRow::sort_key);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(rows: &[EnumerationRow]) -> Vec<Int> {
        let mut v: Vec<Int> = rows.iter().map(|r| r.params.c).collect();
        v.sort();
        v
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(n_bounds(1).unwrap(), (4, 16));
        assert_eq!(n_bounds(5).unwrap(), (638, 1600));
        assert_eq!(n_bounds(11).unwrap(), (6025, 23716));
        assert!(n_bounds(0).is_err());
    }

    #[test]
    fn q1_has_petersen_and_clebsch() {
        let rows = enumerate_for_q(1).unwrap();
        let kc: Vec<_> = rows.iter().map(|r| (r.params.k, r.params.c)).collect();
        assert_eq!(kc, vec![(3, 1), (5, 2)]);
    }

    #[test]
    fn q4_divisors() {
        assert_eq!(cs(&enumerate_for_q(4).unwrap()), vec![2, 4, 6, 12, 16, 20]);
    }

    #[test]
    fn q7_block() {
        let rows = enumerate_for_q(7).unwrap();
        assert_eq!(cs(&rows), vec![1, 4, 6, 7, 14, 21, 28, 42, 49, 56]);
        let mut ks: Vec<Int> = rows.iter().map(|r| r.params.k).collect();
        ks.sort();
        assert_eq!(ks, vec![57, 81, 97, 105, 161, 217, 273, 385, 441, 497]);
    }

    #[test]
    fn small_limits() {
        assert_eq!(enumerate_up_to_n(10).unwrap().len(), 1);
        let ns: Vec<Int> = enumerate_up_to_n(100)
            .unwrap()
            .iter()
            .map(|r| r.params.n)
            .collect();
        assert_eq!(ns, vec![10, 16, 50, 56, 77, 100]);
        assert!(enumerate_up_to_n(9).is_err());
    }

    #[test]
    fn constants_q4() {
        let k = EnumerationConstants::new(4).unwrap();
        assert_eq!((k.a, k.b, k.d, k.e, k.f), (30, 172, 240, 46, 540));
        assert!(k.passes_divisibility(2).unwrap());
        assert!(!k.passes_divisibility(3).unwrap());
        assert_eq!(k.vertex_count(2).unwrap(), Some(352));
    }

    #[test]
    fn bounds_overflow() {
        assert_eq!(n_bounds(Int::MAX / 2), Err(Error::Overflow));
    }
}
