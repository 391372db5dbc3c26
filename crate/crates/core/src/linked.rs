//! Linked pairs `(X, X')`: SRNT graphs where `X'` is the second
//! subconstituent of `X` at every vertex.
//!
//! The parameters of such a pair are forced into the family
//! `k = q(q² + 3q + 1)`, `c = q(q + 1)`, `k' = q²(q + 2)`, `c' = q²`.

use crate::arith::{add, exact_div, exact_sqrt, mul, product, sub, Int, Rational};
use crate::error::{Error, Result};
use crate::params::{derive_from_kc, ParamSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkedPairParams {
    pub q: Int,
    pub unprimed: ParamSet,
    pub primed: ParamSet,
    /// The integer with `c = r(r + 1)`; always equal to `q`.
    pub r: Int,
    /// `(c - 1)²(4c + 1)`, the discriminant of the quadratic factor.
    pub discriminant: Int,
    /// Graphs are known only for `q = 1` (Clebsch/Petersen) and
    /// `q = 2` (Higman-Sims/M22).
    pub open_existence: bool,
}

fn closed_forms_unprimed(q: Int) -> Result<ParamSet> {
    let q2 = mul(q, q)?;
    let a = sub(add(q2, mul(2, q)?)?, 1)?; // q² + 2q - 1
    let b = add(add(q2, mul(3, q)?)?, 1)?; // q² + 3q + 1
    let ell = mul(a, b)?;
    Ok(ParamSet {
        k: mul(q, b)?,
        c: mul(q, add(q, 1)?)?,
        q,
        s: mul(q, add(q, 3)?)?,
        ell,
        n: product(&[q, q, add(q, 3)?, add(q, 3)?])?,
        lambda2: -mul(q, add(q, 2)?)?,
        m1: ell,
        m2: mul(q, b)?,
        krein1: Rational::from_int(product(&[
            q,
            q,
            add(q, 1)?,
            add(q, 2)?,
            add(q, 3)?,
            sub(add(q2, q)?, 1)?,
        ])?),
        krein2: Rational::ZERO,
    })
}

fn closed_forms_primed(q: Int) -> Result<ParamSet> {
    let q2 = mul(q, q)?;
    let q3 = mul(q2, q)?;
    let a = sub(add(q2, mul(2, q)?)?, 1)?; // q² + 2q - 1
    let b = add(add(q2, mul(3, q)?)?, 1)?; // q² + 3q + 1
    let e = sub(add(q2, q)?, 1)?; // q² + q - 1
    Ok(ParamSet {
        k: mul(q2, add(q, 2)?)?,
        c: q2,
        q,
        s: mul(q, add(q, 2)?)?,
        ell: product(&[add(q, 1)?, add(q, 2)?, e])?,
        n: mul(a, b)?,
        lambda2: -mul(q, add(q, 1)?)?,
        m1: mul(b, e)?,
        m2: mul(add(q, 1)?, a)?,
        krein1: Rational::from_int(product(&[
            q2,
            add(q, 1)?,
            add(q, 1)?,
            sub(sub(add(q3, mul(2, q2)?)?, q)?, 1)?,
        ])?),
        krein2: Rational::from_int(mul(q2, e)?),
    })
}

fn compare(side: &'static str, closed: &ParamSet, derived: &ParamSet) -> Result<()> {
    let fields: [(&'static str, bool); 11] = [
        ("k", closed.k == derived.k),
        ("c", closed.c == derived.c),
        ("q", closed.q == derived.q),
        ("s", closed.s == derived.s),
        ("ell", closed.ell == derived.ell),
        ("n", closed.n == derived.n),
        ("lambda2", closed.lambda2 == derived.lambda2),
        ("m1", closed.m1 == derived.m1),
        ("m2", closed.m2 == derived.m2),
        ("K1", closed.krein1 == derived.krein1),
        ("K2", closed.krein2 == derived.krein2),
    ];
    match fields.iter().find(|(_, ok)| !ok) {
        Some((field, _)) => Err(Error::LinkedPairMismatch { side, field }),
        None => Ok(()),
    }
}

fn derive_feasible(side: &'static str, k: Int, c: Int) -> Result<ParamSet> {
    let report = derive_from_kc(k, c)?;
    report.params.ok_or(Error::LinkedPairMismatch {
        side,
        field: "feasibility",
    })
}

/// Both parameter sets of the linked-pair family at `q`, from the closed
/// forms and cross-checked against [`derive_from_kc`].
pub fn linked_pair_family(q: Int) -> Result<LinkedPairParams> {
    if q < 1 {
        return Err(Error::InvalidParameters(alloc::format!(
            "q = {q} must be >= 1"
        )));
    }
    let unprimed = closed_forms_unprimed(q)?;
    let primed = closed_forms_primed(q)?;
    compare(
        "unprimed",
        &unprimed,
        &derive_feasible("unprimed", unprimed.k, unprimed.c)?,
    )?;
    compare(
        "primed",
        &primed,
        &derive_feasible("primed", primed.k, primed.c)?,
    )?;

    let c = unprimed.c;
    let discriminant = mul(mul(sub(c, 1)?, sub(c, 1)?)?, add(mul(4, c)?, 1)?)?;
    Ok(LinkedPairParams {
        q,
        unprimed,
        primed,
        r: q,
        discriminant,
        open_existence: q >= 3,
    })
}

/// The quadratic factor `k² - (3c + 1)k - c(c² - 4c - 1)` of the
/// linked-pair quartic.
pub fn quadratic_factor(k: Int, c: Int) -> Result<Int> {
    let lin = mul(add(mul(3, c)?, 1)?, k)?;
    let cst = mul(c, sub(sub(mul(c, c)?, mul(4, c)?)?, 1)?)?;
    sub(sub(mul(k, k)?, lin)?, cst)
}

/// The full quartic `4(k - 1)(k - c)·quadratic_factor(k, c)`.
pub fn quartic(k: Int, c: Int) -> Result<Int> {
    product(&[4, sub(k, 1)?, sub(k, c)?, quadratic_factor(k, c)?])
}

/// The quartic before factoring:
/// `(c(c-2)(k-2) + 2k² - 2(c+1)k + 2c(c-1))² - c²(k-2)²(c² + 4k - 4c)`.
/// Identical to [`quartic`] as a polynomial.
pub fn quartic_unfactored(k: Int, c: Int) -> Result<Int> {
    let lhs = product(&[
        c,
        c,
        sub(k, 2)?,
        sub(k, 2)?,
        sub(add(mul(c, c)?, mul(4, k)?)?, mul(4, c)?)?,
    ])?;
    let inner = [
        product(&[c, sub(c, 2)?, sub(k, 2)?])?,
        product(&[2, k, k])?,
        -product(&[2, add(c, 1)?, k])?,
        product(&[2, c, sub(c, 1)?])?,
    ]
    .iter()
    .try_fold(0, |acc, &t| add(acc, t))?;
    sub(mul(inner, inner)?, lhs)
}

/// The degree `k` of a linked pair whose larger graph has parameter `c`.
///
/// Exists only when `4c + 1` is an odd square `(2r + 1)²`, i.e.
/// `c = r(r + 1)`; then `k = (3c + 1 + √Δ)/2 = r(r² + 3r + 1)`. For `c = 1`
/// the discriminant vanishes but `4c + 1 = 5` is not a square.
pub fn solve_k_for_c(c: Int) -> Result<Option<Int>> {
    if c < 1 {
        return Err(Error::InvalidParameters(alloc::format!(
            "c = {c} must be >= 1"
        )));
    }
    let Some(odd) = exact_sqrt(add(mul(4, c)?, 1)?) else {
        return Ok(None);
    };
    // (c - 1)²(4c + 1) = ((c - 1)·odd)²
    let root = mul(sub(c, 1)?, odd)?;
    let Some(k) = exact_div(add(add(mul(3, c)?, 1)?, root)?, 2) else {
        return Ok(None);
    };
    if k < 1 {
        return Ok(None);
    }
    debug_assert_eq!(quadratic_factor(k, c), Ok(0));
    Ok(Some(k))
}

/// `(k', c', q)` for the second subconstituent of a linked pair whose
/// larger graph has parameters `(k, c)`, with
/// `q = c²(k - 2) / (k² - (c + 1)k + c(c - 1))`.
pub fn subconstituent_params(k: Int, c: Int) -> Result<(Int, Int, Int)> {
    let report = derive_from_kc(k, c)?;
    if !report.is_feasible() {
        return Err(Error::InvalidParameters(alloc::format!(
            "({k}, {c}) is not feasible"
        )));
    }
    let num = product(&[c, c, sub(k, 2)?])?;
    let den = add(sub(mul(k, k)?, mul(add(c, 1)?, k)?)?, mul(c, sub(c, 1)?)?)?;
    if den == 0 {
        return Err(Error::NotLinkedPairCandidate(alloc::format!(
            "zero denominator in q for ({k}, {c})"
        )));
    }
    let q = exact_div(num, den).ok_or_else(|| {
        Error::NotLinkedPairCandidate(alloc::format!("q = {num}/{den} is not an integer"))
    })?;
    if q < 1 {
        return Err(Error::NotLinkedPairCandidate(alloc::format!(
            "q = {q} is not positive"
        )));
    }
    let c_primed = sub(c, q)?;
    if c_primed < 1 {
        return Err(Error::NotLinkedPairCandidate(alloc::format!(
            "c' = {c_primed} < 1"
        )));
    }
    Ok((sub(k, c)?, c_primed, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_petersen() {
        let lp = linked_pair_family(1).unwrap();
        assert_eq!((lp.unprimed.k, lp.unprimed.c), (5, 2));
        assert_eq!((lp.primed.k, lp.primed.c), (3, 1));
        assert!(!lp.open_existence);
        assert_eq!(lp.discriminant, 9);
    }

    #[test]
    fn higman_sims_m22() {
        let lp = linked_pair_family(2).unwrap();
        assert_eq!((lp.unprimed.k, lp.unprimed.c, lp.unprimed.n), (22, 6, 100));
        assert_eq!((lp.primed.k, lp.primed.c, lp.primed.n), (16, 4, 77));
    }

    #[test]
    fn q3_family_member() {
        let lp = linked_pair_family(3).unwrap();
        let u = lp.unprimed;
        assert_eq!((u.k, u.c, u.n, u.s, u.m2), (57, 12, 324, 18, 57));
        assert_eq!(u.krein2, Rational::ZERO);
        assert_eq!((lp.primed.k, lp.primed.c, lp.primed.n), (45, 9, 266));
        assert!(lp.open_existence);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_k_for_c(2).unwrap(), Some(5));
        assert_eq!(solve_k_for_c(6).unwrap(), Some(22));
        assert_eq!(solve_k_for_c(3).unwrap(), None);
        assert_eq!(solve_k_for_c(1).unwrap(), None);
        assert!(solve_k_for_c(0).is_err());
    }

    #[test]
    fn subconstituent_examples() {
        assert_eq!(subconstituent_params(22, 6).unwrap(), (16, 4, 2));
        assert_eq!(subconstituent_params(5, 2).unwrap(), (3, 1, 1));
        assert!(matches!(
            subconstituent_params(10, 2),
            Err(Error::NotLinkedPairCandidate(_))
        ));
        assert!(matches!(
            subconstituent_params(16, 4),
            Err(Error::NotLinkedPairCandidate(_))
        ));
        assert!(matches!(
            subconstituent_params(9, 4),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn quartic_factorization_spot_checks() {
        for (k, c) in [(5, 2), (22, 6), (10, 2), (16, 4), (100, 7)] {
            assert_eq!(
                quartic(k, c).unwrap(),
                quartic_unfactored(k, c).unwrap(),
                "({k},{c})"
            );
        }
    }
}
