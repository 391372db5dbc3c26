//! Derived parameters and feasibility conditions of SRNT parameter pairs.
//!
//! A pair `(k, c)` determines everything else: `s` with
//! `s^2 = c^2 + 4(k - c)`, the eigenvalues `q = (s - c)/2` and
//! `-(s + c)/2`, their multiplicities, the sizes of the second
//! subconstituent and of the whole graph, and the two Krein parameters.
//! Equivalently one may start from `(q, c)`, where `k = (q + 1)c + q^2`.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, add, exact_div, mul, product, sub, Int, Rational};
use crate::error::{Error, Result};

/// `(k, c)` of the six known SRNT graphs: Petersen, Clebsch,
/// Hoffman-Singleton, Gewirtz, M22 and Higman-Sims.
pub const KNOWN_SIX: [(Int, Int); 6] = [(3, 1), (5, 2), (7, 1), (10, 2), (16, 4), (22, 6)];

pub fn is_known(k: Int, c: Int) -> bool {
    KNOWN_SIX.contains(&(k, c))
}

/// A named feasibility condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `c^2 + 4(k - c)` is not a perfect square.
    NonSquareS,
    /// `s` and `c` differ in parity.
    Parity,
    EllNotInteger,
    NNotInteger,
    M1NotInteger,
    /// `K1 < 0`.
    Krein1,
    /// `K2 < 0`.
    Krein2,
    /// `k < 3c - 1`, or an unknown pair with `4k < 14c + 25`.
    DegreeBound,
}

impl Condition {
    pub const fn id(self) -> &'static str {
        match self {
            Condition::NonSquareS => "non-square-s",
            Condition::Parity => "parity",
            Condition::EllNotInteger => "ell-not-integer",
            Condition::NNotInteger => "n-not-integer",
            Condition::M1NotInteger => "m1-not-integer",
            Condition::Krein1 => "krein-1",
            Condition::Krein2 => "krein-2",
            Condition::DegreeBound => "degree-bound",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Full parameter vector of a feasible SRNT candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamSet {
    pub k: Int,
    pub c: Int,
    /// The positive eigenvalue `λ₁`.
    pub q: Int,
    pub s: Int,
    /// Order of the second subconstituent.
    pub ell: Int,
    pub n: Int,
    pub lambda2: Int,
    pub m1: Int,
    pub m2: Int,
    pub krein1: Rational,
    pub krein2: Rational,
}

impl ParamSet {
    pub fn lambda1(&self) -> Int {
        self.q
    }
}

/// Whatever could be computed for a pair, feasible or not.
///
/// `ell`, `n`, `m1`, `m2` are kept as exact rationals so that an infeasible
/// report still shows how far from integral they are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialParams {
    pub k: Int,
    pub c: Int,
    pub ell: Rational,
    pub n: Rational,
    /// Present when `c^2 + 4(k - c)` is a perfect square.
    pub s: Option<Int>,
    /// Present when, in addition, `s` and `c` have the same parity.
    pub q: Option<Int>,
    pub lambda2: Option<Int>,
    pub m1: Option<Rational>,
    pub m2: Option<Rational>,
    pub krein: Option<(Rational, Rational)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub partial: PartialParams,
    /// Populated exactly when the report is feasible.
    pub params: Option<ParamSet>,
    /// Every failed condition, in [`Condition`] order.
    pub failures: Vec<Condition>,
    pub degree_bound: DegreeBound,
}

impl FeasibilityReport {
    pub fn verdict(&self) -> Verdict {
        if self.failures.is_empty() {
            Verdict::Feasible
        } else {
            Verdict::Infeasible
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fails(&self, cond: Condition) -> bool {
        self.failures.contains(&cond)
    }
}

/// Outcome of the degree bounds `k >= 3c - 1` and, for pairs outside the
/// known six, `k >= 7c/2 + 25/4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeBound {
    Pass,
    FailCor2,
    FailCor4,
}

fn check_range(k: Int, c: Int) -> Result<()> {
    if k < 3 || c < 1 || c >= k {
        return Err(Error::InvalidParameters(alloc::format!(
            "(k, c) = ({k}, {c}) violates k >= 3, k > c >= 1"
        )));
    }
    Ok(())
}

pub fn degree_bound_check(k: Int, c: Int) -> Result<DegreeBound> {
    check_range(k, c)?;
    if k < sub(mul(3, c)?, 1)? {
        return Ok(DegreeBound::FailCor2);
    }
    if is_known(k, c) {
        return Ok(DegreeBound::Pass);
    }
    if mul(4, k)? < add(mul(14, c)?, 25)? {
        Ok(DegreeBound::FailCor4)
    } else {
        Ok(DegreeBound::Pass)
    }
}

/// Eigenvalue and multiplicity closed forms evaluated at a signed `s`:
/// `((s - c)/2, k/(2cs) * ((k - 1 + c)(s + c) - 2c))`.
///
/// At `s` this is `(λ₁, m₁)`; at `-s` it is `(λ₂, m₂)`.
pub fn eigenpair_at(k: Int, c: Int, s: Int) -> Result<(Rational, Rational)> {
    let lambda = Rational::new(sub(s, c)?, 2)?;
    let inner = sub(mul(sub(add(k, c)?, 1)?, add(s, c)?)?, mul(2, c)?)?;
    let m = Rational::new(mul(k, inner)?, product(&[2, c, s])?)?;
    Ok((lambda, m))
}

/// Inputs to the Krein parameter forms. `m1`, `m2` may be non-integral
/// when evaluating an infeasible pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KreinInput {
    pub k: Int,
    pub c: Int,
    pub s: Int,
    pub q: Int,
    pub lambda2: Int,
    pub m1: Rational,
    pub m2: Rational,
}

impl From<&ParamSet> for KreinInput {
    fn from(p: &ParamSet) -> Self {
        KreinInput {
            k: p.k,
            c: p.c,
            s: p.s,
            q: p.q,
            lambda2: p.lambda2,
            m1: Rational::from_int(p.m1),
            m2: Rational::from_int(p.m2),
        }
    }
}

/// Krein parameters `(K1, K2)`.
///
/// The value returned is the `(s, c)` form. Every other form is evaluated
/// as well (expanded and factored in `k, λ₁, λ₂`; the `λ² + λ - c` form;
/// the multiplicity form) and any disagreement is an error.
pub fn krein_params(p: &KreinInput) -> Result<(Rational, Rational)> {
    let KreinInput {
        k,
        c,
        s,
        q: l1,
        lambda2: l2,
        m1,
        m2,
    } = *p;
    if s <= 0 || k <= 0 || c <= 0 {
        return Err(Error::InvalidParameters(
            "Krein forms need k, c, s > 0".into(),
        ));
    }

    // (s, c) forms, each over 16.
    let k1_sc = Rational::new(
        product(&[
            add(s, c)?,
            add(sub(s, c)?, 2)?,
            sub(mul(add(s, c)?, add(s, c)?)?, mul(2, add(s, mul(3, c)?)?)?)?,
        ])?,
        16,
    )?;
    let k2_sc = Rational::new(
        product(&[
            sub(s, c)?,
            sub(add(s, c)?, 2)?,
            add(mul(sub(s, c)?, sub(s, c)?)?, mul(2, sub(s, mul(3, c)?)?)?)?,
        ])?,
        16,
    )?;

    // Expanded in k, λ₁, λ₂.
    let k1_expanded = {
        let terms = [
            product(&[l1, l2, l2])?,
            -product(&[2, l1, l1, l2])?,
            -mul(l1, l1)?,
            -mul(k, l1)?,
            product(&[k, l2, l2])?,
            product(&[2, k, l2])?,
        ];
        terms.iter().try_fold(0, |acc, &t| add(acc, t))?
    };
    let k2_expanded = {
        let terms = [
            product(&[l1, l1, l2])?,
            -product(&[2, l1, l2, l2])?,
            -mul(l2, l2)?,
            -mul(k, l2)?,
            product(&[k, l1, l1])?,
            product(&[2, k, l1])?,
        ];
        terms.iter().try_fold(0, |acc, &t| add(acc, t))?
    };

    // Factored in k, λ₁, λ₂.
    let k1_factored = sub(
        product(&[add(k, l1)?, add(l2, 1)?, add(l2, 1)?])?,
        mul(add(l1, 1)?, add(add(k, l1)?, product(&[2, l1, l2])?)?)?,
    )?;
    let k2_factored = sub(
        product(&[add(k, l2)?, add(l1, 1)?, add(l1, 1)?])?,
        mul(add(l2, 1)?, add(add(k, l2)?, product(&[2, l1, l2])?)?)?,
    )?;

    // (λ² + λ - c) forms, over 4.
    let k1_quad = Rational::new(
        product(&[
            add(s, c)?,
            add(sub(s, c)?, 2)?,
            sub(add(mul(l2, l2)?, l2)?, c)?,
        ])?,
        4,
    )?;
    let k2_quad = Rational::new(
        product(&[
            sub(s, c)?,
            sub(add(s, c)?, 2)?,
            sub(add(mul(l1, l1)?, l1)?, c)?,
        ])?,
        4,
    )?;

    // Multiplicity forms: cs(s ± c)(m/k - 1)/2.
    let one = Rational::from_int(1);
    let k1_mult = m1
        .div(Rational::from_int(k))?
        .sub(one)?
        .mul(Rational::new(product(&[c, s, add(s, c)?])?, 2)?)?;
    let k2_mult = m2
        .div(Rational::from_int(k))?
        .sub(one)?
        .mul(Rational::new(product(&[c, s, sub(s, c)?])?, 2)?)?;

    let check = |which: u8, reference: Rational, form: &'static str, value: Rational| {
        if value == reference {
            Ok(())
        } else {
            Err(Error::KreinFormMismatch { which, form })
        }
    };
    check(1, k1_sc, "k-lambda expanded", k1_expanded.into())?;
    check(1, k1_sc, "k-lambda factored", k1_factored.into())?;
    check(1, k1_sc, "lambda2^2 + lambda2 - c", k1_quad)?;
    check(1, k1_sc, "multiplicity", k1_mult)?;
    check(2, k2_sc, "k-lambda expanded", k2_expanded.into())?;
    check(2, k2_sc, "k-lambda factored", k2_factored.into())?;
    check(2, k2_sc, "lambda1^2 + lambda1 - c", k2_quad)?;
    check(2, k2_sc, "multiplicity", k2_mult)?;

    Ok((k1_sc, k2_sc))
}

/// Derive all parameters of `(k, c)` and test every feasibility condition.
///
/// Conditions are evaluated independently, so an infeasible report lists
/// every failure. Conditions that need `s` are skipped when `s` does not
/// exist; `non-square-s` is then reported.
pub fn derive_from_kc(k: Int, c: Int) -> Result<FeasibilityReport> {
    check_range(k, c)?;
    let mut failures = Vec::new();

    let ell_num = mul(k, sub(k, 1)?)?;
    let ell = Rational::new(ell_num, c)?;
    let n = ell.add(Rational::from_int(add(k, 1)?))?;
    let ell_int = exact_div(ell_num, c);
    if ell_int.is_none() {
        failures.push(Condition::EllNotInteger);
    }
    // n = 1 + k + ell, so n is integral exactly when ell is.
    let n_int = match ell_int {
        Some(l) => Some(add(add(l, k)?, 1)?),
        None => {
            failures.push(Condition::NNotInteger);
            None
        }
    };

    let disc = add(mul(c, c)?, mul(4, sub(k, c)?)?)?;
    let s = arith::exact_sqrt(disc);
    let mut partial = PartialParams {
        k,
        c,
        ell,
        n,
        s,
        q: None,
        lambda2: None,
        m1: None,
        m2: None,
        krein: None,
    };

    let mut ints = None;
    match s {
        None => failures.push(Condition::NonSquareS),
        // s^2 - c^2 = 4(k - c) already forces equal parity; checked anyway.
        Some(s) if (s - c).rem_euclid(2) != 0 => failures.push(Condition::Parity),
        Some(s) => {
            let q = (s - c) / 2;
            let lambda2 = -((s + c) / 2);
            let den = product(&[2, c, s])?;
            let m1_num = mul(k, sub(mul(sub(add(k, c)?, 1)?, add(s, c)?)?, mul(2, c)?)?)?;
            let m2_num = mul(k, add(mul(sub(add(k, c)?, 1)?, sub(s, c)?)?, mul(2, c)?)?)?;
            let m1 = Rational::new(m1_num, den)?;
            let m2 = Rational::new(m2_num, den)?;
            let m1_int = exact_div(m1_num, den);
            if m1_int.is_none() {
                failures.push(Condition::M1NotInteger);
            }
            let (k1, k2) = krein_params(&KreinInput {
                k,
                c,
                s,
                q,
                lambda2,
                m1,
                m2,
            })?;
            if k1.signum() < 0 {
                failures.push(Condition::Krein1);
            }
            if k2.signum() < 0 {
                failures.push(Condition::Krein2);
            }
            partial.q = Some(q);
            partial.lambda2 = Some(lambda2);
            partial.m1 = Some(m1);
            partial.m2 = Some(m2);
            partial.krein = Some((k1, k2));
            ints = Some((s, q, lambda2, m1_int, m2.to_integer(), k1, k2));
        }
    }

    let degree_bound = degree_bound_check(k, c)?;
    if degree_bound != DegreeBound::Pass {
        failures.push(Condition::DegreeBound);
    }
    failures.sort();

    let params = match (failures.is_empty(), ints, ell_int, n_int) {
        (true, Some((s, q, lambda2, Some(m1), Some(m2), krein1, krein2)), Some(ell), Some(n)) => {
            Some(ParamSet {
                k,
                c,
                q,
                s,
                ell,
                n,
                lambda2,
                m1,
                m2,
                krein1,
                krein2,
            })
        }
        (true, ..) => {
            return Err(Error::InvalidParameters(alloc::format!(
                "({k}, {c}) passed every condition but m2 is not integral"
            )))
        }
        _ => None,
    };

    Ok(FeasibilityReport {
        partial,
        params,
        failures,
        degree_bound,
    })
}

/// Same as [`derive_from_kc`] with `k = (q + 1)c + q^2` (so `s = c + 2q`).
pub fn derive_from_qc(q: Int, c: Int) -> Result<FeasibilityReport> {
    if q < 1 || c < 1 {
        return Err(Error::InvalidParameters(alloc::format!(
            "(q, c) = ({q}, {c}) violates q >= 1, c >= 1"
        )));
    }
    let k = add(mul(add(q, 1)?, c)?, mul(q, q)?)?;
    let report = derive_from_kc(k, c)?;
    debug_assert_eq!(report.partial.s, Some(c + 2 * q));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn feasible(k: Int, c: Int) -> ParamSet {
        let r = derive_from_kc(k, c).unwrap();
        assert!(r.is_feasible(), "({k},{c}) failures {:?}", r.failures);
        r.params.unwrap()
    }

    #[test]
    fn petersen_row() {
        let p = feasible(3, 1);
        assert_eq!(
            (p.s, p.q, p.lambda2, p.ell, p.n, p.m1, p.m2),
            (3, 1, -2, 6, 10, 5, 4)
        );
        assert_eq!((p.krein1, p.krein2), (4.into(), 1.into()));
    }

    #[test]
    fn higman_sims_row() {
        let p = feasible(22, 6);
        assert_eq!((p.s, p.lambda2, p.n, p.m1, p.m2), (10, -8, 100, 77, 22));
        assert_eq!((p.krein1, p.krein2), (1200.into(), 0.into()));
    }

    #[test]
    fn clebsch_krein() {
        let p = feasible(5, 2);
        assert_eq!((p.krein1, p.krein2), (24.into(), 0.into()));
    }

    #[test]
    fn nine_four_is_ruled_out() {
        let r = derive_from_kc(9, 4).unwrap();
        assert_eq!(r.verdict(), Verdict::Infeasible);
        assert!(r.fails(Condition::Krein2));
        assert!(r.fails(Condition::DegreeBound));
        assert_eq!(r.degree_bound, DegreeBound::FailCor2);
        // Integrality alone does not exclude it.
        assert!(!r.fails(Condition::M1NotInteger));
        assert_eq!(r.partial.m2, Some(6.into()));
    }

    #[test]
    fn non_square_discriminant() {
        let r = derive_from_kc(4, 3).unwrap();
        assert!(r.fails(Condition::NonSquareS));
        assert_eq!(r.partial.s, None);
        assert!(r.params.is_none());
    }

    #[test]
    fn all_failures_are_collected() {
        // 13 is not a square; ell = 12/3 = 4 is integral; degree bound fails.
        let r = derive_from_kc(4, 3).unwrap();
        assert_eq!(
            r.failures,
            vec![Condition::NonSquareS, Condition::DegreeBound]
        );
        // ell = 10*9/4 is not integral and s is not defined.
        let r = derive_from_kc(10, 4).unwrap();
        assert!(r.fails(Condition::EllNotInteger));
        assert!(r.fails(Condition::NNotInteger));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            derive_from_kc(2, 1),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            derive_from_kc(3, 3),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            derive_from_kc(3, 0),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            derive_from_qc(0, 1),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(derive_from_kc(Int::MAX / 2, 1), Err(Error::Overflow));
        assert_eq!(derive_from_qc(Int::MAX / 4, 3), Err(Error::Overflow));
    }

    #[test]
    fn qc_entry_point() {
        assert_eq!(derive_from_qc(1, 1).unwrap().params.unwrap().k, 3);
        assert_eq!(
            derive_from_qc(2, 6).unwrap().params.unwrap(),
            feasible(22, 6)
        );
    }

    #[test]
    fn q4_c3_fails_only_m1() {
        let r = derive_from_qc(4, 3).unwrap();
        assert_eq!(r.partial.k, 31);
        assert_eq!(r.partial.ell, 310.into());
        assert_eq!(r.failures, vec![Condition::M1NotInteger]);
        assert_eq!(r.partial.m1, Some(Rational::new(2356, 11).unwrap()));
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(degree_bound_check(9, 4).unwrap(), DegreeBound::FailCor2);
        assert_eq!(degree_bound_check(21, 10).unwrap(), DegreeBound::FailCor2);
        assert_eq!(degree_bound_check(22, 6).unwrap(), DegreeBound::Pass);
        assert_eq!(degree_bound_check(3, 1).unwrap(), DegreeBound::Pass);
        // 3c - 1 <= k but 4k < 14c + 25.
        assert_eq!(degree_bound_check(12, 4).unwrap(), DegreeBound::FailCor4);
        assert_eq!(degree_bound_check(57, 1).unwrap(), DegreeBound::Pass);
    }

    #[test]
    fn moore_57_krein() {
        let p = feasible(57, 1);
        assert_eq!((p.n, p.q, p.s, p.lambda2), (3250, 7, 15, -8));
        assert_eq!((p.m1, p.m2), (1729, 1520));
        // (s - c)(s + c - 2)((s - c)^2 + 2(s - 3c))/16 = 14*14*220/16
        assert_eq!(p.krein2, 2695.into());
    }

    #[test]
    fn krein_form_mismatch_detected() {
        let p = feasible(3, 1);
        let mut input = KreinInput::from(&p);
        input.m1 = 6.into();
        assert_eq!(
            krein_params(&input),
            Err(Error::KreinFormMismatch {
                which: 1,
                form: "multiplicity"
            })
        );
    }
}
