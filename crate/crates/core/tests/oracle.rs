//! Brute-force feasibility oracle in arbitrary precision rationals,
//! independent of the checked-integer code path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use srnt_core::enumerate::enumerate_for_q;
use srnt_core::params::derive_from_qc;

fn r(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Feasibility of `(q, c)` straight from the formulas: `n` and `m1`
/// integral, both Krein parameters (expanded form in `k, λ₁, λ₂`)
/// nonnegative.
fn oracle(q: i64, c: i64) -> Option<(i64, i64, BigRational, BigRational)> {
    let k = (q + 1) * c + q * q;
    let (kr, cr) = (r(k), r(c));
    let s = r(c + 2 * q);
    let n = r(1) + &kr + &kr * (&kr - r(1)) / &cr;
    let m1 = &kr / (r(2) * &cr * &s) * ((&kr - r(1) + &cr) * (&s + &cr) - r(2) * &cr);
    let l1 = r(q);
    let l2 = -(&s + &cr) / r(2);
    let krein1 = &l1 * &l2 * &l2 - r(2) * &l1 * &l1 * &l2 - &l1 * &l1 - &kr * &l1
        + &kr * &l2 * &l2
        + r(2) * &kr * &l2;
    let krein2 = &l1 * &l1 * &l2 - r(2) * &l1 * &l2 * &l2 - &l2 * &l2 - &kr * &l2
        + &kr * &l1 * &l1
        + r(2) * &kr * &l1;
    let ok = n.is_integer() && m1.is_integer() && !krein1.is_negative() && !krein2.is_negative();
    ok.then(|| {
        let n = n.to_integer().try_into().unwrap();
        (n, k, krein1, krein2)
    })
}

#[test]
fn oracle_matches_enumeration_up_to_q6() {
    for q in 1..=6 {
        let mut expected: Vec<(i64, i64, i64)> = (1..=q * (q + 1))
            .filter_map(|c| oracle(q, c).map(|(n, k, _, _)| (n, k, c)))
            .collect();
        expected.sort();
        let got: Vec<(i64, i64, i64)> = enumerate_for_q(q as i128)
            .unwrap()
            .iter()
            .map(|row| {
                let p = row.params;
                (p.n as i64, p.k as i64, p.c as i64)
            })
            .collect();
        assert_eq!(got, expected, "q = {q}");
    }
}

#[test]
fn oracle_krein_values_match() {
    for q in 1..=10 {
        for c in 1..=q * (q + 1) {
            let report = derive_from_qc(q as i128, c as i128).unwrap();
            let (k1, k2) = report.partial.krein.unwrap();
            let Some((_, _, o1, o2)) = oracle(q, c) else {
                continue;
            };
            let big = |x: srnt_core::Rational| {
                BigRational::new(BigInt::from(x.numer()), BigInt::from(x.denom()))
            };
            assert_eq!(big(k1), o1, "K1 at q={q} c={c}");
            assert_eq!(big(k2), o2, "K2 at q={q} c={c}");
        }
    }
}

#[test]
fn q4_c3_m1_is_fractional() {
    let (q, c) = (4i64, 3i64);
    let k = (q + 1) * c + q * q;
    let s = c + 2 * q;
    let m1 = r(k) / r(2 * c * s) * (r((k - 1 + c) * (s + c)) - r(2 * c));
    assert_eq!(m1, BigRational::new(BigInt::from(2356), BigInt::from(11)));
    assert!(!m1.is_integer());
    let ell = r(k * (k - 1)) / r(c);
    assert!(ell.is_integer() && ell == r(310));
    let report = derive_from_qc(4, 3).unwrap();
    let m = report.partial.m1.unwrap();
    assert_eq!(
        BigRational::new(BigInt::from(m.numer()), BigInt::from(m.denom())),
        m1
    );
    assert!(!report.is_feasible());
}
