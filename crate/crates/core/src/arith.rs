//! Checked 128-bit integer helpers and a small exact rational type.
//!
//! Everything here reports overflow as [`Error::Overflow`]; nothing wraps.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Working integer type for all parameter arithmetic.
pub type Int = i128;

#[inline]
pub fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: Int, b: Int) -> Result<Int> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Product of all factors, checked at every step.
pub fn product(factors: &[Int]) -> Result<Int> {
    factors.iter().try_fold(1, |acc, &f| mul(acc, f))
}

/// `a / b` if `b` divides `a` exactly (`b != 0`).
#[inline]
pub fn exact_div(a: Int, b: Int) -> Option<Int> {
    if b == 0 || a.checked_rem(b)? != 0 {
        None
    } else {
        a.checked_div(b)
    }
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(x: Int) -> Option<Int> {
    if x < 0 {
        return None;
    }
    if x < 2 {
        return Some(x);
    }
    let x = x as u128;
    let bits = 128 - x.leading_zeros();
    // 2^ceil(bits/2) is at least sqrt(x); Newton then decreases monotonically.
    let mut r: u128 = 1 << bits.div_ceil(2);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    debug_assert!(r * r <= x && (r + 1).checked_mul(r + 1).is_none_or(|s| s > x));
    Some(r as Int)
}

/// The exact square root of `x`, if `x` is a perfect square.
pub fn exact_sqrt(x: Int) -> Option<Int> {
    let r = isqrt(x)?;
    (r.checked_mul(r)? == x).then_some(r)
}

/// Least `t >= 0` with `t * t >= x`.
pub fn ceil_sqrt(x: Int) -> Option<Int> {
    let r = isqrt(x)?;
    if r.checked_mul(r)? == x {
        Some(r)
    } else {
        r.checked_add(1)
    }
}

pub fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as Int
}

/// Exact rational `num / den` in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Int,
    den: Int,
}

// Fallible, so the operator traits do not fit.
#[allow(clippy::should_implement_trait)]
impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn new(num: Int, den: Int) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameters("zero denominator".into()));
        }
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(Error::Overflow)?;
            den = den.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Rational { num, den })
    }

    pub const fn from_int(n: Int) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> Int {
        self.num
    }

    pub fn denom(&self) -> Int {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_integer(&self) -> Option<Int> {
        self.is_integer().then_some(self.num)
    }

    /// Sign of the value; read off the numerator since `den > 0`.
    pub fn signum(&self) -> Int {
        self.num.signum()
    }

    pub fn add(self, rhs: Self) -> Result<Self> {
        let g = gcd(self.den, rhs.den);
        let l = self.den / g;
        let r = rhs.den / g;
        let num = add(mul(self.num, r)?, mul(rhs.num, l)?)?;
        Rational::new(num, mul(self.den, r)?)
    }

    pub fn sub(self, rhs: Self) -> Result<Self> {
        let neg = Rational {
            num: rhs.num.checked_neg().ok_or(Error::Overflow)?,
            den: rhs.den,
        };
        self.add(neg)
    }

    pub fn mul(self, rhs: Self) -> Result<Self> {
        // Cross-cancel first to keep intermediates small.
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        Rational::new(
            mul(self.num / g1, rhs.num / g2)?,
            mul(self.den / g2, rhs.den / g1)?,
        )
    }

    pub fn div(self, rhs: Self) -> Result<Self> {
        if rhs.num == 0 {
            return Err(Error::InvalidParameters("division by zero".into()));
        }
        self.mul(
            Rational {
                num: rhs.den,
                den: rhs.num,
            }
            .normalized()?,
        )
    }

    pub fn mul_int(self, k: Int) -> Result<Self> {
        self.mul(Rational::from_int(k))
    }

    fn normalized(self) -> Result<Self> {
        Rational::new(self.num, self.den)
    }
}

impl From<Int> for Rational {
    fn from(n: Int) -> Self {
        Rational::from_int(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Fall back to the sign of the difference when cross products overflow.
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self
                .sub(*other)
                .map(|d| d.num.cmp(&0))
                .unwrap_or_else(|_| (self.num.signum()).cmp(&other.num.signum())),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small_values() {
        for x in 0..10_000i128 {
            let r = isqrt(x).unwrap();
            assert!(r * r <= x && (r + 1) * (r + 1) > x, "x = {x}");
        }
        assert_eq!(isqrt(-1), None);
    }

    #[test]
    fn isqrt_near_limit() {
        let r = isqrt(i128::MAX).unwrap();
        assert!(r.checked_mul(r).is_some());
        assert!((r + 1).checked_mul(r + 1).is_none());
        let big = (1i128 << 62) + 12345;
        assert_eq!(exact_sqrt(big * big), Some(big));
        assert_eq!(exact_sqrt(big * big + 1), None);
    }

    #[test]
    fn ceil_sqrt_rounds_up() {
        assert_eq!(ceil_sqrt(16), Some(4));
        assert_eq!(ceil_sqrt(17), Some(5));
        assert_eq!(ceil_sqrt(0), Some(0));
    }

    #[test]
    fn rational_normalizes() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(format!("{r}"), "-3/2");
        assert_eq!(format!("{}", Rational::new(8, 4).unwrap()), "2");
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn rational_field_ops() {
        let a = Rational::new(1, 6).unwrap();
        let b = Rational::new(3, 4).unwrap();
        assert_eq!(a.add(b).unwrap(), Rational::new(11, 12).unwrap());
        assert_eq!(a.sub(b).unwrap(), Rational::new(-7, 12).unwrap());
        assert_eq!(a.mul(b).unwrap(), Rational::new(1, 8).unwrap());
        assert_eq!(a.div(b).unwrap(), Rational::new(2, 9).unwrap());
        assert!(a < b);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(mul(Int::MAX, 2), Err(Error::Overflow));
        let huge = Rational::from_int(Int::MAX);
        assert_eq!(huge.add(huge), Err(Error::Overflow));
    }
}
