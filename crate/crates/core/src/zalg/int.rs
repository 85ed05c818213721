//! Machine integers that promote to arbitrary precision on overflow.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An integer stored inline while it fits in `i64` and as a `BigInt` otherwise.
///
/// Every arithmetic result is normalized, so two equal values always have the
/// same representation and derived equality is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    /// True for `1` and `-1`.
    pub fn is_unit(&self) -> bool {
        matches!(self, Int::Small(1) | Int::Small(-1))
    }

    pub fn is_big(&self) -> bool {
        matches!(self, Int::Big(_))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.sign() == Sign::Minus,
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::Big(BigInt::from(*v).abs()),
            },
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    /// Compares absolute values.
    pub fn cmp_abs(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }

    pub fn add(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(v) = a.checked_add(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() + other.to_big())
    }

    pub fn sub(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() - other.to_big())
    }

    pub fn mul(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() * other.to_big())
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }

    /// `self - q * other`, the workhorse of every elimination step.
    pub fn sub_mul(&self, q: &Int, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(qq), Int::Small(b)) = (self, q, other) {
            if let Some(v) = qq.checked_mul(*b).and_then(|p| a.checked_sub(p)) {
                return Int::Small(v);
            }
        }
        self.sub(&q.mul(other))
    }

    /// Quotient rounded to nearest, so the remainder has absolute value at most `|d| / 2`.
    ///
    /// Panics when `d` is zero.
    pub fn div_round(&self, d: &Int) -> Int {
        assert!(!d.is_zero(), "division by zero");
        let (q, r) = match (self, d) {
            (Int::Small(a), Int::Small(b)) if *b != -1 || *a != i64::MIN => {
                let (q, r) = a.div_mod_floor(b);
                (Int::Small(q), Int::Small(r))
            }
            _ => {
                let (q, r) = self.to_big().div_mod_floor(&d.to_big());
                (Int::from_big(q), Int::from_big(r))
            }
        };
        // floor division leaves r with the sign of d; r - d is the other candidate.
        let twice = r.add(&r);
        if twice.cmp_abs(d) == Ordering::Greater {
            q.add(&Int::ONE)
        } else {
            q
        }
    }

    pub fn is_divisible_by(&self, d: &Int) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        match (self, d) {
            (Int::Small(a), Int::Small(b)) => a.checked_rem(*b).is_none_or(|r| r == 0),
            _ => (self.to_big() % d.to_big()).is_zero(),
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) if *a != i64::MIN && *b != i64::MIN => {
                Int::Small(a.gcd(b))
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    pub fn lcm(&self, other: &Int) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::ZERO;
        }
        let g = self.gcd(other);
        Int::from_big((self.to_big() / g.to_big() * other.to_big()).abs())
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        Int::from_big(BigInt::from(v))
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::ONE
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        Int::add(&self, &rhs)
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_on_overflow_and_demotes_back() {
        let big = Int::from(i64::MAX).add(&Int::ONE);
        assert!(big.is_big());
        let back = big.sub(&Int::ONE);
        assert_eq!(back, Int::Small(i64::MAX));
        let sq = Int::from(1i64 << 40).mul(&Int::from(1i64 << 40));
        assert!(sq.is_big());
        assert_eq!(sq.to_string(), "1208925819614629174706176");
    }

    #[test]
    fn rounded_division_keeps_small_remainders() {
        for a in -40i64..=40 {
            for d in [-7i64, -4, -1, 1, 3, 4, 9] {
                let q = Int::from(a).div_round(&Int::from(d));
                let r = Int::from(a).sub_mul(&q, &Int::from(d));
                assert!(2 * r.to_i64().unwrap().abs() <= d.abs(), "a={a} d={d}");
            }
        }
    }

    #[test]
    fn gcd_lcm_and_divisibility() {
        assert_eq!(Int::from(12).gcd(&Int::from(-18)), Int::from(6));
        assert_eq!(Int::from(4).lcm(&Int::from(6)), Int::from(12));
        assert!(Int::from(12).is_divisible_by(&Int::from(-4)));
        assert!(!Int::from(12).is_divisible_by(&Int::from(5)));
        assert_eq!(Int::from(i64::MIN).abs().to_string(), "9223372036854775808");
    }
}
