//! Rationals with an inline `i64` fast path and a `BigRational` fallback.
//!
//! The canonical form is the small variant whenever numerator and
//! denominator fit in `i64` (numerator never equal to `i64::MIN`), so the
//! derived equality and hashing are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Q {
    /// `num / den` with `den > 0` and `gcd(num, den) = 1`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Default for Q {
    fn default() -> Self {
        Q::zero()
    }
}

fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Q {
    pub const fn zero() -> Q {
        Q::Small(0, 1)
    }

    pub const fn one() -> Q {
        Q::Small(1, 1)
    }

    pub fn int(n: i64) -> Q {
        if n == i64::MIN {
            Q::from_big(BigRational::from_integer(BigInt::from(n)))
        } else {
            Q::Small(n, 1)
        }
    }

    /// Builds `n / d`; panics if `d == 0` (callers check).
    pub fn new(n: i64, d: i64) -> Q {
        Q::from_i128(n as i128, d as i128)
    }

    pub fn from_i128(n: i128, d: i128) -> Q {
        assert!(d != 0, "zero denominator");
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if fits(n) && fits(d) {
            Q::Small(n as i64, d as i64)
        } else {
            Q::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(r: BigRational) -> Q {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Q::Small(n, d);
            }
        }
        Q::Big(Box::new(r))
    }

    pub fn from_bigints(n: BigInt, d: BigInt) -> Option<Q> {
        if d.is_zero() {
            return None;
        }
        Some(Q::from_big(BigRational::new(n, d)))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::Small(n, _) => BigInt::from(*n),
            Q::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::Small(_, d) => BigInt::from(*d),
            Q::Big(b) => b.denom().clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Q::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Q::Small(_, 1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::Small(n, _) => n.signum() as i32,
            Q::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Q::Small(n, d) => *n as f64 / *d as f64,
            Q::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn recip(&self) -> Option<Q> {
        match self {
            Q::Small(0, _) => None,
            Q::Small(n, d) => Some(Q::from_i128(*d as i128, *n as i128)),
            Q::Big(b) => Some(Q::from_big(b.recip())),
        }
    }

    /// Exact square root if `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Q> {
        if self.signum() < 0 {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        let r = Q::from_bigints(n, d)?;
        if &(&r * &r) == self {
            Some(r)
        } else {
            None
        }
    }

    /// Best rational approximation with denominator at most `max_den`.
    pub fn approximate(x: f64, max_den: i64) -> Option<Q> {
        if !x.is_finite() {
            return None;
        }
        let (mut h0, mut h1): (i128, i128) = (0, 1);
        let (mut k0, mut k1): (i128, i128) = (1, 0);
        let mut r = x;
        for _ in 0..64 {
            let a = r.floor();
            if a.abs() > 1e15 {
                break;
            }
            let ai = a as i128;
            let h2 = ai * h1 + h0;
            let k2 = ai * k1 + k0;
            if k2 > max_den as i128 {
                break;
            }
            h0 = h1;
            h1 = h2;
            k0 = k1;
            k1 = k2;
            let frac = r - a;
            if frac.abs() < 1e-12 {
                break;
            }
            r = 1.0 / frac;
        }
        if k1 == 0 {
            return None;
        }
        Some(Q::from_i128(h1, k1))
    }

    fn big_op(&self, other: &Q, f: impl Fn(BigRational, BigRational) -> BigRational) -> Q {
        Q::from_big(f(self.to_big(), other.to_big()))
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(n, 1) => write!(f, "{n}"),
            Q::Small(n, d) => write!(f, "{n}/{d}"),
            Q::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128))),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Q> for &'a Q {
    type Output = Q;
    fn add(self, other: &Q) -> Q {
        match (self, other) {
            (Q::Small(0, _), _) => other.clone(),
            (_, Q::Small(0, _)) => self.clone(),
            (Q::Small(a, 1), Q::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) if s != i64::MIN => Q::Small(s, 1),
                _ => Q::from_i128(*a as i128 + *c as i128, 1),
            },
            (Q::Small(a, b), Q::Small(c, d)) => {
                if b == d {
                    Q::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let n = (*a as i128) * (*d as i128) + (*c as i128) * (*b as i128);
                    Q::from_i128(n, (*b as i128) * (*d as i128))
                }
            }
            _ => self.big_op(other, |x, y| x + y),
        }
    }
}

impl<'a> Sub<&'a Q> for &'a Q {
    type Output = Q;
    fn sub(self, other: &Q) -> Q {
        match (self, other) {
            (_, Q::Small(0, _)) => self.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                if b == d {
                    Q::from_i128(*a as i128 - *c as i128, *b as i128)
                } else {
                    let n = (*a as i128) * (*d as i128) - (*c as i128) * (*b as i128);
                    Q::from_i128(n, (*b as i128) * (*d as i128))
                }
            }
            _ => self.big_op(other, |x, y| x - y),
        }
    }
}

impl<'a> Mul<&'a Q> for &'a Q {
    type Output = Q;
    fn mul(self, other: &Q) -> Q {
        match (self, other) {
            (Q::Small(0, _), _) | (_, Q::Small(0, _)) => Q::zero(),
            (Q::Small(1, 1), _) => other.clone(),
            (_, Q::Small(1, 1)) => self.clone(),
            (Q::Small(a, 1), Q::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) if p != i64::MIN => Q::Small(p, 1),
                _ => Q::from_i128(*a as i128 * *c as i128, 1),
            },
            (Q::Small(a, b), Q::Small(c, d)) => {
                Q::from_i128((*a as i128) * (*c as i128), (*b as i128) * (*d as i128))
            }
            _ => self.big_op(other, |x, y| x * y),
        }
    }
}

impl<'a> Div<&'a Q> for &'a Q {
    type Output = Q;
    fn div(self, other: &Q) -> Q {
        let r = other.recip().expect("division by zero rational");
        self * &r
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self {
            Q::Small(n, d) => Q::Small(-n, *d),
            Q::Big(b) => Q::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        -&self
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_small() {
        assert_eq!(Q::new(2, 4), Q::new(-1, -2));
        assert_eq!(Q::new(0, 5), Q::zero());
        assert_eq!(Q::new(6, 3), Q::int(2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Q::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Q::Small(..)));
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(Q::new(9, 4).sqrt(), Some(Q::new(3, 2)));
        assert_eq!(Q::int(2).sqrt(), None);
        assert_eq!(Q::int(-4).sqrt(), None);
    }

    #[test]
    fn approximation() {
        assert_eq!(Q::approximate(8.0 / 3.0, 1000), Some(Q::new(8, 3)));
        assert_eq!(Q::approximate(-0.25, 1000), Some(Q::new(-1, 4)));
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Q::from_i128(n as i128, d as i128))
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_q(), b in arb_q(), c in arb_q()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }
    }
}
