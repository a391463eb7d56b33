//! Arbitrary-precision rational numbers in canonical reduced form.
//!
//! [`Rational`] is the universal scalar of this crate: every coordinate,
//! parameter, and polynomial coefficient is one. The representation keeps
//! the sign on the numerator, the denominator strictly positive, and the
//! fraction fully reduced, so equality is structural and hashing is safe.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Error parsing the textual form of a rational.
///
/// The accepted grammar is `-?[0-9]+(/[0-9]+)?` with no whitespace, no
/// leading `+`, and no sign on the denominator.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("Malformed: expected -?[0-9]+(/[0-9]+)?, got {0:?}")]
    Malformed(String),
    #[error("ZeroDenominator: denominator must be nonzero")]
    ZeroDenominator,
}

/// An exact rational number, always reduced, denominator always >= 1.
///
/// Zero is represented uniquely as 0/1. Arithmetic never rounds; division
/// by zero panics rather than producing a sentinel.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "Rational::new: zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator; by the canonical-form invariant it is always >= 1.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Rational {
        self * self
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "Rational::recip: division by zero");
        Rational(self.0.recip())
    }

    /// Height of the reduced fraction p/q: max(|p|, q). Height of 0 is 1.
    pub fn height(&self) -> BigUint {
        let n = self.0.numer().magnitude();
        let d = self.0.denom().magnitude();
        n.max(d).clone()
    }

    /// True when the height is at most `bound`.
    pub fn height_le(&self, bound: u64) -> bool {
        self.height() <= BigUint::from(bound)
    }

    /// The unique nonnegative rational square root, if one exists.
    ///
    /// A reduced p/q is a square in Q exactly when p >= 0 and both p and q
    /// are perfect squares; the integer square roots are computed exactly,
    /// never through floating point.
    pub fn square_root(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let n = perfect_sqrt(self.0.numer().magnitude())?;
        let d = perfect_sqrt(self.0.denom().magnitude())?;
        // gcd(p, q) = 1 implies gcd(sqrt p, sqrt q) = 1, so the result is
        // already reduced.
        Some(Rational(BigRational::new_raw(
            BigInt::from(n),
            BigInt::from(d),
        )))
    }
}

/// Exact integer square root: `Some(r)` iff `r * r == n`.
///
/// `Roots::sqrt` is a deterministic integer Newton iteration returning the
/// floor square root; squaring it back gives the perfect-square test.
fn perfect_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for Rational {
    /// Canonical text form: `p/q` when q > 1, plain `p` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let malformed = || ParseRationalError::Malformed(text.to_owned());
        let body = text.strip_prefix('-').unwrap_or(text);
        let (num_digits, den_digits) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(num_digits) || !den_digits.map_or(true, all_digits) {
            return Err(malformed());
        }
        let mut num: BigInt = num_digits.parse().expect("digits parse");
        if text.starts_with('-') {
            num = -num;
        }
        let den: BigInt = match den_digits {
            Some(d) => d.parse().expect("digits parse"),
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "Rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn parse_integer() {
        assert_eq!("3".parse::<Rational>().unwrap(), rat(3, 1));
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!("2/4".parse::<Rational>().unwrap(), rat(1, 2));
    }

    #[test]
    fn parse_negative() {
        assert_eq!("-1/2".parse::<Rational>().unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_zero_denominator() {
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(ParseRationalError::ZeroDenominator)
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "+3", "1/-2", "1/2/3", "1.5", "a", " 1", "1 ", "-", "3/", "/2"] {
            assert!(
                matches!(bad.parse::<Rational>(), Err(ParseRationalError::Malformed(_))),
                "expected Malformed for {bad:?}"
            );
        }
    }

    #[test]
    fn format_fraction() {
        assert_eq!(rat(1, 2).to_string(), "1/2");
    }

    #[test]
    fn format_integer() {
        assert_eq!(rat(-3, 1).to_string(), "-3");
    }

    #[test]
    fn format_zero() {
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn height_examples() {
        assert_eq!(rat(-5, 3).height(), 5u32.into());
        assert_eq!(rat(1, 2).height(), 2u32.into());
        assert_eq!(Rational::zero().height(), 1u32.into());
    }

    #[test]
    fn square_root_examples() {
        assert_eq!(rat(9, 4).square_root(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).square_root(), None);
        // 49 and 9 pass the integer square-root check (7*7, 3*3).
        assert_eq!(rat(49, 9).square_root(), Some(rat(7, 3)));
        assert_eq!(rat(-1, 1).square_root(), None);
        assert_eq!(Rational::zero().square_root(), Some(Rational::zero()));
    }

    #[test]
    fn negative_den_normalizes() {
        assert_eq!(Rational::new(1, -2), rat(-1, 2));
        assert_eq!(Rational::new(-1, -2), rat(1, 2));
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn new_zero_denominator_panics() {
        let _ = Rational::new(1, 0);
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn division_by_zero_panics() {
        let _ = rat(1, 1) / Rational::zero();
    }

    prop_compose! {
        fn arb_rational()(num in -999i64..1000, den in 1i64..100) -> Rational {
            Rational::new(num, den)
        }
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(r in arb_rational()) {
            let back: Rational = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn parse_canonicalizes_any_valid_text(p in -999i64..1000, q in 1i64..100) {
            let parsed: Rational = format!("{p}/{q}").parse().unwrap();
            prop_assert_eq!(parsed, Rational::new(p, q));
        }

        #[test]
        fn distributivity(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        }

        #[test]
        fn add_mul_inverses(a in arb_rational()) {
            prop_assert_eq!(&a + &(-&a), Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), Rational::one());
                prop_assert_eq!(&a / &a, Rational::one());
            }
        }

        #[test]
        fn commutativity_associativity(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn sqrt_of_square_is_abs(s in arb_rational()) {
            prop_assert_eq!(s.square().square_root(), Some(s.abs()));
        }

        #[test]
        fn arithmetic_keeps_canonical_form(a in arb_rational(), b in arb_rational()) {
            use num_integer::Integer;
            for r in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(r.denom() > &BigInt::zero());
                prop_assert!(r.numer().gcd(r.denom()).is_one());
            }
        }
    }
}
