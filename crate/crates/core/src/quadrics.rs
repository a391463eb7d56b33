//! Rational parametrizations of two auxiliary quadrics.
//!
//! Two reusable constructions, each with an explicit inverse:
//!
//! * the quadric `1 + x^2 = y^2 + z^2`, parametrized by a pair (a, b);
//! * the hyperbola `x^2 - y^2 = a` for fixed nonzero `a`, parametrized by
//!   a single nonzero t.
//!
//! Both directions check their preconditions exactly and report the
//! failing denominator by name instead of returning garbage.

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Lemma1Error {
    #[error("EqualParameters: a = b makes the parametrization denominator vanish")]
    EqualParameters,
    #[error("NotOnQuadric: 1 + x^2 = y^2 + z^2 does not hold")]
    NotOnQuadric,
    #[error("DegenerateXZ: x = z, the inverse divides by x - z")]
    DegenerateXZ,
    #[error("DegenerateY: y = -1, the inverse divides by y + 1")]
    DegenerateY,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Lemma2Error {
    #[error("ZeroParameter: t = 0 makes the parametrization denominator vanish")]
    ZeroParameter,
    #[error("NotOnHyperbola: x^2 - y^2 = a does not hold")]
    NotOnHyperbola,
    #[error("ZeroA: a = 0 leaves t undetermined")]
    ZeroA,
}

/// Point of `1 + x^2 = y^2 + z^2` from parameters (a, b) with a != b:
///
/// ```text
/// x = (ab + 1)/(a - b),  y = (a + b)/(a - b),  z = (ab - 1)/(a - b).
/// ```
///
/// The output always satisfies the quadric equation and x != z
/// (x - z = 2/(a - b)).
pub fn lemma1_forward(
    a: &Rational,
    b: &Rational,
) -> Result<(Rational, Rational, Rational), Lemma1Error> {
    if a == b {
        return Err(Lemma1Error::EqualParameters);
    }
    let d = a - b;
    let ab = a * b;
    let one = Rational::one();
    let x = (&ab + &one) / &d;
    let y = (a + b) / &d;
    let z = (&ab - &one) / &d;
    Ok((x, y, z))
}

/// Recovers (a, b) from a point of `1 + x^2 = y^2 + z^2`:
///
/// ```text
/// a = (y + 1)/(x - z),  b = (x + z)/(y + 1).
/// ```
///
/// Requires x != z and y != -1; both quotients are then defined and
/// [`lemma1_forward`] maps the result back to exactly (x, y, z).
pub fn lemma1_inverse(
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<(Rational, Rational), Lemma1Error> {
    let one = Rational::one();
    if &one + &x.square() != y.square() + z.square() {
        return Err(Lemma1Error::NotOnQuadric);
    }
    if x == z {
        return Err(Lemma1Error::DegenerateXZ);
    }
    let y1 = y + &one;
    if y1.is_zero() {
        return Err(Lemma1Error::DegenerateY);
    }
    let a = &y1 / &(x - z);
    let b = (x + z) / y1;
    Ok((a, b))
}

/// Point of `x^2 - y^2 = a` from a nonzero parameter t:
///
/// ```text
/// x = (t^2 + a)/(2t),  y = (t^2 - a)/(2t).
/// ```
pub fn lemma2_forward(t: &Rational, a: &Rational) -> Result<(Rational, Rational), Lemma2Error> {
    if t.is_zero() {
        return Err(Lemma2Error::ZeroParameter);
    }
    let t2 = t.square();
    let two_t = t + t;
    let x = (&t2 + a) / &two_t;
    let y = (&t2 - a) / &two_t;
    Ok((x, y))
}

/// Recovers t = x + y from a point of `x^2 - y^2 = a`, a != 0.
///
/// t = 0 would force a = 0, so the returned parameter is always nonzero
/// and [`lemma2_forward`] maps it back to exactly (x, y).
pub fn lemma2_inverse(x: &Rational, y: &Rational, a: &Rational) -> Result<Rational, Lemma2Error> {
    if a.is_zero() {
        return Err(Lemma2Error::ZeroA);
    }
    if &x.square() - &y.square() != *a {
        return Err(Lemma2Error::NotOnHyperbola);
    }
    Ok(x + y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn lemma1_forward_examples() {
        assert_eq!(
            lemma1_forward(&int(3), &int(2)).unwrap(),
            (int(7), int(5), int(5))
        );
        // y = -1 edge case: reachable from a = 0
        assert_eq!(
            lemma1_forward(&int(0), &int(2)).unwrap(),
            (rat(-1, 2), int(-1), rat(1, 2))
        );
        assert_eq!(
            lemma1_forward(&int(2), &int(2)),
            Err(Lemma1Error::EqualParameters)
        );
    }

    #[test]
    fn lemma1_forward_lands_on_quadric() {
        let (x, y, z) = lemma1_forward(&int(3), &int(2)).unwrap();
        assert_eq!(Rational::one() + x.square(), y.square() + z.square());
    }

    #[test]
    fn lemma1_inverse_examples() {
        assert_eq!(
            lemma1_inverse(&int(7), &int(5), &int(5)).unwrap(),
            (int(3), int(2))
        );
        assert_eq!(
            lemma1_inverse(&rat(-1, 2), &int(-1), &rat(1, 2)),
            Err(Lemma1Error::DegenerateY)
        );
        assert_eq!(
            lemma1_inverse(&int(1), &int(1), &int(1)),
            Err(Lemma1Error::DegenerateXZ)
        );
        assert_eq!(
            lemma1_inverse(&int(2), &int(5), &int(5)),
            Err(Lemma1Error::NotOnQuadric)
        );
    }

    #[test]
    fn lemma2_forward_examples() {
        assert_eq!(lemma2_forward(&int(3), &int(3)).unwrap(), (int(2), int(1)));
        assert_eq!(lemma2_forward(&int(1), &int(-1)).unwrap(), (int(0), int(1)));
        assert_eq!(
            lemma2_forward(&int(0), &int(5)),
            Err(Lemma2Error::ZeroParameter)
        );
    }

    #[test]
    fn lemma2_inverse_examples() {
        assert_eq!(lemma2_inverse(&int(2), &int(1), &int(3)).unwrap(), int(3));
        assert_eq!(
            lemma2_inverse(&int(1), &int(1), &int(0)),
            Err(Lemma2Error::ZeroA)
        );
        assert_eq!(
            lemma2_inverse(&int(2), &int(1), &int(5)),
            Err(Lemma2Error::NotOnHyperbola)
        );
    }

    prop_compose! {
        fn arb_rational()(num in -99i64..100, den in 1i64..20) -> Rational {
            Rational::new(num, den)
        }
    }

    proptest! {
        #[test]
        fn lemma1_roundtrip(a in arb_rational(), b in arb_rational()) {
            // a = 0 yields y = -1, outside the inverse's domain
            prop_assume!(a != b && !a.is_zero());
            let (x, y, z) = lemma1_forward(&a, &b).unwrap();
            prop_assert_eq!(Rational::one() + x.square(), y.square() + z.square());
            prop_assert!(x != z);
            prop_assert_eq!(lemma1_inverse(&x, &y, &z).unwrap(), (a, b));
        }

        #[test]
        fn lemma1_point_side_roundtrip(a in arb_rational(), b in arb_rational()) {
            prop_assume!(a != b && !a.is_zero());
            let (x, y, z) = lemma1_forward(&a, &b).unwrap();
            let (a2, b2) = lemma1_inverse(&x, &y, &z).unwrap();
            prop_assert_eq!(lemma1_forward(&a2, &b2).unwrap(), (x, y, z));
        }

        #[test]
        fn lemma1_x_minus_z(a in arb_rational(), b in arb_rational()) {
            prop_assume!(a != b);
            let (x, _, z) = lemma1_forward(&a, &b).unwrap();
            prop_assert_eq!(x - z, Rational::from_integer(2) / (a - b));
        }

        #[test]
        fn lemma2_roundtrip(t in arb_rational(), a in arb_rational()) {
            prop_assume!(!t.is_zero() && !a.is_zero());
            let (x, y) = lemma2_forward(&t, &a).unwrap();
            prop_assert_eq!(&x.square() - &y.square(), a.clone());
            prop_assert_eq!(lemma2_inverse(&x, &y, &a).unwrap(), t);
        }
    }
}
