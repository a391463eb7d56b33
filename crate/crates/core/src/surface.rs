//! The quartic surface `4x^2 + (y^2 + 1 - z^2)^2 = 8y^2`.
//!
//! This module owns the defining residual, the eight exceptional lines
//! `x = ±y = ±z ± 1`, the birational forward map from a parameter pair
//! (b, c) onto the surface, its closed-form inverse, and a derivation
//! trace that replays the construction of the inverse step by step with
//! every intermediate identity checked exactly.

use crate::quadrics::{lemma1_forward, lemma1_inverse};
use crate::rational::Rational;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("NotOnSurface: residual is nonzero")]
    NotOnSurface,
    #[error("DenominatorZero: D(b, c) = 0, the forward map is undefined")]
    DenominatorZero,
    #[error("DegenerateB: u - z - 1 = 0, the b-denominator vanishes (exceptional line)")]
    DegenerateB,
    #[error("DegenerateC: (x-u)(y+x) + (u+3x)(y-x) = 0, the c-denominator vanishes (exceptional line or x = 0)")]
    DegenerateC,
    #[error("ZeroX: x = 0, the derivation divides by x")]
    ZeroX,
    #[error("OnExceptionalLine: the point lies on one of the 8 lines")]
    OnExceptionalLine,
    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(&'static str),
}

/// One of the two unit signs. Multiplying by a sign is exact negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, r: &Rational) -> Rational {
        match self {
            Sign::Plus => r.clone(),
            Sign::Minus => -r,
        }
    }

    /// +1 or -1 as a rational.
    pub fn unit(self) -> Rational {
        self.apply(&Rational::one())
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Selector for one of the 8 exceptional lines, read as the conjunction
///
/// ```text
/// x = sy * y   and   x = sz * z + s1
/// ```
///
/// with the three signs independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignTriple {
    pub sy: Sign,
    pub sz: Sign,
    pub s1: Sign,
}

impl SignTriple {
    pub const fn new(sy: Sign, sz: Sign, s1: Sign) -> Self {
        SignTriple { sy, sz, s1 }
    }

    /// All 8 sign triples, `+` before `-`, ordered by (sy, sz, s1).
    /// Every membership listing in the crate uses this order.
    pub const ALL: [SignTriple; 8] = {
        use Sign::{Minus as M, Plus as P};
        [
            SignTriple::new(P, P, P),
            SignTriple::new(P, P, M),
            SignTriple::new(P, M, P),
            SignTriple::new(P, M, M),
            SignTriple::new(M, P, P),
            SignTriple::new(M, P, M),
            SignTriple::new(M, M, P),
            SignTriple::new(M, M, M),
        ]
    };

    /// Point of this line at parameter t: `(t, sy*t, sz*(t - s1))`.
    ///
    /// x determines y and z linearly on each line, so t = x is the natural
    /// parameter. The image has residual 0 for every t.
    pub fn line_point(&self, t: &Rational) -> SurfacePoint {
        let y = self.sy.apply(t);
        let z = self.sz.apply(&(t - &self.s1.unit()));
        SurfacePoint::new(t.clone(), y, z)
    }

    /// Exact membership test: `x = sy*y` and `x = sz*z + s1`.
    pub fn contains(&self, p: &SurfacePoint) -> bool {
        p.x == self.sy.apply(&p.y) && p.x == self.sz.apply(&p.z) + self.s1.unit()
    }
}

impl fmt::Display for SignTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.sy.as_char(),
            self.sz.as_char(),
            self.s1.as_char()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid sign triple {0:?}: expected 3 characters over {{+,-}}")]
pub struct ParseSignTripleError(String);

impl FromStr for SignTriple {
    type Err = ParseSignTripleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseSignTripleError(s.to_owned());
        let mut signs = s.chars().map(|ch| match ch {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(err()),
        });
        match (signs.next(), signs.next(), signs.next(), signs.next()) {
            (Some(sy), Some(sz), Some(s1), None) => Ok(SignTriple::new(sy?, sz?, s1?)),
            _ => Err(err()),
        }
    }
}

/// A rational point (x, y, z); on the surface exactly when
/// [`SurfacePoint::residual`] is zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfacePoint {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl SurfacePoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        SurfacePoint { x, y, z }
    }

    pub fn residual(&self) -> Rational {
        residual(&self.x, &self.y, &self.z)
    }

    pub fn is_on_surface(&self) -> bool {
        self.residual().is_zero()
    }
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Parameter pair (b, c) for the forward map. Any pair is storable; the
/// map itself additionally needs its denominator D(b, c) to be nonzero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPair {
    pub b: Rational,
    pub c: Rational,
}

impl ParamPair {
    pub fn new(b: Rational, c: Rational) -> Self {
        ParamPair { b, c }
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b = {}, c = {})", self.b, self.c)
    }
}

/// Result of classifying an on-surface point against the 8 lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointClass {
    Generic,
    /// Nonempty list of containing lines, in [`SignTriple::ALL`] order.
    OnLines(Vec<SignTriple>),
}

impl PointClass {
    pub fn is_generic(&self) -> bool {
        matches!(self, PointClass::Generic)
    }
}

/// Defining residual `4x^2 + (y^2 + 1 - z^2)^2 - 8y^2`; zero exactly on
/// the surface.
pub fn residual(x: &Rational, y: &Rational, z: &Rational) -> Rational {
    let four = Rational::from_integer(4);
    let eight = Rational::from_integer(8);
    let y2 = y.square();
    let inner = &y2 + &Rational::one() - z.square();
    four * x.square() + inner.square() - eight * y2
}

/// The substitution `u = (y^2 + 1 - z^2)/2`; with it the surface equation
/// reads `x^2 + u^2 = 2y^2`.
pub fn u_of(y: &Rational, z: &Rational) -> Rational {
    (y.square() + Rational::one() - z.square()) / Rational::from_integer(2)
}

/// All sign triples whose line contains p, in [`SignTriple::ALL`] order.
/// Empty for generic points; several triples at line intersections.
pub fn line_membership(p: &SurfacePoint) -> Vec<SignTriple> {
    SignTriple::ALL
        .iter()
        .copied()
        .filter(|s| s.contains(p))
        .collect()
}

/// Splits an on-surface point into `Generic` or `OnLines`.
pub fn classify(p: &SurfacePoint) -> Result<PointClass, SurfaceError> {
    if !p.is_on_surface() {
        return Err(SurfaceError::NotOnSurface);
    }
    let lines = line_membership(p);
    if lines.is_empty() {
        Ok(PointClass::Generic)
    } else {
        Ok(PointClass::OnLines(lines))
    }
}

/// Denominator `D(b, c) = b^2c^2 + 2b^2 - 3b^2c + c - bc^2 + 2b` shared by
/// the three forward-map coordinates.
pub fn forward_denominator(b: &Rational, c: &Rational) -> Rational {
    let b2 = b.square();
    let c2 = c.square();
    let two = Rational::from_integer(2);
    let three = Rational::from_integer(3);
    &b2 * &c2 + &two * &b2 - three * b2 * c + c - b * c2 + two * b
}

/// The parametrization map onto the surface:
///
/// ```text
/// x = -b(c^2 + 2 - 4c)/D,  y = -b(c^2 + 2 - 2c)/D,
/// z = -(b^2c^2 + 2b^2 - 3b^2c - c)/D,
/// ```
///
/// defined whenever D(b, c) != 0. The image always has residual 0; the
/// symbolic certificate in [`crate::poly`] proves that identically.
pub fn forward(p: &ParamPair) -> Result<SurfacePoint, SurfaceError> {
    let (b, c) = (&p.b, &p.c);
    let d = forward_denominator(b, c);
    if d.is_zero() {
        return Err(SurfaceError::DenominatorZero);
    }
    let b2 = b.square();
    let c2 = c.square();
    let two = Rational::from_integer(2);
    let x_num = -(b * &(&c2 + &two - Rational::from_integer(4) * c));
    let y_num = -(b * &(&c2 + &two - &two * c));
    let z_num = -(&b2 * &c2 + &two * &b2 - Rational::from_integer(3) * b2 * c - c);
    Ok(SurfacePoint::new(x_num / &d, y_num / &d, z_num / &d))
}

/// Denominator of b in the inverse map: `u - z - 1`.
///
/// It factors as `(y - z - 1)(y + z + 1)/2` on the whole (y, z)-plane, and
/// on the surface its vanishing forces the point onto one of the 8 lines.
pub fn inverse_b_denominator(p: &SurfacePoint) -> Rational {
    u_of(&p.y, &p.z) - &p.z - Rational::one()
}

/// Denominator of c in the inverse map:
/// `(x - u)(y + x) + (u + 3x)(y - x)`, which simplifies to
/// `2x(2y - u - x)`. On the surface it vanishes only when x = 0 or the
/// point lies on a line.
pub fn inverse_c_denominator(p: &SurfacePoint) -> Rational {
    let u = u_of(&p.y, &p.z);
    let three_x = Rational::from_integer(3) * &p.x;
    (&p.x - &u) * (&p.y + &p.x) + (u + three_x) * (&p.y - &p.x)
}

/// Closed-form inverse of [`forward`]:
///
/// ```text
/// b = (y - x)/(u - z - 1),
/// c = 4x(y - x) / ((x - u)(y + x) + (u + 3x)(y - x)),
/// ```
///
/// with `u = (y^2 + 1 - z^2)/2`. For every on-surface point not on any of
/// the 8 lines both denominators are nonzero and `forward(inverse(p)) = p`
/// exactly. Some line points also happen to have nonzero denominators;
/// the formulas are evaluated wherever they are defined, and
/// [`classify`] stays the authority on exceptional status.
pub fn inverse(p: &SurfacePoint) -> Result<ParamPair, SurfaceError> {
    if !p.is_on_surface() {
        return Err(SurfaceError::NotOnSurface);
    }
    let b_den = inverse_b_denominator(p);
    if b_den.is_zero() {
        return Err(SurfaceError::DegenerateB);
    }
    let c_den = inverse_c_denominator(p);
    if c_den.is_zero() {
        return Err(SurfaceError::DegenerateC);
    }
    let y_minus_x = &p.y - &p.x;
    let b = &y_minus_x / &b_den;
    let c = Rational::from_integer(4) * &p.x * y_minus_x / c_den;
    Ok(ParamPair::new(b, c))
}

/// Intermediate values of the inverse-map construction for one point.
///
/// Scaling the point by 1/x transports it onto two unit quadrics:
/// `(u_over_x, qy)` satisfies `1 + u_over_x^2 = 2 qy^2` and
/// `(qx, qy, qz)` satisfies `1 + qx^2 = qy^2 + qz^2`, where
///
/// ```text
/// u_over_x = u/x,  qx = (u - 1)/x,  qy = y/x,  qz = z/x.
/// ```
///
/// (a, b) parametrize the second quadric via the first toolkit lemma and c
/// resolves `a/b + 3 = (c^2 + 2)/c`. All listed identities hold exactly in
/// every value this crate ever returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    pub u: Rational,
    pub u_over_x: Rational,
    pub qx: Rational,
    pub qy: Rational,
    pub qz: Rational,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

fn inconsistent(what: &'static str) -> SurfaceError {
    SurfaceError::InternalInconsistency(what)
}

/// Replays the construction of the inverse map at a generic point,
/// checking every intermediate identity exactly:
///
/// * `x^2 + u^2 = 2y^2` and `x^2 + (u - 1)^2 = y^2 + z^2`;
/// * the scaled forms `1 + u_over_x^2 = 2 qy^2`, `1 + qx^2 = qy^2 + qz^2`;
/// * (a, b) reproduce (qx, qy, qz) through the lemma-1 parametrization;
/// * `u_over_x^2 (a - b)^2 = (a + 3b)^2 - 8b^2`;
/// * `a/b + 3 = (c^2 + 2)/c` and `u_over_x (a/b - 1) = (c^2 - 2)/c`;
/// * (b, c) agree with the closed-form [`inverse`].
///
/// (a, b) are recomputed through the lemma rather than read off the closed
/// form, so a successful trace cross-validates the two routes.
/// `InternalInconsistency` signals an implementation bug, never expected.
pub fn derivation_trace(p: &SurfacePoint) -> Result<DerivationTrace, SurfaceError> {
    if !p.is_on_surface() {
        return Err(SurfaceError::NotOnSurface);
    }
    if p.x.is_zero() {
        return Err(SurfaceError::ZeroX);
    }
    if !line_membership(p).is_empty() {
        return Err(SurfaceError::OnExceptionalLine);
    }

    let one = Rational::one();
    let two = Rational::from_integer(2);
    let u = u_of(&p.y, &p.z);
    let x2 = p.x.square();
    let y2 = p.y.square();
    if &x2 + &u.square() != &two * &y2 {
        return Err(inconsistent("x^2 + u^2 = 2y^2 failed"));
    }
    if &x2 + &(&u - &one).square() != &y2 + &p.z.square() {
        return Err(inconsistent("x^2 + (u-1)^2 = y^2 + z^2 failed"));
    }

    let u_over_x = &u / &p.x;
    let qx = &u_over_x - &p.x.recip();
    let qy = &p.y / &p.x;
    let qz = &p.z / &p.x;
    if &one + &u_over_x.square() != &two * &qy.square() {
        return Err(inconsistent("1 + (u/x)^2 = 2(y/x)^2 failed"));
    }
    if &one + &qx.square() != qy.square() + qz.square() {
        return Err(inconsistent("scaled quadric equation failed"));
    }

    // Off the lines, qx != qz and qy != -1 are automatic, so the lemma
    // inverse cannot fail here.
    let (a, b) = lemma1_inverse(&qx, &qy, &qz)
        .map_err(|_| inconsistent("lemma-1 inverse failed off the lines"))?;
    if lemma1_forward(&a, &b).ok() != Some((qx.clone(), qy.clone(), qz.clone())) {
        return Err(inconsistent("lemma-1 roundtrip failed"));
    }
    if b.is_zero() {
        return Err(inconsistent("b = 0 off the lines"));
    }

    let a_minus_b = &a - &b;
    let a_plus_3b = &a + &(Rational::from_integer(3) * &b);
    if u_over_x.square() * a_minus_b.square()
        != a_plus_3b.square() - Rational::from_integer(8) * b.square()
    {
        return Err(inconsistent("hyperbola relation for (a, b) failed"));
    }

    let ratio = &a / &b;
    let c = (&u_over_x * &(&ratio - &one) + &ratio + Rational::from_integer(3)) / &two;
    if c.is_zero() {
        return Err(inconsistent("c = 0 off the lines"));
    }
    let c2 = c.square();
    if &ratio + &Rational::from_integer(3) != (&c2 + &two) / &c {
        return Err(inconsistent("a/b + 3 = (c^2+2)/c failed"));
    }
    if &u_over_x * &(&ratio - &one) != (c2 - two) / &c {
        return Err(inconsistent("u/x (a/b - 1) = (c^2-2)/c failed"));
    }

    let closed_form = inverse(p)?;
    if closed_form != ParamPair::new(b.clone(), c.clone()) {
        return Err(inconsistent("trace disagrees with closed-form inverse"));
    }

    Ok(DerivationTrace {
        u,
        u_over_x,
        qx,
        qy,
        qz,
        a,
        b,
        c,
    })
}
