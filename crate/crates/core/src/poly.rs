//! Sparse exact polynomials and the symbolic surface certificates.
//!
//! [`MultiPoly`] is a sparse bivariate polynomial over [`Rational`], a
//! finite map from exponent pairs (i, j) to nonzero coefficients. The
//! zero polynomial is the empty map and equality is structural, so
//! "expands to zero" is a machine-checkable statement.
//!
//! The two certificate constructors are the reason this module exists:
//! [`identity_certificate`] proves the forward parametrization lands on
//! the surface identically, and [`line_identity_certificate`] proves each
//! of the 8 lines lies on the surface identically. Univariate certificates
//! reuse the bivariate type with the second exponent fixed at 0.

use crate::rational::Rational;
use crate::surface::SignTriple;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponents of one monomial: `(i, j)` stands for `b^i * c^j` (or `t^i`
/// with j = 0 in univariate use).
pub type Exponents = (u32, u32);

/// Sparse polynomial in canonical form: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::monomial(c, (0, 0))
    }

    /// Single term `coeff * b^i * c^j`; collapses to zero if `coeff` is.
    pub fn monomial(coeff: Rational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: Exponents) -> Rational {
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, exps: Exponents, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at (b, c). Degrees here are tiny, so plain
    /// power-and-sum is fine.
    pub fn eval(&self, b: &Rational, c: &Rational) -> Rational {
        let mut total = Rational::zero();
        for (&(i, j), coeff) in &self.terms {
            let mut term = coeff.clone();
            for _ in 0..i {
                term = term * b;
            }
            for _ in 0..j {
                term = term * c;
            }
            total = total + term;
        }
        total
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&exps, coeff) in &rhs.terms {
            out.add_term(exps, coeff);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&exps, coeff) in &rhs.terms {
            out.add_term(exps, &-coeff);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&exps, coeff)| (exps, -coeff))
            .collect();
        MultiPoly { terms }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})")?;
            if i > 0 {
                write!(f, "*b^{i}")?;
            }
            if j > 0 {
                write!(f, "*c^{j}")?;
            }
        }
        Ok(())
    }
}

/// The forward map as formal polynomials `(n_x, n_y, n_z, d)` with
/// `x = n_x/d`, `y = n_y/d`, `z = n_z/d`:
///
/// ```text
/// n_x = -b(c^2 + 2 - 4c)
/// n_y = -b(c^2 + 2 - 2c)
/// n_z = -(b^2c^2 + 2b^2 - 3b^2c - c)
/// d   = b^2c^2 + 2b^2 - 3b^2c + c - bc^2 + 2b
/// ```
pub fn forward_polynomials() -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    let b = MultiPoly::monomial(Rational::one(), (1, 0));
    let c = MultiPoly::monomial(Rational::one(), (0, 1));
    let konst = |n: i64| MultiPoly::constant(Rational::from_integer(n));
    let b2 = b.pow(2);
    let c2 = c.pow(2);

    let n_x = -&(&b * &(&(&c2 + &konst(2)) - &(&konst(4) * &c)));
    let n_y = -&(&b * &(&(&c2 + &konst(2)) - &(&konst(2) * &c)));
    let b2c2 = &b2 * &c2;
    let two_b2 = &konst(2) * &b2;
    let three_b2c = &(&konst(3) * &b2) * &c;
    let n_z = -&(&(&(&b2c2 + &two_b2) - &three_b2c) - &c);
    let d = &(&(&(&(&b2c2 + &two_b2) - &three_b2c) + &c) - &(&b * &c2)) + &(&konst(2) * &b);
    (n_x, n_y, n_z, d)
}

/// Surface residual with denominators cleared: for coordinate numerators
/// (px, py, pz) over a common denominator `den`, expands
///
/// ```text
/// 4 px^2 den^2 + (py^2 + den^2 - pz^2)^2 - 8 py^2 den^2,
/// ```
///
/// the defining equation multiplied through by den^4.
pub fn cleared_residual(
    px: &MultiPoly,
    py: &MultiPoly,
    pz: &MultiPoly,
    den: &MultiPoly,
) -> MultiPoly {
    let four = MultiPoly::constant(Rational::from_integer(4));
    let eight = MultiPoly::constant(Rational::from_integer(8));
    let px2 = px.pow(2);
    let py2 = py.pow(2);
    let pz2 = pz.pow(2);
    let den2 = den.pow(2);
    let inner = &(&py2 + &den2) - &pz2;
    &(&(&four * &(&px2 * &den2)) + &inner.pow(2)) - &(&eight * &(&py2 * &den2))
}

/// Expands the defining equation at the forward map, cleared of the
/// common denominator D^4. The result being the empty map is the machine
/// proof that the parametrization satisfies the surface identically.
pub fn identity_certificate() -> MultiPoly {
    let (n_x, n_y, n_z, d) = forward_polynomials();
    cleared_residual(&n_x, &n_y, &n_z, &d)
}

/// Residual of the line `t -> (t, sy*t, sz*(t - s1))` as a univariate
/// polynomial in t (second exponent 0). Must expand to zero for each of
/// the 8 triples.
pub fn line_identity_certificate(s: &SignTriple) -> MultiPoly {
    let t = MultiPoly::monomial(Rational::one(), (1, 0));
    let px = t.clone();
    let py = MultiPoly::monomial(s.sy.unit(), (1, 0));
    let pz = &MultiPoly::monomial(s.sz.unit(), (1, 0))
        - &MultiPoly::constant(s.sz.unit() * s.s1.unit());
    cleared_residual(&px, &py, &pz, &MultiPoly::one())
}
