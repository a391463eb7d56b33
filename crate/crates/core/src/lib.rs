//! Exact-arithmetic toolkit for the quartic surface
//! `4x^2 + (y^2 + 1 - z^2)^2 = 8y^2`.
//!
//! The surface is rational: away from 8 exceptional lines it is the image
//! of an explicit parametrization by two rational numbers, with an
//! explicit inverse. This crate implements that correspondence end to end
//! over exact arbitrary-precision rationals:
//!
//! * [`rational`] — the canonical-fraction scalar type;
//! * [`quadrics`] — the two auxiliary quadric parametrizations the
//!   construction is built from, each with its inverse;
//! * [`surface`] — residual, the 8 lines, classification, the forward and
//!   inverse birational maps, and a fully checked derivation trace;
//! * [`poly`] — sparse exact polynomials and the symbolic certificates
//!   proving the parametrization and line identities;
//! * [`census`] — a brute-force bounded-height enumeration of rational
//!   surface points, used to audit the dichotomy empirically.
//!
//! Everything is exact; there is no floating point anywhere.

pub mod census;
pub mod poly;
pub mod quadrics;
pub mod rational;
pub mod surface;

pub use census::{
    audit, brute_force_surface_points, census_order, param_sweep, rationals_up_to, CensusAudit,
    CensusError, CensusRecord, CensusReport,
};
pub use poly::{
    cleared_residual, forward_polynomials, identity_certificate, line_identity_certificate,
    MultiPoly,
};
pub use quadrics::{
    lemma1_forward, lemma1_inverse, lemma2_forward, lemma2_inverse, Lemma1Error, Lemma2Error,
};
pub use rational::{ParseRationalError, Rational};
pub use surface::{
    classify, derivation_trace, forward, forward_denominator, inverse, inverse_b_denominator,
    inverse_c_denominator, line_membership, residual, u_of, DerivationTrace, ParamPair,
    PointClass, Sign, SignTriple, SurfaceError, SurfacePoint,
};
