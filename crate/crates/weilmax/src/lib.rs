//! Exact-arithmetic toolkit for extremal isogeny classes of abelian
//! varieties over finite fields.
//!
//! Everything is computed over the integers or the rationals: polynomial
//! arithmetic ([`intpoly`]), real root location by Sturm sequences
//! ([`realroots`]), integer and polynomial factorization ([`arith`],
//! [`polyfactor`]), Weil polynomial classification ([`weil`]), the
//! minimal-trace search over totally positive algebraic integers
//! ([`tracemin`]), construction and exhaustive verification of the extremal
//! classes ([`maxclass`]), and an optional LMFDB cross-check client
//! ([`lmfdb`]). No floating point is used anywhere in the mathematical core.

pub mod arith;
pub mod config;
pub mod intpoly;
pub mod lmfdb;
pub mod maxclass;
pub mod polyfactor;
pub mod realroots;
pub mod report;
pub mod tracemin;
pub mod weil;
