// SPDX-License-Identifier: Apache-2.0

//! Skew-cyclic (θ-cyclic) codes over finite fields.
//!
//! * [`field`]: GF(p^m) with log tables and Frobenius automorphisms.
//! * [`skew`]: the skew polynomial ring `GF(q)[X; θ]`.
//! * [`divisors`]: right divisors of `X^n - 1`, i.e. generator polynomials.
//! * [`code`]: θ-cyclic codes, encoding, check matrices and minimum distance.
//! * [`bch`]: skew-BCH codes and their syndrome decoder.
//! * [`search`]: the code search driver.
//! * [`tables`]: bundled published generators and best-known distances.

pub mod bch;
pub mod code;
pub mod distance;
pub mod divisors;
pub mod error;
pub mod field;
pub mod io;
pub mod search;
pub mod skew;
pub mod tables;
pub mod tilde;

pub use crate::bch::{DecodeResult, DecodeStrategy, KeyEquationState, SkewBchCode};
pub use crate::code::SkewCyclicCode;
pub use crate::distance::{DistanceKind, DistanceReport};
pub use crate::divisors::{DivisorMode, DivisorQuery};
pub use crate::error::{Error, Result};
pub use crate::field::{Automorphism, Elem, Field, FieldElement};
pub use crate::skew::{SkewPoly, SkewRing};
pub use crate::tilde::TildePoly;
