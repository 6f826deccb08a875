//! Relation ideals of rational polynomials.
//!
//! Given a monic irreducible `f ∈ ℚ[Z]` and its Galois group acting on a
//! labelled tuple of roots, this crate computes the reduced lexicographic
//! Gröbner basis `f̂₁, …, f̂ₙ` of the ideal of all polynomial relations among
//! the roots. The roots are approximated p-adically at a prime where `f`
//! splits, the basis is obtained from an explicit Lagrange-type interpolation
//! over the group orbit, and the rational coefficients are recovered from
//! their symmetric residues.
//!
//! The crate is `no_std` (with `alloc`) when built without the `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bmoller;
pub mod error;
pub mod exactring;
pub(crate) mod linalg;
pub mod multipoly;
pub mod padiclift;
pub mod permgrp;
pub mod relideal;
pub mod splitfield;

#[cfg(feature = "parallel")]
pub mod parallel;

pub use error::{Error, Result};
pub use exactring::{ExactInt, Integers, ModRing, ModRingElem, Rational, Rationals, Ring};
pub use multipoly::{Monomial, MultiPoly, TriangularBasis, UniPoly};
pub use permgrp::{Perm, PermGroup, StabChain};
