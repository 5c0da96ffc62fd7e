//! Exact-arithmetic evaluation of Siegel-Veech constants for strata of
//! Abelian differentials.
//!
//! This crate computes, as exact rationals, the combinatorial formulas that
//! express two classes of Siegel-Veech constants through Masur-Veech strata
//! volumes:
//!
//! - the saddle-connection constant between two fixed zeros of prescribed
//!   orders ([`sc_constant`]), and
//! - the area constant counting maximal cylinders weighted by area
//!   ([`area_constant`]), together with the Lyapunov-exponent sum it
//!   determines.
//!
//! Supporting modules provide the arithmetic substrate ([`exactmath`]),
//! streaming enumerators for the combinatorial index sets the formulas sum
//! over ([`enumerate`]), stratum signatures and pluggable volume backends
//! ([`strata`]), and exact checkers plus convergence sweeps for the
//! large-genus behavior of the constants ([`bounds`]).
//!
//! Everything is float-free: all scalar values are reduced big-integer
//! fractions, and quantities mixing a rational with a multiple of pi^2 are
//! kept symbolic ([`exactmath::PiExpression`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only forwards to the num-* backends.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod area_constant;
pub mod bounds;
pub mod enumerate;
pub mod exactmath;
pub mod rng;
pub mod sc_constant;
pub mod strata;

pub use exactmath::{ExactRational, PiExpression};
pub use strata::{Connectivity, StratumSignature, VolumeProvider};
