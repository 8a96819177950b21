//! Exact arithmetic for gauge-theoretic invariants of Brieskorn homology
//! spheres and their cyclic quotients.
//!
//! Everything here is computed over exact number types: arbitrary-precision
//! rationals, residues modulo an odd prime, cyclotomic field elements and
//! truncated power series about t = 1. The only floating point in the crate
//! is the high-precision oracle in [`bigfloat`], which exists to cross-check
//! the exact evaluations and is never the primary path.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI and file formats live in the
//! companion `instanton-cli` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bigfloat;
pub mod cyclotomic;
pub mod error;
pub mod flatconn;
pub mod gsig;
pub mod moduli;
pub mod poly;
pub mod rational;
pub mod residue;
pub mod rho;
pub mod seifert;
pub mod series;

pub use error::Error;
pub use rational::QRat;
