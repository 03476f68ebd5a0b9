//! Exact combinatorics and linear algebra for simplicial complexes and
//! simplicial posets over prime fields: face/h-vector enumeration, reduced
//! homology, Cohen-Macaulay/Buchsbaum classifiers, face-ring quotients by
//! linear systems of parameters with their socle and kernel dimensions, and
//! the numerical inequality checks built on top of those invariants.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); the companion
//! `bblab` crate provides the command-line front end and file formats.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
// Index loops stay readable here: most hot loops walk several parallel
// vectors (f/h/q/s/...) by the same degree index.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bounds;
pub mod complex;
pub mod constructions;
pub mod facering;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod posets;
pub mod suites;

mod util;

/// Seed used by every deterministic default path (CLI and suites).
pub const DEFAULT_SEED: u64 = 0x5EED;
