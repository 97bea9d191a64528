//! Exact equivariant cohomology toolkit: Chevalley–Eilenberg complexes,
//! relative and invariant cohomology, Leray–Serre style spectral sequences of
//! filtered complexes, and exact-sequence obstruction checks.

#![allow(clippy::needless_range_loop)]

pub mod ceforms;
pub mod cli;
pub mod cohom;
pub mod complex;
pub mod error;
pub mod exactla;
pub mod liealg;
pub mod obstruct;
pub mod specseq;

pub use error::{Error, Result};
