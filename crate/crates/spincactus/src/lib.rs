//! Type D_n spinor crystals, short semi-standard Young tableaux and the
//! cactus-group action on them.
//!
//! The crate is `no_std` and only needs `alloc`. Every operation is a pure
//! function on immutable values.
//!
//! Module overview:
//! - [`weights`]: the weight lattice of D_n in doubled-integer encoding.
//! - [`crystal`]: the spinor crystal and its tensor powers.
//! - [`decomp`]: the index sets of highest-weight elements and the branching rule.
//! - [`shapes`]: cell diagrams, short Young diagrams, tableaux and the bijections between them.
//! - [`cactus`]: cactus-group words in both presentations and a relation checker.
//! - [`action`]: free intervals, the generator actions and the crystal oracle.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod action;
pub mod cactus;
pub mod crystal;
pub mod decomp;
mod error;
pub mod shapes;
pub mod weights;

pub use error::{Error, Result};

/// Default bound on `n * N` for brute-force scans over all `2^(n*N)` tensor elements.
pub const DEFAULT_BRUTE_LIMIT: usize = 20;
