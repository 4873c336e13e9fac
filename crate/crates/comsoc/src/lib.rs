//! Exact solvers for multiwinner elections and hedonic games at "desk scale":
//! committee rules (sum, cover, maximin and proportional-approval flavors),
//! recognition of single-peaked/single-crossing preference structure,
//! coalition stability verification and search, and the brute-force oracles
//! and instance generators used to certify all of it.
//!
//! The crate favors exactness and determinism over raw speed: every solver
//! either enumerates, branches with sound pruning, or runs a parameterized
//! algorithm whose answers are cross-checked against enumeration in the test
//! suite. Ties are broken lexicographically throughout, so equal inputs give
//! byte-equal outputs. All solver entry points are pure functions of their
//! arguments; shared state is never mutated, so values can be used freely
//! across threads.

pub mod cli;
pub mod error;
pub mod hedonic;
pub mod limits;
pub mod multiwinner;
pub mod oracles;
pub mod profiles;

pub use error::{Error, Result};
