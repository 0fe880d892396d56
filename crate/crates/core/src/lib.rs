//! Exact combinatorics of break divisors and parking functions on multigraphs,
//! the symmetric-group modules they carry, and numerical Donaldson–Thomas
//! invariants of loop quivers.
//!
//! The crate is `no_std` and only needs `alloc`. All counts are computed in
//! arbitrary precision; nothing in here touches floating point.
//!
//! - [`multigraph`]: general connected multigraphs, break/orientable/parking predicates,
//!   break-divisor enumeration and Matrix-Tree counting.
//! - [`knm`]: the complete multigraph `K_n^m`, residue tuples, the shift action and
//!   canonical representatives of shift classes.
//! - [`counting`]: Möbius/φ, Ramanujan sums, orbit counts and DT invariants by closed formula.
//! - [`series`]: truncated power series over the rationals and the Euler-product route to DT.
//! - [`reptheory`]: partitions, class functions, Murnaghan–Nakayama and Frobenius characteristics.
#![no_std]

extern crate alloc;

mod budget;
mod error;

pub mod counting;
pub mod knm;
pub mod multigraph;
pub mod reptheory;
pub mod series;

pub use budget::Budget;
pub use error::{Error, Result};
pub use knm::{KnmParams, ResidueTuple, ShiftClass};
pub use multigraph::{Divisor, Multigraph};
pub use reptheory::{ClassFunction, Partition, SymFnBasis, SymFnExpansion};
pub use series::{DtTable, ExactSeries};
