//! Exact computation of spin Kostka polynomials, spin Hall-Littlewood
//! functions and spin q,t-Kostka polynomials, together with the classical
//! objects they are built from (Schur, Schur Q-, Hall-Littlewood and
//! Macdonald functions).
//!
//! All arithmetic is exact: coefficients are arbitrary precision rationals,
//! sparse polynomials in `t` or `q,t`, or rational functions in `q,t`.

pub mod error;
pub mod hall_littlewood;
pub mod macdonald;
pub mod partitions;
pub mod rings;
pub mod spin;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Partition, StrictPartition};
pub use rings::{PolyQT, PolyT, RatQT};
