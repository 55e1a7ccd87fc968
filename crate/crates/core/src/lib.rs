//! Affine permutations, rational slope parking functions and the maps between them.
//!
//! Everything here is exact integer or rational arithmetic. The crate is `no_std`
//! and only needs an allocator.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod affine;
pub mod daha;
pub mod error;
pub mod parking;
pub mod maps;
pub mod qt_stats;
pub mod finite;
pub mod shi;
pub mod sommers;
pub mod sp_invert;

pub use affine::{AffinePermutation, Centroid, Inversion};
pub use error::{Error, Result};
pub use parking::{LabeledDiagram, ParkingFunction};
