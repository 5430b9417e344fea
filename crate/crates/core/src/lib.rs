//! Bigraded Gröbner bases, bigeneric initial ideals and partial regularity
//! regions for ideals of `k[x_0..x_n, y_0..y_m]`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideal_ops;
pub mod regularity;
pub mod samples;
pub mod staircase;

pub use error::{Error, Result};
