//! Exact arithmetic, constructions and invariants for rank-metric codes.

pub mod analysis;
pub mod audit;
pub mod catalog;
pub mod codes;
pub mod enumerate;
pub mod error;
pub mod fqlinalg;
pub mod genweights;
pub mod gf;

pub use error::{Error, Result};
