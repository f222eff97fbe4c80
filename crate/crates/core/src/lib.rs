//! Exact non-symmetric Koornwinder polynomials and their Ram-Yip specializations.

pub mod algebra;
pub mod delta;
pub mod error;
pub mod groupcheck;
pub mod hecke;
pub mod parallel;
pub mod ramyip;
pub mod relations;
pub mod roots;
pub mod tables;
pub mod verify;
pub mod walks;
pub mod weyl;

pub use error::{Error, Result};
