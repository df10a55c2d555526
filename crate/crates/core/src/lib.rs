//! Prime spectra, minimal-prime topology and z°-submodules of finite modules
//! over finite product rings `Z_{n1} x ... x Z_{nk}`, plus an exhaustive
//! harness that re-checks the structural theorems about them on a corpus.

pub mod error;
pub mod module;
pub mod parse;
pub mod ring;
pub mod spectrum;
pub mod verify;
pub mod zsub;

pub use error::{Error, Result};
