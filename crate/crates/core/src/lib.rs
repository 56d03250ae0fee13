pub mod error;
pub mod decompose;
pub mod exactlin;
pub mod json;
pub mod liealg;
pub mod repkit;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
