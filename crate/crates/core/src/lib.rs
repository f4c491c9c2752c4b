pub mod error;
pub mod braid;
pub mod lattice;
pub mod polyalg;
pub mod singdata;
pub mod verify;
pub mod degrees;
pub mod llmap;
pub mod cli;
mod serde_util;

pub use error::{Error, Result};
