#![no_std]

extern crate alloc;

pub mod coalg;
pub mod error;
pub mod exactlin;
pub mod fdalg;
pub mod modres;
pub mod field;
pub mod quivalg;
pub mod rational;
pub mod transfer;

pub use error::{Error, Result};
pub use exactlin::{Mat, Subspace};
pub use field::{FieldSpec, Scalar};
