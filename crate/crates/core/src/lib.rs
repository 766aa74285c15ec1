#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod hilbert;
pub mod groebner;
pub mod linalg;
pub mod module;
pub mod ring;
pub mod blowup;
pub mod dao;
pub mod lab;

pub use error::{AlgebraError, Result};
