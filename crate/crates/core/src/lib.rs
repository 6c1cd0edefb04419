#![no_std]
// index loops mirror the formulas
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod arith;
pub mod distribution;
pub mod error;
pub mod expr;
pub mod gnla;
pub mod integrals;
pub mod lie;
pub mod tanaka;
pub mod symbols;

pub use error::{Error, Result};
