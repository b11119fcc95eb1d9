//! Exact computations for Clifford modular tensor categories, their spin
//! modular functors, and N=1 superconformal minimal models.

pub mod builtin;
pub mod cli;
pub mod clifford;
mod error;
pub mod exactnum;
pub mod fusion;
pub mod minimal;
pub mod spinfunctor;
pub mod verma;

pub use error::{Error, Result};
