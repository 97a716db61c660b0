//! Exact structure-constant computations for Lie algebras, Lie coalgebras, Nijenhuis
//! operators and Yang-Baxter type equations over rational functions in named parameters.

pub mod catalog;
pub mod cli;
pub mod construct;
pub mod error;
pub mod multilinear;
pub mod scalars;
pub mod solver;
pub mod structures;

pub use error::{Error, Result};
