//! Exact GIT stability analysis of (2,2) divisors in P1 × P2.

pub mod error;
pub mod factorizer;
pub mod bipoly;
pub mod boundary;
pub mod classifier;
pub mod fibration;
pub mod forms;
pub mod json;
pub mod oneps;
pub mod points;
pub mod scalars;
pub mod singularity;
pub mod weightlp;

pub use error::Error;

#[cfg(test)]
mod properties;
