//! Computing with finitely presented permutative categories.
pub mod cli;
pub mod error;
pub mod functors;
pub mod gabriel;
pub mod modelcat;
pub mod monoid;
pub mod permcat;
pub mod report;
pub mod rule;
pub mod smfunctor;

pub use error::{Error, Result};
