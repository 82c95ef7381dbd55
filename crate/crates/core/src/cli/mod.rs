//! Documents, the seeded instance generator and the command-line front end.

pub mod codec;
pub mod doc;
pub mod generate;
pub mod run;

pub use run::run;
