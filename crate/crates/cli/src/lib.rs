//! Command-line front end for `matchforce-core`: invariant reports, family
//! generation and corpus verification of the forcing inequalities.

pub mod analysis;
pub mod app;
pub mod checks;
pub mod report;
pub mod sources;
pub mod verify;

/// Version tag written at the top of every JSON document.
pub const SCHEMA: &str = "matchforce/1";
