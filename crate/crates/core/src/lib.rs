//! Tropical and non-negative tropical toric prevarieties in exact arithmetic.

pub mod cone;
pub mod error;
pub mod exactla;
pub mod io;
pub mod multiproj;
pub mod sysfan;
pub mod tropembed;
pub mod troppre;

pub use error::{Error, Result};
