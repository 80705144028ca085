//! Exact incidence geometry for orchard-type point/line configurations.
//!
//! Coordinates live in cyclotomic fields, so every collinearity and
//! coincidence is decided exactly.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod exactfield;
pub mod polytopal;

pub use error::{Error, Result};
pub use exactfield::{FieldElement, Rational, Sign};
pub mod projgeom;
pub mod render;

pub use projgeom::{Configuration, IncidenceStats, ProjLine, ProjPoint};
