//! Projective plane over Q(ζ_m): points, lines, incidence statistics and maps.

mod config;
mod homog;
mod incidence;
mod map;

pub use config::Configuration;
pub use homog::{concurrent, join, meet, ProjLine, ProjPoint};
pub use incidence::{
    orchard_check, points_on_lines, spanned_lines, IncidenceStats, SpannedLine,
};
pub use map::{apply_map, send_to_infinity, send_to_infinity_map, ProjMap};
