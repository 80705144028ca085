//! Exact constructors for the configuration families. Each constructor
//! re-verifies its contracted statistics before returning.

mod common;
mod figure5;
mod grids;
mod pencils;
mod stars;

pub use common::{reflection_x, rotation};
pub use figure5::{reconstruct_figure5, Figure5Result};
pub use grids::{dudeney21, nine_tree, square_grid, square_plus_infinity};
pub use pencils::{
    pencil_even, pencil_even_configuration, pencil_odd, pencil_odd_distances,
    pencil_odd_instance,
};
pub use stars::{
    collapsed_coincidences, collapsed_pairs, collapsed_removal, collapsed_star,
    collapsed_star_instances, double_star, double_star_to_brass, ring_ratio, star_rings,
    triple_pentagram, CollapsedStar, Ring, StarSpec,
};
