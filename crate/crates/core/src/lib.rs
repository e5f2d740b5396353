//! Construction, certification and invariants of hexagonal tilings (cubic
//! girth-6 graphs whose hexagons tile the torus or the Klein bottle), their
//! locally C6 duals, and the locally grid graphs obtained from them by
//! contracting a perfect matching.

pub mod graph;
pub mod snf;
pub mod surface;
pub mod hex_families;
pub mod grid_families;
pub mod duality;
pub mod minors;
pub mod analysis;
