//! Rendering and command-line plumbing for the hydra sieve: R-flavored
//! text listings, JSON serialization, and SVG wheel diagrams on top of
//! [`hydra_core`].

pub mod cli;
pub mod json;
pub mod render;
pub mod svg;
