//! The `bv` command-line calculator: an element grammar, group commands,
//! verification drivers and diagram output.

pub mod app;
pub mod grammar;
pub mod render;
