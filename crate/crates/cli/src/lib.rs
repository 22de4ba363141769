//! Command-line front end for the qkraw library.

pub mod app;
pub mod emit;
