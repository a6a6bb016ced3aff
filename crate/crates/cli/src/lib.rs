//! Command-line front end for the chain-conic verifier: configuration I/O,
//! verification reports, statistical sweeps, and SVG scenes.

pub mod args;
pub mod commands;
pub mod config;
pub mod pipeline;
pub mod render;
pub mod report;
pub mod sweep;
