//! Command-line front end, parallel enumeration engine and file formats
//! for [`permcross_core`].

pub mod cli;
pub mod engine;
pub mod export;
pub mod fixtures;
pub mod format;

pub use permcross_core;
