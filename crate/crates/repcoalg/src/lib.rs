//! Parsing, reports and the command-line driver for [`repcoalg_core`].

pub mod cli;
pub mod parse;

pub use repcoalg_core as core;
