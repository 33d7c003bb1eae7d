//! Library half of the command-line front end; the binary in `main.rs`
//! is a thin parser over [`commands`].

pub mod archimedes;
pub mod commands;
pub mod output;
