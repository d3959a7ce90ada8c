//! Command implementations behind the `tamagawa` binary.

pub mod commands;
pub mod error;
pub mod fuzzing;
pub mod input;

pub use error::CliError;
