pub mod arith;
pub mod error;
pub mod families;
pub mod literal;
pub mod reduction;
pub mod valuation;
pub mod weierstrass;

pub use error::{Error, Result};
