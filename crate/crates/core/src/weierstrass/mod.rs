//! Weierstrass models: invariants, changes of variables, the group law,
//! short forms and the Hasse invariant.

mod group;
mod model;
mod short;

pub use group::{CurvePoint, DEFAULT_ORDER_BOUND};
pub use model::{StandardInvariants, Transform, WeierstrassModel};
pub use short::hasse_invariant;
