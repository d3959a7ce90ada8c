//! Places, valuations, residue maps, Newton polygons and Hensel lifting.

mod hensel;
mod local;
mod newton;
mod padic;
mod place;

pub use hensel::{hensel_root, residual_valuation};
pub use local::{
    FunctionFieldPlace, LocalContext, PadicContext, RationalPrime, ResidueField, DECISION_MARGIN,
};
pub use newton::{newton_polygon, NewtonPolygon, Segment};
pub use padic::{PadicField, PadicNumber};
pub use place::{valuation_int, valuation_rational, Place};
