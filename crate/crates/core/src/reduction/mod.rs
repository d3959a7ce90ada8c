//! Local reduction at places of residue characteristic at least 5, and
//! global Tamagawa numbers over `F_p(t)`.

mod global;
mod kodaira;
mod local;

pub use global::{bad_places, global_tamagawa, GlobalTamagawa, PlaceReduction};
pub use kodaira::KodairaType;
pub use local::{
    minimal_model_at, observation_fastpath, tate_reduce, MinimalModel, ReductionResult,
};
