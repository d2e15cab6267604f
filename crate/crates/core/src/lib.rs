//! Nilpotent orbits of classical Lie algebras: orbit posets, classification
//! of minimal degenerations, and the duality maps between special pieces.

pub mod context;
pub mod degeneration;
pub mod duality;
pub mod error;
pub mod exceptional;
pub mod label;
pub mod lusztig;
pub mod orbits;
pub mod partition;
pub mod render;
pub mod report;

pub use context::{Algebra, Family, GroupForm, Orbit, OrbitContext, VeryEvenTag};
pub use degeneration::{classify, classify_detailed, reduce_pair, Classification, ReductionTrace};
pub use duality::{apply_d, apply_dls, apply_f, DualityMap};
pub use error::{Error, Result};
pub use exceptional::{ExceptionalAlgebra, ExceptionalGraph};
pub use label::{Action, Kind, SingularityLabel, Style};
pub use orbits::{collapse, enumerate_orbits, is_special, orbit_dimension, OrbitPoset};
pub use partition::Partition;
pub use render::{emit_dot, emit_json, emit_text, RenderedGraph};
pub use report::Report;
