//! Stable graphs: representation, canonical forms, enumeration.

pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod marking;

pub use canon::{canonicalize, canonicalize_with, union_key, CanonLimits, CanonicalKey};
pub use enumerate::{
    enumerate_keyed, enumerate_labelled_by_legs, enumerate_labelled_by_legs_with, enumerate_stable,
    enumerate_stable_with, Budget, Classes, EnumOptions,
};
pub use graph::StableGraph;
pub use marking::verify_marking_identity;
