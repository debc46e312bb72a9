//! Partitions, compositions, skew shapes and ribbons.

mod composition;
pub mod enumerate;
mod partition;
mod ribbon;
mod skew;

pub use composition::{Composition, DescentSet};
pub use enumerate::{compositions, partitions, ribbons, skew_shapes};
pub use partition::{dominance_leq, Partition};
pub use ribbon::Ribbon;
pub use skew::SkewShape;
