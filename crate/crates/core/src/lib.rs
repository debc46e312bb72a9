//! Skew Schur function expansions, the Schur-positivity and support
//! containment posets on skew shapes, and executable checks of the maximal
//! support results for equitable ribbons.
//!
//! The crate is organised bottom-up:
//!
//! * [`shapes`]: partitions, compositions, skew shapes, ribbons, enumerators.
//! * [`tableaux`]: Littlewood–Richardson fillings and standard tableaux with
//!   a prescribed descent set.
//! * [`expansion`]: Schur expansions by the LR rule and by descent sets.
//! * [`posets`]: equivalence classes and the two orders on them.
//! * [`theorems`]: equitable ribbons, the witness tableau construction and the
//!   verification reports.

pub mod error;
pub mod expansion;
pub mod posets;
pub mod shapes;
pub mod tableaux;
pub mod theorems;

pub use error::{Error, Result};
pub use expansion::{ExpansionMemo, SchurExpansion};
pub use shapes::{Composition, DescentSet, Partition, Ribbon, SkewShape};
