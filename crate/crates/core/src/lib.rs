//! Exact computer algebra for symmetric-group character tables: characters
//! by constant-term extraction with a rim-hook cross-check, restricted sums
//! of character powers, symbolic closed forms for the hook and two-row
//! square sums, and recurrence guessing for everything beyond.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! every value the crate emits is either computed definitionally or
//! certified against an independent route before it leaves.

pub mod charsums;
pub mod closedform;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod polyengine;
pub mod recurrence;
pub mod unipoly;

pub use charsums::{SumFamily, SumRequest};
pub use closedform::{
    BinomialShift, BinomialTerm, ClosedForm, ClosedFormBase, RationalFunction, SymLaurent,
};
pub use error::{Error, Result};
pub use partitions::{CycleType, Partition};
pub use polyengine::{LaurentPoly, PruneWindow};
pub use recurrence::Recurrence;
pub use unipoly::UniPoly;
