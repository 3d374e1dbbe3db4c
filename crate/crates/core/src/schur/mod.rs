//! Symmetric functions in the Schur basis with explicit degree truncation.

pub mod lr;
pub mod partition;
pub mod symfn;

pub use lr::{JacobiTrudi, LittlewoodRichardson, ProductRule};
pub use partition::Partition;
pub use symfn::{has_alternating_signs, sigma_pow, SymFn};
