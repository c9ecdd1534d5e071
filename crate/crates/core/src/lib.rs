//! Exact combinatorics of the abacus, z-labels and parallelotope tilings, together with three
//! independent engines for canonical-basis columns of the level-one Fock space.

pub mod abacus;
pub mod beadops;
pub mod canonical;
pub mod error;
pub mod fock;
pub mod labels;
pub mod laurent;
pub mod partition;
pub mod polytope;

pub use abacus::{Abacus, BlockId};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use partition::Partition;
