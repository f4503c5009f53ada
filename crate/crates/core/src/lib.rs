//! Exact computation of normalized immanants of tree q-Laplacians, two-row
//! character tables of the symmetric group, and the lattice-path combinatorics
//! that interprets them.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! table entries are arbitrary-precision integers.

pub mod alpha;
pub mod character;
pub mod error;
pub mod immanant;
pub mod partition;
pub mod paths;
pub mod poly;
pub mod suite;
pub mod syt;
pub mod tree;
pub mod verify;

pub use error::{CharError, ImmanantError, ParseError, PathError, TreeError};
pub use partition::{CycleType, Partition};
pub use poly::{RatPoly, Rational};
pub use tree::{PolyMatrix, Tree};
