//! Exact-arithmetic toolkit for integral quadratic lattices, finite
//! discriminant forms, root systems and weighted-hypersurface Hodge numbers,
//! together with a verification suite for the lattice theory of cubic
//! fourfolds with an Eckardt point and the classification of quasi-K3
//! weighted Fermat fourfolds.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in the crate.

// indexed loops over both matrix dimensions are the natural idiom here
#![allow(clippy::needless_range_loop)]

pub mod cubic_pair;
pub mod discform;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod roots;
pub mod verify;
pub mod wps;

pub use error::{Error, Result};
pub use lattice::{DiscriminantGroup, GramLattice, LatticeEmbedding};
pub use matrix::{Int, IntMatrix, QMatrix, Rat};
