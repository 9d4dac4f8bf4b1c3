//! Exact construction of the irreducible representations of the symmetric
//! group from Young-tableau projectors.
//!
//! The projectors `p_ij` of a shape span a two-sided ideal of the group
//! algebra and multiply like matrix units up to a constant matrix `g'`.
//! Expanding a permutation in this basis gives representation matrices whose
//! entries stay in {-1, 0, +1}; summing the projectors against `g'^{-1}`
//! gives the central units, whose class coefficients are the characters.

pub mod characters;
pub mod claims;
pub mod error;
pub mod limits;
pub mod matrix;
pub mod perm_core;
pub mod projectors;
pub mod representations;
pub mod report;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use limits::{Level, Limits};
pub use matrix::{IntMatrix, RatMatrix};
pub use perm_core::{conjugacy_classes, AlgebraElement, CycleType, Permutation};
pub use projectors::IrrepBundle;
pub use report::CheckReport;
pub use verify::VerifyReport;
pub use tableaux::{Partition, StandardTableau, TableauFilling};
