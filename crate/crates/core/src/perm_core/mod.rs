//! Permutations of `{1..n}`, cycle structure, conjugacy classes, and the
//! sparse integer group algebra that serves as the brute-force oracle for
//! every projector identity.

mod algebra;
mod classes;
mod permutation;

pub use algebra::AlgebraElement;
pub use classes::{conjugacy_classes, factorial, CycleType};
pub use permutation::Permutation;
