//! Entanglement of multipartite pure states under distinguishable, bosonic,
//! fermionic and general Young-tableau statistics.
//!
//! The crate is organized bottom-up:
//!
//! - [`tensor`], [`permutation`], [`matrix`]: dense complex tensors, the
//!   permutation action on slots, (anti)symmetrization, contractions,
//!   permanents and determinants.
//! - [`young`]: partitions, tableaux, Young symmetrizers, their projectors
//!   and the dimension formulas.
//! - [`analysis`]: S-rank and the simplicity certificates (S-rank criterion,
//!   quadratic relations, Plücker relations).
//! - [`states`]: pure and mixed states, every Segre map, the operator-level
//!   Segre map and unitary-orbit dimensions.
//! - [`measures`]: a pure-state entanglement functional and a convex-roof
//!   upper bound for mixed states.
//! - [`cli`] and [`verify`]: the command-line surface and the randomized
//!   verification harness.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod measures;
pub mod permutation;
pub mod random;
pub mod states;
pub mod tensor;
pub mod verify;
pub mod young;

pub use analysis::{RankOptions, SimplicityReport, Statistics};
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use tensor::{Complex64, ComplexTensor};
pub use young::{Partition, YoungTableau};
