//! The shifted plactic monoid: shifted tableaux, mixed and SK insertion, the
//! shifted Knuth relations, shifted jeu de taquin, and Schur P/Q expansions.

pub mod enumerate;
pub mod error;
pub mod insertion;
pub mod jdt;
pub mod letter;
pub mod partition;
pub mod rewriting;
pub mod ssdt;
pub mod symfunc;
pub mod tableau;

pub use error::{Error, Result};
pub use letter::{PrimedLetter, Word};
pub use partition::{Partition, StrictPartition};
pub use tableau::{
    Cell, ShiftedTableau, SkewShiftedTableau, SkewStandardShiftedTableau, StandardShiftedTableau,
    YoungTableau,
};

pub use insertion::{
    mixed_insertion, mread, p_mix, p_rsk, rsk_insertion, special_recording_tableau, InsertionResult,
};
pub use jdt::{
    delta, shifted_jdt_rectify, skew_mread, skew_rect, stan_ssdt, stan_tableau, stan_word,
};
pub use ssdt::{phi, psi, read, sk_insertion, DecompositionTableau};
