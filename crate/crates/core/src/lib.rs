//! Plactic biwords and insertion for bumpless pipe dreams.
//!
//! A bumpless pipe dream ([`Bpd`]) is built from a plactic biword by
//! successive insertions; the generalized Knuth relations ([`knuth`]) describe
//! exactly when two biwords build the same pipe dream.

pub mod bpd;
pub mod error;
pub mod insertion;
pub mod knuth;
pub mod perm;
pub mod poly;
pub mod schubert;
pub mod tableau;
pub mod verify;

pub use bpd::{Bpd, Tile};
pub use error::{Error, Result};
pub use insertion::{
    inverse_left, inverse_right, left_insert, maxword, minword, phi, right_insert, Biletter, InsertionOutcome,
    PlacticBiword, Side,
};
pub use knuth::{KnuthMove, Rule};
pub use perm::{CoverData, DecoratedChain, Permutation};
pub use poly::{IntPolynomial, Monomial};
pub use tableau::Ssyt;
