//! Exact computation with finite cycle sets, the involutive non-degenerate
//! Yang-Baxter solutions they encode, and finite left braces.
//!
//! The central question handled here is simplicity: a cycle set is simple
//! when its only congruences are trivial. [`characterize`] decides it through
//! the ideals of the left brace on the permutation group ([`gbrace`]) and
//! checks every verdict against the brute-force congruence oracle.

pub mod brace;
pub mod characterize;
pub mod cycleset;
pub mod error;
pub mod gbrace;
pub mod io;
pub mod perm;

pub use brace::{Ideal, IdealLattice, LeftBrace};
pub use cycleset::{Congruence, CycleSet, Solution};
pub use error::{Error, Result};
pub use gbrace::{gbrace, GBrace};
pub use perm::{Perm, PermGroup};
