//! Exact computations with finite permutation groups.
//!
//! The crate covers permutations and their cycle structure, groups given by
//! generators (enumerated completely), actions on points and on `k`-subsets,
//! block systems and primitivity, and an executable form of the Iwasawa
//! simplicity criterion. Everything works by exhaustive enumeration, so it is
//! meant for small degrees (up to 7 or so) where brute force is still cheap.
//!
//! The crate is `no_std` with `alloc`; the `std` feature (on by default) only
//! adds `std::error::Error` integration through `core::error::Error`.
//!
//! Composition follows function composition: `p * q` maps `x` to `p(q(x))`,
//! so cycle products are read right to left.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod bitset;
mod error;

pub mod actions;
pub mod alternating;
pub mod group;
pub mod iwasawa;
pub mod partition;
pub mod perm;
pub mod subsets;

pub use actions::{Action, ActionKind, Block, EquivariantMap};
pub use error::{Error, ParseError, ParseErrorKind};
pub use group::{ConjugacyClass, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use iwasawa::{IwasawaReport, IwasawaStructure};
pub use partition::PartitionOfN;
pub use perm::{parse_cycles, CycleType, Permutation};

pub type Result<T, E = Error> = core::result::Result<T, E>;
