//! Generating sets, generation certificates and exact Cayley-graph diameters
//! for direct powers of alternating groups.
//!
//! * [`perm`]: permutations, cycle notation, Lehmer ranks.
//! * [`power`]: tuples in `G^k` and their mixed-radix codes.
//! * [`gensets`]: the named generating-set families and their JSON format.
//! * [`hall`]: column-wise generation certificates and the `A_5` pair census.
//! * [`diameter`]: bitset breadth-first search and bidirectional word lengths.
//! * [`verify`]: the bound-by-bound verification suite.
//! * [`cli`]: the command-line front end used by the `altdiam` binary.

pub mod cli;
pub mod diameter;
pub mod error;
pub mod gensets;
pub mod hall;
pub mod perm;
pub mod power;
pub mod verify;

pub use diameter::{word_length, BfsReport, Budget, Convention, DiameterEngine};
pub use error::{DiameterError, GenSetError, HallError, PermError, PowerError};
pub use gensets::GenSet;
pub use hall::{hall_check, HallReport};
pub use perm::{Parity, Perm};
pub use power::{Coding, PowerCodec, PowerElement, RankIndex};
