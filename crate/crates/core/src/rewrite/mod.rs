//! Balanced identities and equational deduction by string rewriting.
//!
//! A step `w1 → w2` replaces a factor `ζ(s)` of `w1` by `ζ(t)` for some
//! identity `s ≈ t` of the system (used in either direction) and some
//! substitution `ζ` of non-empty words. For balanced identities every step
//! preserves the occurrence count of every letter, so all words of a
//! deduction are arrangements of one letter multiset. That finite set is the
//! whole search space for [`derivable`] and [`Congruence`].

mod engine;
mod matching;
mod system;
mod trace;

pub use engine::{component_classes, derivable, one_step_rewrites, Congruence};
pub use matching::{match_full, Substitution};
pub use system::{collapse_system, Direction, Identity, IdentitySystem};
pub use trace::{DeductionTrace, RewriteStep};
