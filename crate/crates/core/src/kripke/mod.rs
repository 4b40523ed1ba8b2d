//! Kripke structures and the fixpoint semantics of the μ-calculus.

mod semantics;
mod structure;

pub use semantics::{eval_semantics, satisfies, unfold_once, Valuation};
pub use structure::{serial_structures, KripkeError, KripkeStructure, World};
