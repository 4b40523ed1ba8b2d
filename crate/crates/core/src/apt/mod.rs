//! Alternating parity tree automata and the formula translation.

mod automaton;
mod classify;
mod export;
mod priorities;
mod translate;

pub use automaton::{Apt, AptError, AptState, Letter, StateKind, Transition, MAX_ATOMS};
pub use classify::{classify_apt, AptClass};
pub use priorities::complete_priorities;
pub use translate::formula_to_apt;
