//! ω-word automata, determinization constructions and membership of
//! ultimately periodic words.

mod automaton;
mod buchi;
mod circle;
mod classify;
mod export;
mod focus;
mod mh;
mod permutation;
mod upword;

#[cfg(test)]
mod testing;

pub use automaton::{explore, Automaton, Flavor, IndexedAutomaton, WordAutomaton, WordError};
pub use buchi::{parity_to_buchi, parity_to_buchi_scc, ParityToBuchi};
pub use circle::{circle_determinize, Circle, CircleState};
pub use classify::{classify_word, WordClass};
pub use focus::{
    focus_history_determinize, resolver_accepts, AgeResolver, Focus, FocusState, Resolver,
};
pub use mh::{miyano_hayashi, MiyanoHayashi};
pub use permutation::{permutation_determinize, PermState, Permutation};
pub use upword::{load_vectors, membership_upword, save_vectors, UPWord, UpWordVector};
