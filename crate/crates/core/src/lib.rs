//! Satisfiability checking for the modal μ-calculus.
//!
//! Formulas are translated to alternating parity tree automata whose
//! emptiness is decided by a parity game built from a strategy arena and a
//! (history-)deterministic tracking automaton. Satisfiable formulas come
//! with an extracted and independently verified Kripke model.

pub mod apt;
pub mod bitset;
pub mod formula;
pub mod game;
pub mod graph;
pub mod kripke;
pub mod pipeline;
pub mod solver;
pub mod word;

pub use bitset::StateSet;
pub use formula::{parse, Formula};


pub use kripke::KripkeStructure;
pub use pipeline::{decide_sat, model_check, SatOptions, Verdict};
