//! Parity games, the strategy arena, the tracking automaton, the product
//! game and the model-checking acceptance game.

mod acceptance;
mod arena;
mod parity;
mod product;
mod tracking;

pub use acceptance::{build_acceptance_game, world_letter};
pub use arena::{ArenaMode, ArenaNode, Choice, StrategyArena, TrackLetter};
pub use parity::{GameError, ParityGame, Player};
pub use product::{build_product_game, ProductGame, ProductNode};
pub use tracking::{CoBuchiView, TrackingAutomaton};
