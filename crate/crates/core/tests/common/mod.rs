#![allow(dead_code)]

pub mod automata;
pub mod formulas;
pub mod oracles;
