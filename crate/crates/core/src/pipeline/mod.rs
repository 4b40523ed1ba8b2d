//! The satisfiability pipeline: formula, tree automaton, strategy arena,
//! tracking automaton, (history-)deterministic automaton, product game,
//! solver and witness model. Also model checking through the acceptance
//! game.

mod extract;

use crate::apt::{classify_apt, formula_to_apt, Apt, AptError};
use crate::formula::{check_guarded, classify_fragment, closure, make_clean, Formula, FragmentReport};
use crate::game::{
    build_acceptance_game, build_product_game, ArenaMode, CoBuchiView, StrategyArena, TrackLetter,
    TrackingAutomaton,
};
use crate::kripke::{satisfies, KripkeError, KripkeStructure};
use crate::solver::{solve_buchi, solve_parity, Solution};
use crate::word::{Automaton, Circle, Focus, MiyanoHayashi, ParityToBuchi, Permutation, WordError};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

pub use extract::extract_model;

/// The construction turning the tracking automaton into a
/// (history-)deterministic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Circle,
    MiyanoHayashi,
    Focus,
    Permutation,
}

impl Method {
    /// The most specific construction for a fragment.
    pub fn for_fragment(r: &FragmentReport) -> Option<Method> {
        if r.limit_linear {
            Some(Method::Circle)
        } else if r.af_aconjunctive {
            Some(Method::Focus)
        } else if r.alternation_free {
            Some(Method::MiyanoHayashi)
        } else if r.aconjunctive {
            Some(Method::Permutation)
        } else {
            None
        }
    }

    pub fn is_deterministic(self) -> bool {
        self != Method::Focus
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Circle => "circle",
            Method::MiyanoHayashi => "mh",
            Method::Focus => "focus",
            Method::Permutation => "perm",
        }
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "circle" => Ok(Method::Circle),
            "mh" => Ok(Method::MiyanoHayashi),
            "focus" => Ok(Method::Focus),
            "perm" => Ok(Method::Permutation),
            _ => Err(format!("unknown method `{s}` (expected circle, mh, focus or perm)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("formula is outside the supported fragments ({0}); deciding it needs a general parity determinization such as Safra–Piterman or Henzinger–Piterman")]
    Unsupported(String),
    #[error("method {method} does not apply: {reason}")]
    NotApplicable { method: Method, reason: String },
    #[error("formula is not guarded")]
    Unguarded,
    #[error(transparent)]
    Automaton(#[from] AptError),
    #[error(transparent)]
    Kripke(#[from] KripkeError),
    #[error("witness extraction needs a deterministic tracking automaton")]
    Nondeterministic,
    #[error("witness extraction failed: {0}")]
    Extraction(String),
    #[error("extracted witness does not satisfy the formula")]
    WitnessRejected,
    #[error("methods disagree: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Sat,
    Unsat,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Sizes {
    pub closure: usize,
    pub apt_states: usize,
    pub apt_priorities: usize,
    pub tracking_states: usize,
    pub h_states: usize,
    pub h_bound: f64,
    pub arena_nodes: usize,
    pub arena_bound: f64,
    pub game_nodes: usize,
    pub game_edges: usize,
    pub game_priorities: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub stage: &'static str,
    pub millis: f64,
}

#[derive(Debug, Clone)]
pub struct SatOptions {
    /// Forced construction; the most specific applicable one when `None`.
    pub method: Option<Method>,
    pub arena: ArenaMode,
    pub witness: bool,
    pub dot: bool,
}

impl Default for SatOptions {
    fn default() -> Self {
        Self {
            method: None,
            arena: ArenaMode::Sat,
            witness: true,
            dot: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub formula: String,
    pub fragment: FragmentReport,
    pub method: Method,
    pub verdict: Verdict,
    pub sizes: Sizes,
    /// The construction the witness was extracted with.
    pub witness_method: Option<Method>,
    #[serde(skip)]
    pub witness: Option<KripkeStructure>,
    pub warnings: Vec<String>,
    pub timings: Vec<Timing>,
    /// DOT renderings of the automaton, arena and product game.
    #[serde(skip)]
    pub dot: Vec<(&'static str, String)>,
}

struct Clock {
    last: Instant,
    out: Vec<Timing>,
}

impl Clock {
    fn new() -> Self {
        Self {
            last: Instant::now(),
            out: Vec::new(),
        }
    }

    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.out.push(Timing {
            stage,
            millis: (now - self.last).as_secs_f64() * 1000.0,
        });
        self.last = now;
    }
}

/// Result of playing the product game for one construction.
struct Outcome {
    sat: bool,
    h_states: usize,
    h_bound: f64,
    game_nodes: usize,
    game_edges: usize,
    game_priorities: usize,
    witness: Option<KripkeStructure>,
    dot: Option<String>,
}

fn solve(g: &crate::game::ParityGame) -> Solution {
    if g.priorities().iter().all(|&p| p == 1 || p == 2) {
        solve_buchi(g).expect("priorities checked")
    } else {
        solve_parity(g)
    }
}

fn play<H>(arena: &StrategyArena<'_>, h: &H, h_bound: f64, deterministic: bool, opts: &SatOptions, clock: &mut Clock) -> Result<Outcome, PipelineError>
where
    H: Automaton<Letter = TrackLetter>,
{
    let product = build_product_game(arena, h, h_bound);
    let h_states = product
        .nodes
        .iter()
        .filter_map(|n| match n {
            crate::game::ProductNode::Pos(_, t) => Some(t),
            _ => None,
        })
        .collect::<HashSet<_>>()
        .len();
    assert!(h_states as f64 <= h_bound, "tracking construction exceeded its bound");
    clock.lap("product");
    let sol = solve(&product.game);
    clock.lap("solve");
    let sat = sol.wins(product.initial) == crate::game::Player::Even;
    let witness = if sat && deterministic && opts.witness {
        let k = extract_model(arena, &product, &sol)?;
        clock.lap("extract");
        Some(k)
    } else {
        None
    };
    Ok(Outcome {
        sat,
        h_states,
        h_bound,
        game_nodes: product.game.len(),
        game_edges: product.game.num_edges(),
        game_priorities: product.game.priorities().len(),
        witness,
        dot: opts.dot.then(|| product.game.to_dot()),
    })
}

fn run_method(method: Method, apt: &Apt, arena: &StrategyArena<'_>, opts: &SatOptions, clock: &mut Clock) -> Result<Outcome, PipelineError> {
    let tracking = TrackingAutomaton::new(apt, opts.arena);
    let not_applicable = |reason: &str| PipelineError::NotApplicable {
        method,
        reason: reason.to_string(),
    };
    let weak = || {
        if classify_apt(apt).weak {
            Ok(())
        } else {
            Err(not_applicable("the automaton is not weak"))
        }
    };
    let wrap = |e: WordError| not_applicable(&e.to_string());
    match method {
        Method::Circle => {
            weak()?;
            let view = CoBuchiView(tracking);
            let h = Circle::new(&view).map_err(wrap)?;
            clock.lap("construction");
            play(arena, &h, h.bound(), true, opts, clock)
        }
        Method::MiyanoHayashi => {
            weak()?;
            let view = CoBuchiView(tracking);
            let h = MiyanoHayashi::new(&view);
            clock.lap("construction");
            play(arena, &h, h.bound(), true, opts, clock)
        }
        Method::Focus => {
            weak()?;
            let view = CoBuchiView(tracking);
            let h = Focus::new(&view).map_err(wrap)?;
            clock.lap("construction");
            play(arena, &h, h.bound(), false, opts, clock)
        }
        Method::Permutation => {
            let buchi = ParityToBuchi::by_components(&tracking);
            let h = Permutation::new(&buchi).map_err(wrap)?;
            clock.lap("construction");
            play(arena, &h, h.bound(), true, opts, clock)
        }
    }
}

/// Clean the formula, reject unguarded input and translate it.
fn prepare(f: &Formula, warnings: &mut Vec<String>) -> Result<(Formula, usize, Apt), PipelineError> {
    let (clean, warning) = make_clean(f);
    if let Some(w) = warning {
        warnings.push(w.to_string());
    }
    if !check_guarded(&clean) {
        return Err(PipelineError::Unguarded);
    }
    let table = closure(&clean);
    let apt = formula_to_apt(&clean, &table)?;
    Ok((clean, table.len(), apt))
}

/// Decides satisfiability of a closed formula.
pub fn decide_sat(f: &Formula, opts: &SatOptions) -> Result<PipelineReport, PipelineError> {
    let mut clock = Clock::new();
    let mut warnings = Vec::new();
    let (clean, closure_size, apt) = prepare(f, &mut warnings)?;
    let fragment = classify_fragment(&clean);
    let method = match opts.method {
        Some(m) => m,
        None => Method::for_fragment(&fragment).ok_or_else(|| PipelineError::Unsupported(fragment.best_fragment.to_string()))?,
    };
    clock.lap("translate");
    let arena = StrategyArena::build(&apt, opts.arena);
    clock.lap("arena");
    let outcome = run_method(method, &apt, &arena, opts, &mut clock)?;

    let mut witness = outcome.witness.clone();
    let mut witness_method = witness.as_ref().map(|_| method);
    if outcome.sat && opts.witness && witness.is_none() {
        let fallback = run_method(Method::MiyanoHayashi, &apt, &arena, opts, &mut clock)?;
        if !fallback.sat {
            return Err(PipelineError::Inconsistent(format!("{method} says sat, mh says unsat")));
        }
        witness = fallback.witness;
        witness_method = Some(Method::MiyanoHayashi);
    }
    if let Some(k) = &witness {
        if !satisfies(f, k)? {
            return Err(PipelineError::WitnessRejected);
        }
        clock.lap("verify");
    }

    let mut dot = Vec::new();
    if opts.dot {
        dot.push(("apt", apt.to_dot()));
        dot.push(("arena", arena.to_dot()));
        if let Some(g) = outcome.dot {
            dot.push(("game", g));
        }
    }
    Ok(PipelineReport {
        formula: f.to_string(),
        fragment,
        method,
        verdict: if outcome.sat { Verdict::Sat } else { Verdict::Unsat },
        sizes: Sizes {
            closure: closure_size,
            apt_states: apt.len(),
            apt_priorities: apt.rank(),
            tracking_states: apt.len(),
            h_states: outcome.h_states,
            h_bound: outcome.h_bound,
            arena_nodes: arena.len(),
            arena_bound: arena.bound(),
            game_nodes: outcome.game_nodes,
            game_edges: outcome.game_edges,
            game_priorities: outcome.game_priorities,
        },
        witness_method,
        witness,
        warnings,
        timings: clock.out,
        dot,
    })
}

/// Decides `k, w₀ ⊨ f` with the acceptance game of the formula automaton.
pub fn model_check(f: &Formula, k: &KripkeStructure) -> Result<bool, PipelineError> {
    let (_, _, apt) = prepare(f, &mut Vec::new())?;
    let g = build_acceptance_game(&apt, k);
    assert_eq!(g.len(), k.len() * apt.len(), "acceptance game has |W|·|Q| nodes");
    let sol = solve_parity(&g);
    Ok(sol.wins(k.initial() * apt.len() + apt.initial()) == crate::game::Player::Even)
}
