mod common;

use common::automata::{
    circle_example, focus_example, mh_example, permutation_example, probe_words, random_automaton, random_ld_buchi,
    random_ld_cobuchi, random_limit_linear, random_words,
};
use common::formulas::{sample_formulas, CORPUS};
use common::oracles::{brute_force_winners, find_model, game_by_index, games_on, random_structure};
use mu_sat::apt::{classify_apt, formula_to_apt};
use mu_sat::formula::{classify_fragment, closure, parse, Formula};
use mu_sat::game::{build_acceptance_game, ArenaMode, ParityGame, Player, TrackingAutomaton};
use mu_sat::kripke::satisfies;
use mu_sat::pipeline::{decide_sat, model_check, Method, SatOptions, Verdict};
use mu_sat::solver::{solve_buchi, solve_parity, verify_solution};
use mu_sat::word::{
    circle_determinize, classify_word, focus_history_determinize, membership_upword, miyano_hayashi, parity_to_buchi,
    parity_to_buchi_scc, permutation_determinize, resolver_accepts, AgeResolver, Automaton, Flavor, Focus,
    PermState, Permutation, UPWord, WordAutomaton,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let t = started.elapsed();
    check(t < limit, || format!("took {t:.1?}, limit {limit:?}"))?;
    Ok(t)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

struct Construction {
    name: &'static str,
    input: fn(u64, usize) -> WordAutomaton,
    run: fn(&WordAutomaton) -> WordAutomaton,
    bound: fn(&WordAutomaton) -> f64,
}

struct Case {
    construction: &'static str,
    seed: u64,
    input: WordAutomaton,
    output: WordAutomaton,
}

fn cobuchi_accepting(a: &WordAutomaton) -> usize {
    a.priorities().iter().filter(|&&p| p == 0).count()
}

fn constructions() -> Vec<Construction> {
    vec![
        Construction {
            name: "circle",
            input: random_limit_linear,
            run: |a| circle_determinize(a).unwrap(),
            bound: |a| (a.len() * a.len()) as f64 * 2f64.powi(a.len() as i32),
        },
        Construction {
            name: "mh",
            input: |seed, n| random_automaton(seed, n, 2, 1, Flavor::CoBuchi),
            run: miyano_hayashi,
            bound: |a| 3f64.powi(a.len() as i32),
        },
        Construction {
            name: "focus",
            input: random_ld_cobuchi,
            run: |a| focus_history_determinize(a).unwrap(),
            bound: |a| (cobuchi_accepting(a) + 1) as f64 * 2f64.powi(a.len() as i32),
        },
        Construction {
            name: "perm",
            input: random_ld_buchi,
            run: |a| permutation_determinize(a).unwrap(),
            bound: |a| std::f64::consts::E * factorial(a.len() + 1),
        },
        Construction {
            name: "parity-to-buchi",
            input: |seed, n| random_automaton(seed, n, 2, 4, Flavor::Parity),
            run: parity_to_buchi,
            bound: |a| ((a.rank() as usize + 2) / 2 + 1) as f64 * a.len() as f64,
        },
        Construction {
            name: "parity-to-buchi-scc",
            input: |seed, n| random_automaton(seed, n, 2, 4, Flavor::Parity),
            run: parity_to_buchi_scc,
            bound: |a| ((a.rank() as usize + 2) / 2 + 1) as f64 * a.len() as f64,
        },
    ]
}

const AUTOMATA_PER_CONSTRUCTION: u64 = 200;

fn criterion_1(cases: &mut Vec<Case>) -> Outcome {
    let started = Instant::now();
    let mut violations = Vec::new();
    for c in constructions() {
        for seed in 0..AUTOMATA_PER_CONSTRUCTION {
            let n = 1 + (seed % 10) as usize;
            let input = (c.input)(seed, n);
            let built = catch_unwind(AssertUnwindSafe(|| (c.run)(&input)));
            let Ok(output) = built else {
                violations.push(format!("{} seed {seed}: construction panicked", c.name));
                continue;
            };
            let bound = (c.bound)(&input);
            if output.len() as f64 > bound {
                violations.push(format!("{} seed {seed}: {} states > {bound}", c.name, output.len()));
            }
            if c.name == "perm" && output.rank() as usize > 2 * input.len() + 1 {
                violations.push(format!("perm seed {seed}: priority {} > 2n+1", output.rank()));
            }
            if !output.is_deterministic() && !matches!(c.name, "focus" | "parity-to-buchi" | "parity-to-buchi-scc") {
                violations.push(format!("{} seed {seed}: not deterministic", c.name));
            }
            cases.push(Case {
                construction: c.name,
                seed,
                input,
                output,
            });
        }
    }
    let t = within(Duration::from_secs(60), started)?;
    check(violations.is_empty(), || format!("{} violations, first: {}", violations.len(), violations[0]))?;
    Ok(format!("{} automata, 0 violations, {t:.1?}", cases.len()))
}

fn criterion_2(cases: &[Case]) -> Outcome {
    check(!cases.is_empty(), || "no constructed automata".into())?;
    let mut words_checked = 0;
    for c in cases {
        let words = random_words(c.seed, 100, c.input.num_letters(), 8);
        let focus = (c.construction == "focus").then(|| Focus::new(&c.input).unwrap());
        let resolver = focus.as_ref().map(AgeResolver::new);
        for w in &words {
            let expected = membership_upword(&c.input, w);
            check(membership_upword(&c.output, w) == expected, || {
                format!("{} seed {}: disagrees on {w:?}", c.construction, c.seed)
            })?;
            if let (Some(f), Some(r)) = (&focus, &resolver) {
                check(resolver_accepts(f, r, w) == expected, || {
                    format!("focus resolver seed {}: disagrees on {w:?}", c.seed)
                })?;
            }
            words_checked += 1;
        }
    }
    Ok(format!("{} automata, {words_checked} words, 100% agreement", cases.len()))
}

fn letter_at(w: &UPWord, i: usize) -> usize {
    if i < w.prefix.len() {
        w.prefix[i]
    } else {
        w.period[(i - w.prefix.len()) % w.period.len()]
    }
}

/// Whether `w` denotes `(ab)^ω`.
fn is_ab_omega(w: &UPWord) -> bool {
    (0..w.prefix.len() + 2 * w.period.len()).all(|i| letter_at(w, i) == i % 2)
}

fn criterion_3() -> Outcome {
    let circle = circle_determinize(&circle_example()).map_err(|e| e.to_string())?;
    let probes = probe_words();
    check(probes.len() >= 50, || "probe set too small".into())?;
    for w in &probes {
        check(membership_upword(&circle, w) == is_ab_omega(w), || format!("circle example on {w:?}"))?;
    }

    let mh = miyano_hayashi(&mh_example());
    check(membership_upword(&mh, &UPWord::new(vec![], vec![1])), || "MH example rejects b^ω".into())?;
    check(!membership_upword(&mh, &UPWord::new(vec![], vec![0, 1])), || "MH example accepts (ab)^ω".into())?;

    let perm_input = permutation_example();
    let perm = Permutation::new(&perm_input).map_err(|e| e.to_string())?;
    let mut s = perm.initial();
    for _ in 0..2 {
        s = perm.post(&s, &0).remove(0);
    }
    let looped = perm.post(&s, &0).remove(0);
    let expected = PermState {
        nondet: [0, 2].into_iter().collect(),
        order: vec![1, 3],
        priority: 3,
    };
    check(looped == expected, || format!("permutation a-step from {s:?} gives {looped:?}"))?;
    check(perm.post(&looped, &0) == vec![expected.clone()], || "permutation a-step is not a loop".into())?;

    let focus_input = focus_example();
    let aba_b = UPWord::new(vec![0, 1, 0], vec![1]);
    let a_omega = UPWord::new(vec![], vec![0]);
    let h = focus_history_determinize(&focus_input).map_err(|e| e.to_string())?;
    check(membership_upword(&h, &aba_b), || "focus example rejects (aba)b^ω".into())?;
    let f = Focus::new(&focus_input).map_err(|e| e.to_string())?;
    check(resolver_accepts(&f, &AgeResolver::new(&f), &a_omega), || "resolver rejects a^ω".into())?;
    Ok(format!("circle on {} probes, MH, permutation loop priority 3, focus and resolver", probes.len()))
}

const FORMULAS_PER_FRAGMENT: usize = 500;

fn criterion_4() -> Outcome {
    type Preservation = (&'static str, fn(&Formula) -> bool, fn(&Formula) -> Result<(), String>);
    let checks: [Preservation; 3] = [
        (
            "alternation-free",
            |f| classify_fragment(f).alternation_free,
            |f| {
                let apt = formula_to_apt(f, &closure(f)).map_err(|e| e.to_string())?;
                check(classify_apt(&apt).weak, || format!("{f}: automaton not weak"))?;
                let t = TrackingAutomaton::new(&apt, ArenaMode::Sat);
                check(classify_word(&t).weak, || format!("{f}: tracking automaton not weak"))
            },
        ),
        (
            "limit-linear",
            |f| classify_fragment(f).limit_linear,
            |f| {
                let apt = formula_to_apt(f, &closure(f)).map_err(|e| e.to_string())?;
                check(classify_apt(&apt).limit_linear, || format!("{f}: automaton not limit-linear"))
            },
        ),
        (
            "aconjunctive",
            |f| classify_fragment(f).aconjunctive,
            |f| {
                let apt = formula_to_apt(f, &closure(f)).map_err(|e| e.to_string())?;
                check(classify_apt(&apt).limit_deterministic, || {
                    format!("{f}: automaton not limit-deterministic")
                })?;
                let t = TrackingAutomaton::new(&apt, ArenaMode::Sat);
                check(classify_word(&t).limit_deterministic, || {
                    format!("{f}: tracking automaton not limit-deterministic")
                })
            },
        ),
    ];
    for (seed, (name, member, holds)) in checks.iter().enumerate() {
        let formulas = sample_formulas(40 + seed as u64, FORMULAS_PER_FRAGMENT, 20, &["p", "q"], member);
        for f in &formulas {
            holds(f).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    Ok(format!("{FORMULAS_PER_FRAGMENT} formulas per fragment, |FL| <= 20, 100%"))
}

fn criterion_5() -> Outcome {
    let started = Instant::now();
    check(CORPUS.len() >= 40, || "corpus too small".into())?;
    let mut confirmed = 0;
    for &(text, expected) in CORPUS {
        let f = parse(text).map_err(|e| format!("{text}: {e}"))?;
        let report = decide_sat(&f, &SatOptions::default()).map_err(|e| format!("{text}: {e}"))?;
        let want = if expected { Verdict::Sat } else { Verdict::Unsat };
        check(report.verdict == want, || format!("{text}: got {:?}", report.verdict))?;
        match report.verdict {
            Verdict::Sat => {
                let k = report.witness.as_ref().ok_or_else(|| format!("{text}: no witness"))?;
                check(satisfies(&f, k).map_err(|e| e.to_string())?, || format!("{text}: witness fails"))?;
            }
            Verdict::Unsat => {
                if f.atoms().len() <= 2 && closure(&f).len() <= 8 {
                    check(find_model(&f, 3).is_none(), || format!("{text}: has a model"))?;
                    confirmed += 1;
                }
            }
        }
    }
    let t = within(Duration::from_secs(300), started)?;
    Ok(format!("{} formulas, {confirmed} Unsat confirmed by search, {t:.1?}", CORPUS.len()))
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(60);
    let formulas = sample_formulas(61, 300, 15, &["p", "q"], |_| true);
    for (i, f) in formulas.iter().enumerate() {
        let k = random_structure(&mut rng, 1 + i % 6, &["p", "q"]);
        let by_game = model_check(f, &k).map_err(|e| format!("{f}: {e}"))?;
        let by_semantics = satisfies(f, &k).map_err(|e| format!("{f}: {e}"))?;
        check(by_game == by_semantics, || format!("{f} on {} worlds: game says {by_game}", k.len()))?;
        let apt = formula_to_apt(f, &closure(f)).map_err(|e| e.to_string())?;
        let size = build_acceptance_game(&apt, &k).len();
        check(size == k.len() * apt.len(), || format!("{f}: game has {size} nodes"))?;
    }
    Ok(format!("{} pairs, |W| <= 6, |FL| <= 15", formulas.len()))
}

fn agrees_with_brute_force(g: &ParityGame, what: impl Fn() -> String) -> Result<(), String> {
    let sol = solve_parity(g);
    verify_solution(g, &sol).map_err(|e| format!("{}: {e}", what()))?;
    check(sol.winner == brute_force_winners(g), || format!("{}: winners differ", what()))
}

const SAMPLED_GAMES: u64 = 20_000;

fn random_buchi_game(rng: &mut StdRng) -> ParityGame {
    let n = rng.gen_range(1..=12);
    let mut g = ParityGame::new();
    for v in 0..n {
        let owner = if rng.gen_bool(0.5) { Player::Even } else { Player::Odd };
        g.add_node(owner, rng.gen_range(1..=2), format!("{v}"));
    }
    let density = rng.gen_range(0.05..0.4);
    for v in 0..n {
        for w in 0..n {
            if rng.gen_bool(density) {
                g.add_edge(v, w);
            }
        }
    }
    g
}

fn criterion_7() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=3 {
        for code in 0..games_on(n) {
            agrees_with_brute_force(&game_by_index(n, code), || format!("game ({n}, {code})"))?;
            exhaustive += 1;
        }
    }
    for n in 4..=5 {
        let stride = games_on(n) / SAMPLED_GAMES;
        for k in 0..SAMPLED_GAMES {
            let code = k * stride + k % stride;
            agrees_with_brute_force(&game_by_index(n, code), || format!("game ({n}, {code})"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(70);
    for i in 0..500 {
        let g = random_buchi_game(&mut rng);
        let buchi = solve_buchi(&g).map_err(|e| e.to_string())?;
        verify_solution(&g, &buchi).map_err(|e| format!("Büchi game {i}: {e}"))?;
        check(buchi.winner == solve_parity(&g).winner, || format!("Büchi game {i}: winners differ"))?;
    }
    Ok(format!(
        "{exhaustive} games on <= 3 nodes exhaustively, {} sampled on 4 and 5 nodes, 500 Büchi games",
        2 * SAMPLED_GAMES
    ))
}

fn verdict_with(f: &Formula, method: Method) -> Result<Verdict, String> {
    let opts = SatOptions {
        method: Some(method),
        witness: false,
        ..SatOptions::default()
    };
    decide_sat(f, &opts).map(|r| r.verdict).map_err(|e| format!("{f} with {method}: {e}"))
}

fn criterion_8() -> Outcome {
    let mut compared = 0;
    for &(text, _) in CORPUS {
        let f = parse(text).map_err(|e| e.to_string())?;
        if !classify_fragment(&f).af_aconjunctive {
            continue;
        }
        let mh = verdict_with(&f, Method::MiyanoHayashi)?;
        let focus = verdict_with(&f, Method::Focus)?;
        check(mh == focus, || format!("{text}: MH {mh:?}, focus {focus:?}"))?;
        compared += 1;
    }
    check(compared > 0, || "no formula admits both pipelines".into())?;
    Ok(format!("{compared} formulas, MH and focus games agree"))
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for &(text, _) in CORPUS {
        let f = parse(text).map_err(|e| e.to_string())?;
        if !classify_fragment(&f).alternation_free {
            continue;
        }
        let report = decide_sat(&f, &SatOptions::default()).map_err(|e| format!("{text}: {e}"))?;
        let Some(k) = report.witness else { continue };
        let n = closure(&f).len();
        let bound = 3f64.powi(n as i32);
        check(k.len() as f64 <= bound, || format!("{text}: {} worlds > 3^{n}", k.len()))?;
        checked += 1;
    }
    Ok(format!("{checked} satisfiable alternation-free formulas within 3^|FL| worlds"))
}

fn run(number: usize, criterion: impl FnOnce() -> Outcome) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => {
            println!("criterion {number}: PASS ({detail})");
            true
        }
        Err(detail) => {
            println!("criterion {number}: FAIL ({detail})");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut cases = Vec::new();
    let results = [
        run(1, || criterion_1(&mut cases)),
        run(2, || criterion_2(&cases)),
        run(3, criterion_3),
        run(4, criterion_4),
        run(5, criterion_5),
        run(6, criterion_6),
        run(7, criterion_7),
        run(8, criterion_8),
        run(9, criterion_9),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
