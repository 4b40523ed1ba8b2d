use mu_sat::word::{classify_word, Flavor, UPWord, WordAutomaton};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn random_automaton(seed: u64, n: usize, letters: usize, max_prio: u32, flavor: Flavor) -> WordAutomaton {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for q in 0..n {
        for a in 0..letters {
            for _ in 0..rng.gen_range(0..=2) {
                edges.push((q, a, rng.gen_range(0..n)));
            }
        }
    }
    let priority = (0..n).map(|_| draw_priority(&mut rng, flavor, max_prio)).collect();
    WordAutomaton::from_edges(n, letters, 0, &edges, priority, flavor).unwrap()
}

fn draw_priority(rng: &mut StdRng, flavor: Flavor, max_prio: u32) -> u32 {
    match flavor {
        Flavor::Parity => rng.gen_range(0..=max_prio),
        Flavor::Buchi => rng.gen_range(1..=2),
        Flavor::CoBuchi => rng.gen_range(0..=1),
    }
}

/// Co-Büchi automaton whose accepting states form simple cycles ordered so
/// that no two cycles share a component.
pub fn random_limit_linear(seed: u64, n: usize) -> WordAutomaton {
    let mut rng = StdRng::seed_from_u64(seed);
    let accepting = rng.gen_range(1..=n);
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut q = 0;
    while q < accepting {
        let len = rng.gen_range(1..=(accepting - q).min(4));
        cycles.push((q..q + len).collect());
        q += len;
    }
    let mut edges = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        for (j, &s) in c.iter().enumerate() {
            edges.push((s, rng.gen_range(0..2), c[(j + 1) % c.len()]));
            if i + 1 < cycles.len() && rng.gen_bool(0.4) {
                let later = &cycles[rng.gen_range(i + 1..cycles.len())];
                edges.push((s, rng.gen_range(0..2), later[0]));
            }
            if accepting < n && rng.gen_bool(0.5) {
                edges.push((s, rng.gen_range(0..2), rng.gen_range(accepting..n)));
            }
        }
    }
    for r in accepting..n {
        for a in 0..2 {
            for _ in 0..rng.gen_range(0..=2) {
                edges.push((r, a, rng.gen_range(0..n)));
            }
        }
    }
    let start = rng.gen_range(0..n);
    let priority = (0..n).map(|s| u32::from(s >= accepting)).collect();
    let a = WordAutomaton::from_edges(n, 2, start, &edges, priority, Flavor::CoBuchi).unwrap();
    debug_assert!(classify_word(&a).limit_linear);
    a
}

/// Automaton whose `good` states (priority `good_prio`) have at most one
/// good successor per letter.
fn random_limit_deterministic(seed: u64, n: usize, flavor: Flavor) -> WordAutomaton {
    let mut rng = StdRng::seed_from_u64(seed);
    let (good_prio, bad_prio) = match flavor {
        Flavor::Buchi => (2, 1),
        _ => (0, 1),
    };
    let det = rng.gen_range(1..=n.min(5));
    let mut edges = Vec::new();
    for q in 0..n {
        for a in 0..2 {
            if q < det {
                if rng.gen_bool(0.85) {
                    edges.push((q, a, rng.gen_range(0..det)));
                }
            } else {
                for _ in 0..rng.gen_range(0..=2) {
                    edges.push((q, a, rng.gen_range(0..n)));
                }
            }
        }
    }
    let priority = (0..n)
        .map(|q| if q < det && rng.gen_bool(0.6) { good_prio } else { bad_prio })
        .collect();
    let start = if det < n { det } else { 0 };
    WordAutomaton::from_edges(n, 2, start, &edges, priority, flavor).unwrap()
}

pub fn random_ld_cobuchi(seed: u64, n: usize) -> WordAutomaton {
    (seed..)
        .map(|s| random_limit_deterministic(s, n, Flavor::CoBuchi))
        .find(|a| classify_word(a).limit_deterministic)
        .unwrap()
}

pub fn random_ld_buchi(seed: u64, n: usize) -> WordAutomaton {
    (seed..)
        .map(|s| random_limit_deterministic(s, n, Flavor::Buchi))
        .find(|a| classify_word(a).limit_deterministic)
        .unwrap()
}

pub fn random_words(seed: u64, count: usize, letters: usize, max_len: usize) -> Vec<UPWord> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5eed);
    (0..count)
        .map(|_| {
            let u = (0..rng.gen_range(0..=max_len)).map(|_| rng.gen_range(0..letters)).collect();
            let v = (0..rng.gen_range(1..=max_len)).map(|_| rng.gen_range(0..letters)).collect();
            UPWord::new(u, v)
        })
        .collect()
}

/// Every word `u·v^ω` over two letters with `|u| ≤ 3`, `1 ≤ |v| ≤ 3`.
pub fn probe_words() -> Vec<UPWord> {
    let all = |len: usize| -> Vec<Vec<usize>> {
        (0..1usize << len).map(|bits| (0..len).map(|i| (bits >> i) & 1).collect()).collect()
    };
    let mut out = Vec::new();
    for lu in 0..=3 {
        for lv in 1..=3 {
            for u in all(lu) {
                for v in all(lv) {
                    out.push(UPWord::new(u.clone(), v));
                }
            }
        }
    }
    out
}

/// Letters a=0, b=1. Circle example: x=0 y=1 u=2 z=3, accepting {y,u}.
pub fn circle_example() -> WordAutomaton {
    WordAutomaton::from_edges(
        4,
        2,
        0,
        &[(0, 0, 1), (0, 0, 3), (1, 1, 2), (2, 0, 1), (3, 1, 3)],
        vec![1, 0, 0, 1],
        Flavor::CoBuchi,
    )
    .unwrap()
}

/// Breakpoint example: x=0 y=1 z=2, accepting {z}.
pub fn mh_example() -> WordAutomaton {
    WordAutomaton::from_edges(
        3,
        2,
        0,
        &[(0, 0, 1), (0, 1, 1), (0, 0, 2), (1, 0, 1), (1, 0, 2), (1, 1, 2), (2, 0, 1), (2, 1, 2)],
        vec![1, 1, 0],
        Flavor::CoBuchi,
    )
    .unwrap()
}

/// Permutation example: x=0 y=1 z=2 u=3, Büchi-accepting {u}.
pub fn permutation_example() -> WordAutomaton {
    WordAutomaton::from_edges(
        4,
        2,
        0,
        &[
            (0, 0, 0),
            (0, 0, 1),
            (0, 0, 2),
            (1, 0, 1),
            (1, 1, 3),
            (2, 0, 2),
            (2, 1, 2),
            (2, 0, 3),
            (2, 1, 3),
            (3, 0, 1),
        ],
        vec![1, 1, 1, 2],
        Flavor::Buchi,
    )
    .unwrap()
}

/// Focus example: x=0 y=1 z=2, accepting {y,z}.
pub fn focus_example() -> WordAutomaton {
    WordAutomaton::from_edges(
        3,
        2,
        0,
        &[(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 2), (1, 0, 0), (1, 1, 1), (2, 1, 1), (2, 0, 2)],
        vec![1, 0, 0],
        Flavor::CoBuchi,
    )
    .unwrap()
}
