use super::automaton::{Flavor, WordAutomaton};
use super::upword::UPWord;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A random automaton with `n` states; every state gets between zero and two
/// successors per letter.
pub(crate) fn random_automaton(seed: u64, n: usize, letters: usize, max_prio: u32, flavor: Flavor) -> WordAutomaton {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for q in 0..n {
        for a in 0..letters {
            for _ in 0..rng.gen_range(0..=2) {
                edges.push((q, a, rng.gen_range(0..n)));
            }
        }
    }
    let priority = (0..n)
        .map(|_| match flavor {
            Flavor::Parity => rng.gen_range(0..=max_prio),
            Flavor::Buchi => rng.gen_range(1..=2),
            Flavor::CoBuchi => rng.gen_range(0..=1),
        })
        .collect();
    WordAutomaton::from_edges(n, letters, 0, &edges, priority, flavor).unwrap()
}

pub(crate) fn random_words(seed: u64, count: usize, letters: usize, max_len: usize) -> Vec<UPWord> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5eed);
    (0..count)
        .map(|_| {
            let u = (0..rng.gen_range(0..=max_len)).map(|_| rng.gen_range(0..letters)).collect();
            let v = (0..rng.gen_range(1..=max_len)).map(|_| rng.gen_range(0..letters)).collect();
            UPWord::new(u, v)
        })
        .collect()
}
