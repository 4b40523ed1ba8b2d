use mu_sat::formula::Formula;
use mu_sat::game::{ParityGame, Player};
use mu_sat::kripke::{satisfies, serial_structures, KripkeStructure};
use rand::Rng;
use std::collections::BTreeSet;

/// A model of `f` with at most `max_worlds` worlds, by exhaustive search.
pub fn find_model(f: &Formula, max_worlds: usize) -> Option<KripkeStructure> {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let found = serial_structures(max_worlds, &atoms).find(|k| satisfies(f, k).unwrap());
    found
}

pub fn random_structure(rng: &mut impl Rng, worlds: usize, atoms: &[&str]) -> KripkeStructure {
    let labels: Vec<BTreeSet<String>> = (0..worlds)
        .map(|_| atoms.iter().filter(|_| rng.gen_bool(0.5)).map(|a| a.to_string()).collect())
        .collect();
    let mut edges = Vec::new();
    for a in 0..worlds {
        edges.push((a, rng.gen_range(0..worlds)));
        for b in 0..worlds {
            if rng.gen_bool(0.3) {
                edges.push((a, b));
            }
        }
    }
    KripkeStructure::from_labels(labels, rng.gen_range(0..worlds), edges).unwrap()
}

/// Winner of every node under fixed positional choices of both players.
fn play_all(g: &ParityGame, choice: &[usize]) -> Vec<Player> {
    (0..g.len())
        .map(|v| {
            let mut seen = vec![usize::MAX; g.len()];
            let mut path = Vec::new();
            let mut u = v;
            loop {
                if g.successors(u).is_empty() {
                    return g.owner(u).opponent();
                }
                if seen[u] != usize::MAX {
                    let top = path[seen[u]..].iter().map(|&x| g.priority(x)).max().unwrap();
                    return Player::of_priority(top);
                }
                seen[u] = path.len();
                path.push(u);
                u = g.successors(u)[choice[u]];
            }
        })
        .collect()
}

/// ◇ wins `v` iff one of her positional strategies wins `v` against every
/// positional strategy of □.
pub fn brute_force_winners(g: &ParityGame) -> Vec<Player> {
    let n = g.len();
    let nodes = |p: Player| -> Vec<usize> { (0..n).filter(|&v| g.owner(v) == p && !g.successors(v).is_empty()).collect() };
    let even = nodes(Player::Even);
    let odd = nodes(Player::Odd);
    let count = |vs: &[usize]| vs.iter().map(|&v| g.successors(v).len()).product::<usize>();
    let decode = |vs: &[usize], mut code: usize, choice: &mut [usize]| {
        for &v in vs {
            let k = g.successors(v).len();
            choice[v] = code % k;
            code /= k;
        }
    };
    let mut won = vec![false; n];
    let mut choice = vec![0; n];
    for se in 0..count(&even) {
        decode(&even, se, &mut choice);
        let mut survives = vec![true; n];
        for so in 0..count(&odd) {
            decode(&odd, so, &mut choice);
            for (v, w) in play_all(g, &choice).into_iter().enumerate() {
                survives[v] &= w == Player::Even;
            }
        }
        for v in 0..n {
            won[v] |= survives[v];
        }
    }
    won.into_iter().map(|w| if w { Player::Even } else { Player::Odd }).collect()
}

/// The game with index `code` in a fixed enumeration of all games on `n`
/// nodes with priorities `0..3`: owners, priorities, then the edge relation.
pub fn game_by_index(n: usize, mut code: u64) -> ParityGame {
    let mut g = ParityGame::new();
    let owners = code % (1 << n);
    code >>= n;
    for v in 0..n {
        let prio = (code % 3) as u32;
        code /= 3;
        let owner = if owners & (1 << v) != 0 { Player::Odd } else { Player::Even };
        g.add_node(owner, prio, format!("{v}"));
    }
    for v in 0..n {
        for w in 0..n {
            if code & 1 == 1 {
                g.add_edge(v, w);
            }
            code >>= 1;
        }
    }
    g
}

pub fn games_on(n: usize) -> u64 {
    (1u64 << n) * 3u64.pow(n as u32) * (1u64 << (n * n))
}
