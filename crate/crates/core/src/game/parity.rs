use serde::Serialize;
use std::fmt::Write;
use thiserror::Error;

/// Player ◇ wins plays whose largest priority seen infinitely often is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player who wins a cycle of maximal priority `p`.
    pub fn of_priority(p: u32) -> Player {
        if p.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("node {0} referenced but never declared")]
    Undeclared(usize),
}

/// A parity game. A node without successors is lost by its owner.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ParityGame {
    owner: Vec<Player>,
    priority: Vec<u32>,
    succ: Vec<Vec<usize>>,
    labels: Vec<String>,
}

type ParsedNode = (u32, Player, Vec<usize>, String);

impl ParityGame {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, owner: Player, priority: u32, label: impl Into<String>) -> usize {
        self.owner.push(owner);
        self.priority.push(priority);
        self.succ.push(Vec::new());
        self.labels.push(label.into());
        self.owner.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        if !self.succ[from].contains(&to) {
            self.succ[from].push(to);
        }
    }

    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn priority(&self, v: usize) -> u32 {
        self.priority[v]
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn num_edges(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn max_priority(&self) -> u32 {
        self.priority.iter().copied().max().unwrap_or(0)
    }

    /// Distinct priorities in increasing order.
    pub fn priorities(&self) -> Vec<u32> {
        let mut p = self.priority.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.len()];
        for (v, out) in self.succ.iter().enumerate() {
            for &w in out {
                pred[w].push(v);
            }
        }
        pred
    }

    /// PGSolver format: `parity <max-id>;` followed by one line
    /// `<id> <priority> <owner> <succ,...> "<label>";` per node, with owner 0
    /// for ◇ and 1 for □.
    pub fn to_pgsolver(&self) -> String {
        let mut out = format!("parity {};\n", self.len().saturating_sub(1));
        for v in 0..self.len() {
            let succ: Vec<String> = self.succ[v].iter().map(usize::to_string).collect();
            let owner = u8::from(self.owner[v] == Player::Odd);
            let _ = writeln!(
                out,
                "{v} {} {owner} {} \"{}\";",
                self.priority[v],
                succ.join(","),
                self.labels[v].replace('"', "'")
            );
        }
        out
    }

    pub fn from_pgsolver(text: &str) -> Result<Self, GameError> {
        let mut nodes: Vec<Option<ParsedNode>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: &str| GameError::Parse {
                line,
                message: message.to_string(),
            };
            let body = raw.trim();
            if body.is_empty() || body.starts_with("parity") || body.starts_with("start") {
                continue;
            }
            let body = body.strip_suffix(';').ok_or_else(|| err("missing ';'"))?;
            let (body, label) = match body.find('"') {
                Some(q) => (&body[..q], body[q..].trim_matches('"').to_string()),
                None => (body, String::new()),
            };
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() < 3 || fields.len() > 4 {
                return Err(err("expected: id priority owner successors"));
            }
            let id: usize = fields[0].parse().map_err(|_| err("bad node id"))?;
            let prio: u32 = fields[1].parse().map_err(|_| err("bad priority"))?;
            let owner = match fields[2] {
                "0" => Player::Even,
                "1" => Player::Odd,
                _ => return Err(err("owner must be 0 or 1")),
            };
            let succ = match fields.get(3) {
                Some(s) => s
                    .split(',')
                    .map(|x| x.parse().map_err(|_| err("bad successor")))
                    .collect::<Result<Vec<usize>, _>>()?,
                None => Vec::new(),
            };
            if nodes.len() <= id {
                nodes.resize(id + 1, None);
            }
            if nodes[id].is_some() {
                return Err(err("duplicate node id"));
            }
            nodes[id] = Some((prio, owner, succ, label));
        }
        let mut g = ParityGame::new();
        for (v, n) in nodes.iter().enumerate() {
            let (p, o, _, l) = n.as_ref().ok_or(GameError::Undeclared(v))?;
            g.add_node(*o, *p, l.clone());
        }
        for (v, n) in nodes.into_iter().enumerate() {
            for w in n.expect("declared").2 {
                if w >= g.len() {
                    return Err(GameError::Undeclared(w));
                }
                g.add_edge(v, w);
            }
        }
        Ok(g)
    }

    /// Diamonds for ◇, boxes for □, priority in the label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph game {\n");
        for v in 0..self.len() {
            let shape = match self.owner[v] {
                Player::Even => "diamond",
                Player::Odd => "box",
            };
            let _ = writeln!(
                out,
                "  n{v} [shape={shape}, label=\"{}\\n{}\"];",
                self.labels[v].replace('"', "'"),
                self.priority[v]
            );
        }
        for (v, succ) in self.succ.iter().enumerate() {
            for w in succ {
                let _ = writeln!(out, "  n{v} -> n{w};");
            }
        }
        out.push_str("}\n");
        out
    }
}
