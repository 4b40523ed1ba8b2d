use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KripkeError {
    #[error("invalid structure JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("structure has no worlds")]
    Empty,
    #[error("duplicate world id `{0}`")]
    DuplicateWorld(String),
    #[error("unknown world id `{0}`")]
    UnknownWorld(String),
    #[error("world `{0}` has no successor (structures must be serial)")]
    NotSerial(String),
    #[error("unbound variable {0} during evaluation")]
    UnboundVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct World {
    pub id: String,
    #[serde(default)]
    pub atoms: BTreeSet<String>,
}

#[derive(Serialize, Deserialize)]
struct KripkeJson {
    worlds: Vec<World>,
    initial: String,
    edges: Vec<(String, String)>,
}

/// A finite, serial, pointed Kripke structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeStructure {
    worlds: Vec<World>,
    initial: usize,
    succ: Vec<Vec<usize>>,
}

impl KripkeStructure {
    /// Build from world labels and an edge list over world indices.
    pub fn new(
        worlds: Vec<World>,
        initial: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, KripkeError> {
        if worlds.is_empty() {
            return Err(KripkeError::Empty);
        }
        let mut ids = BTreeSet::new();
        for w in &worlds {
            if !ids.insert(w.id.as_str()) {
                return Err(KripkeError::DuplicateWorld(w.id.clone()));
            }
        }
        if initial >= worlds.len() {
            return Err(KripkeError::UnknownWorld(format!("#{initial}")));
        }
        let mut succ = vec![BTreeSet::new(); worlds.len()];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= worlds.len() {
                    return Err(KripkeError::UnknownWorld(format!("#{x}")));
                }
            }
            succ[a].insert(b);
        }
        if let Some(i) = succ.iter().position(BTreeSet::is_empty) {
            return Err(KripkeError::NotSerial(worlds[i].id.clone()));
        }
        Ok(KripkeStructure {
            worlds,
            initial,
            succ: succ.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Convenience constructor with generated ids `w0, w1, …`.
    pub fn from_labels(
        labels: Vec<BTreeSet<String>>,
        initial: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, KripkeError> {
        let worlds = labels
            .into_iter()
            .enumerate()
            .map(|(i, atoms)| World {
                id: format!("w{i}"),
                atoms,
            })
            .collect();
        Self::new(worlds, initial, edges)
    }

    pub fn from_json(text: &str) -> Result<Self, KripkeError> {
        let raw: KripkeJson = serde_json::from_str(text)?;
        let index: BTreeMap<&str, usize> = raw
            .worlds
            .iter()
            .enumerate()
            .map(|(i, w)| (w.id.as_str(), i))
            .collect();
        if index.len() != raw.worlds.len() {
            let mut seen = BTreeSet::new();
            let dup = raw.worlds.iter().find(|w| !seen.insert(&w.id)).unwrap();
            return Err(KripkeError::DuplicateWorld(dup.id.clone()));
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| KripkeError::UnknownWorld(id.to_string()))
        };
        let initial = lookup(&raw.initial)?;
        let edges = raw
            .edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, KripkeError>>()?;
        Self::new(raw.worlds.clone(), initial, edges)
    }

    pub fn to_json(&self) -> String {
        let raw = KripkeJson {
            worlds: self.worlds.clone(),
            initial: self.worlds[self.initial].id.clone(),
            edges: self
                .edges()
                .map(|(a, b)| (self.worlds[a].id.clone(), self.worlds[b].id.clone()))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn world(&self, w: usize) -> &World {
        &self.worlds[w]
    }

    pub fn successors(&self, w: usize) -> &[usize] {
        &self.succ[w]
    }

    pub fn label(&self, w: usize) -> &BTreeSet<String> {
        &self.worlds[w].atoms
    }

    pub fn has_atom(&self, w: usize, p: &str) -> bool {
        self.worlds[w].atoms.contains(p)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b)))
    }
}

/// All serial structures with `1..=max_worlds` worlds over `atoms`,
/// pointed at world 0.
pub fn serial_structures(
    max_worlds: usize,
    atoms: &[String],
) -> impl Iterator<Item = KripkeStructure> + '_ {
    (1..=max_worlds).flat_map(move |n| {
        let succ_choices = (1u32 << n) - 1;
        let rel_count = (succ_choices as u64).pow(n as u32);
        let label_count = 1u64 << (n * atoms.len());
        (0..rel_count).flat_map(move |r| {
            (0..label_count).map(move |l| {
                let mut edges = Vec::new();
                let mut code = r;
                for a in 0..n {
                    let mask = (code % succ_choices as u64) as u32 + 1;
                    code /= succ_choices as u64;
                    edges.extend((0..n).filter(|b| mask & (1 << b) != 0).map(|b| (a, b)));
                }
                let labels = (0..n)
                    .map(|w| {
                        atoms
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| l & (1 << (w * atoms.len() + i)) != 0)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                KripkeStructure::from_labels(labels, 0, edges).expect("serial by construction")
            })
        })
    })
}
