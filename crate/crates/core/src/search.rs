//! Deciding admissible contractibility.
//!
//! [`decide_contractible`] is a depth-first search over admissible pairs,
//! memoized on canonical keys. [`brute_force_oracle`] enumerates every
//! contraction sequence with its own array representation and the literal
//! admissibility conditions; it exists to cross-check the search.

use std::collections::{BTreeSet, HashMap};

use crate::canonical::{canonical_key, DEFAULT_VERTEX_BOUND};
use crate::contraction::{feasible_range_dense, ContractionCertificate, ContractionStep};
use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedMultigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Contractible(ContractionCertificate),
    /// Every admissible sequence was exhausted; `states` distinct
    /// isomorphism classes were visited.
    NotContractible { states: usize },
}

impl Decision {
    pub fn certificate(&self) -> Option<&ContractionCertificate> {
        match self {
            Decision::Contractible(c) => Some(c),
            Decision::NotContractible { .. } => None,
        }
    }

    pub fn is_contractible(&self) -> bool {
        matches!(self, Decision::Contractible(_))
    }
}

pub fn decide_contractible(g: &WeightedMultigraph) -> Result<Decision> {
    decide_contractible_bounded(g, DEFAULT_VERTEX_BOUND)
}

/// Exhaustive search. Pairs are tried in index order of the current graph
/// (initially the sorted id order; a merged vertex takes the lower slot), and
/// each recorded step uses the ordering with the least feasible `l`.
pub fn decide_contractible_bounded(g: &WeightedMultigraph, bound: usize) -> Result<Decision> {
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    if n == 0 {
        return Err(Error::Invalid("empty graph".into()));
    }
    let root = Dense {
        n,
        weights: g.weights().to_vec(),
        mult: g.mult_matrix().to_vec(),
    };
    let mut search = Search {
        memo: HashMap::new(),
        path: Vec::new(),
    };
    if !search.dfs(&root) {
        return Ok(Decision::NotContractible {
            states: search.memo.len(),
        });
    }
    Ok(Decision::Contractible(label_steps(g, &search.path)))
}

#[derive(Clone)]
struct Dense {
    n: usize,
    weights: Vec<i64>,
    mult: Vec<u32>,
}

impl Dense {
    /// Merge `j` into `i`; the merged vertex sits at `min(i, j)`.
    fn contract(&self, i: usize, j: usize) -> Dense {
        let (keep, drop) = (i.min(j), i.max(j));
        let n = self.n;
        let m = n - 1;
        let src = |a: usize| if a < drop { a } else { a + 1 };
        let mut weights = Vec::with_capacity(m);
        let mut mult = vec![0u32; m * m];
        for a in 0..m {
            let sa = src(a);
            weights.push(if sa == keep {
                self.weights[keep] + self.weights[drop]
            } else {
                self.weights[sa]
            });
            for b in a + 1..m {
                let sb = src(b);
                let val = if sa == keep {
                    self.mult[keep * n + sb] + self.mult[drop * n + sb]
                } else if sb == keep {
                    self.mult[keep * n + sa] + self.mult[drop * n + sa]
                } else {
                    self.mult[sa * n + sb]
                };
                mult[a * m + b] = val;
                mult[b * m + a] = val;
            }
        }
        Dense { n: m, weights, mult }
    }
}

#[derive(Clone, Copy)]
struct DenseStep {
    v: usize,
    w: usize,
    l: i64,
}

struct Search {
    memo: HashMap<Vec<i64>, bool>,
    path: Vec<DenseStep>,
}

impl Search {
    fn dfs(&mut self, g: &Dense) -> bool {
        if g.n == 1 {
            return true;
        }
        let key = canonical_key(g.n, &g.weights, &g.mult);
        if self.memo.get(&key) == Some(&false) {
            return false;
        }
        for i in 0..g.n {
            for j in i + 1..g.n {
                if g.mult[i * g.n + j] == 0 {
                    continue;
                }
                let Some(step) = best_ordering(g, i, j) else {
                    continue;
                };
                let child = g.contract(i, j);
                self.path.push(step);
                if self.dfs(&child) {
                    self.memo.insert(key, true);
                    return true;
                }
                self.path.pop();
            }
        }
        self.memo.insert(key, false);
        false
    }
}

fn best_ordering(g: &Dense, i: usize, j: usize) -> Option<DenseStep> {
    let fwd = feasible_range_dense(g.n, &g.weights, &g.mult, i, j).min();
    let back = feasible_range_dense(g.n, &g.weights, &g.mult, j, i).min();
    match (fwd, back) {
        (Some(a), Some(b)) if b < a => Some(DenseStep { v: j, w: i, l: b }),
        (Some(a), _) => Some(DenseStep { v: i, w: j, l: a }),
        (None, Some(b)) => Some(DenseStep { v: j, w: i, l: b }),
        (None, None) => None,
    }
}

/// Turns index-level steps into a certificate with fresh `m<k>` merged ids.
fn label_steps(g: &WeightedMultigraph, path: &[DenseStep]) -> ContractionCertificate {
    let mut labels: Vec<VertexId> = g.vertices().to_vec();
    let mut used: BTreeSet<VertexId> = labels.iter().cloned().collect();
    let mut counter = 0usize;
    let mut steps = Vec::with_capacity(path.len());
    for s in path {
        let merged = loop {
            counter += 1;
            let cand = VertexId::new(format!("m{counter}"));
            if !used.contains(&cand) {
                break cand;
            }
        };
        used.insert(merged.clone());
        steps.push(ContractionStep {
            pair: [labels[s.v].clone(), labels[s.w].clone()],
            l: s.l,
            merged: merged.clone(),
        });
        let (keep, drop) = (s.v.min(s.w), s.v.max(s.w));
        labels[keep] = merged;
        labels.remove(drop);
    }
    ContractionCertificate {
        initial: g.clone(),
        steps,
    }
}

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 5;
/// Largest total edge multiplicity the oracle accepts.
pub const ORACLE_MAX_MULTIPLICITY: u64 = 18;

const CAP: usize = ORACLE_MAX_VERTICES;

/// Whether any sequence of admissible contractions reaches a single vertex,
/// by plain enumeration of all of them.
pub fn brute_force_oracle(g: &WeightedMultigraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeBound {
            size: n,
            bound: ORACLE_MAX_VERTICES,
        });
    }
    let total = g.total_multiplicity();
    if total > ORACLE_MAX_MULTIPLICITY {
        return Err(Error::MultiplicityBound {
            total,
            bound: ORACLE_MAX_MULTIPLICITY,
        });
    }
    if n == 0 {
        return Err(Error::Invalid("empty graph".into()));
    }
    let ids = g.vertices();
    let mut state = Small {
        n,
        wt: [0; CAP],
        adj: [[0; CAP]; CAP],
    };
    for (a, u) in ids.iter().enumerate() {
        state.wt[a] = g.weight(u)?;
        for (b, v) in ids.iter().enumerate() {
            if a != b {
                state.adj[a][b] = g.multiplicity(u, v)? as i64;
            }
        }
    }
    Ok(state.reaches_singleton())
}

#[derive(Clone, Copy)]
struct Small {
    n: usize,
    wt: [i64; CAP],
    adj: [[i64; CAP]; CAP],
}

impl Small {
    fn deg(&self, x: usize) -> i64 {
        (0..self.n).map(|y| self.adj[x][y]).sum()
    }

    /// The three admissibility bullets, checked literally for one `l`.
    #[allow(clippy::int_plus_one)]
    fn admissible(&self, v: usize, w: usize, l: i64) -> bool {
        let e = self.adj[v][w];
        if !(0 <= l && l < e) {
            return false;
        }
        for x in 0..self.n {
            if x != v && x != w && self.deg(x) < 3 {
                return false;
            }
        }
        if !(self.wt[v] >= l + 1 && self.wt[w] >= l + 2) {
            return false;
        }
        self.deg(v) - e + l >= 3 && self.deg(w) - e + l >= 3
    }

    /// Merge `w` into `v`, then move the last vertex into `w`'s slot.
    fn merged(&self, v: usize, w: usize) -> Small {
        let mut s = *self;
        s.wt[v] += s.wt[w];
        for x in 0..s.n {
            if x != v && x != w {
                s.adj[v][x] += s.adj[w][x];
                s.adj[x][v] = s.adj[v][x];
            }
        }
        s.adj[v][w] = 0;
        s.adj[w][v] = 0;
        let last = s.n - 1;
        if w != last {
            s.wt[w] = s.wt[last];
            for x in 0..s.n {
                s.adj[w][x] = s.adj[last][x];
                s.adj[x][w] = s.adj[x][last];
            }
            s.adj[w][w] = 0;
        }
        for x in 0..s.n {
            s.adj[last][x] = 0;
            s.adj[x][last] = 0;
        }
        s.n -= 1;
        s
    }

    fn reaches_singleton(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        for v in 0..self.n {
            for w in 0..self.n {
                if v == w || self.adj[v][w] == 0 {
                    continue;
                }
                let ok = (0..self.adj[v][w]).any(|l| self.admissible(v, w, l));
                if ok && self.merged(v, w).reaches_singleton() {
                    return true;
                }
            }
        }
        false
    }
}
