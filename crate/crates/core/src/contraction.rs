//! Admissible contraction of an adjacent pair, and certificates witnessing
//! that a graph contracts admissibly down to a single vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedMultigraph};

/// Merges the adjacent pair `(v, w)` into a vertex named `merged`.
///
/// The merged vertex carries `wt(v) + wt(w)` and the summed multiplicities of
/// both endpoints; the `v`-`w` edges disappear. `merged` may reuse `v` or `w`
/// but no other existing id.
pub fn contract_as(
    g: &WeightedMultigraph,
    v: &VertexId,
    w: &VertexId,
    merged: &VertexId,
) -> Result<WeightedMultigraph> {
    let i = g.index_of(v)?;
    let j = g.index_of(w)?;
    if i == j || g.mult_at(i, j) == 0 {
        return Err(Error::NotAdjacent(v.clone(), w.clone()));
    }
    if merged != v && merged != w && g.contains(merged) {
        return Err(Error::MergedIdCollision(merged.clone()));
    }
    let n = g.vertex_count();
    let rest: Vec<usize> = (0..n).filter(|&x| x != i && x != j).collect();

    let mut ids: Vec<VertexId> = rest.iter().map(|&x| g.vertices()[x].clone()).collect();
    let pos = ids.binary_search(merged).unwrap_err();
    ids.insert(pos, merged.clone());
    // source index for each output slot; `None` marks the merged vertex
    let mut src: Vec<Option<usize>> = rest.iter().map(|&x| Some(x)).collect();
    src.insert(pos, None);

    let m = n - 1;
    let weights: Vec<i64> = src
        .iter()
        .map(|s| match s {
            Some(x) => g.weight_at(*x),
            None => g.weight_at(i) + g.weight_at(j),
        })
        .collect();
    let mut mult = vec![0u32; m * m];
    for a in 0..m {
        for b in a + 1..m {
            let val = match (src[a], src[b]) {
                (Some(x), Some(y)) => g.mult_at(x, y),
                (None, Some(y)) | (Some(y), None) => g.mult_at(i, y) + g.mult_at(j, y),
                (None, None) => unreachable!(),
            };
            mult[a * m + b] = val;
            mult[b * m + a] = val;
        }
    }
    Ok(WeightedMultigraph::from_parts(ids, weights, mult))
}

/// Contraction keeping the name of `v` for the merged vertex.
pub fn contract(g: &WeightedMultigraph, v: &VertexId, w: &VertexId) -> Result<WeightedMultigraph> {
    contract_as(g, v, w, v)
}

/// The admissible values of `l` for an ordered pair: an integer interval,
/// possibly empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LRange {
    pub lo: i64,
    pub hi: i64,
}

impl LRange {
    pub const EMPTY: LRange = LRange { lo: 1, hi: 0 };

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, l: i64) -> bool {
        self.lo <= l && l <= self.hi
    }

    pub fn min(&self) -> Option<i64> {
        (!self.is_empty()).then_some(self.lo)
    }

    pub fn values(&self) -> Vec<i64> {
        (self.lo..=self.hi).collect()
    }
}

/// Feasible `l` for the ordered pair of indices `(v, w)` of a dense graph.
pub(crate) fn feasible_range_dense(n: usize, weights: &[i64], mult: &[u32], v: usize, w: usize) -> LRange {
    let deg = |x: usize| -> i64 { mult[x * n..(x + 1) * n].iter().map(|&m| m as i64).sum() };
    let m = mult[v * n + w] as i64;
    if m == 0 {
        return LRange::EMPTY;
    }
    if (0..n).any(|x| x != v && x != w && deg(x) < 3) {
        return LRange::EMPTY;
    }
    let lo = 0.max(3 - (deg(v) - m)).max(3 - (deg(w) - m));
    let hi = (m - 1).min(weights[v] - 1).min(weights[w] - 2);
    if lo > hi {
        LRange::EMPTY
    } else {
        LRange { lo, hi }
    }
}

/// All `l` making the contraction of `(v, w)` admissible with `v` in the
/// lighter role (`wt(v) >= l + 1`, `wt(w) >= l + 2`).
pub fn feasible_l_range(g: &WeightedMultigraph, v: &VertexId, w: &VertexId) -> Result<LRange> {
    let i = g.index_of(v)?;
    let j = g.index_of(w)?;
    if i == j || g.mult_at(i, j) == 0 {
        return Err(Error::NotAdjacent(v.clone(), w.clone()));
    }
    Ok(feasible_range_dense(
        g.vertex_count(),
        g.weights(),
        g.mult_matrix(),
        i,
        j,
    ))
}

/// Whether the unordered pair admits an admissible contraction with this `l`.
pub fn is_admissible(g: &WeightedMultigraph, v: &VertexId, w: &VertexId, l: i64) -> Result<bool> {
    Ok(feasible_l_range(g, v, w)?.contains(l) || feasible_l_range(g, w, v)?.contains(l))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContractionStep {
    /// `[v, w]` in the ordering that was found admissible.
    pub pair: [VertexId; 2],
    pub l: i64,
    pub merged: VertexId,
}

impl ContractionStep {
    pub fn new(v: impl Into<VertexId>, w: impl Into<VertexId>, l: i64, merged: impl Into<VertexId>) -> Self {
        ContractionStep {
            pair: [v.into(), w.into()],
            l,
            merged: merged.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionCertificate {
    pub initial: WeightedMultigraph,
    pub steps: Vec<ContractionStep>,
}

/// Result of replaying a step sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    /// The initial graph followed by the graph after each accepted step.
    pub graphs: Vec<WeightedMultigraph>,
    pub rejection: Option<Rejection>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub step: usize,
    pub reason: String,
}

impl Replay {
    pub fn last(&self) -> &WeightedMultigraph {
        self.graphs.last().expect("replay always holds the initial graph")
    }

    /// Every step admissible and the final graph a singleton.
    pub fn is_complete(&self) -> bool {
        self.rejection.is_none() && self.last().is_singleton()
    }
}

impl ContractionCertificate {
    /// Replays the steps, stopping at the first one that is not admissible.
    /// Only unknown vertex ids are reported as errors.
    pub fn replay(&self) -> Result<Replay> {
        let mut graphs = vec![self.initial.clone()];
        for (k, step) in self.steps.iter().enumerate() {
            let g = graphs.last().unwrap();
            let [v, w] = &step.pair;
            g.index_of(v)?;
            g.index_of(w)?;
            let reject = |reason: String| Rejection { step: k, reason };
            if v == w {
                return Ok(Replay {
                    rejection: Some(reject(format!("pair repeats vertex `{v}`"))),
                    graphs,
                });
            }
            if g.multiplicity(v, w)? == 0 {
                return Ok(Replay {
                    rejection: Some(reject(format!("`{v}` and `{w}` are not adjacent"))),
                    graphs,
                });
            }
            if !is_admissible(g, v, w, step.l)? {
                let fwd = feasible_l_range(g, v, w)?;
                let back = feasible_l_range(g, w, v)?;
                return Ok(Replay {
                    rejection: Some(reject(format!(
                        "l = {} not admissible; feasible {:?} as ({v},{w}), {:?} as ({w},{v})",
                        step.l,
                        fwd.values(),
                        back.values()
                    ))),
                    graphs,
                });
            }
            let next = match contract_as(g, v, w, &step.merged) {
                Ok(next) => next,
                Err(e) => {
                    return Ok(Replay {
                        rejection: Some(reject(e.to_string())),
                        graphs,
                    })
                }
            };
            debug_assert_eq!(next.total_weight(), g.total_weight());
            graphs.push(next);
        }
        Ok(Replay {
            graphs,
            rejection: None,
        })
    }

    pub fn final_weight(&self) -> Result<Option<i64>> {
        let r = self.replay()?;
        Ok(r.is_complete().then(|| r.last().total_weight()))
    }
}

/// True iff every step is admissible where it is applied, the replay ends in
/// a singleton, and that singleton carries the total initial weight.
pub fn verify_certificate(cert: &ContractionCertificate) -> Result<bool> {
    let r = cert.replay()?;
    Ok(r.is_complete() && r.last().total_weight() == cert.initial.total_weight())
}

/// Transports a certificate for `cert.initial` (a spanning submultigraph of
/// `g` via `embedding`) to a certificate for `g` with the same pairs and `l`.
///
/// Merged ids are kept unless they collide with a vertex of `g`, in which case
/// a prime is appended until the name is free.
pub fn lift_certificate(
    cert: &ContractionCertificate,
    g: &WeightedMultigraph,
    embedding: &BTreeMap<VertexId, VertexId>,
) -> Result<ContractionCertificate> {
    if !cert.initial.is_spanning_submultigraph_of(g, embedding)? {
        return Err(Error::Embedding(
            "source graph is not a spanning submultigraph of the target".into(),
        ));
    }
    if !verify_certificate(cert)? {
        return Err(Error::Invalid("certificate to lift does not verify".into()));
    }
    let mut map = embedding.clone();
    let mut current = g.clone();
    let mut steps = Vec::with_capacity(cert.steps.len());
    for step in &cert.steps {
        let [v, w] = &step.pair;
        let v2 = map.remove(v).expect("replay checked the ids");
        let w2 = map.remove(w).expect("replay checked the ids");
        let mut merged = step.merged.clone();
        while merged != v2 && merged != w2 && current.contains(&merged) {
            merged = VertexId::new(format!("{merged}'"));
        }
        current = contract_as(&current, &v2, &w2, &merged)?;
        map.insert(step.merged.clone(), merged.clone());
        steps.push(ContractionStep {
            pair: [v2, w2],
            l: step.l,
            merged,
        });
    }
    let lifted = ContractionCertificate {
        initial: g.clone(),
        steps,
    };
    if !verify_certificate(&lifted)? {
        return Err(Error::Invalid(
            "lifted certificate failed to verify".into(),
        ));
    }
    Ok(lifted)
}
