//! Canonical keys for small vertex-weighted multigraphs.
//!
//! Equitable refinement of an ordered partition, then individualization of
//! the first non-singleton cell. Candidates that are twins of each other
//! (same weight, same multiplicity to every third vertex) are explored once,
//! since the transposition swapping them is an automorphism fixing the
//! current partition. The key is the lexicographically least encoding over
//! all explored leaves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedMultigraph;

/// Default upper bound on the vertex count accepted by search routines.
pub const DEFAULT_VERTEX_BOUND: usize = 12;

/// Isomorphism-invariant key: equal iff the graphs are related by a weight-
/// and multiplicity-preserving bijection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey(Vec<i64>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

pub fn canonical_form(g: &WeightedMultigraph) -> Result<CanonicalKey> {
    canonical_form_bounded(g, DEFAULT_VERTEX_BOUND)
}

pub fn canonical_form_bounded(g: &WeightedMultigraph, bound: usize) -> Result<CanonicalKey> {
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    Ok(CanonicalKey(canonical_key(n, g.weights(), g.mult_matrix())))
}

pub(crate) fn canonical_key(n: usize, weights: &[i64], mult: &[u32]) -> Vec<i64> {
    let view = View { n, weights, mult };
    let mut by_weight: Vec<usize> = (0..n).collect();
    by_weight.sort_by_key(|&v| (weights[v], v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_weight {
        match cells.last_mut() {
            Some(cell) if weights[cell[0]] == weights[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    view.refine(&mut cells);
    let mut best = None;
    view.search(cells, &mut best);
    best.unwrap_or_else(|| vec![0])
}

struct View<'a> {
    n: usize,
    weights: &'a [i64],
    mult: &'a [u32],
}

impl View<'_> {
    fn m(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.weights[u] == self.weights[v]
            && (0..self.n).all(|x| x == u || x == v || self.m(u, x) == self.m(v, x))
    }

    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let n = self.n;
        let mut cell_of = vec![0usize; n];
        loop {
            for (k, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = k;
                }
            }
            let mut changed = false;
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut sigs: Vec<(Vec<u64>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut s = vec![0u64; cells.len()];
                        for u in 0..n {
                            s[cell_of[u]] += self.m(v, u) as u64;
                        }
                        (s, v)
                    })
                    .collect();
                sigs.sort();
                let before = next.len();
                let mut iter = sigs.into_iter();
                let (mut cur_sig, first) = iter.next().expect("cells are non-empty");
                let mut cur = vec![first];
                for (s, v) in iter {
                    if s == cur_sig {
                        cur.push(v);
                    } else {
                        next.push(std::mem::take(&mut cur));
                        cur.push(v);
                        cur_sig = s;
                    }
                }
                next.push(cur);
                changed |= next.len() - before > 1;
            }
            *cells = next;
            if !changed {
                return;
            }
        }
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<Vec<i64>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let key = self.encode(&order);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        };
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !reps.iter().any(|&r| self.twins(r, v)) {
                reps.push(v);
            }
        }
        for rep in reps {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![rep]);
            next.push(cells[target].iter().copied().filter(|&v| v != rep).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.refine(&mut next);
            self.search(next, best);
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<i64> {
        let n = self.n;
        let mut key = Vec::with_capacity(1 + n + n * (n - 1) / 2);
        key.push(n as i64);
        key.extend(order.iter().map(|&v| self.weights[v]));
        for a in 0..n {
            for b in a + 1..n {
                key.push(self.m(order[a], order[b]) as i64);
            }
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::graph::{Builtin, VertexId};

    fn permuted(g: &WeightedMultigraph, shift: usize) -> WeightedMultigraph {
        let ids = g.vertices();
        let n = ids.len();
        let map: BTreeMap<VertexId, VertexId> = ids
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId::new(format!("u{}", (i + shift) % n))))
            .collect();
        g.relabel(&map).unwrap()
    }

    #[test]
    fn relabeling_preserves_key() {
        for b in Builtin::ALL {
            let g = b.graph();
            for shift in 0..g.vertex_count() {
                assert_eq!(
                    canonical_form(&g).unwrap(),
                    canonical_form(&permuted(&g, shift)).unwrap(),
                    "{}",
                    b.name()
                );
            }
        }
    }

    #[test]
    fn weight_change_changes_key() {
        let g = Builtin::K1.graph();
        let verts: Vec<_> = g
            .vertex_weights()
            .map(|(v, w)| (v.clone(), if v.as_str() == "v3" { 3 } else { w }))
            .collect();
        let edges: Vec<_> = g.edges().map(|(u, v, m)| (u.clone(), v.clone(), m)).collect();
        let h = WeightedMultigraph::new(verts, edges).unwrap();
        assert_ne!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic_regular_graphs() {
        // two triangles vs a hexagon: both 2-regular on six vertices
        let tri = WeightedMultigraph::new(
            (0..6).map(|i| (format!("x{i}"), 1)),
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
                .map(|(a, b)| (format!("x{a}"), format!("x{b}"), 1)),
        )
        .unwrap();
        let hex = WeightedMultigraph::new(
            (0..6).map(|i| (format!("x{i}"), 1)),
            (0..6).map(|i| (format!("x{i}"), format!("x{}", (i + 1) % 6), 1)),
        )
        .unwrap();
        assert_ne!(canonical_form(&tri).unwrap(), canonical_form(&hex).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let g = Builtin::K4.graph();
        assert_eq!(
            canonical_form_bounded(&g, 7),
            Err(Error::SizeBound { size: 8, bound: 7 })
        );
    }

    #[test]
    fn large_symmetric_graph_is_fast() {
        // complete graph on twelve vertices: every vertex is a twin
        let g = WeightedMultigraph::new(
            (0..12).map(|i| (format!("x{i:02}"), 3)),
            (0..12).flat_map(|a| (a + 1..12).map(move |b| (format!("x{a:02}"), format!("x{b:02}"), 1))),
        )
        .unwrap();
        assert!(canonical_form(&g).is_ok());
    }
}
