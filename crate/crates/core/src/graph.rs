//! Vertex-weighted multigraphs without self-loops.
//!
//! Parallel edges are never distinguished individually, so the edge set is
//! stored as a symmetric multiplicity matrix over the (sorted) vertex list.
//! Graphs are immutable once built.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Witness};

/// Opaque vertex name. Vertices are kept in the total order of their ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Self {
        VertexId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct WeightedMultigraph {
    ids: Vec<VertexId>,
    weights: Vec<i64>,
    /// Row-major `n * n`, symmetric, zero diagonal.
    mult: Vec<u32>,
}

impl WeightedMultigraph {
    /// Builds a graph. Repeated edge entries for the same pair are summed and
    /// zero multiplicities are dropped.
    pub fn new<V, E, I>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (I, i64)>,
        E: IntoIterator<Item = (I, I, u32)>,
        I: Into<VertexId>,
    {
        let mut named: BTreeMap<VertexId, i64> = BTreeMap::new();
        for (id, wt) in vertices {
            let id = id.into();
            if named.insert(id.clone(), wt).is_some() {
                return Err(Error::DuplicateVertex(id));
            }
        }
        let ids: Vec<VertexId> = named.keys().cloned().collect();
        let weights: Vec<i64> = named.values().copied().collect();
        let n = ids.len();
        let mut g = WeightedMultigraph {
            ids,
            weights,
            mult: vec![0; n * n],
        };
        for (u, v, m) in edges {
            let (u, v) = (u.into(), v.into());
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let i = g.index_of(&u)?;
            let j = g.index_of(&v)?;
            g.mult[i * n + j] += m;
            g.mult[j * n + i] += m;
        }
        Ok(g)
    }

    /// Internal constructor from dense parts; `ids` must be sorted and unique.
    pub(crate) fn from_parts(ids: Vec<VertexId>, weights: Vec<i64>, mult: Vec<u32>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(mult.len(), ids.len() * ids.len());
        WeightedMultigraph { ids, weights, mult }
    }

    pub fn singleton(id: impl Into<VertexId>, weight: i64) -> Self {
        WeightedMultigraph {
            ids: vec![id.into()],
            weights: vec![weight],
            mult: vec![0],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn is_singleton(&self) -> bool {
        self.ids.len() == 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.ids.binary_search(v).is_ok()
    }

    pub(crate) fn index_of(&self, v: &VertexId) -> Result<usize> {
        self.ids
            .binary_search(v)
            .map_err(|_| Error::UnknownVertex(v.clone()))
    }

    pub(crate) fn weight_at(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub(crate) fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub(crate) fn mult_at(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.ids.len() + j]
    }

    pub(crate) fn mult_matrix(&self) -> &[u32] {
        &self.mult
    }

    pub(crate) fn degree_at(&self, i: usize) -> u64 {
        let n = self.ids.len();
        self.mult[i * n..(i + 1) * n].iter().map(|&m| m as u64).sum()
    }

    pub(crate) fn rdeg_at(&self, i: usize) -> usize {
        let n = self.ids.len();
        self.mult[i * n..(i + 1) * n].iter().filter(|&&m| m > 0).count()
    }

    pub fn weight(&self, v: &VertexId) -> Result<i64> {
        Ok(self.weights[self.index_of(v)?])
    }

    pub fn multiplicity(&self, u: &VertexId, v: &VertexId) -> Result<u32> {
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        Ok(self.mult_at(i, j))
    }

    /// Number of incident edges, counted with multiplicity.
    pub fn degree(&self, v: &VertexId) -> Result<u64> {
        Ok(self.degree_at(self.index_of(v)?))
    }

    /// Number of distinct neighbours.
    pub fn rdeg(&self, v: &VertexId) -> Result<usize> {
        Ok(self.rdeg_at(self.index_of(v)?))
    }

    pub fn neighbors(&self, v: &VertexId) -> Result<Vec<(VertexId, u32)>> {
        let i = self.index_of(v)?;
        Ok((0..self.ids.len())
            .filter(|&j| self.mult_at(i, j) > 0)
            .map(|j| (self.ids[j].clone(), self.mult_at(i, j)))
            .collect())
    }

    /// All edges `(u, v, mult)` with `u < v` and `mult >= 1`, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, u32)> + '_ {
        let n = self.ids.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                let m = self.mult_at(i, j);
                (m > 0).then(|| (&self.ids[i], &self.ids[j], m))
            })
        })
    }

    pub fn total_weight(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum::<u64>() / 2
    }

    pub fn vertex_weights(&self) -> impl Iterator<Item = (&VertexId, i64)> + '_ {
        self.ids.iter().zip(self.weights.iter().copied())
    }

    /// Fails with the first vertex whose weight is not positive.
    pub fn require_positive_weights(&self) -> Result<()> {
        match self.vertex_weights().find(|(_, w)| *w <= 0) {
            Some((v, w)) => Err(Error::NonPositiveWeight {
                vertex: v.clone(),
                weight: w,
            }),
            None => Ok(()),
        }
    }

    /// Induced subgraph on `keep`, preserving weights and multiplicities.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<Self> {
        let idx: Vec<usize> = keep
            .iter()
            .map(|v| self.index_of(v))
            .collect::<Result<_>>()?;
        let n = idx.len();
        let mut mult = vec![0; n * n];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                mult[a * n + b] = self.mult_at(i, j);
            }
        }
        Ok(Self::from_parts(
            keep.iter().cloned().collect(),
            idx.iter().map(|&i| self.weights[i]).collect(),
            mult,
        ))
    }

    /// Renames vertices through `map`, which must be injective and total.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Self> {
        let mut verts = Vec::with_capacity(self.ids.len());
        for (v, w) in self.vertex_weights() {
            let image = map
                .get(v)
                .ok_or_else(|| Error::Embedding(format!("vertex `{v}` has no image")))?;
            verts.push((image.clone(), w));
        }
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v, m)| (map[u].clone(), map[v].clone(), m))
            .collect();
        WeightedMultigraph::new(verts, edges).map_err(|e| match e {
            Error::DuplicateVertex(v) => {
                Error::Embedding(format!("two vertices map to `{v}`"))
            }
            other => other,
        })
    }

    /// Returns the partition into classes of mutually non-adjacent vertices
    /// when non-adjacency is an equivalence relation, `None` otherwise.
    pub fn multipartite_partition(&self) -> Option<Partition> {
        self.forbidden_triple()
            .ok()
            .map(|()| self.non_adjacency_classes())
    }

    /// `Ok(())` when completely multipartite, else a forbidden triple.
    pub fn forbidden_triple(&self) -> Result<(), Witness> {
        let n = self.ids.len();
        for a in 0..n {
            for b in 0..n {
                if b == a || self.mult_at(a, b) > 0 {
                    continue;
                }
                for c in b + 1..n {
                    if c == a || self.mult_at(a, c) > 0 {
                        continue;
                    }
                    if self.mult_at(b, c) > 0 {
                        return Err(Witness::ForbiddenTriple {
                            first: self.ids[a].clone(),
                            second: self.ids[b].clone(),
                            third: self.ids[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn non_adjacency_classes(&self) -> Partition {
        let n = self.ids.len();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let members: Vec<usize> = (i..n)
                .filter(|&j| !assigned[j] && (j == i || self.mult_at(i, j) == 0))
                .collect();
            for &j in &members {
                assigned[j] = true;
            }
            classes.push(members.into_iter().map(|j| self.ids[j].clone()).collect());
        }
        Partition { classes }
    }

    /// Whether `self` is a spanning submultigraph of `g` through `embedding`
    /// (a map from the vertices of `self` to those of `g`).
    pub fn is_spanning_submultigraph_of(
        &self,
        g: &WeightedMultigraph,
        embedding: &BTreeMap<VertexId, VertexId>,
    ) -> Result<bool> {
        let mut images = BTreeSet::new();
        let mut idx = Vec::with_capacity(self.ids.len());
        for v in &self.ids {
            let image = embedding
                .get(v)
                .ok_or_else(|| Error::Embedding(format!("vertex `{v}` has no image")))?;
            let j = g.index_of(image)?;
            if !images.insert(j) {
                return Err(Error::Embedding(format!(
                    "embedding is not injective at `{image}`"
                )));
            }
            idx.push(j);
        }
        if let Some(k) = embedding.keys().find(|k| !self.contains(k)) {
            return Err(Error::UnknownVertex(k.clone()));
        }
        if idx.len() != g.vertex_count() {
            return Ok(false);
        }
        let n = self.ids.len();
        for a in 0..n {
            if self.weights[a] > g.weight_at(idx[a]) {
                return Ok(false);
            }
            for b in a + 1..n {
                if self.mult_at(a, b) > g.mult_at(idx[a], idx[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for WeightedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self
            .vertex_weights()
            .map(|(v, w)| format!("{v}:{w}"))
            .collect();
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v, m)| format!("{u}-{v}x{m}"))
            .collect();
        write!(f, "Graph[{}; {}]", verts.join(" "), edges.join(" "))
    }
}

/// Wire form: `{"vertices":[{"id":..,"wt":..}],"edges":[{"u":..,"v":..,"mult":..}]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    #[serde(default)]
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: VertexId,
    wt: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    u: VertexId,
    v: VertexId,
    mult: u32,
}

impl TryFrom<GraphDoc> for WeightedMultigraph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        WeightedMultigraph::new(
            doc.vertices.into_iter().map(|v| (v.id, v.wt)),
            doc.edges.into_iter().map(|e| (e.u, e.v, e.mult)),
        )
    }
}

impl From<WeightedMultigraph> for GraphDoc {
    fn from(g: WeightedMultigraph) -> Self {
        GraphDoc {
            vertices: g
                .vertex_weights()
                .map(|(id, wt)| VertexDoc { id: id.clone(), wt })
                .collect(),
            edges: g
                .edges()
                .map(|(u, v, mult)| EdgeDoc {
                    u: u.clone(),
                    v: v.clone(),
                    mult,
                })
                .collect(),
        }
    }
}

/// Classes of a completely multipartite graph: two distinct vertices share a
/// class iff they are non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<Vec<VertexId>>,
}

impl Partition {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, v: &VertexId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }
}

/// The graphs drawn in the reference figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    K1,
    K2,
    K3,
    K4,
    ExampleG,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [
        Builtin::K1,
        Builtin::K2,
        Builtin::K3,
        Builtin::K4,
        Builtin::ExampleG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::K1 => "K1",
            Builtin::K2 => "K2",
            Builtin::K3 => "K3",
            Builtin::K4 => "K4",
            Builtin::ExampleG => "example-G",
        }
    }

    pub fn graph(self) -> WeightedMultigraph {
        let v = |i: usize| format!("v{i}");
        let (n, wt, edges): (usize, i64, Vec<(usize, usize, u32)>) = match self {
            // complete graph on five vertices
            Builtin::K1 => (5, 2, all_pairs(5).collect()),
            // octahedron: the pairs {1,4}, {2,5}, {3,6} are missing
            Builtin::K2 => (
                6,
                2,
                all_pairs(6)
                    .filter(|&(a, b, _)| b - a != 3)
                    .collect(),
            ),
            // v1 joined to all; {v2,v4,v6} joined to {v3,v5,v7}
            Builtin::K3 => (
                7,
                2,
                all_pairs(7)
                    .filter(|&(a, b, _)| a == 1 || (a + b) % 2 == 1)
                    .collect(),
            ),
            // odd vertices joined to even vertices
            Builtin::K4 => (
                8,
                2,
                all_pairs(8).filter(|&(a, b, _)| (a + b) % 2 == 1).collect(),
            ),
            Builtin::ExampleG => (3, 3, vec![(1, 2, 2), (1, 3, 2), (2, 3, 2)]),
        };
        WeightedMultigraph::new(
            (1..=n).map(|i| (v(i), wt)),
            edges.into_iter().map(|(a, b, m)| (v(a), v(b), m)),
        )
        .expect("builtin graphs are well formed")
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize, u32)> {
    (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b, 1)))
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown builtin graph `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn path4() -> WeightedMultigraph {
        WeightedMultigraph::new(
            [("a", 1), ("b", 1), ("c", 1), ("d", 1)],
            [("a", "b", 1), ("b", "c", 1), ("c", "d", 1)],
        )
        .unwrap()
    }

    #[test]
    fn degrees_of_example_g() {
        let g = Builtin::ExampleG.graph();
        assert_eq!(g.degree(&id("v1")).unwrap(), 4);
        assert_eq!(g.rdeg(&id("v1")).unwrap(), 2);
    }

    #[test]
    fn degrees_of_k1() {
        let g = Builtin::K1.graph();
        for v in g.vertices() {
            assert_eq!(g.degree(v).unwrap(), 4);
            assert_eq!(g.rdeg(v).unwrap(), 4);
        }
    }

    #[test]
    fn isolated_vertex_has_degree_zero() {
        let g = WeightedMultigraph::new([("x", 5), ("y", 1)], Vec::<(&str, &str, u32)>::new())
            .unwrap();
        assert_eq!(g.degree(&id("x")).unwrap(), 0);
        assert_eq!(g.rdeg(&id("x")).unwrap(), 0);
    }

    #[test]
    fn unknown_vertex_is_an_error() {
        let g = Builtin::K1.graph();
        assert_eq!(g.degree(&id("zz")), Err(Error::UnknownVertex(id("zz"))));
        assert!(g.rdeg(&id("zz")).is_err());
    }

    #[test]
    fn rejects_self_loops_and_unknown_endpoints() {
        assert_eq!(
            WeightedMultigraph::new([("a", 1)], [("a", "a", 1)]),
            Err(Error::SelfLoop(id("a")))
        );
        assert_eq!(
            WeightedMultigraph::new([("a", 1)], [("a", "b", 1)]),
            Err(Error::UnknownVertex(id("b")))
        );
        assert_eq!(
            WeightedMultigraph::new([("a", 1), ("a", 2)], Vec::<(&str, &str, u32)>::new()),
            Err(Error::DuplicateVertex(id("a")))
        );
    }

    #[test]
    fn zero_multiplicity_is_absent() {
        let g = WeightedMultigraph::new([("a", 1), ("b", 1)], [("a", "b", 0)]).unwrap();
        assert_eq!(g.edges().count(), 0);
        assert_eq!(g.rdeg(&id("a")).unwrap(), 0);
    }

    #[test]
    fn builtin_shapes() {
        let expect = [
            (Builtin::K1, 5, 10, 2),
            (Builtin::K2, 6, 12, 2),
            (Builtin::K3, 7, 15, 2),
            (Builtin::K4, 8, 16, 2),
            (Builtin::ExampleG, 3, 6, 3),
        ];
        for (b, n, e, wt) in expect {
            let g = b.graph();
            assert_eq!(g.vertex_count(), n, "{}", b.name());
            assert_eq!(g.total_multiplicity(), e, "{}", b.name());
            assert!(g.vertex_weights().all(|(_, w)| w == wt));
        }
        let k4 = Builtin::K4.graph();
        assert!(k4.vertices().iter().all(|v| k4.degree(v).unwrap() == 4));
        for b in [Builtin::K1, Builtin::K2, Builtin::K3, Builtin::K4] {
            let g = b.graph();
            let min_rdeg = g.vertices().iter().map(|v| g.rdeg(v).unwrap()).min();
            assert_eq!(min_rdeg, Some(4), "{}", b.name());
        }
    }

    #[test]
    fn builtin_edges_match_figures() {
        let k2 = Builtin::K2.graph();
        for (a, b) in [("v1", "v4"), ("v2", "v5"), ("v3", "v6")] {
            assert_eq!(k2.multiplicity(&id(a), &id(b)).unwrap(), 0);
        }
        let k3 = Builtin::K3.graph();
        assert_eq!(k3.degree(&id("v1")).unwrap(), 6);
        assert_eq!(k3.multiplicity(&id("v2"), &id("v4")).unwrap(), 0);
        assert_eq!(k3.multiplicity(&id("v2"), &id("v7")).unwrap(), 1);
        let g = Builtin::ExampleG.graph();
        assert!(g.edges().all(|(_, _, m)| m == 2));
    }

    #[test]
    fn partition_of_complete_graph_is_singletons() {
        let p = Builtin::K1.graph().multipartite_partition().unwrap();
        assert_eq!(p.class_sizes(), vec![1; 5]);
    }

    #[test]
    fn partition_of_builtins() {
        let mut sizes = Builtin::K2.graph().multipartite_partition().unwrap().class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2]);
        let mut sizes = Builtin::K3.graph().multipartite_partition().unwrap().class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 3]);
        let sizes = Builtin::K4.graph().multipartite_partition().unwrap().class_sizes();
        assert_eq!(sizes, vec![4, 4]);
    }

    #[test]
    fn path_is_not_multipartite() {
        // a path on three vertices is K_{1,2}; four vertices break it
        let g = path4();
        assert!(g.multipartite_partition().is_none());
        match g.forbidden_triple() {
            Err(Witness::ForbiddenTriple { first, .. }) => {
                assert!(first == id("a") || first == id("d"))
            }
            other => panic!("expected triple, got {other:?}"),
        }
    }

    #[test]
    fn spanning_checks() {
        let k1 = Builtin::K1.graph();
        let ident: BTreeMap<_, _> = k1.vertices().iter().map(|v| (v.clone(), v.clone())).collect();
        assert!(k1.is_spanning_submultigraph_of(&k1, &ident).unwrap());

        let k2 = Builtin::K2.graph();
        assert!(!k1.is_spanning_submultigraph_of(&k2, &ident).unwrap());

        let mut heavier = ident.clone();
        heavier.insert(id("v1"), id("nope"));
        assert!(k1.is_spanning_submultigraph_of(&k1, &heavier).is_err());

        let mut collapsed = ident.clone();
        collapsed.insert(id("v2"), id("v1"));
        assert!(matches!(
            k1.is_spanning_submultigraph_of(&k1, &collapsed),
            Err(Error::Embedding(_))
        ));
    }

    #[test]
    fn heavier_weight_breaks_spanning() {
        let small = WeightedMultigraph::new([("a", 3), ("b", 1)], [("a", "b", 1)]).unwrap();
        let big = WeightedMultigraph::new([("a", 2), ("b", 5)], [("a", "b", 4)]).unwrap();
        let ident: BTreeMap<_, _> = [(id("a"), id("a")), (id("b"), id("b"))].into();
        assert!(!small.is_spanning_submultigraph_of(&big, &ident).unwrap());
        let swap: BTreeMap<_, _> = [(id("a"), id("b")), (id("b"), id("a"))].into();
        assert!(small.is_spanning_submultigraph_of(&big, &swap).unwrap());
    }

    #[test]
    fn json_wire_format() {
        let g: WeightedMultigraph = serde_json::from_str(
            r#"{"vertices":[{"id":"v1","wt":2},{"id":"v2","wt":3}],"edges":[{"u":"v1","v":"v2","mult":2}]}"#,
        )
        .unwrap();
        assert_eq!(g.multiplicity(&id("v1"), &id("v2")).unwrap(), 2);
        let back: WeightedMultigraph = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);

        let err = serde_json::from_str::<WeightedMultigraph>(
            r#"{"vertices":[{"id":"v1","wt":2,"colour":1}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("colour"));
        let err = serde_json::from_str::<WeightedMultigraph>(
            r#"{"vertices":[{"id":"v1","wt":2}],"edges":[{"u":"v1","v":"v1","mult":1}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn positive_weight_policy() {
        let g = WeightedMultigraph::new([("a", 0), ("b", 1)], [("a", "b", 1)]).unwrap();
        assert_eq!(
            g.require_positive_weights(),
            Err(Error::NonPositiveWeight { vertex: id("a"), weight: 0 })
        );
        assert!(Builtin::K1.graph().require_positive_weights().is_ok());
    }

    #[test]
    fn builtin_names_parse() {
        assert_eq!("k3".parse::<Builtin>().unwrap(), Builtin::K3);
        assert_eq!("example-G".parse::<Builtin>().unwrap(), Builtin::ExampleG);
        assert!("K5".parse::<Builtin>().is_err());
    }
}
