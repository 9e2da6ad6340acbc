//! Inputs shared by the benchmarks.

use hypcert_core::graph::{VertexId, WeightedMultigraph};

/// Complete graph on `n` vertices with uniform weight and edge multiplicity.
pub fn complete(n: usize, weight: i64, mult: u32) -> WeightedMultigraph {
    let ids: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let vertices = ids.iter().map(|id| (VertexId::from(id.as_str()), weight));
    let edges = ids.iter().enumerate().flat_map(|(i, a)| {
        ids[i + 1..]
            .iter()
            .map(move |b| (VertexId::from(a.as_str()), VertexId::from(b.as_str()), mult))
    });
    WeightedMultigraph::new(vertices, edges).expect("well-formed complete graph")
}
