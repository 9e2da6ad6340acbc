#![allow(dead_code)]

use std::collections::BTreeMap;

use hypcert_core::arrangements::Arrangement;
use hypcert_core::contraction::ContractionCertificate;
use hypcert_core::graph::{Builtin, VertexId, WeightedMultigraph};
use hypcert_core::published::published_certificate;
use proptest::prelude::*;

pub fn ids(n: usize) -> Vec<VertexId> {
    (1..=n).map(|i| VertexId::new(format!("v{i}"))).collect()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Graph on `v1..vn` from weights and one multiplicity per pair, in `pairs` order.
pub fn build(weights: &[i64], mults: &[u32]) -> WeightedMultigraph {
    let names = ids(weights.len());
    let edges: Vec<_> = pairs(weights.len())
        .into_iter()
        .zip(mults)
        .map(|((i, j), &m)| (names[i].clone(), names[j].clone(), m))
        .collect();
    WeightedMultigraph::new(names.iter().cloned().zip(weights.iter().copied()), edges).unwrap()
}

pub fn arb_graph(max_n: usize, max_w: i64, max_m: u32) -> impl Strategy<Value = WeightedMultigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(0..=max_w, n),
            prop::collection::vec(0..=max_m, n * (n - 1) / 2),
        )
            .prop_map(|(w, m)| build(&w, &m))
    })
}

/// A graph together with one of its adjacent ordered pairs.
pub fn arb_graph_with_edge(
    max_n: usize,
    max_w: i64,
    max_m: u32,
) -> impl Strategy<Value = (WeightedMultigraph, VertexId, VertexId)> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(0..=max_w, n),
            prop::collection::vec(0..=max_m, n * (n - 1) / 2),
            0..n * (n - 1) / 2,
            1..=max_m.max(1),
            any::<bool>(),
        )
            .prop_map(move |(w, mut m, e, forced, flip)| {
                // make sure the chosen pair is adjacent
                if m[e] == 0 {
                    m[e] = forced;
                }
                let (i, j) = pairs(n)[e];
                let names = ids(n);
                let (v, u) = if flip { (j, i) } else { (i, j) };
                (build(&w, &m), names[v].clone(), names[u].clone())
            })
    })
}

/// Completely multipartite graph with the given class sizes; every
/// cross-class pair gets multiplicity at least one.
pub fn arb_multipartite(max_classes: usize, max_size: usize) -> impl Strategy<Value = WeightedMultigraph> {
    prop::collection::vec(1..=max_size, 2..=max_classes).prop_flat_map(|sizes| {
        let n: usize = sizes.iter().sum();
        let class: Vec<usize> = sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
            .collect();
        (
            prop::collection::vec(2..=6i64, n),
            prop::collection::vec(1..=3u32, n * (n - 1) / 2),
        )
            .prop_map(move |(w, m)| {
                let m: Vec<u32> = pairs(n)
                    .iter()
                    .zip(m)
                    .map(|(&(i, j), k)| if class[i] == class[j] { 0 } else { k })
                    .collect();
                build(&w, &m)
            })
    })
}

/// A bijection from the vertices of `g` onto fresh names `x1..xn`, shuffled by `perm`.
pub fn relabeling(g: &WeightedMultigraph, perm: &[usize]) -> BTreeMap<VertexId, VertexId> {
    g.vertices()
        .iter()
        .zip(perm)
        .map(|(v, &p)| (v.clone(), VertexId::new(format!("x{}", p + 1))))
        .collect()
}

/// The admissibility conditions read off the definition, one `l` at a time.
#[allow(clippy::int_plus_one)]
pub fn admissible_by_definition(g: &WeightedMultigraph, v: &VertexId, w: &VertexId, l: i64) -> bool {
    let m = g.multiplicity(v, w).unwrap() as i64;
    if !(0 <= l && l < m) {
        return false;
    }
    let others = g
        .vertices()
        .iter()
        .filter(|x| *x != v && *x != w)
        .all(|x| g.degree(x).unwrap() >= 3);
    let weights = g.weight(v).unwrap() >= l + 1 && g.weight(w).unwrap() >= l + 2;
    let dv = g.degree(v).unwrap() as i64;
    let dw = g.degree(w).unwrap() as i64;
    others && weights && dv - m + l >= 3 && dw - m + l >= 3
}

/// Brute-force isomorphism test by trying every bijection.
pub fn isomorphic(a: &WeightedMultigraph, b: &WeightedMultigraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return false;
    }
    let (va, vb) = (a.vertices(), b.vertices());
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|i| a.weight(&va[i]).unwrap() == b.weight(&vb[perm[i]]).unwrap())
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    a.multiplicity(&va[i], &va[j]).unwrap() == b.multiplicity(&vb[perm[i]], &vb[perm[j]]).unwrap()
                })
            });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A published certificate, an augmentation of its initial graph, and a
/// relabeling onto fresh names.
pub fn arb_augmented() -> impl Strategy<Value = (ContractionCertificate, WeightedMultigraph, BTreeMap<VertexId, VertexId>)> {
    prop::sample::select(vec![Builtin::K1, Builtin::K2, Builtin::K3, Builtin::K4]).prop_flat_map(|b| {
        let cert = published_certificate(b).unwrap();
        let n = cert.initial.vertex_count();
        let perm: Vec<usize> = (0..n).collect();
        (
            Just(cert),
            prop::collection::vec(0..=3i64, n),
            prop::collection::vec(0..=2u32, n * (n - 1) / 2),
            Just(perm).prop_shuffle(),
        )
            .prop_map(|(cert, dw, dm, perm)| {
                let g = &cert.initial;
                let vs = g.vertices().to_vec();
                let emb = relabeling(g, &perm);
                let n = vs.len();
                let vertices: Vec<_> = vs
                    .iter()
                    .zip(&dw)
                    .map(|(v, d)| (emb[v].clone(), g.weight(v).unwrap() + d))
                    .collect();
                let edges: Vec<_> = pairs(n)
                    .into_iter()
                    .zip(&dm)
                    .map(|((i, j), d)| {
                        let m = g.multiplicity(&vs[i], &vs[j]).unwrap() + d;
                        (emb[&vs[i]].clone(), emb[&vs[j]].clone(), m)
                    })
                    .collect();
                let big = WeightedMultigraph::new(vertices, edges).unwrap();
                (cert, big, emb)
            })
    })
}

pub fn arb_arrangement() -> impl Strategy<Value = Arrangement> {
    prop_oneof![
        (1..=30usize).prop_map(Arrangement::lines),
        (0..=10u32, 0..=10usize, 0..=10usize)
            .prop_filter("non-empty", |(_, a, b)| a + b > 0)
            .prop_map(|(n, a, b)| Arrangement::fibers_sections(n, a, b)),
    ]
}

