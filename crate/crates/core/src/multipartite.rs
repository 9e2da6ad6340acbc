//! Constructive contraction of completely multipartite graphs: absorb the
//! vertices outside a chosen sample-shaped subgraph with `l = 0` merges, then
//! transport the sample's published sequence.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::contraction::{
    contract_as, feasible_l_range, lift_certificate, verify_certificate, ContractionCertificate,
    ContractionStep,
};
use crate::error::{Error, Result, Witness};
use crate::graph::{Builtin, VertexId, WeightedMultigraph};
use crate::published::published_certificate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Absorption {
    pub steps: Vec<ContractionStep>,
    /// Graph after the steps; its vertex set is exactly the kept set.
    pub reduced: WeightedMultigraph,
}

fn check_multipartite_weights(g: &WeightedMultigraph) -> Result<()> {
    g.forbidden_triple().map_err(Error::Precondition)?;
    if let Some((v, w)) = g.vertex_weights().find(|&(_, w)| w < 2) {
        return Err(Error::Precondition(Witness::LowWeight {
            vertex: v.clone(),
            weight: w,
        }));
    }
    Ok(())
}

/// Merges every vertex outside `keep` into an adjacent kept vertex, one
/// `l = 0` step at a time. The kept vertex keeps its id.
///
/// Requires `g` completely multipartite with all weights at least 2, and no
/// set of mutually non-adjacent kept vertices larger than `|keep| - 4`.
pub fn absorb_submultigraph(g: &WeightedMultigraph, keep: &BTreeSet<VertexId>) -> Result<Absorption> {
    for v in keep {
        g.index_of(v)?;
    }
    check_multipartite_weights(g)?;
    let partition = g
        .multipartite_partition()
        .expect("forbidden triple already ruled out");
    // in a multipartite graph the independent sets are subsets of classes
    for class in &partition.classes {
        let inside: Vec<VertexId> = class.iter().filter(|v| keep.contains(*v)).cloned().collect();
        if inside.len() + 4 > keep.len() && !inside.is_empty() {
            return Err(Error::Precondition(Witness::LargeIndependentSet {
                vertices: inside,
                limit: keep.len().saturating_sub(4),
            }));
        }
    }
    if keep.is_empty() {
        return Err(Error::Invalid("kept vertex set is empty".into()));
    }

    let mut current = g.clone();
    let mut steps = Vec::new();
    while let Some(w) = current.vertices().iter().find(|v| !keep.contains(*v)).cloned() {
        let v = current
            .neighbors(&w)?
            .into_iter()
            .map(|(x, _)| x)
            .find(|x| keep.contains(x))
            .expect("every vertex has a kept neighbour under the independence bound");
        let (a, b) = if feasible_l_range(&current, &v, &w)?.contains(0) {
            (v.clone(), w.clone())
        } else if feasible_l_range(&current, &w, &v)?.contains(0) {
            (w.clone(), v.clone())
        } else {
            return Err(Error::Invalid(format!(
                "merging `{w}` into `{v}` is not admissible with l = 0"
            )));
        };
        current = contract_as(&current, &v, &w, &v)?;
        steps.push(ContractionStep {
            pair: [a, b],
            l: 0,
            merged: v,
        });
    }
    Ok(Absorption {
        steps,
        reduced: current,
    })
}

/// Which sample graph a multipartite graph reduces to, by the class count
/// `k` and smallest class size `a1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProofCase {
    /// `k >= 5`, reduce to `K1`.
    FiveOrMoreClasses,
    /// `k = 4`, reduce to `K2`.
    FourClasses,
    /// `k = 3`, `a1 >= 2`, reduce to `K2`.
    ThreeClassesNoSingleton,
    /// `k = 3`, `a1 = 1`, reduce to `K3`.
    ThreeClassesWithSingleton,
    /// `k = 2`, reduce to `K4`.
    TwoClasses,
}

impl ProofCase {
    pub fn number(self) -> u8 {
        match self {
            ProofCase::FiveOrMoreClasses => 1,
            ProofCase::FourClasses => 2,
            ProofCase::ThreeClassesNoSingleton => 3,
            ProofCase::ThreeClassesWithSingleton => 4,
            ProofCase::TwoClasses => 5,
        }
    }

    pub fn sample(self) -> Builtin {
        match self {
            ProofCase::FiveOrMoreClasses => Builtin::K1,
            ProofCase::FourClasses | ProofCase::ThreeClassesNoSingleton => Builtin::K2,
            ProofCase::ThreeClassesWithSingleton => Builtin::K3,
            ProofCase::TwoClasses => Builtin::K4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteContraction {
    pub case: ProofCase,
    /// Sample vertex -> chosen vertex of the input graph.
    pub embedding: BTreeMap<VertexId, VertexId>,
    pub absorbed: usize,
    pub certificate: ContractionCertificate,
}

/// Certificate for a completely multipartite graph whose vertices all have
/// reduced degree at least 4 and weight at least 2.
pub fn contract_multipartite(g: &WeightedMultigraph) -> Result<MultipartiteContraction> {
    check_multipartite_weights(g)?;
    for v in g.vertices() {
        let rdeg = g.rdeg(v)?;
        if rdeg < 4 {
            return Err(Error::Precondition(Witness::LowReducedDegree {
                vertex: v.clone(),
                rdeg,
            }));
        }
    }
    let mut classes = g
        .multipartite_partition()
        .expect("forbidden triple already ruled out")
        .classes;
    // sizes ascending; classes come out ordered by their least id
    classes.sort_by_key(Vec::len);
    let k = classes.len();
    let a1 = classes[0].len();

    let (case, picks): (ProofCase, Vec<(usize, usize)>) = match k {
        // (sample vertex number, class index), vertices taken in order
        k if k >= 5 => (ProofCase::FiveOrMoreClasses, (0..5).map(|i| (i + 1, i)).collect()),
        4 => (
            ProofCase::FourClasses,
            vec![(1, 0), (4, 1), (2, 2), (5, 2), (3, 3), (6, 3)],
        ),
        3 if a1 >= 2 => (
            ProofCase::ThreeClassesNoSingleton,
            vec![(1, 0), (4, 0), (2, 1), (5, 1), (3, 2), (6, 2)],
        ),
        3 => (
            ProofCase::ThreeClassesWithSingleton,
            vec![(1, 0), (2, 1), (4, 1), (6, 1), (3, 2), (5, 2), (7, 2)],
        ),
        2 => (
            ProofCase::TwoClasses,
            vec![(1, 0), (3, 0), (5, 0), (7, 0), (2, 1), (4, 1), (6, 1), (8, 1)],
        ),
        _ => unreachable!("reduced degree >= 4 forces at least two classes"),
    };

    let mut taken = vec![0usize; k];
    let mut embedding = BTreeMap::new();
    for (sample_vertex, class) in picks {
        let chosen = classes[class]
            .get(taken[class])
            .cloned()
            .ok_or_else(|| Error::Invalid(format!("class {class} too small for case")))?;
        taken[class] += 1;
        embedding.insert(VertexId::new(format!("v{sample_vertex}")), chosen);
    }
    let keep: BTreeSet<VertexId> = embedding.values().cloned().collect();
    let absorption = absorb_submultigraph(g, &keep)?;

    let sample = published_certificate(case.sample()).expect("samples K1..K4 are published");
    let lifted = lift_certificate(&sample, &absorption.reduced, &embedding)?;
    let absorbed = absorption.steps.len();
    let mut steps = absorption.steps;
    steps.extend(lifted.steps);
    let certificate = ContractionCertificate {
        initial: g.clone(),
        steps,
    };
    if !verify_certificate(&certificate)? {
        return Err(Error::Invalid("assembled certificate does not verify".into()));
    }
    Ok(MultipartiteContraction {
        case,
        embedding,
        absorbed,
        certificate,
    })
}
