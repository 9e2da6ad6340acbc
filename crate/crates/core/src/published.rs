//! The explicit contraction sequences drawn for the four sample graphs, and
//! the single illustrated step on `example-G`.
//!
//! `K3` and `K4` are drawn only up to a graph containing the previous sample
//! as a spanning submultigraph; the remaining steps are that sample's
//! sequence transported through the embedding.

use std::collections::BTreeMap;

use crate::contraction::{lift_certificate, ContractionCertificate, ContractionStep};
use crate::graph::{Builtin, VertexId};

fn step(v: &str, w: &str, l: i64, merged: &str) -> ContractionStep {
    ContractionStep::new(v, w, l, merged)
}

fn embedding(pairs: &[(&str, &str)]) -> BTreeMap<VertexId, VertexId> {
    pairs
        .iter()
        .map(|&(a, b)| (VertexId::from(a), VertexId::from(b)))
        .collect()
}

/// The published sequence for one of `K1`..`K4`; `None` for `example-G`,
/// which has no complete sequence.
pub fn published_certificate(which: Builtin) -> Option<ContractionCertificate> {
    let steps = match which {
        Builtin::K1 => vec![
            step("v1", "v2", 0, "m1"),
            step("v3", "v5", 0, "m2"),
            // the weight-2 vertex must take the lighter role
            step("v4", "m1", 1, "m3"),
            step("m2", "m3", 3, "m4"),
        ],
        Builtin::K2 => vec![
            step("v1", "v2", 0, "m1"),
            step("v3", "v4", 0, "m2"),
            step("v5", "v6", 0, "m3"),
            step("m1", "m2", 0, "m4"),
            step("m3", "m4", 3, "m5"),
        ],
        Builtin::K3 => {
            let prefix = vec![step("v2", "v3", 0, "p1"), step("v4", "v5", 0, "p2")];
            let k1 = published_certificate(Builtin::K1)?;
            let emb = embedding(&[
                ("v1", "v1"),
                ("v2", "v6"),
                ("v3", "v7"),
                ("v4", "p1"),
                ("v5", "p2"),
            ]);
            return Some(prefixed(Builtin::K3, prefix, &k1, &emb));
        }
        Builtin::K4 => {
            let prefix = vec![step("v1", "v2", 0, "q1")];
            let k3 = published_certificate(Builtin::K3)?;
            let emb = embedding(&[
                ("v1", "q1"),
                ("v2", "v3"),
                ("v4", "v5"),
                ("v6", "v7"),
                ("v3", "v4"),
                ("v5", "v6"),
                ("v7", "v8"),
            ]);
            return Some(prefixed(Builtin::K4, prefix, &k3, &emb));
        }
        Builtin::ExampleG => return None,
    };
    Some(ContractionCertificate {
        initial: which.graph(),
        steps,
    })
}

fn prefixed(
    which: Builtin,
    prefix: Vec<ContractionStep>,
    inner: &ContractionCertificate,
    emb: &BTreeMap<VertexId, VertexId>,
) -> ContractionCertificate {
    let head = ContractionCertificate {
        initial: which.graph(),
        steps: prefix,
    };
    let replay = head.replay().expect("prefix uses known ids");
    assert!(replay.rejection.is_none(), "published prefix is admissible");
    let lifted = lift_certificate(inner, replay.last(), emb).expect("sample embeds as drawn");
    let mut steps = head.steps;
    steps.extend(lifted.steps);
    ContractionCertificate {
        initial: which.graph(),
        steps,
    }
}

/// The illustrated step on `example-G` (`l = 1`), which does not end in a
/// singleton.
pub fn example_g_step() -> ContractionCertificate {
    ContractionCertificate {
        initial: Builtin::ExampleG.graph(),
        steps: vec![step("v1", "v2", 1, "w1")],
    }
}
