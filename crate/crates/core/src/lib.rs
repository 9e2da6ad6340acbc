//! Admissible contraction of vertex-weighted multigraphs, intersection
//! arithmetic on `P2` and the Hirzebruch surfaces, and an obligation checker
//! that ties them together for branched covers.

pub mod arrangements;
pub mod canonical;
pub mod contraction;
pub mod dot;
pub mod error;
pub mod graph;
pub mod multipartite;
pub mod pipeline;
pub mod published;
pub mod report;
pub mod search;
pub mod surfaces;

pub use arrangements::{Arrangement, Role};
pub use canonical::{canonical_form, CanonicalKey};
pub use contraction::{
    contract, feasible_l_range, is_admissible, lift_certificate, verify_certificate,
    ContractionCertificate, ContractionStep, LRange,
};
pub use error::{Error, Result, Witness};
pub use graph::{Builtin, Partition, VertexId, WeightedMultigraph};
pub use multipartite::{contract_multipartite, ProofCase};
pub use report::{Obligation, ObligationReport, Status, Verdict};
pub use search::{brute_force_oracle, decide_contractible, Decision};
pub use surfaces::{ChernData, DivClass, PullbackGenus, Surface};
