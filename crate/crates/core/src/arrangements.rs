//! Arrangements of rational curves in the three base-point-free roles
//! (lines on `P2`, fibers and sections on `F_N`) and their dual graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contraction::ContractionCertificate;
use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedMultigraph};
use crate::multipartite::{contract_multipartite, ProofCase};
use crate::report::Obligation;
use crate::surfaces::{anticanonical_degree, intersect, DivClass, Surface};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Role {
    Line,
    Fiber,
    Section,
}

impl Role {
    pub fn class(self) -> DivClass {
        match self {
            Role::Line => DivClass::LINE,
            Role::Fiber => DivClass::FIBER,
            Role::Section => DivClass::SECTION,
        }
    }

    /// Prefix of the dual-graph vertex ids: `L1`, `F1`, `T1`, ...
    pub fn prefix(self) -> &'static str {
        match self {
            Role::Line => "L",
            Role::Fiber => "F",
            Role::Section => "T",
        }
    }

    fn allowed_on(self, x: Surface) -> bool {
        matches!(
            (self, x),
            (Role::Line, Surface::P2) | (Role::Fiber | Role::Section, Surface::Hirzebruch { .. })
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub role: Role,
    pub class: DivClass,
}

impl From<Role> for Component {
    fn from(role: Role) -> Self {
        Component {
            role,
            class: role.class(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArrangementDoc")]
pub struct Arrangement {
    surface: Surface,
    components: Vec<Component>,
    /// Recorded assumption; never verified.
    general_position: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementDoc {
    surface: Surface,
    components: Vec<Component>,
    #[serde(default = "default_true")]
    general_position: bool,
}

fn default_true() -> bool {
    true
}

impl TryFrom<ArrangementDoc> for Arrangement {
    type Error = Error;

    fn try_from(doc: ArrangementDoc) -> Result<Self> {
        Arrangement::new(doc.surface, doc.components, doc.general_position)
    }
}

impl Arrangement {
    pub fn new(surface: Surface, components: Vec<Component>, general_position: bool) -> Result<Self> {
        for c in &components {
            if !c.role.allowed_on(surface) {
                return Err(Error::Invalid(format!("role {:?} is not available on {surface}", c.role)));
            }
            if c.class != c.role.class() {
                return Err(Error::Invalid(format!(
                    "role {:?} requires class {}, got {}",
                    c.role,
                    c.role.class(),
                    c.class
                )));
            }
        }
        Ok(Arrangement {
            surface,
            components,
            general_position,
        })
    }

    /// `m` lines in general position on `P2`.
    pub fn lines(m: usize) -> Self {
        Arrangement {
            surface: Surface::P2,
            components: vec![Role::Line.into(); m],
            general_position: true,
        }
    }

    /// `a` general fibers and `b` general sections on `F_N`.
    pub fn fibers_sections(n: u32, a: usize, b: usize) -> Self {
        let mut components = vec![Role::Fiber.into(); a];
        components.extend(vec![Component::from(Role::Section); b]);
        Arrangement {
            surface: Surface::Hirzebruch { n },
            components,
            general_position: true,
        }
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn general_position(&self) -> bool {
        self.general_position
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Dual-graph vertex id of each component, numbered per role.
    pub fn vertex_ids(&self) -> Vec<VertexId> {
        let mut counts = [0usize; 3];
        self.components
            .iter()
            .map(|c| {
                let slot = c.role as usize;
                counts[slot] += 1;
                VertexId::new(format!("{}{}", c.role.prefix(), counts[slot]))
            })
            .collect()
    }

    /// The assumption as it appears in reports.
    pub fn assumption(&self) -> String {
        let kind = match self.surface {
            Surface::P2 => "lines in general position".to_owned(),
            Surface::Hirzebruch { .. } => "general fibers and sections".to_owned(),
        };
        format!("{kind} on {} (components meet transversally)", self.surface)
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let count = |r: Role| self.components.iter().filter(|c| c.role == r).count();
        match self.surface {
            Surface::P2 => write!(f, "lines:P2:m={}", count(Role::Line)),
            Surface::Hirzebruch { n } => {
                write!(f, "fn:N={n}:a={}:b={}", count(Role::Fiber), count(Role::Section))
            }
        }
    }
}

/// Parses `lines:P2:m=5` and `fn:N=1:a=3:b=4`.
impl FromStr for Arrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Invalid(format!("arrangement `{s}`: {why}"));
        let parts: Vec<&str> = s.split(':').collect();
        let field = |pos: usize, key: &str| -> Result<usize> {
            let part = parts.get(pos).ok_or_else(|| bad(&format!("missing `{key}=`")))?;
            let value = part
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| bad(&format!("expected `{key}=`, got `{part}`")))?;
            value
                .parse()
                .map_err(|_| bad(&format!("`{key}` must be a non-negative integer")))
        };
        let (arr, used) = match parts[0] {
            "lines" => {
                if parts.get(1) != Some(&"P2") {
                    return Err(bad("lines live on P2"));
                }
                (Arrangement::lines(field(2, "m")?), 3)
            }
            "fn" => {
                let n = u32::try_from(field(1, "N")?).map_err(|_| bad("`N` is too large"))?;
                (Arrangement::fibers_sections(n, field(2, "a")?, field(3, "b")?), 4)
            }
            _ => return Err(bad("expected `lines:` or `fn:`")),
        };
        if parts.len() > used {
            return Err(bad("trailing fields"));
        }
        Ok(arr)
    }
}

/// One vertex per component weighted by `-K.C_i`, with `C_i.C_j` edges
/// between distinct components.
pub fn dual_graph(arr: &Arrangement) -> Result<WeightedMultigraph> {
    if !arr.general_position {
        return Err(Error::Invalid(
            "the dual graph is only defined for arrangements in general position".into(),
        ));
    }
    let x = arr.surface;
    let ids = arr.vertex_ids();
    let mut vertices = Vec::with_capacity(ids.len());
    for (id, c) in ids.iter().zip(&arr.components) {
        vertices.push((id.clone(), anticanonical_degree(x, c.class)?));
    }
    let mut edges = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            let m = intersect(x, arr.components[i].class, arr.components[j].class)?;
            let m = u32::try_from(m).map_err(|_| {
                Error::Invalid(format!("negative intersection between {} and {}", ids[i], ids[j]))
            })?;
            edges.push((ids[i].clone(), ids[j].clone(), m));
        }
    }
    WeightedMultigraph::new(vertices, edges)
}

pub fn total_class(arr: &Arrangement) -> DivClass {
    let zero = match arr.surface {
        Surface::P2 => DivClass::degree(0),
        Surface::Hirzebruch { .. } => DivClass::bidegree(0, 0),
    };
    arr.components
        .iter()
        .fold(zero, |acc, c| acc.checked_add(c.class).expect("roles are validated against the surface"))
}

/// `sum_{i<j} C_i.C_j`, the node count of the union.
pub fn pairwise_nodes(arr: &Arrangement) -> Result<i64> {
    let cs = &arr.components;
    let mut total = 0;
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            total += intersect(arr.surface, cs[i].class, cs[j].class)?;
        }
    }
    Ok(total)
}

/// Nodes left once the dual graph is contracted to a single vertex: each of
/// the `m - 1` merges smooths exactly one node.
pub fn contracted_singularities(arr: &Arrangement) -> Result<i64> {
    if arr.is_empty() {
        return Err(Error::Invalid("empty arrangement".into()));
    }
    Ok(pairwise_nodes(arr)? - (arr.len() as i64 - 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingCheck {
    pub obligation: Obligation,
    pub certificate: Option<ContractionCertificate>,
    pub case: Option<ProofCase>,
}

/// The combinatorial hypotheses for smoothing the arrangement into a curve
/// whose complement stays hyperbolic: weights and reduced degrees of the
/// dual graph, a contraction certificate, and the two numerical bounds on
/// the contracted curve.
pub fn check_zai_gen(arr: &Arrangement) -> Result<SmoothingCheck> {
    let x = arr.surface;
    let g = dual_graph(arr)?;
    let mut root = Obligation::group(
        "lemma.zai_gen",
        "the arrangement smooths to a curve with hyperbolic complement",
        Vec::new(),
    )
    .with("components", arr.len() as i64);

    root.push(Obligation::axiom("assumption.general_position", arr.assumption()));
    root.push(Obligation::check(
        "lemma.zai_gen.roles",
        "every component is a line, a fiber or a section, all base point free",
        true,
    ));

    let min_weight = g.vertex_weights().map(|(_, w)| w).min().unwrap_or(0);
    root.push(
        Obligation::check(
            "lemma.zai_gen.weight_ge_2",
            "every component has -K.C_i >= 2",
            !arr.is_empty() && min_weight >= 2,
        )
        .with("min_weight", min_weight),
    );

    let rdegs: Vec<usize> = g.vertices().iter().map(|v| g.rdeg(v)).collect::<Result<_>>()?;
    let min_rdeg = rdegs.iter().copied().min().unwrap_or(0);
    root.push(
        Obligation::check(
            "lemma.zai_gen.rdeg_ge_4",
            "every component meets at least four others",
            !arr.is_empty() && min_rdeg >= 4,
        )
        .with("min_rdeg", min_rdeg as i64),
    );

    let (mut certificate, mut case) = (None, None);
    let contraction = if root.holds() {
        match contract_multipartite(&g) {
            Ok(mc) => {
                let o = Obligation::check(
                    "lemma.contgraph2",
                    "the dual graph contracts admissibly to a singleton",
                    true,
                )
                .with("case", mc.case.number() as i64)
                .with("absorbed", mc.absorbed as i64)
                .with("steps", mc.certificate.steps.len() as i64);
                case = Some(mc.case);
                certificate = Some(mc.certificate);
                o
            }
            Err(Error::Precondition(w)) => Obligation::check(
                "lemma.contgraph2",
                format!("the dual graph contracts admissibly to a singleton: {w}"),
                false,
            ),
            Err(e) => return Err(e),
        }
    } else {
        Obligation::check(
            "lemma.contgraph2",
            "the dual graph contracts admissibly to a singleton: hypotheses fail",
            false,
        )
    };
    root.push(contraction);

    let total = total_class(arr);
    let minus_k = anticanonical_degree(x, total)?;
    root.push(
        Obligation::check("lemma.hypsmooth.minus_k_ge_8", "-K.C >= 8 for the total class", minus_k >= 8)
            .with("minus_k_degree", minus_k),
    );
    let sing = if arr.is_empty() { 0 } else { contracted_singularities(arr)? };
    root.push(
        Obligation::check(
            "lemma.hypsmooth.sing_ge_4",
            "the contracted curve keeps at least four nodes",
            sing >= 4,
        )
        .with("singularities", sing),
    );
    root.push(Obligation::axiom(
        "lemma.hypsmooth",
        "a rational nodal curve with these bounds has hyperbolic complement after smoothing",
    ));
    Ok(SmoothingCheck {
        obligation: root,
        certificate,
        case,
    })
}
