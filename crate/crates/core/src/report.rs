//! Structured verdicts: a tree of named obligations with the integers that
//! decided them, plus computed attachments.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::contraction::ContractionCertificate;
use crate::surfaces::{ChernData, PullbackGenus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
    #[serde(rename = "NOT-COVERED")]
    NotCovered,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Yes => 0,
            Verdict::No => 1,
            Verdict::NotCovered => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::NotCovered => "NOT-COVERED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exit code for malformed input, alongside the verdict codes.
pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Assumed, not computed: an analytic step or a recorded hypothesis.
    Axiom,
    /// Reported for context; never decides anything.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obligation {
    pub name: String,
    pub statement: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Obligation>,
}

impl Obligation {
    fn leaf(name: &str, statement: impl Into<String>, status: Status) -> Self {
        Obligation {
            name: name.to_owned(),
            statement: statement.into(),
            status,
            values: BTreeMap::new(),
            children: Vec::new(),
        }
    }

    pub fn check(name: &str, statement: impl Into<String>, holds: bool) -> Self {
        Self::leaf(name, statement, if holds { Status::Pass } else { Status::Fail })
    }

    pub fn axiom(name: &str, statement: impl Into<String>) -> Self {
        Self::leaf(name, statement, Status::Axiom)
    }

    pub fn info(name: &str, statement: impl Into<String>) -> Self {
        Self::leaf(name, statement, Status::Info)
    }

    /// A node that passes exactly when all of its children do.
    pub fn group(name: &str, statement: impl Into<String>, children: Vec<Obligation>) -> Self {
        let status = if children.iter().all(Obligation::holds) {
            Status::Pass
        } else {
            Status::Fail
        };
        Obligation {
            children,
            ..Self::leaf(name, statement, status)
        }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.values.insert(key.to_owned(), value);
        self
    }

    pub fn push(&mut self, child: Obligation) {
        if !child.holds() {
            self.status = Status::Fail;
        }
        self.children.push(child);
    }

    /// No failure anywhere in this subtree.
    pub fn holds(&self) -> bool {
        self.status != Status::Fail && self.children.iter().all(Obligation::holds)
    }

    pub fn is_obstruction(&self) -> bool {
        self.name.starts_with("obstruction.")
    }

    /// Depth-first search by exact name.
    pub fn find(&self, name: &str) -> Option<&Obligation> {
        if self.name == name {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(name))
    }

    fn walk<'a>(&'a self, out: &mut Vec<&'a Obligation>) {
        out.push(self);
        for c in &self.children {
            c.walk(out);
        }
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Axiom => "AXIOM",
            Status::Info => "INFO",
        };
        write!(f, "{:indent$}[{status}] {}: {}", "", self.name, self.statement, indent = 2 * depth)?;
        if !self.values.is_empty() {
            let vals: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " ({})", vals.join(", "))?;
        }
        writeln!(f)?;
        for c in &self.children {
            c.write_tree(f, depth + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachments {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ContractionCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chern: Option<ChernData>,
    /// Arithmetic genus of the smooth curve `C`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    /// Intersection numbers used by obstructions, keyed like `D.F`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub intersections: BTreeMap<String, i64>,
    /// Pullback genera keyed by the obstruction that computed them.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub pullbacks: BTreeMap<String, PullbackGenus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObligationReport {
    pub verdict: Verdict,
    /// Human-readable input description, such as `P2 d=10`.
    pub subject: String,
    /// Hypotheses taken on faith, such as general position of a curve arrangement.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
    pub obligations: Vec<Obligation>,
    #[serde(default)]
    pub attachments: Attachments,
}

impl ObligationReport {
    pub fn not_covered(subject: impl Into<String>, reason: Obligation) -> Self {
        ObligationReport {
            verdict: Verdict::NotCovered,
            subject: subject.into(),
            assumptions: Vec::new(),
            obligations: vec![reason],
            attachments: Attachments::default(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn all(&self) -> Vec<&Obligation> {
        let mut out = Vec::new();
        for o in &self.obligations {
            o.walk(&mut out);
        }
        out
    }

    pub fn find(&self, name: &str) -> Option<&Obligation> {
        self.obligations.iter().find_map(|o| o.find(name))
    }

    /// Obstructions whose computation confirmed a curve of genus at most one.
    pub fn fired_obstructions(&self) -> Vec<&Obligation> {
        self.obligations
            .iter()
            .filter(|o| o.is_obstruction() && o.holds())
            .collect()
    }

    /// YES only when nothing failed and no obstruction is present; NO only
    /// with a fired obstruction.
    pub fn validate(&self) -> Result<(), String> {
        match self.verdict {
            Verdict::Yes => {
                if let Some(o) = self.all().into_iter().find(|o| o.status == Status::Fail) {
                    return Err(format!("YES report has failed obligation {}", o.name));
                }
                if self.obligations.iter().any(Obligation::is_obstruction) {
                    return Err("YES report carries an obstruction".into());
                }
                Ok(())
            }
            Verdict::No => {
                if self.fired_obstructions().is_empty() {
                    Err("NO report without a fired obstruction".into())
                } else {
                    Ok(())
                }
            }
            Verdict::NotCovered => Ok(()),
        }
    }
}

impl fmt::Display for ObligationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, self.verdict)?;
        for a in &self.assumptions {
            writeln!(f, "assuming {a}")?;
        }
        for o in &self.obligations {
            o.write_tree(f, 0)?;
        }
        let att = &self.attachments;
        if let Some(c) = &att.chern {
            writeln!(f, "chern: c1^2={} c2={} chi={}", c.c1_sq, c.c2, c.chi)?;
        }
        if let Some(g) = att.genus {
            writeln!(f, "genus of C: {g}")?;
        }
        for (k, v) in &att.intersections {
            writeln!(f, "{k} = {v}")?;
        }
        for (k, v) in &att.pullbacks {
            match v {
                PullbackGenus::Genus(g) => writeln!(f, "{k}: pullback genus {g}")?,
                PullbackGenus::Split => writeln!(f, "{k}: pullback splits")?,
            }
        }
        if let Some((d1, d2)) = att.factorization {
            writeln!(f, "factorization: {d1} x {d2}")?;
        }
        if let Some(cert) = &att.certificate {
            writeln!(f, "certificate: {} steps", cert.steps.len())?;
        }
        Ok(())
    }
}
