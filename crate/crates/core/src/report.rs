//! Verification reports: every check records both sides of each identity or
//! inequality it tests, never just a boolean.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The hypotheses of the check do not hold for this input.
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inapplicable => "INAPPLICABLE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    Index(i64),
    Vertex(VertexId),
    Face(Vec<VertexId>),
    Label(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Index(i) => write!(f, "index {i}"),
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Face(vs) => {
                let ids: Vec<String> = vs.iter().map(ToString::to_string).collect();
                write!(f, "face {{{}}}", ids.join(","))
            }
            Witness::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub label: String,
    pub lhs: i128,
    pub relation: Relation,
    pub rhs: i128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Record {
    pub fn holds(&self) -> bool {
        self.relation.holds(self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precondition {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub identity: String,
    pub status: Status,
    pub preconditions: Vec<Precondition>,
    pub records: Vec<Record>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(check: &str, identity: &str) -> Self {
        Self {
            check: check.to_owned(),
            identity: identity.to_owned(),
            status: Status::Pass,
            preconditions: Vec::new(),
            records: Vec::new(),
            witness: None,
            notes: Vec::new(),
        }
    }

    /// Notes a hypothesis; returns whether it holds.
    pub(crate) fn require(&mut self, name: impl Into<String>, holds: bool) -> bool {
        self.preconditions.push(Precondition {
            name: name.into(),
            holds,
        });
        holds
    }

    pub(crate) fn preconditions_hold(&self) -> bool {
        self.preconditions.iter().all(|p| p.holds)
    }

    pub(crate) fn record(
        &mut self,
        label: impl Into<String>,
        lhs: i128,
        relation: Relation,
        rhs: i128,
    ) {
        self.records.push(Record {
            label: label.into(),
            lhs,
            relation,
            rhs,
            witness: None,
        });
    }

    pub(crate) fn record_with(
        &mut self,
        label: impl Into<String>,
        lhs: i128,
        relation: Relation,
        rhs: i128,
        witness: Option<Witness>,
    ) {
        self.records.push(Record {
            label: label.into(),
            lhs,
            relation,
            rhs,
            witness,
        });
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Settles the status: inapplicable if any hypothesis failed, otherwise
    /// pass iff every record holds. The witness is taken from the first
    /// failing record.
    pub(crate) fn finish(mut self) -> Self {
        if !self.preconditions_hold() {
            self.status = Status::Inapplicable;
            return self;
        }
        match self.records.iter().position(|r| !r.holds()) {
            None => self.status = Status::Pass,
            Some(i) => {
                self.status = Status::Fail;
                let r = &self.records[i];
                self.witness = Some(
                    r.witness
                        .clone()
                        .unwrap_or_else(|| Witness::Label(r.label.clone())),
                );
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn record_named(&self, label: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.label == label)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} [{}]", self.check, self.status)?;
        writeln!(f, "   identity: {}", self.identity)?;
        for p in &self.preconditions {
            writeln!(
                f,
                "   precondition {}: {}",
                p.name,
                if p.holds { "yes" } else { "no" }
            )?;
        }
        for r in &self.records {
            let mark = if r.holds() { "ok" } else { "VIOLATED" };
            write!(
                f,
                "   {:<28} {} {} {}  {}",
                r.label, r.lhs, r.relation, r.rhs, mark
            )?;
            if let Some(w) = &r.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "   witness: {w}")?;
        }
        for n in &self.notes {
            writeln!(f, "   note: {n}")?;
        }
        Ok(())
    }
}
