use std::fmt::{self, Write as _};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// Stated in the literature for these algebras.
    Paper,
    /// Immediate from the construction.
    Trivial,
    /// Computed independently (by hand or by a second method).
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub p: u32,
    pub suite: String,
    pub max_degree: usize,
    pub budget_mb: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub metadata: Metadata,
    pub sections: Vec<Section>,
}

impl VerificationReport {
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.sections.iter().flat_map(|s| s.checks.iter())
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.checks().all(|c| c.status != Status::Fail)
    }

    pub fn has_skipped(&self) -> bool {
        self.checks().any(|c| c.status == Status::Skipped)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.metadata;
        writeln!(
            f,
            "{} {}  p={} suite={} max-degree={} budget={}MB seed={}",
            m.tool, m.version, m.p, m.suite, m.max_degree, m.budget_mb, m.seed
        )?;
        for section in &self.sections {
            writeln!(f, "\n[{}]", section.name)?;
            let width = section.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &section.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                };
                let mut line = String::new();
                write!(
                    line,
                    "  {status}  {:width$}  {:<8}  expected {}  computed {}",
                    c.name,
                    format!("{:?}", c.provenance).to_uppercase(),
                    c.expected,
                    c.computed
                )?;
                if let Some(note) = &c.note {
                    write!(line, "  ({note})")?;
                }
                writeln!(f, "{}", line.trim_end())?;
            }
        }
        writeln!(
            f,
            "\n{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
    }
}
