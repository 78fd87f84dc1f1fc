//! Structured pass/fail reports. Every failed check carries a witness.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub details: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        witness: Option<String>,
        details: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness,
            details: details.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}:", self.subject)?;
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  [{status}] {} — {}", c.name, c.details)?;
            if let Some(w) = &c.witness {
                write!(f, " (witness: {w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
