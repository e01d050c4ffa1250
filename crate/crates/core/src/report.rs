use std::fmt;

use serde::{Deserialize, Serialize};

/// A single violated clause, identified by a stable clause id plus a
/// human-readable witness (the offending tuple, entry, or identity).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub clause: String,
    pub detail: String,
}

/// Outcome of a validation run. An empty report means every checked clause
/// holds. Clause ids are stable so regressions localize.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
    /// Informational flags that are not failures (e.g. positivity).
    pub flags: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn fail(&mut self, clause: &str, detail: impl Into<String>) {
        self.violations.push(Violation {
            clause: clause.to_string(),
            detail: detail.into(),
        });
    }

    pub fn flag(&mut self, flag: impl Into<String>) {
        let flag = flag.into();
        if !self.flags.contains(&flag) {
            self.flags.push(flag);
        }
    }

    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn clauses_failed(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.violations.iter().map(|v| v.clause.as_str()).collect();
        out.dedup();
        out
    }

    pub fn names_clause(&self, clause: &str) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }

    /// Merge a sub-report keeping its clause ids.
    pub fn merge(&mut self, sub: CheckReport) {
        self.violations.extend(sub.violations);
        for f in sub.flags {
            self.flag(f);
        }
    }

    /// Absorb a sub-report, prefixing its clause ids.
    pub fn absorb(&mut self, prefix: &str, sub: CheckReport) {
        for v in sub.violations {
            self.violations.push(Violation {
                clause: format!("{prefix}/{}", v.clause),
                detail: v.detail,
            });
        }
        for f in sub.flags {
            self.flag(f);
        }
    }

    /// Keep only violations of one clause (used by `--clause`).
    pub fn restrict_to(&self, clause: &str) -> CheckReport {
        CheckReport {
            violations: self
                .violations
                .iter()
                .filter(|v| v.clause == clause || v.clause.starts_with(&format!("{clause}/")))
                .cloned()
                .collect(),
            flags: self.flags.clone(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "PASS")?;
        } else {
            writeln!(f, "FAIL ({} violation(s))", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  [{}] {}", v.clause, v.detail)?;
            }
        }
        if !self.flags.is_empty() {
            write!(f, " flags: {}", self.flags.join(","))?;
        }
        Ok(())
    }
}
