//! Structured check reports: one entry per axiom, with the exact residual
//! matrix kept around so a failure pinpoints the offending condition.

use std::fmt;

use crate::exactlin::Mat;

/// Outcome of one condition check. `pass` holds exactly when the residual
/// (left-hand side minus right-hand side) is the zero matrix.
#[derive(Clone, Debug)]
pub struct CheckEntry {
    /// Stable condition identifier, e.g. `"(ta)(a)"` or `"(c2)"`.
    pub id: String,
    pub pass: bool,
    pub residual: Mat,
}

impl CheckEntry {
    pub fn from_residual(id: impl Into<String>, residual: Mat) -> CheckEntry {
        CheckEntry {
            id: id.into(),
            pass: residual.is_zero(),
            residual,
        }
    }

    /// Encodes a non-residual verdict (e.g. agreement of two solvers) as a
    /// 1x1 zero / one matrix.
    pub fn from_bool(id: impl Into<String>, ok: bool, field: crate::exactlin::Field) -> CheckEntry {
        let mut residual = Mat::zeros(1, 1, field);
        if !ok {
            residual.set(0, 0, crate::exactlin::Scalar::one(field));
        }
        CheckEntry::from_residual(id, residual)
    }
}

/// A named bundle of condition checks.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn push_residual(&mut self, id: impl Into<String>, residual: Mat) {
        self.entries.push(CheckEntry::from_residual(id, residual));
    }

    pub fn merge(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Identifiers of the failing conditions, in declaration order.
    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !e.pass)
            .map(|e| e.id.as_str())
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.name)?;
        for e in &self.entries {
            writeln!(f, "  {} {}", if e.pass { "pass" } else { "FAIL" }, e.id)?;
        }
        Ok(())
    }
}
