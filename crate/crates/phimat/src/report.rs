//! Report values shared by the axiom, proposition, and correspondence
//! checkers.
//!
//! Every failed check carries a [`Witness`]: the concrete subsets that
//! demonstrate the violation, so a failure can be reproduced with one
//! query against the same instance.

use std::fmt;

use serde::Serialize;

use crate::sets::Subset;

/// Pass/fail verdict of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Subsets demonstrating a failure, with a short note naming their roles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub note: String,
    pub subsets: Vec<Subset>,
}

impl Witness {
    pub fn new(note: impl Into<String>, subsets: Vec<Subset>) -> Self {
        Witness {
            note: note.into(),
            subsets,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.subsets.iter().map(|s| s.to_string()).collect();
        if sets.is_empty() {
            write!(f, "({})", self.note)
        } else {
            write!(f, "{} ({})", sets.join(", "), self.note)
        }
    }
}

/// One named check with its verdict and, on failure, a witness.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            name: name.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => write!(f, "{:<32} {}  witness {}", self.name, self.verdict, w),
            None => write!(f, "{:<32} {}", self.name, self.verdict),
        }
    }
}
