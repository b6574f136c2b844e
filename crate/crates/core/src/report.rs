//! Pass/fail reports with witnesses, shared by the checkers and the CLI.

use serde::Serialize;

use crate::group::{Elem, FinAbGroup, InvariantFactors};
use crate::table::unflatten;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// An equation that fails, with the first argument tuple (lexicographic) where it does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub equation: String,
    pub tuple: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub invariants: Vec<i64>,
    pub coordinates: Vec<i64>,
}

impl Classification {
    pub fn new(invariants: &InvariantFactors, coordinates: Vec<i64>) -> Classification {
        Classification { invariants: invariants.0.clone(), coordinates }
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|&c| c == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// milliseconds; only filled in on request since it breaks byte-identical output
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<u64>,
}

impl Report {
    pub fn from_witnesses(witnesses: Vec<Witness>) -> Report {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        Report { status, witnesses, classification: None, message: None, timing: None }
    }

    pub fn pass() -> Report {
        Report::from_witnesses(Vec::new())
    }

    pub fn error(message: impl Into<String>) -> Report {
        Report { status: Status::Error, witnesses: Vec::new(), classification: None, message: Some(message.into()), timing: None }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_message(mut self, message: impl Into<String>) -> Report {
        self.message = Some(message.into());
        self
    }

    pub fn with_classification(mut self, c: Classification) -> Report {
        self.classification = Some(c);
        self
    }

    /// Combines reports: failures accumulate, an error wins.
    pub fn merge(mut self, other: Report) -> Report {
        if other.status == Status::Error || self.status == Status::Error {
            self.status = Status::Error;
        } else if !other.witnesses.is_empty() {
            self.status = Status::Fail;
        }
        self.witnesses.extend(other.witnesses);
        if self.message.is_none() {
            self.message = other.message;
        }
        self
    }

    pub fn witness(&self, equation: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.equation == equation)
    }
}

/// One equation over a product of slot groups: the residual is an index of the
/// coefficient group and the equation holds where it is 0.
pub struct Equation<'a> {
    pub id: &'a str,
    pub slots: Vec<&'a FinAbGroup>,
}

impl Equation<'_> {
    /// First tuple (lexicographic in element order) with a nonzero residual.
    pub fn first_failure<F>(&self, residual: F) -> Option<Vec<usize>>
    where
        F: Fn(&[usize]) -> usize + Sync + Send,
    {
        let dims: Vec<usize> = self.slots.iter().map(|g| g.order()).collect();
        let total: usize = dims.iter().product();
        crate::par::find_first(total, |flat| {
            let idx = unflatten(&dims, flat);
            (residual(&idx) != 0).then_some(idx)
        })
    }

    pub fn witness_of(&self, idx: &[usize]) -> Witness {
        Witness { equation: self.id.to_string(), tuple: idx.iter().zip(&self.slots).map(|(&i, g)| g.element(i)).collect() }
    }

    /// The witness list this equation contributes to a report.
    pub fn check<F>(&self, residual: F) -> Vec<Witness>
    where
        F: Fn(&[usize]) -> usize + Sync + Send,
    {
        self.first_failure(residual).map(|idx| self.witness_of(&idx)).into_iter().collect()
    }
}
