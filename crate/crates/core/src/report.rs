use alloc::string::String;
use alloc::vec::Vec;

/// Verdict of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

/// The first witness that broke an identity, with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of verifying one identity over a range of lengths.
///
/// A failing report always carries a counterexample. Composite checks keep
/// their pieces in `parts`; the parent status is `Fail` if any part failed,
/// `Pass` if at least one part passed, and `Skipped` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub n_range: (usize, usize),
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub parts: Vec<CheckReport>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, n_range: (usize, usize)) -> Self {
        CheckReport { name: name.into(), n_range, status: Status::Pass, counterexample: None, parts: Vec::new() }
    }

    pub fn fail(name: impl Into<String>, n_range: (usize, usize), cex: Counterexample) -> Self {
        CheckReport { name: name.into(), n_range, status: Status::Fail, counterexample: Some(cex), parts: Vec::new() }
    }

    pub fn skipped(name: impl Into<String>, n_range: (usize, usize), reason: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            n_range,
            status: Status::Skipped(reason.into()),
            counterexample: None,
            parts: Vec::new(),
        }
    }

    /// `Ok(())` keeps the check passing, `Err(cex)` fails it.
    pub fn from_outcome(
        name: impl Into<String>,
        n_range: (usize, usize),
        outcome: core::result::Result<(), Counterexample>,
    ) -> Self {
        match outcome {
            Ok(()) => CheckReport::pass(name, n_range),
            Err(cex) => CheckReport::fail(name, n_range, cex),
        }
    }

    pub fn composite(name: impl Into<String>, n_range: (usize, usize), parts: Vec<CheckReport>) -> Self {
        let failed = parts.iter().find(|p| p.status == Status::Fail);
        let (status, counterexample) = match failed {
            Some(p) => (Status::Fail, p.counterexample.clone()),
            None if parts.iter().any(|p| p.status == Status::Pass) => (Status::Pass, None),
            None => (Status::Skipped(String::from("every part was skipped")), None),
        };
        CheckReport { name: name.into(), n_range, status, counterexample, parts }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Looks up a part by name, searching depth-first.
    pub fn part(&self, name: &str) -> Option<&CheckReport> {
        self.parts.iter().find_map(|p| if p.name == name { Some(p) } else { p.part(name) })
    }
}
