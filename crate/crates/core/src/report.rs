//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};
use std::time::Instant;

/// One failed check: a case id plus the expected/actual values as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite over one shape (or a sweep).
/// `failures` empty ⇔ pass; case ids are deterministic.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub shape: String,
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    started: Option<SerdeInstant>,
}

#[derive(Clone, Debug)]
struct SerdeInstant(Instant);

impl VerificationReport {
    pub fn new(suite: &str, shape: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            shape: shape.to_string(),
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            elapsed_ms: 0,
            started: Some(SerdeInstant(Instant::now())),
        }
    }

    /// Records one check of `actual` against `expected`.
    pub fn check(&mut self, case: &str, expected: &str, actual: &str) {
        self.checked += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records an unconditional failure.
    pub fn fail(&mut self, case: &str, expected: &str, actual: &str) {
        self.checked += 1;
        self.failures.push(Failure {
            case: case.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn skip(&mut self, n: u64) {
        self.skipped += n;
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Stamps the elapsed time and returns the report.
    pub fn finish(mut self) -> Self {
        if let Some(SerdeInstant(t)) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    /// Folds another report into this one (used by sweeps). Case ids are
    /// prefixed with the sub-report's shape.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        for f in other.failures {
            self.failures.push(Failure {
                case: format!("{}: {}", other.shape, f.case),
                ..f
            });
        }
    }
}
