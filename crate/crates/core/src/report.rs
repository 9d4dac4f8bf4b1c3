use serde::{Deserialize, Serialize};

/// Failures kept verbatim in a report; the total is always counted.
const MAX_LISTED_FAILURES: usize = 20;

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skipped: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            skipped: None,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            skipped: Some(reason.into()),
            ..Self::new(name)
        }
    }

    /// Records one check; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        let room = MAX_LISTED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}
