/// Outcome of one mathematical check, with human-readable notes on failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            passed: true,
            details: Vec::new(),
        }
    }

    /// Records a failure; a report with any failure is not passed.
    pub fn fail(&mut self, detail: impl Into<String>) {
        self.passed = false;
        self.details.push(detail.into());
    }

    pub fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(detail());
        }
    }
}
