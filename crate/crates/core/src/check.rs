//! Pass/fail accounting shared by the law checkers.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub detail: String,
}

/// Counts evaluated law instances and keeps the first violation of each law.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one evaluation of `law`; `detail` is only built on failure.
    pub fn check(&mut self, law: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && !self.violations.iter().any(|v| v.law == law) {
            self.violations.push(Violation {
                law: law.to_string(),
                detail: detail(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        for v in other.violations {
            if !self.violations.iter().any(|w| w.law == v.law) {
                self.violations.push(v);
            }
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_first_violation_per_law() {
        let mut r = CheckReport::new();
        r.check("a", true, || unreachable!());
        r.check("a", false, || "first".into());
        r.check("a", false, || "second".into());
        r.check("b", false, || "other".into());
        assert_eq!(r.checked, 4);
        assert_eq!(r.violations.len(), 2);
        assert_eq!(r.first().unwrap().detail, "first");
        assert!(r.fails("b") && !r.passed());
    }
}
