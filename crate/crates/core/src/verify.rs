//! Verification certificates: named equalities with both sides recorded.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new(title: &str) -> Self {
        Certificate { title: title.to_string(), checks: Vec::new() }
    }

    /// Record `expected == actual`, compared as values and stored as text.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, expected: &T, actual: &T) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed: expected == actual,
        });
    }

    /// Record a check whose computation failed.
    pub fn fail(&mut self, name: impl Into<String>, expected: impl fmt::Display, err: impl fmt::Display) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: format!("error: {err}"),
            passed: false,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Every certificate suite, in a fixed order.
pub fn verify_all() -> Vec<Certificate> {
    vec![
        crate::presentation::verify_confluence(),
        crate::maps::verify_relations_via_eta(),
        crate::maps::verify_rho_presentation(),
        crate::maps::verify_phi_iso(),
        crate::units::verify_units(),
        crate::charnum::verify_characteristic_numbers(),
    ]
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(f, "{} [{status}]", self.title)?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {}: {}", c.name, c.actual)?;
            if !c.passed {
                writeln!(f, "       expected {}", c.expected)?;
            }
        }
        Ok(())
    }
}
