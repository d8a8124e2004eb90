//! Structured results of one verification check.
//!
//! Reports serialize to JSON with the residual rendered at 17 significant
//! digits, so a (suite, backend, samples, seed, tolerance) tuple produces
//! byte-identical output on every run.

use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    #[serde(serialize_with = "seventeen_digits")]
    pub residual: f64,
    pub samples: u64,
    pub seed: u64,
    pub details: String,
}

impl CheckReport {
    pub fn new(
        name: impl Into<String>,
        pass: bool,
        residual: f64,
        samples: u64,
        seed: u64,
        details: impl Into<String>,
    ) -> Self {
        CheckReport {
            name: name.into(),
            status: if pass {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            residual,
            samples,
            seed,
            details: details.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// The one-line console rendering: status, name, residual, notes.
    pub fn render_line(&self) -> String {
        let status = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
        };
        format!(
            "{status} {name} residual={residual:.3e} ({details})",
            name = self.name,
            residual = self.residual,
            details = self.details
        )
    }
}

fn seventeen_digits<S: Serializer>(value: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    let rendered = format!("{value:.16e}");
    let number = serde_json::Number::from_str(&rendered)
        .expect("a formatted finite f64 is a valid JSON number");
    number.serialize(serializer)
}

/// Render a full run as a JSON array, in execution order.
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trips_and_pins_the_residual_rendering() {
        let report = CheckReport::new("metric/diag", true, 0.0, 1, 42, "exact");
        let json = reports_to_json(std::slice::from_ref(&report));
        assert!(json.contains("\"residual\": 0.0000000000000000e+0"));
        assert!(json.contains("\"status\": \"pass\""));
        let back: Vec<CheckReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back[0].name, report.name);
        assert_eq!(back[0].residual, 0.0);
        let tiny = CheckReport::new("x", false, 1.5430806348152437, 2, 7, "boost");
        let json = reports_to_json(&[tiny]);
        assert!(json.contains("1.5430806348152437e+0"), "{json}");
    }

    #[test]
    fn identical_reports_serialize_identically() {
        let mk = || {
            vec![
                CheckReport::new("a", true, 1.0 / 3.0, 100, 42, "first"),
                CheckReport::new("b", false, 2.5e-11, 50, 42, "second"),
            ]
        };
        assert_eq!(reports_to_json(&mk()), reports_to_json(&mk()));
    }

    #[test]
    fn render_line_is_single_line() {
        let r = CheckReport::new("cover/roundtrip", true, 3.2e-12, 100, 42, "float");
        let line = r.render_line();
        assert!(line.starts_with("PASS cover/roundtrip"));
        assert!(!line.contains('\n'));
    }
}
