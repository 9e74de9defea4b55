//! Verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::scan::{ScanRecord, ScanSummary};

pub const SCHEMA: &str = "haarlab.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    Pass,
    Fail,
    Unknown,
}

/// One checked claim about one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub group: String,
    pub order: usize,
    #[serde(rename = "S")]
    pub s: String,
    pub check: String,
    pub claim: String,
    pub expected: Value,
    pub computed: Value,
    pub status: RowStatus,
}

impl Row {
    pub fn new(
        group: &str,
        order: usize,
        s: &str,
        check: &str,
        claim: &str,
        expected: Value,
        computed: Value,
    ) -> Self {
        let status = if expected == computed {
            RowStatus::Pass
        } else {
            RowStatus::Fail
        };
        Row {
            group: group.to_string(),
            order,
            s: s.to_string(),
            check: check.to_string(),
            claim: claim.to_string(),
            expected,
            computed,
            status,
        }
    }

    pub fn with_status(mut self, status: RowStatus) -> Self {
        self.status = status;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Totals {
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub target: String,
    pub parameters: Value,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scans: Vec<ScanSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<ScanRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub totals: Totals,
    pub wall_time_s: f64,
    pub version: String,
}

impl VerificationReport {
    pub fn new(target: &str, parameters: Value) -> Self {
        VerificationReport {
            schema: SCHEMA.to_string(),
            target: target.to_string(),
            parameters,
            rows: Vec::new(),
            scans: Vec::new(),
            records: Vec::new(),
            notes: Vec::new(),
            totals: Totals::default(),
            wall_time_s: 0.0,
            version: crate::VERSION.to_string(),
        }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn finish(&mut self, wall_time_s: f64) {
        let count = |s| self.rows.iter().filter(|r| r.status == s).count();
        self.totals = Totals {
            rows: self.rows.len(),
            pass: count(RowStatus::Pass),
            fail: count(RowStatus::Fail),
            unknown: count(RowStatus::Unknown),
        };
        self.wall_time_s = wall_time_s;
    }

    pub fn all_pass(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.status == RowStatus::Pass)
    }

    /// The rows as plain text, one per line.
    pub fn render(&self) -> String {
        let mut out = format!("target {} (tool {})\n", self.target, self.version);
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Pass => "PASS",
                RowStatus::Fail => "FAIL",
                RowStatus::Unknown => "UNKNOWN",
            };
            out.push_str(&format!(
                "{status:7} {} S={} {}: expected {} computed {}\n",
                r.group, r.s, r.check, r.expected, r.computed
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!(
            "{} rows: {} pass, {} fail, {} unknown in {:.2}s\n",
            self.totals.rows,
            self.totals.pass,
            self.totals.fail,
            self.totals.unknown,
            self.wall_time_s
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn totals_and_rendering() {
        let mut r = VerificationReport::new("t", json!({}));
        assert!(!r.all_pass());
        r.push(Row::new("G", 4, "{1}", "x", "c", json!(1), json!(1)));
        r.push(Row::new("G", 4, "{1}", "y", "c", json!(1), json!(2)));
        r.push(
            Row::new("G", 4, "{1}", "z", "c", json!(1), json!(1)).with_status(RowStatus::Unknown),
        );
        r.finish(0.5);
        assert_eq!(
            r.totals,
            Totals {
                rows: 3,
                pass: 1,
                fail: 1,
                unknown: 1
            }
        );
        assert!(!r.all_pass());
        let text = r.render();
        assert!(text.contains("FAIL    G S={1} y: expected 1 computed 2"));
        let back: VerificationReport =
            serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
