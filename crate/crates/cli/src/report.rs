use serde::Serialize;
use serde_json::Value;

use crate::config::Format;
use crate::registry::Registry;

pub const SCHEMA: &str = "algver/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// Result of one check as produced by a suite, before the anchor is attached.
#[derive(Clone, Debug)]
pub struct Entry {
    pub check: &'static str,
    pub case: String,
    pub status: Status,
    pub witness: Option<String>,
    pub detail: Value,
}

impl Entry {
    pub fn pass(check: &'static str, case: impl Into<String>) -> Self {
        Entry { check, case: case.into(), status: Status::Pass, witness: None, detail: Value::Null }
    }

    /// A failure always carries a witness.
    pub fn fail(check: &'static str, case: impl Into<String>, witness: impl Into<String>) -> Self {
        Entry { check, case: case.into(), status: Status::Fail, witness: Some(witness.into()), detail: Value::Null }
    }

    pub fn skip(check: &'static str, case: impl Into<String>, reason: impl Into<String>) -> Self {
        Entry { check, case: case.into(), status: Status::Skip, witness: Some(reason.into()), detail: Value::Null }
    }

    /// Pass when `ok`, otherwise fail with `witness`.
    pub fn expect(check: &'static str, case: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Entry::pass(check, case)
        } else {
            Entry::fail(check, case, witness())
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub suite: String,
    pub check: String,
    pub case: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunInfo {
    pub suite: String,
    pub field: Option<String>,
    pub trials: Option<u64>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub schema: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub run: Option<RunInfo>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(run: Option<RunInfo>) -> Self {
        Report { summary: Summary::default(), schema: SCHEMA, run, records: Vec::new() }
    }

    /// Appends a suite's entries in order, attaching anchors.
    pub fn extend(&mut self, suite: &str, entries: Vec<Entry>, registry: &Registry) {
        for e in entries {
            match e.status {
                Status::Pass => self.summary.pass += 1,
                Status::Fail => self.summary.fail += 1,
                Status::Skip => self.summary.skip += 1,
            }
            let anchor = registry.anchor(e.check).unwrap_or_else(|| panic!("check id {} is not registered", e.check));
            self.records.push(Record {
                suite: suite.to_string(),
                check: e.check.to_string(),
                case: e.case,
                anchor: anchor.to_string(),
                status: e.status,
                witness: e.witness,
                detail: e.detail,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("{:<4} {} [{}] {}", r.status.as_str().to_uppercase(), r.check, r.case, r.anchor));
            if let (Status::Fail | Status::Skip, Some(w)) = (r.status, &r.witness) {
                out.push_str(&format!(" | witness: {w}"));
            }
            out.push('\n');
        }
        let s = self.summary;
        out.push_str(&format!("summary: {} pass, {} fail, {} skip\n", s.pass, s.fail, s.skip));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_leads_with_zero_summary() {
        let json = serde_json::to_string(&Report::new(None)).unwrap();
        assert!(json.starts_with(r#"{"summary":{"pass":0,"fail":0,"skip":0},"schema":"algver/1""#), "{json}");
    }

    #[test]
    fn failure_keeps_witness_verbatim() {
        let reg = Registry::parse("x.y = anchor").unwrap();
        let mut r = Report::new(None);
        r.extend("x", vec![Entry::fail("x.y", "case", "(1, 2, 3)")], &reg);
        assert!(r.emit(Format::Json).contains("\"witness\": \"(1, 2, 3)\""));
        let text = r.emit(Format::Text);
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("FAIL x.y [case] anchor | witness: (1, 2, 3)"));
    }
}
