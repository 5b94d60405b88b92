//! Reports: an ordered list of checks plus descriptive properties and tables,
//! rendered as text or as one JSON document.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "permgrp";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Anchor for checks that exercise the tool itself rather than a result.
pub const PLUMBING: &str = "plumbing";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// The result being checked, or [`PLUMBING`].
    pub anchor: String,
    pub verdict: Verdict,
    pub evidence: Value,
    /// Only filled in with `--timings`, so default output stays reproducible.
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Property {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub status: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub properties: Vec<Property>,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            tool: TOOL,
            version: VERSION,
            command: command.into(),
            properties: Vec::new(),
            tables: Vec::new(),
            checks: Vec::new(),
            summary: Summary { passed: 0, failed: 0, skipped: 0, status: Verdict::Pass },
        }
    }

    pub fn property(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.properties.push(Property { name: name.into(), value: value.into() });
    }

    pub fn table(&mut self, table: Table) {
        self.tables.push(table);
    }

    pub fn push(&mut self, check: Check) {
        match check.verdict {
            Verdict::Pass => self.summary.passed += 1,
            Verdict::Fail => {
                self.summary.failed += 1;
                self.summary.status = Verdict::Fail;
            }
            Verdict::Skipped => self.summary.skipped += 1,
        }
        self.checks.push(check);
    }

    pub fn failed(&self) -> bool {
        self.summary.failed > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{TOOL} {VERSION}: {}", self.command);
        for p in &self.properties {
            let _ = writeln!(out, "{}: {}", p.name, plain(&p.value));
        }
        for t in &self.tables {
            let _ = writeln!(out, "\n{}", t.title);
            let _ = writeln!(out, "{}", t.columns.join(" | "));
            for row in &t.rows {
                let _ = writeln!(out, "{}", row.join(" | "));
            }
        }
        if !self.properties.is_empty() || !self.tables.is_empty() {
            out.push('\n');
        }
        for c in &self.checks {
            let _ = write!(out, "{} {} [{}]", c.verdict.label(), c.name, c.anchor);
            if let Some(ms) = c.wall_time_ms {
                let _ = write!(out, " ({ms} ms)");
            }
            out.push('\n');
            if !c.evidence.is_null() {
                let _ = writeln!(out, "    {}", c.evidence);
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{}: {} passed, {} failed, {} skipped", s.status.label(), s.passed, s.failed, s.skipped);
        out
    }
}

/// Strings without quotes, everything else as compact JSON.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
