//! Line-oriented reports with a versioned schema.

use std::fmt::Write as _;

use serde_json::{json, Value};

pub const SCHEMA: &str = "pathspace.report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub check: String,
    pub status: Status,
    pub summary: String,
    pub data: Value,
}

impl Record {
    pub fn new(check: impl Into<String>, status: Status, summary: impl Into<String>, data: Value) -> Record {
        Record { check: check.into(), status, summary: summary.into(), data }
    }

    pub fn verdict(check: impl Into<String>, ok: bool, summary: impl Into<String>, data: Value) -> Record {
        Record::new(check, if ok { Status::Pass } else { Status::Fail }, summary, data)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

pub struct Report {
    pub command: &'static str,
    pub subject: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(command: &'static str, subject: impl Into<String>) -> Report {
        Report { command, subject: subject.into(), records: Vec::new() }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    /// 0 when everything passed, 1 on any failure, 3 when only bounds stood
    /// in the way.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::Inconclusive) > 0 {
            3
        } else {
            0
        }
    }

    /// Records sorted by check id, then a totals line.
    pub fn render(mut self, format: Format) -> String {
        self.records.sort_by(|a, b| a.check.cmp(&b.check));
        let (pass, fail, open) = (self.count(Status::Pass), self.count(Status::Fail), self.count(Status::Inconclusive));
        let mut out = String::new();
        match format {
            Format::Jsonl => {
                for r in &self.records {
                    let line = json!({
                        "schema": SCHEMA,
                        "command": self.command,
                        "subject": self.subject,
                        "check": r.check,
                        "status": r.status.as_str(),
                        "summary": r.summary,
                        "data": r.data,
                    });
                    writeln!(out, "{line}").unwrap();
                }
                let totals = json!({
                    "schema": SCHEMA,
                    "command": self.command,
                    "subject": self.subject,
                    "totals": { "pass": pass, "fail": fail, "inconclusive": open },
                    "exit": self.exit_code(),
                });
                writeln!(out, "{totals}").unwrap();
            }
            Format::Text => {
                writeln!(out, "# {} {} ({SCHEMA})", self.command, self.subject).unwrap();
                for r in &self.records {
                    let tag = r.status.as_str().to_uppercase();
                    let mut lines = r.summary.lines();
                    writeln!(out, "{tag:<12} {}: {}", r.check, lines.next().unwrap_or_default()).unwrap();
                    for rest in lines {
                        writeln!(out, "{:<12}   {rest}", "").unwrap();
                    }
                }
                writeln!(out, "{pass} pass, {fail} fail, {open} inconclusive").unwrap();
            }
        }
        out
    }
}
