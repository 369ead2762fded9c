//! The report every command produces, rendered as text or JSON.

use std::fmt::Write as _;

use serde::Serialize;
use superlie::liesuper::Violation;
use superlie::{Certificate, Error};

use crate::files::InputDigest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// One line of a result table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Row {
    /// A super dimension `(even|odd)`.
    Dim { label: String, even: usize, odd: usize },
    /// Any other value, already formatted.
    Value { label: String, value: String },
    /// A checked statement.
    Check { label: String, passed: bool, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub rows: Vec<Row>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section { title: title.into(), rows: Vec::new() }
    }

    pub fn dim(&mut self, label: impl Into<String>, d: (usize, usize)) -> &mut Self {
        self.rows.push(Row::Dim { label: label.into(), even: d.0, odd: d.1 });
        self
    }

    pub fn value(&mut self, label: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push(Row::Value { label: label.into(), value: value.to_string() });
        self
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl ToString) -> &mut Self {
        self.rows.push(Row::Check { label: label.into(), passed, detail: detail.to_string() });
        self
    }

    /// A certificate as a check row, followed by its stored witnesses.
    pub fn certificate(&mut self, label: impl Into<String>, c: &Certificate) -> &mut Self {
        let label = label.into();
        self.check(label.clone(), c.is_certified(), c);
        for v in &c.violations {
            self.witness(&label, v);
        }
        self
    }

    pub fn witness(&mut self, label: &str, v: &Violation) -> &mut Self {
        self.value(format!("{label} witness"), v)
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| !matches!(r, Row::Check { passed: false, .. }))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub summary: String,
    pub results: Vec<Section>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub certified: bool,
    pub exit_code: i32,
}

impl Report {
    /// Certified iff every check row in every section passed.
    pub fn finish(
        command: &str,
        args: Vec<String>,
        inputs: Vec<InputDigest>,
        summary: String,
        results: Vec<Section>,
    ) -> Self {
        let certified = results.iter().all(Section::all_passed);
        Report {
            command: command.into(),
            args,
            inputs,
            summary,
            results,
            error: None,
            certified,
            exit_code: if certified { EXIT_OK } else { EXIT_FAILURE },
        }
    }

    pub fn failed(command: &str, args: Vec<String>, inputs: Vec<InputDigest>, e: &Error) -> Self {
        let exit_code = if e.is_input_error() { EXIT_INPUT } else { EXIT_FAILURE };
        Report {
            command: command.into(),
            args,
            inputs,
            summary: if exit_code == EXIT_INPUT { "input error".into() } else { "failed".into() },
            results: Vec::new(),
            error: Some(e.to_string()),
            certified: false,
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.summary);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        for s in &self.results {
            let _ = writeln!(out, "\n{}", s.title);
            let width = s.rows.iter().map(|r| label(r).chars().count()).max().unwrap_or(0);
            for r in &s.rows {
                let pad = width - label(r).chars().count();
                let body = match r {
                    Row::Dim { even, odd, .. } => format!("({even}|{odd})"),
                    Row::Value { value, .. } => value.clone(),
                    Row::Check { passed, detail, .. } => {
                        format!("{} {detail}", if *passed { "pass" } else { "FAIL" })
                    }
                };
                let _ = writeln!(out, "  {}{}  {body}", label(r), " ".repeat(pad));
            }
        }
        out
    }
}

fn label(r: &Row) -> &str {
    match r {
        Row::Dim { label, .. } | Row::Value { label, .. } | Row::Check { label, .. } => label,
    }
}

pub fn sdim(d: (usize, usize)) -> String {
    format!("({}|{})", d.0, d.1)
}
