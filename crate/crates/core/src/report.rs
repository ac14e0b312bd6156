//! Deterministic machine-readable report format: a versioned header line
//! followed by line-delimited `key=value` records. Output is byte-identical
//! across runs for the same input.

use std::fmt::Write;

use crate::subset::ElemSet;

pub const MACHINE_HEADER: &str = "ringcover-report/1";

/// Line-delimited key/value report builder.
#[derive(Default)]
pub struct Report {
    fields: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        debug_assert!(
            key.chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '-'),
            "report keys are dotted identifiers"
        );
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push_set(&mut self, key: &str, set: &ElemSet) -> &mut Self {
        self.push(key, format_set(set))
    }

    pub fn machine(&self) -> String {
        let mut out = String::from(MACHINE_HEADER);
        out.push('\n');
        for (k, v) in &self.fields {
            debug_assert!(!v.contains('\n'));
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    pub fn text(&self) -> String {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k:width$}  {v}");
        }
        out
    }
}

/// Canonical rendering of an element set: comma-separated sorted indices in
/// brackets.
pub fn format_set(set: &ElemSet) -> String {
    let mut out = String::from("[");
    for (i, x) in set.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
    out
}
