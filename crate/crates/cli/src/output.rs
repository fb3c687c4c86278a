use std::collections::BTreeMap;

use clap::ValueEnum;

use spinfh::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One result in each output form.
pub struct Rendered {
    json: serde_json::Value,
    text: String,
    csv: Option<String>,
}

impl Rendered {
    pub fn new(json: serde_json::Value, text: String) -> Self {
        Rendered { json, text, csv: None }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    /// `None` when the result has no CSV form.
    pub fn format(&self, format: Format) -> Option<String> {
        match format {
            Format::Text => Some(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                Some(s)
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

/// `Σ c_ν x_ν` written as `x_(2,2) - 2x_(4)`, zero as `0`.
pub fn combination(prefix: &str, entries: &BTreeMap<Partition, i64>) -> String {
    let mut s = String::new();
    for (nu, &c) in entries.iter().filter(|(_, &c)| c != 0) {
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("{prefix}_{nu}"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
