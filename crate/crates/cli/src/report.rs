use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::args::OutputFlags;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Field {
    pub name: String,
    pub value: String,
}

/// What every command prints.
#[derive(Serialize, Debug, Clone)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: Option<String>,
    pub algorithm: String,
    pub seed: Option<u64>,
    pub results: Vec<Field>,
    pub millis: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<serde_json::Value>,
}

impl RunReport {
    pub fn new(command: Vec<String>, algorithm: impl Into<String>) -> Self {
        Self { command, input_digest: None, algorithm: algorithm.into(), seed: None, results: Vec::new(), millis: 0.0, trace: None }
    }

    pub fn push(&mut self, name: impl Into<String>, value: impl ToString) {
        self.results.push(Field { name: name.into(), value: value.to_string() });
    }

    pub fn render(&self, flags: OutputFlags) -> String {
        if flags.json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            s
        } else if flags.csv {
            self.to_csv()
        } else {
            self.to_table()
        }
    }

    fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.join(" "))];
        if let Some(d) = &self.input_digest {
            rows.push(("input".into(), d.clone()));
        }
        rows.push(("algorithm".into(), self.algorithm.clone()));
        if let Some(s) = self.seed {
            rows.push(("seed".into(), s.to_string()));
        }
        rows.extend(self.results.iter().map(|f| (f.name.clone(), f.value.clone())));
        rows.push(("millis".into(), format!("{:.3}", self.millis)));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            writeln!(out, "{k:<width$}  {v}").unwrap();
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut header = vec!["command".to_string(), "input_digest".into(), "algorithm".into(), "seed".into()];
        header.extend(self.results.iter().map(|f| f.name.clone()));
        header.push("millis".into());
        let mut row = vec![
            self.command.join(" "),
            self.input_digest.clone().unwrap_or_default(),
            self.algorithm.clone(),
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
        ];
        row.extend(self.results.iter().map(|f| f.value.clone()));
        row.push(format!("{:.3}", self.millis));
        format!("{}\n{}\n", csv_line(&header), csv_line(&row))
    }
}

pub fn csv_line(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
