// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! CSV and JSON rendering of command output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use super::config::Format;
use crate::error::{Error, Result};

/// Nine significant digits in scientific notation.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.8e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table { name, columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| fmt_num(x)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(c, &x)| (c.to_string(), Value::from(x))).collect();
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    /// The first table is the primary one; scalars trail it in CSV.
    Tables { tables: Vec<Table>, scalars: Vec<(&'static str, f64)> },
    /// Named quantities, one per line.
    Pairs(Vec<(&'static str, f64)>),
}

/// A rendered file: `None` path means stdout.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub path: Option<PathBuf>,
    pub text: String,
}

fn side_path(out: &Path, name: &str) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let file = match out.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_{name}.{ext}"),
        None => format!("{stem}_{name}"),
    };
    out.with_file_name(file)
}

impl Report {
    pub fn render(&self, command: &str, seed: u64, format: Format, out: Option<&Path>) -> Vec<Rendered> {
        match format {
            Format::Json => {
                let mut root = Map::new();
                root.insert("command".into(), json!(command));
                root.insert("seed".into(), json!(seed));
                match self {
                    Report::Tables { tables, scalars } => {
                        for t in tables {
                            root.insert(t.name.into(), t.to_json());
                        }
                        for (k, v) in scalars {
                            root.insert((*k).into(), Value::from(*v));
                        }
                    }
                    Report::Pairs(pairs) => {
                        let obj: Map<String, Value> =
                            pairs.iter().map(|(k, v)| ((*k).to_string(), Value::from(*v))).collect();
                        root.insert("values".into(), Value::Object(obj));
                    }
                }
                let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("JSON value");
                text.push('\n');
                vec![Rendered { path: out.map(Path::to_path_buf), text }]
            }
            Format::Csv => match self {
                Report::Pairs(pairs) => {
                    let mut text = String::from("quantity,value\n");
                    for (k, v) in pairs {
                        let _ = writeln!(text, "{k},{}", fmt_num(*v));
                    }
                    vec![Rendered { path: out.map(Path::to_path_buf), text }]
                }
                Report::Tables { tables, scalars } => {
                    let mut main = tables[0].to_csv();
                    for (k, v) in scalars {
                        let _ = writeln!(main, "# {k} = {}", fmt_num(*v));
                    }
                    match out {
                        Some(path) => {
                            let mut files = vec![Rendered { path: Some(path.to_path_buf()), text: main }];
                            for t in &tables[1..] {
                                files.push(Rendered { path: Some(side_path(path, t.name)), text: t.to_csv() });
                            }
                            files
                        }
                        None => {
                            for t in &tables[1..] {
                                main.push('\n');
                                main.push_str(&t.to_csv());
                            }
                            vec![Rendered { path: None, text: main }]
                        }
                    }
                }
            },
        }
    }
}

/// Writes rendered output; stdout text is returned to the caller.
pub fn emit(files: &[Rendered], stdout: &mut dyn std::io::Write) -> Result<()> {
    for f in files {
        match &f.path {
            Some(path) => {
                std::fs::write(path, &f.text).map_err(|source| Error::Io { path: path.clone(), source })?;
            }
            None => stdout
                .write_all(f.text.as_bytes())
                .map_err(|source| Error::Io { path: PathBuf::from("<stdout>"), source })?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut a = Table::new("surface", &["alpha", "c"]);
        a.push(vec![1.0, 0.5]);
        let mut b = Table::new("tau0", &["alpha", "tau0"]);
        b.push(vec![1.0, 2.0]);
        Report::Tables { tables: vec![a, b], scalars: vec![("k", 3.0)] }
    }

    #[test]
    fn csv_number_format() {
        assert_eq!(fmt_num(0.0018709365986606441), "1.87093660e-3");
        assert_eq!(fmt_num(1.0), "1.00000000e0");
        assert_eq!(fmt_num(f64::INFINITY), "inf");
    }

    #[test]
    fn csv_to_stdout_stacks_tables() {
        let files = sample().render("surface", 0, Format::Csv, None);
        assert_eq!(files.len(), 1);
        assert_eq!(
            files[0].text,
            "alpha,c\n1.00000000e0,5.00000000e-1\n# k = 3.00000000e0\n\nalpha,tau0\n1.00000000e0,2.00000000e0\n"
        );
    }

    #[test]
    fn csv_to_file_splits_tables() {
        let files = sample().render("surface", 0, Format::Csv, Some(Path::new("/tmp/x/run.csv")));
        assert_eq!(files[1].path.as_deref(), Some(Path::new("/tmp/x/run_tau0.csv")));
        assert_eq!(side_path(Path::new("plain"), "tau0"), PathBuf::from("plain_tau0"));
    }

    #[test]
    fn json_is_one_document() {
        let files = sample().render("surface", 7, Format::Json, None);
        let v: Value = serde_json::from_str(&files[0].text).unwrap();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["tau0"][0]["tau0"], 2.0);
        assert_eq!(v["k"], 3.0);
    }
}
