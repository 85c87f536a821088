use std::io::Write;
use std::process::ExitCode;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command's result in every format; text defaults to an aligned table.
pub struct Output {
    json: Value,
    header: Vec<String>,
    records: Vec<Vec<String>>,
    text: Option<String>,
}

pub fn columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

impl Output {
    pub fn new(json: Value, header: Vec<String>, records: Vec<Vec<String>>) -> Self {
        Self { json, header, records, text: None }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn print(&self, format: Format) {
        let rendered = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
            Format::Csv => self.csv(),
            Format::Text => match &self.text {
                Some(t) => format!("{t}\n"),
                None => self.table(),
            },
        };
        let mut stdout = std::io::stdout().lock();
        // a closed pipe is not worth a panic
        let _ = stdout.write_all(rendered.as_bytes());
    }

    fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.records {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 input")
    }

    fn table(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(String::len).collect();
        for r in &self.records {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.header);
        for r in &self.records {
            out.push_str(&line(r));
        }
        out
    }
}

pub enum Failure {
    /// Exit code 2.
    Usage(String),
    /// Exit code 3.
    Internal(String),
}

impl From<packed_core::Error> for Failure {
    fn from(e: packed_core::Error) -> Self {
        use packed_core::Error::*;
        match e {
            InvalidParameters(_) | InvalidCode(..) | ArityMismatch { .. } | DuplicatePoint(_) | Malformed(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

pub fn fail(f: &Failure) -> ExitCode {
    let (msg, code) = match f {
        Failure::Usage(m) => (m, 2),
        Failure::Internal(m) => (m, 3),
    };
    eprintln!("error: {msg}");
    ExitCode::from(code)
}
