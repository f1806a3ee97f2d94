//! Deterministic CSV and JSON rendering of flat records.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    /// A number already formatted for CSV, with its JSON value.
    Fixed(String, f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Null,
}

pub type Record = Vec<(&'static str, Cell)>;

pub struct OutputSpec {
    pub format: Format,
    pub path: Option<PathBuf>,
    pub precision: usize,
}

/// Rounds to `digits` significant digits.
pub fn round_sig(v: f64, digits: usize) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{:.*e}", digits - 1, v).parse().expect("formatted float parses")
}

/// Shortest representation that round-trips the value.
fn shortest(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = serde_json::to_string(&v).expect("finite float serialises");
    s.strip_suffix(".0").map(str::to_owned).unwrap_or(s)
}

/// `digits` significant digits, fixed-point down to 1e−5 and scientific below.
pub fn printed(v: f64, digits: usize) -> Cell {
    let rounded = round_sig(v, digits);
    let exponent = rounded.abs().log10().floor() as i32;
    let text = if rounded != 0.0 && exponent < -5 {
        format!("{:.*e}", digits - 1, rounded)
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        format!("{rounded:.decimals$}")
    };
    Cell::Fixed(text, rounded)
}

impl OutputSpec {
    fn csv_cell(&self, cell: &Cell) -> String {
        match cell {
            Cell::Num(v) => shortest(round_sig(*v, self.precision)),
            Cell::Fixed(text, _) => text.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn json_cell(&self, cell: &Cell) -> Value {
        let number = |v: f64| Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null);
        match cell {
            Cell::Num(v) => number(round_sig(*v, self.precision)),
            Cell::Fixed(_, v) => number(*v),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Null => Value::Null,
        }
    }

    pub fn render(&self, records: &[Record], single: bool) -> io::Result<String> {
        match self.format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                if let Some(first) = records.first() {
                    w.write_record(first.iter().map(|(k, _)| *k))?;
                }
                for record in records {
                    w.write_record(record.iter().map(|(_, c)| self.csv_cell(c)))?;
                }
                let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
            }
            Format::Json => {
                let objects: Vec<Value> = records
                    .iter()
                    .map(|r| {
                        let map: Map<String, Value> =
                            r.iter().map(|(k, c)| (k.to_string(), self.json_cell(c))).collect();
                        Value::Object(map)
                    })
                    .collect();
                let value = match (single, objects.len()) {
                    (true, 1) => objects.into_iter().next().expect("one record"),
                    _ => Value::Array(objects),
                };
                let mut text = serde_json::to_string_pretty(&value).map_err(io::Error::other)?;
                text.push('\n');
                Ok(text)
            }
        }
    }

    pub fn emit(&self, records: &[Record], single: bool) -> io::Result<()> {
        let text = self.render(records, single)?;
        match &self.path {
            Some(path) => {
                let mut f = BufWriter::new(File::create(path)?);
                f.write_all(text.as_bytes())?;
                f.flush()
            }
            None => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(text.as_bytes())?;
                lock.flush()
            }
        }
    }
}
