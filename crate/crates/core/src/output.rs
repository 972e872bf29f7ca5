//! Deterministic CSV and JSON serialization of tables.
//!
//! Numbers are written in scientific notation with a fixed number of mantissa
//! digits. JSON carries the same rounded values (re-parsed from the CSV text),
//! so both formats agree to the stated precision.

use serde_json::{Map, Value};

/// Largest supported mantissa precision.
pub const MAX_PRECISION: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

/// Number text with `precision` mantissa digits; zero is always unsigned.
pub fn format_number(v: f64, precision: usize) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.precision$e}")
}

fn rounded(v: f64, precision: usize) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    let r: f64 = format_number(v, precision).parse().expect("formatted float parses");
    Value::from(r)
}

impl Cell {
    fn csv(&self, precision: usize) -> String {
        match self {
            Cell::Num(v) => format_number(*v, precision),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self, precision: usize) -> Value {
        match self {
            Cell::Num(v) => rounded(*v, precision),
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Missing => Value::Null,
        }
    }
}

/// Rows under a fixed header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| c.csv(precision)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON array with one object per row.
    pub fn to_json(&self, precision: usize) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.json(precision)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        pretty(&Value::Array(rows))
    }

    pub fn render(&self, format: OutputFormat, precision: usize) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(precision),
            OutputFormat::Json => self.to_json(precision),
        }
    }
}

/// Ordered key/value record.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record {
    pub fields: Vec<(&'static str, Cell)>,
}

impl Record {
    pub fn push(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.fields.push((key, value.into()));
    }

    /// Two-column `key,value` CSV.
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::from("key,value\n");
        for (k, v) in &self.fields {
            out.push_str(k);
            out.push(',');
            out.push_str(&v.csv(precision));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, precision: usize) -> String {
        let obj: Map<String, Value> = self
            .fields
            .iter()
            .map(|(k, v)| (k.to_string(), v.json(precision)))
            .collect();
        pretty(&Value::Object(obj))
    }

    pub fn render(&self, format: OutputFormat, precision: usize) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(precision),
            OutputFormat::Json => self.to_json(precision),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.75, 12), "7.500000000000e-1");
        assert_eq!(format_number(-0.0, 3), "0.000e0");
        assert_eq!(format_number(9.869604401089358, 6), "9.869604e0");
    }

    #[test]
    fn table_csv_and_json() {
        let mut t = Table::new(vec!["leg", "L", "note"]);
        t.push(vec![Cell::Int(1), Cell::Num(2.0), "x".into()]);
        t.push(vec![Cell::Int(2), Cell::Missing, "y".into()]);
        assert_eq!(t.to_csv(2), "leg,L,note\n1,2.00e0,x\n2,,y\n");
        let v: Value = serde_json::from_str(&t.to_json(2)).unwrap();
        assert_eq!(v[0]["L"], Value::from(2.0));
        assert!(v[1]["L"].is_null());
    }

    #[test]
    fn record_keeps_key_order() {
        let mut r = Record::default();
        r.push("zeta", 1.0);
        r.push("alpha", 2.0);
        let json = r.to_json(3);
        assert!(json.find("zeta").unwrap() < json.find("alpha").unwrap());
        assert_eq!(r.to_csv(1), "key,value\nzeta,1.0e0\nalpha,2.0e0\n");
    }

    proptest! {
        #[test]
        fn csv_and_json_agree(v in -1e6f64..1e6, precision in 1usize..=MAX_PRECISION) {
            let mut r = Record::default();
            r.push("v", v);
            let csv = r.to_csv(precision);
            let from_csv: f64 = csv.lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
            let json: Value = serde_json::from_str(&r.to_json(precision)).unwrap();
            prop_assert_eq!(json["v"].as_f64().unwrap(), from_csv);
            prop_assert!((from_csv - v).abs() <= v.abs() * 10f64.powi(-(precision as i32)));
        }
    }
}
