//! Column-oriented table rendering for the data subcommands.
//!
//! CSV uses Rust's shortest round-trip float formatting (17 significant
//! digits at most), LF line endings, and no trailing delimiter, so output
//! bytes are identical across runs and platforms. JSON carries the same
//! columns under `rows` plus a `meta` object with the invocation
//! parameters and crate version.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

/// One named output column; integer columns render without a decimal
/// point.
pub enum Column {
    Int {
        name: &'static str,
        values: Vec<u64>,
    },
    Num {
        name: &'static str,
        values: Vec<f64>,
    },
}

impl Column {
    fn name(&self) -> &'static str {
        match self {
            Column::Int { name, .. } => name,
            Column::Num { name, .. } => name,
        }
    }

    fn len(&self) -> usize {
        match self {
            Column::Int { values, .. } => values.len(),
            Column::Num { values, .. } => values.len(),
        }
    }

    fn csv_cell(&self, row: usize) -> String {
        match self {
            Column::Int { values, .. } => values[row].to_string(),
            Column::Num { values, .. } => values[row].to_string(),
        }
    }

    fn json_values(&self) -> serde_json::Value {
        match self {
            Column::Int { values, .. } => serde_json::json!(values),
            Column::Num { values, .. } => serde_json::json!(values),
        }
    }
}

/// Equal-length columns in emission order.
pub struct Table {
    columns: Vec<Column>,
}

impl Table {
    pub fn new(columns: Vec<Column>) -> Self {
        let rows = columns.first().map_or(0, Column::len);
        assert!(
            columns.iter().all(|c| c.len() == rows),
            "all table columns must have equal length"
        );
        Self { columns }
    }

    pub fn to_csv(&self) -> String {
        let header: Vec<&str> = self.columns.iter().map(|c| c.name()).collect();
        let mut out = header.join(",");
        out.push('\n');
        let rows = self.columns.first().map_or(0, Column::len);
        for row in 0..rows {
            let cells: Vec<String> = self.columns.iter().map(|c| c.csv_cell(row)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Single JSON object `{"meta": {parameters, version}, "rows": {...}}`
    /// holding the same values as the CSV.
    pub fn to_json(&self, parameters: serde_json::Value) -> String {
        let mut rows = serde_json::Map::new();
        for column in &self.columns {
            rows.insert(column.name().to_string(), column.json_values());
        }
        let document = serde_json::json!({
            "meta": {
                "parameters": parameters,
                "version": env!("CARGO_PKG_VERSION"),
            },
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&document).expect("table serializes");
        text.push('\n');
        text
    }
}

/// Writes rendered text to the given path, or to stdout when absent.
pub fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let table = Table::new(vec![
            Column::Int {
                name: "level",
                values: vec![0, 1],
            },
            Column::Num {
                name: "energy",
                values: vec![-2.0 * 3.0_f64.sqrt(), 0.25],
            },
        ]);
        assert_eq!(
            table.to_csv(),
            "level,energy\n0,-3.4641016151377544\n1,0.25\n"
        );
    }

    #[test]
    fn json_round_trips_csv_values() {
        let table = Table::new(vec![Column::Num {
            name: "x",
            values: vec![0.1, 2.0 / 3.0],
        }]);
        let parsed: serde_json::Value =
            serde_json::from_str(&table.to_json(serde_json::json!({"j": 1.0}))).unwrap();
        assert_eq!(parsed["meta"]["parameters"]["j"], 1.0);
        assert_eq!(parsed["rows"]["x"][0], 0.1);
        assert_eq!(parsed["rows"]["x"][1], 2.0 / 3.0);
        assert!(parsed["meta"]["version"].is_string());
    }

    #[test]
    #[should_panic(expected = "equal length")]
    fn ragged_columns_are_rejected() {
        let _ = Table::new(vec![
            Column::Num {
                name: "a",
                values: vec![1.0],
            },
            Column::Num {
                name: "b",
                values: vec![],
            },
        ]);
    }
}
