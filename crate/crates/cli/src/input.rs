//! CSV ingestion: rows are samples, columns are variables, with an optional
//! header row.

use std::fs::File;
use std::path::Path;

use csv::{ReaderBuilder, Trim};
use fdrlab::Matrix;

use crate::Failure;

fn is_number(cell: &str) -> bool {
    cell.parse::<f64>().is_ok()
}

/// Reads a matrix; a first row with no numeric cell is taken as a header.
pub fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    let shown = path.display();
    let file = File::open(path).map_err(|e| Failure::Input(format!("{shown}: {e}")))?;
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(Trim::All)
        .from_reader(file);

    let mut header_width = None;
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Failure::Input(format!("{shown}: {e}")))?;
        let line = record.position().map_or(k as u64 + 1, |p| p.line());
        if k == 0 && !record.iter().any(is_number) {
            header_width = Some(record.len());
            continue;
        }
        let expected = header_width.or(if columns.is_empty() { None } else { Some(columns.len()) });
        if let Some(expected) = expected {
            if record.len() != expected {
                return Err(Failure::Input(format!(
                    "{shown}: line {line}: expected {expected} fields, found {}",
                    record.len()
                )));
            }
        }
        if columns.is_empty() {
            columns = vec![Vec::new(); record.len()];
        }
        for (j, cell) in record.iter().enumerate() {
            let value: f64 = cell.parse().map_err(|_| {
                Failure::Input(format!("{shown}: line {line}, column {}: cannot read '{cell}' as a number", j + 1))
            })?;
            if !value.is_finite() {
                return Err(Failure::Input(format!(
                    "{shown}: line {line}, column {}: non-finite value '{cell}'",
                    j + 1
                )));
            }
            columns[j].push(value);
        }
    }
    if columns.is_empty() || columns[0].is_empty() {
        return Err(Failure::Input(format!("{shown}: no data rows")));
    }
    Matrix::from_columns(columns).map_err(Failure::from_lib)
}
