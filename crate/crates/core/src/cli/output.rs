use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::Result;

/// One CSV cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(u64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            // 17 significant digits round-trip every f64
            Cell::Real(v) => format!("{v:.16e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

/// A header plus rows, rendered as comma-separated text.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(Cell::render).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    /// Array of objects keyed by the header, keys in column order.
    pub fn to_json(&self) -> Result<String> {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> = self
                .header
                .iter()
                .zip(row)
                .map(|(k, v)| {
                    let value = match v {
                        Cell::Real(x) => serde_json::Number::from_f64(*x)
                            .map(serde_json::Value::Number)
                            .unwrap_or(serde_json::Value::Null),
                        Cell::Int(i) => (*i).into(),
                        Cell::Text(s) => s.clone().into(),
                        Cell::Bool(b) => (*b).into(),
                    };
                    format!("\"{k}\": {value}")
                })
                .collect();
            let sep = if i + 1 == self.rows.len() { "" } else { "," };
            out.push_str(&format!("  {{{}}}{sep}\n", fields.join(", ")));
        }
        out.push_str("]\n");
        Ok(out)
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| crate::Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Writes via a temporary sibling file and a rename, so readers never see
/// a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = path.with_file_name(format!(".{name}.tmp-{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        e.into()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_full_precision() {
        let mut t = Table::new(vec!["x", "n", "label"]);
        let x = 0.1 + 0.2;
        t.push(vec![Cell::Real(x), Cell::Int(3), Cell::Text("real".into())]);
        let csv = t.to_csv();
        let line = csv.lines().nth(1).unwrap();
        let back: f64 = line.split(',').next().unwrap().parse().unwrap();
        assert_eq!(back, x);
        let json: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(json[0]["x"].as_f64().unwrap(), x);
        assert_eq!(json[0]["label"], "real");
    }

    #[test]
    fn atomic_write_replaces_content() {
        let dir = std::env::temp_dir().join(format!("relosc-out-{}", std::process::id()));
        let path = dir.join("sub").join("a.csv");
        write_atomic(&path, "one\n").unwrap();
        write_atomic(&path, "two\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "two\n");
        assert_eq!(fs::read_dir(path.parent().unwrap()).unwrap().count(), 1);
        fs::remove_dir_all(dir).ok();
    }
}
