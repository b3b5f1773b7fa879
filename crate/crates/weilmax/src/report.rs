//! Record-set rendering: one table model, three encodings.
//!
//! Commands build [`Table`] values; json is the machine-readable encoding
//! and md/csv are pure reformattings of the same rows.

use crate::config::OutputFormat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Table {
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Md => self.render_md(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_md(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:w$}", c, w = widths[i]))
                .collect();
            format!("| {} |", padded.join(" | "))
        };
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&format!("### {}\n\n", self.title));
        }
        out.push_str(&line(&self.columns));
        out.push('\n');
        let dashes: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&format!("| {} |\n", dashes.join(" | ")));
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let escape = |cell: &str| {
            if cell.contains([',', '"', '\n']) {
                format!("\"{}\"", cell.replace('"', "\"\""))
            } else {
                cell.to_string()
            }
        };
        let mut out = String::new();
        out.push_str(
            &self
                .columns
                .iter()
                .map(|c| escape(c))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(|c| escape(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.clone(), serde_json::Value::String(v.clone())))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "title": self.title, "rows": rows });
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }
}

/// Renders several tables with blank-line separators (md/csv) or as a JSON
/// array of table documents.
pub fn render_all(tables: &[Table], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let docs: Vec<serde_json::Value> = tables
                .iter()
                .map(|t| {
                    serde_json::from_str(&t.render_json()).expect("own json parses")
                })
                .collect();
            serde_json::to_string_pretty(&docs).expect("tables serialize")
        }
        _ => tables
            .iter()
            .map(|t| t.render(format))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("sample", &["q", "polynomial"]);
        t.push(vec!["4".into(), "t^2+3t+4".into()]);
        t.push(vec!["9,16".into(), "has \"quotes\"".into()]);
        t
    }

    #[test]
    fn md_is_aligned() {
        let md = sample().render(OutputFormat::Md);
        assert!(md.starts_with("### sample"));
        assert!(md.contains("| q    | polynomial"));
        assert!(md.contains("| 4    | t^2+3t+4"));
    }

    #[test]
    fn csv_escapes_delimiters_and_quotes() {
        let csv = sample().render(OutputFormat::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("q,polynomial"));
        assert_eq!(lines.next(), Some("4,t^2+3t+4"));
        assert_eq!(lines.next(), Some("\"9,16\",\"has \"\"quotes\"\"\""));
    }

    #[test]
    fn json_round_trips_rows() {
        let json = sample().render(OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["title"], "sample");
        assert_eq!(v["rows"][0]["q"], "4");
        assert_eq!(v["rows"][1]["polynomial"], "has \"quotes\"");
    }

    #[test]
    fn row_width_is_enforced() {
        let mut t = Table::new("x", &["a", "b"]);
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
            t.push(vec!["only one".into()])
        }));
        assert!(result.is_err());
    }
}
