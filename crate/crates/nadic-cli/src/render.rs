//! Output assembly: every subcommand produces a [`Report`], rendered as
//! human-readable text, CSV, or JSON with the fixed field set
//! `{command, inputs, result, exact, approx}`.

use serde_json::{json, Map, Value};

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Vec<(String, String)>,
    pub result: String,
    /// Exact values (rationals as `p/q`, integers verbatim).
    pub exact: Vec<(String, String)>,
    /// Display-only decimal approximations, aligned with `exact` keys where
    /// a decimal makes sense.
    pub approx: Vec<(String, String)>,
    pub table: Option<Table>,
}

impl Report {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.result);
        out.push('\n');
        for (key, value) in &self.exact {
            let approx = self
                .approx
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str());
            match approx {
                Some(a) if a != value => out.push_str(&format!("{key} = {value} (~ {a})\n")),
                _ => out.push_str(&format!("{key} = {value}\n")),
            }
        }
        if let Some(table) = &self.table {
            out.push('\n');
            let mut widths: Vec<usize> = table.columns.iter().map(|c| c.len()).collect();
            for row in &table.rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let header: Vec<String> = table
                .columns
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            out.push_str(&header.join("  "));
            out.push('\n');
            for row in &table.rows {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.table {
            Some(table) => {
                out.push_str(&table.columns.join(","));
                out.push('\n');
                for row in &table.rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            None => {
                let keys: Vec<&str> = self.exact.iter().map(|(k, _)| k.as_str()).collect();
                let values: Vec<&str> = self.exact.iter().map(|(_, v)| v.as_str()).collect();
                out.push_str(&keys.join(","));
                out.push('\n');
                out.push_str(&values.join(","));
                out.push('\n');
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let to_map = |pairs: &[(String, String)]| {
            let mut map = Map::new();
            for (k, v) in pairs {
                map.insert(k.clone(), Value::String(v.clone()));
            }
            Value::Object(map)
        };
        let mut value = json!({
            "command": self.command,
            "inputs": to_map(&self.inputs),
            "result": self.result,
            "exact": to_map(&self.exact),
            "approx": to_map(&self.approx),
        });
        if let Some(table) = &self.table {
            value["table"] = json!({
                "columns": table.columns,
                "rows": table.rows,
            });
        }
        let mut rendered = serde_json::to_string_pretty(&value).expect("report serializes");
        rendered.push('\n');
        rendered
    }
}
