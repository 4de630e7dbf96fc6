//! Table renderers. CSV and JSON are exact and machine-parseable; JSON
//! carries values as decimal strings so nothing is rounded on the way out.

use skyscraper_core::SkyTable;

pub fn table_text(table: &SkyTable) -> String {
    let n = table.n();
    let widths: Vec<usize> = (1..=n)
        .map(|b| {
            (1..=n)
                .map(|a| table.get(a, b).to_string().len())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    for a in 1..=n {
        let row: Vec<String> = (1..=n)
            .map(|b| format!("{:>width$}", table.get(a, b), width = widths[b - 1]))
            .collect();
        out.push_str(row.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table_csv(table: &SkyTable) -> String {
    let n = table.n();
    let mut out = String::new();
    for a in 1..=n {
        let row: Vec<String> = (1..=n).map(|b| table.get(a, b).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn table_json(table: &SkyTable) -> String {
    let n = table.n();
    let entries: Vec<Vec<String>> = (1..=n)
        .map(|a| (1..=n).map(|b| table.get(a, b).to_string()).collect())
        .collect();
    let value = serde_json::json!({ "n": n, "entries": entries });
    let mut text = serde_json::to_string_pretty(&value).expect("strings always serialize");
    text.push('\n');
    text
}
