//! Key/value reports, printed either aligned for people or as `key=value` lines.

use std::fmt::Display;

#[derive(Default)]
pub struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    pub fn add(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.rows.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self, kv: bool) -> String {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        self.rows
            .iter()
            .map(|(k, v)| if kv { format!("{k}={v}\n") } else { format!("{k:<width$}  {v}\n") })
            .collect()
    }
}

pub fn ratio(bits: usize, n: usize) -> String {
    format!("{:.4}", bits as f64 / n as f64)
}
