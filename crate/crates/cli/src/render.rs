use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;

/// A record that renders as one table row.
pub trait Row: Serialize {
    fn headers() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

pub fn render<R: Row>(rows: &[R], format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(text_table(R::headers(), rows.iter().map(Row::cells))),
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(R::headers())?;
            for r in rows {
                w.write_record(r.cells())?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is built from UTF-8 cells"))
        }
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(zkgenus_core::Error::from)?;
    s.push('\n');
    Ok(s)
}

/// Right-aligned columns separated by two spaces.
pub fn text_table(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let rows: Vec<Vec<String>> = rows.collect();
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.zip(&width).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let pad = w - c.chars().count();
            s.extend(std::iter::repeat_n(' ', pad));
            s.push_str(c);
        }
        s.push('\n');
        s
    };
    let mut out = line(&mut headers.iter().copied());
    for r in &rows {
        out.push_str(&line(&mut r.iter().map(String::as_str)));
    }
    out
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn verdict(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}
