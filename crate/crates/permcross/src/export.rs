//! Text renderings of coefficient triangles.

use std::fmt::Write;
use std::str::FromStr;

use permcross_core::Triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleFormat {
    Text,
    Csv,
    Json,
    /// OEIS b-file: `index value` per line, rows read left to right.
    Bfile {
        offset: i64,
    },
}

impl FromStr for TriangleFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(TriangleFormat::Text),
            "csv" => Ok(TriangleFormat::Csv),
            "json" => Ok(TriangleFormat::Json),
            "bfile" => Ok(TriangleFormat::Bfile { offset: 1 }),
            other => Err(format!("unknown triangle format `{other}` (expected text, csv, json or bfile)")),
        }
    }
}

pub fn render(t: &Triangle, format: TriangleFormat) -> String {
    match format {
        TriangleFormat::Text => text(t),
        TriangleFormat::Csv => csv(t),
        TriangleFormat::Json => json(t),
        TriangleFormat::Bfile { offset } => bfile(t, offset),
    }
}

pub fn csv(t: &Triangle) -> String {
    let mut out = String::new();
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn json(t: &Triangle) -> String {
    let mut out = serde_json::to_string(&t.rows).expect("integer rows serialize");
    out.push('\n');
    out
}

pub fn bfile(t: &Triangle, offset: i64) -> String {
    let mut out = String::new();
    let values = t.rows.iter().flatten();
    for (idx, v) in (offset..).zip(values) {
        writeln!(out, "{idx} {v}").expect("writing to a String");
    }
    out
}

pub fn text(t: &Triangle) -> String {
    let mut out = String::new();
    for (i, row) in t.rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(out, "{:>3}: {}", t.n_min + i, cells.join(" ")).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Triangle {
        Triangle { n_min: 1, rows: vec![vec![1], vec![1, 1]] }
    }

    #[test]
    fn formats() {
        assert_eq!(csv(&small()), "1\n1,1\n");
        assert_eq!(bfile(&small(), 1), "1 1\n2 1\n3 1\n");
        assert_eq!(bfile(&small(), 0), "0 1\n1 1\n2 1\n");
        assert_eq!(json(&small()), "[[1],[1,1]]\n");
        assert_eq!(text(&small()), "  1: 1\n  2: 1 1\n");
    }

    #[test]
    fn format_names() {
        assert_eq!("bfile".parse(), Ok(TriangleFormat::Bfile { offset: 1 }));
        assert!("xml".parse::<TriangleFormat>().is_err());
    }
}
