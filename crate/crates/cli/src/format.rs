//! Shared text formats: the matrix block format and measure JSON.
//!
//! Matrix block: first line `R <rows> <cols>` or `C <rows> <cols>`, then one
//! line per row with whitespace-separated entries. Complex entries are
//! written `a+bi` / `a-bi` with no internal spaces.

use std::fmt::Write as _;

use coherence_core::mat::{FieldTag, Mat};
use coherence_core::measures::FiniteMeasure;
use coherence_core::scalar::C64;
use serde::Deserialize;

/// A float with 17 significant digits; round-trips f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_entry(field: FieldTag, z: C64) -> String {
    match field {
        FieldTag::Real => fmt_f64(z.re),
        FieldTag::Complex => {
            if z.im < 0.0 {
                format!("{}-{}i", fmt_f64(z.re), fmt_f64(-z.im))
            } else {
                format!("{}+{}i", fmt_f64(z.re), fmt_f64(z.im))
            }
        }
    }
}

pub fn write_matrix(m: &Mat) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", m.field.symbol(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| fmt_entry(m.field, m.get(i, j))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

fn parse_complex(tok: &str) -> Result<C64, String> {
    if let Some(body) = tok.strip_suffix('i') {
        // split at the sign that separates real and imaginary parts: the
        // last '+'/'-' not directly after an exponent marker or at index 0
        let bytes = body.as_bytes();
        let mut split = None;
        for p in (1..bytes.len()).rev() {
            let c = bytes[p] as char;
            if (c == '+' || c == '-') && !matches!(bytes[p - 1] as char, 'e' | 'E') {
                split = Some(p);
                break;
            }
        }
        let p = split.ok_or_else(|| format!("malformed complex entry `{tok}`"))?;
        let re: f64 = body[..p].parse().map_err(|_| format!("bad entry `{tok}`"))?;
        let im: f64 = match &body[p..p + 1] {
            "+" => body[p + 1..].parse().map_err(|_| format!("bad entry `{tok}`"))?,
            _ => -body[p + 1..]
                .parse::<f64>()
                .map_err(|_| format!("bad entry `{tok}`"))?,
        };
        Ok(C64::new(re, im))
    } else {
        let re: f64 = tok.parse().map_err(|_| format!("bad entry `{tok}`"))?;
        Ok(C64::new(re, 0.0))
    }
}

pub fn parse_matrix(text: &str) -> Result<Mat, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty matrix block")?;
    let mut parts = header.split_whitespace();
    let field = match parts.next() {
        Some("R") => FieldTag::Real,
        Some("C") => FieldTag::Complex,
        other => return Err(format!("bad field tag {other:?}")),
    };
    let rows: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or("bad row count")?;
    let cols: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or("bad column count")?;
    let mut m = Mat::zeros(field, rows, cols);
    for i in 0..rows {
        let line = lines.next().ok_or_else(|| format!("missing row {i}"))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != cols {
            return Err(format!("row {i} has {} entries, expected {cols}", toks.len()));
        }
        for (j, tok) in toks.iter().enumerate() {
            let z = parse_complex(tok)?;
            if field == FieldTag::Real && z.im != 0.0 {
                return Err(format!("complex entry `{tok}` in a real matrix"));
            }
            m.set(i, j, z);
        }
    }
    Ok(m)
}

#[derive(Deserialize)]
struct MeasureFile {
    field: String,
    k: usize,
    weights: Vec<f64>,
    points: String,
}

/// Parse the measure JSON format: `{field, k, weights: [...], points: <matrix
/// text block>}`.
pub fn parse_measure(text: &str) -> Result<FiniteMeasure, String> {
    let raw: MeasureFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let field = match raw.field.as_str() {
        "R" => FieldTag::Real,
        "C" => FieldTag::Complex,
        other => return Err(format!("bad field tag `{other}`")),
    };
    let points = parse_matrix(&raw.points)?;
    if points.rows() != raw.k {
        return Err(format!(
            "points have {} rows but k = {}",
            points.rows(),
            raw.k
        ));
    }
    FiniteMeasure::new(field, points, raw.weights).map_err(|e| e.to_string())
}

pub fn write_measure(mu: &FiniteMeasure) -> String {
    let weights: Vec<String> = mu.weights.iter().map(|&w| fmt_f64(w)).collect();
    format!(
        "{{\"field\": \"{}\", \"k\": {}, \"weights\": [{}], \"points\": {}}}\n",
        mu.field.symbol(),
        mu.k,
        weights.join(", "),
        serde_json::to_string(&write_matrix(&mu.points)).unwrap()
    )
}
