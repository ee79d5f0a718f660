//! Coherence landscape tables over a range of dimensions.

use coherence_core::bounds::{exact_optimal_value, improved_lower_bound, welch_bound};
use coherence_core::mat::FieldTag;
use coherence_core::packings::construct_best;

use crate::format::fmt_f64;

pub const CSV_HEADER: &str = "field,d,k,welch,improved,exact,achieved,construction,optimal";

#[derive(Debug, Clone)]
pub struct TableRow {
    pub field: FieldTag,
    pub d: usize,
    pub k: usize,
    pub welch: f64,
    pub improved: f64,
    pub exact: Option<f64>,
    pub achieved: Option<f64>,
    pub construction: String,
    pub optimal: bool,
}

/// One row per dimension in `[d_min, d_max]`. Dimensions with no reachable
/// construction still get a row (bounds only, empty achieved column).
pub fn emit_table(field: FieldTag, k: usize, d_min: usize, d_max: usize) -> Vec<TableRow> {
    (d_min..=d_max)
        .map(|d| {
            let (achieved, construction, optimal) = match construct_best(field, d, k) {
                Ok(c) => (Some(c.system.coherence), c.construction_id, c.is_exact),
                Err(_) => (None, String::from("none"), false),
            };
            TableRow {
                field,
                d,
                k,
                welch: welch_bound(d, k),
                improved: improved_lower_bound(field, d, k),
                exact: exact_optimal_value(field, d, k),
                achieved,
                construction,
                optimal,
            }
        })
        .collect()
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.field.symbol(),
            r.d,
            r.k,
            fmt_f64(r.welch),
            fmt_f64(r.improved),
            r.exact.map(fmt_f64).unwrap_or_default(),
            r.achieved.map(fmt_f64).unwrap_or_default(),
            r.construction,
            r.optimal,
        ));
    }
    out
}
