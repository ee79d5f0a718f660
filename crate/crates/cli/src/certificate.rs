//! Coherence certificates: the four Gram checks, bound comparison, and the
//! versioned JSON encoding.

use std::fmt::Write as _;

use coherence_core::bounds::{best_lower, exact_optimal_value};
use coherence_core::eig::{hermitian_eig, RANK_TOL};
use coherence_core::mat::{coherence, FieldTag, Mat};

use crate::format::fmt_f64;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub hermitian: bool,
    pub unit_diagonal: bool,
    pub psd: bool,
    pub rank_le_d: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.hermitian && self.unit_diagonal && self.psd && self.rank_le_d
    }
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub field: FieldTag,
    pub d: usize,
    pub k: usize,
    pub coherence: f64,
    pub welch: f64,
    pub improved: f64,
    pub best_lower: f64,
    pub exact: Option<f64>,
    pub construction_id: String,
    pub checks: Checks,
    pub optimal: bool,
    pub tolerance: f64,
}

/// Run the four Gram checks on an externally supplied matrix and assemble the
/// certificate. `construction_id` is `external` unless the caller knows how
/// the matrix was produced.
pub fn verify_gram(
    a: &Mat,
    field: FieldTag,
    d: usize,
    k: usize,
    tol: f64,
    strict_rank: bool,
) -> Result<Certificate, coherence_core::Error> {
    let n = d + k;
    if a.rows() != n || a.cols() != n {
        return Err(coherence_core::Error::SizeMismatch {
            expected: n,
            got: a.rows(),
        });
    }
    let scale = a.frobenius_norm().max(1.0);
    let hermitian = a.is_hermitian(tol * scale);
    let unit_diagonal = (0..n).all(|i| {
        (a.get(i, i).re - 1.0).abs() <= tol && a.get(i, i).im.abs() <= tol
    });
    let (psd, rank_le_d) = if hermitian {
        let dec = hermitian_eig(a)?;
        let max_abs = dec
            .eigenvalues
            .iter()
            .map(|l| l.abs())
            .fold(0.0_f64, f64::max);
        let rank = dec
            .eigenvalues
            .iter()
            .filter(|l| l.abs() > RANK_TOL * max_abs)
            .count();
        let rank_ok = if strict_rank { rank == d } else { rank <= d };
        (dec.lambda_min() >= -tol * scale, rank_ok)
    } else {
        (false, false)
    };
    let checks = Checks {
        hermitian,
        unit_diagonal,
        psd,
        rank_le_d,
    };
    certificate_for(a, field, d, k, tol, checks, "external".to_string())
}

/// Assemble a certificate once the checks are known.
pub fn certificate_for(
    a: &Mat,
    field: FieldTag,
    d: usize,
    k: usize,
    tol: f64,
    checks: Checks,
    construction_id: String,
) -> Result<Certificate, coherence_core::Error> {
    let coherence = coherence(a)?;
    let report = best_lower(field, d, k);
    let exact = exact_optimal_value(field, d, k);
    let optimal =
        checks.all() && exact.is_some() && (coherence - report.best_lower).abs() <= tol;
    Ok(Certificate {
        field,
        d,
        k,
        coherence,
        welch: report.welch,
        improved: report.improved,
        best_lower: report.best_lower,
        exact,
        construction_id,
        checks,
        optimal,
        tolerance: tol,
    })
}

impl Certificate {
    /// JSON encoding; floats carry 17 significant digits.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"spec\": 1,");
        let _ = writeln!(s, "  \"field\": \"{}\",", self.field.symbol());
        let _ = writeln!(s, "  \"d\": {},", self.d);
        let _ = writeln!(s, "  \"k\": {},", self.k);
        let _ = writeln!(s, "  \"coherence\": {},", fmt_f64(self.coherence));
        let _ = writeln!(s, "  \"welch\": {},", fmt_f64(self.welch));
        let _ = writeln!(s, "  \"improved\": {},", fmt_f64(self.improved));
        let _ = writeln!(s, "  \"best_lower\": {},", fmt_f64(self.best_lower));
        match self.exact {
            Some(v) => {
                let _ = writeln!(s, "  \"exact\": {},", fmt_f64(v));
            }
            None => {
                let _ = writeln!(s, "  \"exact\": null,");
            }
        }
        let _ = writeln!(s, "  \"construction_id\": \"{}\",", self.construction_id);
        let _ = writeln!(s, "  \"checks\": {{");
        let _ = writeln!(s, "    \"hermitian\": {},", self.checks.hermitian);
        let _ = writeln!(s, "    \"unit_diagonal\": {},", self.checks.unit_diagonal);
        let _ = writeln!(s, "    \"psd\": {},", self.checks.psd);
        let _ = writeln!(s, "    \"rank_le_d\": {}", self.checks.rank_le_d);
        let _ = writeln!(s, "  }},");
        let _ = writeln!(s, "  \"optimal\": {},", self.optimal);
        let _ = writeln!(s, "  \"tolerance\": {}", fmt_f64(self.tolerance));
        s.push_str("}\n");
        s
    }
}
