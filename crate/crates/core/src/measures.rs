//! Finite measures on the unit sphere of `H^k`: isotropy and whitening, the
//! first-moment functional, and a sound upper estimator for the line packing
//! functional `Lambda`.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bounds::alpha;
use crate::eig::hermitian_eig;
use crate::mat::{FieldTag, Mat};
use crate::scalar::{cos, modulus, re, sin, sqrt, C64};
use crate::{Error, Result};

const WEIGHT_TOL: f64 = 1e-12;
const ISO_TOL: f64 = 1e-8;
const SPAN_TOL: f64 = 1e-10;
const EIG_FLOOR: f64 = 1e-12;

/// A finitely supported probability measure on `H^k`: column `i` of `points`
/// carries weight `weights[i]`.
#[derive(Debug, Clone)]
pub struct FiniteMeasure {
    pub field: FieldTag,
    pub k: usize,
    pub points: Mat,
    pub weights: Vec<f64>,
}

impl FiniteMeasure {
    pub fn new(field: FieldTag, points: Mat, weights: Vec<f64>) -> Result<Self> {
        if points.cols() == 0 || points.cols() != weights.len() {
            return Err(Error::InvalidMeasure("point and weight counts differ"));
        }
        if weights.iter().any(|&w| w < 0.0) {
            return Err(Error::InvalidMeasure("negative weight"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_TOL {
            return Err(Error::InvalidMeasure("weights do not sum to 1"));
        }
        Ok(FiniteMeasure {
            field,
            k: points.rows(),
            points,
            weights,
        })
    }

    /// The uniform measure on the columns of `points`.
    pub fn uniform(field: FieldTag, points: Mat) -> Result<Self> {
        let m = points.cols();
        FiniteMeasure::new(field, points, alloc::vec![1.0 / m as f64; m])
    }

    pub fn support_size(&self) -> usize {
        self.points.cols()
    }
}

/// `E_{x ~ mu} x x^*`, a `k x k` Hermitian PSD matrix.
pub fn second_moment(mu: &FiniteMeasure) -> Mat {
    let k = mu.k;
    let mut m = Mat::zeros(mu.field, k, k);
    for c in 0..mu.support_size() {
        let w = mu.weights[c];
        for i in 0..k {
            for j in 0..k {
                let v = m.get(i, j) + mu.points.get(i, c) * mu.points.get(j, c).conj() * re(w);
                m.set(i, j, v);
            }
        }
    }
    m
}

/// Whether the second moment is `I/k` within tolerance.
pub fn is_isotropic(mu: &FiniteMeasure) -> bool {
    let target = Mat::identity(mu.field, mu.k).scale(re(1.0 / mu.k as f64));
    second_moment(mu).sub(&target).frobenius_norm() <= ISO_TOL
}

/// The change of basis `Q = (k M)^{-1/2}` that makes the measure isotropic,
/// together with the transformed measure.
pub fn whiten(mu: &FiniteMeasure) -> Result<(Mat, FiniteMeasure)> {
    let k = mu.k;
    let m = second_moment(mu).scale(re(k as f64));
    let dec = hermitian_eig(&m)?;
    if dec.lambda_min() < SPAN_TOL {
        return Err(Error::DegenerateSupport);
    }
    let mut q = Mat::zeros(mu.field, k, k);
    for t in 0..k {
        let s = 1.0 / sqrt(dec.eigenvalues[t].max(EIG_FLOOR));
        for i in 0..k {
            for j in 0..k {
                let v = q.get(i, j)
                    + dec.basis.get(i, t) * dec.basis.get(j, t).conj() * re(s);
                q.set(i, j, v);
            }
        }
    }
    let iso = FiniteMeasure::new(mu.field, q.matmul(&mu.points), mu.weights.clone())?;
    Ok((q, iso))
}

/// `E_{x,y ~ mu} |<x, y>|` with independent sampling (diagonal included).
pub fn first_moment(mu: &FiniteMeasure) -> f64 {
    let m = mu.support_size();
    let mut acc = 0.0;
    for i in 0..m {
        acc += mu.weights[i] * mu.weights[i] * modulus(mu.points.col_inner(i, i));
        for j in (i + 1)..m {
            acc += 2.0 * mu.weights[i] * mu.weights[j] * modulus(mu.points.col_inner(i, j));
        }
    }
    acc
}

/// The ratio `E_{x ~ mu} |<v, x>| / |<v, y>|` minimized over `y` in the
/// support; `None` when `v` is orthogonal to every support point.
pub fn lone_ratio(mu: &FiniteMeasure, v: &[C64]) -> Option<f64> {
    let mut denom = 0.0_f64;
    let mut num = 0.0;
    for c in 0..mu.support_size() {
        let mut inner = crate::scalar::ZERO;
        for (i, vi) in v.iter().enumerate().take(mu.k) {
            inner += vi.conj() * mu.points.get(i, c);
        }
        let m = modulus(inner);
        num += mu.weights[c] * m;
        if mu.points.col_norm(c) > 1e-12 && m > denom {
            denom = m;
        }
    }
    if denom < 1e-12 {
        None
    } else {
        Some(num / denom)
    }
}

/// A sound upper bound on `Lambda(mu)`: the exact minimum of `lone_ratio`
/// over a finite candidate set (every support point, a dense circle grid when
/// `field = R, k = 2`, and `restarts` random directions refined by coordinate
/// descent). Deterministic for a fixed `seed`.
pub fn lone_estimate(mu: &FiniteMeasure, restarts: usize, grid: usize, seed: u64) -> Result<f64> {
    if (0..mu.support_size()).all(|c| mu.points.col_norm(c) <= 1e-12) {
        return Err(Error::EmptySupport);
    }
    let k = mu.k;
    let mut best = f64::INFINITY;
    let mut consider = |v: &[C64]| {
        if let Some(r) = lone_ratio(mu, v) {
            if r < best {
                best = r;
            }
        }
    };
    for c in 0..mu.support_size() {
        consider(&mu.points.col(c));
    }
    if mu.field == FieldTag::Real && k == 2 {
        for g in 0..grid {
            let t = core::f64::consts::PI * g as f64 / grid.max(1) as f64;
            consider(&[re(cos(t)), re(sin(t))]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restarts {
        let mut v = random_unit(&mut rng, mu.field, k);
        let mut cur = match lone_ratio(mu, &v) {
            Some(r) => r,
            None => continue,
        };
        let mut step = 0.1;
        for _ in 0..200 {
            let mut improved = false;
            for i in 0..k {
                for (dr, di) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                    if mu.field == FieldTag::Real && di != 0.0 {
                        continue;
                    }
                    let mut cand = v.clone();
                    cand[i] += C64::new(dr, di);
                    normalize(&mut cand);
                    if let Some(r) = lone_ratio(mu, &cand) {
                        if r < cur - 1e-15 {
                            cur = r;
                            v = cand;
                            improved = true;
                        }
                    }
                }
            }
            if !improved {
                step *= 0.5;
                if step < 1e-6 {
                    break;
                }
            }
        }
        if cur < best {
            best = cur;
        }
    }
    Ok(best)
}

fn normalize(v: &mut [C64]) {
    let n = sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
    if n > 1e-300 {
        for z in v.iter_mut() {
            *z /= re(n);
        }
    }
}

fn uniform_f64(rng: &mut ChaCha8Rng) -> f64 {
    rng.next_u64() as f64 / (u64::MAX as f64 + 1.0)
}

/// Standard Gaussian via Box-Muller.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u = uniform_f64(rng).max(1e-300);
    let t = uniform_f64(rng);
    sqrt(-2.0 * crate::scalar::ln(u)) * cos(2.0 * core::f64::consts::PI * t)
}

/// A uniformly random unit vector in `H^k`.
pub fn random_unit(rng: &mut ChaCha8Rng, field: FieldTag, k: usize) -> Vec<C64> {
    let mut v: Vec<C64> = (0..k)
        .map(|_| match field {
            FieldTag::Real => re(gaussian(rng)),
            FieldTag::Complex => C64::new(gaussian(rng), gaussian(rng)),
        })
        .collect();
    normalize(&mut v);
    v
}

/// Result of checking the first-moment bound on an isotropic measure.
#[derive(Debug, Clone, Copy)]
pub struct IsoBoundCheck {
    pub value: f64,
    pub bound: f64,
    pub ok: bool,
    pub extremal: bool,
}

/// First moment against `alpha_k` / `alpha*_k` for an isotropic measure.
pub fn iso_bound_check(mu: &FiniteMeasure) -> Result<IsoBoundCheck> {
    if !is_isotropic(mu) {
        return Err(Error::NotIsotropic);
    }
    let value = first_moment(mu);
    let bound = alpha(mu.field, mu.k);
    Ok(IsoBoundCheck {
        value,
        bound,
        ok: value <= bound + 1e-9,
        extremal: (value - bound).abs() <= 1e-8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{alpha_complex, alpha_real};
    use crate::packings::{equiangular_system, sic_system};

    fn three_lines() -> FiniteMeasure {
        let v = equiangular_system(2).unwrap();
        FiniteMeasure::uniform(FieldTag::Real, v.vectors).unwrap()
    }

    fn random_measure(rng: &mut ChaCha8Rng, field: FieldTag, k: usize, m: usize) -> FiniteMeasure {
        let mut pts = Mat::zeros(field, k, m);
        for c in 0..m {
            let v = random_unit(rng, field, k);
            for (i, vi) in v.iter().enumerate() {
                pts.set(i, c, *vi);
            }
        }
        FiniteMeasure::uniform(field, pts).unwrap()
    }

    #[test]
    fn measure_invariants() {
        let pts = Mat::identity(FieldTag::Real, 2);
        assert!(FiniteMeasure::new(FieldTag::Real, pts.clone(), alloc::vec![0.6, 0.6]).is_err());
        assert!(FiniteMeasure::new(FieldTag::Real, pts.clone(), alloc::vec![1.5, -0.5]).is_err());
        assert!(FiniteMeasure::new(FieldTag::Real, pts, alloc::vec![0.25]).is_err());
    }

    #[test]
    fn second_moment_examples() {
        let basis = FiniteMeasure::uniform(FieldTag::Real, Mat::identity(FieldTag::Real, 2)).unwrap();
        let m = second_moment(&basis);
        assert!(m.sub(&Mat::identity(FieldTag::Real, 2).scale(re(0.5))).frobenius_norm() < 1e-12);
        assert!(is_isotropic(&basis));

        let m = second_moment(&three_lines());
        assert!(m.sub(&Mat::identity(FieldTag::Real, 2).scale(re(0.5))).frobenius_norm() < 1e-10);

        let mut e1 = Mat::zeros(FieldTag::Real, 2, 1);
        e1.set(0, 0, re(1.0));
        let point_mass = FiniteMeasure::uniform(FieldTag::Real, e1).unwrap();
        let m = second_moment(&point_mass);
        assert!((m.get(0, 0).re - 1.0).abs() < 1e-12);
        assert!(m.get(1, 1).re.abs() < 1e-12);
        assert!(!is_isotropic(&point_mass));
    }

    #[test]
    fn whiten_isotropic_is_identity() {
        let (q, iso) = whiten(&three_lines()).unwrap();
        assert!(q.sub(&Mat::identity(FieldTag::Real, 2)).frobenius_norm() < 1e-8);
        assert!(is_isotropic(&iso));
    }

    #[test]
    fn whiten_diagonal_scaling() {
        let pts = Mat::from_real_rows(2, 2, &[2.0, 0.0, 0.0, 1.0]);
        let mu = FiniteMeasure::uniform(FieldTag::Real, pts).unwrap();
        let (_, iso) = whiten(&mu).unwrap();
        let m = second_moment(&iso);
        assert!(m.sub(&Mat::identity(FieldTag::Real, 2).scale(re(0.5))).frobenius_norm() < 1e-8);
    }

    #[test]
    fn whiten_degenerate() {
        let pts = Mat::from_real_rows(2, 2, &[1.0, -1.0, 0.0, 0.0]);
        let mu = FiniteMeasure::uniform(FieldTag::Real, pts).unwrap();
        assert_eq!(whiten(&mu).err(), Some(Error::DegenerateSupport));
    }

    #[test]
    fn first_moment_examples() {
        // (1/9)(3 * 1 + 6 * 1/2) = 2/3 = alpha_2
        assert!((first_moment(&three_lines()) - 2.0 / 3.0).abs() < 1e-12);
        assert!((first_moment(&three_lines()) - alpha_real(2)).abs() < 1e-12);

        let sic = FiniteMeasure::uniform(FieldTag::Complex, sic_system(2).unwrap().vectors).unwrap();
        // (1/16)(4 + 12/sqrt3) = (sqrt3 + 1)/4
        assert!((first_moment(&sic) - alpha_complex(2)).abs() < 1e-10);

        let mut e1 = Mat::zeros(FieldTag::Real, 2, 1);
        e1.set(0, 0, re(1.0));
        let pm = FiniteMeasure::uniform(FieldTag::Real, e1).unwrap();
        assert!((first_moment(&pm) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn iso_check_cases() {
        let c = iso_bound_check(&three_lines()).unwrap();
        assert!(c.ok && c.extremal);

        let basis = FiniteMeasure::uniform(FieldTag::Real, Mat::identity(FieldTag::Real, 2)).unwrap();
        let c = iso_bound_check(&basis).unwrap();
        assert!((c.value - 0.5).abs() < 1e-12);
        assert!(c.ok && !c.extremal);

        let mut e1 = Mat::zeros(FieldTag::Real, 2, 1);
        e1.set(0, 0, re(1.0));
        let pm = FiniteMeasure::uniform(FieldTag::Real, e1).unwrap();
        assert_eq!(iso_bound_check(&pm).err(), Some(Error::NotIsotropic));
    }

    #[test]
    fn iso_check_random_not_extremal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mu = random_measure(&mut rng, FieldTag::Real, 2, 50);
        let (_, iso) = whiten(&mu).unwrap();
        let c = iso_bound_check(&iso).unwrap();
        assert!(c.ok && !c.extremal);
    }

    #[test]
    fn lemma_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for (field, ks) in [
            (FieldTag::Real, &[2usize, 3, 4][..]),
            (FieldTag::Complex, &[2, 3][..]),
        ] {
            for &k in ks {
                for _ in 0..100 {
                    let mu = random_measure(&mut rng, field, k, 3 * k);
                    let (_, iso) = whiten(&mu).unwrap();
                    let c = iso_bound_check(&iso).unwrap();
                    assert!(c.ok, "{field:?} k={k}: {} > {}", c.value, c.bound);
                }
            }
        }
    }

    #[test]
    fn lone_three_lines() {
        let est = lone_estimate(&three_lines(), 0, 3600, 0).unwrap();
        assert!((0.666..=0.6677).contains(&est), "{est}");
    }

    #[test]
    fn lone_point_mass() {
        let mut e1 = Mat::zeros(FieldTag::Real, 2, 1);
        e1.set(0, 0, re(1.0));
        let pm = FiniteMeasure::uniform(FieldTag::Real, e1).unwrap();
        assert!((lone_estimate(&pm, 0, 0, 0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lone_orthonormal_pair() {
        let mu = FiniteMeasure::uniform(FieldTag::Real, Mat::identity(FieldTag::Real, 2)).unwrap();
        let est = lone_estimate(&mu, 0, 3600, 0).unwrap();
        assert!(est <= 0.5 + 1e-9, "{est}");
        // v = e_1 witnesses the ratio 1/2 directly
        assert!((lone_ratio(&mu, &[re(1.0), re(0.0)]).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn lone_empty_support() {
        let pts = Mat::zeros(FieldTag::Real, 2, 1);
        let mu = FiniteMeasure::new(FieldTag::Real, pts, alloc::vec![1.0]).unwrap();
        assert_eq!(lone_estimate(&mu, 0, 10, 0).err(), Some(Error::EmptySupport));
    }

    #[test]
    fn lone_sound_over_random_plane_measures() {
        // SL_R(d, 2) <= 2/3: every whitened planar measure admits a witness
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let mu = random_measure(&mut rng, FieldTag::Real, 2, 6);
            let (_, iso) = whiten(&mu).unwrap();
            let est = lone_estimate(&iso, 0, 3600, 0).unwrap();
            assert!(est <= 2.0 / 3.0 + 1e-3, "{est}");
        }
    }

    #[test]
    fn lone_refinement_helps_in_higher_dim() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mu = random_measure(&mut rng, FieldTag::Real, 3, 9);
        let (_, iso) = whiten(&mu).unwrap();
        let coarse = lone_estimate(&iso, 0, 0, 1).unwrap();
        let fine = lone_estimate(&iso, 20, 0, 1).unwrap();
        assert!(fine <= coarse + 1e-12);
        // deterministic for a fixed seed
        assert_eq!(fine, lone_estimate(&iso, 20, 0, 1).unwrap());
    }

    #[test]
    fn gl_invariance_of_ratio() {
        // the ratio at (v, y) on Q mu equals the ratio at (Q* v, .) on mu
        // when the denominator maximizer is mapped along
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let mu = random_measure(&mut rng, FieldTag::Real, 2, 5);
            // random diagonal times rotation: easy inverse, generic enough
            let (a, b) = (0.5 + uniform_f64(&mut rng), 0.5 + uniform_f64(&mut rng));
            let t = 2.0 * core::f64::consts::PI * uniform_f64(&mut rng);
            let rot = Mat::from_real_rows(2, 2, &[cos(t), -sin(t), sin(t), cos(t)]);
            let q = Mat::from_real_rows(2, 2, &[a, 0.0, 0.0, b]).matmul(&rot);
            let qmu =
                FiniteMeasure::new(FieldTag::Real, q.matmul(&mu.points), mu.weights.clone())
                    .unwrap();
            let v = random_unit(&mut rng, FieldTag::Real, 2);
            let qv: Vec<C64> = (0..2)
                .map(|i| q.get(0, i).conj() * v[0] + q.get(1, i).conj() * v[1])
                .collect();
            let lhs = lone_ratio(&qmu, &v);
            let rhs = lone_ratio(&mu, &qv);
            match (lhs, rhs) {
                (Some(l), Some(r)) => assert!((l - r).abs() < 1e-9),
                (l, r) => assert_eq!(l.is_none(), r.is_none()),
            }
        }
    }

    #[test]
    fn first_moment_diagonal_floor() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mu = random_measure(&mut rng, FieldTag::Real, 3, 6);
        let diag: f64 = mu.weights.iter().map(|w| w * w).sum();
        assert!(first_moment(&mu) >= diag - 1e-12);
        // orthonormal support attains the floor exactly
        let basis = FiniteMeasure::uniform(FieldTag::Real, Mat::identity(FieldTag::Real, 3)).unwrap();
        let diag: f64 = basis.weights.iter().map(|w| w * w).sum();
        assert!((first_moment(&basis) - diag).abs() < 1e-12);
    }
}
