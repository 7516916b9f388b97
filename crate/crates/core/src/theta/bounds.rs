//! Tail bounds for box-truncated theta sums.
//!
//! Shell `n` collects the lattice points of sup-norm exactly `n`. Each term in
//! it is bounded by a Gaussian in `n` using `λ = λ_min(Y)`, so the tail is
//! dominated by `Σ_{n>R} N(n)·e(n)`. The sum is taken explicitly until the
//! term ratio drops below one; from there the ratios only decrease, so a
//! geometric series closes the bound.

use std::f64::consts::PI;

use super::{AnyPoint, HermitianPoint, SiegelPoint, MAX_RADIUS};
use crate::error::{Error, Result};

fn shell_sum(r: u32, term: impl Fn(f64) -> f64) -> f64 {
    let mut total = 0.0;
    let mut n = r as f64 + 1.0;
    let mut t = term(n);
    for _ in 0..100_000 {
        let next = term(n + 1.0);
        if t == 0.0 {
            return total;
        }
        let ratio = next / t;
        if ratio < 1.0 {
            return total + t / (1.0 - ratio);
        }
        total += t;
        t = next;
        n += 1.0;
    }
    f64::INFINITY
}

/// Tail bound for a Hermitian theta sum over `(a, b, c, d)` with
/// `max(|a|,|b|,|c|,|d|) > radius`.
///
/// With `g1 = a + cω + sδ`, `|a + cω|² ≥ (3/4)·max(|a|,|c|)²` and `|sδ| ≤ 1/√3`,
/// so every point of shell `n` has `|g|² ≥ ((√3/2)n − 1/√3)²`.
pub fn hermitian_tail_bound(w: &HermitianPoint, radius: u32) -> f64 {
    let lam = w.imag_part().min_eigenvalue();
    if lam <= 0.0 {
        return f64::INFINITY;
    }
    let s3 = 3f64.sqrt();
    shell_sum(radius, |n| {
        let count = (2.0 * n + 1.0).powi(4) - (2.0 * n - 1.0).powi(4);
        let r = (s3 / 2.0 * n - 1.0 / s3).max(0.0);
        count * (-2.0 * PI * lam * r * r).exp()
    })
}

/// Tail bound for a Siegel theta sum over `(a, b)` with
/// `max(|a|,|b|) > radius`; shifted coordinates satisfy `|a + s/2| ≥ n − 1/2`.
pub fn siegel_tail_bound(w: &SiegelPoint, radius: u32) -> f64 {
    let lam = w.imag_part().min_eigenvalue();
    if lam <= 0.0 {
        return f64::INFINITY;
    }
    shell_sum(radius, |n| {
        let r = n - 0.5;
        8.0 * n * (-PI * lam * r * r).exp()
    })
}

pub fn tail_bound(point: AnyPoint<'_>, radius: u32) -> f64 {
    match point {
        AnyPoint::Hermitian(w) => hermitian_tail_bound(w, radius),
        AnyPoint::Siegel(w) => siegel_tail_bound(w, radius),
    }
}

/// Smallest radius `R ≥ 1` whose tail bound is at most `tail_tol`.
pub fn auto_radius(point: AnyPoint<'_>, tail_tol: f64) -> Result<(u32, f64)> {
    if !(tail_tol > 0.0) {
        return Err(Error::Inadmissible("tail tolerance must be positive".into()));
    }
    let bound = |r| tail_bound(point, r);
    if bound(MAX_RADIUS) > tail_tol {
        return Err(Error::Convergence(format!(
            "tail bound {:e} at radius {MAX_RADIUS} exceeds {tail_tol:e}",
            bound(MAX_RADIUS)
        )));
    }
    // the bound is monotone in the radius
    let (mut lo, mut hi) = (1, MAX_RADIUS);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if bound(mid) <= tail_tol {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok((lo, bound(lo)))
}
