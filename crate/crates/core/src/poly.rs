//! Dense univariate complex polynomials, coefficients in ascending degree.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type Poly = Vec<Complex64>;

pub fn eval(p: &[Complex64], x: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

pub fn derivative(p: &[Complex64]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

pub fn add(a: &[Complex64], b: &[Complex64]) -> Poly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or_default() + b.get(i).copied().unwrap_or_default())
        .collect()
}

pub fn mul(a: &[Complex64], b: &[Complex64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn scale(a: &[Complex64], s: f64) -> Poly {
    a.iter().map(|&c| c * s).collect()
}

/// Drops exactly-zero leading coefficients.
pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
        p.pop();
    }
    p
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(p: &[Complex64]) -> Option<usize> {
    p.iter().rposition(|c| *c != Complex64::new(0.0, 0.0))
}

/// Multiplicity of the root at zero (count of exactly-zero low coefficients).
pub fn order_at_zero(p: &[Complex64]) -> Option<usize> {
    p.iter().position(|c| *c != Complex64::new(0.0, 0.0))
}

/// All roots with multiplicity: companion-matrix eigenvalues, then Newton
/// polishing against the original coefficients.
pub fn roots(p: &[Complex64]) -> Vec<Complex64> {
    let p = trim(p.to_vec());
    let Some(n) = degree(&p) else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let lead = p[n];
    let mut c = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        c[(i, n - 1)] = -p[i] / lead;
    }
    let eig = c
        .schur()
        .eigenvalues()
        .expect("complex Schur form is triangular");
    let dp = derivative(&p);
    eig.iter()
        .map(|&r| {
            let mut x = r;
            for _ in 0..3 {
                let d = eval(&dp, x);
                if d.norm() == 0.0 {
                    break;
                }
                let step = eval(&p, x) / d;
                if !step.is_finite() || step.norm() > 1e-3 * (1.0 + x.norm()) {
                    break;
                }
                x -= step;
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn roots_of_cubic() {
        // (x − 1)(x + 2)(x − 3) = x³ − 2x² − 5x + 6
        let mut r: Vec<f64> = roots(&[c(6.0), c(-5.0), c(-2.0), c(1.0)])
            .into_iter()
            .map(|z| z.re)
            .collect();
        r.sort_by(f64::total_cmp);
        for (a, b) in r.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn arithmetic() {
        let p = mul(&[c(1.0), c(1.0)], &[c(-1.0), c(1.0)]);
        assert_eq!(p, vec![c(-1.0), c(0.0), c(1.0)]);
        assert_eq!(eval(&p, c(3.0)), c(8.0));
        assert_eq!(derivative(&p), vec![c(0.0), c(2.0)]);
        assert_eq!(order_at_zero(&[c(0.0), c(0.0), c(2.0)]), Some(2));
        assert_eq!(degree(&trim(vec![c(1.0), c(0.0)])), Some(0));
    }
}
