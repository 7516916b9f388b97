use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{resolve_radius, AnyPoint, Evaluation, HermitianPoint, TruncationSpec};
use crate::error::{Error, Result};
use crate::exactnum::omega_c64;

/// Characteristic `p_k` of the `k`-th Hermitian theta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DkChar {
    pub index: usize,
    pub p: [i32; 2],
}

pub const DK_CHARS: [[i32; 2]; 5] = [[0, 0], [1, 0], [0, 1], [1, -1], [1, 1]];

pub fn dk_char(index: usize) -> Result<DkChar> {
    let p = *DK_CHARS.get(index).ok_or(Error::UnknownIndex(index))?;
    Ok(DkChar { index, p })
}

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// `Θ_k(W) = Σ e^{2πi·ḡ·W·gᵗ}` over `g = (a + cω + sδ, b + dω + tδ)`,
/// `(s, t) = p_k`, `δ = i/√3`.
pub fn hermitian_theta_eval(ch: &DkChar, w: &HermitianPoint, tr: &TruncationSpec) -> Result<Evaluation> {
    w.check()?;
    let (radius, tail_bound) = resolve_radius(AnyPoint::Hermitian(w), tr)?;
    let r = radius as i64;
    let om = omega_c64();
    let delta = Complex64::new(0.0, 1.0 / 3f64.sqrt());
    let [s, t] = ch.p.map(f64::from);
    // g-values and diagonal factors for each (a, c), resp. (b, d)
    let side = |shift: f64, diag: Complex64| -> Vec<(Complex64, Complex64)> {
        let mut v = Vec::with_capacity(((2 * r + 1) * (2 * r + 1)) as usize);
        for a in -r..=r {
            for c in -r..=r {
                let g = a as f64 + om * c as f64 + delta * shift;
                v.push((g, (two_pi_i() * diag * g.norm_sqr()).exp()));
            }
        }
        v
    };
    let left = side(s, w.tau);
    let right = side(t, w.tau_prime);
    let tpi = two_pi_i();
    let mut sum = Complex64::new(0.0, 0.0);
    for &(g1, e1) in &left {
        let mut inner = Complex64::new(0.0, 0.0);
        for &(g2, e2) in &right {
            let cross = g1.conj() * w.z * g2 + g2.conj() * w.w * g1;
            inner += e2 * (tpi * cross).exp();
        }
        sum += e1 * inner;
    }
    Ok(Evaluation {
        value: sum,
        radius,
        tail_bound,
    })
}

pub fn hermitian_theta(ch: &DkChar, w: &HermitianPoint, tr: &TruncationSpec) -> Result<Complex64> {
    hermitian_theta_eval(ch, w, tr).map(|e| e.value)
}

/// `(Θ_0, …, Θ_4)` at one point.
pub fn hermitian_thetas(w: &HermitianPoint, tr: &TruncationSpec) -> Result<[Complex64; 5]> {
    let mut out = [Complex64::new(0.0, 0.0); 5];
    for (k, o) in out.iter_mut().enumerate() {
        *o = hermitian_theta(&dk_char(k)?, w, tr)?;
    }
    Ok(out)
}

fn restricted_sum(
    w: &HermitianPoint,
    ch: &DkChar,
    tr: &TruncationSpec,
    z_coeff: impl Fn(f64, f64, f64, f64, f64, f64) -> Complex64,
) -> Result<Evaluation> {
    w.check()?;
    let (radius, tail_bound) = resolve_radius(AnyPoint::Hermitian(w), tr)?;
    let r = radius as i64;
    let [s, t] = ch.p.map(f64::from);
    let tpi = two_pi_i();
    let mut sum = Complex64::new(0.0, 0.0);
    for a in -r..=r {
        for c in -r..=r {
            let (af, cf) = (a as f64, c as f64);
            let e1 = af * af - af * cf + cf * cf + s * cf + s * s / 3.0;
            let f1 = (tpi * w.tau * e1).exp();
            for b in -r..=r {
                for d in -r..=r {
                    let (bf, df) = (b as f64, d as f64);
                    let e2 = bf * bf - bf * df + df * df + t * df + t * t / 3.0;
                    let ex = w.tau_prime * e2 + z_coeff(af, bf, cf, df, s, t) * w.z;
                    sum += f1 * (tpi * ex).exp();
                }
            }
        }
    }
    Ok(Evaluation {
        value: sum,
        radius,
        tail_bound,
    })
}

/// `Θ_k` on `z = w` as the explicit four-fold sum over `(a, b, c, d)`.
pub fn restricted_theta_zw(
    ch: &DkChar,
    tau: Complex64,
    tau_prime: Complex64,
    z: Complex64,
    tr: &TruncationSpec,
) -> Result<Evaluation> {
    let w = HermitianPoint::new_unchecked(tau, z, z, tau_prime);
    restricted_sum(&w, ch, tr, |a, b, c, d, s, t| {
        Complex64::new(2.0 * a * b + 2.0 * c * d - a * d - b * c + t * c + s * d + 2.0 * s * t / 3.0, 0.0)
    })
}

/// `Θ_k` on `z = −w` as the explicit four-fold sum over `(a, b, c, d)`.
pub fn restricted_theta_zmw(
    ch: &DkChar,
    tau: Complex64,
    tau_prime: Complex64,
    z: Complex64,
    tr: &TruncationSpec,
) -> Result<Evaluation> {
    let w = HermitianPoint::new_unchecked(tau, z, -z, tau_prime);
    let s3 = 3f64.sqrt();
    restricted_sum(&w, ch, tr, move |a, b, c, d, s, t| {
        Complex64::new(
            0.0,
            s3 * (a * d - b * c) + 2.0 / s3 * (a * t - b * s) - 1.0 / s3 * (c * t - d * s),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// `Σ_{g∈Z[ω]} e^{−2π y N(g)}` by a plain double loop.
    fn eisenstein_gauss(y: f64) -> f64 {
        let mut s = 0.0;
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                let n = (a * a - a * b + b * b) as f64;
                s += (-2.0 * PI * y * n).exp();
            }
        }
        s
    }

    #[test]
    fn diagonal_factorises() {
        let w = HermitianPoint::new(c(0.0, 5.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 5.0)).unwrap();
        let v = hermitian_theta(&dk_char(0).unwrap(), &w, &TruncationSpec::default()).unwrap();
        let g = eisenstein_gauss(5.0);
        assert!((v - g * g).norm() < 1e-12);
    }

    #[test]
    fn restrictions_agree() {
        let tr = TruncationSpec::auto(1e-13);
        let (tau, tp, z) = (c(0.1, 1.1), c(-0.2, 1.3), c(0.15, -0.1));
        for k in 0..5 {
            let ch = dk_char(k).unwrap();
            let h = hermitian_theta(&ch, &HermitianPoint::on_diagonal(tau, z, tp).unwrap(), &tr).unwrap();
            let r = restricted_theta_zw(&ch, tau, tp, z, &tr).unwrap();
            assert!((h - r.value).norm() < 1e-10, "k={k} z=w");
            let h = hermitian_theta(&ch, &HermitianPoint::on_antidiagonal(tau, z, tp).unwrap(), &tr).unwrap();
            let r = restricted_theta_zmw(&ch, tau, tp, z, &tr).unwrap();
            assert!((h - r.value).norm() < 1e-10, "k={k} z=-w");
        }
    }

    #[test]
    fn loci_meet_at_z_zero() {
        let tr = TruncationSpec::default();
        let (tau, tp) = (c(0.3, 1.2), c(0.0, 1.7));
        let ch = dk_char(0).unwrap();
        let a = restricted_theta_zw(&ch, tau, tp, c(0.0, 0.0), &tr).unwrap().value;
        let b = restricted_theta_zmw(&ch, tau, tp, c(0.0, 0.0), &tr).unwrap().value;
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn first_theta_leading_term() {
        let (tau, tp) = (c(0.2, 6.0), c(-0.1, 6.0));
        let w = HermitianPoint::on_diagonal(tau, c(0.0, 0.0), tp).unwrap();
        let v = hermitian_theta(&dk_char(1).unwrap(), &w, &TruncationSpec::default()).unwrap();
        let q13 = (two_pi_i() * tau / 3.0).exp();
        assert!((v / q13 - 3.0).norm() < 1e-6);
    }

    #[test]
    fn rejects_bad_points() {
        let w = HermitianPoint::new_unchecked(c(0.0, 1.0), c(0.0, 3.0), c(0.0, 3.0), c(0.0, 1.0));
        assert!(matches!(
            hermitian_theta(&dk_char(0).unwrap(), &w, &TruncationSpec::default()),
            Err(Error::Inadmissible(_))
        ));
        assert_eq!(dk_char(5), Err(Error::UnknownIndex(5)));
    }
}
