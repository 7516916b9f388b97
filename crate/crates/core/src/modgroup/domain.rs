//! The isomorphism between the Hermitian half-space and one component of the
//! type IV domain attached to `U ⊕ U ⊕ A2(−1)`.

use num_complex::Complex64;
use serde::Serialize;

use super::{act, Generator, ModularMatrix};
use crate::error::{Error, Result};
use crate::lattices::IntMatrix;
use crate::theta::HermitianPoint;

/// `(ξ1, …, ξ6)` in the coordinates of `U ⊕ U ⊕ A2(−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DomainPoint {
    pub xi: [Complex64; 6],
}

/// Generators whose images in `O(U ⊕ U ⊕ A2(−1))` are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrthGenerator {
    Modular(Generator),
    /// `W ↦ Wᵗ`
    T1,
    /// `[[τ, z], [w, τ′]] ↦ [[τ, −w], [−z, τ′]]`
    T2,
}

impl OrthGenerator {
    pub const ALL: [OrthGenerator; 6] = [
        Self::Modular(Generator::M1),
        Self::Modular(Generator::M2),
        Self::Modular(Generator::M3),
        Self::Modular(Generator::J),
        Self::T1,
        Self::T2,
    ];

    pub fn name(&self) -> String {
        match self {
            Self::Modular(g) => g.to_string(),
            Self::T1 => "T1".into(),
            Self::T2 => "T2".into(),
        }
    }

    /// The matrix acting on column vectors `ξ`.
    pub fn matrix(&self) -> IntMatrix {
        let mut m: IntMatrix = (0..6).map(|i| (0..6).map(|j| i64::from(i == j)).collect()).collect();
        match self {
            Self::Modular(Generator::M1) => {
                m[1][3] = -1;
                m[2][0] = 1;
            }
            Self::Modular(Generator::M2) => {
                m[1][2] = -1;
                m[3][0] = 1;
            }
            Self::Modular(Generator::M3) => {
                m[1] = vec![1, 1, 0, 0, 1, 1];
                m[4][0] = 1;
                m[5][0] = 1;
            }
            Self::Modular(Generator::J) => {
                m = vec![vec![0; 6]; 6];
                m[0][1] = -1;
                m[1][0] = -1;
                m[2][3] = -1;
                m[3][2] = -1;
                m[4][4] = 1;
                m[5][5] = 1;
            }
            Self::T1 => {
                for (i, r) in m.iter_mut().enumerate().take(4) {
                    r[i] = -1;
                }
                swap_negated(&mut m);
            }
            Self::T2 => swap_negated(&mut m),
        }
        m
    }

    /// The action on the half-space that `matrix()` should induce.
    pub fn act_on(&self, w: &HermitianPoint) -> Result<HermitianPoint> {
        match self {
            Self::Modular(g) => act(&ModularMatrix::generator(*g), w),
            Self::T1 => Ok(HermitianPoint::new_unchecked(w.tau, w.w, w.z, w.tau_prime)),
            Self::T2 => Ok(HermitianPoint::new_unchecked(w.tau, -w.w, -w.z, w.tau_prime)),
        }
    }
}

fn swap_negated(m: &mut IntMatrix) {
    m[4][4] = 0;
    m[5][5] = 0;
    m[4][5] = -1;
    m[5][4] = -1;
}

pub fn orth_images() -> Vec<(String, IntMatrix)> {
    OrthGenerator::ALL.iter().map(|g| (g.name(), g.matrix())).collect()
}

fn sqrt_m3() -> Complex64 {
    Complex64::new(0.0, 3f64.sqrt())
}

/// `(ξ, η)` for the Gram matrix of `U ⊕ U ⊕ A2(−1)`, bilinear.
fn pairing(a: &[Complex64; 6], b: &[Complex64; 6]) -> Complex64 {
    a[0] * b[1] + a[1] * b[0] + a[2] * b[3] + a[3] * b[2] - 2.0 * a[4] * b[4] + a[4] * b[5] + a[5] * b[4]
        - 2.0 * a[5] * b[5]
}

/// `(ξ, ξ)`, zero on the domain.
pub fn quadric(p: &DomainPoint) -> Complex64 {
    pairing(&p.xi, &p.xi)
}

/// `(ξ, ξ̄)`, positive on the domain.
pub fn hermitian_norm(p: &DomainPoint) -> f64 {
    pairing(&p.xi, &p.xi.map(|x| x.conj())).re
}

/// Half-space point to domain point, normalised so `ξ1 = 1`.
pub fn modular_iso_finv(w: &HermitianPoint) -> DomainPoint {
    let s = (w.z + w.w) / 2.0;
    let d = (w.z - w.w) / (2.0 * sqrt_m3());
    let one = Complex64::new(1.0, 0.0);
    DomainPoint {
        xi: [one, -(w.tau * w.tau_prime - w.z * w.w), w.tau, w.tau_prime, s + d, s - d],
    }
}

/// Domain point to half-space point; fails on `ξ1 = 0`.
pub fn modular_iso_f(p: &DomainPoint) -> Result<HermitianPoint> {
    let x = &p.xi;
    let scale = x.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if x[0].norm() <= 1e-14 * scale {
        return Err(Error::BoundaryPoint);
    }
    let plus = (1.0 + sqrt_m3()) / 2.0;
    let minus = (1.0 - sqrt_m3()) / 2.0;
    Ok(HermitianPoint::new_unchecked(
        x[2] / x[0],
        (plus * x[4] + minus * x[5]) / x[0],
        (minus * x[4] + plus * x[5]) / x[0],
        x[3] / x[0],
    ))
}

fn apply(m: &IntMatrix, p: &DomainPoint) -> DomainPoint {
    DomainPoint {
        xi: std::array::from_fn(|i| (0..6).map(|j| p.xi[j] * m[i][j] as f64).sum()),
    }
}

/// `max |f(g·ξ) − g⟨f(ξ)⟩|` over the four entries, with `ξ = f⁻¹(W)`.
pub fn equivariance_residual(g: OrthGenerator, w: &HermitianPoint) -> Result<f64> {
    let lhs = modular_iso_f(&apply(&g.matrix(), &modular_iso_finv(w)))?;
    let rhs = g.act_on(w)?;
    Ok([lhs.tau - rhs.tau, lhs.z - rhs.z, lhs.w - rhs.w, lhs.tau_prime - rhs.tau_prime]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{check_isometry, direct_sum, root_lattice, LatticeName};
    use crate::theta::{sample_points, Locus};

    #[test]
    fn round_trip_and_quadric() {
        for w in sample_points(11, 10, Locus::Generic) {
            let p = modular_iso_finv(&w);
            assert!(quadric(&p).norm() < 1e-13);
            assert!(hermitian_norm(&p) > 0.0);
            let back = modular_iso_f(&p).unwrap();
            assert!((back.z - w.z).norm() < 1e-14 && (back.w - w.w).norm() < 1e-14);
            assert!((back.tau - w.tau).norm() < 1e-14);
        }
        let mut p = modular_iso_finv(&sample_points(1, 1, Locus::Generic)[0]);
        p.xi[0] = Complex64::new(0.0, 0.0);
        assert_eq!(modular_iso_f(&p), Err(Error::BoundaryPoint));
    }

    #[test]
    fn images_are_isometries() {
        let g = direct_sum(&[
            root_lattice(LatticeName::U, 1),
            root_lattice(LatticeName::U, 1),
            root_lattice(LatticeName::A2, -1),
        ]);
        for (name, m) in orth_images() {
            assert!(check_isometry(&m, &g).unwrap(), "{name}");
        }
    }

    #[test]
    fn equivariance() {
        for w in sample_points(5, 5, Locus::Generic) {
            for g in OrthGenerator::ALL {
                assert!(equivariance_residual(g, &w).unwrap() < 1e-12, "{}", g.name());
            }
        }
    }
}
