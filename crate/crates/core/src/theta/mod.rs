//! Numerical theta constants: the ten genus-two Siegel thetas with even
//! characteristic and the five Hermitian thetas over the Eisenstein integers,
//! evaluated as box-truncated lattice sums with explicit tail bounds.

mod bounds;
mod hermitian;
mod sampling;
mod siegel;

pub use bounds::{auto_radius, hermitian_tail_bound, siegel_tail_bound, tail_bound};
pub use hermitian::{
    dk_char, hermitian_theta, hermitian_theta_eval, hermitian_thetas, restricted_theta_zmw,
    restricted_theta_zw, DkChar, DK_CHARS,
};
pub use sampling::{sample_points, sample_siegel_points, Locus};
pub use siegel::{siegel_char, siegel_theta, siegel_theta_eval, siegel_thetas, SiegelChar, SIEGEL_CHARS};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default bound on the omitted tail of a lattice sum.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Largest box radius the auto-tuner will try.
pub const MAX_RADIUS: u32 = 200;

/// `W = [[τ, z], [w, τ′]]` in the Hermitian half-space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HermitianPoint {
    pub tau: Complex64,
    pub z: Complex64,
    pub w: Complex64,
    pub tau_prime: Complex64,
}

/// Entries `(Y11, Y22, Y12)` of a 2×2 Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hermitian2 {
    pub y11: f64,
    pub y22: f64,
    pub y12: Complex64,
}

impl Hermitian2 {
    pub fn is_positive_definite(&self) -> bool {
        self.y11 > 0.0 && self.y11 * self.y22 - self.y12.norm_sqr() > 0.0
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let tr = self.y11 + self.y22;
        let d = self.y11 - self.y22;
        (tr - (d * d + 4.0 * self.y12.norm_sqr()).sqrt()) / 2.0
    }
}

impl HermitianPoint {
    pub fn new(tau: Complex64, z: Complex64, w: Complex64, tau_prime: Complex64) -> Result<Self> {
        let p = Self::new_unchecked(tau, z, w, tau_prime);
        p.check()?;
        Ok(p)
    }

    pub fn new_unchecked(tau: Complex64, z: Complex64, w: Complex64, tau_prime: Complex64) -> Self {
        Self {
            tau,
            z,
            w,
            tau_prime,
        }
    }

    /// The point `[[τ, z], [z, τ′]]` on the locus `z = w`.
    pub fn on_diagonal(tau: Complex64, z: Complex64, tau_prime: Complex64) -> Result<Self> {
        Self::new(tau, z, z, tau_prime)
    }

    /// The point `[[τ, z], [−z, τ′]]` on the locus `z = −w`.
    pub fn on_antidiagonal(tau: Complex64, z: Complex64, tau_prime: Complex64) -> Result<Self> {
        Self::new(tau, z, -z, tau_prime)
    }

    /// `Y = (W − W̄ᵗ)/(2i)`.
    pub fn imag_part(&self) -> Hermitian2 {
        Hermitian2 {
            y11: self.tau.im,
            y22: self.tau_prime.im,
            y12: (self.z - self.w.conj()) / Complex64::new(0.0, 2.0),
        }
    }

    pub fn check(&self) -> Result<()> {
        let all = [self.tau, self.z, self.w, self.tau_prime];
        if all.iter().any(|c| !c.is_finite()) {
            return Err(Error::Inadmissible("non-finite entry".into()));
        }
        if !self.imag_part().is_positive_definite() {
            return Err(Error::Inadmissible(
                "imaginary part (W - W^*)/2i is not positive definite".into(),
            ));
        }
        Ok(())
    }

    pub fn as_matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.tau, self.z], [self.w, self.tau_prime]]
    }

    pub fn from_matrix(m: [[Complex64; 2]; 2]) -> Self {
        Self::new_unchecked(m[0][0], m[0][1], m[1][0], m[1][1])
    }

    pub fn siegel(&self) -> Option<SiegelPoint> {
        (self.z == self.w).then_some(SiegelPoint {
            tau: self.tau,
            z: self.z,
            tau_prime: self.tau_prime,
        })
    }
}

/// Symmetric `W0 = [[τ, z], [z, τ′]]` in the Siegel upper half-space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SiegelPoint {
    pub tau: Complex64,
    pub z: Complex64,
    pub tau_prime: Complex64,
}

impl SiegelPoint {
    pub fn new(tau: Complex64, z: Complex64, tau_prime: Complex64) -> Result<Self> {
        let p = Self { tau, z, tau_prime };
        if !p.imag_part().is_positive_definite() {
            return Err(Error::Inadmissible("Im W0 is not positive definite".into()));
        }
        Ok(p)
    }

    pub fn imag_part(&self) -> Hermitian2 {
        Hermitian2 {
            y11: self.tau.im,
            y22: self.tau_prime.im,
            y12: Complex64::new(self.z.im, 0.0),
        }
    }

    pub fn hermitian(&self) -> HermitianPoint {
        HermitianPoint::new_unchecked(self.tau, self.z, self.z, self.tau_prime)
    }
}

/// Box radius for a lattice sum: fixed, or chosen so the tail bound is at
/// most `tail_tol`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TruncationSpec {
    pub radius: Option<u32>,
    pub tail_tol: f64,
}

impl Default for TruncationSpec {
    fn default() -> Self {
        Self {
            radius: None,
            tail_tol: DEFAULT_TAIL_TOL,
        }
    }
}

impl TruncationSpec {
    pub fn fixed(radius: u32) -> Self {
        Self {
            radius: Some(radius),
            tail_tol: DEFAULT_TAIL_TOL,
        }
    }

    pub fn auto(tail_tol: f64) -> Self {
        Self {
            radius: None,
            tail_tol,
        }
    }
}

/// A truncated lattice sum with the radius used and its tail bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: Complex64,
    pub radius: u32,
    pub tail_bound: f64,
}

/// Point kind for the tail bound.
#[derive(Clone, Copy, Debug)]
pub enum AnyPoint<'a> {
    Hermitian(&'a HermitianPoint),
    Siegel(&'a SiegelPoint),
}

fn resolve_radius(point: AnyPoint<'_>, tr: &TruncationSpec) -> Result<(u32, f64)> {
    match tr.radius {
        Some(0) => Err(Error::Inadmissible("truncation radius must be at least 1".into())),
        Some(r) => Ok((r, tail_bound(point, r))),
        None => auto_radius(point, tr.tail_tol),
    }
}
