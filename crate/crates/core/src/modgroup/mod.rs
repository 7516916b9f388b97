//! The Hermitian modular group over the Eisenstein integers: its action on
//! the half-space, the slash operator, the representation on the five theta
//! functions, and the isomorphism with the type IV domain of `U ⊕ U ⊕ A2(−1)`.

mod closure;
mod domain;
mod rep;

pub use closure::{closure_text, group_closure, molien_closed_form, molien_series, GroupClosure, MolienSeries};
pub use domain::{
    equivariance_residual, hermitian_norm, modular_iso_f, modular_iso_finv, orth_images, quadric, DomainPoint,
    OrthGenerator,
};
pub use rep::{psi_generators, psi_matrix, Rep5Matrix};

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::EisensteinInt;
use crate::theta::{hermitian_thetas, HermitianPoint, TruncationSpec};

/// The four generators `M1, M2, M3` (translations by `S1, S2, S3`) and `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    M1,
    M2,
    M3,
    J,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Self::M1, Self::M2, Self::M3, Self::J];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))
    }
}

/// 4×4 matrix over `Z[ω]` with 2×2 blocks `[[A, B], [C, D]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularMatrix(pub [[EisensteinInt; 4]; 4]);

fn eis(a: i64) -> EisensteinInt {
    EisensteinInt::from(a)
}

impl ModularMatrix {
    pub fn from_ints(m: [[i64; 4]; 4]) -> Self {
        Self(m.map(|r| r.map(eis)))
    }

    pub fn identity() -> Self {
        let mut m = [[0; 4]; 4];
        for (i, r) in m.iter_mut().enumerate() {
            r[i] = 1;
        }
        Self::from_ints(m)
    }

    pub fn generator(g: Generator) -> Self {
        let translation = |s: [[i64; 2]; 2]| {
            Self::from_ints([
                [1, 0, s[0][0], s[0][1]],
                [0, 1, s[1][0], s[1][1]],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
            ])
        };
        match g {
            Generator::M1 => translation([[1, 0], [0, 0]]),
            Generator::M2 => translation([[0, 0], [0, 1]]),
            Generator::M3 => translation([[0, 1], [1, 0]]),
            Generator::J => Self::from_ints([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out: [[EisensteinInt; 4]; 4] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                for k in 0..4 {
                    *x = &*x + &(&self.0[i][k] * &o.0[k][j]);
                }
            }
        }
        Self(out)
    }

    fn conj_transpose(&self) -> Self {
        let mut out: [[EisensteinInt; 4]; 4] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.0[j][i].conj();
            }
        }
        Self(out)
    }

    /// `M·J·M̄ᵗ = J` exactly.
    pub fn is_hermitian_symplectic(&self) -> bool {
        let j = Self::generator(Generator::J);
        self.mul(&j).mul(&self.conj_transpose()) == j
    }

    fn blocks(&self) -> [[[Complex64; 2]; 2]; 4] {
        let b = |r0: usize, c0: usize| {
            [
                [self.0[r0][c0].to_c64(), self.0[r0][c0 + 1].to_c64()],
                [self.0[r0 + 1][c0].to_c64(), self.0[r0 + 1][c0 + 1].to_c64()],
            ]
        };
        [b(0, 0), b(0, 2), b(2, 0), b(2, 2)]
    }
}

pub fn check_symplectic_hermitian(m: &ModularMatrix) -> bool {
    m.is_hermitian_symplectic()
}

type C2 = [[Complex64; 2]; 2];

fn m2mul(a: &C2, b: &C2) -> C2 {
    let mut c = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn m2add(a: &C2, b: &C2) -> C2 {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

fn m2det(a: &C2) -> Complex64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// `(CW + D, (AW + B)(CW + D)⁻¹)`.
fn act_parts(m: &ModularMatrix, w: &HermitianPoint) -> Result<(Complex64, HermitianPoint)> {
    let [a, b, c, d] = m.blocks();
    let wm = w.as_matrix();
    let num = m2add(&m2mul(&a, &wm), &b);
    let den = m2add(&m2mul(&c, &wm), &d);
    let det = m2det(&den);
    let scale = den.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max);
    if det.norm() <= 1e-14 * scale * scale {
        return Err(Error::SingularAction);
    }
    let inv = [[den[1][1] / det, -den[0][1] / det], [-den[1][0] / det, den[0][0] / det]];
    Ok((det, HermitianPoint::from_matrix(m2mul(&num, &inv))))
}

/// `W ↦ (AW + B)(CW + D)⁻¹`.
pub fn act(m: &ModularMatrix, w: &HermitianPoint) -> Result<HermitianPoint> {
    let (_, out) = act_parts(m, w)?;
    out.check()?;
    Ok(out)
}

/// `det(CW + D)`.
pub fn automorphy_factor(m: &ModularMatrix, w: &HermitianPoint) -> Result<Complex64> {
    act_parts(m, w).map(|p| p.0)
}

/// `(f|_k M)(W) = det(CW + D)^{−k}·f(M⟨W⟩)`.
pub fn slash<F>(f: F, k: i32, m: &ModularMatrix, w: &HermitianPoint) -> Result<Complex64>
where
    F: Fn(&HermitianPoint) -> Result<Complex64>,
{
    let (det, img) = act_parts(m, w)?;
    img.check()?;
    Ok(f(&img)? * det.powi(-k))
}

/// Max-norm residual of `det(CW+D)⁻¹·Θ(M⟨W⟩) = Ψ(M)·Θ(W)`.
pub fn theta_transform_residual(g: Generator, w: &HermitianPoint, tr: &TruncationSpec) -> Result<f64> {
    let m = ModularMatrix::generator(g);
    let (det, img) = act_parts(&m, w)?;
    img.check()?;
    let lhs = hermitian_thetas(&img, tr)?.map(|x| x / det);
    let th = hermitian_thetas(w, tr)?;
    let psi = psi_matrix(g).to_c64();
    let mut res: f64 = 0.0;
    for i in 0..5 {
        let rhs: Complex64 = (0..5).map(|j| psi[i][j] * th[j]).sum();
        res = res.max((lhs[i] - rhs).norm());
    }
    Ok(res)
}

pub fn verify_theta_transform(g: Generator, w: &HermitianPoint, tr: &TruncationSpec, tol: f64) -> Result<bool> {
    Ok(theta_transform_residual(g, w, tr)? < tol)
}
