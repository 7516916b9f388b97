//! Moduli coordinates: Igusa and Burkhardt invariants, the discriminant
//! `d90`, the Clingher–Doran correspondence and the inverse period map
//! `W ↦ (t4 : t6 : t10 : t12 : t18)`.

mod burkhardt;
mod d90;
mod igusa;

pub use burkhardt::{
    bracket_eval, burkhardt_B, burkhardt_all, burkhardt_brackets, burkhardt_monomials, monomial_eval,
    BracketSpec, BURKHARDT_WEIGHTS,
};
pub use d90::{d90, d90_relative, d90_scale, d90_static_check, weighted_degree, StaticCheck, D90_TERMS};
pub use igusa::{igusa, IgusaName, GOPEL_COMPLEMENTS, PSI6_TRIPLES};

use num_complex::Complex64;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::theta::{hermitian_thetas, siegel_thetas, HermitianPoint, SiegelPoint, TruncationSpec};

pub const WEIGHTS: [u32; 5] = [4, 6, 10, 12, 18];

/// Constants `c_k` with `t_k = c_k·B_k(Θ(W))`.
pub const PERIOD_MAP_CONSTANTS: [f64; 5] = [-3.0, -2.0, 1536.0, 512.0, -65536.0];

/// Point of `P(4, 6, 10, 12, 18)` given by a representative `(t4, …, t18)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedPoint {
    pub t: [Complex64; 5],
}

impl WeightedPoint {
    pub fn new(t: [Complex64; 5]) -> Self {
        Self { t }
    }

    pub fn from_re(t: [f64; 5]) -> Self {
        Self::new(t.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(|x| *x == Complex64::new(0.0, 0.0))
    }

    /// `λ·t = (λ⁴t4, λ⁶t6, …)`.
    pub fn scaled(&self, lambda: Complex64) -> Self {
        let mut t = self.t;
        for (x, w) in t.iter_mut().zip(WEIGHTS) {
            *x *= lambda.powu(w);
        }
        Self { t }
    }

    /// `max_k |t_k|^{1/k}`.
    pub fn weighted_norm(&self) -> f64 {
        self.t
            .iter()
            .zip(WEIGHTS)
            .map(|(x, w)| x.norm().powf(1.0 / w as f64))
            .fold(0.0, f64::max)
    }

    /// Representative with `max_k |t_k|^{1/k} = 1`, obtained by a positive
    /// real rescaling.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.weighted_norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroPoint);
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }
}

impl Serialize for WeightedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WeightedPoint", 2)?;
        st.serialize_field("t", &self.t.map(|x| [x.re, x.im]))?;
        st.serialize_field("weights", &WEIGHTS)?;
        st.end()
    }
}

/// `(α : β : γ : δ) ∈ P(2, 3, 5, 6)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CDPoint {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

/// `(ψ4 : ψ6 : 2¹²3⁵χ10 : 2¹²3⁶χ12)` at a Siegel point.
pub fn clingher_doran_map(w0: &SiegelPoint, tr: &TruncationSpec) -> Result<CDPoint> {
    let th = siegel_thetas(w0, tr)?;
    Ok(cd_from_thetas(&th))
}

pub fn cd_from_thetas(th: &[Complex64; 10]) -> CDPoint {
    let s = 4096.0 * 243.0;
    CDPoint {
        alpha: igusa(IgusaName::Psi4, th),
        beta: igusa(IgusaName::Psi6, th),
        gamma: igusa(IgusaName::Chi10, th) * s,
        delta: igusa(IgusaName::Chi12, th) * (s * 3.0),
    }
}

/// `t = (−3α, −2β, −γ, δ, 0)`.
pub fn embed_cd(p: &CDPoint) -> WeightedPoint {
    WeightedPoint::new([
        p.alpha * -3.0,
        p.beta * -2.0,
        -p.gamma,
        p.delta,
        Complex64::new(0.0, 0.0),
    ])
}

/// `(−3B4 : −2B6 : 2⁹·3·B10 : 2⁹B12 : −2¹⁶B18)` evaluated on `Θ(W)`.
pub fn inverse_period_map(w: &HermitianPoint, tr: &TruncationSpec) -> Result<WeightedPoint> {
    Ok(period_point_from_thetas(&hermitian_thetas(w, tr)?))
}

pub fn period_point_from_thetas(th: &[Complex64; 5]) -> WeightedPoint {
    let b = burkhardt_all(th);
    let mut t = [Complex64::new(0.0, 0.0); 5];
    for k in 0..5 {
        t[k] = b[k] * PERIOD_MAP_CONSTANTS[k];
    }
    WeightedPoint::new(t)
}

const HALF_WEIGHTS: [u32; 5] = [2, 3, 5, 6, 9];

/// Checks `b_k = μ^{k/2}·a_k` for all `k` with a common `μ`, comparing
/// normalized representatives componentwise: a component matches if its
/// error is at most `tol` times its size, or both sides are below `tol`.
pub fn weighted_projective_eq(a: &WeightedPoint, b: &WeightedPoint, tol: f64) -> Result<bool> {
    let a = a.normalized()?;
    let b = b.normalized()?;
    let matches = |mu: Complex64| {
        (0..5).all(|k| {
            let lhs = b.t[k];
            let rhs = a.t[k] * mu.powu(HALF_WEIGHTS[k]);
            let size = lhs.norm().max(rhs.norm());
            size <= tol || (lhs - rhs).norm() <= tol * size
        })
    };
    let support: Vec<usize> = (0..5)
        .filter(|&k| a.t[k].norm().max(b.t[k].norm()) > tol)
        .collect();
    for &k in &support {
        if a.t[k].norm() <= tol || b.t[k].norm() <= tol {
            return Ok(false);
        }
    }
    // coprime pair with the best-conditioned ratios: μ = r_i^x·r_j^y, x·h_i + y·h_j = 1
    let mut best: Option<(f64, usize, usize)> = None;
    for (n, &i) in support.iter().enumerate() {
        for &j in &support[n + 1..] {
            if HALF_WEIGHTS[i].gcd(&HALF_WEIGHTS[j]) == 1 {
                let size = a.t[i].norm().min(a.t[j].norm());
                if best.map_or(true, |(s, _, _)| size > s) {
                    best = Some((size, i, j));
                }
            }
        }
    }
    if let Some((_, i, j)) = best {
        let (hi, hj) = (HALF_WEIGHTS[i] as i64, HALF_WEIGHTS[j] as i64);
        let e = hi.extended_gcd(&hj);
        let ri = b.t[i] / a.t[i];
        let rj = b.t[j] / a.t[j];
        let mu = ri.powi(e.x as i32) * rj.powi(e.y as i32);
        if matches(mu) {
            return Ok(true);
        }
    }
    // fallback: every h-th root of the ratio at the largest component
    let Some(&k) = support
        .iter()
        .max_by(|&&i, &&j| a.t[i].norm().total_cmp(&a.t[j].norm()))
    else {
        return Ok(true);
    };
    let h = HALF_WEIGHTS[k];
    let r = b.t[k] / a.t[k];
    let base = r.powf(1.0 / h as f64);
    let found = (0..h).any(|m| {
        let root = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * m as f64 / h as f64);
        matches(base * root)
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn d90_values() {
        assert_eq!(d90(&WeightedPoint::from_re([0.0, 0.0, 1.0, 0.0, 0.0])), c(3125.0, 0.0));
        assert_eq!(d90(&WeightedPoint::from_re([0.0, 0.0, 0.0, 0.0, 1.0])), c(14348907.0, 0.0));
        assert_eq!(d90(&WeightedPoint::from_re([0.0, 0.0, 0.0, 1.0, 0.0])), c(0.0, 0.0));
        let s = d90_static_check();
        assert!(s.passed(), "{s:?}");
        assert_eq!(s.monomials, 102);
        assert!(D90_TERMS.contains(&(1024, [9, 0, 0, 0, 3])));
    }

    #[test]
    fn cd_embedding() {
        let one = c(1.0, 0.0);
        let p = CDPoint {
            alpha: one,
            beta: one,
            gamma: one,
            delta: one,
        };
        assert_eq!(embed_cd(&p), WeightedPoint::from_re([-3.0, -2.0, -1.0, 1.0, 0.0]));
        let q = CDPoint {
            alpha: c(0.0, 0.0),
            beta: c(0.0, 0.0),
            gamma: one,
            delta: c(0.0, 0.0),
        };
        assert_eq!(embed_cd(&q), WeightedPoint::from_re([0.0, 0.0, -1.0, 0.0, 0.0]));
        // weights (2,3,5,6) on the CD side become (4,6,10,12) after embedding
        let l = c(0.7, 0.4);
        let ps = CDPoint {
            alpha: p.alpha * l.powu(2),
            beta: c(2.0, 0.0) * l.powu(3),
            gamma: c(-1.0, 1.0) * l.powu(5),
            delta: c(0.5, 0.0) * l.powu(6),
        };
        let base = CDPoint {
            alpha: one,
            beta: c(2.0, 0.0),
            gamma: c(-1.0, 1.0),
            delta: c(0.5, 0.0),
        };
        assert!(weighted_projective_eq(&embed_cd(&ps), &embed_cd(&base), 1e-12).unwrap());
    }

    #[test]
    fn weighted_equality() {
        let t = WeightedPoint::new([c(1.0, 0.5), c(-2.0, 0.1), c(0.3, 0.3), c(1.5, -1.0), c(0.2, 0.0)]);
        assert!(weighted_projective_eq(&t, &t.scaled(c(2.0, 0.0)), 1e-12).unwrap());
        assert!(weighted_projective_eq(&t, &t.scaled(c(0.3, -1.1)), 1e-12).unwrap());
        // λ = i has λ² = −1: t_k ↦ (−1)^{k/2} t_k
        assert!(weighted_projective_eq(&t, &t.scaled(c(0.0, 1.0)), 1e-12).unwrap());
        let mut p = t;
        p.t[2] *= 1.0 + 1e-11;
        assert!(!weighted_projective_eq(&t, &p, 1e-12).unwrap());
        let a = WeightedPoint::from_re([1.0, 1.0, 0.0, 0.0, 0.0]);
        let b = WeightedPoint::from_re([16.0, 64.0, 0.0, 0.0, 0.0]);
        assert!(weighted_projective_eq(&a, &b, 1e-12).unwrap());
        let b2 = WeightedPoint::from_re([16.0, 64.0, 1.0, 0.0, 0.0]);
        assert!(!weighted_projective_eq(&a, &b2, 1e-12).unwrap());
        let z = WeightedPoint::from_re([0.0; 5]);
        assert_eq!(weighted_projective_eq(&z, &a, 1e-9), Err(Error::ZeroPoint));
        // only t4 nonzero: any λ works
        let a = WeightedPoint::from_re([2.0, 0.0, 0.0, 0.0, 0.0]);
        let b = WeightedPoint::from_re([-7.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(weighted_projective_eq(&a, &b, 1e-12).unwrap());
        // t6 alone: μ³ = ratio always solvable
        let a = WeightedPoint::from_re([0.0, 0.0, 0.0, 0.0, 3.0]);
        let b = WeightedPoint::from_re([0.0, 0.0, 0.0, 0.0, -1.0]);
        assert!(weighted_projective_eq(&a, &b, 1e-12).unwrap());
    }

    #[test]
    fn serialization() {
        let s = serde_json::to_string(&WeightedPoint::from_re([1.0, 0.0, 0.0, 0.0, -2.5])).unwrap();
        assert_eq!(
            s,
            r#"{"t":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0],[-2.5,0.0]],"weights":[4,6,10,12,18]}"#
        );
    }

    fn cplx() -> impl Strategy<Value = Complex64> {
        (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| c(a, b))
    }

    fn five() -> impl Strategy<Value = [Complex64; 5]> {
        proptest::array::uniform5(cplx())
    }

    proptest! {
        #[test]
        fn burkhardt_homogeneity(t in five(), s in cplx()) {
            prop_assume!(s.norm() > 0.1);
            for j in BURKHARDT_WEIGHTS {
                let lhs = burkhardt_B(j, &t.map(|x| x * s)).unwrap();
                let rhs = burkhardt_B(j, &t).unwrap() * s.powu(j);
                let scale = burkhardt_monomials(j).unwrap().iter()
                    .map(|(c, e)| c.abs() as f64 * monomial_eval(e, &t.map(|x| x * s)).norm())
                    .sum::<f64>();
                prop_assert!((lhs - rhs).norm() <= 1e-12 * scale.max(1e-300));
            }
        }

        #[test]
        fn d90_homogeneity(t in five(), l in cplx()) {
            prop_assume!(l.norm() > 0.5);
            let p = WeightedPoint::new(t);
            let lhs = d90(&p.scaled(l));
            let rhs = d90(&p) * l.powu(90);
            let scale: f64 = D90_TERMS.iter().map(|(c, e)| {
                (*c as f64).abs() * e.iter().zip(p.scaled(l).t).map(|(&k, x)| x.norm().powi(k as i32)).product::<f64>()
            }).sum();
            prop_assert!((lhs - rhs).norm() <= 1e-10 * scale.max(1e-300));
        }
    }
}
