use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{resolve_radius, AnyPoint, Evaluation, SiegelPoint, TruncationSpec};
use crate::error::{Error, Result};

/// Even characteristic `(m, n)` with `m = (s, t)`, `n = (u, v)` in `{0,1}²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SiegelChar {
    pub index: usize,
    pub m: [i32; 2],
    pub n: [i32; 2],
}

/// The ten even characteristics, indexed `0..=9`.
pub const SIEGEL_CHARS: [([i32; 2], [i32; 2]); 10] = [
    ([0, 0], [0, 0]),
    ([1, 0], [0, 0]),
    ([0, 1], [0, 0]),
    ([1, 1], [0, 0]),
    ([0, 0], [1, 0]),
    ([0, 0], [0, 1]),
    ([0, 0], [1, 1]),
    ([1, 0], [0, 1]),
    ([0, 1], [1, 0]),
    ([1, 1], [1, 1]),
];

pub fn siegel_char(index: usize) -> Result<SiegelChar> {
    let (m, n) = *SIEGEL_CHARS.get(index).ok_or(Error::UnknownIndex(index))?;
    Ok(SiegelChar { index, m, n })
}

/// `ϑ_{m,n}(W0) = Σ_{(a,b)∈Z²} e^{πi·x·W0·xᵗ + 2πi·x·(n/2)ᵗ}`, `x = (a,b) + m/2`.
pub fn siegel_theta_eval(ch: &SiegelChar, w0: &SiegelPoint, tr: &TruncationSpec) -> Result<Evaluation> {
    if !w0.imag_part().is_positive_definite() {
        return Err(Error::Inadmissible("Im W0 is not positive definite".into()));
    }
    let (radius, tail_bound) = resolve_radius(AnyPoint::Siegel(w0), tr)?;
    let r = radius as i64;
    let [s, t] = ch.m.map(f64::from);
    let [u, v] = ch.n.map(f64::from);
    let i_pi = Complex64::new(0.0, PI);
    let mut sum = Complex64::new(0.0, 0.0);
    for a in -r..=r {
        let x = a as f64 + s / 2.0;
        for b in -r..=r {
            let y = b as f64 + t / 2.0;
            let q = w0.tau * (x * x) + w0.z * (2.0 * x * y) + w0.tau_prime * (y * y);
            sum += (i_pi * (q + x * u + y * v)).exp();
        }
    }
    Ok(Evaluation {
        value: sum,
        radius,
        tail_bound,
    })
}

pub fn siegel_theta(ch: &SiegelChar, w0: &SiegelPoint, tr: &TruncationSpec) -> Result<Complex64> {
    siegel_theta_eval(ch, w0, tr).map(|e| e.value)
}

/// `(ϑ_0, …, ϑ_9)` at one point.
pub fn siegel_thetas(w0: &SiegelPoint, tr: &TruncationSpec) -> Result<[Complex64; 10]> {
    let mut out = [Complex64::new(0.0, 0.0); 10];
    for (j, o) in out.iter_mut().enumerate() {
        *o = siegel_theta(&siegel_char(j)?, w0, tr)?;
    }
    Ok(out)
}
