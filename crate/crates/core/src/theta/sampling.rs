use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{HermitianPoint, SiegelPoint};
use crate::error::Error;

/// Where sampled points live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Locus {
    Generic,
    /// `z = w`
    Diagonal,
    /// `z = −w`
    Antidiagonal,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Generic => "generic",
            Self::Diagonal => "z=w",
            Self::Antidiagonal => "z=-w",
        })
    }
}

impl FromStr for Locus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "generic" => Ok(Self::Generic),
            "z=w" | "zw" => Ok(Self::Diagonal),
            "z=-w" | "zmw" => Ok(Self::Antidiagonal),
            _ => Err(Error::Parse(format!("unknown locus `{s}`"))),
        }
    }
}

const MIN_EIGENVALUE: f64 = 0.4;
const Z_RADIUS: f64 = 0.3;

fn upper(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-0.5..=0.5), rng.gen_range(1.0..=2.0))
}

fn disc(rng: &mut ChaCha8Rng) -> Complex64 {
    // rejection sampling keeps the distribution uniform on the disc
    loop {
        let z = Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        if z.norm() <= 1.0 {
            return z * Z_RADIUS;
        }
    }
}

/// Reproducible sample of points with `Re τ, Re τ′ ∈ [−1/2, 1/2]`,
/// `Im τ, Im τ′ ∈ [1, 2]`, `|z|, |w| ≤ 0.3` and `Y ⪰ 0.4·I`.
pub fn sample_points(seed: u64, count: usize, locus: Locus) -> Vec<HermitianPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let tau = upper(&mut rng);
        let tau_prime = upper(&mut rng);
        let z = disc(&mut rng);
        let w = match locus {
            Locus::Generic => disc(&mut rng),
            Locus::Diagonal => z,
            Locus::Antidiagonal => -z,
        };
        let p = HermitianPoint::new_unchecked(tau, z, w, tau_prime);
        if p.imag_part().min_eigenvalue() >= MIN_EIGENVALUE {
            out.push(p);
        }
    }
    out
}

pub fn sample_siegel_points(seed: u64, count: usize) -> Vec<SiegelPoint> {
    sample_points(seed, count, Locus::Diagonal)
        .into_iter()
        .map(|p| SiegelPoint {
            tau: p.tau,
            z: p.z,
            tau_prime: p.tau_prime,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_admissible() {
        let a = sample_points(7, 20, Locus::Generic);
        assert_eq!(a, sample_points(7, 20, Locus::Generic));
        assert_ne!(a, sample_points(8, 20, Locus::Generic));
        for p in &a {
            assert!(p.imag_part().min_eigenvalue() >= 0.4);
            assert!(p.z.norm() <= 0.3 && p.w.norm() <= 0.3);
        }
        assert!(sample_points(1, 5, Locus::Antidiagonal).iter().all(|p| p.w == -p.z));
        assert_eq!("z=-w".parse::<Locus>().unwrap(), Locus::Antidiagonal);
    }
}
