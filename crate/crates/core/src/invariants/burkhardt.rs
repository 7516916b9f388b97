//! Burkhardt's invariants of the 5-dimensional reflection representation,
//! written in bracket notation.

use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// `(n0; n1, n2, n3, n4) = T0^{n0}·Σ T1^{m1} T2^{m2} T3^{m3} T4^{m4}`, summed
/// over the distinct rearrangements `(m1..m4)` of `(n1..n4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BracketSpec {
    pub n0: u32,
    pub n: [u32; 4],
}

impl BracketSpec {
    /// Missing trailing entries are zero; `n` must be non-increasing.
    pub fn new(n0: u32, n: &[u32]) -> Result<Self> {
        if n.len() > 4 {
            return Err(Error::Parse(format!("bracket has {} exponents, at most 4", n.len())));
        }
        if n.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("bracket exponents {n:?} are not non-increasing")));
        }
        let mut arr = [0; 4];
        arr[..n.len()].copy_from_slice(n);
        Ok(Self { n0, n: arr })
    }

    pub fn degree(&self) -> u32 {
        self.n0 + self.n.iter().sum::<u32>()
    }

    /// Exponent vectors `[n0, m1, m2, m3, m4]`, each distinct rearrangement once.
    pub fn monomials(&self) -> Vec<[u32; 5]> {
        let mut seen = BTreeSet::new();
        let idx = [0, 1, 2, 3];
        for a in idx {
            for b in idx {
                for c in idx {
                    for d in idx {
                        let p = [a, b, c, d];
                        if (0..4).all(|i| (0..i).all(|j| p[i] != p[j])) {
                            seen.insert([self.n0, self.n[a], self.n[b], self.n[c], self.n[d]]);
                        }
                    }
                }
            }
        }
        seen.into_iter().collect()
    }
}

pub fn monomial_eval(e: &[u32; 5], t: &[Complex64; 5]) -> Complex64 {
    e.iter()
        .zip(t)
        .fold(Complex64::new(1.0, 0.0), |acc, (&k, x)| acc * x.powu(k))
}

pub fn bracket_eval(spec: &BracketSpec, t: &[Complex64; 5]) -> Complex64 {
    spec.monomials().iter().map(|e| monomial_eval(e, t)).sum()
}

type Row = (i64, u32, &'static [u32]);

const B4: &[Row] = &[(1, 4, &[]), (8, 1, &[3]), (48, 0, &[1, 1, 1, 1])];

const B6: &[Row] = &[
    (1, 6, &[]),
    (-20, 3, &[3]),
    (360, 2, &[1, 1, 1, 1]),
    (80, 0, &[3, 3]),
    (-8, 0, &[6]),
];

const B10: &[Row] = &[
    (1, 6, &[1, 1, 1, 1]),
    (-1, 4, &[3, 3]),
    (1, 3, &[4, 1, 1, 1]),
    (9, 2, &[2, 2, 2, 2]),
    (1, 1, &[6, 3]),
    (-6, 1, &[3, 3, 3]),
    (-2, 0, &[7, 1, 1, 1]),
    (2, 0, &[4, 4, 1, 1]),
];

const B12: &[Row] = &[
    (3, 8, &[1, 1, 1, 1]),
    (5, 6, &[3, 3]),
    (-33, 5, &[4, 1, 1, 1]),
    (243, 4, &[2, 2, 2, 2]),
    (-1, 3, &[6, 3]),
    (-102, 3, &[3, 3, 3]),
    (30, 2, &[7, 1, 1, 1]),
    (78, 2, &[4, 4, 1, 1]),
    (-108, 1, &[5, 2, 2, 2]),
    (-4, 0, &[9, 3]),
    (16, 0, &[6, 6]),
    (-8, 0, &[6, 3, 3]),
    (168, 0, &[3, 3, 3, 3]),
];

const B18: &[Row] = &[
    (3, 10, &[2, 2, 2, 2]),
    (-4, 9, &[3, 3, 3]),
    (6, 8, &[4, 4, 1, 1]),
    (-18, 7, &[5, 2, 2, 2]),
    (-1, 6, &[6, 6]),
    (10, 6, &[6, 3, 3]),
    (96, 6, &[3, 3, 3, 3]),
    (-12, 5, &[7, 4, 1, 1]),
    (-90, 5, &[4, 4, 4, 1]),
    (27, 4, &[8, 2, 2, 2]),
    (108, 4, &[5, 5, 2, 2]),
    (2, 3, &[9, 6]),
    (-8, 3, &[9, 3, 3]),
    (4, 3, &[6, 6, 3]),
    (-168, 3, &[6, 3, 3, 3]),
    (6, 2, &[10, 4, 1, 1]),
    (-24, 2, &[7, 7, 1, 1]),
    (12, 2, &[7, 4, 4, 1]),
    (315, 2, &[4, 4, 4, 4]),
    (-12, 1, &[11, 2, 2, 2]),
    (18, 1, &[8, 5, 2, 2]),
    (-72, 1, &[5, 5, 5, 2]),
    (-1, 0, &[12, 6]),
    (2, 0, &[12, 3, 3]),
    (2, 0, &[9, 9]),
    (-2, 0, &[9, 6, 3]),
    (-8, 0, &[9, 3, 3, 3]),
    (6, 0, &[6, 6, 6]),
    (8, 0, &[6, 6, 3, 3]),
];

pub const BURKHARDT_WEIGHTS: [u32; 5] = [4, 6, 10, 12, 18];

/// `B_j` as a list of `(coefficient, bracket)`.
pub fn burkhardt_brackets(j: u32) -> Result<Vec<(i64, BracketSpec)>> {
    let rows = match j {
        4 => B4,
        6 => B6,
        10 => B10,
        12 => B12,
        18 => B18,
        _ => return Err(Error::UnknownWeight(j)),
    };
    Ok(rows
        .iter()
        .map(|&(c, n0, n)| (c, BracketSpec::new(n0, n).expect("table brackets are well formed")))
        .collect())
}

/// `B_j` expanded into `(coefficient, exponent vector)` pairs.
pub fn burkhardt_monomials(j: u32) -> Result<Vec<(i64, [u32; 5])>> {
    Ok(burkhardt_brackets(j)?
        .into_iter()
        .flat_map(|(c, b)| b.monomials().into_iter().map(move |e| (c, e)))
        .collect())
}

#[allow(non_snake_case)]
pub fn burkhardt_B(j: u32, t: &[Complex64; 5]) -> Result<Complex64> {
    Ok(burkhardt_brackets(j)?
        .iter()
        .map(|(c, b)| bracket_eval(b, t) * (*c as f64))
        .sum())
}

/// `(B4, B6, B10, B12, B18)` at one point.
pub fn burkhardt_all(t: &[Complex64; 5]) -> [Complex64; 5] {
    BURKHARDT_WEIGHTS.map(|j| burkhardt_B(j, t).expect("known weight"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: [f64; 5]) -> [Complex64; 5] {
        x.map(|r| Complex64::new(r, 0.0))
    }

    #[test]
    fn brackets() {
        let b = BracketSpec::new(4, &[]).unwrap();
        assert_eq!(bracket_eval(&b, &v([2.0, 5.0, 5.0, 5.0, 5.0])), Complex64::new(16.0, 0.0));
        let b = BracketSpec::new(0, &[3, 3]).unwrap();
        assert_eq!(b.monomials().len(), 6);
        assert_eq!(bracket_eval(&b, &v([7.0, 1.0, 1.0, 1.0, 1.0])), Complex64::new(6.0, 0.0));
        let b = BracketSpec::new(1, &[3]).unwrap();
        assert_eq!(bracket_eval(&b, &v([1.0, 1.0, 2.0, 0.0, 0.0])), Complex64::new(9.0, 0.0));
        assert!(BracketSpec::new(0, &[1, 3]).is_err());
        assert_eq!(BracketSpec::new(0, &[4, 1, 1, 1]).unwrap().monomials().len(), 4);
    }

    #[test]
    fn small_values() {
        let e0 = v([1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(burkhardt_B(4, &e0).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(burkhardt_B(6, &e0).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(burkhardt_B(4, &v([0.0, 1.0, 1.0, 1.0, 1.0])).unwrap(), Complex64::new(48.0, 0.0));
        assert_eq!(burkhardt_B(8, &e0), Err(Error::UnknownWeight(8)));
    }

    #[test]
    fn monomials_are_homogeneous_and_distinct() {
        let counts = [6, 16, 38, 73, 219];
        for (j, n) in BURKHARDT_WEIGHTS.into_iter().zip(counts) {
            let m = burkhardt_monomials(j).unwrap();
            assert_eq!(m.len(), n, "B{j}");
            assert!(m.iter().all(|(_, e)| e.iter().sum::<u32>() == j));
            let set: BTreeSet<_> = m.iter().map(|(_, e)| *e).collect();
            assert_eq!(set.len(), m.len());
        }
    }
}
