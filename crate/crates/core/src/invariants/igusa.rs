//! Igusa's generators of the ring of genus-two Siegel modular forms, as
//! polynomials in the ten even theta constants.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IgusaName {
    Psi4,
    Psi6,
    Chi10,
    Chi12,
}

impl IgusaName {
    pub const ALL: [IgusaName; 4] = [Self::Psi4, Self::Psi6, Self::Chi10, Self::Chi12];

    pub fn weight(self) -> u32 {
        match self {
            Self::Psi4 => 4,
            Self::Psi6 => 6,
            Self::Chi10 => 10,
            Self::Chi12 => 12,
        }
    }
}

impl fmt::Display for IgusaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Psi4 => "psi4",
            Self::Psi6 => "psi6",
            Self::Chi10 => "chi10",
            Self::Chi12 => "chi12",
        })
    }
}

impl FromStr for IgusaName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown Igusa invariant `{s}`")))
    }
}

/// The 60 syzygous triples of even characteristics with their signs in
/// `ψ6 = 2⁻²·Σ ±(ϑ_a ϑ_b ϑ_c)⁴`.
///
/// Signs are fixed by invariance under `W0 ↦ W0 + S` and `W0 ↦ −W0⁻¹`, which
/// permute the `ϑ⁴` up to sign, together with `ψ6 = 1 + O(q)`.
pub const PSI6_TRIPLES: [(i8, [usize; 3]); 60] = [
    (1, [0, 1, 2]),
    (1, [0, 1, 3]),
    (-1, [0, 1, 5]),
    (-1, [0, 1, 7]),
    (1, [0, 2, 3]),
    (-1, [0, 2, 4]),
    (-1, [0, 2, 8]),
    (-1, [0, 3, 6]),
    (-1, [0, 3, 9]),
    (1, [0, 4, 5]),
    (1, [0, 4, 6]),
    (-1, [0, 4, 8]),
    (1, [0, 5, 6]),
    (-1, [0, 5, 7]),
    (-1, [0, 6, 9]),
    (1, [0, 7, 8]),
    (1, [0, 7, 9]),
    (1, [0, 8, 9]),
    (1, [1, 2, 3]),
    (1, [1, 2, 6]),
    (1, [1, 2, 9]),
    (1, [1, 3, 4]),
    (1, [1, 3, 8]),
    (1, [1, 4, 6]),
    (-1, [1, 4, 7]),
    (-1, [1, 4, 8]),
    (-1, [1, 5, 7]),
    (-1, [1, 5, 8]),
    (-1, [1, 5, 9]),
    (-1, [1, 6, 7]),
    (-1, [1, 6, 9]),
    (1, [1, 8, 9]),
    (1, [2, 3, 5]),
    (1, [2, 3, 7]),
    (-1, [2, 4, 7]),
    (-1, [2, 4, 8]),
    (-1, [2, 4, 9]),
    (1, [2, 5, 6]),
    (-1, [2, 5, 7]),
    (-1, [2, 5, 8]),
    (-1, [2, 6, 8]),
    (-1, [2, 6, 9]),
    (1, [2, 7, 9]),
    (1, [3, 4, 5]),
    (-1, [3, 4, 8]),
    (-1, [3, 4, 9]),
    (-1, [3, 5, 7]),
    (-1, [3, 5, 9]),
    (-1, [3, 6, 7]),
    (-1, [3, 6, 8]),
    (-1, [3, 6, 9]),
    (1, [3, 7, 8]),
    (1, [4, 5, 6]),
    (1, [4, 5, 9]),
    (1, [4, 6, 7]),
    (1, [4, 7, 9]),
    (1, [5, 6, 8]),
    (1, [5, 8, 9]),
    (1, [6, 7, 8]),
    (1, [7, 8, 9]),
];

/// Complements of the 15 Göpel quadruples: `χ12 = 2⁻¹⁷·3⁻¹·Σ (Π_{i∈C} ϑ_i)⁴`.
pub const GOPEL_COMPLEMENTS: [[usize; 6]; 15] = [
    [4, 5, 6, 7, 8, 9],
    [1, 2, 3, 7, 8, 9],
    [0, 2, 5, 6, 7, 9],
    [0, 1, 4, 6, 8, 9],
    [2, 3, 4, 6, 8, 9],
    [1, 3, 5, 6, 7, 9],
    [1, 2, 3, 4, 5, 6],
    [0, 2, 3, 5, 8, 9],
    [0, 1, 3, 4, 7, 9],
    [0, 3, 4, 5, 7, 8],
    [0, 1, 2, 6, 7, 8],
    [0, 2, 3, 4, 6, 7],
    [0, 1, 3, 5, 6, 8],
    [0, 1, 2, 4, 5, 9],
    [1, 2, 4, 5, 7, 8],
];

/// Evaluates an Igusa invariant from `(ϑ_0, …, ϑ_9)` at a common point.
pub fn igusa(name: IgusaName, th: &[Complex64; 10]) -> Complex64 {
    let p4 = th.map(|x| x * x * x * x);
    match name {
        IgusaName::Psi4 => p4.iter().map(|x| x * x).sum::<Complex64>() / 4.0,
        IgusaName::Psi6 => {
            PSI6_TRIPLES
                .iter()
                .map(|(s, [a, b, c])| p4[*a] * p4[*b] * p4[*c] * f64::from(*s))
                .sum::<Complex64>()
                / 4.0
        }
        IgusaName::Chi10 => -th.iter().map(|x| x * x).product::<Complex64>() / 2f64.powi(14),
        IgusaName::Chi12 => {
            GOPEL_COMPLEMENTS
                .iter()
                .map(|c| c.iter().map(|&i| p4[i]).product::<Complex64>())
                .sum::<Complex64>()
                / (2f64.powi(17) * 3.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::SIEGEL_CHARS;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn simple_values() {
        let mut th = [Complex64::new(0.0, 0.0); 10];
        th[0] = one();
        assert_eq!(igusa(IgusaName::Psi4, &th), Complex64::new(0.25, 0.0));
        assert_eq!(igusa(IgusaName::Chi10, &th), Complex64::new(0.0, 0.0));
        let ones = [one(); 10];
        let c12 = igusa(IgusaName::Chi12, &ones);
        assert!((c12.re - 15.0 / (2f64.powi(17) * 3.0)).abs() < 1e-18);
        assert_eq!(igusa(IgusaName::Chi10, &ones), Complex64::new(-1.0 / 16384.0, 0.0));
        assert_eq!("chi12".parse::<IgusaName>().unwrap(), IgusaName::Chi12);
    }

    fn char_vec(j: usize) -> [i32; 4] {
        let (m, n) = SIEGEL_CHARS[j];
        [m[0], m[1], n[0], n[1]]
    }

    fn is_even(v: [i32; 4]) -> bool {
        (v[0] * v[2] + v[1] * v[3]) % 2 == 0
    }

    #[test]
    fn triples_are_exactly_the_syzygous_ones() {
        let mut expected = Vec::new();
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    let s: Vec<i32> = (0..4)
                        .map(|i| (char_vec(a)[i] + char_vec(b)[i] + char_vec(c)[i]) % 2)
                        .collect();
                    if is_even([s[0], s[1], s[2], s[3]]) {
                        expected.push([a, b, c]);
                    }
                }
            }
        }
        let listed: Vec<[usize; 3]> = PSI6_TRIPLES.iter().map(|t| t.1).collect();
        assert_eq!(listed, expected);
        // all ten characteristics are even
        assert!((0..10).all(|j| is_even(char_vec(j))));
    }

    #[test]
    fn gopel_complements_are_distinct_sextuples() {
        for (i, c) in GOPEL_COMPLEMENTS.iter().enumerate() {
            assert!(c.windows(2).all(|w| w[0] < w[1]));
            assert!(GOPEL_COMPLEMENTS[..i].iter().all(|d| d != c));
        }
    }
}
