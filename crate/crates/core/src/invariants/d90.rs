//! The weight-90 discriminant `d90(t4, t6, t10, t12, t18)`.

use num_complex::Complex64;
use serde::Serialize;

use super::{WeightedPoint, WEIGHTS};

/// `(coefficient, [e4, e6, e10, e12, e18])`.
pub const D90_TERMS: [(i64, [u32; 5]); 102] = [
    (3125, [0, 0, 9, 0, 0]),
    (11664, [0, 0, 3, 5, 0]),
    (151875, [0, 0, 6, 1, 1]),
    (314928, [0, 0, 0, 6, 1]),
    (1968300, [0, 0, 3, 2, 2]),
    (4251528, [0, 0, 0, 3, 3]),
    (14348907, [0, 0, 0, 0, 5]),
    (16200, [1, 0, 5, 3, 0]),
    (472392, [1, 0, 2, 4, 1]),
    (-273375, [1, 0, 5, 0, 2]),
    (-5314410, [1, 0, 2, 1, 3]),
    (4125, [2, 0, 7, 1, 0]),
    (108135, [2, 0, 4, 2, 1]),
    (-1259712, [2, 0, 1, 3, 2]),
    (4251528, [2, 0, 1, 0, 4]),
    (864, [3, 0, 3, 4, 0]),
    (-3525, [3, 0, 6, 0, 1]),
    (23328, [3, 0, 0, 5, 1]),
    (-378108, [3, 0, 3, 1, 2]),
    (1102248, [3, 0, 0, 2, 3]),
    (888, [4, 0, 5, 2, 0]),
    (26568, [4, 0, 2, 3, 1]),
    (227448, [4, 0, 2, 0, 3]),
    (16, [5, 0, 7, 0, 0]),
    (-456, [5, 0, 4, 1, 1]),
    (-85536, [5, 0, 1, 2, 2]),
    (16, [6, 0, 3, 3, 0]),
    (432, [6, 0, 0, 4, 1]),
    (-1056, [6, 0, 3, 0, 2]),
    (62208, [6, 0, 0, 1, 3]),
    (16, [7, 0, 5, 1, 0]),
    (480, [7, 0, 2, 2, 1]),
    (-16, [8, 0, 4, 0, 1]),
    (-1536, [8, 0, 1, 1, 2]),
    (1024, [9, 0, 0, 0, 3]),
    (-13500, [0, 1, 6, 2, 0]),
    (-481140, [0, 1, 3, 3, 1]),
    (-2834352, [0, 1, 0, 4, 2]),
    (-1476225, [0, 1, 3, 0, 3]),
    (-19131876, [0, 1, 0, 1, 4]),
    (-5625, [1, 1, 8, 0, 0]),
    (-200475, [1, 1, 5, 1, 1]),
    (-236196, [1, 1, 2, 2, 2]),
    (-2592, [2, 1, 4, 3, 0]),
    (-69984, [2, 1, 1, 4, 1]),
    (422820, [2, 1, 4, 0, 2]),
    (944784, [2, 1, 1, 1, 3]),
    (-3420, [3, 1, 6, 1, 0]),
    (-107460, [3, 1, 3, 2, 1]),
    (-174960, [3, 1, 0, 3, 2]),
    (-1889568, [3, 1, 0, 0, 4]),
    (2772, [4, 1, 5, 0, 1]),
    (314928, [4, 1, 2, 1, 2]),
    (-186624, [5, 1, 1, 0, 3]),
    (-16, [6, 1, 6, 0, 0]),
    (-576, [6, 1, 3, 1, 1]),
    (-3456, [6, 1, 0, 2, 2]),
    (1152, [7, 1, 2, 0, 2]),
    (-5832, [0, 2, 3, 4, 0]),
    (-10125, [0, 2, 6, 0, 1]),
    (-157464, [0, 2, 0, 5, 1]),
    (-295245, [0, 2, 3, 1, 2]),
    (5314410, [0, 2, 0, 2, 3]),
    (-5670, [1, 2, 5, 2, 0]),
    (-170586, [1, 2, 2, 3, 1]),
    (3188646, [1, 2, 2, 0, 3]),
    (2700, [2, 2, 7, 0, 0]),
    (101898, [2, 2, 4, 1, 1]),
    (1102248, [2, 2, 1, 2, 2]),
    (216, [3, 2, 3, 3, 0]),
    (5832, [3, 2, 0, 4, 1]),
    (-195048, [3, 2, 3, 0, 2]),
    (216, [4, 2, 5, 1, 0]),
    (6480, [4, 2, 2, 2, 1]),
    (-216, [5, 2, 4, 0, 1]),
    (-20736, [5, 2, 1, 1, 2]),
    (20736, [6, 2, 0, 0, 3]),
    (6075, [0, 3, 6, 1, 0]),
    (219429, [0, 3, 3, 2, 1]),
    (1338444, [0, 3, 0, 3, 2]),
    (4251528, [0, 3, 0, 0, 4]),
    (1215, [1, 3, 5, 0, 1]),
    (-393660, [1, 3, 2, 1, 2]),
    (-1259712, [2, 3, 1, 0, 3]),
    (-216, [3, 3, 6, 0, 0]),
    (-7776, [3, 3, 3, 1, 1]),
    (-46656, [3, 3, 0, 2, 2]),
    (15552, [4, 3, 2, 0, 2]),
    (729, [0, 4, 3, 3, 0]),
    (19683, [0, 4, 0, 4, 1]),
    (-8748, [0, 4, 3, 0, 2]),
    (-2834352, [0, 4, 0, 1, 3]),
    (729, [1, 4, 5, 1, 0]),
    (21870, [1, 4, 2, 2, 1]),
    (-729, [2, 4, 4, 0, 1]),
    (-69984, [2, 4, 1, 1, 2]),
    (139968, [3, 4, 0, 0, 3]),
    (-729, [0, 5, 6, 0, 0]),
    (-26244, [0, 5, 3, 1, 1]),
    (-157464, [0, 5, 0, 2, 2]),
    (52488, [1, 5, 2, 0, 2]),
    (314928, [0, 6, 0, 0, 3]),
];

pub fn d90(t: &WeightedPoint) -> Complex64 {
    // powers up to the largest exponent in the table
    let pw: Vec<Vec<Complex64>> = t
        .t
        .iter()
        .map(|&x| {
            let mut v = vec![Complex64::new(1.0, 0.0)];
            for _ in 0..10 {
                let last = *v.last().unwrap();
                v.push(last * x);
            }
            v
        })
        .collect();
    D90_TERMS
        .iter()
        .map(|(c, e)| {
            e.iter()
                .enumerate()
                .fold(Complex64::new(*c as f64, 0.0), |acc, (i, &k)| acc * pw[i][k as usize])
        })
        .sum()
}

/// `Σ |c|·|t^e|` over the terms of `d90`, the size against which
/// cancellation in [`d90`] is measured.
pub fn d90_scale(t: &WeightedPoint) -> f64 {
    D90_TERMS
        .iter()
        .map(|(c, e)| e.iter().zip(&t.t).fold(c.abs() as f64, |acc, (&k, x)| acc * x.norm().powi(k as i32)))
        .sum()
}

/// `|d90(t)| / d90_scale(t)`, zero at `t = 0`.
pub fn d90_relative(t: &WeightedPoint) -> f64 {
    let s = d90_scale(t);
    if s == 0.0 {
        0.0
    } else {
        d90(t).norm() / s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StaticCheck {
    pub monomials: usize,
    /// Indices into [`D90_TERMS`] whose weighted degree is not 90.
    pub violations: Vec<usize>,
    pub duplicate_monomials: Vec<usize>,
}

impl StaticCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.duplicate_monomials.is_empty()
    }
}

pub fn weighted_degree(e: &[u32; 5]) -> u32 {
    e.iter().zip(WEIGHTS).map(|(a, w)| a * w).sum()
}

pub fn d90_static_check() -> StaticCheck {
    let violations = D90_TERMS
        .iter()
        .enumerate()
        .filter(|(_, (_, e))| weighted_degree(e) != 90)
        .map(|(i, _)| i)
        .collect();
    let duplicate_monomials = (0..D90_TERMS.len())
        .filter(|&i| (0..i).any(|j| D90_TERMS[j].1 == D90_TERMS[i].1))
        .collect();
    StaticCheck {
        monomials: D90_TERMS.len(),
        violations,
        duplicate_monomials,
    }
}
