use std::fmt;

use num_complex::Complex64;

use super::Generator;
use crate::exactnum::CycloRational;

/// 5×5 matrix over `Q(ω)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep5Matrix(pub [[CycloRational; 5]; 5]);

impl Rep5Matrix {
    pub fn identity() -> Self {
        Self::diagonal([0; 5])
    }

    /// `diag(ω^{k0}, …, ω^{k4})`.
    pub fn diagonal(k: [u32; 5]) -> Self {
        let mut m: [[CycloRational; 5]; 5] = std::array::from_fn(|_| std::array::from_fn(|_| CycloRational::zero()));
        for (i, &e) in k.iter().enumerate() {
            m[i][i] = CycloRational::omega().pow(e);
        }
        Self(m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..5).fold(CycloRational::zero(), |acc, k| &acc + &(&self.0[i][k] * &o.0[k][j]))
            })
        }))
    }

    pub fn is_scalar(&self) -> bool {
        (0..5).all(|i| (0..5).all(|j| if i == j { self.0[i][i] == self.0[0][0] } else { self.0[i][j].is_zero() }))
    }

    pub fn to_c64(&self) -> [[Complex64; 5]; 5] {
        self.0.each_ref().map(|r| r.each_ref().map(CycloRational::to_c64))
    }
}

impl fmt::Display for Rep5Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `Ψ(g)`, the action of a generator on `(Θ1, …, Θ5)`.
pub fn psi_matrix(g: Generator) -> Rep5Matrix {
    match g {
        Generator::M1 => Rep5Matrix::diagonal([0, 1, 0, 1, 1]),
        Generator::M2 => Rep5Matrix::diagonal([0, 0, 1, 1, 1]),
        Generator::M3 => Rep5Matrix::diagonal([0, 0, 0, 1, 2]),
        Generator::J => {
            let rows: [[i64; 5]; 5] = [
                [-1, -2, -2, -2, -2],
                [-1, 1, -2, 1, 1],
                [-1, -2, 1, 1, 1],
                [-1, 1, 1, 1, -2],
                [-1, 1, 1, -2, 1],
            ];
            Rep5Matrix(rows.map(|r| r.map(|x| CycloRational::from_frac(x, 3))))
        }
    }
}

pub fn psi_generators() -> Vec<(Generator, Rep5Matrix)> {
    Generator::ALL.iter().map(|&g| (g, psi_matrix(g))).collect()
}
