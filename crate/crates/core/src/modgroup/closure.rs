//! Exact enumeration of the finite group generated by the `Ψ` matrices and
//! its Molien series.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::rep::Rep5Matrix;
use crate::error::{Error, Result};
use crate::exactnum::{CycloRational, EisensteinInt};

type EMat = [[EisensteinInt; 5]; 5];

/// `N / d` with `N` over `Z[ω]`, `d > 0` and no common integer factor, so
/// equal matrices have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Scaled {
    den: BigInt,
    num: EMat,
}

impl Scaled {
    fn normalized(mut den: BigInt, mut num: EMat) -> Self {
        let mut g = den.clone();
        for x in num.iter().flatten() {
            g = g.gcd(&x.a).gcd(&x.b);
            if g.is_one() {
                break;
            }
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            den /= &g;
            for x in num.iter_mut().flatten() {
                *x = EisensteinInt::new(&x.a / &g, &x.b / &g);
            }
        }
        Self { den, num }
    }

    fn from_rep(m: &Rep5Matrix) -> Self {
        let den = m
            .0
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.x.denom()).lcm(c.y.denom()));
        let num = m.0.each_ref().map(|r| {
            r.each_ref().map(|c| {
                let int = |q: &BigRational| (q * BigRational::from_integer(den.clone())).to_integer();
                EisensteinInt::new(int(&c.x), int(&c.y))
            })
        });
        Self::normalized(den, num)
    }

    fn to_rep(&self) -> Rep5Matrix {
        Rep5Matrix(self.num.each_ref().map(|r| {
            r.each_ref().map(|x| {
                CycloRational::new(
                    BigRational::new(x.a.clone(), self.den.clone()),
                    BigRational::new(x.b.clone(), self.den.clone()),
                )
            })
        }))
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out: EMat = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for k in 0..5 {
                let a = &self.num[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, x) in row.iter_mut().enumerate() {
                    let b = &o.num[k][j];
                    if !b.is_zero() {
                        *x = &*x + &(a * b);
                    }
                }
            }
        }
        Self::normalized(&self.den * &o.den, out)
    }

    fn is_scalar(&self) -> bool {
        (0..5).all(|i| {
            (0..5).all(|j| if i == j { self.num[i][i] == self.num[0][0] } else { self.num[i][j].is_zero() })
        })
    }

    fn is_identity(&self) -> bool {
        self.is_scalar() && self.num[0][0] == EisensteinInt::from(1) && self.den.is_one()
    }

    /// Coefficients `c_k` of `det(xI − N) = Σ c_k x^{5−k}` (Berkowitz, division free).
    fn charpoly_num(&self) -> [EisensteinInt; 6] {
        let a = &self.num;
        let mut vect: Vec<EisensteinInt> = vec![EisensteinInt::from(1), -&a[0][0]];
        for r in 1..5 {
            // column: 1, −a_rr, −R·S, −R·A·S, …
            let mut col = vec![EisensteinInt::from(1), -&a[r][r]];
            let mut s: Vec<EisensteinInt> = (0..r).map(|i| a[i][r].clone()).collect();
            for _ in 0..r {
                let rs = (0..r).fold(EisensteinInt::default(), |acc, j| &acc + &(&a[r][j] * &s[j]));
                col.push(-rs);
                s = (0..r)
                    .map(|i| (0..r).fold(EisensteinInt::default(), |acc, j| &acc + &(&a[i][j] * &s[j])))
                    .collect();
            }
            vect = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(EisensteinInt::default(), |acc, j| &acc + &(&col[i - j] * &vect[j]))
                })
                .collect();
        }
        std::array::from_fn(|k| vect[k].clone())
    }
}

/// The elements of a finite matrix group, in breadth-first discovery order.
#[derive(Clone, Debug)]
pub struct GroupClosure {
    elements: Vec<Scaled>,
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Rep5Matrix> + '_ {
        self.elements.iter().map(Scaled::to_rep)
    }

    /// Scalar matrices other than `I` in the group.
    pub fn nontrivial_scalars(&self) -> Vec<Rep5Matrix> {
        self.elements
            .iter()
            .filter(|m| m.is_scalar() && !m.is_identity())
            .map(Scaled::to_rep)
            .collect()
    }
}

/// Breadth-first closure under right multiplication by the generators.
/// Fails with [`Error::ClosureTooLarge`] once more than `cap` elements appear.
pub fn group_closure(generators: &[Rep5Matrix], cap: usize) -> Result<GroupClosure> {
    let gens: Vec<Scaled> = generators.iter().map(Scaled::from_rep).collect();
    let id = Scaled::from_rep(&Rep5Matrix::identity());
    let mut seen: HashSet<Scaled> = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let p = elements[i].mul(g);
            if seen.insert(p.clone()) {
                if elements.len() >= cap {
                    return Err(Error::ClosureTooLarge(cap));
                }
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    Ok(GroupClosure { elements })
}

/// Canonical text form: one matrix per line, lines sorted.
pub fn closure_text(g: &GroupClosure) -> String {
    let mut lines: Vec<String> = g.elements().map(|m| m.to_string()).collect();
    lines.sort();
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// Coefficients of `(1/|G|)·Σ_g 1/det(I − t·g)` in degrees `0..=max_degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct MolienSeries {
    pub coeffs: Vec<BigRational>,
}

impl MolienSeries {
    /// The coefficients as integers, when they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

pub fn molien_series(g: &GroupClosure, max_degree: usize) -> MolienSeries {
    // group elements by the coefficients of det(I − t·g)
    let mut classes: HashMap<Vec<CycloRational>, u64> = HashMap::new();
    for m in &g.elements {
        let c = m.charpoly_num();
        let mut dk = BigInt::one();
        let key: Vec<CycloRational> = c
            .iter()
            .enumerate()
            .map(|(k, x)| {
                if k > 0 {
                    dk *= &m.den;
                }
                let q = |v: &BigInt| BigRational::new(v.clone(), dk.clone());
                CycloRational::new(q(&x.a), q(&x.b))
            })
            .collect();
        *classes.entry(key).or_default() += 1;
    }
    let mut total = vec![CycloRational::zero(); max_degree + 1];
    for (c, count) in &classes {
        let mut h = vec![CycloRational::zero(); max_degree + 1];
        h[0] = CycloRational::one();
        for d in 1..=max_degree {
            let mut acc = CycloRational::zero();
            for k in 1..=d.min(5) {
                acc = &acc - &(&c[k] * &h[d - k]);
            }
            h[d] = acc;
        }
        let w = BigRational::from_integer((*count).into());
        for (t, x) in total.iter_mut().zip(&h) {
            *t = &*t + &x.scale(&w);
        }
    }
    let n = BigRational::from_integer(g.order().into());
    let coeffs = total
        .into_iter()
        .map(|t| {
            assert!(t.is_rational(), "Molien coefficient {t} is not rational");
            t.x / &n
        })
        .collect();
    MolienSeries { coeffs }
}

/// Coefficients of `Π_d 1/(1 − t^d)` in degrees `0..=max_degree`.
pub fn molien_closed_form(degrees: &[usize], max_degree: usize) -> Vec<u64> {
    let mut c = vec![0u64; max_degree + 1];
    c[0] = 1;
    for &d in degrees {
        for n in d..=max_degree {
            c[n] += c[n - d];
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_gens() -> Vec<Rep5Matrix> {
        vec![Rep5Matrix::diagonal([1, 0, 0, 0, 0]), Rep5Matrix::diagonal([0, 1, 0, 0, 0])]
    }

    #[test]
    fn diagonal_group() {
        let g = group_closure(&small_gens(), 100).unwrap();
        assert_eq!(g.order(), 9);
        // invariants of (Z/3)² on the first two coordinates: x³, y³ and three free variables
        let m = molien_series(&g, 6).integer_coeffs().unwrap();
        let expect = molien_closed_form(&[1, 1, 1, 3, 3], 6);
        assert_eq!(m, expect.into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(g.nontrivial_scalars().len(), 0);
        assert!(matches!(group_closure(&small_gens(), 5), Err(Error::ClosureTooLarge(5))));
    }

    #[test]
    fn scalar_detected() {
        let g = group_closure(&[Rep5Matrix::diagonal([1; 5])], 10).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.nontrivial_scalars().len(), 2);
    }

    #[test]
    fn charpoly_matches_trace_and_det() {
        let m = Scaled::from_rep(&super::super::psi_matrix(super::super::Generator::J));
        let c = m.charpoly_num();
        // Ψ(J) = N/3 with trace(N) = 3
        assert_eq!(c[1], EisensteinInt::from(-3));
        assert_eq!(m.den, BigInt::from(3));
        let d = Scaled::from_rep(&Rep5Matrix::diagonal([0, 1, 0, 1, 1]));
        let c = d.charpoly_num();
        // (x − 1)²(x − ω)³, constant term −ω³ = −1
        assert_eq!(c[5], EisensteinInt::from(-1));
    }

    #[test]
    fn closed_form() {
        assert_eq!(molien_closed_form(&[4, 6], 12), vec![1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2]);
    }
}
