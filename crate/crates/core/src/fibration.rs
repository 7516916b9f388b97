//! Elliptic fibration `z1² = y1³ + p(x1)·y1 + q(x1)` attached to a moduli
//! point, its discriminant, critical points and Kodaira fibre types.

use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::invariants::WeightedPoint;
use crate::poly::{self, Poly};

/// Stand-in for the vanishing order of the zero polynomial.
pub const ORD_INF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    /// `I_n`, with `I_0` the smooth fibre.
    I(u32),
    II,
    III,
    IV,
    /// `I_n*`, with `I_0*` for `n = 0`.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::I(n) => write!(f, "I{n}"),
            Self::II => f.write_str("II"),
            Self::III => f.write_str("III"),
            Self::IV => f.write_str("IV"),
            Self::IStar(n) => write!(f, "I{n}*"),
            Self::IVStar => f.write_str("IV*"),
            Self::IIIStar => f.write_str("III*"),
            Self::IIStar => f.write_str("II*"),
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Classifies a fibre from the vanishing orders of `p`, `q` and
/// `Δ = 4p³ + 27q²` (Tate's table for a minimal short Weierstrass model).
pub fn kodaira_type(ord_p: u32, ord_q: u32, ord_delta: u32) -> Result<KodairaType> {
    let out = || Error::KodairaOutOfTable((ord_p, ord_q, ord_delta));
    let lower = ord_p.saturating_mul(3).min(ord_q.saturating_mul(2));
    let consistent = if ord_p.saturating_mul(3) == ord_q.saturating_mul(2) {
        ord_delta >= lower
    } else {
        ord_delta == lower
    };
    if !consistent {
        return Err(out());
    }
    use KodairaType::*;
    let t = match (ord_p, ord_q, ord_delta) {
        (0, 0, n) => I(n),
        (_, 0, _) | (0, _, _) => return Err(out()),
        (_, 1, 2) => II,
        (1, _, 3) => III,
        (_, 2, 4) => IV,
        (2, 3, n) if n >= 6 => IStar(n - 6),
        (a, b, 6) if a >= 2 && b >= 3 => IStar(0),
        (_, 4, 8) => IVStar,
        (3, _, 9) => IIIStar,
        (_, 5, 10) => IIStar,
        _ => return Err(out()),
    };
    Ok(t)
}

/// `p(x1) = t4·x1⁴ + t10·x1⁵`, `q(x1) = x1⁵ + t6·x1⁶ + t12·x1⁷ + t18·x1⁸`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FibrationData {
    pub p_coeffs: Poly,
    pub q_coeffs: Poly,
}

pub fn fibration_from_t(t: &WeightedPoint) -> FibrationData {
    let z = Complex64::new(0.0, 0.0);
    let [t4, t6, t10, t12, t18] = t.t;
    FibrationData {
        p_coeffs: vec![z, z, z, z, t4, t10],
        q_coeffs: vec![z, z, z, z, z, Complex64::new(1.0, 0.0), t6, t12, t18],
    }
}

/// `Δ(x1) = 4p³ + 27q²`.
pub fn discriminant_poly(f: &FibrationData) -> Poly {
    let p3 = poly::mul(&poly::mul(&f.p_coeffs, &f.p_coeffs), &f.p_coeffs);
    let q2 = poly::mul(&f.q_coeffs, &f.q_coeffs);
    poly::trim(poly::add(&poly::scale(&p3, 4.0), &poly::scale(&q2, 27.0)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Location {
    Finite(Complex64),
    Infinity,
}

impl Serialize for Location {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Finite(z) => [z.re, z.im].serialize(s),
            Self::Infinity => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub location: Location,
    /// `None` when the orders fall outside the implemented table.
    pub kodaira: Option<KodairaType>,
    pub orders: (u32, u32, u32),
}

fn ord0(p: &[Complex64]) -> u32 {
    poly::order_at_zero(p).map_or(ORD_INF, |k| k as u32)
}

/// Vanishing order at infinity for a section of weight `w` (`p`: 8, `q`: 12,
/// `Δ`: 24), i.e. the order at `x = 0` in the chart `x = 1/x1`.
fn ord_inf(p: &[Complex64], w: usize) -> u32 {
    poly::degree(p).map_or(ORD_INF, |d| (w - d) as u32)
}

/// Roots of `Δ` closer than this (relative) are treated as one point.
const CLUSTER_TOL: f64 = 1e-5;

pub fn critical_points(f: &FibrationData) -> Result<Vec<CriticalPoint>> {
    let delta = discriminant_poly(f);
    let Some(o0) = poly::order_at_zero(&delta) else {
        return Err(Error::DegenerateDiscriminant);
    };
    let mut out = Vec::new();
    if o0 > 0 {
        let orders = (ord0(&f.p_coeffs), ord0(&f.q_coeffs), o0 as u32);
        out.push(CriticalPoint {
            location: Location::Finite(Complex64::new(0.0, 0.0)),
            kodaira: kodaira_type(orders.0, orders.1, orders.2).ok(),
            orders,
        });
    }
    let mut rs = poly::roots(&delta[o0..]);
    rs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let scale = 1.0 + rs.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let mut used = vec![false; rs.len()];
    for i in 0..rs.len() {
        if used[i] {
            continue;
        }
        let cluster: Vec<usize> = (i..rs.len())
            .filter(|&j| !used[j] && (rs[j] - rs[i]).norm() < CLUSTER_TOL * scale)
            .collect();
        for &j in &cluster {
            used[j] = true;
        }
        let r = cluster.iter().map(|&j| rs[j]).sum::<Complex64>() / cluster.len() as f64;
        let vanishes = |p: &[Complex64]| {
            let mag: f64 = p.iter().enumerate().map(|(k, c)| c.norm() * r.norm().powi(k as i32)).sum();
            (poly::eval(p, r).norm() <= 1e-8 * mag) as u32
        };
        let orders = (vanishes(&f.p_coeffs), vanishes(&f.q_coeffs), cluster.len() as u32);
        out.push(CriticalPoint {
            location: Location::Finite(r),
            kodaira: kodaira_type(orders.0, orders.1, orders.2).ok(),
            orders,
        });
    }
    let oinf = ord_inf(&delta, 24);
    if oinf > 0 {
        let orders = (ord_inf(&f.p_coeffs, 8), ord_inf(&f.q_coeffs, 12), oinf);
        out.push(CriticalPoint {
            location: Location::Infinity,
            kodaira: kodaira_type(orders.0, orders.1, orders.2).ok(),
            orders,
        });
    }
    Ok(out)
}

/// Finite critical points other than `0`, i.e. the roots of `Δ/x1^{ord0 Δ}`
/// with multiplicity, sorted by real part.
pub fn reduced_discriminant_roots(f: &FibrationData) -> Result<Vec<Complex64>> {
    let delta = discriminant_poly(f);
    let o0 = poly::order_at_zero(&delta).ok_or(Error::DegenerateDiscriminant)?;
    let mut rs = poly::roots(&delta[o0..]);
    rs.sort_by(|a, b| a.re.total_cmp(&b.re));
    Ok(rs)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BranchPoint {
    Finite(Complex64),
    Infinity,
}

/// Roots of `y³ + p(x1)·y + q(x1)` followed by `∞`: the branch points of the
/// fibre as a double cover of the `y`-line.
pub fn fiber_branch_points(f: &FibrationData, x1: Complex64) -> Result<[BranchPoint; 4]> {
    let p = poly::eval(&f.p_coeffs, x1);
    let q = poly::eval(&f.q_coeffs, x1);
    let disc = 4.0 * p * p * p + 27.0 * q * q;
    let mag = 4.0 * p.norm().powi(3) + 27.0 * q.norm_sqr();
    if mag == 0.0 || disc.norm() <= 1e-12 * mag {
        return Err(Error::SingularFiber(format!("{x1}")));
    }
    let one = Complex64::new(1.0, 0.0);
    let mut r = poly::roots(&[q, p, Complex64::new(0.0, 0.0), one]);
    r.sort_by(|a, b| a.re.total_cmp(&b.re));
    Ok([
        BranchPoint::Finite(r[0]),
        BranchPoint::Finite(r[1]),
        BranchPoint::Finite(r[2]),
        BranchPoint::Infinity,
    ])
}

/// The reference moduli point `(−12 : −3 : −5 : 21 : 13)`.
pub fn reference_point() -> WeightedPoint {
    WeightedPoint::from_re([-12.0, -3.0, -5.0, 21.0, 13.0])
}

/// The reference fibration with the `x1⁶` coefficient of `q` replaced by
/// `c6` (the two candidates are −3 and −4).
pub fn reference_fibration(c6: f64) -> FibrationData {
    let mut f = fibration_from_t(&reference_point());
    f.q_coeffs[6] = Complex64::new(c6, 0.0);
    f
}

/// Approximate real critical points listed for the reference fibration.
pub const REFERENCE_CRITICAL_POINTS: [f64; 6] = [-1.84, -1.65, -0.43, -0.10, 0.05, 0.84];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VariantComparison {
    pub c6: f64,
    pub roots: Vec<f64>,
    pub max_imag: f64,
    pub max_deviation: f64,
    pub matches: bool,
}

/// Compares the critical points of the reference fibration for a given
/// `x1⁶` coefficient against [`REFERENCE_CRITICAL_POINTS`].
pub fn compare_reference_variant(c6: f64, tol: f64) -> Result<VariantComparison> {
    let rs = reduced_discriminant_roots(&reference_fibration(c6))?;
    let max_imag = rs.iter().map(|r| r.im.abs()).fold(0.0, f64::max);
    let roots: Vec<f64> = rs.iter().map(|r| r.re).collect();
    let max_deviation = if roots.len() == REFERENCE_CRITICAL_POINTS.len() {
        roots
            .iter()
            .zip(REFERENCE_CRITICAL_POINTS)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(VariantComparison {
        c6,
        roots,
        max_imag,
        max_deviation,
        matches: max_deviation <= tol && max_imag <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn kodaira_table() {
        assert_eq!(kodaira_type(4, 5, 10), Ok(KodairaType::IIStar));
        assert_eq!(kodaira_type(3, 4, 8), Ok(KodairaType::IVStar));
        assert_eq!(kodaira_type(0, 0, 1), Ok(KodairaType::I(1)));
        assert_eq!(kodaira_type(3, 5, 9), Ok(KodairaType::IIIStar));
        assert_eq!(kodaira_type(2, 3, 6), Ok(KodairaType::IStar(0)));
        assert_eq!(kodaira_type(2, 3, 8), Ok(KodairaType::IStar(2)));
        assert_eq!(kodaira_type(ORD_INF, 1, 2), Ok(KodairaType::II));
        assert_eq!(kodaira_type(1, ORD_INF, 3), Ok(KodairaType::III));
        assert_eq!(kodaira_type(2, 2, 4), Ok(KodairaType::IV));
        assert!(kodaira_type(4, 6, 12).is_err());
        assert!(kodaira_type(1, 1, 5).is_err());
        assert_eq!(KodairaType::IIStar.to_string(), "II*");
    }

    #[test]
    fn chart_bookkeeping() {
        let f = fibration_from_t(&reference_point());
        assert_eq!(f.p_coeffs[4], c(-12.0));
        assert_eq!(f.p_coeffs[5], c(-5.0));
        assert_eq!(f.q_coeffs[8], c(13.0));
        let unit = fibration_from_t(&WeightedPoint::from_re([1.0, 0.0, 0.0, 0.0, 0.0]));
        assert_eq!(poly::trim(unit.p_coeffs.clone()), [vec![c(0.0); 4], vec![c(1.0)]].concat());
        assert_eq!(poly::degree(&poly::trim(unit.q_coeffs.clone())), Some(5));
    }

    #[test]
    fn discriminant_shapes() {
        let f = FibrationData {
            p_coeffs: vec![],
            q_coeffs: [vec![c(0.0); 5], vec![c(1.0)]].concat(),
        };
        let d = discriminant_poly(&f);
        assert_eq!(poly::order_at_zero(&d), Some(10));
        assert_eq!(poly::degree(&d), Some(10));
        assert_eq!(d[10], c(27.0));

        let r = discriminant_poly(&fibration_from_t(&reference_point()));
        assert_eq!(poly::order_at_zero(&r), Some(10));
        assert_eq!(poly::degree(&r), Some(16));
    }

    #[test]
    fn roots_are_well_conditioned() {
        let f = reference_fibration(-3.0);
        let a = reduced_discriminant_roots(&f).unwrap();
        let mut g = f.clone();
        for c in g.q_coeffs.iter_mut().chain(g.p_coeffs.iter_mut()) {
            *c *= 1.0 + 1e-12;
        }
        let b = reduced_discriminant_roots(&g).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-8);
        }
    }

    #[test]
    fn toy_critical_points() {
        // p = 0, q = x1⁵(x1 − 1)
        let f = FibrationData {
            p_coeffs: vec![],
            q_coeffs: [vec![c(0.0); 5], vec![c(-1.0), c(1.0)]].concat(),
        };
        let pts = critical_points(&f).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0].location, Location::Finite(c(0.0)));
        assert_eq!(pts[0].kodaira, Some(KodairaType::IIStar));
        match pts[1].location {
            Location::Finite(z) => assert!((z - c(1.0)).norm() < 1e-9),
            Location::Infinity => panic!(),
        }
        assert_eq!(pts[1].kodaira, Some(KodairaType::II));
        assert_eq!(pts[2].location, Location::Infinity);
        assert_eq!(pts[2].kodaira, None);
    }

    #[test]
    fn reference_variants() {
        let a = compare_reference_variant(-3.0, 0.01).unwrap();
        let b = compare_reference_variant(-4.0, 0.01).unwrap();
        assert!(a.matches, "{a:?}");
        assert!(!b.matches, "{b:?}");
    }

    #[test]
    fn reference_fibre_at_i() {
        let f = reference_fibration(-3.0);
        let i = Complex64::new(0.0, 1.0);
        assert!((poly::eval(&f.p_coeffs, i) - Complex64::new(-12.0, -5.0)).norm() < 1e-12);
        assert!((poly::eval(&f.q_coeffs, i) - Complex64::new(16.0, -20.0)).norm() < 1e-12);
        let bp = fiber_branch_points(&f, i).unwrap();
        let fin: Vec<Complex64> = bp[..3]
            .iter()
            .map(|b| match b {
                BranchPoint::Finite(z) => *z,
                BranchPoint::Infinity => panic!(),
            })
            .collect();
        assert!((fin[0] - c(-4.0)).norm() < 1e-10);
        assert!((fin[1] - Complex64::new(0.418861, -1.58114)).norm() < 1e-4);
        assert!((fin[2] - Complex64::new(3.58114, 1.58114)).norm() < 1e-4);
        assert!(fin.iter().sum::<Complex64>().norm() < 1e-12);
        assert_eq!(bp[3], BranchPoint::Infinity);
        assert!(matches!(
            fiber_branch_points(&f, c(0.0)),
            Err(Error::SingularFiber(_))
        ));
    }

    #[test]
    fn reference_inventory() {
        let pts = critical_points(&fibration_from_t(&reference_point())).unwrap();
        assert_eq!(pts.first().unwrap().kodaira, Some(KodairaType::IIStar));
        assert_eq!(pts.last().unwrap().kodaira, Some(KodairaType::IVStar));
        assert_eq!(pts.len(), 8);
        assert!(pts[1..7].iter().all(|p| p.kodaira == Some(KodairaType::I(1))));
    }
}
