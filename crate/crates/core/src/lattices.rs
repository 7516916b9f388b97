//! Integer lattices: Gram matrices, discriminant groups, isometries, and the
//! monodromy and intersection data of the elliptic fibration.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibration::KodairaType;

pub type IntMatrix = Vec<Vec<i64>>;

/// Symmetric integer matrix of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct GramMatrix {
    entries: IntMatrix,
}

impl GramMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        for row in &entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Parse(format!("Gram matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn det(&self) -> i64 {
        det(&self.entries)
    }
}

impl TryFrom<IntMatrix> for GramMatrix {
    type Error = Error;
    fn try_from(m: IntMatrix) -> Result<Self> {
        Self::new(m)
    }
}

impl From<GramMatrix> for IntMatrix {
    fn from(g: GramMatrix) -> Self {
        g.entries
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeName {
    U,
    A1,
    A2,
    E6,
    E7,
    E8,
}

impl FromStr for LatticeName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "U" => Self::U,
            "A1" => Self::A1,
            "A2" => Self::A2,
            "E6" => Self::E6,
            "E7" => Self::E7,
            "E8" => Self::E8,
            _ => return Err(Error::UnknownLattice(s.to_string())),
        })
    }
}

/// Cartan matrix of `E_n` (Bourbaki numbering: chain 1-3-4-5-...-n, node 2
/// attached to node 4).
fn cartan_e(n: usize) -> IntMatrix {
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    // zero-based node indices
    let mut edges = vec![(0, 2), (1, 3)];
    for k in 2..n - 1 {
        edges.push((k, k + 1));
    }
    for (i, j) in edges {
        m[i][j] = -1;
        m[j][i] = -1;
    }
    m
}

/// Standard root lattice Gram matrix scaled by `sign`; `A2(−1)` is
/// `[[−2,1],[1,−2]]` and `U` ignores the sign.
pub fn root_lattice(name: LatticeName, sign: i64) -> GramMatrix {
    let base: IntMatrix = match name {
        LatticeName::U => return GramMatrix { entries: vec![vec![0, 1], vec![1, 0]] },
        LatticeName::A1 => vec![vec![2]],
        LatticeName::A2 => vec![vec![2, -1], vec![-1, 2]],
        LatticeName::E6 => cartan_e(6),
        LatticeName::E7 => cartan_e(7),
        LatticeName::E8 => cartan_e(8),
    };
    let entries = base
        .into_iter()
        .map(|r| r.into_iter().map(|x| x * sign).collect())
        .collect();
    GramMatrix { entries }
}

/// Parses names like `U`, `A2(-1)`, `E8(-1)`.
pub fn root_lattice_by_name(spec: &str) -> Result<GramMatrix> {
    let spec = spec.trim();
    let (name, sign) = match spec.strip_suffix("(-1)") {
        Some(n) => (n, -1),
        None => (spec, 1),
    };
    Ok(root_lattice(name.parse()?, sign))
}

pub fn direct_sum(gs: &[GramMatrix]) -> GramMatrix {
    let n: usize = gs.iter().map(GramMatrix::dim).sum();
    let mut entries = vec![vec![0; n]; n];
    let mut off = 0;
    for g in gs {
        for (i, row) in g.entries.iter().enumerate() {
            entries[off + i][off..off + row.len()].copy_from_slice(row);
        }
        off += g.dim();
    }
    GramMatrix { entries }
}

/// `U ⊕ U ⊕ A2(−1)` in the coordinate order (ξ1 ξ2)(ξ3 ξ4)(ξ5 ξ6).
pub fn gram_a() -> GramMatrix {
    direct_sum(&[
        root_lattice(LatticeName::U, 1),
        root_lattice(LatticeName::U, 1),
        root_lattice(LatticeName::A2, -1),
    ])
}

/// Fraction-free (Bareiss) determinant.
pub fn det(m: &IntMatrix) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        return 1;
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Invariant factors of `Z^n / G·Z^n` greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<u64>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

/// Diagonal of the Smith normal form, as absolute values.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero magnitude in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility into the rest of the block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

pub fn discriminant_group(g: &GramMatrix) -> Result<DiscriminantGroup> {
    if g.det() == 0 {
        return Err(Error::SingularGram);
    }
    let invariant_factors = smith_diagonal(&g.entries)
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| u64::try_from(d).expect("invariant factor fits in u64"))
        .collect();
    Ok(DiscriminantGroup { invariant_factors })
}

fn check_square(m: &IntMatrix, n: usize) -> Result<()> {
    if m.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: m.len() });
    }
    if let Some(r) = m.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: r.len() });
    }
    Ok(())
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| (0..m).map(|j| (0..k).map(|t| r[t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

/// `mᵀ·g·m == g`; `m` acts on column coordinate vectors.
pub fn check_isometry(m: &IntMatrix, g: &GramMatrix) -> Result<bool> {
    check_square(m, g.dim())?;
    Ok(mat_mul(&mat_mul(&transpose(m), &g.entries), m) == g.entries)
}

fn inverse_rational(g: &IntMatrix) -> Result<Vec<Vec<BigRational>>> {
    let n = g.len();
    let mut a: Vec<Vec<BigRational>> = g
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .chain((0..n).map(|j| BigRational::from_integer(((i == j) as i64).into())))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::SingularGram)?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let v = &f * &a[c][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// True iff the isometry `m` acts trivially on `A∨/A`, i.e. `(m − I)·G⁻¹` is
/// integral.
pub fn check_discriminant_trivial(m: &IntMatrix, g: &GramMatrix) -> Result<bool> {
    if !check_isometry(m, g)? {
        return Err(Error::NotIsometry);
    }
    let ginv = inverse_rational(&g.entries)?;
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let mut s = BigRational::zero();
            for k in 0..n {
                let c = m[i][k] - (i == k) as i64;
                if c != 0 {
                    s += BigRational::from_integer(c.into()) * &ginv[k][j];
                }
            }
            if !s.is_integer() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub type Mat2 = [[i64; 2]; 2];

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

const I2: Mat2 = [[1, 0], [0, 1]];

/// Element of `SL2(Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Mat2", into = "Mat2")]
pub struct MonodromyMatrix(Mat2);

impl MonodromyMatrix {
    pub fn new(m: Mat2) -> Result<Self> {
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1 {
            return Err(Error::Parse(format!("monodromy {m:?} does not have determinant 1")));
        }
        Ok(Self(m))
    }

    pub fn entries(&self) -> Mat2 {
        self.0
    }

    pub fn trace(&self) -> i64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Smallest `k ≤ max` with `Mᵏ = I`.
    pub fn order(&self, max: u32) -> Option<u32> {
        let mut p = self.0;
        for k in 1..=max {
            if p == I2 {
                return Some(k);
            }
            p = mul2(&p, &self.0);
        }
        None
    }

    /// Row action on cycle coefficients with respect to the basis `(γ1, γ2)`.
    pub fn act_row(&self, v: [i64; 2]) -> [i64; 2] {
        let m = self.0;
        [v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]]
    }
}

impl TryFrom<Mat2> for MonodromyMatrix {
    type Error = Error;
    fn try_from(m: Mat2) -> Result<Self> {
        Self::new(m)
    }
}

impl From<MonodromyMatrix> for Mat2 {
    fn from(m: MonodromyMatrix) -> Self {
        m.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonodromyEntry {
    pub label: &'static str,
    pub matrix: MonodromyMatrix,
    pub kodaira: KodairaType,
    /// Coefficients of the vanishing cycle in `(γ1, γ2)`, for `I1` fibres.
    pub vanishing_cycle: Option<[i64; 2]>,
}

/// Local monodromies around the critical points, in the order
/// α1, α2, α3, α4, α0, α5, α6, α∞.
pub fn monodromy_table() -> Vec<MonodromyEntry> {
    let e = |label, m: Mat2, kodaira, v| MonodromyEntry {
        label,
        matrix: MonodromyMatrix(m),
        kodaira,
        vanishing_cycle: v,
    };
    let t = [[1, -1], [0, 1]];
    let s = [[1, 0], [1, 1]];
    vec![
        e("alpha_1", [[0, -1], [1, 2]], KodairaType::I(1), Some([1, 1])),
        e("alpha_2", t, KodairaType::I(1), Some([0, 1])),
        e("alpha_3", t, KodairaType::I(1), Some([0, 1])),
        e("alpha_4", t, KodairaType::I(1), Some([0, 1])),
        e("alpha_0", [[0, 1], [-1, 1]], KodairaType::IIStar, None),
        e("alpha_5", s, KodairaType::I(1), Some([1, 0])),
        e("alpha_6", s, KodairaType::I(1), Some([1, 0])),
        e("alpha_inf", [[0, 1], [-1, -1]], KodairaType::IVStar, None),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryCheck {
    pub label: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ordering {
    /// Index of the first entry; the product runs cyclically from it.
    pub rotation: usize,
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonodromyReport {
    pub entries: Vec<EntryCheck>,
    /// Orderings whose left-to-right product is the identity.
    pub identity_orderings: Vec<Ordering>,
}

impl MonodromyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok) && !self.identity_orderings.is_empty()
    }
}

pub fn monodromy_consistency(entries: &[MonodromyEntry]) -> MonodromyReport {
    let checks = entries
        .iter()
        .map(|e| {
            let m = &e.matrix;
            let (ok, detail) = match e.kodaira {
                KodairaType::I(1) => match e.vanishing_cycle {
                    Some(v) => {
                        let fixed = m.act_row(v) == v;
                        (
                            fixed && m.trace() == 2,
                            format!("trace {}, cycle {:?} fixed: {}", m.trace(), v, fixed),
                        )
                    }
                    None => (false, "missing vanishing cycle".into()),
                },
                KodairaType::IIStar => (m.order(12) == Some(6), format!("order {:?}", m.order(12))),
                KodairaType::IVStar => (m.order(12) == Some(3), format!("order {:?}", m.order(12))),
                other => (false, format!("unexpected type {other}")),
            };
            EntryCheck { label: e.label, ok, detail }
        })
        .collect();
    let n = entries.len();
    let mut identity_orderings = Vec::new();
    for reversed in [false, true] {
        for rotation in 0..n {
            let mut p = I2;
            for k in 0..n {
                let idx = if reversed {
                    (rotation + n - k) % n
                } else {
                    (rotation + k) % n
                };
                p = mul2(&p, &entries[idx].matrix.0);
            }
            if p == I2 {
                identity_orderings.push(Ordering { rotation, reversed });
            }
        }
    }
    MonodromyReport {
        entries: checks,
        identity_orderings,
    }
}

/// Intersection matrix of the cycles `G0*, …, G5*`.
pub fn gstar_gram() -> GramMatrix {
    GramMatrix {
        entries: vec![
            vec![-2, -1, 0, 0, 0, -1],
            vec![-1, -2, 2, 0, 0, 0],
            vec![0, 2, -2, 1, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 0, -1],
            vec![-1, 0, 0, 0, -1, -2],
        ],
    }
}

/// Unimodular integer matrix; row `i` expresses a new cycle in the old basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseChange(pub IntMatrix);

impl BaseChange {
    pub fn new(m: IntMatrix) -> Result<Self> {
        check_square(&m, m.len())?;
        if det(&m).abs() != 1 {
            return Err(Error::Parse("base change is not unimodular".into()));
        }
        Ok(Self(m))
    }

    pub fn det(&self) -> i64 {
        det(&self.0)
    }
}

/// Expresses `H0*, …, H5*` in the `G*` basis.
pub fn base_change_t() -> BaseChange {
    BaseChange(vec![
        vec![-1, 0, 0, 0, 1, 0],
        vec![0, 1, 0, -2, 0, 0],
        vec![0, 0, 1, 1, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 1, -1],
    ])
}

/// Expresses `H0, …, H5` in the `G` basis.
pub fn base_change_s() -> BaseChange {
    BaseChange(vec![
        vec![-1, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 1, -1, 1, 0, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![1, 1, -1, 1, -1, 1],
        vec![0, 0, 0, 0, 0, -1],
    ])
}

/// `t·g·tᵀ`.
pub fn basechange_gram(t: &BaseChange, g: &GramMatrix) -> Result<GramMatrix> {
    check_square(&t.0, g.dim())?;
    GramMatrix::new(mat_mul(&mat_mul(&t.0, &g.entries), &transpose(&t.0)))
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2m() -> GramMatrix {
        root_lattice(LatticeName::A2, -1)
    }

    #[test]
    fn root_lattices() {
        assert_eq!(root_lattice(LatticeName::U, 1).entries(), &vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a2m().entries(), &vec![vec![-2, 1], vec![1, -2]]);
        assert_eq!(root_lattice(LatticeName::E8, -1).det(), 1);
        assert_eq!(root_lattice(LatticeName::E7, 1).det(), 2);
        assert_eq!(root_lattice(LatticeName::E6, 1).det(), 3);
        assert_eq!(root_lattice_by_name("E6(-1)").unwrap().det(), 3);
        assert!(matches!(root_lattice_by_name("D4"), Err(Error::UnknownLattice(_))));
    }

    #[test]
    fn discriminant_groups() {
        assert_eq!(discriminant_group(&gram_a()).unwrap().invariant_factors, vec![3]);
        assert!(discriminant_group(&root_lattice(LatticeName::U, 1))
            .unwrap()
            .invariant_factors
            .is_empty());
        assert_eq!(discriminant_group(&a2m()).unwrap().invariant_factors, vec![3]);
        let a1 = root_lattice(LatticeName::A1, -1);
        let g = direct_sum(&[a1.clone(), a1.clone(), a2m()]);
        assert_eq!(discriminant_group(&g).unwrap().invariant_factors, vec![2, 6]);
        let sing = GramMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(discriminant_group(&sing), Err(Error::SingularGram));
    }

    #[test]
    fn direct_sums() {
        let u = root_lattice(LatticeName::U, 1);
        assert_eq!(direct_sum(&[u.clone()]), u);
        assert_eq!(gram_a().det(), 3);
        let m = direct_sum(&[
            u,
            root_lattice(LatticeName::E8, -1),
            root_lattice(LatticeName::E6, -1),
        ]);
        assert_eq!(m.dim(), 16);
        assert_eq!(m.det().abs(), 3);
    }

    #[test]
    fn isometries() {
        let g = gram_a();
        assert!(check_isometry(&identity(6), &g).unwrap());
        let mut s = identity(6);
        s[0][0] = 2;
        assert!(!check_isometry(&s, &g).unwrap());
        assert!(check_isometry(&identity(5), &g).is_err());
    }

    #[test]
    fn discriminant_action() {
        let g = gram_a();
        assert!(check_discriminant_trivial(&identity(6), &g).unwrap());
        let mut t1 = identity(6);
        for i in 0..4 {
            t1[i][i] = -1;
        }
        t1[4] = vec![0, 0, 0, 0, 0, -1];
        t1[5] = vec![0, 0, 0, 0, -1, 0];
        assert!(check_discriminant_trivial(&t1, &g).unwrap());
        let mut swap = identity(6);
        swap[4] = vec![0, 0, 0, 0, 0, 1];
        swap[5] = vec![0, 0, 0, 0, 1, 0];
        assert!(!check_discriminant_trivial(&swap, &g).unwrap());
        let mut s = identity(6);
        s[0][0] = 2;
        assert_eq!(check_discriminant_trivial(&s, &g), Err(Error::NotIsometry));
    }

    #[test]
    fn monodromy() {
        let t = monodromy_table();
        assert_eq!(t.len(), 8);
        assert_eq!(t[0].matrix.entries(), [[0, -1], [1, 2]]);
        assert_eq!(t[4].kodaira, KodairaType::IIStar);
        assert_eq!(t[7].matrix.entries(), [[0, 1], [-1, -1]]);
        assert_eq!(t[1].matrix.act_row([0, 1]), [0, 1]);
        assert_eq!(t[4].matrix.order(12), Some(6));
        let r = monodromy_consistency(&t);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.identity_orderings.len(), 8);
        assert!(r.identity_orderings.iter().all(|o| !o.reversed));
        assert!(MonodromyMatrix::new([[1, 1], [1, 1]]).is_err());
    }

    #[test]
    fn intersection_base_change() {
        let g = gstar_gram();
        assert_eq!(g.entries()[0][0], -2);
        assert_eq!(g.entries()[1][2], 2);
        let h = basechange_gram(&base_change_t(), &g).unwrap();
        let u = root_lattice(LatticeName::U, 1);
        assert_eq!(h, direct_sum(&[a2m(), u.clone(), u]));
        assert_eq!(h.entries()[0][0], -2);
        assert_eq!(basechange_gram(&BaseChange(identity(6)), &g).unwrap(), g);
        assert_eq!(base_change_t().det().abs(), 1);
        assert_eq!(base_change_s().det().abs(), 1);
    }

    #[test]
    fn serde_rows() {
        let s = serde_json::to_string(&a2m()).unwrap();
        assert_eq!(s, "[[-2,1],[1,-2]]");
        let back: GramMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a2m());
        assert!(serde_json::from_str::<GramMatrix>("[[0,1],[2,0]]").is_err());
    }

    fn small_gram() -> impl Strategy<Value = GramMatrix> {
        (1usize..4)
            .prop_flat_map(|n| proptest::collection::vec(-4i64..5, n * (n + 1) / 2).prop_map(move |v| (n, v)))
            .prop_map(|(n, v)| {
                let mut m = vec![vec![0; n]; n];
                let mut it = v.into_iter();
                for i in 0..n {
                    for j in i..n {
                        let x = it.next().unwrap();
                        m[i][j] = x;
                        m[j][i] = x;
                    }
                }
                GramMatrix::new(m).unwrap()
            })
    }

    proptest! {
        #[test]
        fn discriminant_order_is_det(gs in proptest::collection::vec(small_gram(), 1..4)) {
            prop_assume!(gs.iter().all(|g| g.det() != 0));
            let expected: i64 = gs.iter().map(|g| g.det().abs()).product();
            let d = discriminant_group(&direct_sum(&gs)).unwrap();
            prop_assert_eq!(d.order() as i64, expected);
            for w in d.invariant_factors.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
    }
}
