//! Named numerical and exact checks, grouped into suites, each producing a
//! [`VerificationReport`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::RationalExponent;
use crate::fibration::{
    compare_reference_variant, critical_points, fiber_branch_points, fibration_from_t, reference_point, BranchPoint,
    KodairaType, Location,
};
use crate::invariants::{
    burkhardt_B, d90, d90_relative, d90_static_check, igusa, inverse_period_map, IgusaName, WeightedPoint, BURKHARDT_WEIGHTS,
};
use crate::lattices::{
    base_change_t, basechange_gram, check_discriminant_trivial, check_isometry, direct_sum, discriminant_group,
    gram_a, gstar_gram, monodromy_consistency, monodromy_table, root_lattice, LatticeName,
};
use crate::modgroup::{
    check_symplectic_hermitian, equivariance_residual, group_closure, hermitian_norm, modular_iso_f,
    modular_iso_finv, molien_closed_form, molien_series, orth_images, psi_generators, psi_matrix, quadric,
    theta_transform_residual, GroupClosure, Generator, ModularMatrix, OrthGenerator,
};
use crate::qseries::{
    dk_leading_solutions, leading_term, qexp_burkhardt, qexp_dk_theta, qexp_igusa, qexp_siegel_theta,
    siegel_leading_solutions, FourierSeries, SeriesLocus,
};
use crate::theta::{
    dk_char, hermitian_theta, hermitian_thetas, restricted_theta_zmw, restricted_theta_zw, sample_points,
    siegel_thetas, HermitianPoint, Locus, TruncationSpec, DEFAULT_TAIL_TOL,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    pub runtime_ms: u64,
    pub details: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Lattice,
    Theta,
    Qexp,
    Invariants,
    Group,
    Fibration,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [
        Self::Lattice,
        Self::Theta,
        Self::Qexp,
        Self::Invariants,
        Self::Group,
        Self::Fibration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Lattice => "lattice",
            Self::Theta => "theta",
            Self::Qexp => "qexp",
            Self::Invariants => "invariants",
            Self::Group => "group",
            Self::Fibration => "fibration",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Self::All)
            .chain(Self::PARTS)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Knobs shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Base tolerance. Checks whose natural threshold is looser than `1e-9`
    /// scale it proportionally.
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
    pub radius: Option<u32>,
    /// Truncation order for series that are checked to vanish identically.
    pub order: RationalExponent,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            seed: 0,
            samples: 20,
            radius: None,
            order: RationalExponent::integer(2),
        }
    }
}

impl VerifyOptions {
    fn scaled(&self, natural: f64) -> f64 {
        self.tol * (natural / 1e-9)
    }

    fn truncation(&self) -> TruncationSpec {
        TruncationSpec {
            radius: self.radius,
            tail_tol: DEFAULT_TAIL_TOL,
        }
    }

    /// Number of points for the more expensive checks.
    fn half_samples(&self) -> usize {
        self.samples.div_ceil(2)
    }
}

/// Runs `f`, which returns `(residual, details)`, and packages the outcome.
/// Errors become failures with an infinite residual.
pub fn run_check<F>(id: &str, tolerance: f64, f: F) -> VerificationReport
where
    F: FnOnce() -> Result<(f64, String)>,
{
    let start = Instant::now();
    let (residual, details) = match f() {
        Ok(x) => x,
        Err(e) => (f64::INFINITY, format!("error: {e}")),
    };
    VerificationReport {
        check_id: id.to_string(),
        status: if residual <= tolerance { Status::Pass } else { Status::Fail },
        residual,
        tolerance,
        runtime_ms: start.elapsed().as_millis() as u64,
        details,
    }
}

/// Exact checks report residual 0 on success and 1 on failure.
fn exact(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let size = a.norm().max(b.norm());
    if size == 0.0 {
        0.0
    } else {
        (a - b).norm() / size
    }
}

// ---------------------------------------------------------------- lattice

pub fn check_lattice_discriminant() -> Result<(f64, String)> {
    let d = discriminant_group(&gram_a())?;
    Ok((exact(d.invariant_factors == [3]), format!("invariant factors {:?}", d.invariant_factors)))
}

pub fn check_lattice_base_change() -> Result<(f64, String)> {
    let h = basechange_gram(&base_change_t(), &gstar_gram())?;
    let u = root_lattice(LatticeName::U, 1);
    let target = direct_sum(&[root_lattice(LatticeName::A2, -1), u.clone(), u]);
    Ok((exact(h == target), format!("T·G*·Tᵀ = {:?}", h.entries())))
}

pub fn check_lattice_orth_images() -> Result<(f64, String)> {
    let g = gram_a();
    let mut bad = Vec::new();
    for (name, m) in orth_images() {
        if !check_isometry(&m, &g)? || !check_discriminant_trivial(&m, &g)? {
            bad.push(name);
        }
    }
    Ok((exact(bad.is_empty()), format!("6 matrices, failing: {bad:?}")))
}

pub fn check_lattice_monodromy() -> Result<(f64, String)> {
    let r = monodromy_consistency(&monodromy_table());
    let bad: Vec<_> = r.entries.iter().filter(|e| !e.ok).map(|e| e.label).collect();
    Ok((
        exact(r.passed()),
        format!("failing entries {bad:?}, identity orderings {}", r.identity_orderings.len()),
    ))
}

// ---------------------------------------------------------------- theta

/// `max |Θ_k(W) − restricted sum|` over all `k` and sampled points.
pub fn check_restriction(locus: Locus, seed: u64, samples: usize, tr: &TruncationSpec) -> Result<(f64, String)> {
    let mut worst: f64 = 0.0;
    for w in sample_points(seed, samples, locus) {
        for k in 0..5 {
            let ch = dk_char(k)?;
            let full = hermitian_theta(&ch, &w, tr)?;
            let r = match locus {
                Locus::Diagonal => restricted_theta_zw(&ch, w.tau, w.tau_prime, w.z, tr)?,
                Locus::Antidiagonal => restricted_theta_zmw(&ch, w.tau, w.tau_prime, w.z, tr)?,
                Locus::Generic => return Err(Error::Inadmissible("restriction needs z = ±w".into())),
            };
            worst = worst.max((full - r.value).norm());
        }
    }
    Ok((worst, format!("{samples} points on {locus}, 5 thetas")))
}

/// Max residual of `det(CW+D)⁻¹Θ(M⟨W⟩) = Ψ(M)Θ(W)` over the four generators.
pub fn check_theta_transform(seed: u64, samples: usize, tr: &TruncationSpec) -> Result<(f64, String)> {
    let mut per: BTreeMap<String, f64> = BTreeMap::new();
    for w in sample_points(seed, samples, Locus::Generic) {
        for g in Generator::ALL {
            let r = theta_transform_residual(g, &w, tr)?;
            let e = per.entry(g.to_string()).or_insert(0.0);
            *e = e.max(r);
        }
    }
    let worst = per.values().copied().fold(0.0, f64::max);
    let parts: Vec<String> = per.iter().map(|(g, r)| format!("{g}: {r:.2e}")).collect();
    Ok((worst, format!("{samples} points; {}", parts.join(", "))))
}

// ---------------------------------------------------------------- qexp

/// Expected leading term: `(e1, e2)` as `(num, den)` pairs and `(u, num, den)`
/// coefficients.
struct Lead {
    e1: (i64, i64),
    e2: (i64, i64),
    poly: Vec<(i64, i64, i64)>,
}

fn lead(e1: (i64, i64), e2: (i64, i64), poly: &[(i64, i64, i64)]) -> Lead {
    Lead {
        e1,
        e2,
        poly: poly.to_vec(),
    }
}

fn re(n: i64, d: i64) -> RationalExponent {
    RationalExponent::new(n, d).expect("nonzero denominator")
}

/// The series is `q1^{e1} q2^{e2}·(expected + higher terms)`.
fn matches_lead(s: &FourierSeries, want: &Lead) -> Result<bool> {
    let (a1, a2) = (re(want.e1.0, want.e1.1), re(want.e2.0, want.e2.1));
    let divisible = s.terms().iter().all(|t| t.e1 >= a1 && t.e2 >= a2);
    let lt = leading_term(s)?;
    let Some(g) = lt.single() else { return Ok(false) };
    let poly: BTreeMap<i64, BigRational> = want
        .poly
        .iter()
        .map(|&(u, n, d)| (u, BigRational::new(n.into(), d.into())))
        .collect();
    Ok(divisible && g.e1 == a1 && g.e2 == a2 && g.poly == poly)
}

fn siegel_theta_leads() -> Vec<Lead> {
    let one = lead((0, 1), (0, 1), &[(0, 1, 1)]);
    let q1 = || lead((1, 8), (0, 1), &[(0, 2, 1)]);
    let q2 = || lead((0, 1), (1, 8), &[(0, 2, 1)]);
    vec![
        one,
        q1(),
        q2(),
        lead((1, 8), (1, 8), &[(3, 2, 1), (-3, 2, 1)]),
        lead((0, 1), (0, 1), &[(0, 1, 1)]),
        lead((0, 1), (0, 1), &[(0, 1, 1)]),
        lead((0, 1), (0, 1), &[(0, 1, 1)]),
        q1(),
        q2(),
        lead((1, 8), (1, 8), &[(3, -2, 1), (-3, 2, 1)]),
    ]
}

fn dk_theta_leads(locus: SeriesLocus) -> Vec<Lead> {
    let (l3, l4): (&[(i64, i64, i64)], &[(i64, i64, i64)]) = match locus {
        SeriesLocus::Diagonal => (&[(-8, 3, 1), (4, 6, 1)], &[(8, 3, 1), (-4, 6, 1)]),
        _ => (&[(-2, 3, 1), (0, 3, 1), (2, 3, 1)], &[(-2, 3, 1), (0, 3, 1), (2, 3, 1)]),
    };
    vec![
        lead((0, 1), (0, 1), &[(0, 1, 1)]),
        lead((1, 3), (0, 1), &[(0, 3, 1)]),
        lead((0, 1), (1, 3), &[(0, 3, 1)]),
        lead((1, 3), (1, 3), l3),
        lead((1, 3), (1, 3), l4),
    ]
}

fn igusa_leads() -> Vec<(IgusaName, Lead)> {
    vec![
        (IgusaName::Psi4, lead((0, 1), (0, 1), &[(0, 1, 1)])),
        (IgusaName::Psi6, lead((0, 1), (0, 1), &[(0, 1, 1)])),
        (IgusaName::Chi10, lead((1, 1), (1, 1), &[(-12, -1, 4), (0, 1, 2), (12, -1, 4)])),
        (IgusaName::Chi12, lead((1, 1), (1, 1), &[(-12, 1, 12), (0, 10, 12), (12, 1, 12)])),
    ]
}

/// Laurent polynomial product, keys are exponents.
fn laurent_mul(a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn burkhardt_leads(locus: SeriesLocus) -> Vec<(u32, Lead)> {
    let scaled = |c: i64, p: &[(i64, i64)]| -> Vec<(i64, i64, i64)> { p.iter().map(|&(u, k)| (u, c * k, 1)).collect() };
    let one = || lead((0, 1), (0, 1), &[(0, 1, 1)]);
    match locus {
        SeriesLocus::Diagonal => vec![
            (4, one()),
            (6, one()),
            (10, lead((1, 1), (1, 1), &scaled(162, &[(-12, 1), (0, -2), (12, 1)]))),
            (12, lead((1, 1), (1, 1), &scaled(486, &[(-12, 1), (0, 10), (12, 1)]))),
        ],
        _ => {
            // (ξ − ξ⁻¹)⁶(ξ + ξ⁻¹)²
            let minus = BTreeMap::from([(1, 1), (-1, -1)]);
            let plus = BTreeMap::from([(1, 1), (-1, 1)]);
            let mut p = BTreeMap::from([(0, 1)]);
            for _ in 0..6 {
                p = laurent_mul(&p, &minus);
            }
            for _ in 0..2 {
                p = laurent_mul(&p, &plus);
            }
            let b18: Vec<(i64, i64)> = p.into_iter().collect();
            vec![
                (4, one()),
                (6, one()),
                (10, lead((1, 1), (1, 1), &scaled(81, &[(-4, 1), (-2, 2), (0, -6), (2, 2), (4, 1)]))),
                (12, lead((1, 1), (1, 1), &scaled(243, &[(-4, 1), (-2, 2), (0, 18), (2, 2), (4, 1)]))),
                (18, lead((2, 1), (2, 1), &scaled(19683, &b18))),
            ]
        }
    }
}

pub fn check_qexp_siegel_thetas() -> Result<(f64, String)> {
    let mut bad = Vec::new();
    for (j, want) in siegel_theta_leads().iter().enumerate() {
        if !matches_lead(&qexp_siegel_theta(j, re(1, 2))?, want)? {
            bad.push(j);
        }
    }
    Ok((exact(bad.is_empty()), format!("10 Siegel thetas, mismatches {bad:?}")))
}

pub fn check_qexp_igusa() -> Result<(f64, String)> {
    let mut bad = Vec::new();
    for (name, want) in igusa_leads() {
        if !matches_lead(&qexp_igusa(name, re(2, 1))?, &want)? {
            bad.push(name.to_string());
        }
    }
    Ok((exact(bad.is_empty()), format!("psi4, psi6, chi10, chi12; mismatches {bad:?}")))
}

pub fn check_qexp_dk_thetas() -> Result<(f64, String)> {
    let mut bad = Vec::new();
    for locus in [SeriesLocus::Diagonal, SeriesLocus::Antidiagonal] {
        for (k, want) in dk_theta_leads(locus).iter().enumerate() {
            if !matches_lead(&qexp_dk_theta(k, locus, re(1, 1))?, want)? {
                bad.push(format!("{k}@{locus}"));
            }
        }
    }
    Ok((exact(bad.is_empty()), format!("5 thetas on 2 loci, mismatches {bad:?}")))
}

pub fn check_qexp_burkhardt() -> Result<(f64, String)> {
    let mut bad = Vec::new();
    for locus in [SeriesLocus::Diagonal, SeriesLocus::Antidiagonal] {
        for (j, want) in burkhardt_leads(locus) {
            // one unit past the leading q-degree
            let order = re(want.e1.0 * 24 / want.e1.1 + 1, 24);
            if !matches_lead(&qexp_burkhardt(j, locus, order)?, &want)? {
                bad.push(format!("B{j}@{locus}"));
            }
        }
    }
    Ok((exact(bad.is_empty()), format!("B4..B18 leading terms, mismatches {bad:?}")))
}

/// `B18|_{z=w}` has no terms up to the given order.
pub fn check_qexp_b18_diagonal(order: RationalExponent) -> Result<(f64, String)> {
    let s = qexp_burkhardt(18, SeriesLocus::Diagonal, order)?;
    Ok((exact(s.is_zero()), format!("{} nonzero terms below q^{order}", s.len())))
}

/// Lattice points `(a, b)` attaining the leading `q`-exponent of each Siegel theta.
pub const SIEGEL_LEADING_POINTS: [&[[i64; 2]]; 10] = [
    &[[0, 0]],
    &[[0, 0], [-1, 0]],
    &[[0, 0], [0, -1]],
    &[[0, 0], [-1, 0], [0, -1], [-1, -1]],
    &[[0, 0]],
    &[[0, 0]],
    &[[0, 0]],
    &[[0, 0], [-1, 0]],
    &[[0, 0], [0, -1]],
    &[[0, 0], [-1, 0], [0, -1], [-1, -1]],
];

/// Lattice points `(a, b, c, d)` attaining the leading exponent of each `Θ_k` on `z = w`.
pub const DK_LEADING_POINTS: [&[[i64; 4]]; 5] = [
    &[[0, 0, 0, 0]],
    &[[0, 0, 0, 0], [0, 0, -1, 0], [-1, 0, -1, 0]],
    &[[0, 0, 0, 0], [0, 0, 0, -1], [0, -1, 0, -1]],
    &[
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 1, 0, 1],
        [0, 0, -1, 0],
        [0, 0, -1, 1],
        [0, 1, -1, 1],
        [-1, 0, -1, 0],
        [-1, 0, -1, 1],
        [-1, 1, -1, 1],
    ],
    &[
        [0, 0, 0, 0],
        [0, 0, 0, -1],
        [0, -1, 0, -1],
        [0, 0, -1, 0],
        [0, 0, -1, -1],
        [0, -1, -1, -1],
        [-1, 0, -1, 0],
        [-1, 0, -1, -1],
        [-1, -1, -1, -1],
    ],
];

// leading exponents, in units of 1/8 (Siegel) and 1/3 (Hermitian)
const SIEGEL_LEADING_ALPHA: [(i64, i64); 10] = [(0, 0), (1, 0), (0, 1), (1, 1), (0, 0), (0, 0), (0, 0), (1, 0), (0, 1), (1, 1)];
const DK_LEADING_ALPHA: [(i64, i64); 5] = [(0, 0), (1, 0), (0, 1), (1, 1), (1, 1)];

fn sorted<const N: usize>(s: &[[i64; N]]) -> Vec<[i64; N]> {
    let mut v = s.to_vec();
    v.sort();
    v
}

pub fn check_qexp_leading_points() -> Result<(f64, String)> {
    let mut bad = Vec::new();
    for (j, pts) in SIEGEL_LEADING_POINTS.iter().enumerate() {
        let s = siegel_leading_solutions(j)?;
        let (a1, a2) = SIEGEL_LEADING_ALPHA[j];
        if s.points != sorted(pts) || s.alpha1 != re(a1, 8) || s.alpha2 != re(a2, 8) {
            bad.push(format!("siegel {j}"));
        }
    }
    for (k, pts) in DK_LEADING_POINTS.iter().enumerate() {
        let s = dk_leading_solutions(k)?;
        let (a1, a2) = DK_LEADING_ALPHA[k];
        if s.points != sorted(pts) || s.alpha1 != re(a1, 3) || s.alpha2 != re(a2, 3) {
            bad.push(format!("dk {k}"));
        }
    }
    Ok((exact(bad.is_empty()), format!("15 solution sets, mismatches {bad:?}")))
}

// ---------------------------------------------------------------- invariants

/// `max |t18|` of the normalized inverse period map on `z = w`, with the
/// smallest generic value reported for comparison.
pub fn check_t18_diagonal(seed: u64, samples: usize, tr: &TruncationSpec) -> Result<(f64, String)> {
    let t18 = |w: &HermitianPoint| Ok(inverse_period_map(w, tr)?.normalized()?.t[4].norm());
    let mut worst: f64 = 0.0;
    for w in sample_points(seed, samples, Locus::Diagonal) {
        worst = worst.max(t18(&w)?);
    }
    let mut off = f64::INFINITY;
    for w in sample_points(seed, samples.min(5), Locus::Generic) {
        off = off.min(t18(&w)?);
    }
    Ok((worst, format!("{samples} points on z=w; smallest generic value {off:.2e}")))
}

/// `(max |d90|, max |d90|/scale)` at normalized period points.
fn max_normalized_d90(points: &[HermitianPoint], tr: &TruncationSpec) -> Result<(f64, f64)> {
    let mut worst = (0.0f64, 0.0f64);
    for w in points {
        let t = inverse_period_map(w, tr)?.normalized()?;
        worst = (worst.0.max(d90(&t).norm()), worst.1.max(d90_relative(&t)));
    }
    Ok(worst)
}

/// Largest of `|d90|` and `|d90|/scale` at normalized period points on
/// `z = −w`. Near the cusp every normalized `d90` is tiny, so the relative
/// value is what separates the locus from generic points; the smallest
/// generic values of both are reported for comparison.
pub fn check_d90_antidiagonal(seed: u64, samples: usize, tr: &TruncationSpec) -> Result<(f64, String)> {
    let (abs_on, rel_on) = max_normalized_d90(&sample_points(seed, samples, Locus::Antidiagonal), tr)?;
    let mut abs_off = f64::INFINITY;
    let mut rel_off = f64::INFINITY;
    for w in sample_points(seed, samples.min(5), Locus::Generic) {
        let t = inverse_period_map(&w, tr)?.normalized()?;
        abs_off = abs_off.min(d90(&t).norm());
        rel_off = rel_off.min(d90_relative(&t));
    }
    Ok((
        abs_on.max(rel_on),
        format!(
            "{samples} points on z=-w: |d90| {abs_on:.2e}, relative {rel_on:.2e}; smallest generic: |d90| {abs_off:.2e}, relative {rel_off:.2e}"
        ),
    ))
}

/// Relative error of `B4 = ψ4, B6 = ψ6, B10 = −2³3⁴χ10, B12 = 2³3⁶χ12` on `z = w`.
pub fn check_igusa_bridge(seed: u64, samples: usize, tr: &TruncationSpec) -> Result<(f64, String)> {
    let pairs = [
        (4, IgusaName::Psi4, 1.0),
        (6, IgusaName::Psi6, 1.0),
        (10, IgusaName::Chi10, -648.0),
        (12, IgusaName::Chi12, 5832.0),
    ];
    let mut per = [0.0f64; 4];
    for w in sample_points(seed, samples, Locus::Diagonal) {
        let w0 = w.siegel().ok_or_else(|| Error::Inadmissible("point not on z=w".into()))?;
        let th = hermitian_thetas(&w, tr)?;
        let sth = siegel_thetas(&w0, tr)?;
        for (i, (j, name, c)) in pairs.iter().enumerate() {
            let b = burkhardt_B(*j, &th)?;
            per[i] = per[i].max(rel_err(b, igusa(*name, &sth) * *c));
        }
    }
    let worst = per.iter().copied().fold(0.0, f64::max);
    Ok((worst, format!("{samples} points; per weight 4/6/10/12: {:.2e} {:.2e} {:.2e} {:.2e}", per[0], per[1], per[2], per[3])))
}

pub fn check_d90_static() -> Result<(f64, String)> {
    let s = d90_static_check();
    Ok((
        exact(s.passed()),
        format!(
            "{} monomials, {} weight violations, {} duplicates",
            s.monomials,
            s.violations.len(),
            s.duplicate_monomials.len()
        ),
    ))
}

fn random_vector(rng: &mut ChaCha8Rng) -> [Complex64; 5] {
    std::array::from_fn(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

/// Relative error of `B_j(Ψ(g)·x) = B_j(x)` at random `x`.
pub fn check_burkhardt_invariance(seed: u64, samples: usize) -> Result<(f64, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<_> = psi_generators().into_iter().map(|(g, m)| (g, m.to_c64())).collect();
    let mut per = [0.0f64; 5];
    for _ in 0..samples {
        let x = random_vector(&mut rng);
        for (_, m) in &gens {
            let y: [Complex64; 5] = std::array::from_fn(|i| (0..5).map(|j| m[i][j] * x[j]).sum());
            for (k, j) in BURKHARDT_WEIGHTS.into_iter().enumerate() {
                per[k] = per[k].max(rel_err(burkhardt_B(j, &x)?, burkhardt_B(j, &y)?));
            }
        }
    }
    let worst = per.iter().copied().fold(0.0, f64::max);
    let parts: Vec<String> = BURKHARDT_WEIGHTS.iter().zip(per).map(|(j, r)| format!("B{j}: {r:.2e}")).collect();
    Ok((worst, format!("{samples} random vectors, 4 generators; {}", parts.join(", "))))
}

// ---------------------------------------------------------------- group

pub const BURKHARDT_ORDER: usize = 25920;
pub const CLOSURE_CAP: usize = 1_000_000;

pub fn burkhardt_closure() -> Result<GroupClosure> {
    let gens: Vec<_> = psi_generators().into_iter().map(|(_, m)| m).collect();
    group_closure(&gens, CLOSURE_CAP)
}

/// Coefficients of `(1 + t⁴⁵)/Π(1 − t^d)`, `d ∈ {4, 6, 10, 12, 18}`.
pub fn burkhardt_molien_closed_form(max_degree: usize) -> Vec<u64> {
    let base = molien_closed_form(&[4, 6, 10, 12, 18], max_degree);
    (0..=max_degree).map(|n| base[n] + if n >= 45 { base[n - 45] } else { 0 }).collect()
}

pub fn check_group_order(g: &GroupClosure) -> Result<(f64, String)> {
    Ok((exact(g.order() == BURKHARDT_ORDER), format!("order {}", g.order())))
}

pub fn check_group_molien(g: &GroupClosure, max_degree: usize) -> Result<(f64, String)> {
    let got = molien_series(g, max_degree);
    let want = burkhardt_molien_closed_form(max_degree);
    let ok = got
        .integer_coeffs()
        .is_some_and(|c| c.iter().zip(&want).all(|(a, b)| *a == (*b).into()));
    let shown: Vec<String> = got.coeffs.iter().map(|c| c.to_string()).collect();
    Ok((exact(ok), format!("degrees 0..={max_degree}: {}", shown.join(","))))
}

pub fn check_group_no_scalars(g: &GroupClosure) -> Result<(f64, String)> {
    let s = g.nontrivial_scalars();
    Ok((exact(s.is_empty()), format!("{} nontrivial scalars", s.len())))
}

pub fn check_group_symplectic() -> Result<(f64, String)> {
    let bad: Vec<String> = Generator::ALL
        .iter()
        .filter(|g| !check_symplectic_hermitian(&ModularMatrix::generator(**g)))
        .map(|g| g.to_string())
        .collect();
    let psi_j = psi_matrix(Generator::J);
    let involution = psi_j.mul(&psi_j) == crate::modgroup::Rep5Matrix::identity();
    Ok((
        exact(bad.is_empty() && involution),
        format!("non-unitary generators {bad:?}; Psi(J)^2 = I: {involution}"),
    ))
}

/// Round trip `f(f⁻¹(W)) = W` plus the quadric and positivity conditions.
pub fn check_modular_iso(seed: u64, samples: usize) -> Result<(f64, String)> {
    let mut worst: f64 = 0.0;
    let mut positive = true;
    for w in sample_points(seed, samples, Locus::Generic) {
        let p = modular_iso_finv(&w);
        let back = modular_iso_f(&p)?;
        let d = [back.tau - w.tau, back.z - w.z, back.w - w.w, back.tau_prime - w.tau_prime];
        worst = worst.max(d.iter().map(|x| x.norm()).fold(quadric(&p).norm(), f64::max));
        positive &= hermitian_norm(&p) > 0.0;
    }
    Ok((if positive { worst } else { f64::INFINITY }, format!("{samples} points, positivity {positive}")))
}

pub fn check_equivariance(seed: u64, samples: usize) -> Result<(f64, String)> {
    let mut worst: f64 = 0.0;
    for w in sample_points(seed, samples, Locus::Generic) {
        for g in OrthGenerator::ALL {
            worst = worst.max(equivariance_residual(g, &w)?);
        }
    }
    Ok((worst, format!("{samples} points, 6 matrices")))
}

// ---------------------------------------------------------------- fibration

/// Random `t` away from `t18 = 0` and `d90 = 0`.
pub fn generic_weighted_points(seed: u64, count: usize) -> Vec<WeightedPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = WeightedPoint::new(random_vector(&mut rng));
        let Ok(n) = p.normalized() else { continue };
        if p.t[4].norm() > 0.05 && d90(&n).norm() > 1e-6 {
            out.push(p);
        }
    }
    out
}

/// `II*` at 0, `IV*` at ∞ and six `I1` points at each sampled `t`.
pub fn check_fibration_inventory(seed: u64, samples: usize) -> Result<(f64, String)> {
    let mut bad = 0;
    for t in generic_weighted_points(seed, samples) {
        let cps = critical_points(&fibration_from_t(&t))?;
        let at = |loc: fn(&Location) -> bool| cps.iter().filter(|c| loc(&c.location)).collect::<Vec<_>>();
        let zero = at(|l| matches!(l, Location::Finite(z) if z.norm() == 0.0));
        let inf = at(|l| matches!(l, Location::Infinity));
        let rest = at(|l| matches!(l, Location::Finite(z) if z.norm() != 0.0));
        let ok = zero.len() == 1
            && zero[0].kodaira == Some(KodairaType::IIStar)
            && inf.len() == 1
            && inf[0].kodaira == Some(KodairaType::IVStar)
            && rest.len() == 6
            && rest.iter().all(|c| c.kodaira == Some(KodairaType::I(1)));
        bad += usize::from(!ok);
    }
    Ok((exact(bad == 0), format!("{samples} random t, {bad} with a different inventory")))
}

/// Exactly one of the `x1⁶`-coefficient variants −3, −4 matches the listed
/// critical points within `tol`.
pub fn check_reference_variant(tol: f64) -> Result<(f64, String)> {
    let a = compare_reference_variant(-3.0, tol)?;
    let b = compare_reference_variant(-4.0, tol)?;
    let fmt_roots = |r: &[f64]| r.iter().map(|x| format!("{x:.3}")).collect::<Vec<_>>().join(", ");
    let details = format!(
        "c6=-3: [{}] deviation {:.3e} match {}; c6=-4: [{}] deviation {:.3e} match {}",
        fmt_roots(&a.roots),
        a.max_deviation,
        a.matches,
        fmt_roots(&b.roots),
        b.max_deviation,
        b.matches
    );
    Ok((exact(a.matches != b.matches), details))
}

/// Branch points of the reference fibre over `x1 = i`.
pub fn check_branch_points() -> Result<(f64, String)> {
    let f = fibration_from_t(&reference_point());
    let bp = fiber_branch_points(&f, Complex64::new(0.0, 1.0))?;
    let got: Vec<Complex64> = bp
        .iter()
        .filter_map(|b| match b {
            BranchPoint::Finite(z) => Some(*z),
            BranchPoint::Infinity => None,
        })
        .collect();
    let want = [
        Complex64::new(-4.0, 0.0),
        Complex64::new(0.418861, -1.58114),
        Complex64::new(3.58114, 1.58114),
    ];
    let worst = want
        .iter()
        .map(|w| got.iter().map(|g| (g - w).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    Ok((worst, format!("roots {got:?} and infinity")))
}

// ---------------------------------------------------------------- suites

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let tr = opts.truncation();
    let (seed, n) = (opts.seed, opts.samples);
    let mut out = Vec::new();
    let mut push = |id: &str, tol: f64, f: &dyn Fn() -> Result<(f64, String)>| out.push(run_check(id, tol, f));
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    for part in parts {
        match part {
            Suite::Lattice => {
                push("lattice.base_change", 0.0, &check_lattice_base_change);
                push("lattice.discriminant", 0.0, &check_lattice_discriminant);
                push("lattice.monodromy", 0.0, &check_lattice_monodromy);
                push("lattice.orth_images", 0.0, &check_lattice_orth_images);
            }
            Suite::Theta => {
                push("theta.restriction_zmw", opts.tol, &|| check_restriction(Locus::Antidiagonal, seed, n, &tr));
                push("theta.restriction_zw", opts.tol, &|| check_restriction(Locus::Diagonal, seed, n, &tr));
                push("theta.transform", opts.scaled(1e-8), &|| check_theta_transform(seed, opts.half_samples(), &tr));
            }
            Suite::Qexp => {
                push("qexp.b18_diagonal_zero", 0.0, &|| check_qexp_b18_diagonal(opts.order));
                push("qexp.burkhardt_leading", 0.0, &check_qexp_burkhardt);
                push("qexp.dk_theta_leading", 0.0, &check_qexp_dk_thetas);
                push("qexp.igusa_leading", 0.0, &check_qexp_igusa);
                push("qexp.siegel_theta_leading", 0.0, &check_qexp_siegel_thetas);
                push("qexp.leading_points", 0.0, &check_qexp_leading_points);
            }
            Suite::Invariants => {
                push("invariants.burkhardt_invariance", opts.tol, &|| check_burkhardt_invariance(seed, n));
                push("invariants.d90_antidiagonal", opts.scaled(1e-5), &|| check_d90_antidiagonal(seed, n, &tr));
                push("invariants.d90_static", 0.0, &check_d90_static);
                push("invariants.igusa_bridge", opts.scaled(1e-8), &|| check_igusa_bridge(seed, n, &tr));
                push("invariants.t18_diagonal", opts.scaled(1e-8), &|| check_t18_diagonal(seed, n, &tr));
            }
            Suite::Group => {
                let closure = burkhardt_closure();
                let on_closure = |f: &dyn Fn(&GroupClosure) -> Result<(f64, String)>| {
                    closure.as_ref().map_err(Clone::clone).and_then(f)
                };
                push("group.equivariance", opts.tol, &|| check_equivariance(seed, opts.half_samples()));
                push("group.modular_iso", opts.tol, &|| check_modular_iso(seed, n));
                push("group.molien", 0.0, &|| on_closure(&|g| check_group_molien(g, 20)));
                push("group.no_scalars", 0.0, &|| on_closure(&check_group_no_scalars));
                push("group.order", 0.0, &|| on_closure(&check_group_order));
                push("group.symplectic", 0.0, &check_group_symplectic);
            }
            Suite::Fibration => {
                push("fibration.branch_points", 1e-4, &check_branch_points);
                push("fibration.inventory", 0.0, &|| check_fibration_inventory(seed, opts.half_samples()));
                push("fibration.reference_variant", 0.0, &|| check_reference_variant(0.01));
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_residual() {
        assert!(run_check("x", 1e-9, || Ok((1e-10, String::new()))).passed());
        assert!(!run_check("x", 1e-9, || Ok((1e-8, String::new()))).passed());
        let r = run_check("x", 1.0, || Err(Error::ZeroPoint));
        assert!(!r.passed() && r.details.contains("error"));
    }

    #[test]
    fn closed_form_includes_degree_45_term() {
        let c = burkhardt_molien_closed_form(45);
        let base = molien_closed_form(&[4, 6, 10, 12, 18], 45);
        assert_eq!(c[45], base[45] + 1);
        assert_eq!(&c[..21], &base[..21]);
    }

    #[test]
    fn b18_lead_polynomial() {
        let leads = burkhardt_leads(SeriesLocus::Antidiagonal);
        let p = &leads[4].1.poly;
        // (ξ − ξ⁻¹)⁶(ξ + ξ⁻¹)² at ξ = 1 vanishes; its ξ⁸ coefficient is 1
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
        assert!(p.contains(&(8, 19683, 1)));
    }

    #[test]
    fn suite_names() {
        assert_eq!("group".parse::<Suite>().unwrap(), Suite::Group);
        assert!("nope".parse::<Suite>().is_err());
    }
}
