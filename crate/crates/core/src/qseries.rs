//! Truncated Fourier expansions with exact rational coefficients.
//!
//! A series is a finite sum of `c·q1^{e1}·q2^{e2}·x^u` where `x` is the
//! locus's auxiliary variable: `ζ^{1/12}` (`ζ = e^{2πiz}`) for Siegel points
//! and the locus `z = w`, and `ξ = e^{πz/√3}` for `z = −w`. The `q`-exponents
//! are stored in units of `1/24`; only terms with `e1 < order` and
//! `e2 < order` are kept.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::RationalExponent;
use crate::invariants::{burkhardt_monomials, IgusaName, GOPEL_COMPLEMENTS, PSI6_TRIPLES};
use crate::theta::{DK_CHARS, SIEGEL_CHARS};

/// Common denominator of all `q`-exponents.
pub const Q_UNITS: i64 = 24;

/// Largest supported truncation order.
pub const MAX_ORDER: i64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesLocus {
    Siegel,
    /// `z = w`, auxiliary variable `ζ^{1/12}`.
    Diagonal,
    /// `z = −w`, auxiliary variable `ξ`.
    Antidiagonal,
}

impl SeriesLocus {
    pub fn name(self) -> &'static str {
        match self {
            Self::Siegel => "siegel",
            Self::Diagonal => "z=w",
            Self::Antidiagonal => "z=-w",
        }
    }
}

impl fmt::Display for SeriesLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesLocus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "siegel" => Ok(Self::Siegel),
            "z=w" | "zw" => Ok(Self::Diagonal),
            "z=-w" | "zmw" => Ok(Self::Antidiagonal),
            _ => Err(Error::Parse(format!("unknown locus `{s}`"))),
        }
    }
}

/// `(e1·24, e2·24, u)`.
type Key = (i64, i64, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierSeries {
    locus: SeriesLocus,
    order24: i64,
    terms: BTreeMap<Key, BigRational>,
}

fn order_units(order: RationalExponent) -> Result<i64> {
    match order.in_units(Q_UNITS) {
        Some(o) if o > 0 && o <= MAX_ORDER * Q_UNITS => Ok(o),
        _ => Err(Error::OrderOutOfRange(format!(
            "{order} (need 0 < order <= {MAX_ORDER}, denominator dividing {Q_UNITS})"
        ))),
    }
}

fn exponent(units: i64) -> RationalExponent {
    RationalExponent::new(units, Q_UNITS).expect("nonzero denominator")
}

/// One term of a series in exact form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub e1: RationalExponent,
    pub e2: RationalExponent,
    pub u: i64,
    pub c: BigRational,
}

impl FourierSeries {
    pub fn zero(locus: SeriesLocus, order: RationalExponent) -> Result<Self> {
        Ok(Self {
            locus,
            order24: order_units(order)?,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(locus: SeriesLocus, order: RationalExponent) -> Result<Self> {
        Self::monomial(locus, order, RationalExponent::integer(0), RationalExponent::integer(0), 0, BigRational::one())
    }

    pub fn monomial(
        locus: SeriesLocus,
        order: RationalExponent,
        e1: RationalExponent,
        e2: RationalExponent,
        u: i64,
        c: BigRational,
    ) -> Result<Self> {
        let mut s = Self::zero(locus, order)?;
        let bad = || Error::OrderOutOfRange(format!("exponent {e1}, {e2} not a multiple of 1/{Q_UNITS}"));
        let k = (e1.in_units(Q_UNITS).ok_or_else(bad)?, e2.in_units(Q_UNITS).ok_or_else(bad)?, u);
        if k.0 < 0 || k.1 < 0 {
            return Err(Error::OrderOutOfRange("negative q-exponent".into()));
        }
        s.insert(k, c);
        Ok(s)
    }

    fn insert(&mut self, k: Key, c: BigRational) {
        if k.0 < self.order24 && k.1 < self.order24 && !c.is_zero() {
            *self.terms.entry(k).or_insert_with(BigRational::zero) += c;
            if self.terms[&k].is_zero() {
                self.terms.remove(&k);
            }
        }
    }

    pub fn locus(&self) -> SeriesLocus {
        self.locus
    }

    pub fn order(&self) -> RationalExponent {
        exponent(self.order24)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by `(e1, e2, u)`.
    pub fn terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .map(|(&(a, b, u), c)| Term {
                e1: exponent(a),
                e2: exponent(b),
                u,
                c: c.clone(),
            })
            .collect()
    }

    pub fn coefficient(&self, e1: RationalExponent, e2: RationalExponent, u: i64) -> BigRational {
        match (e1.in_units(Q_UNITS), e2.in_units(Q_UNITS)) {
            (Some(a), Some(b)) => self.terms.get(&(a, b, u)).cloned().unwrap_or_else(BigRational::zero),
            _ => BigRational::zero(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut s = Self {
            locus: self.locus,
            order24: self.order24,
            terms: BTreeMap::new(),
        };
        for (&key, c) in &self.terms {
            s.insert(key, c * k);
        }
        s
    }

    /// Numeric value at `(τ, τ′, z)` with `q_j = e^{2πiτ_j}`.
    pub fn eval(&self, tau: Complex64, tau_prime: Complex64, z: Complex64) -> Complex64 {
        let i2pi = Complex64::new(0.0, 2.0 * PI);
        self.terms
            .iter()
            .map(|(&(a, b, u), c)| {
                let zpart = match self.locus {
                    SeriesLocus::Siegel | SeriesLocus::Diagonal => i2pi * z * (u as f64 / 12.0),
                    SeriesLocus::Antidiagonal => z * (u as f64 * PI / 3f64.sqrt()),
                };
                let ex = i2pi * (tau * (a as f64) + tau_prime * (b as f64)) / Q_UNITS as f64 + zpart;
                ex.exp() * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    /// Sorted `{e1, e2, u, c}` records with exponents and coefficients as
    /// `"p/q"` strings.
    pub fn dump(&self) -> Vec<SeriesRecord> {
        self.terms()
            .into_iter()
            .map(|t| SeriesRecord {
                e1: t.e1.to_string(),
                e2: t.e2.to_string(),
                u: t.u,
                c: t.c.to_string(),
            })
            .collect()
    }

    pub fn dump_json(&self) -> String {
        serde_json::to_string(&self.dump()).expect("plain records serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRecord {
    pub e1: String,
    pub e2: String,
    pub u: i64,
    pub c: String,
}

fn same_locus(a: &FourierSeries, b: &FourierSeries) -> Result<()> {
    if a.locus != b.locus {
        return Err(Error::LocusMismatch(a.locus.name(), b.locus.name()));
    }
    Ok(())
}

pub fn series_add(a: &FourierSeries, b: &FourierSeries) -> Result<FourierSeries> {
    same_locus(a, b)?;
    let mut s = FourierSeries {
        locus: a.locus,
        order24: a.order24.min(b.order24),
        terms: BTreeMap::new(),
    };
    for (&k, c) in a.terms.iter().chain(&b.terms) {
        s.insert(k, c.clone());
    }
    Ok(s)
}

pub fn series_mul(a: &FourierSeries, b: &FourierSeries) -> Result<FourierSeries> {
    same_locus(a, b)?;
    let order24 = a.order24.min(b.order24);
    let mut acc: HashMap<Key, BigRational> = HashMap::new();
    for (&(a1, a2, au), x) in &a.terms {
        for (&(b1, b2, bu), y) in &b.terms {
            let k = (a1 + b1, a2 + b2, au + bu);
            if k.0 < order24 && k.1 < order24 {
                *acc.entry(k).or_insert_with(BigRational::zero) += x * y;
            }
        }
    }
    Ok(FourierSeries {
        locus: a.locus,
        order24,
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    })
}

pub fn series_pow(a: &FourierSeries, n: u32) -> FourierSeries {
    let mut acc = FourierSeries {
        locus: a.locus,
        order24: a.order24,
        terms: BTreeMap::from([((0, 0, 0), BigRational::one())]),
    };
    for _ in 0..n {
        acc = series_mul(&acc, a).expect("same locus");
    }
    acc
}

/// Integer-coefficient series used while assembling invariants.
#[derive(Clone, Debug, Default)]
struct IntSeries(HashMap<Key, i128>);

impl IntSeries {
    fn one() -> Self {
        Self(HashMap::from([((0, 0, 0), 1)]))
    }

    fn mul(&self, other: &Self, order24: i64) -> Self {
        let mut out: HashMap<Key, i128> = HashMap::new();
        for (&(a1, a2, au), &x) in &self.0 {
            for (&(b1, b2, bu), &y) in &other.0 {
                let (e1, e2) = (a1 + b1, a2 + b2);
                if e1 < order24 && e2 < order24 {
                    *out.entry((e1, e2, au + bu)).or_insert(0) += x * y;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        Self(out)
    }

    fn add_scaled(&mut self, other: &Self, k: i128) {
        for (&key, &c) in &other.0 {
            *self.0.entry(key).or_insert(0) += k * c;
        }
        self.0.retain(|_, c| *c != 0);
    }

    fn powers(&self, max: u32, order24: i64) -> Vec<Self> {
        let mut v = vec![Self::one()];
        for _ in 0..max {
            let next = v.last().unwrap().mul(self, order24);
            v.push(next);
        }
        v
    }

    fn into_series(self, locus: SeriesLocus, order24: i64, denom: &BigInt) -> FourierSeries {
        let terms = self
            .0
            .into_iter()
            .filter(|&(k, c)| c != 0 && k.0 < order24 && k.1 < order24)
            .map(|(k, c)| (k, BigRational::new(BigInt::from(c), denom.clone())))
            .collect();
        FourierSeries { locus, order24, terms }
    }
}

/// Box radius containing every point whose `q`-exponent can be below
/// `order24/24`: for Siegel sums `x²/2 ≥ (R + 1/2)²/2`.
fn siegel_radius(order24: i64) -> i64 {
    let o = order24 as f64 / Q_UNITS as f64;
    (2.0 * o).sqrt().ceil() as i64 + 1
}

/// For Eisenstein sums, `|a + cω + sδ| ≥ (√3/2)·max(|a|,|c|) − 1/√3`.
fn dk_radius(order24: i64) -> i64 {
    let o = order24 as f64 / Q_UNITS as f64;
    let s3 = 3f64.sqrt();
    ((o.sqrt() + 1.0 / s3) * 2.0 / s3).ceil() as i64 + 1
}

fn siegel_int(j: usize, order24: i64) -> Result<IntSeries> {
    let ([s, t], [u, v]) = *SIEGEL_CHARS.get(j).ok_or(Error::UnknownIndex(j))?;
    let (s, t, u, v) = (s as i64, t as i64, u as i64, v as i64);
    let r = siegel_radius(order24);
    let mut out = IntSeries::default();
    for a in -r..=r {
        for b in -r..=r {
            let (x2, y2) = (2 * a + s, 2 * b + t);
            let key = (3 * x2 * x2, 3 * y2 * y2, 3 * x2 * y2);
            if key.0 >= order24 || key.1 >= order24 {
                continue;
            }
            let n = a * u + b * v + (s * u + t * v) / 2;
            *out.0.entry(key).or_insert(0) += if n.rem_euclid(2) == 0 { 1 } else { -1 };
        }
    }
    out.0.retain(|_, c| *c != 0);
    Ok(out)
}

/// `q`-exponents (in 1/24) and auxiliary exponent of the lattice point
/// `(a, b, c, d)` in `Θ_k`.
fn dk_key(p: [i64; 2], n: [i64; 4], locus: SeriesLocus) -> Key {
    let [s, t] = p;
    let [a, b, c, d] = n;
    let e1 = 8 * (3 * (a * a - a * c + c * c + s * c) + s * s);
    let e2 = 8 * (3 * (b * b - b * d + d * d + t * d) + t * t);
    let u = match locus {
        SeriesLocus::Antidiagonal => -6 * (a * d - b * c) - 4 * (a * t - b * s) + 2 * (c * t - d * s),
        _ => 12 * (2 * a * b + 2 * c * d - a * d - b * c + t * c + s * d) + 8 * s * t,
    };
    (e1, e2, u)
}

fn dk_int(k: usize, locus: SeriesLocus, order24: i64) -> Result<IntSeries> {
    let p = DK_CHARS.get(k).ok_or(Error::UnknownIndex(k))?.map(i64::from);
    let r = dk_radius(order24);
    let mut out = IntSeries::default();
    for a in -r..=r {
        for c in -r..=r {
            for b in -r..=r {
                for d in -r..=r {
                    let key = dk_key(p, [a, b, c, d], locus);
                    if key.0 < order24 && key.1 < order24 {
                        *out.0.entry(key).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn qexp_siegel_theta(j: usize, order: RationalExponent) -> Result<FourierSeries> {
    let o = order_units(order)?;
    Ok(siegel_int(j, o)?.into_series(SeriesLocus::Siegel, o, &BigInt::one()))
}

pub fn qexp_dk_theta(k: usize, locus: SeriesLocus, order: RationalExponent) -> Result<FourierSeries> {
    if locus == SeriesLocus::Siegel {
        return Err(Error::LocusMismatch("z=w or z=-w", "siegel"));
    }
    let o = order_units(order)?;
    Ok(dk_int(k, locus, o)?.into_series(locus, o, &BigInt::one()))
}

pub fn qexp_igusa(name: IgusaName, order: RationalExponent) -> Result<FourierSeries> {
    let o = order_units(order)?;
    if o > 2 * Q_UNITS {
        return Err(Error::OrderOutOfRange(format!("{order} (Igusa expansions need order <= 2)")));
    }
    let th: Vec<IntSeries> = (0..10).map(|j| siegel_int(j, o)).collect::<Result<_>>()?;
    let p4: Vec<IntSeries> = th.iter().map(|t| t.powers(4, o).pop().unwrap()).collect();
    let mut acc = IntSeries::default();
    let denom: BigInt = match name {
        IgusaName::Psi4 => {
            for x in &p4 {
                acc.add_scaled(&x.mul(x, o), 1);
            }
            4.into()
        }
        IgusaName::Psi6 => {
            for (s, [a, b, c]) in PSI6_TRIPLES {
                acc.add_scaled(&p4[a].mul(&p4[b], o).mul(&p4[c], o), s.into());
            }
            4.into()
        }
        IgusaName::Chi10 => {
            let mut prod = IntSeries::one();
            for t in &th {
                prod = prod.mul(&t.mul(t, o), o);
            }
            acc.add_scaled(&prod, -1);
            (1i64 << 14).into()
        }
        IgusaName::Chi12 => {
            for comp in GOPEL_COMPLEMENTS {
                let mut prod = IntSeries::one();
                for i in comp {
                    prod = prod.mul(&p4[i], o);
                }
                acc.add_scaled(&prod, 1);
            }
            ((1i64 << 17) * 3).into()
        }
    };
    Ok(acc.into_series(SeriesLocus::Siegel, o, &denom))
}

pub fn qexp_burkhardt(j: u32, locus: SeriesLocus, order: RationalExponent) -> Result<FourierSeries> {
    if locus == SeriesLocus::Siegel {
        return Err(Error::LocusMismatch("z=w or z=-w", "siegel"));
    }
    let monos = burkhardt_monomials(j)?;
    let o = order_units(order)?;
    let th: Vec<IntSeries> = (0..5).map(|k| dk_int(k, locus, o)).collect::<Result<_>>()?;
    let pw: Vec<Vec<IntSeries>> = th.iter().map(|t| t.powers(j, o)).collect();
    // Θ1, Θ3, Θ4 each carry q1^{1/3}; Θ2, Θ3, Θ4 carry q2^{1/3}
    let mut acc = IntSeries::default();
    for (c, e) in monos {
        let lead1 = 8 * (e[1] + e[3] + e[4]) as i64;
        let lead2 = 8 * (e[2] + e[3] + e[4]) as i64;
        if lead1 >= o || lead2 >= o {
            continue;
        }
        let mut prod = IntSeries::one();
        for (k, &ek) in e.iter().enumerate() {
            if ek > 0 {
                prod = prod.mul(&pw[k][ek as usize], o);
            }
        }
        acc.add_scaled(&prod, c.into());
    }
    Ok(acc.into_series(locus, o, &BigInt::one()))
}

/// Terms of minimal total `q`-degree `e1 + e2`, one group per `(e1, e2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub groups: Vec<LeadingGroup>,
}

/// `q1^{e1}·q2^{e2}·Σ_u c_u x^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingGroup {
    pub e1: RationalExponent,
    pub e2: RationalExponent,
    pub poly: BTreeMap<i64, BigRational>,
}

impl LeadingTerm {
    /// The only group, if the leading term is a single `q`-monomial.
    pub fn single(&self) -> Option<&LeadingGroup> {
        match self.groups.as_slice() {
            [g] => Some(g),
            _ => None,
        }
    }
}

pub fn leading_term(s: &FourierSeries) -> Result<LeadingTerm> {
    let min = s.terms.keys().map(|k| k.0 + k.1).min().ok_or(Error::ZeroSeries)?;
    let mut groups: BTreeMap<(i64, i64), BTreeMap<i64, BigRational>> = BTreeMap::new();
    for (&(a, b, u), c) in &s.terms {
        if a + b == min {
            groups.entry((a, b)).or_default().insert(u, c.clone());
        }
    }
    Ok(LeadingTerm {
        groups: groups
            .into_iter()
            .map(|((a, b), poly)| LeadingGroup {
                e1: exponent(a),
                e2: exponent(b),
                poly,
            })
            .collect(),
    })
}

/// Leading exponents `(α1, α2)` of a theta and the lattice points attaining
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingSolutions<const N: usize> {
    pub alpha1: RationalExponent,
    pub alpha2: RationalExponent,
    pub points: Vec<[i64; N]>,
}

pub fn siegel_leading_solutions(j: usize) -> Result<LeadingSolutions<2>> {
    let ([s, t], _) = *SIEGEL_CHARS.get(j).ok_or(Error::UnknownIndex(j))?;
    let (s, t) = (s as i64, t as i64);
    let mut pts = Vec::new();
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            pts.push(([a, b], (3 * (2 * a + s).pow(2), 3 * (2 * b + t).pow(2))));
        }
    }
    Ok(collect_minimal(pts))
}

pub fn dk_leading_solutions(k: usize) -> Result<LeadingSolutions<4>> {
    let p = DK_CHARS.get(k).ok_or(Error::UnknownIndex(k))?.map(i64::from);
    let mut pts = Vec::new();
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            for c in -3..=3i64 {
                for d in -3..=3i64 {
                    let (e1, e2, _) = dk_key(p, [a, b, c, d], SeriesLocus::Diagonal);
                    pts.push(([a, b, c, d], (e1, e2)));
                }
            }
        }
    }
    Ok(collect_minimal(pts))
}

/// The exponents split as `q1^{e1}·q2^{e2}` with independent minima, so the
/// minimal pair is attained exactly where both coordinates are minimal.
fn collect_minimal<const N: usize>(pts: Vec<([i64; N], (i64, i64))>) -> LeadingSolutions<N> {
    let m1 = pts.iter().map(|p| p.1 .0).min().unwrap_or(0);
    let m2 = pts.iter().map(|p| p.1 .1).min().unwrap_or(0);
    let mut points: Vec<[i64; N]> = pts
        .into_iter()
        .filter(|p| p.1 == (m1, m2))
        .map(|p| p.0)
        .collect();
    points.sort();
    LeadingSolutions {
        alpha1: exponent(m1),
        alpha2: exponent(m2),
        points,
    }
}

/// Pretty form of a Laurent polynomial in the auxiliary variable, e.g.
/// `162*x^12 - 324 + 162*x^-12`.
pub fn format_poly(poly: &BTreeMap<i64, BigRational>, var: &str) -> String {
    let mut out = String::new();
    for (i, (u, c)) in poly.iter().rev().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        match *u {
            0 => out.push_str(&a.to_string()),
            _ => out.push_str(&format!("{a}*{var}^{u}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
