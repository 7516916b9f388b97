//! Exact arithmetic in the Eisenstein integers `Z[ω]` and the field `Q(ω)`,
//! `ω = e^{2πi/3}`, plus reduced rational exponents.
//!
//! Elements are stored in the basis `{1, ω}` and multiplication reduces with
//! `ω² = −1 − ω`. Components are arbitrary precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(−1 + √−3)/2`.
pub fn omega_c64() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

/// `a + bω` with `a, b ∈ Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a² − ab + b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Complex conjugate; `ω̄ = ω² = −1 − ω`.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// Multiplication by `ω`: `ω(a + bω) = −b + (a − b)ω`.
    pub fn mul_omega(&self) -> Self {
        Self {
            a: -&self.b,
            b: &self.a - &self.b,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        Complex64::new(a, 0.0) + omega_c64() * b
    }
}

impl From<i64> for EisensteinInt {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: &EisensteinInt) -> EisensteinInt {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd ω², ω² = −1 − ω
        let bd = &self.b * &o.b;
        EisensteinInt {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(EisensteinInt, Add add, Sub sub, Mul mul);

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

pub fn eis_mul(u: &EisensteinInt, v: &EisensteinInt) -> EisensteinInt {
    u * v
}

pub fn eis_norm(u: &EisensteinInt) -> BigInt {
    u.norm()
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_omega_form(f, &self.a.to_string(), self.a.is_zero(), &self.b)
    }
}

/// `x + yω` with `x, y ∈ Q`, always stored reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloRational {
    pub x: BigRational,
    pub y: BigRational,
}

impl CycloRational {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// `ω² = −1 − ω`.
    pub fn omega_sq() -> Self {
        Self::from_ints(-1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            x: &self.x - &self.y,
            y: -&self.y,
        }
    }

    /// Field norm `x² − xy + y²`.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - &self.x * &self.y + &self.y * &self.y
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Self {
            x: c.x / &n,
            y: c.y / n,
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        Complex64::new(x, 0.0) + omega_c64() * y
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<&EisensteinInt> for CycloRational {
    fn from(u: &EisensteinInt) -> Self {
        Self::new(
            BigRational::from_integer(u.a.clone()),
            BigRational::from_integer(u.b.clone()),
        )
    }
}

impl From<i64> for CycloRational {
    fn from(a: i64) -> Self {
        Self::from_ints(a, 0)
    }
}

impl Add for &CycloRational {
    type Output = CycloRational;
    fn add(self, o: &CycloRational) -> CycloRational {
        CycloRational {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }
}

impl Sub for &CycloRational {
    type Output = CycloRational;
    fn sub(self, o: &CycloRational) -> CycloRational {
        CycloRational {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }
}

impl Mul for &CycloRational {
    type Output = CycloRational;
    fn mul(self, o: &CycloRational) -> CycloRational {
        let yy = &self.y * &o.y;
        CycloRational {
            x: &self.x * &o.x - &yy,
            y: &self.x * &o.y + &self.y * &o.x - yy,
        }
    }
}

impl Neg for &CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        CycloRational {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

forward_owned!(CycloRational, Add add, Sub sub, Mul mul);

impl Neg for CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        -&self
    }
}

pub fn cyclo_inv(v: &CycloRational) -> Result<CycloRational> {
    v.inv()
}

fn write_omega_form(
    f: &mut fmt::Formatter<'_>,
    real: &str,
    real_zero: bool,
    w: &(impl fmt::Display + Signed),
) -> fmt::Result {
    if w.is_zero() {
        return f.write_str(real);
    }
    if real_zero {
        return write!(f, "{w}*w");
    }
    if w.is_negative() {
        write!(f, "{real}-{}*w", w.abs())
    } else {
        write!(f, "{real}+{w}*w")
    }
}

/// Canonical text form: `x`, `y*w` or `x±|y|*w` with rationals printed as
/// `p` or `p/q`.
impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_omega_form(f, &self.x.to_string(), self.x.is_zero(), &self.y)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Accepts `x`, `x+y*w`, `x-y*w`, `y*w`, `w`, `-w` with rational `x`, `y`.
impl FromStr for CycloRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        if !s.ends_with('w') {
            return Ok(Self::new(parse_rational(&s)?, BigRational::zero()));
        }
        // split at the last sign that is not the leading character
        let body = &s[..s.len() - 1];
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (real, coeff) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let coeff = coeff.strip_prefix('+').unwrap_or(coeff);
        let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
        let y = match coeff {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            c => parse_rational(c)?,
        };
        let x = if real.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(real)?
        };
        Ok(Self::new(x, y))
    }
}

/// Reduced rational number used for fractional `q`-exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RationalExponent(Ratio<i64>);

impl TryFrom<String> for RationalExponent {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RationalExponent> for String {
    fn from(r: RationalExponent) -> String {
        r.to_string()
    }
}

impl RationalExponent {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(Ratio::new(numerator, denominator)))
    }

    pub fn integer(n: i64) -> Self {
        Self(Ratio::from_integer(n))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }

    /// Value in units of `1/units`, if it is an exact multiple.
    pub fn in_units(&self, units: i64) -> Option<i64> {
        let scaled = self.0 * units;
        scaled.is_integer().then(|| scaled.to_integer())
    }
}

impl Add for RationalExponent {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(self.0 + o.0)
    }
}

impl fmt::Display for RationalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for RationalExponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let r = parse_rational(s)?;
        let n = r.numer().to_i64().ok_or_else(|| Error::Parse(s.into()))?;
        let d = r.denom().to_i64().ok_or_else(|| Error::Parse(s.into()))?;
        Self::new(n, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eis(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn omega_squared() {
        assert_eq!(eis(0, 1) * eis(0, 1), eis(-1, -1));
        assert_eq!(eis(1, 0) * eis(7, -3), eis(7, -3));
        // (2 + ω)(1 − ω) = 2 − 2ω + ω − ω² = 2 − ω + 1 + ω = 3
        assert_eq!(eis(2, 1) * eis(1, -1), eis(3, 0));
        assert_eq!(eis(2, 1).conj(), eis(1, -1));
    }

    #[test]
    fn norms() {
        assert_eq!(eis(1, 1).norm(), 1.into());
        assert_eq!(eis(0, 0).norm(), 0.into());
        assert_eq!(eis(2, 1).norm(), 3.into());
    }

    #[test]
    fn inverses() {
        assert_eq!(CycloRational::one().inv().unwrap(), CycloRational::one());
        assert_eq!(CycloRational::omega().inv().unwrap(), CycloRational::from_ints(-1, -1));
        assert_eq!(
            CycloRational::from_frac(1, 3).inv().unwrap(),
            CycloRational::from_ints(3, 0)
        );
        assert_eq!(CycloRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_form() {
        let cases = ["0", "1/3", "w", "-w", "2*w", "1/2-3/4*w", "-5+w", "-1/3-1/3*w"];
        for c in cases {
            let v: CycloRational = c.parse().unwrap();
            let printed = v.to_string();
            let back: CycloRational = printed.parse().unwrap();
            assert_eq!(back, v, "{c}");
            assert_eq!(back.to_string(), printed);
        }
        assert_eq!("w".parse::<CycloRational>().unwrap().to_string(), "1*w");
        assert_eq!("2/4+0*w".parse::<CycloRational>().unwrap().to_string(), "1/2");
        assert!("1/0".parse::<CycloRational>().is_err());
        assert!("abc".parse::<CycloRational>().is_err());
        assert_eq!(eis(3, -2).to_string(), "3-2*w");
    }

    #[test]
    fn exponents() {
        let a = RationalExponent::new(2, 8).unwrap();
        assert_eq!(a, RationalExponent::new(1, 4).unwrap());
        assert_eq!(a.to_string(), "1/4");
        assert_eq!(RationalExponent::new(3, -6).unwrap().denominator(), 2);
        assert!(RationalExponent::new(1, 3).unwrap() < RationalExponent::new(1, 2).unwrap());
        assert_eq!(a.in_units(24), Some(6));
        assert_eq!(RationalExponent::new(1, 5).unwrap().in_units(24), None);
        assert_eq!("2/6".parse::<RationalExponent>().unwrap().to_string(), "1/3");
    }

    fn small_eis() -> impl Strategy<Value = EisensteinInt> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| eis(a, b))
    }

    fn small_cyclo() -> impl Strategy<Value = CycloRational> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| {
            CycloRational::new(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()))
        })
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(u in small_eis(), v in small_eis()) {
            prop_assert_eq!((&u * &v).norm(), u.norm() * v.norm());
            prop_assert!(u.norm() >= BigInt::zero());
            prop_assert_eq!(u.norm().is_zero(), u.is_zero());
        }

        #[test]
        fn embedding_is_a_homomorphism(u in small_eis(), v in small_eis()) {
            let lhs = (&u * &v).to_c64();
            let rhs = u.to_c64() * v.to_c64();
            prop_assert!((lhs - rhs).norm() < 1e-14 * (1.0 + lhs.norm()));
        }

        #[test]
        fn inverse_round_trips(v in small_cyclo()) {
            prop_assume!(!v.is_zero());
            prop_assert!((&v * &v.inv().unwrap()).is_one());
        }

        #[test]
        fn text_round_trip(v in small_cyclo()) {
            let s = v.to_string();
            let back: CycloRational = s.parse().unwrap();
            prop_assert_eq!(&back, &v);
            prop_assert_eq!(back.to_string(), s);
        }
    }
}
