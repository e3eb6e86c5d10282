//! Exact coefficient fields.
//!
//! Everything downstream is written against the [`Field`] trait. The
//! workhorse implementation is [`QuadraticScalar`], the field ℚ(δ) with
//! δ² = n adjoined formally; [`BigRational`] also implements it for
//! algebras whose dimension is a perfect square.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension must be a positive integer (got 0)")]
    ZeroDimension,
    #[error("no square root of {0} in the rationals")]
    NotAPerfectSquare(u64),
    #[error("malformed scalar: {0}")]
    Malformed(String),
}

/// Which square root of n plays the role of δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum DeltaSign {
    #[default]
    Plus,
    Minus,
}

impl DeltaSign {
    pub fn from_i32(s: i32) -> Option<Self> {
        match s {
            1 => Some(DeltaSign::Plus),
            -1 => Some(DeltaSign::Minus),
            _ => None,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            DeltaSign::Plus => DeltaSign::Minus,
            DeltaSign::Minus => DeltaSign::Plus,
        }
    }

    fn as_bigint(self) -> BigInt {
        match self {
            DeltaSign::Plus => BigInt::one(),
            DeltaSign::Minus => -BigInt::one(),
        }
    }
}

/// Exact field of coefficients used by every algebraic routine in the crate.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_rational(r: &BigRational) -> Self;

    /// A square root of `n` with the requested sign.
    fn delta(n: u64, sign: DeltaSign) -> Result<Self, ScalarError>;

    fn try_inv(&self) -> Result<Self, ScalarError>;

    fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * &rhs.try_inv()?)
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    /// Square the element; the identity δ² = n is the defining relation.
    fn square(&self) -> Self {
        self.clone() * self
    }
}

impl Field for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn delta(n: u64, sign: DeltaSign) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroDimension);
        }
        let root = n.sqrt();
        if root * root != n {
            return Err(ScalarError::NotAPerfectSquare(n));
        }
        Ok(BigRational::from_integer(BigInt::from(root) * sign.as_bigint()))
    }

    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// An element `rat + coef_delta·δ` of ℚ(δ), δ² = n.
///
/// `n == 0` marks a pure rational that has not met a δ yet (this is what
/// `Zero::zero()` and `One::one()` produce); it adopts the `n` of whatever it
/// is combined with. Mixing two different nonzero `n` is a logic error and
/// panics.
#[derive(Clone, Debug)]
pub struct QuadraticScalar {
    rat: BigRational,
    coef_delta: BigRational,
    n: u64,
}

fn is_perfect_square(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

impl QuadraticScalar {
    pub fn rational(r: BigRational) -> Self {
        QuadraticScalar { rat: r, coef_delta: BigRational::zero(), n: 0 }
    }

    /// Build `rat + coef_delta·δ` in ℚ(√n); canonicalizes when n is a square.
    pub fn new(rat: BigRational, coef_delta: BigRational, n: u64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroDimension);
        }
        match is_perfect_square(n) {
            Some(r) => Ok(QuadraticScalar {
                rat: rat + coef_delta * BigRational::from_integer(BigInt::from(r)),
                coef_delta: BigRational::zero(),
                n,
            }),
            None => Ok(QuadraticScalar { rat, coef_delta, n }),
        }
    }

    pub fn make_delta(n: u64, sign: DeltaSign) -> Result<Self, ScalarError> {
        <Self as Field>::delta(n, sign)
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn coef_delta(&self) -> &BigRational {
        &self.coef_delta
    }

    /// Ambient dimension, or 0 for a scalar that never met δ.
    pub fn dimension(&self) -> u64 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.coef_delta.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadraticScalar { rat: self.rat.clone(), coef_delta: -self.coef_delta.clone(), n: self.n }
    }

    fn joint_n(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, m) | (m, 0) => m,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing scalars over ℚ(√{x}) and ℚ(√{y})"),
        }
    }

    fn norm(&self) -> BigRational {
        let n = BigRational::from_integer(BigInt::from(self.n));
        self.rat.clone() * &self.rat - n * &self.coef_delta * &self.coef_delta
    }
}

impl PartialEq for QuadraticScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.coef_delta.is_zero() && other.coef_delta.is_zero() {
            return self.rat == other.rat;
        }
        self.rat == other.rat && self.coef_delta == other.coef_delta && self.n == other.n
    }
}

impl Eq for QuadraticScalar {}

impl Zero for QuadraticScalar {
    fn zero() -> Self {
        QuadraticScalar::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef_delta.is_zero()
    }
}

impl One for QuadraticScalar {
    fn one() -> Self {
        QuadraticScalar::rational(BigRational::one())
    }
}

impl Neg for QuadraticScalar {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticScalar { rat: -self.rat, coef_delta: -self.coef_delta, n: self.n }
    }
}

impl<'a> AddAssign<&'a QuadraticScalar> for QuadraticScalar {
    fn add_assign(&mut self, rhs: &'a QuadraticScalar) {
        self.n = Self::joint_n(self.n, rhs.n);
        self.rat += &rhs.rat;
        if !rhs.coef_delta.is_zero() {
            self.coef_delta += &rhs.coef_delta;
        }
    }
}

impl<'a> SubAssign<&'a QuadraticScalar> for QuadraticScalar {
    fn sub_assign(&mut self, rhs: &'a QuadraticScalar) {
        self.n = Self::joint_n(self.n, rhs.n);
        self.rat -= &rhs.rat;
        if !rhs.coef_delta.is_zero() {
            self.coef_delta -= &rhs.coef_delta;
        }
    }
}

impl Add for QuadraticScalar {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl Sub for QuadraticScalar {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a QuadraticScalar> for QuadraticScalar {
    type Output = Self;
    fn mul(self, rhs: &'a QuadraticScalar) -> Self {
        let n = Self::joint_n(self.n, rhs.n);
        if self.coef_delta.is_zero() && rhs.coef_delta.is_zero() {
            return QuadraticScalar { rat: self.rat * &rhs.rat, coef_delta: BigRational::zero(), n };
        }
        let nn = BigRational::from_integer(BigInt::from(n));
        let rat = self.rat.clone() * &rhs.rat + nn * &self.coef_delta * &rhs.coef_delta;
        let coef_delta = self.rat * &rhs.coef_delta + self.coef_delta * &rhs.rat;
        QuadraticScalar { rat, coef_delta, n }
    }
}

impl Mul for QuadraticScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl MulAssign for QuadraticScalar {
    fn mul_assign(&mut self, rhs: Self) {
        *self = std::mem::take(self) * &rhs;
    }
}

impl Default for QuadraticScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Field for QuadraticScalar {
    fn from_rational(r: &BigRational) -> Self {
        QuadraticScalar::rational(r.clone())
    }

    fn delta(n: u64, sign: DeltaSign) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroDimension);
        }
        let s = BigRational::from_integer(sign.as_bigint());
        QuadraticScalar::new(BigRational::zero(), s, n)
    }

    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.coef_delta.is_zero() {
            return Ok(QuadraticScalar { rat: self.rat.recip(), coef_delta: BigRational::zero(), n: self.n });
        }
        // (a + bδ)⁻¹ = (a − bδ) / (a² − n b²)
        let norm = self.norm();
        let conj = self.conjugate();
        Ok(QuadraticScalar { rat: conj.rat / &norm, coef_delta: conj.coef_delta / &norm, n: self.n })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadraticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·δ", fmt_rational(&self.rat), fmt_rational(&self.coef_delta))
    }
}

/// Wire form `{"rat": [num, den], "delta": [num, den]}`; JSON handling lives in `io`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarRecord {
    pub rat: [BigInt; 2],
    pub delta: [BigInt; 2],
}

fn ratio_pair(r: &BigRational) -> [BigInt; 2] {
    [r.numer().clone(), r.denom().clone()]
}

fn pair_ratio(p: &[BigInt; 2]) -> Result<BigRational, ScalarError> {
    if p[1].is_zero() || p[1].is_negative() {
        return Err(ScalarError::Malformed(format!("denominator {} must be positive", p[1])));
    }
    Ok(BigRational::new(p[0].clone(), p[1].clone()))
}

impl QuadraticScalar {
    pub fn to_record(&self) -> ScalarRecord {
        ScalarRecord { rat: ratio_pair(&self.rat), delta: ratio_pair(&self.coef_delta) }
    }

    /// Reads a record into ℚ(√n).
    pub fn from_record(rec: &ScalarRecord, n: u64) -> Result<Self, ScalarError> {
        let rat = pair_ratio(&rec.rat)?;
        let d = pair_ratio(&rec.delta)?;
        if d.is_zero() {
            return Ok(QuadraticScalar::rational(rat));
        }
        QuadraticScalar::new(rat, d, n)
    }
}

/// Render any field element for reports.
pub fn render<F: Field>(x: &F) -> String {
    x.to_string()
}

/// Parses `"p/q"`, `"p"`, or an integer into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Malformed(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> QuadraticScalar {
        QuadraticScalar::rational(rational(p, d))
    }

    #[test]
    fn perfect_square_delta_is_rational() {
        let d = QuadraticScalar::make_delta(4, DeltaSign::Plus).unwrap();
        assert!(d.is_rational());
        assert_eq!(d, q(2, 1));
        let d = QuadraticScalar::make_delta(9, DeltaSign::Minus).unwrap();
        assert_eq!(d, q(-3, 1));
    }

    #[test]
    fn delta_squares_to_n() {
        let d = QuadraticScalar::make_delta(2, DeltaSign::Plus).unwrap();
        assert_eq!(d.square(), q(2, 1));
        let m = QuadraticScalar::make_delta(6, DeltaSign::Minus).unwrap();
        assert_eq!(*m.coef_delta(), rational(-1, 1));
        assert_eq!(m.square(), q(6, 1));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(QuadraticScalar::make_delta(0, DeltaSign::Plus), Err(ScalarError::ZeroDimension));
    }

    #[test]
    fn conjugate_product_and_inverse() {
        let d = QuadraticScalar::make_delta(2, DeltaSign::Plus).unwrap();
        let one = QuadraticScalar::one();
        assert_eq!((one.clone() + d.clone()) * (one - d.clone()), q(-1, 1));
        let inv = d.try_inv().unwrap();
        assert_eq!(inv, d.clone() * &q(1, 2));
        assert_eq!(inv * &d, q(1, 1));
        let s = (q(3, 2) + d.clone()) + (q(1, 2) - d);
        assert_eq!(s, q(2, 1));
        assert!(s.is_rational());
    }

    #[test]
    fn division_by_zero_is_distinct() {
        assert_eq!(QuadraticScalar::zero().try_inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(q(1, 1).try_div(&QuadraticScalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn display_matches_report_format() {
        let d = QuadraticScalar::make_delta(2, DeltaSign::Plus).unwrap();
        assert_eq!(d.to_string(), "0 + 1·δ");
        assert_eq!((q(1, 3) - d).to_string(), "1/3 + -1·δ");
    }

    #[test]
    fn record_round_trip_is_reduced() {
        let d = QuadraticScalar::make_delta(6, DeltaSign::Plus).unwrap();
        let x = q(4, 6) + d * &q(-2, 4);
        let rec = x.to_record();
        assert_eq!(rec.rat, [BigInt::from(2), BigInt::from(3)]);
        assert_eq!(rec.delta, [BigInt::from(-1), BigInt::from(2)]);
        assert_eq!(QuadraticScalar::from_record(&rec, 6).unwrap(), x);
        let bad = ScalarRecord { rat: [BigInt::from(1), BigInt::from(0)], delta: [BigInt::from(0), BigInt::from(1)] };
        assert!(QuadraticScalar::from_record(&bad, 6).is_err());
    }

    #[test]
    fn rational_field_delta() {
        assert_eq!(<BigRational as Field>::delta(4, DeltaSign::Minus).unwrap(), rational(-2, 1));
        assert_eq!(<BigRational as Field>::delta(2, DeltaSign::Plus), Err(ScalarError::NotAPerfectSquare(2)));
    }

    #[test]
    fn parse_shorthand() {
        assert_eq!(parse_rational("-3/6").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert!(parse_rational("x").is_err());
    }
}
