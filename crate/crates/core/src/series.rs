//! Truncated formal power series over `Q`.
//!
//! A [`SeriesQ`] of order `N` stores the coefficients of `x^0 .. x^{N-1}`
//! and stands for every series agreeing with them modulo `x^N`. Binary
//! operations truncate to the smaller order, so results are always exact
//! where they are defined. [`Laurent`] shifts a series by an integer
//! valuation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl SeriesQ {
    /// Pads with zeros or truncates `coeffs` to length `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order, BigRational::zero());
        SeriesQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_ints(&[1], order)
    }

    /// `c x^k`.
    pub fn monomial(k: usize, c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(1, BigRational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `[x^k]`; `None` when `k` is at or beyond the truncation order.
    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        self.coeffs
            .get(k)
            .unwrap_or_else(|| panic!("[x^{k}] requested from a series of order {}", self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut b = vec![BigRational::zero(); n];
        b[0] = inv0.clone();
        for k in 1..n {
            let mut s = BigRational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &b[k - i];
            }
            b[k] = -(s * &inv0);
        }
        Ok(SeriesQ { coeffs: b })
    }

    /// Integer powers, negative ones through [`SeriesQ::inverse`].
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u64))
        } else {
            Ok(self.inverse()?.pow(k.unsigned_abs()))
        }
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &SeriesQ) -> Result<Self> {
        if inner.get(0).is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for a in self.coeffs[..n].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += a;
        }
        Ok(acc)
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * q(k as i64))
            .collect();
        SeriesQ { coeffs }
    }
}

impl<'a> Add<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;
    fn add(self, rhs: &SeriesQ) -> SeriesQ {
        let n = self.order().min(rhs.order());
        SeriesQ {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;
    fn sub(self, rhs: &SeriesQ) -> SeriesQ {
        let n = self.order().min(rhs.order());
        SeriesQ {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;
    fn neg(self) -> SeriesQ {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl<'a> Mul<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;
    fn mul(self, rhs: &SeriesQ) -> SeriesQ {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        SeriesQ { coeffs: out }
    }
}

impl fmt::Debug for SeriesQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if any {
                write!(f, " + ")?;
            }
            any = true;
            match k {
                0 => write!(f, "{a}")?,
                _ => write!(f, "({a})x^{k}")?,
            }
        }
        if !any {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl Serialize for SeriesQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut st = serializer.serialize_struct("SeriesQ", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SeriesQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: usize,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if coeffs.len() > raw.order {
            return Err(serde::de::Error::custom("more coefficients than the order"));
        }
        Ok(SeriesQ::new(coeffs, raw.order))
    }
}

/// `x^valuation * series`: known for exponents in
/// `valuation .. valuation + series.order()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent {
    pub valuation: i64,
    pub series: SeriesQ,
}

impl Laurent {
    pub fn from_series(series: SeriesQ) -> Self {
        Laurent {
            valuation: 0,
            series,
        }
    }

    /// `s^k` known through `precision` (exclusive).
    pub fn monomial(k: i64, precision: i64) -> Self {
        let order = (precision - k).max(0) as usize;
        Laurent {
            valuation: k,
            series: SeriesQ::one(order),
        }
    }

    /// First exponent whose coefficient is unknown.
    pub fn precision(&self) -> i64 {
        self.valuation + self.series.order() as i64
    }

    /// `[s^e]`; zero below the valuation, `None` at or past the precision.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.precision() {
            None
        } else if e < self.valuation {
            Some(BigRational::zero())
        } else {
            Some(self.series.coeff((e - self.valuation) as usize).clone())
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| a * q(self.valuation + k as i64))
            .collect::<Vec<_>>();
        let order = coeffs.len();
        Laurent {
            valuation: self.valuation - 1,
            series: SeriesQ::new(coeffs, order),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        Laurent {
            valuation: self.valuation + other.valuation,
            series: &self.series * &other.series,
        }
    }
}

/// `c(x) = Σ C_{k+1} x^{k+1}`, the root of `c² - c + x = 0` with `c(0) = 0`.
///
/// Comparing coefficients in `c = x + c²` gives `c_1 = 1` and
/// `c_k = Σ_{0<i<k} c_i c_{k-i}`.
pub fn catalan_series(order: usize) -> SeriesQ {
    let mut c: Vec<BigInt> = vec![BigInt::zero(); order];
    if order > 1 {
        c[1] = BigInt::one();
    }
    for k in 2..order {
        c[k] = (1..k).map(|i| &c[i] * &c[k - i]).sum();
    }
    SeriesQ::new(c.into_iter().map(BigRational::from_integer).collect(), order)
}

/// `[x^n] f(w)` where `w = x φ(w)`, via `(1/n) [s^{n-1}] f'(s) φ(s)^n`.
pub fn lagrange_coefficient(phi: &SeriesQ, f: &Laurent, n: i64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if phi.get(0).is_none_or(|c| c.is_zero()) {
        return Err(Error::NotInvertible);
    }
    let phin = Laurent::from_series(phi.powi(n)?);
    let prod = f.derivative().mul(&phin);
    let coeff = prod.coeff(n - 1).ok_or(Error::InsufficientOrder {
        needed: n,
        available: prod.precision(),
    })?;
    Ok(coeff / q(n))
}

/// The unique `w` with zero constant term and `w = x φ(w)`, to `order`.
pub fn invert_fixed_point(phi: &SeriesQ, order: usize) -> Result<SeriesQ> {
    if phi.get(0).is_none_or(|c| c.is_zero()) {
        return Err(Error::NotInvertible);
    }
    let x = SeriesQ::x(order);
    let phi = phi.truncate(order);
    let mut w = SeriesQ::zero(order);
    for _ in 0..order {
        w = &x * &phi.compose(&w)?;
    }
    Ok(w)
}

/// `[x^r] (1 - c(x))^{2r}`, by direct expansion.
pub fn elem_identity_value(r: u64) -> BigInt {
    let order = r as usize + 1;
    let one_minus_c = &SeriesQ::one(order) - &catalan_series(order);
    let v = one_minus_c.pow(2 * r).coeff(r as usize).clone();
    assert!(v.is_integer());
    v.to_integer()
}
