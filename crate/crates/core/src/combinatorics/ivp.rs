use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{bigint_to_i64, binomial_at};
use crate::error::{Error, Result};

/// A polynomial `p(x) = Σ b_k C(x, k)` with integer `b_k`.
///
/// Every such polynomial takes integer values on the integers, and every
/// integer-valued polynomial has this form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerValuedPoly {
    coeffs: Vec<BigInt>,
}

impl IntegerValuedPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntegerValuedPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerValuedPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, b)| b * binomial_at(x, k))
            .sum()
    }

    pub fn eval(&self, x: i64) -> BigInt {
        self.eval_big(&BigInt::from(x))
    }

    /// The constant value, if the polynomial is constant and fits in `i64`.
    pub fn as_constant(&self) -> Option<i64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => bigint_to_i64(&self.coeffs[0]),
            _ => None,
        }
    }
}

impl fmt::Display for IntegerValuedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, b) in self.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let mag = b.abs();
            if first {
                if b.is_negative() {
                    write!(f, "-")?;
                }
            } else if b.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "C(x,{k})")?,
                (_, false) => write!(f, "{mag}*C(x,{k})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerValuedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Coefficients go out as JSON numbers when they fit in i64, as decimal
// strings otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Coeff {
    fn from_big(b: &BigInt) -> Self {
        match bigint_to_i64(b) {
            Some(v) => Coeff::Small(v),
            None => Coeff::Big(b.to_string()),
        }
    }

    fn into_big(self) -> std::result::Result<BigInt, String> {
        match self {
            Coeff::Small(v) => Ok(BigInt::from(v)),
            Coeff::Big(s) => s.parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

impl Serialize for IntegerValuedPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<Coeff> = self.coeffs.iter().map(Coeff::from_big).collect();
        let mut st = serializer.serialize_struct("IntegerValuedPoly", 1)?;
        st.serialize_field("binomial_coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntegerValuedPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            binomial_coeffs: Vec<Coeff>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .binomial_coeffs
            .into_iter()
            .map(Coeff::into_big)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(IntegerValuedPoly::new(coeffs))
    }
}

/// Interpolates `points` in the binomial basis.
///
/// With `degree = Some(d)` the first `d + 1` points determine the polynomial
/// and the rest are checked against it; with `None` all points are used.
pub fn ivp_fit(points: &[(i64, i64)], degree: Option<usize>) -> Result<IntegerValuedPoly> {
    let d = match degree {
        Some(d) => d,
        None if points.is_empty() => {
            return Err(Error::InsufficientPoints { needed: 1, got: 0 });
        }
        None => points.len() - 1,
    };
    if points.len() < d + 1 {
        return Err(Error::InsufficientPoints {
            needed: d + 1,
            got: points.len(),
        });
    }
    for (i, &(x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|&(y, _)| y == x) {
            return Err(Error::DuplicateAbscissa(x));
        }
    }
    let (fit, check) = points.split_at(d + 1);

    // Newton divided differences over Q.
    let xs: Vec<BigRational> = fit.iter().map(|&(x, _)| rat(x)).collect();
    let mut dd: Vec<BigRational> = fit.iter().map(|&(_, y)| rat(y)).collect();
    for level in 1..=d {
        for i in (level..=d).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let newton = |x: &BigRational| -> BigRational {
        let mut acc = dd[d].clone();
        for i in (0..d).rev() {
            acc = acc * (x - &xs[i]) + &dd[i];
        }
        acc
    };

    // Forward differences at 0 give the binomial coefficients.
    let mut diffs: Vec<BigRational> = (0..=d as i64).map(|x| newton(&rat(x))).collect();
    let mut coeffs = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let b = &diffs[0];
        if !b.is_integer() {
            return Err(Error::NonIntegral);
        }
        coeffs.push(b.to_integer());
        for i in 0..d - k {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    let poly = IntegerValuedPoly::new(coeffs);
    for &(x, y) in check {
        if poly.eval(x) != BigInt::from(y) {
            return Err(Error::Inconsistent { at: x });
        }
    }
    Ok(poly)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fits_binomials() {
        let p = ivp_fit(&[(2, 1), (3, 3), (4, 6)], None).unwrap();
        assert_eq!(p, IntegerValuedPoly::from_i64(&[0, 0, 1]));
        let c = ivp_fit(&[(0, 5), (1, 5)], Some(0)).unwrap();
        assert_eq!(c, IntegerValuedPoly::constant(5));
    }

    #[test]
    fn three_cycle_count() {
        let pts: Vec<(i64, i64)> = (3..=6).map(|n| (n, n * (n - 1) * (n - 2) / 3)).collect();
        let p = ivp_fit(&pts, None).unwrap();
        assert_eq!(p, IntegerValuedPoly::from_i64(&[0, 0, 0, 2]));
    }

    #[test]
    fn rejects_bad_data() {
        assert_eq!(ivp_fit(&[(0, 0), (2, 1)], None), Err(Error::NonIntegral));
        assert_eq!(
            ivp_fit(&[(0, 1), (1, 2), (2, 4)], Some(1)),
            Err(Error::Inconsistent { at: 2 })
        );
        assert_eq!(ivp_fit(&[(1, 1), (1, 2)], None), Err(Error::DuplicateAbscissa(1)));
        assert!(matches!(
            ivp_fit(&[(1, 1)], Some(2)),
            Err(Error::InsufficientPoints { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let p = IntegerValuedPoly::from_i64(&[0, -3, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"binomial_coeffs":[0,-3,2]}"#);
        let back: IntegerValuedPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "-3*C(x,1) + 2*C(x,2)");
    }

    proptest! {
        #[test]
        fn fit_reproduces_points(coeffs in prop::collection::vec(-50i64..50, 1..6), start in -10i64..10) {
            let truth = IntegerValuedPoly::from_i64(&coeffs);
            let pts: Vec<(i64, i64)> = (0..coeffs.len() as i64 + 2)
                .map(|i| (start + 3 * i, i64::try_from(truth.eval(start + 3 * i)).unwrap()))
                .collect();
            let fitted = ivp_fit(&pts, Some(coeffs.len() - 1)).unwrap();
            prop_assert_eq!(&fitted, &truth);
            for &(x, y) in &pts {
                prop_assert_eq!(fitted.eval(x), BigInt::from(y));
            }
        }
    }
}
