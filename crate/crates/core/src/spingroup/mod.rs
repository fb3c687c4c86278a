//! Signed permutations: the basis `±T_σ` of `RS_n^-`.
//!
//! Every element of the double cover is `±T_σ` for the canonical lift `T_σ`
//! described in [`cocycle`], with the central element `z` identified with
//! `-1`. With this lift every element of an even split class `D_λ(n)` is
//! `+T_σ`; [`enumerate_class`] derives that by conjugation rather than
//! assuming it.

mod classes;
mod cocycle;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::perm::{Perm, MAX_DEGREE};

pub use classes::{enumerate_class, ClassEnumeration};
pub use cocycle::cocycle;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinElement {
    n: usize,
    perm: Perm,
    sign: i8,
}

impl SpinElement {
    pub fn new(n: usize, perm: Perm, sign: i8) -> Result<Self> {
        if n > MAX_DEGREE || !perm.fits(n) {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not in S_{n}")));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidPermutation(format!("sign {sign} is not ±1")));
        }
        Ok(SpinElement { n, perm, sign })
    }

    pub fn identity(n: usize) -> Self {
        SpinElement {
            n,
            perm: Perm::identity(),
            sign: 1,
        }
    }

    /// The central element `z`, which acts as `-1`.
    pub fn z(n: usize) -> Self {
        SpinElement {
            n,
            perm: Perm::identity(),
            sign: -1,
        }
    }

    /// The generator `t_i` lifting `(i, i+1)`, 1-based. `T_{(i,i+1)} = -t_i`.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        Ok(SpinElement {
            n,
            perm: Perm::transposition(i - 1, i),
            sign: -1,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The projection to `S_n`.
    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_even(&self) -> bool {
        self.perm.is_even()
    }

    pub fn neg(&self) -> Self {
        SpinElement {
            sign: -self.sign,
            ..*self
        }
    }

    /// The same element in degree `n`.
    pub fn embed(&self, n: usize) -> Result<Self> {
        Self::new(n, self.perm, self.sign)
    }

    pub fn mul(&self, other: &SpinElement) -> Result<SpinElement> {
        spin_mul(self, other)
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        SpinElement {
            n: self.n,
            perm: inv,
            sign: self.sign * cocycle(&self.perm, &inv),
        }
    }
}

impl fmt::Debug for SpinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        write!(f, "{s}T{:?}", self.perm)
    }
}

#[derive(Serialize, Deserialize)]
struct SpinJson {
    n: usize,
    perm: Vec<usize>,
    sign: i8,
}

impl Serialize for SpinElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SpinJson {
            n: self.n,
            perm: self.perm.one_line(self.n),
            sign: self.sign,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpinElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SpinJson::deserialize(deserializer)?;
        if raw.perm.len() != raw.n {
            return Err(serde::de::Error::custom("one-line form must have length n"));
        }
        let perm = Perm::from_one_line(&raw.perm).map_err(serde::de::Error::custom)?;
        SpinElement::new(raw.n, perm, raw.sign).map_err(serde::de::Error::custom)
    }
}

pub fn spin_mul(a: &SpinElement, b: &SpinElement) -> Result<SpinElement> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(SpinElement {
        n: a.n,
        perm: a.perm.compose(&b.perm),
        sign: a.sign * b.sign * cocycle(&a.perm, &b.perm),
    })
}

/// `x_i = t_i t_{i+1} ⋯ t_{n-1} t_n t_{n-1} ⋯ t_i`, which lives in degree
/// `n + 1`.
pub fn x_element(i: usize, n: usize) -> Result<SpinElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let mut acc = SpinElement::identity(n + 1);
    let word = (i..=n).chain((i..n).rev());
    for g in word {
        acc = spin_mul(&acc, &SpinElement::generator(g, n + 1)?)?;
    }
    Ok(acc)
}

/// The cycle element `[i_1, ..., i_m]` (1-based indices), built as
/// `x_{i_1} x_{i_m} x_{i_{m-1}} ⋯ x_{i_2} x_{i_1}`; a single index gives `z`.
pub fn cycle(indices: &[usize], n: usize) -> Result<SpinElement> {
    let mut seen = 0u64;
    for &i in indices {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        if seen & (1 << i) != 0 {
            return Err(Error::RepeatedIndex(i));
        }
        seen |= 1 << i;
    }
    match indices.len() {
        0 => Ok(SpinElement::identity(n)),
        1 => Ok(SpinElement::z(n)),
        _ => {
            let mut order = vec![indices[0]];
            order.extend(indices[1..].iter().rev());
            order.push(indices[0]);
            let mut acc = SpinElement::identity(n + 1);
            for i in order {
                acc = spin_mul(&acc, &x_element(i, n)?)?;
            }
            acc.embed(n)
        }
    }
}

/// Product of a list of cycle elements, left to right.
pub fn cycle_product(cycles: &[&[usize]], n: usize) -> Result<SpinElement> {
    let mut acc = SpinElement::identity(n);
    for c in cycles {
        acc = spin_mul(&acc, &cycle(c, n)?)?;
    }
    Ok(acc)
}

/// `t_λ`: consecutive-index cycles of lengths `λ_1 + 1, λ_2 + 1, ...`.
pub fn distinguished_element(lambda: &Partition, n: usize) -> Result<SpinElement> {
    if !lambda.all_even() {
        return Err(Error::OddPart(lambda.clone()));
    }
    if lambda.support() > n {
        return Err(Error::DoesNotFit {
            partition: lambda.clone(),
            n,
        });
    }
    let mut acc = SpinElement::identity(n);
    let mut start = 1;
    for &part in lambda.parts() {
        let idx: Vec<usize> = (start..=start + part).collect();
        acc = spin_mul(&acc, &cycle(&idx, n)?)?;
        start += part + 1;
    }
    Ok(acc)
}

/// The permutation underlying `t_λ`.
pub fn distinguished_perm(lambda: &Partition) -> Perm {
    let mut line: Vec<usize> = (1..=lambda.support()).collect();
    let mut start = 0;
    for &part in lambda.parts() {
        line[start..=start + part].rotate_left(1);
        start += part + 1;
    }
    Perm::from_one_line(&line).expect("rotated blocks form a permutation")
}

/// `s x s^{-1}` for any lift of `s` (the result does not depend on it).
pub fn conjugate(s: &Perm, x: &SpinElement) -> Result<SpinElement> {
    let lift = SpinElement::new(x.n, *s, 1)?;
    spin_mul(&spin_mul(&lift, x)?, &lift.inverse())
}

/// 1-based points moved by some element of `xs`.
pub fn moved_points(xs: &[SpinElement]) -> BTreeSet<usize> {
    let mask = xs.iter().fold(0u32, |m, x| m | x.perm.moved_mask());
    (0..MAX_DEGREE)
        .filter(|&i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}
