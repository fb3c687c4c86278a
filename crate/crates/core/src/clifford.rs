//! Integer Clifford algebra on generators `c_1, ..., c_n` with
//! `c_i² = -1` and `c_i c_j = -c_j c_i`.
//!
//! The double cover embeds through `t_i ↦ (c_i - c_{i+1}) / √2`. Working
//! with the unnormalized vectors `c_i - c_{i+1}` keeps everything integral;
//! lifts are only ever compared up to positive scalars, so the missing
//! powers of `√2` never need to be tracked. This module is the slow ground
//! truth that the combinatorial product rules in [`crate::spingroup`] are
//! tested against.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest generator count a bitmask monomial can hold.
pub const MAX_GENERATORS: usize = 62;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector {
    n: usize,
    terms: BTreeMap<u64, i128>,
}

/// Sign of `c_A c_B` relative to the sorted monomial `c_{A xor B}`.
pub fn monomial_sign(a: u64, b: u64) -> i128 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        // generators of A above j must pass c_j
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps += (a & b).count_ones();
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Multivector {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS);
        Multivector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: i128) -> Self {
        let mut m = Self::zero(n);
        m.add_term(0, c);
        m
    }

    /// `c_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut m = Self::zero(n);
        m.add_term(1 << (i - 1), 1);
        Ok(m)
    }

    /// `c_i - c_j`, 1-based.
    pub fn difference(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut m = Self::generator(n, i)?;
        let cj = Self::generator(n, j)?;
        m = m.sub(&cj)?;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<u64, i128> {
        &self.terms
    }

    pub fn coeff(&self, mask: u64) -> i128 {
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u64, c: i128) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(mask).or_insert(0);
        *e = e.checked_add(c).expect("Clifford coefficient overflow");
        if *e == 0 {
            self.terms.remove(&mask);
        }
    }

    fn check_dim(&self, other: &Multivector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, -c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i128) -> Multivector {
        let mut out = Self::zero(self.n);
        for (&m, &c) in &self.terms {
            out.add_term(m, c.checked_mul(k).expect("Clifford coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &Multivector) -> Result<Multivector> {
        mv_mul(self, other)
    }

    /// Divides out the largest power of two common to all coefficients.
    /// Returns the reduced element and the exponent removed.
    pub fn reduce_power_of_two(&self) -> (Multivector, u32) {
        let k = self
            .terms
            .values()
            .map(|c| c.trailing_zeros())
            .min()
            .unwrap_or(0);
        let terms = self.terms.iter().map(|(&m, &c)| (m, c >> k)).collect();
        (Multivector { n: self.n, terms }, k)
    }

    /// Same element viewed with `n` generators; `None` if a monomial uses a
    /// generator beyond `n`.
    pub fn with_generators(&self, n: usize) -> Option<Multivector> {
        let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        if self.terms.keys().any(|&m| m & !limit != 0) {
            return None;
        }
        Some(Multivector {
            n,
            terms: self.terms.clone(),
        })
    }
}

/// `{"<mask>": coeff}` debug form.
impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (&m, &c) in &self.terms {
            match i64::try_from(c) {
                Ok(v) => map.serialize_entry(&m.to_string(), &v)?,
                Err(_) => map.serialize_entry(&m.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

pub fn mv_mul(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_dim(b)?;
    let mut out = Multivector::zero(a.n);
    for (&ma, &ca) in &a.terms {
        for (&mb, &cb) in &b.terms {
            let c = ca.checked_mul(cb).expect("Clifford coefficient overflow");
            out.add_term(ma ^ mb, monomial_sign(ma, mb) * c);
        }
    }
    Ok(out)
}

/// `τ_{i_1} τ_{i_2} ⋯` with `τ_i = c_i - c_{i+1}`, generator indices 1-based
/// in `1..n`.
pub fn lift_word(word: &[usize], n: usize) -> Result<Multivector> {
    let mut acc = Multivector::scalar(n, 1);
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        acc = mv_mul(&acc, &Multivector::difference(n, i, i + 1)?)?;
    }
    Ok(acc)
}

/// A reduced word for `perm ∈ S_n`, by sorting out descents from the left:
/// `perm = s_{w_1} s_{w_2} ⋯`.
pub fn reduced_word(perm: &Perm, n: usize) -> Vec<usize> {
    let mut line = perm.one_line(n);
    let mut peeled = Vec::new();
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if line[i] > line[i + 1] {
                line.swap(i, i + 1);
                peeled.push(i + 1);
                continue 'outer;
            }
        }
        break;
    }
    peeled.reverse();
    peeled
}

/// Generator word of `x_i = t_i t_{i+1} ⋯ t_{top} ⋯ t_{i+1} t_i`.
pub fn x_word(i: usize, top: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (i..=top).collect();
    w.extend((i..top).rev());
    w
}

/// Word of the cycle element `x_{i_1} x_{i_m} x_{i_{m-1}} ⋯ x_{i_2} x_{i_1}`
/// for 1-based indices in `1..=n`, as an element of the degree `n + 1`
/// double cover.
pub fn cycle_word(indices: &[usize], n: usize) -> Vec<usize> {
    let mut order = vec![indices[0]];
    order.extend(indices[1..].iter().rev());
    order.push(indices[0]);
    order.into_iter().flat_map(|i| x_word(i, n)).collect()
}

/// Lift of the cycle element `[i_1, ..., i_m]`, up to a positive scalar.
/// A single index gives `-1`.
pub fn cycle_lift(indices: &[usize], n: usize) -> Result<Multivector> {
    if indices.len() == 1 {
        return Ok(Multivector::scalar(n, -1));
    }
    let ambient = n + 1;
    let mut acc = Multivector::scalar(ambient, 1);
    let mut order = vec![indices[0]];
    order.extend(indices[1..].iter().rev());
    order.push(indices[0]);
    for i in order {
        let (x, _) = lift_word(&x_word(i, n), ambient)?.reduce_power_of_two();
        acc = mv_mul(&acc, &x)?.reduce_power_of_two().0;
    }
    Ok(acc
        .with_generators(n)
        .expect("cycle elements avoid the auxiliary generator"))
}

/// Lift of the canonical element `T_σ`: the product of the cycles of `σ`,
/// each started at its smallest point, in increasing order of those points.
pub fn canonical_lift(perm: &Perm, n: usize) -> Result<Multivector> {
    let mut acc = Multivector::scalar(n, 1);
    for cycle in perm.cycles() {
        let idx: Vec<usize> = cycle.iter().map(|&x| x as usize + 1).collect();
        acc = mv_mul(&acc, &cycle_lift(&idx, n)?)?.reduce_power_of_two().0;
    }
    Ok(acc)
}

/// `Some(sign, k)` when `a = sign · 2^k · b` with `k` possibly negative.
pub fn signed_power_of_two_ratio(a: &Multivector, b: &Multivector) -> Option<(i8, i32)> {
    if a.n != b.n || a.terms.len() != b.terms.len() || a.is_zero() {
        return None;
    }
    let (&m0, &ca) = a.terms.iter().next()?;
    let cb = b.coeff(m0);
    if cb == 0 {
        return None;
    }
    let sign: i8 = if (ca < 0) == (cb < 0) { 1 } else { -1 };
    let (na, nb) = (ca.unsigned_abs(), cb.unsigned_abs());
    let k = na.trailing_zeros() as i32 - nb.trailing_zeros() as i32;
    if na >> na.trailing_zeros() != nb >> nb.trailing_zeros() {
        return None;
    }
    // a * 2^{-k} must equal sign * b on every monomial: compare a·den = b·num
    for (&m, &c) in &a.terms {
        let d = b.coeff(m);
        let (lhs, rhs) = if k >= 0 {
            (c, d.checked_mul(1i128 << k)?)
        } else {
            (c.checked_mul(1i128 << (-k))?, d)
        };
        if lhs != rhs * sign as i128 {
            return None;
        }
    }
    Some((sign, k))
}

/// Sign `ε` with `L(σ) L(τ) = ε · (positive) · L(στ)` for a given lift `L`.
pub fn oracle_product_sign_with<F>(sigma: &Perm, tau: &Perm, lift: F) -> Result<(Perm, i8)>
where
    F: Fn(&Perm) -> Result<Multivector>,
{
    let prod = sigma.compose(tau);
    let lhs = mv_mul(&lift(sigma)?, &lift(tau)?)?;
    let rhs = lift(&prod)?;
    let (sign, _) = signed_power_of_two_ratio(&lhs, &rhs).ok_or(Error::InconsistentLift)?;
    Ok((prod, sign))
}

/// Sign of `T_σ T_τ` relative to `T_{στ}` for the canonical cycle lift.
pub fn oracle_product_sign(sigma: &Perm, tau: &Perm, n: usize) -> Result<(Perm, i8)> {
    if !sigma.fits(n) || !tau.fits(n) {
        return Err(Error::InvalidPermutation(format!(
            "{sigma:?} or {tau:?} not in S_{n}"
        )));
    }
    oracle_product_sign_with(sigma, tau, |p| canonical_lift(p, n))
}
