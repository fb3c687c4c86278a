//! Sparse integer elements of `RS_n^-` and of `ZS_n`.
//!
//! Spin elements store the coefficient of each canonical basis element
//! `T_σ`; the sign of `z` is already folded in. Products are exact, with
//! overflow checked, and parallel over the left factor.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{class_size, modified_type, Partition};
use crate::error::{Error, Result};
use crate::perm::{for_each_with_cycle_lengths, Perm};
use crate::spingroup::{cocycle, distinguished_perm, enumerate_class, SpinElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Spin,
    Ordinary,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Spin => write!(f, "spin"),
            Variant::Ordinary => write!(f, "ordinary"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spin" => Ok(Variant::Spin),
            "ordinary" => Ok(Variant::Ordinary),
            _ => Err(Error::InvalidParity(format!("unknown variant {s:?}"))),
        }
    }
}

/// Default bound on the estimated support of a product.
pub const DEFAULT_SUPPORT_CAP: usize = 20_000_000;

static SUPPORT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SUPPORT_CAP);

pub fn set_support_cap(cap: usize) {
    SUPPORT_CAP.store(cap, Ordering::Relaxed);
}

pub fn support_cap() -> usize {
    SUPPORT_CAP.load(Ordering::Relaxed)
}

fn factorial_saturating(n: usize) -> usize {
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(k))
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    variant: Variant,
    terms: FxHashMap<Perm, i64>,
}

fn add_coeff(map: &mut FxHashMap<Perm, i64>, p: Perm, c: i64) {
    if c == 0 {
        return;
    }
    let e = map.entry(p).or_insert(0);
    *e = e.checked_add(c).expect("coefficient overflow");
    if *e == 0 {
        map.remove(&p);
    }
}

impl AlgebraElement {
    pub fn zero(n: usize, variant: Variant) -> Self {
        AlgebraElement {
            n,
            variant,
            terms: FxHashMap::default(),
        }
    }

    pub fn identity(n: usize, variant: Variant) -> Self {
        Self::basis(n, variant, Perm::identity(), 1)
    }

    /// `c · T_perm` (or `c · perm` in the ordinary variant).
    pub fn basis(n: usize, variant: Variant, perm: Perm, c: i64) -> Self {
        assert!(perm.fits(n), "{perm:?} is not in S_{n}");
        let mut e = Self::zero(n, variant);
        add_coeff(&mut e.terms, perm, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Perm, i64)>>(
        n: usize,
        variant: Variant,
        terms: I,
    ) -> Result<Self> {
        let mut e = Self::zero(n, variant);
        for (p, c) in terms {
            if !p.fits(n) {
                return Err(Error::InvalidPermutation(format!("{p:?} is not in S_{n}")));
            }
            add_coeff(&mut e.terms, p, c);
        }
        Ok(e)
    }

    pub fn from_spin(x: &SpinElement) -> Self {
        Self::basis(x.n(), Variant::Spin, *x.perm(), x.sign() as i64)
    }

    /// The generator `t_i = -T_{(i,i+1)}` of `RS_n^-`, 1-based.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(Self::from_spin(&SpinElement::generator(i, n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn terms(&self) -> &FxHashMap<Perm, i64> {
        &self.terms
    }

    pub fn coeff(&self, p: &Perm) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing one-line order.
    pub fn sorted_terms(&self) -> Vec<(Perm, i64)> {
        let mut v: Vec<(Perm, i64)> = self.terms.iter().map(|(&p, &c)| (p, c)).collect();
        v.sort_unstable();
        v
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.variant != other.variant {
            return Err(Error::VariantMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add_scaled(other, -1)
    }

    /// `self + k · other`.
    pub fn add_scaled(&self, other: &AlgebraElement, k: i64) -> Result<AlgebraElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (&p, &c) in &other.terms {
            add_coeff(&mut out.terms, p, c.checked_mul(k).expect("coefficient overflow"));
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> AlgebraElement {
        let mut out = Self::zero(self.n, self.variant);
        for (&p, &c) in &self.terms {
            add_coeff(&mut out.terms, p, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        elem_mul(self, other)
    }

    /// Keeps the terms whose permutation satisfies `keep`.
    pub fn filter<F: Fn(&Perm) -> bool>(&self, keep: F) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            variant: self.variant,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(&p, &c)| (p, c))
                .collect(),
        }
    }

    /// The same element in degree `n >= self.n()`.
    pub fn embed(&self, n: usize) -> Result<AlgebraElement> {
        if n < self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(AlgebraElement {
            n,
            ..self.clone()
        })
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]{{", self.variant, self.n)?;
        for (k, (p, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}·{p:?}")?;
        }
        write!(f, "}}")
    }
}

/// Exact product. Refuses with [`Error::ResourceCap`] when
/// `min(|A||B|, n!)` exceeds the support cap.
pub fn elem_mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.check(b)?;
    let estimate = a
        .len()
        .saturating_mul(b.len())
        .min(factorial_saturating(a.n));
    if estimate > support_cap() {
        return Err(Error::ResourceCap(format!(
            "product support estimate {estimate} exceeds cap {}",
            support_cap()
        )));
    }
    let spin = a.variant == Variant::Spin;
    let left: Vec<(Perm, i64)> = a.terms.iter().map(|(&p, &c)| (p, c)).collect();
    let right: Vec<(Perm, i64)> = b.terms.iter().map(|(&p, &c)| (p, c)).collect();
    let chunk = (left.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
    let terms = left
        .par_chunks(chunk)
        .map(|part| {
            let mut local: FxHashMap<Perm, i64> = FxHashMap::default();
            for &(p, cp) in part {
                for &(q, cq) in &right {
                    let mut c = cp.checked_mul(cq).expect("coefficient overflow");
                    if spin && cocycle(&p, &q) < 0 {
                        c = -c;
                    }
                    add_coeff(&mut local, p.compose(&q), c);
                }
            }
            local
        })
        .reduce(FxHashMap::default, |mut x, y| {
            if x.len() < y.len() {
                return merge(y, x);
            }
            for (p, c) in y {
                add_coeff(&mut x, p, c);
            }
            x
        });
    Ok(AlgebraElement {
        n: a.n,
        variant: a.variant,
        terms,
    })
}

fn merge(mut x: FxHashMap<Perm, i64>, y: FxHashMap<Perm, i64>) -> FxHashMap<Perm, i64> {
    for (p, c) in y {
        add_coeff(&mut x, p, c);
    }
    x
}

/// `d_λ(n)` (spin) or `c_λ(n)` (ordinary); zero when the class does not fit.
pub fn class_sum(lambda: &Partition, n: usize, variant: Variant) -> Result<AlgebraElement> {
    match variant {
        Variant::Spin => {
            let class = enumerate_class(lambda, n)?;
            AlgebraElement::from_terms(
                n,
                Variant::Spin,
                class.members.iter().map(|m| (*m.perm(), m.sign() as i64)),
            )
        }
        Variant::Ordinary => {
            let mut e = AlgebraElement::zero(n, Variant::Ordinary);
            let lengths: Vec<usize> = lambda.parts().iter().map(|x| x + 1).collect();
            for_each_with_cycle_lengths(&lengths, n, |p| {
                e.terms.insert(*p, 1);
            });
            Ok(e)
        }
    }
}

/// Coordinates of `a` in the class sum basis of its variant.
pub fn decompose_central(a: &AlgebraElement) -> Result<BTreeMap<Partition, i64>> {
    let mut groups: BTreeMap<Partition, Vec<(Perm, i64)>> = BTreeMap::new();
    for (&p, &c) in &a.terms {
        groups.entry(modified_type(&p)).or_default().push((p, c));
    }
    let mut out = BTreeMap::new();
    for (lambda, members) in groups {
        if members.len() as u128 != class_size(&lambda, a.n) {
            return Err(Error::NotCentral(format!(
                "{} of {} elements of type {lambda} present",
                members.len(),
                class_size(&lambda, a.n)
            )));
        }
        let coeff = match a.variant {
            Variant::Ordinary => {
                let c0 = members[0].1;
                if members.iter().any(|&(_, c)| c != c0) {
                    return Err(Error::NotCentral(format!("coefficients vary on {lambda}")));
                }
                c0
            }
            Variant::Spin => {
                if !lambda.all_even() {
                    return Err(Error::NotCentral(format!("type {lambda} is not even split")));
                }
                let class = enumerate_class(&lambda, a.n)?;
                let normalized = |&(p, c): &(Perm, i64)| -> Result<i64> {
                    let s = class.sign_of(&p).ok_or_else(|| {
                        Error::NotCentral(format!("{p:?} missing from class {lambda}"))
                    })?;
                    Ok(c * s as i64)
                };
                let c0 = normalized(&members[0])?;
                for m in &members[1..] {
                    if normalized(m)? != c0 {
                        return Err(Error::NotCentral(format!("coefficients vary on {lambda}")));
                    }
                }
                c0
            }
        };
        out.insert(lambda, coeff);
    }
    Ok(out)
}

/// `Σ coords[λ] · class_sum(λ)`.
pub fn reconstruct(
    coords: &BTreeMap<Partition, i64>,
    n: usize,
    variant: Variant,
) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::zero(n, variant);
    for (lambda, &c) in coords {
        acc = acc.add_scaled(&class_sum(lambda, n, variant)?, c)?;
    }
    Ok(acc)
}

/// Coefficients `a_{λμ}^ν(n)` of a product of two class sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
    pub variant: Variant,
    pub entries: BTreeMap<Partition, i64>,
}

impl StructureTable {
    pub fn get(&self, nu: &Partition) -> i64 {
        self.entries.get(nu).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(k, &v)| (k.key(), serde_json::Value::from(v)))
            .collect();
        serde_json::json!({
            "lambda": self.lambda,
            "mu": self.mu,
            "n": self.n,
            "variant": self.variant,
            "entries": entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("nu,coefficient\n");
        for (k, v) in &self.entries {
            s.push_str(&format!("\"{}\",{v}\n", k.key()));
        }
        s
    }
}

impl Serialize for StructureTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

pub fn structure_constants(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    variant: Variant,
) -> Result<StructureTable> {
    for p in [lambda, mu] {
        if p.support() > n {
            return Err(Error::DoesNotFit {
                partition: p.clone(),
                n,
            });
        }
    }
    let a = class_sum(lambda, n, variant)?;
    let b = class_sum(mu, n, variant)?;
    let entries = decompose_central(&elem_mul(&a, &b)?)?;
    Ok(StructureTable {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
        variant,
        entries,
    })
}

/// A single `a_{λμ}^ν(n)`, read off as the coefficient of the permutation of
/// `t_ν` in the product. Only the smaller of the two classes is enumerated.
///
/// Uses that every member of an even split class carries sign `+1` relative
/// to the canonical lift, which [`enumerate_class`] confirms on small degrees.
pub fn structure_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    variant: Variant,
) -> Result<i64> {
    if nu.support() > n || lambda.support() > n || mu.support() > n {
        return Ok(0);
    }
    if variant == Variant::Spin {
        for p in [lambda, mu, nu] {
            if !p.all_even() {
                return Err(Error::OddPart(p.clone()));
            }
        }
    }
    let pi = distinguished_perm(nu);
    let spin = variant == Variant::Spin;
    let mut total: i64 = 0;
    let swap = class_size(mu, n) > class_size(lambda, n);
    let (walk, other) = if swap { (lambda, mu) } else { (mu, lambda) };
    let lengths: Vec<usize> = walk.parts().iter().map(|x| x + 1).collect();
    let want_size = other.size();
    let want_len = other.len();
    for_each_with_cycle_lengths(&lengths, n, |x| {
        // walking τ: σ = π τ^{-1}; walking σ: τ = σ^{-1} π
        let (sigma, tau) = if swap {
            (*x, x.inverse().compose(&pi))
        } else {
            (pi.compose(&x.inverse()), *x)
        };
        let y = if swap { &tau } else { &sigma };
        if y.degree() != want_size || y.cycle_count() != want_len || modified_type(y) != *other {
            return;
        }
        let e = if spin { cocycle(&sigma, &tau) as i64 } else { 1 };
        total = total.checked_add(e).expect("coefficient overflow");
    });
    Ok(total)
}

/// Whether `a` is even and commutes with every generator `t_i`.
pub fn is_even_central(a: &AlgebraElement) -> Result<bool> {
    if a.variant != Variant::Spin {
        return Err(Error::VariantMismatch);
    }
    if a.terms.keys().any(|p| !p.is_even()) {
        return Ok(false);
    }
    for i in 1..a.n {
        let t = AlgebraElement::generator(i, a.n)?;
        if elem_mul(&t, a)? != elem_mul(a, &t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restriction to the terms of largest `|modified_type|`.
pub fn top_degree(a: &AlgebraElement) -> AlgebraElement {
    let Some(top) = a.terms.keys().map(Perm::degree).max() else {
        return a.clone();
    };
    a.filter(|p| p.degree() == top)
}
