//! Stable structure constants `f_{λμ}^ν`, the graded products
//! `d_λ * d_μ = Σ_{|ν| = |λ|+|μ|} f_{λμ}^ν d_ν`, their closed forms for
//! one-row and disjoint factors, and the membership test for the span of
//! genuine products.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::combinatorics::{
    bigint_to_i64, binomial, class_size, even_partitions_of, factorial, ivp_fit, p_poly, partitions_of,
    IntegerValuedPoly, Partition,
};
use crate::error::{Error, Result};
use crate::groupalgebra::{structure_coefficient, support_cap, Variant};
use crate::jm::{a_coefficients, formula_a};

/// A homogeneous element `Σ coords[ν] d_ν` of degree `m = |ν|`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FHVector {
    pub degree: usize,
    pub coords: BTreeMap<Partition, i64>,
}

impl FHVector {
    pub fn zero(degree: usize) -> Self {
        FHVector {
            degree,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(lambda: &Partition) -> Self {
        FHVector {
            degree: lambda.size(),
            coords: BTreeMap::from([(lambda.clone(), 1)]),
        }
    }

    /// Drops zero coordinates; fails if any partition has the wrong size.
    pub fn from_coords(degree: usize, coords: BTreeMap<Partition, i64>) -> Result<Self> {
        if let Some(bad) = coords.keys().find(|k| k.size() != degree) {
            return Err(Error::InvalidParity(format!("{bad} does not have size {degree}")));
        }
        Ok(FHVector {
            degree,
            coords: coords.into_iter().filter(|&(_, c)| c != 0).collect(),
        })
    }

    pub fn get(&self, nu: &Partition) -> i64 {
        self.coords.get(nu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.values().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coords.iter().filter(|&(_, &c)| c != 0).map(|(k, _)| k)
    }

    pub fn add_scaled(&mut self, other: &FHVector, k: i64) {
        for (nu, &c) in &other.coords {
            let e = self.coords.entry(nu.clone()).or_insert(0);
            *e = e
                .checked_add(c.checked_mul(k).expect("coefficient overflow"))
                .expect("coefficient overflow");
        }
        self.coords.retain(|_, c| *c != 0);
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coords: serde_json::Map<String, serde_json::Value> = self
            .coords
            .iter()
            .filter(|&(_, &c)| c != 0)
            .map(|(k, &v)| (k.key(), serde_json::Value::from(v)))
            .collect();
        serde_json::json!({ "degree": self.degree, "coords": coords })
    }
}

impl Serialize for FHVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `d_{(2,2)} - 2d_{(4)}`; zero prints as `0`.
impl fmt::Display for FHVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for nu in self.support() {
            let c = self.coords[nu];
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "d_{nu}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Degree bound `|λ|+ℓ(λ)+|μ|+ℓ(μ)-|ν|-ℓ(ν)`, or `None` when `ν` cannot occur.
pub fn degree_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<usize> {
    (lambda.support() + mu.support()).checked_sub(nu.support())
}

/// A fitted `f_{λμ}^ν` together with the two points it was checked on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FittedPoly {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub poly: IntegerValuedPoly,
    pub validated_on: [usize; 2],
}

fn check_even(ps: &[&Partition]) -> Result<()> {
    for p in ps {
        if !p.all_even() {
            return Err(Error::OddPart((*p).clone()));
        }
    }
    Ok(())
}

/// Interpolates `a_{λμ}^ν(n)` over `n_range` (default `n₀ ..= n₀ + D + 2`
/// with `n₀ = |ν|+ℓ(ν)` and `D` the degree bound). All points but the last
/// two pin the polynomial; the last two are checked against it.
pub fn fit_structure_poly(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n_range: Option<RangeInclusive<usize>>,
) -> Result<FittedPoly> {
    check_even(&[lambda, mu, nu])?;
    let n0 = nu.support();
    let bound = degree_bound(lambda, mu, nu);
    let range = match n_range {
        Some(r) => r,
        None => n0..=n0 + bound.unwrap_or(0) + 2,
    };
    if *range.start() < n0 {
        return Err(Error::DoesNotFit {
            partition: nu.clone(),
            n: *range.start(),
        });
    }
    let ns: Vec<usize> = range.collect();
    if ns.len() < 3 {
        return Err(Error::InsufficientPoints {
            needed: 3,
            got: ns.len(),
        });
    }
    let mut points = Vec::with_capacity(ns.len());
    for &n in &ns {
        let a = structure_coefficient(lambda, mu, nu, n, Variant::Spin)?;
        points.push((n as i64, a));
    }
    let (fit, holdout) = points.split_at(points.len() - 2);
    let poly = ivp_fit(fit, None)?;
    let found = poly.degree().unwrap_or(0);
    match bound {
        Some(b) if found > b => return Err(Error::DegreeExceeded { found, bound: b }),
        None if !poly.is_zero() => return Err(Error::DegreeExceeded { found, bound: 0 }),
        _ => {}
    }
    for &(x, y) in holdout {
        if poly.eval(x) != BigInt::from(y) {
            return Err(Error::Inconsistent { at: x });
        }
    }
    Ok(FittedPoly {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        poly,
        validated_on: [ns[ns.len() - 2], ns[ns.len() - 1]],
    })
}

type ProductCache = Mutex<FxHashMap<(Partition, Partition, Variant), FHVector>>;

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Candidates for the top-degree part of `d_λ d_μ`: all `ν` of size
/// `|λ|+|μ|` (even parts for the spin variant) with `ℓ(ν) ≤ ℓ(λ)+ℓ(μ)`,
/// since the product moves no point outside the points moved by the factors.
fn top_candidates(lambda: &Partition, mu: &Partition, variant: Variant) -> Vec<Partition> {
    let m = lambda.size() + mu.size();
    let all = match variant {
        Variant::Spin => even_partitions_of(m),
        Variant::Ordinary => partitions_of(m),
    };
    all.into_iter()
        .filter(|nu| nu.len() <= lambda.len() + mu.len())
        .collect()
}

/// `d_λ * d_μ` in the graded algebra (or its ordinary counterpart).
///
/// Each `f_{λμ}^ν` is read off in the smallest degree where `ν` fits and
/// checked once more one degree higher.
pub fn graded_product_variant(lambda: &Partition, mu: &Partition, variant: Variant) -> Result<FHVector> {
    if variant == Variant::Spin {
        check_even(&[lambda, mu])?;
    }
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    let key = (a.clone(), b.clone(), variant);
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut coords = BTreeMap::new();
    for nu in top_candidates(a, b, variant) {
        let n0 = nu.support();
        let walk = class_size(a, n0 + 1).min(class_size(b, n0 + 1));
        if walk > support_cap() as u128 {
            return Err(Error::ResourceCap(format!(
                "graded product {a} * {b} needs {walk} terms at n = {}",
                n0 + 1
            )));
        }
        let first = structure_coefficient(a, b, &nu, n0, variant)?;
        let second = structure_coefficient(a, b, &nu, n0 + 1, variant)?;
        if first != second {
            return Err(Error::StabilityViolation {
                partition: nu,
                n: n0,
                first,
                second,
            });
        }
        if first != 0 {
            coords.insert(nu, first);
        }
    }
    let v = FHVector {
        degree: a.size() + b.size(),
        coords,
    };
    product_cache().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// `d_λ * d_μ` in the graded spin algebra.
pub fn graded_product(lambda: &Partition, mu: &Partition) -> Result<FHVector> {
    graded_product_variant(lambda, mu, Variant::Spin)
}

/// Bilinear extension of [`graded_product`].
pub fn graded_mul(x: &FHVector, y: &FHVector) -> Result<FHVector> {
    let mut acc = FHVector::zero(x.degree + y.degree);
    for (l, &a) in &x.coords {
        for (m, &b) in &y.coords {
            let prod = graded_product(l, m)?;
            acc.add_scaled(&prod, a.checked_mul(b).expect("coefficient overflow"));
        }
    }
    Ok(acc)
}

fn check_one_part(lambda: &Partition, s: usize, nu: &Partition) -> Result<()> {
    if s == 0 || s % 2 == 1 {
        return Err(Error::InvalidParity(format!("row length {s} must be even and positive")));
    }
    for p in [lambda, nu] {
        if !p.all_even() {
            return Err(Error::InvalidParity(format!("{p} has an odd part")));
        }
    }
    Ok(())
}

fn one_row(lambda: &Partition, s: usize) -> BigInt {
    let l = lambda.len();
    if l > s + 1 {
        return BigInt::zero();
    }
    let m = lambda.size() + s;
    let denom = lambda
        .multiplicities()
        .values()
        .fold(factorial((s + 1 - l) as u64), |acc, &k| acc * factorial(k as u64));
    let v = BigInt::from(m + 1) * factorial(s as u64) / denom;
    if l % 2 == 1 {
        -v
    } else {
        v
    }
}

fn one_part_big(lambda: &Partition, s: usize, nu: &Partition) -> BigInt {
    if nu.size() != lambda.size() + s || !nu.dominates(&lambda.union(&Partition::single(s))) {
        return BigInt::zero();
    }
    if nu.len() == 1 {
        return one_row(lambda, s);
    }
    let mut total = BigInt::zero();
    for &part in nu.parts() {
        if part < s {
            continue;
        }
        if let Some(mu) = lambda.union(&Partition::single(part)).remove(nu) {
            total += one_row(&mu, s);
        }
    }
    total
}

/// `f_{λ(s)}^ν` with `|ν| = |λ| + s` from the one-row closed form and its
/// reduction over the rows of `ν`.
pub fn one_part_coeff(lambda: &Partition, s: usize, nu: &Partition) -> Result<i64> {
    check_one_part(lambda, s, nu)?;
    bigint_to_i64(&one_part_big(lambda, s, nu))
        .ok_or_else(|| Error::ResourceCap("coefficient overflows i64".into()))
}

/// `f_{λμ}^{λ∪μ} = ∏_i C(m_i(λ) + m_i(μ), m_i(λ))`.
pub fn union_coeff(lambda: &Partition, mu: &Partition) -> BigInt {
    let ml = lambda.multiplicities();
    let mm = mu.multiplicities();
    ml.iter().fold(BigInt::one(), |acc, (part, &a)| {
        let b = mm.get(part).copied().unwrap_or(0);
        acc * binomial((a + b) as u64, a as u64)
    })
}

/// `Σ_ν v_ν P_ν(-m)`.
pub fn h_pairing(v: &FHVector) -> Result<BigInt> {
    let x = -(v.degree as i64);
    let mut total = BigInt::zero();
    for (nu, &c) in &v.coords {
        total += p_poly(nu)?.eval(x) * BigInt::from(c);
    }
    Ok(total)
}

/// Whether `v` pairs to zero with `(P_ν(-m))_ν`, the criterion for lying in
/// the span of products `(d_λ d_μ)^*` with `|λ|, |μ| > 0`.
pub fn h_membership(v: &FHVector) -> bool {
    h_pairing(v).map(|s| s.is_zero()).unwrap_or(false)
}

/// Where the `A_λ` in [`verify_p2`] come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ASource {
    /// The Catalan product formula.
    Formula,
    /// Extraction from `e_{r;n}` in degree `3r`.
    Computed,
}

/// `Σ_{λ ∈ ℰ𝒫(2r)} A_λ P_λ(-2r)` and whether it equals `2(-1)^r`.
pub fn verify_p2(r: usize, source: ASource) -> Result<(BigInt, bool)> {
    if r == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let lambdas = even_partitions_of(2 * r);
    let coords: BTreeMap<Partition, BigInt> = match source {
        ASource::Formula => lambdas.iter().map(|l| (l.clone(), formula_a(l))).collect(),
        ASource::Computed => {
            let n = lambdas.iter().map(Partition::support).max().unwrap_or(0);
            let est: u128 = lambdas.iter().map(|l| class_size(l, n)).sum();
            if est > support_cap() as u128 {
                return Err(Error::ResourceCap(format!(
                    "extracting e_{r}^* needs about {est} terms in degree {n}"
                )));
            }
            let a = a_coefficients(r, n)?;
            a.coords.iter().map(|(l, &c)| (l.clone(), BigInt::from(c))).collect()
        }
    };
    let x = -(2 * r as i64);
    let mut sum = BigInt::zero();
    for (lam, a) in &coords {
        sum += a * p_poly(lam)?.eval(x);
    }
    let target = if r % 2 == 0 { BigInt::from(2) } else { BigInt::from(-2) };
    let pass = sum == target;
    Ok((sum, pass))
}

/// Outcome of comparing spin and ordinary graded products.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IotaReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub spin: FHVector,
    pub ordinary: FHVector,
    /// Ordinary top-degree terms on partitions with an odd part.
    pub anomalies: Vec<Partition>,
    /// Even `ν` where the sign law fails.
    pub mismatches: Vec<Partition>,
    pub pass: bool,
}

/// Checks `f_{λμ}^ν = (-1)^{ℓ(λ)+ℓ(μ)-ℓ(ν)} k_{λμ}^ν` for all `ν` of top
/// degree, with `k` the ordinary top-degree constants, and that the ordinary
/// product has no top-degree terms outside even partitions.
pub fn iota_report(lambda: &Partition, mu: &Partition) -> Result<IotaReport> {
    let spin = graded_product_variant(lambda, mu, Variant::Spin)?;
    let ordinary = graded_product_variant(lambda, mu, Variant::Ordinary)?;
    let anomalies: Vec<Partition> = ordinary.support().filter(|nu| !nu.all_even()).cloned().collect();
    let mut mismatches = Vec::new();
    for nu in even_partitions_of(lambda.size() + mu.size()) {
        let sign = if (lambda.len() + mu.len() + nu.len()) % 2 == 0 { 1 } else { -1 };
        if spin.get(&nu) != sign * ordinary.get(&nu) {
            mismatches.push(nu);
        }
    }
    let pass = anomalies.is_empty() && mismatches.is_empty();
    Ok(IotaReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        spin,
        ordinary,
        anomalies,
        mismatches,
        pass,
    })
}

pub fn iota_compare(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(iota_report(lambda, mu)?.pass)
}

/// `d_{λ_1} * d_{λ_2} * ⋯`, expanded in the `d_μ`.
pub fn row_product(lambda: &Partition) -> Result<FHVector> {
    check_even(&[lambda])?;
    let mut acc = FHVector::basis(&Partition::empty());
    for &part in lambda.parts() {
        acc = graded_mul(&acc, &FHVector::basis(&Partition::single(part)))?;
    }
    Ok(acc)
}

/// Whether `d_{λ_1} * d_{λ_2} * ⋯` is supported on partitions dominating
/// `λ` with a positive coefficient on `λ` itself.
pub fn triangularity_check(lambda: &Partition) -> Result<bool> {
    let v = row_product(lambda)?;
    Ok(v.get(lambda) > 0 && v.support().all(|mu| mu.dominates(lambda)))
}
