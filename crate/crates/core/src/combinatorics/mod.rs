//! Partitions, modified cycle types, Catalan numbers and the ring of
//! integer-valued polynomials.

mod ivp;
mod partition;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub use ivp::{ivp_fit, IntegerValuedPoly};
pub use partition::{even_partitions_fitting, even_partitions_of, partitions_of, Partition};

/// Cycle type with one subtracted from every nontrivial cycle length.
pub fn modified_type(perm: &Perm) -> Partition {
    let parts = perm.cycle_lengths().into_iter().map(|l| l - 1).collect();
    Partition::new(parts).expect("nontrivial cycles have length >= 2")
}

/// How the preimage in the double cover of the `S_n` class of modified type
/// `λ` behaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitStatus {
    /// Splits into two classes, both consisting of even elements.
    EvenSplit,
    /// Splits into two classes of odd elements.
    OddSplit,
    NonSplit,
    /// No permutation of `S_n` has this modified type.
    EmptyClass,
}

pub fn classify_split(lambda: &Partition, n: usize) -> SplitStatus {
    let support = lambda.support();
    if support > n {
        SplitStatus::EmptyClass
    } else if lambda.all_even() {
        SplitStatus::EvenSplit
    } else if lambda.size() % 2 == 1 && lambda.distinct_parts() && support + 1 >= n {
        SplitStatus::OddSplit
    } else {
        SplitStatus::NonSplit
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(x, k)` for an arbitrary integer `x`.
pub fn binomial_at(x: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (x - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The Catalan number `C_r`, indexed so that `C_1 = C_2 = 1`, `C_3 = 2`.
pub fn catalan(r: u64) -> BigInt {
    assert!(r >= 1, "Catalan numbers are indexed from 1");
    binomial(2 * r - 2, r - 1) / BigInt::from(r)
}

/// `(-1)^ℓ(ν) x(x-1)...(x-ℓ+1) / ∏ m_i(ν)!` as an integer-valued polynomial.
pub fn p_poly(nu: &Partition) -> Result<IntegerValuedPoly> {
    if !nu.all_even() {
        return Err(Error::OddPart(nu.clone()));
    }
    let l = nu.len();
    let denom = nu
        .multiplicities()
        .values()
        .fold(BigInt::one(), |acc, &m| acc * factorial(m as u64));
    let mut lead = factorial(l as u64) / denom;
    if l % 2 == 1 {
        lead = -lead;
    }
    let mut coeffs = vec![BigInt::zero(); l + 1];
    coeffs[l] = lead;
    Ok(IntegerValuedPoly::new(coeffs))
}

/// Number of permutations of `S_n` with modified type `λ`; zero if the class
/// does not fit.
pub fn class_size(lambda: &Partition, n: usize) -> u128 {
    if lambda.support() > n {
        return 0;
    }
    let mut size: u128 = (1..=n as u128).product();
    // centralizer order: ∏ i^{m_i} m_i! over cycle lengths, fixed points included
    let fixed = n - lambda.support();
    size /= (1..=fixed as u128).product::<u128>();
    for (part, m) in lambda.multiplicities() {
        let len = part as u128 + 1;
        size /= len.pow(m as u32) * (1..=m as u128).product::<u128>();
    }
    size
}

/// Sign `(-1)^k` as an integer.
pub fn neg_one_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn bigint_to_i64(x: &BigInt) -> Option<i64> {
    if x.abs() > BigInt::from(i64::MAX) {
        None
    } else {
        i64::try_from(x).ok()
    }
}
