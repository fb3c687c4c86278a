use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, stored as its non-increasing list of positive parts.
///
/// Ordering is by size first and then lexicographically on the parts, so
/// tables come out grouped by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts `parts` into non-increasing order; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn single(part: usize) -> Self {
        assert!(part > 0);
        Partition { parts: vec![part] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `|λ| + ℓ(λ)`: the number of points moved by a permutation of modified type `λ`.
    pub fn support(&self) -> usize {
        self.size() + self.len()
    }

    /// `m_i(λ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `λ - μ` as multisets; `None` unless `μ` is contained in `λ`.
    pub fn remove(&self, other: &Partition) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for p in &other.parts {
            let pos = parts.iter().position(|q| q == p)?;
            parts.remove(pos);
        }
        Some(Partition { parts })
    }

    /// Dominance `self ⊵ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for k in 0..len {
            a += self.parts.get(k).copied().unwrap_or(0);
            b += other.parts.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// JSON object key form, e.g. `[4,2]`; `[]` for the empty partition.
    pub fn key(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma lists such as `4,2`; `0` and the empty string give `∅`.
/// Brackets and parentheses around the list are accepted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `m`, in the crate's canonical order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(m, m, 1, &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions of `m` with only even parts (`ℰ𝒫(m)`).
pub fn even_partitions_of(m: usize) -> Vec<Partition> {
    if m % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(m, m, 2, &mut cur, &mut out);
    out.sort();
    out
}

fn gen_partitions(
    rest: usize,
    max: usize,
    step: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    let mut p = max.min(rest);
    p -= p % step;
    while p >= step {
        cur.push(p);
        gen_partitions(rest - p, p, step, cur, out);
        cur.pop();
        p -= step;
    }
}

/// Even partitions `λ` with `|λ| + ℓ(λ) <= n`: the index set of the class sum
/// basis of the even center in degree `n`.
pub fn even_partitions_fitting(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut m = 0;
    while m <= n {
        out.extend(even_partitions_of(m).into_iter().filter(|p| p.support() <= n));
        m += 2;
    }
    out.sort();
    out
}
