//! Permutations of `{1, 2, ...}` with finite support.
//!
//! A [`Perm`] does not carry its degree: it is an element of `S_infinity`
//! whose support lies below [`MAX_DEGREE`], so the embedding `S_n -> S_{n+1}`
//! is the identity on values. Containers that need a degree (spin elements,
//! algebra elements) store it next to the permutation.
//!
//! Points are 0-based internally. The one-line constructors and accessors
//! use the 1-based convention of the JSON forms.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree a [`Perm`] can act on.
pub const MAX_DEGREE: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; MAX_DEGREE]);

const IDENTITY: [u8; MAX_DEGREE] = {
    let mut a = [0u8; MAX_DEGREE];
    let mut i = 0;
    while i < MAX_DEGREE {
        a[i] = i as u8;
        i += 1;
    }
    a
};

impl Default for Perm {
    fn default() -> Self {
        Self::identity()
    }
}

impl Perm {
    pub const fn identity() -> Self {
        Perm(IDENTITY)
    }

    /// Builds a permutation from its 1-based one-line form `[w(1), ..., w(n)]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = 0u32;
        let mut p = IDENTITY;
        for (i, &w) in images.iter().enumerate() {
            if w == 0 || w > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {w} out of range 1..={n}"
                )));
            }
            if seen & (1 << (w - 1)) != 0 {
                return Err(Error::InvalidPermutation(format!("repeated image {w}")));
            }
            seen |= 1 << (w - 1);
            p[i] = (w - 1) as u8;
        }
        Ok(Perm(p))
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles(cycles: &[&[usize]]) -> Result<Self> {
        let mut p = IDENTITY;
        let mut seen = 0u32;
        for cycle in cycles {
            for &x in cycle.iter() {
                if x == 0 || x > MAX_DEGREE {
                    return Err(Error::IndexOutOfRange {
                        index: x,
                        max: MAX_DEGREE,
                    });
                }
                if seen & (1 << (x - 1)) != 0 {
                    return Err(Error::RepeatedIndex(x));
                }
                seen |= 1 << (x - 1);
            }
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                p[x - 1] = (next - 1) as u8;
            }
        }
        Ok(Perm(p))
    }

    /// The transposition of the 0-based points `a` and `b`.
    pub fn transposition(a: usize, b: usize) -> Self {
        let mut p = IDENTITY;
        p.swap(a, b);
        Perm(p)
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// 1-based one-line form in degree `n`.
    pub fn one_line(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.0[i] as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    #[inline]
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut r = [0u8; MAX_DEGREE];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        Perm(r)
    }

    pub fn inverse(&self) -> Perm {
        let mut r = [0u8; MAX_DEGREE];
        for (i, &w) in self.0.iter().enumerate() {
            r[w as usize] = i as u8;
        }
        Perm(r)
    }

    pub fn is_identity(&self) -> bool {
        self.0 == IDENTITY
    }

    /// Bitmask of moved 0-based points.
    pub fn moved_mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &w) in self.0.iter().enumerate() {
            if w as usize != i {
                m |= 1 << i;
            }
        }
        m
    }

    /// True if every point `>= n` (0-based) is fixed, i.e. `self ∈ S_n`.
    pub fn fits(&self, n: usize) -> bool {
        self.0[n.min(MAX_DEGREE)..]
            .iter()
            .enumerate()
            .all(|(k, &w)| w as usize == n + k)
    }

    /// Smallest `n` with `self ∈ S_n`.
    pub fn min_degree(&self) -> usize {
        32 - self.moved_mask().leading_zeros() as usize
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// smallest point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut seen = 0u32;
        for start in 0..MAX_DEGREE {
            if seen & (1 << start) != 0 || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start as u8];
            seen |= 1 << start;
            let mut x = self.0[start] as usize;
            while x != start {
                seen |= 1 << x;
                cycle.push(x as u8);
                x = self.0[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of the nontrivial cycles, non-increasing.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = Vec::new();
        let mut seen = 0u32;
        for start in 0..MAX_DEGREE {
            if seen & (1 << start) != 0 || self.0[start] as usize == start {
                continue;
            }
            let mut len = 1;
            seen |= 1 << start;
            let mut x = self.0[start] as usize;
            while x != start {
                seen |= 1 << x;
                len += 1;
                x = self.0[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Number of nontrivial cycles.
    pub fn cycle_count(&self) -> usize {
        let mut count = 0;
        let mut seen = 0u32;
        for start in 0..MAX_DEGREE {
            if seen & (1 << start) != 0 || self.0[start] as usize == start {
                continue;
            }
            count += 1;
            let mut x = start;
            loop {
                seen |= 1 << x;
                x = self.0[x] as usize;
                if x == start {
                    break;
                }
            }
        }
        count
    }

    /// Size of the modified cycle type: moved points minus nontrivial cycles.
    pub fn degree(&self) -> usize {
        self.moved_mask().count_ones() as usize - self.cycle_count()
    }

    pub fn is_even(&self) -> bool {
        self.degree() % 2 == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All permutations of `S_n` in lexicographic one-line order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    assert!(n <= MAX_DEGREE);
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        let mut p = IDENTITY;
        p[..n].copy_from_slice(&cur);
        out.push(Perm(p));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Calls `f` on every permutation of `S_n` whose nontrivial cycle lengths are
/// `lengths` (any order, each `>= 2`). Each permutation is visited once.
pub fn for_each_with_cycle_lengths<F: FnMut(&Perm)>(lengths: &[usize], n: usize, mut f: F) {
    let mut lens: Vec<usize> = lengths.to_vec();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    if lens.iter().sum::<usize>() > n || n > MAX_DEGREE {
        return;
    }
    let mut perm = IDENTITY;
    let mut cycle = Vec::with_capacity(n);
    place_cycles(&lens, 0, n, 0, 0, &mut perm, &mut cycle, &mut f);
}

#[allow(clippy::too_many_arguments)]
fn place_cycles<F: FnMut(&Perm)>(
    lens: &[usize],
    k: usize,
    n: usize,
    used: u32,
    min_floor: usize,
    perm: &mut [u8; MAX_DEGREE],
    cycle: &mut Vec<u8>,
    f: &mut F,
) {
    if k == lens.len() {
        f(&Perm(*perm));
        return;
    }
    let len = lens[k];
    // cycles of equal length are listed with increasing minima
    let floor = if k > 0 && lens[k - 1] == len { min_floor } else { 0 };
    for m in floor..n {
        if used & (1 << m) != 0 {
            continue;
        }
        cycle.clear();
        cycle.push(m as u8);
        extend_cycle(lens, k, n, used | (1 << m), m, len, perm, cycle, f);
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle<F: FnMut(&Perm)>(
    lens: &[usize],
    k: usize,
    n: usize,
    used: u32,
    min: usize,
    len: usize,
    perm: &mut [u8; MAX_DEGREE],
    cycle: &mut Vec<u8>,
    f: &mut F,
) {
    if cycle.len() == len {
        for i in 0..len {
            perm[cycle[i] as usize] = cycle[(i + 1) % len];
        }
        let saved: Vec<u8> = cycle.clone();
        place_cycles(lens, k + 1, n, used, min + 1, perm, cycle, f);
        for &x in &saved {
            perm[x as usize] = x;
        }
        cycle.clear();
        cycle.extend_from_slice(&saved);
        return;
    }
    for x in (min + 1)..n {
        if used & (1 << x) != 0 {
            continue;
        }
        cycle.push(x as u8);
        extend_cycle(lens, k, n, used | (1 << x), min, len, perm, cycle, f);
        cycle.pop();
    }
}
