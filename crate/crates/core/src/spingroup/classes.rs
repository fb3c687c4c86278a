use std::collections::VecDeque;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;
use serde::Serialize;

use super::{conjugate, distinguished_element, SpinElement};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// The even split class `D_λ(n)`, members sorted by one-line permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEnumeration {
    pub lambda: Partition,
    pub n: usize,
    pub members: Vec<SpinElement>,
}

impl ClassEnumeration {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sign of the member over `perm`, if `perm` lies in the class.
    pub fn sign_of(&self, perm: &Perm) -> Option<i8> {
        self.members
            .binary_search_by(|m| m.perm().cmp(perm))
            .ok()
            .map(|i| self.members[i].sign())
    }
}

type Cache = Mutex<FxHashMap<(Partition, usize), Arc<ClassEnumeration>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Orbit of `t_λ` under conjugation by the generators `t_1, ..., t_{n-1}`.
///
/// Results are cached per `(λ, n)`. Fails with [`Error::NotSplit`] if the
/// orbit ever meets both signs over one permutation.
pub fn enumerate_class(lambda: &Partition, n: usize) -> Result<Arc<ClassEnumeration>> {
    if !lambda.all_even() {
        return Err(Error::OddPart(lambda.clone()));
    }
    let key = (lambda.clone(), n);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let result = Arc::new(bfs(lambda, n)?);
    cache().lock().unwrap().insert(key, result.clone());
    Ok(result)
}

fn bfs(lambda: &Partition, n: usize) -> Result<ClassEnumeration> {
    if lambda.support() > n {
        return Ok(ClassEnumeration {
            lambda: lambda.clone(),
            n,
            members: Vec::new(),
        });
    }
    let seed = distinguished_element(lambda, n)?;
    let gens: Vec<Perm> = (0..n.saturating_sub(1))
        .map(|i| Perm::transposition(i, i + 1))
        .collect();
    let mut seen: FxHashMap<Perm, i8> = FxHashMap::default();
    seen.insert(*seed.perm(), seed.sign());
    let mut queue = VecDeque::from([seed]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = conjugate(s, &x)?;
            match seen.get(y.perm()) {
                Some(&sign) if sign != y.sign() => return Err(Error::NotSplit(lambda.clone())),
                Some(_) => {}
                None => {
                    seen.insert(*y.perm(), y.sign());
                    queue.push_back(y);
                }
            }
        }
    }
    let mut members: Vec<SpinElement> = seen
        .into_iter()
        .map(|(p, s)| SpinElement::new(n, p, s))
        .collect::<Result<_>>()?;
    members.sort_unstable();
    Ok(ClassEnumeration {
        lambda: lambda.clone(),
        n,
        members,
    })
}
