//! Depth-first enumeration of total maps with pruning and a node budget.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Shared visited-node counter. One budget may be threaded through several
/// searches so that a whole command respects a single limit.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0), exhausted: AtomicBool::new(false) }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Counts one node; false once the limit is passed.
    #[inline]
    pub fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn error(&self, found: usize) -> Error {
        Error::SearchBudgetExceeded { visited: self.used(), found }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}

/// Enumerates every map `x ↦ values[x]` with `values[x] ∈ candidates[x]`
/// accepted by `consistent`.
///
/// Positions are assigned in index order and candidates are tried in the
/// order given, so with sorted candidates the output is lexicographic.
/// `consistent(k, partial)` is called right after position `k` is assigned
/// and should check every constraint whose arguments all lie in `0..=k`.
/// The first level is split across the rayon pool.
pub fn enumerate_maps<F>(candidates: &[Vec<usize>], budget: &Budget, consistent: F) -> Result<Vec<Vec<usize>>>
where
    F: Fn(usize, &[usize]) -> bool + Sync,
{
    let n = candidates.len();
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let parts: Vec<Vec<Vec<usize>>> = candidates[0]
        .par_iter()
        .map(|&v| {
            let mut out = Vec::new();
            if !budget.tick() {
                return out;
            }
            let mut partial = Vec::with_capacity(n);
            partial.push(v);
            if consistent(0, &partial) {
                dfs(candidates, budget, &consistent, &mut partial, &mut out);
            }
            out
        })
        .collect();
    let found: Vec<Vec<usize>> = parts.into_iter().flatten().collect();
    if budget.is_exhausted() {
        return Err(budget.error(found.len()));
    }
    Ok(found)
}

fn dfs<F>(candidates: &[Vec<usize>], budget: &Budget, consistent: &F, partial: &mut Vec<usize>, out: &mut Vec<Vec<usize>>)
where
    F: Fn(usize, &[usize]) -> bool,
{
    let k = partial.len();
    if k == candidates.len() {
        out.push(partial.clone());
        return;
    }
    for &v in &candidates[k] {
        if !budget.tick() {
            return;
        }
        partial.push(v);
        if consistent(k, partial) {
            dfs(candidates, budget, consistent, partial, out);
        }
        partial.pop();
    }
}

/// Groups constraint indices by the largest position they mention, so a
/// search only re-checks constraints that just became fully assigned.
pub fn bucket_by_max<T>(positions: usize, items: impl IntoIterator<Item = (usize, T)>) -> Vec<Vec<T>> {
    let mut buckets: Vec<Vec<T>> = (0..positions).map(|_| Vec::new()).collect();
    for (k, item) in items {
        buckets[k].push(item);
    }
    buckets
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_all_maps_in_order() {
        let c = vec![vec![0, 1], vec![0, 1, 2]];
        let maps = enumerate_maps(&c, &Budget::default(), |_, _| true).unwrap();
        assert_eq!(maps.len(), 6);
        assert_eq!(maps[0], vec![0, 0]);
        assert_eq!(maps[5], vec![1, 2]);
        let mut sorted = maps.clone();
        sorted.sort();
        assert_eq!(maps, sorted);
    }

    #[test]
    fn pruning_and_budget() {
        let c = vec![vec![0, 1, 2]; 3];
        let increasing = enumerate_maps(&c, &Budget::default(), |k, p| k == 0 || p[k - 1] < p[k]).unwrap();
        assert_eq!(increasing, vec![vec![0, 1, 2]]);
        let err = enumerate_maps(&c, &Budget::new(5), |_, _| true).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded { .. }));
    }

    #[test]
    fn empty_domain_has_one_map() {
        assert_eq!(enumerate_maps(&[], &Budget::default(), |_, _| true).unwrap(), vec![Vec::<usize>::new()]);
    }
}
