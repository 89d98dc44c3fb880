//! Rainbow selections with many distinct sums.
//!
//! Given lists `L_1, …, L_t` with `|L_i| ≥ t`, picking one element from each
//! list with all picks pairwise distinct realises at least
//! `Σ|L_i| − t² + 1` distinct sums. The construction: prune the lists so that
//! no later list contains an earlier list's minimum and no earlier list
//! contains a later list's maximum, then walk a staircase from the all-minima
//! selection, raising the last coordinate through its values, then the one
//! before it, and so on. Each step strictly increases the sum.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("list {index} has {size} elements but {t} lists were given")]
    ListTooShort { index: usize, size: usize, t: usize },
    #[error("every staircase sum is forbidden")]
    Exhausted,
}

/// `t` finite sets of integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListFamily {
    lists: Vec<BTreeSet<i64>>,
}

impl ListFamily {
    pub fn new<I, L>(lists: I) -> Self
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = i64>,
    {
        ListFamily {
            lists: lists.into_iter().map(|l| l.into_iter().collect()).collect(),
        }
    }

    pub fn t(&self) -> usize {
        self.lists.len()
    }

    pub fn lists(&self) -> &[BTreeSet<i64>] {
        &self.lists
    }

    /// Checks `|L_i| ≥ t` for every list.
    pub fn check_hypothesis(&self) -> Result<(), RainbowError> {
        let t = self.t();
        match self.lists.iter().position(|l| l.len() < t) {
            Some(index) => Err(RainbowError::ListTooShort {
                index,
                size: self.lists[index].len(),
                t,
            }),
            None => Ok(()),
        }
    }

    /// `Σ|L_i| − t² + 1`, the guaranteed number of distinct rainbow sums.
    pub fn guaranteed_sums(&self) -> i64 {
        let total: usize = self.lists.iter().map(BTreeSet::len).sum();
        total as i64 - (self.t() * self.t()) as i64 + 1
    }
}

/// Output of [`prune_lists`]; the only input [`staircase`] accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedFamily(ListFamily);

impl PrunedFamily {
    pub fn lists(&self) -> &[BTreeSet<i64>] {
        self.0.lists()
    }

    pub fn staircase_len(&self) -> usize {
        self.lists().iter().map(BTreeSet::len).sum::<usize>() + 1 - self.0.t()
    }
}

/// One element per list, pairwise distinct, in list order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub values: Vec<i64>,
    pub sum: i64,
}

/// Two-pass pruning of working copies: forward passes strip each list's
/// current minimum from all later lists, backward passes strip each list's
/// current maximum from all earlier lists.
pub fn prune_lists(f: &ListFamily) -> Result<PrunedFamily, RainbowError> {
    f.check_hypothesis()?;
    let mut lists = f.lists.clone();
    let t = lists.len();
    for i in 0..t.saturating_sub(1) {
        let min = *lists[i].first().expect("non-empty by hypothesis");
        for later in &mut lists[i + 1..] {
            later.remove(&min);
        }
    }
    for i in (1..t).rev() {
        let max = *lists[i].last().expect("at most t-1 removals");
        for earlier in &mut lists[..i] {
            earlier.remove(&max);
        }
    }
    Ok(PrunedFamily(ListFamily { lists }))
}

/// Lazily walks the staircase of a pruned family.
pub fn staircase(f: &PrunedFamily) -> impl Iterator<Item = Selection> + '_ {
    let sorted: Vec<Vec<i64>> = f.lists().iter().map(|l| l.iter().copied().collect()).collect();
    let t = sorted.len();
    let mut values: Vec<i64> = sorted.iter().map(|l| l[0]).collect();
    let mut first = true;
    // (coordinate being raised, next index within it)
    let mut cursor = (t, 1usize);
    std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(Selection {
                sum: values.iter().sum(),
                values: values.clone(),
            });
        }
        loop {
            let (coord, idx) = cursor;
            if coord == 0 {
                return None;
            }
            let list = &sorted[coord - 1];
            if idx < list.len() {
                values[coord - 1] = list[idx];
                cursor = (coord, idx + 1);
                return Some(Selection {
                    sum: values.iter().sum(),
                    values: values.clone(),
                });
            }
            cursor = (coord - 1, 1);
        }
    })
}

/// The full staircase as a vector.
pub fn staircase_selections(f: &PrunedFamily) -> Vec<Selection> {
    staircase(f).collect()
}

/// First staircase selection whose sum is not forbidden.
pub fn pick_avoiding(f: &ListFamily, forbidden: &BTreeSet<i64>) -> Result<Selection, RainbowError> {
    let pruned = prune_lists(f)?;
    let found = staircase(&pruned).find(|s| !forbidden.contains(&s.sum));
    found.ok_or(RainbowError::Exhausted)
}
