//! Permutations in one-line notation and the pattern containment order.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Bound, RangeBounds};

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation: `entries[i - 1] = π(i)`.
///
/// The empty permutation (`n = 0`) is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the values are
    /// exactly `1..=n`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::invalid(alloc::format!("value {v} is outside 1..={n}")));
            }
            if core::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(alloc::format!("value {v} appears more than once")));
            }
        }
        Ok(Permutation(entries))
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    /// `π(i)` for a 1-based index `i`.
    pub fn value_at(&self, index: usize) -> usize {
        self.0[index - 1]
    }

    /// The 1-based index `i` with `π(i) = value`.
    pub fn index_of(&self, value: usize) -> Option<usize> {
        self.0.iter().position(|&v| v == value).map(|p| p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// The permutation obtained by deleting the entry at a 1-based index and flattening.
    pub fn delete(&self, index: usize) -> Permutation {
        let removed = self.0[index - 1];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i + 1 != index)
                .map(|(_, &v)| if v > removed { v - 1 } else { v })
                .collect(),
        )
    }

    /// The pattern formed by the entries at the given 1-based indices, in index order.
    pub fn restrict(&self, indices: &[usize]) -> Permutation {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        let values: Vec<usize> = sorted.iter().map(|&i| self.value_at(i)).collect();
        flatten_distinct(&values)
    }

    /// Whether `sigma` is contained in `self` as a pattern.
    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.find_pattern(sigma).is_some()
    }

    /// The lexicographically least set of 1-based indices whose entries form `sigma`.
    pub fn find_pattern(&self, sigma: &Permutation) -> Option<Vec<usize>> {
        let k = sigma.len();
        if k > self.len() {
            return None;
        }
        // For each pattern position j, the earlier positions holding the nearest smaller
        // and nearest larger pattern values. Matching against those two neighbours is
        // enough, since everything placed before j is already consistent.
        let bounds: Vec<(Option<usize>, Option<usize>)> = (0..k)
            .map(|j| {
                let s = sigma.0[j];
                let below = (0..j).filter(|&p| sigma.0[p] < s).max_by_key(|&p| sigma.0[p]);
                let above = (0..j).filter(|&p| sigma.0[p] > s).min_by_key(|&p| sigma.0[p]);
                (below, above)
            })
            .collect();

        let mut chosen = Vec::with_capacity(k);
        if embed(&self.0, k, &bounds, 0, &mut chosen) {
            Some(chosen.into_iter().map(|i| i + 1).collect())
        } else {
            None
        }
    }

    /// Whether the entries at the given 1-based indices form an occurrence of `sigma`.
    pub fn is_occurrence(&self, sigma: &Permutation, indices: &[usize]) -> bool {
        indices.len() == sigma.len()
            && indices.windows(2).all(|w| w[0] < w[1])
            && indices.iter().all(|&i| (1..=self.len()).contains(&i))
            && self.restrict(indices) == *sigma
    }

    /// `π(X × Y)`, see [`window`].
    pub fn window(&self, indices: impl RangeBounds<usize>, values: impl RangeBounds<usize>) -> Result<Permutation> {
        let (x0, x1) = resolve(&indices, self.len(), "index")?;
        let (y0, y1) = resolve(&values, self.len(), "value")?;
        let picked: Vec<usize> = (x0..x1).map(|i| self.value_at(i)).filter(|v| (y0..y1).contains(v)).collect();
        Ok(flatten_distinct(&picked))
    }
}

fn embed(
    pi: &[usize],
    k: usize,
    bounds: &[(Option<usize>, Option<usize>)],
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    if j == k {
        return true;
    }
    let last = pi.len() - (k - j);
    for i in start..=last {
        let v = pi[i];
        let (below, above) = bounds[j];
        if below.is_some_and(|p| pi[chosen[p]] > v) || above.is_some_and(|p| pi[chosen[p]] < v) {
            continue;
        }
        chosen.push(i);
        if embed(pi, k, bounds, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Converts an interval into a half-open 1-based range `[a, b)` with `1 ≤ a ≤ b ≤ n + 1`.
fn resolve(range: &impl RangeBounds<usize>, n: usize, what: &str) -> Result<(usize, usize)> {
    let start = match range.start_bound() {
        Bound::Included(&s) => s,
        Bound::Excluded(&s) => s + 1,
        Bound::Unbounded => 1,
    };
    let end = match range.end_bound() {
        Bound::Included(&e) => e + 1,
        Bound::Excluded(&e) => e,
        Bound::Unbounded => n + 1,
    };
    if start < 1 || end > n + 1 || start > end {
        return Err(Error::invalid(alloc::format!(
            "{what} interval [{start}, {end}) is not within [1, {})",
            n + 1
        )));
    }
    Ok((start, end))
}

/// Rank-flattens values already known to be distinct.
pub(crate) fn flatten_distinct(values: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut ranks = alloc::vec![0; values.len()];
    for (rank, i) in order.into_iter().enumerate() {
        ranks[i] = rank + 1;
    }
    Permutation(ranks)
}

/// The unique permutation order-isomorphic to a sequence of distinct values.
///
/// ```
/// use gridperm_core::{pattern_of, Permutation};
/// assert_eq!(pattern_of(&[9, 1, 6, 7, 2]).unwrap(), Permutation::new(vec![5, 1, 3, 4, 2]).unwrap());
/// ```
pub fn pattern_of<T: Ord>(values: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]));
    if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
        return Err(Error::invalid("values are not distinct"));
    }
    let mut ranks = alloc::vec![0; values.len()];
    for (rank, i) in order.into_iter().enumerate() {
        ranks[i] = rank + 1;
    }
    Ok(Permutation(ranks))
}

/// Whether `pi` contains `sigma`.
pub fn contains(pi: &Permutation, sigma: &Permutation) -> bool {
    pi.contains(sigma)
}

/// `π(X × Y)`: the pattern of the entries of `pi` whose index lies in `indices` and whose
/// value lies in `values`.
///
/// Both intervals are 1-based; `a..b` is half-open and `a..=b` closed, so the closed
/// interval `[5, 9]` can be written `5..=9` or `5..10`. Bounds must stay within
/// `[1, n + 1)`.
pub fn window(pi: &Permutation, indices: impl RangeBounds<usize>, values: impl RangeBounds<usize>) -> Result<Permutation> {
    pi.window(indices, values)
}

/// All permutations of length `n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some((1..=n).collect()) }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation(current))
    }
}

impl fmt::Display for Permutation {
    /// Digits run together when `n ≤ 9` (`136854792`), comma-separated otherwise, and
    /// `()` for the empty permutation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.len() <= 9 { "" } else { "," };
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
