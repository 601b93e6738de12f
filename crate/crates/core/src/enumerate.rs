//! Exhaustive generation of grid-class members, by filtering all permutations or by
//! encoding all words.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::codec::{alphabet, encode, Word};
use crate::error::{Error, Result};
use crate::gridding::{in_grid_class, GriddedPermutation};
use crate::matrix::{GridMatrix, SignAssignment};
use crate::perm::{permutations, Permutation};

/// Budgets for the exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Longest length filtered over all `n!` permutations.
    pub max_len: usize,
    /// Most words (`|Σ|^n`) a word sweep may visit.
    pub max_words: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_len: 9, max_words: 10_000_000 }
    }
}

impl Limits {
    fn check_len(&self, n: usize) -> Result<()> {
        if n > self.max_len {
            return Err(Error::LimitExceeded { what: "permutation length", requested: n as u128, cap: self.max_len as u128 });
        }
        Ok(())
    }

    fn check_words(&self, letters: usize, n: usize) -> Result<()> {
        let count = (letters as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if count > self.max_words {
            return Err(Error::LimitExceeded { what: "word count", requested: count, cap: self.max_words });
        }
        Ok(())
    }
}

/// `Grid(M) ∩ S_n`, by testing every permutation of length `n`.
pub fn enumerate_class(matrix: &GridMatrix, n: usize, limits: &Limits) -> Result<BTreeSet<Permutation>> {
    limits.check_len(n)?;
    Ok(permutations(n).filter(|pi| in_grid_class(pi, matrix)).collect())
}

/// Every word of length `n` over `letters`, in lexicographic order of positions.
fn words(letters: &[crate::codec::Letter], n: usize) -> impl Iterator<Item = Word> + '_ {
    let mut digits: Option<Vec<usize>> = (n == 0 || !letters.is_empty()).then(|| alloc::vec![0; n]);
    core::iter::from_fn(move || {
        let current = digits.take()?;
        let word: Word = current.iter().map(|&d| letters[d]).collect();
        let mut succ = current;
        if let Some(i) = (0..n).rev().find(|&i| succ[i] + 1 < letters.len()) {
            succ[i] += 1;
            for d in &mut succ[i + 1..] {
                *d = 0;
            }
            digits = Some(succ);
        }
        Some(word)
    })
}

/// The encodings of all words of length `n`, as gridded permutations.
pub fn enumerate_gridded_via_words(
    matrix: &GridMatrix,
    signs: &SignAssignment,
    n: usize,
    limits: &Limits,
) -> Result<BTreeSet<GriddedPermutation>> {
    let sigma = alphabet(matrix);
    limits.check_words(sigma.len(), n)?;
    words(&sigma, n).map(|w| encode(matrix, signs, &w)).collect()
}

/// `{ π : π = encode(w) for some word w of length n }`, griddings forgotten.
pub fn enumerate_via_words(
    matrix: &GridMatrix,
    signs: &SignAssignment,
    n: usize,
    limits: &Limits,
) -> Result<BTreeSet<Permutation>> {
    let sigma = alphabet(matrix);
    limits.check_words(sigma.len(), n)?;
    words(&sigma, n).map(|w| encode(matrix, signs, &w).map(GriddedPermutation::into_perm)).collect()
}

/// `|Grid(M) ∩ S_n|` for `n = 1..=n_max`.
pub fn counting_sequence(matrix: &GridMatrix, n_max: usize, limits: &Limits) -> Result<Vec<usize>> {
    limits.check_len(n_max)?;
    (1..=n_max).map(|n| enumerate_class(matrix, n, limits).map(|s| s.len())).collect()
}
