//! Words over the nonzero cells of a matrix and the gridded permutations they encode.
//!
//! Given column signs `c_k` and row signs `r_ℓ` factoring the matrix, a word
//! `w_1 … w_n` with letters `w_j = (k_j, ℓ_j)` is read left to right: the entries of
//! column `k` are inserted left-to-right when `c_k = 1` and right-to-left when
//! `c_k = -1`; the entries of row `ℓ` bottom-to-top when `r_ℓ = 1` and top-to-bottom
//! when `r_ℓ = -1`. The entries landing in cell `(k, ℓ)` then have slope
//! `c_k · r_ℓ = M_{k,ℓ}`, so the result is always correctly gridded.
//!
//! Deleting a letter deletes one entry, so [`encode`] is order-preserving from the
//! subword order to the containment order. When the row-column graph is a forest every
//! gridded permutation is hit, and [`decode`] finds a preimage by linearly extending the
//! union of the row and column orders.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};
use crate::gridding::{GriddedPermutation, Gridding};
use crate::matrix::{Cell, GridMatrix, Sign, SignAssignment};
use crate::perm::Permutation;

/// A letter is a nonzero cell of the ambient matrix.
pub type Letter = Cell;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word with the letter at 0-based position `pos` removed.
    pub fn without(&self, pos: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(pos);
        Word(letters)
    }

    /// How many times `letter` occurs.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Space-separated `k,ℓ` pairs, `()` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The nonzero cells of `matrix`, sorted by column then row.
pub fn alphabet(matrix: &GridMatrix) -> Vec<Letter> {
    matrix.nonzero_cells().map(|(c, _)| c).collect()
}

/// Ranks `0..n` of the positions of `keys`, grouped by key in increasing key order and
/// ordered within a group by position, ascending or descending per `direction(key)`.
fn coordinates(keys: &[usize], groups: usize, direction: impl Fn(usize) -> Sign) -> Vec<usize> {
    let mut coord = alloc::vec![0; keys.len()];
    let mut next = 1;
    for g in 1..=groups {
        let mut members: Vec<usize> = (0..keys.len()).filter(|&j| keys[j] == g).collect();
        if direction(g) == Sign::Minus {
            members.reverse();
        }
        for j in members {
            coord[j] = next;
            next += 1;
        }
    }
    coord
}

fn divisions(keys: &[usize], groups: usize) -> Vec<usize> {
    let mut divs = Vec::with_capacity(groups + 1);
    divs.push(1);
    for g in 1..=groups {
        let prev = divs[g - 1];
        divs.push(prev + keys.iter().filter(|&&k| k == g).count());
    }
    divs
}

/// The gridded permutation a word encodes under the given signs.
///
/// The `j`th letter becomes the entry whose index is its rank in the column-by-column
/// insertion order and whose value is its rank in the row-by-row insertion order.
pub fn encode(matrix: &GridMatrix, signs: &SignAssignment, word: &Word) -> Result<GriddedPermutation> {
    signs.check(matrix)?;
    for &letter in word.letters() {
        if !matrix.contains_cell(letter) || matrix.cell_entry(letter).is_none() {
            return Err(Error::invalid(alloc::format!("letter ({letter}) is not a nonzero cell of the matrix")));
        }
    }
    let cols: Vec<usize> = word.letters().iter().map(|c| c.col).collect();
    let rows: Vec<usize> = word.letters().iter().map(|c| c.row).collect();
    let x = coordinates(&cols, matrix.cols(), |k| signs.col(k));
    let y = coordinates(&rows, matrix.rows(), |l| signs.row(l));

    let mut entries = alloc::vec![0; word.len()];
    for (&xj, &yj) in x.iter().zip(&y) {
        entries[xj - 1] = yj;
    }
    let perm = Permutation::new(entries).expect("ranks form a permutation");
    let gridding = Gridding::new(divisions(&cols, matrix.cols()), divisions(&rows, matrix.rows()))
        .expect("cumulative counts are valid divisions");
    Ok(GriddedPermutation::new_unchecked(perm, matrix.clone(), gridding))
}

/// Whether `v` is a scattered subsequence of `w`.
pub fn subword_leq(v: &Word, w: &Word) -> bool {
    let mut rest = w.letters().iter();
    v.letters().iter().all(|a| rest.any(|b| a == b))
}

/// The column and row orders of a gridded permutation; entries are named by their
/// 1-based index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowColOrders {
    cols: Vec<Vec<usize>>,
    rows: Vec<Vec<usize>>,
}

impl RowColOrders {
    /// `≤^col_k`, least first.
    pub fn col(&self, k: usize) -> &[usize] {
        &self.cols[k - 1]
    }

    /// `≤^row_ℓ`, least first.
    pub fn row(&self, l: usize) -> &[usize] {
        &self.rows[l - 1]
    }

    /// All `t + u` orders, columns first.
    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.cols.iter().chain(&self.rows).map(Vec::as_slice)
    }
}

/// Column `k` ordered by index (ascending when `c_k = 1`), row `ℓ` ordered by value
/// (ascending when `r_ℓ = 1`).
pub fn row_col_orders(gp: &GriddedPermutation, signs: &SignAssignment) -> Result<RowColOrders> {
    signs.check(gp.matrix())?;
    let pi = gp.perm();
    let g = gp.gridding();
    let cols = (1..=gp.matrix().cols())
        .map(|k| {
            let span = g.col_divisions()[k - 1]..g.col_divisions()[k];
            let mut order: Vec<usize> = span.collect();
            if signs.col(k) == Sign::Minus {
                order.reverse();
            }
            order
        })
        .collect();
    let rows = (1..=gp.matrix().rows())
        .map(|l| {
            let span = g.row_divisions()[l - 1]..g.row_divisions()[l];
            let mut order: Vec<usize> = span.map(|v| pi.index_of(v).expect("value in range")).collect();
            if signs.row(l) == Sign::Minus {
                order.reverse();
            }
            order
        })
        .collect();
    Ok(RowColOrders { cols, rows })
}

/// The union of the row and column orders, kept as its cover pairs.
#[derive(Debug, Clone)]
pub struct OrderRelation {
    orders: RowColOrders,
    cells: Vec<Cell>,
    succ: Vec<Vec<usize>>,
}

impl OrderRelation {
    pub fn new(gp: &GriddedPermutation, signs: &SignAssignment) -> Result<Self> {
        let orders = row_col_orders(gp, signs)?;
        let n = gp.len();
        let cells: Vec<Cell> = (1..=n).map(|i| gp.cell_of(i)).collect();

        // A column order and a row order share a pair of entries only inside one cell,
        // where they agree because the cell's slope is c_k · r_ℓ.
        for (cell, _) in gp.matrix().nonzero_cells() {
            let inside = gp.entries_in(cell);
            for w in inside.windows(2) {
                let col_first = signs.col(cell.col) == Sign::Plus;
                let row_first = (gp.perm().value_at(w[0]) < gp.perm().value_at(w[1])) == (signs.row(cell.row) == Sign::Plus);
                assert_eq!(col_first, row_first, "row and column orders disagree inside cell ({cell})");
            }
        }

        let mut succ = alloc::vec![Vec::new(); n + 1];
        for order in orders.iter() {
            for w in order.windows(2) {
                succ[w[0]].push(w[1]);
            }
        }
        Ok(OrderRelation { orders, cells, succ })
    }

    pub fn orders(&self) -> &RowColOrders {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Pairs `(a, b)` of entries that are consecutive in some row or column order.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b)))
    }

    /// Whether `extension`, a sequence of entry indices, lists every entry once and
    /// respects every cover pair.
    pub fn is_linear_extension(&self, extension: &[usize]) -> bool {
        let n = self.len();
        let mut position = alloc::vec![usize::MAX; n + 1];
        for (p, &i) in extension.iter().enumerate() {
            if i == 0 || i > n || position[i] != usize::MAX {
                return false;
            }
            position[i] = p;
        }
        extension.len() == n && self.covers().all(|(a, b)| position[a] < position[b])
    }

    /// A linear extension; among the currently minimal entries the one of least index
    /// comes first.
    pub fn linear_extension(&self) -> Result<Vec<usize>> {
        let n = self.len();
        let mut indegree = alloc::vec![0usize; n + 1];
        for (_, b) in self.covers() {
            indegree[b] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> = (1..=n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(Reverse(a)) = ready.pop() {
            out.push(a);
            for &b in &self.succ[a] {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.push(Reverse(b));
                }
            }
        }
        if out.len() == n {
            Ok(out)
        } else {
            Err(Error::InconsistentOrders)
        }
    }

    /// The word whose `j`th letter is the cell of the `j`th entry of `extension`.
    pub fn word_for(&self, extension: &[usize]) -> Result<Word> {
        if !self.is_linear_extension(extension) {
            return Err(Error::invalid("not a linear extension of the row and column orders"));
        }
        Ok(extension.iter().map(|&i| self.cells[i - 1]).collect())
    }
}

/// A word that encodes to `gp` under `signs`, read off a linear extension of the row and
/// column orders.
///
/// Fails with [`Error::InconsistentOrders`] when those orders have no common extension,
/// which can only happen if the row-column graph has a cycle.
pub fn decode(gp: &GriddedPermutation, signs: &SignAssignment) -> Result<Word> {
    let relation = OrderRelation::new(gp, signs)?;
    let extension = relation.linear_extension()?;
    relation.word_for(&extension)
}
