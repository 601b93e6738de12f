//! `M`-griddings and grid-class membership.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Cell, GridMatrix, Sign};
use crate::perm::Permutation;

/// Column divisions `1 = c_1 ≤ … ≤ c_{t+1} = n + 1` and row divisions
/// `1 = r_1 ≤ … ≤ r_{u+1} = n + 1`.
///
/// Column `k` holds the indices `[c_k, c_{k+1})` and row `ℓ` the values
/// `[r_ℓ, r_{ℓ+1})`; equal consecutive divisions give an empty column or row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gridding {
    cols: Vec<usize>,
    rows: Vec<usize>,
}

impl Gridding {
    pub fn new(cols: Vec<usize>, rows: Vec<usize>) -> Result<Self> {
        for (name, divs) in [("column", &cols), ("row", &rows)] {
            if divs.len() < 2 {
                return Err(Error::invalid(alloc::format!("{name} divisions need at least two points")));
            }
            if divs[0] != 1 {
                return Err(Error::invalid(alloc::format!("{name} divisions must start at 1")));
            }
            if divs.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::invalid(alloc::format!("{name} divisions must be weakly increasing")));
            }
        }
        if cols.last() != rows.last() {
            return Err(Error::invalid("column and row divisions must both end at n + 1"));
        }
        Ok(Gridding { cols, rows })
    }

    pub fn col_divisions(&self) -> &[usize] {
        &self.cols
    }

    pub fn row_divisions(&self) -> &[usize] {
        &self.rows
    }

    /// Length of the permutations this gridding applies to.
    pub fn len(&self) -> usize {
        self.cols[self.cols.len() - 1] - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The column holding the 1-based index `i`.
    pub fn col_of(&self, index: usize) -> usize {
        self.cols.partition_point(|&c| c <= index)
    }

    /// The row holding the value `v`.
    pub fn row_of(&self, value: usize) -> usize {
        self.rows.partition_point(|&r| r <= value)
    }

    fn fits(&self, pi: &Permutation, matrix: &GridMatrix) -> Result<()> {
        if self.cols.len() != matrix.cols() + 1 || self.rows.len() != matrix.rows() + 1 {
            return Err(Error::invalid(alloc::format!(
                "a {}x{} matrix needs {} column and {} row divisions",
                matrix.cols(),
                matrix.rows(),
                matrix.cols() + 1,
                matrix.rows() + 1
            )));
        }
        if self.len() != pi.len() {
            return Err(Error::invalid(alloc::format!(
                "divisions end at {} but the permutation has length {}",
                self.len() + 1,
                pi.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Gridding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("cols=")?;
        write_list(f, &self.cols)?;
        f.write_str(" rows=")?;
        write_list(f, &self.rows)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Whether `gridding` is an `M`-gridding of `pi`: each cell's entries are increasing,
/// decreasing or absent as `M_{k,ℓ}` is `1`, `-1` or `0`.
///
/// Fails when the division sequences do not match the shape of `matrix` or the length
/// of `pi`.
pub fn check_gridding(pi: &Permutation, matrix: &GridMatrix, gridding: &Gridding) -> Result<bool> {
    gridding.fits(pi, matrix)?;
    Ok(cells_are_monotone(pi, matrix, gridding))
}

fn cells_are_monotone(pi: &Permutation, matrix: &GridMatrix, gridding: &Gridding) -> bool {
    let (t, u) = (matrix.cols(), matrix.rows());
    let mut last: Vec<Option<usize>> = alloc::vec![None; t * u];
    for (i, &v) in pi.entries().iter().enumerate() {
        let (k, l) = (gridding.col_of(i + 1), gridding.row_of(v));
        let slot = &mut last[(k - 1) * u + (l - 1)];
        let ok = match (matrix.entry(k, l), *slot) {
            (None, _) => false,
            (Some(_), None) => true,
            (Some(Sign::Plus), Some(prev)) => prev < v,
            (Some(Sign::Minus), Some(prev)) => prev > v,
        };
        if !ok {
            return false;
        }
        *slot = Some(v);
    }
    true
}

/// Every weakly increasing sequence `1 = d_1 ≤ … ≤ d_{parts+1} = n + 1`, in lexicographic
/// order.
struct Divisions {
    current: Option<Vec<usize>>,
}

impl Divisions {
    fn new(parts: usize, n: usize) -> Self {
        let mut first = alloc::vec![1; parts + 1];
        first[parts] = n + 1;
        Divisions { current: Some(first) }
    }
}

impl Iterator for Divisions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let end = current[current.len() - 1];
        let mut succ = current.clone();
        if let Some(i) = (1..succ.len() - 1).rev().find(|&i| succ[i] < end) {
            let v = succ[i] + 1;
            for d in &mut succ[i..current.len() - 1] {
                *d = v;
            }
            self.current = Some(succ);
        }
        Some(current)
    }
}

/// All `M`-griddings of `pi`: column divisions in lexicographic order, row divisions
/// innermost.
pub fn griddings<'a>(pi: &'a Permutation, matrix: &'a GridMatrix) -> impl Iterator<Item = Gridding> + 'a {
    let n = pi.len();
    Divisions::new(matrix.cols(), n).flat_map(move |cols| {
        Divisions::new(matrix.rows(), n).filter_map(move |rows| {
            let g = Gridding { cols: cols.clone(), rows };
            cells_are_monotone(pi, matrix, &g).then_some(g)
        })
    })
}

/// The first `M`-gridding of `pi` in search order, or `None` when `pi ∉ Grid(M)`.
pub fn find_gridding(pi: &Permutation, matrix: &GridMatrix) -> Option<Gridding> {
    griddings(pi, matrix).next()
}

pub fn in_grid_class(pi: &Permutation, matrix: &GridMatrix) -> bool {
    find_gridding(pi, matrix).is_some()
}

/// A permutation together with an `M`-gridding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GriddedPermutation {
    perm: Permutation,
    matrix: GridMatrix,
    gridding: Gridding,
}

impl GriddedPermutation {
    pub fn new(perm: Permutation, matrix: GridMatrix, gridding: Gridding) -> Result<Self> {
        if !check_gridding(&perm, &matrix, &gridding)? {
            return Err(Error::invalid(alloc::format!("{gridding} is not a gridding of {perm} for this matrix")));
        }
        Ok(GriddedPermutation { perm, matrix, gridding })
    }

    pub(crate) fn new_unchecked(perm: Permutation, matrix: GridMatrix, gridding: Gridding) -> Self {
        debug_assert_eq!(check_gridding(&perm, &matrix, &gridding), Ok(true));
        GriddedPermutation { perm, matrix, gridding }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn matrix(&self) -> &GridMatrix {
        &self.matrix
    }

    pub fn gridding(&self) -> &Gridding {
        &self.gridding
    }

    pub fn into_perm(self) -> Permutation {
        self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// The cell of the entry at a 1-based index.
    pub fn cell_of(&self, index: usize) -> Cell {
        Cell::new(self.gridding.col_of(index), self.gridding.row_of(self.perm.value_at(index)))
    }

    /// Indices of the entries in `cell`, in increasing order.
    pub fn entries_in(&self, cell: Cell) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.cell_of(i) == cell).collect()
    }
}

impl fmt::Display for GriddedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.perm, self.gridding)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(digits: &str) -> Permutation {
        Permutation::new(digits.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
    }

    fn example_matrix() -> GridMatrix {
        GridMatrix::from_visual_rows(&[vec![0, 1, 1], vec![1, 0, -1]]).unwrap()
    }

    fn g(cols: &[usize], rows: &[usize]) -> Gridding {
        Gridding::new(cols.to_vec(), rows.to_vec()).unwrap()
    }

    #[test]
    fn malformed_divisions() {
        assert!(Gridding::new(vec![1], vec![1, 1]).is_err());
        assert!(Gridding::new(vec![2, 3], vec![1, 3]).is_err());
        assert!(Gridding::new(vec![1, 3, 2, 3], vec![1, 3]).is_err());
        assert!(Gridding::new(vec![1, 3], vec![1, 4]).is_err());
        let grid = g(&[1, 3, 5, 10], &[1, 6, 10]);
        assert!(check_gridding(&p("12"), &example_matrix(), &grid).is_err());
        assert!(check_gridding(&p("136854792"), &example_matrix(), &g(&[1, 5, 10], &[1, 6, 10])).is_err());
    }

    #[test]
    fn example_gridding() {
        let pi = p("136854792");
        assert_eq!(check_gridding(&pi, &example_matrix(), &g(&[1, 3, 5, 10], &[1, 6, 10])), Ok(true));
        assert_eq!(check_gridding(&pi, &example_matrix(), &g(&[1, 2, 5, 10], &[1, 6, 10])), Ok(false));
        assert!(in_grid_class(&pi, &example_matrix()));
        let found = find_gridding(&pi, &example_matrix()).unwrap();
        assert_eq!(check_gridding(&pi, &example_matrix(), &found), Ok(true));
        assert!(griddings(&pi, &example_matrix()).any(|x| x == g(&[1, 3, 5, 10], &[1, 6, 10])));
    }

    #[test]
    fn empty_permutation_is_in_every_class() {
        let empty = Permutation::empty();
        assert_eq!(check_gridding(&empty, &example_matrix(), &g(&[1, 1, 1, 1], &[1, 1, 1])), Ok(true));
        for m in GridMatrix::all(2, 1) {
            assert!(in_grid_class(&empty, &m));
        }
    }

    #[test]
    fn single_cell_classes() {
        let inc = GridMatrix::from_fn(1, 1, |_, _| 1).unwrap();
        let dec = GridMatrix::from_fn(1, 1, |_, _| -1).unwrap();
        assert_eq!(find_gridding(&p("321"), &inc), None);
        assert_eq!(find_gridding(&p("321"), &dec), Some(g(&[1, 4], &[1, 4])));
    }

    #[test]
    fn two_increasing_cells_miss_321() {
        let m = GridMatrix::from_fn(2, 1, |_, _| 1).unwrap();
        assert!(!in_grid_class(&p("321"), &m));
        assert!(in_grid_class(&p("231"), &m));
    }

    #[test]
    fn division_enumeration_is_lexicographic() {
        let all: Vec<Vec<usize>> = Divisions::new(2, 2).collect();
        assert_eq!(all, vec![vec![1, 1, 3], vec![1, 2, 3], vec![1, 3, 3]]);
        // C(n + parts - 1, parts - 1) sequences
        assert_eq!(Divisions::new(3, 9).count(), 55);
        assert_eq!(Divisions::new(1, 5).count(), 1);
    }

    #[test]
    fn cell_lookup() {
        let gp = GriddedPermutation::new(p("136854792"), example_matrix(), g(&[1, 3, 5, 10], &[1, 6, 10])).unwrap();
        assert_eq!(gp.cell_of(1), Cell::new(1, 1));
        assert_eq!(gp.cell_of(4), Cell::new(2, 2));
        assert_eq!(gp.cell_of(9), Cell::new(3, 1));
        assert_eq!(gp.entries_in(Cell::new(3, 2)), vec![7, 8]);
        assert_eq!(gp.to_string(), "136854792 cols=1,3,5,10 rows=1,6,10");
        assert!(GriddedPermutation::new(p("136854792"), example_matrix(), g(&[1, 2, 5, 10], &[1, 6, 10])).is_err());
    }

    #[test]
    fn empty_columns_resolve_to_the_last_column_sharing_a_division() {
        let grid = g(&[1, 1, 3], &[1, 3]);
        assert_eq!(grid.col_of(1), 2);
        assert_eq!(grid.col_of(2), 2);
        assert_eq!(grid.row_of(2), 1);
    }
}
