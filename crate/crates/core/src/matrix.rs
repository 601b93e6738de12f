//! `0/±1` grid matrices and partial-multiplication sign assignments.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i8())
    }
}

/// A cell `(k, ℓ)`: column `k` from the left, row `ℓ` from the bottom, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.col, self.row)
    }
}

/// A `t × u` matrix over `{0, +1, -1}`: `t` columns, `u` rows, indexed from the lower
/// left-hand corner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridMatrix {
    cols: usize,
    rows: usize,
    // column-major: entry (k, ℓ) at (k - 1) * rows + (ℓ - 1)
    entries: Vec<Option<Sign>>,
}

impl GridMatrix {
    /// The all-zero `t × u` matrix.
    pub fn zeros(cols: usize, rows: usize) -> Result<Self> {
        if cols == 0 || rows == 0 {
            return Err(Error::invalid("a grid matrix needs at least one column and one row"));
        }
        Ok(GridMatrix { cols, rows, entries: alloc::vec![None; cols * rows] })
    }

    /// Builds a matrix from `f(k, ℓ) ∈ {-1, 0, 1}`.
    pub fn from_fn(cols: usize, rows: usize, mut f: impl FnMut(usize, usize) -> i8) -> Result<Self> {
        let mut m = GridMatrix::zeros(cols, rows)?;
        for k in 1..=cols {
            for l in 1..=rows {
                m.set(k, l, f(k, l))?;
            }
        }
        Ok(m)
    }

    /// Builds a matrix from rows as they are drawn on the page: top row first, each row
    /// listing columns left to right.
    pub fn from_visual_rows(lines: &[Vec<i8>]) -> Result<Self> {
        let rows = lines.len();
        let cols = lines.first().map_or(0, Vec::len);
        if lines.iter().any(|line| line.len() != cols) {
            return Err(Error::invalid("matrix rows have different lengths"));
        }
        GridMatrix::from_fn(cols, rows, |k, l| lines[rows - l][k - 1])
    }

    /// Builds a matrix of the given shape from its nonzero cells.
    pub fn from_cells(cols: usize, rows: usize, cells: &[(Cell, i8)]) -> Result<Self> {
        let mut m = GridMatrix::zeros(cols, rows)?;
        for &(cell, v) in cells {
            m.set(cell.col, cell.row, v)?;
        }
        Ok(m)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    fn slot(&self, col: usize, row: usize) -> Option<usize> {
        ((1..=self.cols).contains(&col) && (1..=self.rows).contains(&row)).then(|| (col - 1) * self.rows + (row - 1))
    }

    pub fn set(&mut self, col: usize, row: usize, value: i8) -> Result<()> {
        let slot = self
            .slot(col, row)
            .ok_or_else(|| Error::invalid(alloc::format!("cell ({col},{row}) is outside the matrix")))?;
        self.entries[slot] = match value {
            0 => None,
            v => Some(Sign::from_i8(v).ok_or_else(|| Error::invalid(alloc::format!("entry {v} is not 0, 1 or -1")))?),
        };
        Ok(())
    }

    /// `M_{k,ℓ}` as a sign, `None` for a zero entry. Panics outside the matrix.
    pub fn entry(&self, col: usize, row: usize) -> Option<Sign> {
        let slot = self.slot(col, row).expect("cell outside the matrix");
        self.entries[slot]
    }

    /// `M_{k,ℓ}` as `-1`, `0` or `1`.
    pub fn value(&self, col: usize, row: usize) -> i8 {
        self.entry(col, row).map_or(0, Sign::to_i8)
    }

    pub fn cell_entry(&self, cell: Cell) -> Option<Sign> {
        self.entry(cell.col, cell.row)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.slot(cell.col, cell.row).is_some()
    }

    /// Nonzero cells, column by column and bottom to top within a column.
    pub fn nonzero_cells(&self) -> impl Iterator<Item = (Cell, Sign)> + '_ {
        (1..=self.cols)
            .flat_map(move |k| (1..=self.rows).map(move |l| Cell::new(k, l)))
            .filter_map(move |c| self.cell_entry(c).map(|s| (c, s)))
    }

    /// Every `t × u` matrix, in a fixed order (`3^(t·u)` of them).
    pub fn all(cols: usize, rows: usize) -> impl Iterator<Item = GridMatrix> {
        let cells = cols * rows;
        let total = 3usize.pow(cells as u32);
        (0..total).map(move |mut code| {
            GridMatrix::from_fn(cols, rows, |_, _| {
                let digit = (code % 3) as i8 - 1;
                code /= 3;
                digit
            })
            .expect("shape is nonempty")
        })
    }
}

impl fmt::Display for GridMatrix {
    /// The visual text form: top row first, tokens `1`, `-1` and `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in (1..=self.rows).rev() {
            for k in 1..=self.cols {
                if k > 1 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.value(k, l))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Column signs `c_1..c_t` and row signs `r_1..r_u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignAssignment {
    cols: Vec<Sign>,
    rows: Vec<Sign>,
}

impl SignAssignment {
    pub fn new(cols: Vec<Sign>, rows: Vec<Sign>) -> Self {
        SignAssignment { cols, rows }
    }

    /// Builds an assignment from `±1` integers.
    pub fn from_i8(cols: &[i8], rows: &[i8]) -> Result<Self> {
        let conv = |vs: &[i8]| {
            vs.iter()
                .map(|&v| Sign::from_i8(v).ok_or_else(|| Error::invalid(alloc::format!("sign {v} is not 1 or -1"))))
                .collect::<Result<Vec<_>>>()
        };
        Ok(SignAssignment { cols: conv(cols)?, rows: conv(rows)? })
    }

    pub fn col_signs(&self) -> &[Sign] {
        &self.cols
    }

    pub fn row_signs(&self) -> &[Sign] {
        &self.rows
    }

    /// `c_k`, 1-based.
    pub fn col(&self, k: usize) -> Sign {
        self.cols[k - 1]
    }

    /// `r_ℓ`, 1-based.
    pub fn row(&self, l: usize) -> Sign {
        self.rows[l - 1]
    }

    /// Whether every entry of `matrix` is `0` or `c_k · r_ℓ`.
    pub fn verifies(&self, matrix: &GridMatrix) -> bool {
        self.cols.len() == matrix.cols()
            && self.rows.len() == matrix.rows()
            && matrix.nonzero_cells().all(|(c, s)| self.col(c.col) * self.row(c.row) == s)
    }

    pub(crate) fn check(&self, matrix: &GridMatrix) -> Result<()> {
        if self.verifies(matrix) {
            Ok(())
        } else {
            Err(Error::invalid("sign assignment does not factor the matrix"))
        }
    }
}
