//! Monotone grid classes of permutations.
//!
//! This crate holds the algorithmic side of the project and only needs `alloc`:
//!
//! * [`perm`]: permutations in one-line notation, rank flattening, pattern containment
//!   and windows `π(X × Y)`.
//! * [`matrix`] and [`graph`]: `0/±1` grid matrices, their row-column and cell graphs,
//!   cycle signs and partial-multiplication sign assignments.
//! * [`gridding`]: checking and searching for `M`-griddings, grid-class membership.
//! * [`codec`]: the map from words over the nonzero cells of a matrix to gridded
//!   permutations, and its inverse through row and column orders.
//! * [`enumerate`]: exhaustive small-scale generation of class members.
//!
//! Matrices are indexed the way the cells of a gridded permutation line up: cell
//! `(k, ℓ)` is the `k`th column from the left and the `ℓ`th row from the bottom. All
//! public indices (cells, positions, values, division points) are 1-based.
#![no_std]

extern crate alloc;

pub mod codec;
pub mod enumerate;
mod error;
pub mod graph;
pub mod gridding;
pub mod matrix;
pub mod perm;
mod unionfind;

pub use codec::{alphabet, decode, encode, row_col_orders, subword_leq, Letter, OrderRelation, RowColOrders, Word};
pub use enumerate::{counting_sequence, enumerate_class, enumerate_via_words, enumerate_gridded_via_words, Limits};
pub use error::{Error, Result};
pub use graph::{
    cell_graph, cycle_sign, find_negative_cycle, find_signs, has_negative_cycle, is_forest, row_column_graph, CellGraph,
    Graph, NegativeCycle, RowColumnGraph, SignedEdge, Vertex,
};
pub use gridding::{check_gridding, find_gridding, griddings, in_grid_class, GriddedPermutation, Gridding};
pub use matrix::{Cell, GridMatrix, Sign, SignAssignment};
pub use perm::{contains, pattern_of, window, Permutation};
