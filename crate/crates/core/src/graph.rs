//! Row-column and cell graphs of a grid matrix, cycle signs, and sign propagation.
//!
//! The row-column graph of a `t × u` matrix is bipartite on column vertices
//! `x_1..x_t` and row vertices `y_1..y_u`, with a signed edge `x_k ~ y_ℓ` for every
//! nonzero entry `M_{k,ℓ}`. A matrix factors as `M_{k,ℓ} ∈ {0, c_k · r_ℓ}` exactly when
//! no cycle of this graph has a negative product of edge signs; [`find_signs`] either
//! produces such a factorization or returns a negative cycle as a certificate.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Cell, GridMatrix, Sign, SignAssignment};
use crate::unionfind::UnionFind;

/// A vertex of the row-column graph. Column vertices order before row vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// `x_k`
    Col(usize),
    /// `y_ℓ`
    Row(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Col(k) => write!(f, "x{k}"),
            Vertex::Row(l) => write!(f, "y{l}"),
        }
    }
}

/// Anything [`is_forest`] can test: vertices `0..vertex_count()` and undirected edges.
pub trait Graph {
    fn vertex_count(&self) -> usize;
    fn edge_pairs(&self) -> Vec<(usize, usize)>;

    fn is_forest(&self) -> bool {
        is_forest(self)
    }
}

/// Whether an undirected graph has no cycle.
pub fn is_forest<G: Graph + ?Sized>(graph: &G) -> bool {
    let mut uf = UnionFind::new(graph.vertex_count());
    graph.edge_pairs().into_iter().all(|(a, b)| uf.union(a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedEdge {
    pub col: usize,
    pub row: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowColumnGraph {
    cols: usize,
    rows: usize,
    edges: Vec<SignedEdge>,
}

impl RowColumnGraph {
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    /// `x_1..x_t` followed by `y_1..y_u`.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (1..=self.cols).map(Vertex::Col).chain((1..=self.rows).map(Vertex::Row))
    }

    /// Position of `v` in [`vertices`](Self::vertices).
    pub fn index_of(&self, v: Vertex) -> usize {
        match v {
            Vertex::Col(k) => k - 1,
            Vertex::Row(l) => self.cols + l - 1,
        }
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        if index < self.cols {
            Vertex::Col(index + 1)
        } else {
            Vertex::Row(index - self.cols + 1)
        }
    }

    /// Sign of the edge between `a` and `b`, if any.
    pub fn edge_sign(&self, a: Vertex, b: Vertex) -> Option<Sign> {
        let (col, row) = match (a, b) {
            (Vertex::Col(k), Vertex::Row(l)) | (Vertex::Row(l), Vertex::Col(k)) => (k, l),
            _ => return None,
        };
        self.edges.iter().find(|e| e.col == col && e.row == row).map(|e| e.sign)
    }

    fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = alloc::vec![Vec::new(); self.cols + self.rows];
        for e in &self.edges {
            let (a, b) = (e.col - 1, self.cols + e.row - 1);
            adj[a].push((b, e.sign));
            adj[b].push((a, e.sign));
        }
        adj
    }
}

impl Graph for RowColumnGraph {
    fn vertex_count(&self) -> usize {
        self.cols + self.rows
    }

    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.col - 1, self.cols + e.row - 1)).collect()
    }
}

pub fn row_column_graph(matrix: &GridMatrix) -> RowColumnGraph {
    RowColumnGraph {
        cols: matrix.cols(),
        rows: matrix.rows(),
        edges: matrix.nonzero_cells().map(|(c, sign)| SignedEdge { col: c.col, row: c.row, sign }).collect(),
    }
}

/// Graph on the nonzero cells; two cells are adjacent when they share a row or a column
/// and no nonzero cell lies between them there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellGraph {
    cells: Vec<Cell>,
    labels: Vec<Sign>,
    edges: Vec<(usize, usize)>,
}

impl CellGraph {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn label(&self, cell: Cell) -> Option<Sign> {
        self.position(cell).map(|i| self.labels[i])
    }

    fn position(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.edges.iter().map(|&(a, b)| (self.cells[a], self.cells[b]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn are_adjacent(&self, a: Cell, b: Cell) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }
}

impl Graph for CellGraph {
    fn vertex_count(&self) -> usize {
        self.cells.len()
    }

    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.clone()
    }
}

pub fn cell_graph(matrix: &GridMatrix) -> CellGraph {
    let (cells, labels): (Vec<Cell>, Vec<Sign>) = matrix.nonzero_cells().unzip();
    let position = |c: Cell| cells.binary_search(&c).expect("nonzero cell");
    let mut edges = Vec::new();
    for k in 1..=matrix.cols() {
        let column: Vec<usize> = (1..=matrix.rows()).filter(|&l| matrix.entry(k, l).is_some()).collect();
        for w in column.windows(2) {
            edges.push((position(Cell::new(k, w[0])), position(Cell::new(k, w[1]))));
        }
    }
    for l in 1..=matrix.rows() {
        let row: Vec<usize> = (1..=matrix.cols()).filter(|&k| matrix.entry(k, l).is_some()).collect();
        for w in row.windows(2) {
            edges.push((position(Cell::new(w[0], l)), position(Cell::new(w[1], l))));
        }
    }
    for e in &mut edges {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    CellGraph { cells, labels, edges }
}

/// Product of the edge signs around a cycle of the row-column graph.
///
/// The cycle is given as its alternating vertex sequence `x_{k1} y_{ℓ1} … x_{km} y_{ℓm}`
/// (starting anywhere); repeating the first vertex at the end is optional.
pub fn cycle_sign(matrix: &GridMatrix, cycle: &[Vertex]) -> Result<Sign> {
    let cycle = match cycle {
        [first, rest @ .., last] if cycle.len() > 1 && first == last => &cycle[..rest.len() + 1],
        _ => cycle,
    };
    if cycle.len() < 4 || cycle.len() % 2 != 0 {
        return Err(Error::invalid("a cycle needs an even number (at least 4) of vertices"));
    }
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("cycle repeats a vertex"));
    }
    let mut product = Sign::Plus;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let (k, l) = match (a, b) {
            (Vertex::Col(k), Vertex::Row(l)) | (Vertex::Row(l), Vertex::Col(k)) => (k, l),
            _ => return Err(Error::invalid("cycle does not alternate between columns and rows")),
        };
        if !matrix.contains_cell(Cell::new(k, l)) {
            return Err(Error::invalid(alloc::format!("vertex pair {a} {b} is outside the matrix")));
        }
        product = product * matrix.entry(k, l).ok_or_else(|| Error::invalid(alloc::format!("{a} and {b} are not adjacent")))?;
    }
    Ok(product)
}

/// A cycle of the row-column graph whose edge signs multiply to `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCycle {
    vertices: Vec<Vertex>,
}

impl NegativeCycle {
    /// The alternating vertex sequence, starting at its least vertex.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }
}

impl fmt::Display for NegativeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl core::error::Error for NegativeCycle {}

/// Column and row signs with `M_{k,ℓ} ∈ {0, c_k · r_ℓ}`, or a negative cycle showing that
/// none exist.
///
/// Each connected component of the row-column graph is anchored at its least vertex
/// (columns before rows, then by index), which gets sign `+1`; signs then propagate
/// along edges breadth-first. Vertices of empty rows and columns get `+1`.
pub fn find_signs(matrix: &GridMatrix) -> Result<SignAssignment, NegativeCycle> {
    let graph = row_column_graph(matrix);
    let adj = graph.adjacency();
    let n = graph.vertex_count();
    let mut sign: Vec<Option<Sign>> = alloc::vec![None; n];
    let mut parent: Vec<Option<usize>> = alloc::vec![None; n];
    let mut depth = alloc::vec![0usize; n];

    for root in 0..n {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(Sign::Plus);
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            let sa = sign[a].expect("queued vertices are signed");
            for &(b, edge) in &adj[a] {
                match sign[b] {
                    None => {
                        sign[b] = Some(sa * edge);
                        parent[b] = Some(a);
                        depth[b] = depth[a] + 1;
                        queue.push_back(b);
                    }
                    Some(sb) if sb != sa * edge => {
                        return Err(conflict_cycle(&graph, &parent, &depth, a, b));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let signs: Vec<Sign> = sign.into_iter().map(|s| s.expect("every vertex visited")).collect();
    let (cols, rows) = signs.split_at(graph.cols());
    Ok(SignAssignment::new(cols.to_vec(), rows.to_vec()))
}

/// Closes the non-tree edge `a–b` with the two tree paths up to their common ancestor.
fn conflict_cycle(graph: &RowColumnGraph, parent: &[Option<usize>], depth: &[usize], a: usize, b: usize) -> NegativeCycle {
    let (mut up_a, mut up_b) = (alloc::vec![a], alloc::vec![b]);
    let (mut x, mut y) = (a, b);
    while x != y {
        if depth[x] >= depth[y] {
            x = parent[x].expect("non-root has a parent");
            up_a.push(x);
        } else {
            y = parent[y].expect("non-root has a parent");
            up_b.push(y);
        }
    }
    // up_a ends at the common ancestor; walk back down to b without repeating it.
    up_b.pop();
    up_a.extend(up_b.into_iter().rev());
    let mut vertices: Vec<Vertex> = up_a.into_iter().map(|i| graph.vertex(i)).collect();
    let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap_or(0);
    vertices.rotate_left(start);
    NegativeCycle { vertices }
}

pub fn has_negative_cycle(matrix: &GridMatrix) -> bool {
    find_signs(matrix).is_err()
}

pub fn find_negative_cycle(matrix: &GridMatrix) -> Option<NegativeCycle> {
    find_signs(matrix).err()
}
