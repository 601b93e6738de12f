//! Brute-force oracles shared by the integration tests. None of these call into the
//! code paths they check.
#![allow(dead_code)]

use gridperm_core::{Cell, GridMatrix, GriddedPermutation, Permutation, SignAssignment, Vertex, Word};

pub fn p(s: &str) -> Permutation {
    Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
}

pub fn word(pairs: &[(usize, usize)]) -> Word {
    pairs.iter().map(|&(k, l)| Cell::new(k, l)).collect()
}

/// The matrix of the running example: `(. 1 1 / 1 . -1)`.
pub fn example_matrix() -> GridMatrix {
    GridMatrix::from_visual_rows(&[vec![0, 1, 1], vec![1, 0, -1]]).unwrap()
}

/// r1 = -1, r2 = 1, c1 = -1, c2 = c3 = 1.
pub fn example_signs() -> SignAssignment {
    SignAssignment::from_i8(&[-1, 1, 1], &[-1, 1]).unwrap()
}

pub fn example_word() -> Word {
    word(&[(3, 1), (3, 1), (2, 2), (3, 2), (1, 1), (2, 2), (3, 2), (3, 1), (1, 1)])
}

pub fn matrix(rows_top_first: &[&[i8]]) -> GridMatrix {
    GridMatrix::from_visual_rows(&rows_top_first.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn same_order(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

/// Lexicographically least occurrence (1-based indices) by scanning every subset.
pub fn brute_find_pattern(pi: &Permutation, sigma: &Permutation) -> Option<Vec<usize>> {
    if sigma.len() > pi.len() {
        return None;
    }
    subsets(pi.len(), sigma.len()).into_iter().find_map(|idx| {
        let vals: Vec<usize> = idx.iter().map(|&i| pi.entries()[i]).collect();
        same_order(&vals, sigma.entries()).then(|| idx.iter().map(|i| i + 1).collect())
    })
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::new(cur.clone()).unwrap());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// Whether some choice of `2^(t+u)` column and row signs factors the matrix.
pub fn brute_factorizable(m: &GridMatrix) -> bool {
    let (t, u) = (m.cols(), m.rows());
    (0u32..1 << (t + u)).any(|mask| {
        let sign = |bit: usize| if mask >> bit & 1 == 1 { -1i8 } else { 1 };
        (1..=t).all(|k| (1..=u).all(|l| m.value(k, l) == 0 || m.value(k, l) == sign(k - 1) * sign(t + l - 1)))
    })
}

/// Every simple cycle of the row-column graph, each listed once as an alternating
/// vertex sequence starting at its least vertex.
pub fn simple_cycles(m: &GridMatrix) -> Vec<Vec<Vertex>> {
    let (t, u) = (m.cols(), m.rows());
    let vertex = |i: usize| if i < t { Vertex::Col(i + 1) } else { Vertex::Row(i - t + 1) };
    let adjacent = |a: usize, b: usize| match (vertex(a), vertex(b)) {
        (Vertex::Col(k), Vertex::Row(l)) | (Vertex::Row(l), Vertex::Col(k)) => m.value(k, l) != 0,
        _ => false,
    };
    let n = t + u;
    let mut out = Vec::new();
    fn dfs(
        start: usize,
        path: &mut Vec<usize>,
        n: usize,
        adjacent: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for next in start + 1..n {
            if adjacent(last, next) && !path.contains(&next) {
                path.push(next);
                dfs(start, path, n, adjacent, out);
                path.pop();
            }
        }
        if path.len() >= 4 && adjacent(last, start) {
            // each cycle is found once per direction; keep the one whose second vertex is smaller
            if path[1] < path[path.len() - 1] {
                out.push(path.clone());
            }
        }
    }
    let mut raw = Vec::new();
    for s in 0..n {
        dfs(s, &mut vec![s], n, &adjacent, &mut raw);
    }
    for c in raw {
        out.push(c.into_iter().map(vertex).collect());
    }
    out
}

/// Product of entries around an alternating cycle, computed directly.
pub fn brute_cycle_sign(m: &GridMatrix, cycle: &[Vertex]) -> i8 {
    (0..cycle.len())
        .map(|i| match (cycle[i], cycle[(i + 1) % cycle.len()]) {
            (Vertex::Col(k), Vertex::Row(l)) | (Vertex::Row(l), Vertex::Col(k)) => m.value(k, l),
            _ => panic!("not alternating"),
        })
        .product()
}

pub fn has_negative_simple_cycle(m: &GridMatrix) -> bool {
    simple_cycles(m).iter().any(|c| brute_cycle_sign(m, c) == -1)
}

/// Forest test by counting connected components with a depth-first search:
/// a graph is a forest iff `|E| = |V| - components`.
pub fn dfs_is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    edges.len() + components == n
}

/// Cell-graph adjacency straight from the definition.
pub fn brute_cell_adjacent(m: &GridMatrix, a: Cell, b: Cell) -> bool {
    if a == b || m.cell_entry(a).is_none() || m.cell_entry(b).is_none() {
        return false;
    }
    if a.col == b.col {
        let (lo, hi) = (a.row.min(b.row), a.row.max(b.row));
        (lo + 1..hi).all(|l| m.value(a.col, l) == 0)
    } else if a.row == b.row {
        let (lo, hi) = (a.col.min(b.col), a.col.max(b.col));
        (lo + 1..hi).all(|k| m.value(k, a.row) == 0)
    } else {
        false
    }
}

/// Builds a gridded permutation by inserting one entry per letter: a letter of column
/// `k` goes to the right end of that column when `c_k = 1`, to its left end otherwise;
/// a letter of row `ℓ` goes above the row when `r_ℓ = 1`, below it otherwise.
pub fn encode_by_insertion(m: &GridMatrix, s: &SignAssignment, w: &Word) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let letters = w.letters();
    // horizontal and vertical orders of entry ids (ids are word positions)
    let mut horiz: Vec<usize> = Vec::new();
    let mut vert: Vec<usize> = Vec::new();
    for (j, c) in letters.iter().enumerate() {
        let col_end = horiz.iter().filter(|&&e| letters[e].col <= c.col).count();
        let col_start = horiz.iter().filter(|&&e| letters[e].col < c.col).count();
        horiz.insert(if s.col(c.col).is_plus() { col_end } else { col_start }, j);
        let row_end = vert.iter().filter(|&&e| letters[e].row <= c.row).count();
        let row_start = vert.iter().filter(|&&e| letters[e].row < c.row).count();
        vert.insert(if s.row(c.row).is_plus() { row_end } else { row_start }, j);
    }
    let mut value = vec![0; letters.len()];
    for (rank, &e) in vert.iter().enumerate() {
        value[e] = rank + 1;
    }
    let perm: Vec<usize> = horiz.iter().map(|&e| value[e]).collect();
    let mut cols = vec![1];
    for k in 1..=m.cols() {
        cols.push(cols[k - 1] + letters.iter().filter(|c| c.col == k).count());
    }
    let mut rows = vec![1];
    for l in 1..=m.rows() {
        rows.push(rows[l - 1] + letters.iter().filter(|c| c.row == l).count());
    }
    (perm, cols, rows)
}

/// Deleting entry `index` from a gridded permutation, keeping every other entry in its
/// cell; returns the flattened permutation and each remaining entry's cell.
pub fn delete_gridded(gp: &GriddedPermutation, index: usize) -> (Permutation, Vec<Cell>) {
    let cells: Vec<Cell> = (1..=gp.len()).filter(|&i| i != index).map(|i| gp.cell_of(i)).collect();
    (gp.perm().delete(index), cells)
}

/// Membership in the one-row class `(1 1)`: some split point leaves an increasing
/// prefix and an increasing suffix.
pub fn brute_two_increasing_runs(pi: &Permutation) -> bool {
    let e = pi.entries();
    (0..=e.len()).any(|s| e[..s].windows(2).all(|w| w[0] < w[1]) && e[s..].windows(2).all(|w| w[0] < w[1]))
}
