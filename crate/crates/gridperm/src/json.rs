//! Structured output records for `--json`.

use gridperm_core::{GriddedPermutation, Permutation, SignAssignment, Word};
use serde::Serialize;

fn signs(s: &[gridperm_core::Sign]) -> Vec<i8> {
    s.iter().map(|x| x.to_i8()).collect()
}

#[derive(Debug, Serialize)]
pub struct Signs {
    pub col_signs: Vec<i8>,
    pub row_signs: Vec<i8>,
}

impl From<&SignAssignment> for Signs {
    fn from(s: &SignAssignment) -> Self {
        Signs { col_signs: signs(s.col_signs()), row_signs: signs(s.row_signs()) }
    }
}

#[derive(Debug, Serialize)]
pub struct NegativeCycle {
    pub partial_multiplication: bool,
    pub negative_cycle: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Gridded {
    pub perm: Vec<usize>,
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

impl From<&GriddedPermutation> for Gridded {
    fn from(gp: &GriddedPermutation) -> Self {
        Gridded {
            perm: gp.perm().entries().to_vec(),
            cols: gp.gridding().col_divisions().to_vec(),
            rows: gp.gridding().row_divisions().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Membership {
    pub perm: Vec<usize>,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cols: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct GridCheck {
    pub perm: Vec<usize>,
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
    pub valid: bool,
}

pub fn word(w: &Word) -> Vec<[usize; 2]> {
    w.letters().iter().map(|c| [c.col, c.row]).collect()
}

#[derive(Debug, Serialize)]
pub struct Encoded {
    pub word: Vec<[usize; 2]>,
    #[serde(flatten)]
    pub gridded: Gridded,
    #[serde(flatten)]
    pub signs: Signs,
}

#[derive(Debug, Serialize)]
pub struct Members {
    pub n: usize,
    pub members: Vec<Vec<usize>>,
}

impl Members {
    pub fn new<'a>(n: usize, perms: impl IntoIterator<Item = &'a Permutation>) -> Self {
        Members { n, members: perms.into_iter().map(|p| p.entries().to_vec()).collect() }
    }
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub counts: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<Members>,
}

#[derive(Debug, Serialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

#[derive(Debug, Serialize)]
pub struct GraphOut {
    pub kind: &'static str,
    pub vertices: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<i8>>,
    pub edges: Vec<Edge>,
    pub forest: bool,
}
