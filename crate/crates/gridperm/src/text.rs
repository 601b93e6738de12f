//! Plain-text formats for permutations, matrices, griddings, words and signs.
//!
//! Every format here parses what the matching `Display` impl in `gridperm_core`
//! prints, so command output can be fed back in as input.

use gridperm_core::{Cell, GridMatrix, Gridding, Permutation, Sign, SignAssignment, Word};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("bad permutation {0:?}: {1}")]
    Permutation(String, String),
    #[error("bad matrix: {0}")]
    Matrix(String),
    #[error("bad gridding {0:?}: {1}")]
    Gridding(String, String),
    #[error("bad word {0:?}: {1}")]
    Word(String, String),
    #[error("bad sign list {0:?}")]
    Signs(String),
}

const EMPTY: &str = "()";

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty())
}

/// One-line notation: integers separated by commas and/or whitespace
/// (`1 3 6 8 5 4 7 9 2`), or a single run of digits when `n ≤ 9` (`136854792`).
/// `()` or an empty string is the empty permutation.
pub fn parse_permutation(s: &str) -> Result<Permutation, ParseError> {
    let s = s.trim();
    let err = |why: String| ParseError::Permutation(s.to_string(), why);
    if s.is_empty() || s == EMPTY {
        return Ok(Permutation::empty());
    }
    let entries: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        split_list(s).map(|t| t.parse::<usize>().map_err(|e| err(format!("{t:?}: {e}")))).collect::<Result<_, _>>()?
    } else {
        if !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected digits".into()));
        }
        if s.len() > 9 {
            return Err(err("the single-token digit form only covers n ≤ 9; separate entries with commas".into()));
        }
        s.bytes().map(|b| (b - b'0') as usize).collect()
    };
    Permutation::new(entries).map_err(|e| err(e.to_string()))
}

fn parse_entry(token: &str) -> Option<i8> {
    match token {
        "0" | "." => Some(0),
        "1" | "+" | "+1" => Some(1),
        "-1" | "-" => Some(-1),
        _ => None,
    }
}

/// The visual matrix format: one line per row, top row first, each holding `t`
/// tokens from `0 1 -1` (or `. + -`). Blank lines and `#` comments are ignored.
pub fn parse_matrix(s: &str) -> Result<GridMatrix, ParseError> {
    let mut rows = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| parse_entry(t).ok_or_else(|| ParseError::Matrix(format!("line {}: unknown entry {t:?}", lineno + 1))))
            .collect::<Result<Vec<i8>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Matrix("no rows".into()));
    }
    GridMatrix::from_visual_rows(&rows).map_err(|e| ParseError::Matrix(e.to_string()))
}

fn parse_usize_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// `cols=1,3,5,10 rows=1,6,10` (the two fields in either order).
pub fn parse_gridding(s: &str) -> Result<Gridding, ParseError> {
    let err = |why: &str| ParseError::Gridding(s.to_string(), why.to_string());
    let (mut cols, mut rows) = (None, None);
    for token in s.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| err("expected key=value fields"))?;
        let list = parse_usize_list(value).ok_or_else(|| err("divisions must be comma-separated integers"))?;
        match key {
            "cols" => cols = Some(list),
            "rows" => rows = Some(list),
            _ => return Err(err("fields are cols= and rows=")),
        }
    }
    let (cols, rows) = (cols.ok_or_else(|| err("missing cols="))?, rows.ok_or_else(|| err("missing rows="))?);
    Gridding::new(cols, rows).map_err(|e| err(&e.to_string()))
}

/// A permutation followed by its gridding: `136854792 cols=1,3,5,10 rows=1,6,10`.
pub fn parse_gridded(s: &str) -> Result<(Permutation, Gridding), ParseError> {
    let (grid, perm): (Vec<&str>, Vec<&str>) =
        s.split_whitespace().partition(|t| t.starts_with("cols=") || t.starts_with("rows="));
    Ok((parse_permutation(&perm.join(" "))?, parse_gridding(&grid.join(" "))?))
}

/// Whitespace-separated `k,ℓ` letters, column first: `3,1 3,1 2,2`. Parentheses
/// around letters are optional, and `()` is the empty word.
pub fn parse_word(s: &str) -> Result<Word, ParseError> {
    let s = s.trim();
    if s.is_empty() || s == EMPTY {
        return Ok(Word::empty());
    }
    let err = |why: String| ParseError::Word(s.to_string(), why);
    let spaced = s.replace(")(", ") (");
    spaced
        .split_whitespace()
        .map(|t| {
            let inner = t.trim_start_matches('(').trim_end_matches(')');
            let (k, l) = inner.split_once(',').ok_or_else(|| err(format!("letter {t:?} is not k,l")))?;
            let k: usize = k.trim().parse().map_err(|_| err(format!("letter {t:?} has a bad column")))?;
            let l: usize = l.trim().parse().map_err(|_| err(format!("letter {t:?} has a bad row")))?;
            Ok(Cell::new(k, l))
        })
        .collect()
}

/// Signs separated by commas: `-1,1,1` (also `-,+,+`).
pub fn parse_signs(s: &str) -> Result<Vec<Sign>, ParseError> {
    let signs: Option<Vec<Sign>> = split_list(s).map(|t| parse_entry(t).and_then(Sign::from_i8)).collect();
    match signs {
        Some(v) if !v.is_empty() => Ok(v),
        _ => Err(ParseError::Signs(s.to_string())),
    }
}

pub fn format_signs(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.to_i8().to_string()).collect::<Vec<_>>().join(",")
}

/// `col_signs=-1,1,1 row_signs=-1,1`.
pub fn format_sign_assignment(s: &SignAssignment) -> String {
    format!("col_signs={} row_signs={}", format_signs(s.col_signs()), format_signs(s.row_signs()))
}

pub fn parse_sign_assignment(s: &str) -> Result<SignAssignment, ParseError> {
    let err = || ParseError::Signs(s.to_string());
    let (mut cols, mut rows) = (None, None);
    for token in s.split_whitespace() {
        match token.split_once('=') {
            Some(("col_signs", v)) => cols = Some(parse_signs(v)?),
            Some(("row_signs", v)) => rows = Some(parse_signs(v)?),
            _ => return Err(err()),
        }
    }
    Ok(SignAssignment::new(cols.ok_or_else(err)?, rows.ok_or_else(err)?))
}
