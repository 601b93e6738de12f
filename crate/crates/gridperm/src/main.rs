use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gridperm::json;
use gridperm::text::{
    format_sign_assignment, parse_gridded, parse_matrix, parse_permutation, parse_signs, parse_word,
};
use gridperm_core::{
    cell_graph, check_gridding, counting_sequence, decode, encode, enumerate_class, enumerate_via_words, find_gridding,
    find_signs, is_forest, row_column_graph, Error, GridMatrix, GriddedPermutation, Limits, Permutation, SignAssignment,
};

/// Monotone grid classes of permutations: membership, sign assignments, and the
/// encoding of words as gridded permutations.
///
/// Matrix files hold one line per row, top row first, with entries 0, 1, -1 (or . + -).
/// Use `-` to read the matrix from stdin.
#[derive(Debug, Parser)]
#[command(name = "gridperm", version)]
struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SignOverride {
    /// Column signs c_1..c_t, e.g. -1,1,1 (default: computed from the matrix).
    #[arg(long, value_name = "SIGNS", allow_hyphen_values = true, requires = "row_signs")]
    col_signs: Option<String>,
    /// Row signs r_1..r_u, e.g. -1,1.
    #[arg(long, value_name = "SIGNS", allow_hyphen_values = true, requires = "col_signs")]
    row_signs: Option<String>,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Longest length enumerated by filtering all permutations.
    #[arg(long, default_value_t = Limits::default().max_len)]
    max_len: usize,
    /// Most words visited by a word sweep.
    #[arg(long, default_value_t = Limits::default().max_words)]
    max_words: u128,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_len: self.max_len, max_words: self.max_words }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Column and row signs factoring the matrix, or a negative cycle.
    Signs { matrix: PathBuf },
    /// Find a gridding of a permutation.
    Member {
        matrix: PathBuf,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        perm: Vec<String>,
    },
    /// Check a given gridding: `grid-check M 136854792 cols=1,3,5,10 rows=1,6,10`.
    GridCheck {
        matrix: PathBuf,
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
    /// Encode a word such as `3,1 3,1 2,2` (use `()` for the empty word).
    Encode {
        matrix: PathBuf,
        #[arg(num_args = 0..)]
        word: Vec<String>,
        #[command(flatten)]
        signs: SignOverride,
    },
    /// Decode a gridded permutation into a word. Without `cols=`/`rows=` the first
    /// gridding found is used.
    Decode {
        matrix: PathBuf,
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[command(flatten)]
        signs: SignOverride,
    },
    /// List the class members of length N, one per line.
    Enum {
        matrix: PathBuf,
        n: usize,
        /// Generate members by encoding every word of length N instead.
        #[arg(long)]
        via_words: bool,
        #[command(flatten)]
        signs: SignOverride,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Number of class members of each length 1..=N_MAX.
    Count {
        matrix: PathBuf,
        n_max: usize,
        /// Also list the members of each length.
        #[arg(long)]
        members: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Edge list of the row-column graph (or, with --cell, the cell graph).
    Graph {
        matrix: PathBuf,
        #[arg(long)]
        cell: bool,
    },
}

/// Outcome of a command that ran to completion: a positive or a negative answer.
enum Answer {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("gridperm: error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_matrix(path: &Path) -> anyhow::Result<GridMatrix> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading matrix from stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_matrix(&text)?)
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) -> anyhow::Result<()> {
    if cli.json {
        println!("{}", serde_json::to_string(value)?);
    } else {
        println!("{}", text());
    }
    Ok(())
}

fn not_partial_multiplication(cli: &Cli, matrix: &GridMatrix) -> anyhow::Result<Answer> {
    let cycle = find_signs(matrix).expect_err("caller saw a failure");
    let names: Vec<String> = cycle.vertices().iter().map(ToString::to_string).collect();
    let record = json::NegativeCycle { partial_multiplication: false, negative_cycle: names.clone() };
    emit(cli, &record, || format!("NOT-PARTIAL-MULTIPLICATION cycle={}", names.join(",")))?;
    Ok(Answer::No)
}

/// Signs from the override flags, or computed; `None` when the matrix has no signs.
fn signs_for(matrix: &GridMatrix, flags: &SignOverride) -> anyhow::Result<Option<SignAssignment>> {
    match (&flags.col_signs, &flags.row_signs) {
        (Some(c), Some(r)) => {
            let s = SignAssignment::new(parse_signs(c)?, parse_signs(r)?);
            if !s.verifies(matrix) {
                bail!("signs col_signs={c} row_signs={r} do not factor the matrix");
            }
            Ok(Some(s))
        }
        _ => Ok(find_signs(matrix).ok()),
    }
}

fn run(cli: &Cli) -> anyhow::Result<Answer> {
    match &cli.command {
        Command::Signs { matrix } => {
            let m = read_matrix(matrix)?;
            match find_signs(&m) {
                Ok(s) => {
                    emit(cli, &json::Signs::from(&s), || format_sign_assignment(&s))?;
                    Ok(Answer::Yes)
                }
                Err(_) => not_partial_multiplication(cli, &m),
            }
        }

        Command::Member { matrix, perm } => {
            let m = read_matrix(matrix)?;
            let pi = parse_permutation(&perm.join(" "))?;
            let found = find_gridding(&pi, &m);
            let record = json::Membership {
                perm: pi.entries().to_vec(),
                member: found.is_some(),
                cols: found.as_ref().map(|g| g.col_divisions().to_vec()),
                rows: found.as_ref().map(|g| g.row_divisions().to_vec()),
            };
            match &found {
                Some(g) => emit(cli, &record, || g.to_string())?,
                None => emit(cli, &record, || "NOT-A-MEMBER".to_string())?,
            }
            Ok(if found.is_some() { Answer::Yes } else { Answer::No })
        }

        Command::GridCheck { matrix, input } => {
            let m = read_matrix(matrix)?;
            let (pi, g) = parse_gridded(&input.join(" "))?;
            let valid = check_gridding(&pi, &m, &g)?;
            let record = json::GridCheck {
                perm: pi.entries().to_vec(),
                cols: g.col_divisions().to_vec(),
                rows: g.row_divisions().to_vec(),
                valid,
            };
            emit(cli, &record, || if valid { "VALID" } else { "NOT-A-GRIDDING" }.to_string())?;
            Ok(if valid { Answer::Yes } else { Answer::No })
        }

        Command::Encode { matrix, word, signs } => {
            let m = read_matrix(matrix)?;
            let Some(s) = signs_for(&m, signs)? else {
                return not_partial_multiplication(cli, &m);
            };
            let w = parse_word(&word.join(" "))?;
            let gp = encode(&m, &s, &w)?;
            let record = json::Encoded { word: json::word(&w), gridded: (&gp).into(), signs: (&s).into() };
            emit(cli, &record, || gp.to_string())?;
            Ok(Answer::Yes)
        }

        Command::Decode { matrix, input, signs } => {
            let m = read_matrix(matrix)?;
            let Some(s) = signs_for(&m, signs)? else {
                return not_partial_multiplication(cli, &m);
            };
            let joined = input.join(" ");
            let (pi, g) = if joined.contains("cols=") || joined.contains("rows=") {
                parse_gridded(&joined)?
            } else {
                let pi = parse_permutation(&joined)?;
                match find_gridding(&pi, &m) {
                    Some(g) => (pi, g),
                    None => {
                        let record = json::Membership { perm: pi.entries().to_vec(), member: false, cols: None, rows: None };
                        emit(cli, &record, || "NOT-A-MEMBER".to_string())?;
                        return Ok(Answer::No);
                    }
                }
            };
            let gp = GriddedPermutation::new(pi, m, g)?;
            match decode(&gp, &s) {
                Ok(w) => {
                    let record = json::Encoded { word: json::word(&w), gridded: (&gp).into(), signs: (&s).into() };
                    emit(cli, &record, || w.to_string())?;
                    Ok(Answer::Yes)
                }
                Err(Error::InconsistentOrders) => {
                    #[derive(Serialize)]
                    struct Inconsistent {
                        #[serde(flatten)]
                        gridded: json::Gridded,
                        consistent: bool,
                    }
                    emit(cli, &Inconsistent { gridded: (&gp).into(), consistent: false }, || "INCONSISTENT-ORDERS".into())?;
                    Ok(Answer::No)
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Enum { matrix, n, via_words, signs, limits } => {
            let m = read_matrix(matrix)?;
            let members = if *via_words {
                let Some(s) = signs_for(&m, signs)? else {
                    return not_partial_multiplication(cli, &m);
                };
                enumerate_via_words(&m, &s, *n, &limits.limits())?
            } else {
                enumerate_class(&m, *n, &limits.limits())?
            };
            emit(cli, &json::Members::new(*n, &members), || {
                members.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            })?;
            Ok(Answer::Yes)
        }

        Command::Count { matrix, n_max, members, limits } => {
            let m = read_matrix(matrix)?;
            let limits = limits.limits();
            let counts = counting_sequence(&m, *n_max, &limits)?;
            let listed: Vec<(usize, Vec<Permutation>)> = if *members {
                (1..=*n_max)
                    .map(|n| Ok((n, enumerate_class(&m, n, &limits)?.into_iter().collect())))
                    .collect::<Result<_, Error>>()?
            } else {
                Vec::new()
            };
            let record = json::Counts {
                counts: counts.clone(),
                members: listed.iter().map(|(n, ps)| json::Members::new(*n, ps)).collect(),
            };
            emit(cli, &record, || {
                let mut out = counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                for (n, ps) in &listed {
                    let names: Vec<String> = ps.iter().map(ToString::to_string).collect();
                    out.push_str(&format!("\nn={n}: {}", names.join(" ")));
                }
                out
            })?;
            Ok(Answer::Yes)
        }

        Command::Graph { matrix, cell } => {
            let m = read_matrix(matrix)?;
            let record = if *cell {
                let g = cell_graph(&m);
                json::GraphOut {
                    kind: "cell",
                    vertices: g.cells().iter().map(ToString::to_string).collect(),
                    labels: Some(g.cells().iter().map(|&c| m.cell_entry(c).map_or(0, |s| s.to_i8())).collect()),
                    edges: g.edges().map(|(a, b)| json::Edge { from: a.to_string(), to: b.to_string(), sign: None }).collect(),
                    forest: is_forest(&g),
                }
            } else {
                let g = row_column_graph(&m);
                json::GraphOut {
                    kind: "row-column",
                    vertices: g.vertices().map(|v| v.to_string()).collect(),
                    labels: None,
                    edges: g
                        .edges()
                        .iter()
                        .map(|e| json::Edge { from: format!("x{}", e.col), to: format!("y{}", e.row), sign: Some(e.sign.to_i8()) })
                        .collect(),
                    forest: is_forest(&g),
                }
            };
            emit(cli, &record, || {
                let mut out = format!(
                    "# {} graph: {} vertices, {} edges, forest={}",
                    record.kind,
                    record.vertices.len(),
                    record.edges.len(),
                    record.forest
                );
                for e in &record.edges {
                    out.push_str(&format!("\n{} {}", e.from, e.to));
                    if let Some(s) = e.sign {
                        out.push_str(&format!(" {s:+}"));
                    }
                }
                out
            })?;
            Ok(Answer::Yes)
        }
    }
}
