//! Puzzle and grid text formats.
//!
//! Text puzzles are plain UTF-8. `#` starts a comment line and blank lines
//! are skipped. The significant lines are:
//!
//! ```text
//! line 1:      n
//! line 2:      n integers, top clues, 0 = absent
//! line 3:      n integers, bottom clues
//! line 4:      n integers, left clues
//! line 5:      n integers, right clues
//! lines 6..:   optional, n rows of n integers, given cells, 0 = empty
//! ```
//!
//! The structured form is a JSON object with the same conventions:
//! `{"n": .., "top": [..], "bottom": [..], "left": [..], "right": [..],
//! "grid": [[..]]}` with `grid` optional.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Clues, Grid, Puzzle, PuzzleError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: value {value} is outside 0..={max}")]
    Range { line: usize, value: usize, max: usize },
    #[error("input ended early: {missing} more line(s) expected")]
    Truncated { missing: usize },
    #[error("line {line}: unexpected extra content after the puzzle")]
    Trailing { line: usize },
    #[error(transparent)]
    Invalid(#[from] PuzzleError),
    #[error("invalid structured puzzle: {0}")]
    Json(String),
}

/// A significant (non-blank, non-comment) line with its 1-based position.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| {
            let t = line.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect()
}

/// Parses one line of whitespace-separated integers in `0..=max`.
/// Columns in diagnostics are 1-based byte offsets.
fn parse_values(line_no: usize, line: &str, max: usize) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    let bytes = line.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let token = &line[start..i];
        let value: usize = token.parse().map_err(|_| ParseError::Syntax {
            line: line_no,
            col: start + 1,
            msg: format!("expected an integer, found {token:?}"),
        })?;
        if value > max {
            return Err(ParseError::Range {
                line: line_no,
                value,
                max,
            });
        }
        out.push(value);
    }
    Ok(out)
}

fn expect_width(
    line_no: usize,
    values: &[usize],
    n: usize,
    what: &str,
) -> Result<(), ParseError> {
    if values.len() != n {
        return Err(ParseError::Syntax {
            line: line_no,
            col: 1,
            msg: format!("{what} needs {n} values, found {}", values.len()),
        });
    }
    Ok(())
}

fn to_optional(values: Vec<usize>) -> Vec<Option<usize>> {
    values
        .into_iter()
        .map(|v| if v == 0 { None } else { Some(v) })
        .collect()
}

/// Parses the text puzzle format.
pub fn parse_puzzle(text: &str) -> Result<Puzzle, ParseError> {
    let lines = significant_lines(text);
    let mut iter = lines.iter().copied();

    let (line_no, first) = iter.next().ok_or(ParseError::Truncated { missing: 5 })?;
    let header = parse_values(line_no, first, usize::MAX)?;
    if header.len() != 1 {
        return Err(ParseError::Syntax {
            line: line_no,
            col: 1,
            msg: "the first line must hold the grid size alone".into(),
        });
    }
    let n = header[0];
    if n == 0 {
        return Err(ParseError::Invalid(PuzzleError::EmptyGrid));
    }

    let mut sides = Vec::with_capacity(4);
    for what in ["top clues", "bottom clues", "left clues", "right clues"] {
        let (line_no, line) = iter.next().ok_or(ParseError::Truncated {
            missing: 4 - sides.len(),
        })?;
        let values = parse_values(line_no, line, n)?;
        expect_width(line_no, &values, n, what)?;
        sides.push(to_optional(values));
    }
    let right = sides.pop().unwrap();
    let left = sides.pop().unwrap();
    let bottom = sides.pop().unwrap();
    let top = sides.pop().unwrap();
    let clues = Clues {
        top,
        bottom,
        left,
        right,
    };

    let rest: Vec<(usize, &str)> = iter.collect();
    let givens = if rest.is_empty() {
        vec![vec![None; n]; n]
    } else {
        if rest.len() < n {
            return Err(ParseError::Truncated {
                missing: n - rest.len(),
            });
        }
        if rest.len() > n {
            return Err(ParseError::Trailing { line: rest[n].0 });
        }
        let mut rows = Vec::with_capacity(n);
        for (line_no, line) in rest {
            let values = parse_values(line_no, line, n)?;
            expect_width(line_no, &values, n, "a given-cells row")?;
            rows.push(to_optional(values));
        }
        rows
    };

    Ok(Puzzle::new(n, clues, givens)?)
}

/// Wire shape shared by the JSON reader and writer; 0 encodes "absent".
#[derive(Debug, Serialize, Deserialize)]
struct PuzzleFile {
    n: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grid: Option<Vec<Vec<usize>>>,
}

impl Puzzle {
    /// Reads the structured JSON form.
    pub fn from_json(text: &str) -> Result<Puzzle, ParseError> {
        let file: PuzzleFile =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        if file.n == 0 {
            return Err(ParseError::Invalid(PuzzleError::EmptyGrid));
        }
        let clues = Clues {
            top: to_optional(file.top),
            bottom: to_optional(file.bottom),
            left: to_optional(file.left),
            right: to_optional(file.right),
        };
        let givens = match file.grid {
            None => vec![vec![None; file.n]; file.n],
            Some(grid) => {
                if grid.len() != file.n || grid.iter().any(|r| r.len() != file.n) {
                    return Err(ParseError::Invalid(PuzzleError::GivensShape { n: file.n }));
                }
                grid.into_iter().map(to_optional).collect()
            }
        };
        Ok(Puzzle::new(file.n, clues, givens)?)
    }

    /// Emits the structured JSON form.
    pub fn to_json(&self) -> String {
        let flat = |side: &[Option<usize>]| side.iter().map(|v| v.unwrap_or(0)).collect();
        let file = PuzzleFile {
            n: self.n(),
            top: flat(&self.clues().top),
            bottom: flat(&self.clues().bottom),
            left: flat(&self.clues().left),
            right: flat(&self.clues().right),
            grid: if self.has_givens() {
                Some(
                    self.givens()
                        .iter()
                        .map(|row| row.iter().map(|v| v.unwrap_or(0)).collect())
                        .collect(),
                )
            } else {
                None
            },
        };
        serde_json::to_string_pretty(&file).expect("plain integers always serialize")
    }

    /// Emits the text form; the given-cells block appears only when some
    /// cell is pre-filled.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let render = |side: &[Option<usize>]| {
            side.iter()
                .map(|v| v.unwrap_or(0).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&self.n().to_string());
        out.push('\n');
        for side in [
            &self.clues().top,
            &self.clues().bottom,
            &self.clues().left,
            &self.clues().right,
        ] {
            out.push_str(&render(side));
            out.push('\n');
        }
        if self.has_givens() {
            for row in self.givens() {
                out.push_str(&render(row));
                out.push('\n');
            }
        }
        out
    }

    /// Reads either supported format: JSON when the first significant byte
    /// is `{`, the line format otherwise.
    pub fn from_str_any(text: &str) -> Result<Puzzle, ParseError> {
        if text.trim_start().starts_with('{') {
            Puzzle::from_json(text)
        } else {
            parse_puzzle(text)
        }
    }
}

impl Grid {
    /// Parses a solution grid: `n` lines of `n` heights. The size is taken
    /// from the first line.
    pub fn parse(text: &str) -> Result<Grid, ParseError> {
        let lines = significant_lines(text);
        if lines.is_empty() {
            return Err(ParseError::Truncated { missing: 1 });
        }
        let (first_no, first) = lines[0];
        let first_row = parse_values(first_no, first, usize::MAX)?;
        let n = first_row.len();
        if lines.len() < n {
            return Err(ParseError::Truncated {
                missing: n - lines.len(),
            });
        }
        if lines.len() > n {
            return Err(ParseError::Trailing {
                line: lines[n].0,
            });
        }
        let mut cells = vec![first_row];
        for &(line_no, line) in &lines[1..] {
            let row = parse_values(line_no, line, usize::MAX)?;
            expect_width(line_no, &row, n, "a grid row")?;
            cells.push(row);
        }
        Ok(Grid::new(cells)?)
    }
}
