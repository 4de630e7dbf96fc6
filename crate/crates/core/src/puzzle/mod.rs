//! Skyscraper puzzle model: clues around a grid, optional given cells, a
//! solution verifier, and an exact solver built on line-candidate
//! propagation.

use std::fmt;

use thiserror::Error;

use crate::oracle::line_visibility;

mod parse;
mod solve;

pub use parse::{parse_puzzle, ParseError};
pub(crate) use solve::line_candidates;
pub use solve::{
    count_solutions, count_solutions_with_budget, solve, solve_with_options, SolveError,
    SolveResult, SolveStatus, DEFAULT_NODE_BUDGET, MAX_SOLVE_N,
};

/// Which border a clue sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
            Side::Left => "left",
            Side::Right => "right",
        };
        f.write_str(s)
    }
}

/// Clue values on the four borders. Top and bottom are indexed by column
/// left to right; left and right by row top to bottom. `None` means the
/// border carries no clue there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clues {
    pub top: Vec<Option<usize>>,
    pub bottom: Vec<Option<usize>>,
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Clues {
    /// All four borders unconstrained.
    pub fn empty(n: usize) -> Self {
        Clues {
            top: vec![None; n],
            bottom: vec![None; n],
            left: vec![None; n],
            right: vec![None; n],
        }
    }

    pub fn side(&self, side: Side) -> &[Option<usize>] {
        match side {
            Side::Top => &self.top,
            Side::Bottom => &self.bottom,
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// Number of present clue values.
    pub fn present(&self) -> usize {
        [&self.top, &self.bottom, &self.left, &self.right]
            .iter()
            .map(|v| v.iter().flatten().count())
            .sum()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PuzzleError {
    #[error("grid size must be at least 1")]
    EmptyGrid,
    #[error("{side} clue list has {got} entries, expected {expected}")]
    ClueCount {
        side: Side,
        expected: usize,
        got: usize,
    },
    #[error("{side} clue {index} is {value}, outside 1..={n}")]
    ClueValue {
        side: Side,
        index: usize,
        value: usize,
        n: usize,
    },
    #[error("givens must form an {n} x {n} matrix")]
    GivensShape { n: usize },
    #[error("given at row {row}, column {col} is {value}, outside 1..={n}")]
    GivenValue {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("height {value} given twice in row {row}")]
    GivenDuplicateInRow { row: usize, value: usize },
    #[error("height {value} given twice in column {col}")]
    GivenDuplicateInColumn { col: usize, value: usize },
    #[error("grid must be an {n} x {n} matrix")]
    GridShape { n: usize },
    #[error("cell at row {row}, column {col} is {value}, outside 1..={n}")]
    CellValue {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
}

/// A puzzle instance: grid size, border clues, and pre-filled cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Puzzle {
    n: usize,
    clues: Clues,
    givens: Vec<Vec<Option<usize>>>,
}

impl Puzzle {
    /// Validates clue list lengths, clue ranges, given ranges, and that no
    /// height is given twice within a row or column.
    pub fn new(
        n: usize,
        clues: Clues,
        givens: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, PuzzleError> {
        if n == 0 {
            return Err(PuzzleError::EmptyGrid);
        }
        for side in [Side::Top, Side::Bottom, Side::Left, Side::Right] {
            let list = clues.side(side);
            if list.len() != n {
                return Err(PuzzleError::ClueCount {
                    side,
                    expected: n,
                    got: list.len(),
                });
            }
            for (i, clue) in list.iter().enumerate() {
                if let Some(v) = clue {
                    if *v < 1 || *v > n {
                        return Err(PuzzleError::ClueValue {
                            side,
                            index: i + 1,
                            value: *v,
                            n,
                        });
                    }
                }
            }
        }
        if givens.len() != n || givens.iter().any(|row| row.len() != n) {
            return Err(PuzzleError::GivensShape { n });
        }
        for (r, row) in givens.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if let Some(v) = cell {
                    if *v < 1 || *v > n {
                        return Err(PuzzleError::GivenValue {
                            row: r + 1,
                            col: c + 1,
                            value: *v,
                            n,
                        });
                    }
                }
            }
        }
        for r in 0..n {
            let mut seen = vec![false; n + 1];
            for c in 0..n {
                if let Some(v) = givens[r][c] {
                    if seen[v] {
                        return Err(PuzzleError::GivenDuplicateInRow { row: r + 1, value: v });
                    }
                    seen[v] = true;
                }
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n + 1];
            for r in 0..n {
                if let Some(v) = givens[r][c] {
                    if seen[v] {
                        return Err(PuzzleError::GivenDuplicateInColumn { col: c + 1, value: v });
                    }
                    seen[v] = true;
                }
            }
        }
        Ok(Puzzle { n, clues, givens })
    }

    /// Clues only, no pre-filled cells.
    pub fn with_clues(n: usize, clues: Clues) -> Result<Self, PuzzleError> {
        let givens = vec![vec![None; n]; n];
        Puzzle::new(n, clues, givens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clues(&self) -> &Clues {
        &self.clues
    }

    pub fn givens(&self) -> &[Vec<Option<usize>>] {
        &self.givens
    }

    pub fn given(&self, row: usize, col: usize) -> Option<usize> {
        self.givens[row][col]
    }

    pub fn has_givens(&self) -> bool {
        self.givens.iter().flatten().any(|c| c.is_some())
    }
}

/// A filled grid of heights. Rows and columns are *candidates* for a Latin
/// square; [`verify_solution`] reports whether they actually form one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grid {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Grid {
    /// Validates shape and that every height lies in `1..=n`.
    pub fn new(cells: Vec<Vec<usize>>) -> Result<Self, PuzzleError> {
        let n = cells.len();
        if n == 0 {
            return Err(PuzzleError::EmptyGrid);
        }
        if cells.iter().any(|row| row.len() != n) {
            return Err(PuzzleError::GridShape { n });
        }
        for (r, row) in cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v < 1 || v > n {
                    return Err(PuzzleError::CellValue {
                        row: r + 1,
                        col: c + 1,
                        value: v,
                        n,
                    });
                }
            }
        }
        Ok(Grid { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row][col]
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.cells[row]
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        (0..self.n).map(|r| self.cells[r][col]).collect()
    }

    pub fn is_latin(&self) -> bool {
        let full = (1u64 << self.n) - 1;
        for r in 0..self.n {
            let mask = self.cells[r].iter().fold(0u64, |m, &v| m | 1 << (v - 1));
            if mask != full {
                return false;
            }
        }
        for c in 0..self.n {
            let mask = (0..self.n).fold(0u64, |m, r| m | 1 << (self.cells[r][c] - 1));
            if mask != full {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.cells.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

/// The full clue set a grid would print: visibility of every row from both
/// ends and of every column read top to bottom.
pub fn clues_of_grid(grid: &Grid) -> Clues {
    let n = grid.n();
    let mut clues = Clues::empty(n);
    for r in 0..n {
        let vis = line_visibility(grid.row(r));
        clues.left[r] = Some(vis.left);
        clues.right[r] = Some(vis.right);
    }
    for c in 0..n {
        let vis = line_visibility(&grid.column(c));
        clues.top[c] = Some(vis.left);
        clues.bottom[c] = Some(vis.right);
    }
    clues
}

/// One broken constraint found by [`verify_solution`]. Indices are 1-based,
/// matching how puzzles are printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch {
        expected: usize,
        got: usize,
    },
    RowNotPermutation {
        row: usize,
    },
    ColumnNotPermutation {
        col: usize,
    },
    GivenMismatch {
        row: usize,
        col: usize,
        given: usize,
        found: usize,
    },
    ClueMismatch {
        side: Side,
        index: usize,
        clue: usize,
        seen: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { expected, got } => {
                write!(f, "grid is {got} x {got}, puzzle needs {expected} x {expected}")
            }
            Violation::RowNotPermutation { row } => write!(f, "row {row} repeats a height"),
            Violation::ColumnNotPermutation { col } => write!(f, "column {col} repeats a height"),
            Violation::GivenMismatch { row, col, given, found } => {
                write!(f, "cell ({row}, {col}) is {found}, puzzle gives {given}")
            }
            Violation::ClueMismatch { side, index, clue, seen } => {
                write!(f, "{side} clue {index}: sees {seen}, needs {clue}")
            }
        }
    }
}

/// Outcome of checking a grid against a puzzle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that `grid` is a Latin square, honors every given cell, and
/// matches every present clue. Violations are report content, not errors.
pub fn verify_solution(puzzle: &Puzzle, grid: &Grid) -> VerificationReport {
    let n = puzzle.n();
    if grid.n() != n {
        return VerificationReport {
            violations: vec![Violation::SizeMismatch {
                expected: n,
                got: grid.n(),
            }],
        };
    }
    let mut violations = Vec::new();
    let full = (1u64 << n) - 1;
    for r in 0..n {
        let mask = grid.row(r).iter().fold(0u64, |m, &v| m | 1 << (v - 1));
        if mask != full {
            violations.push(Violation::RowNotPermutation { row: r + 1 });
        }
    }
    for c in 0..n {
        let mask = (0..n).fold(0u64, |m, r| m | 1 << (grid.get(r, c) - 1));
        if mask != full {
            violations.push(Violation::ColumnNotPermutation { col: c + 1 });
        }
    }
    for r in 0..n {
        for c in 0..n {
            if let Some(v) = puzzle.given(r, c) {
                if grid.get(r, c) != v {
                    violations.push(Violation::GivenMismatch {
                        row: r + 1,
                        col: c + 1,
                        given: v,
                        found: grid.get(r, c),
                    });
                }
            }
        }
    }
    let seen = clues_of_grid(grid);
    for side in [Side::Top, Side::Bottom, Side::Left, Side::Right] {
        let wanted = puzzle.clues().side(side);
        let got = seen.side(side);
        for i in 0..n {
            if let Some(clue) = wanted[i] {
                let actual = got[i].expect("clues_of_grid fills every entry");
                if actual != clue {
                    violations.push(Violation::ClueMismatch {
                        side,
                        index: i + 1,
                        clue,
                        seen: actual,
                    });
                }
            }
        }
    }
    VerificationReport { violations }
}

/// Every Latin square of order `n`, in row-major lexicographic order.
pub fn all_latin_squares(n: usize) -> Vec<Grid> {
    assert!(
        (1..=5).contains(&n),
        "exhaustive Latin square generation is limited to orders 1..=5"
    );
    let perms: Vec<Vec<usize>> = crate::oracle::enumerate_rows(n, None, None, None)
        .expect("order is far below the enumeration cap")
        .into_iter()
        .map(|p| p.into_heights())
        .collect();

    fn extend<'a>(
        perms: &'a [Vec<usize>],
        n: usize,
        rows: &mut Vec<&'a Vec<usize>>,
        col_used: &mut [u64],
        out: &mut Vec<Grid>,
    ) {
        if rows.len() == n {
            let cells = rows.iter().map(|r| (*r).clone()).collect();
            out.push(Grid::new(cells).expect("rows are permutations"));
            return;
        }
        'next: for perm in perms {
            for (c, &v) in perm.iter().enumerate() {
                if col_used[c] & (1 << (v - 1)) != 0 {
                    continue 'next;
                }
            }
            for (c, &v) in perm.iter().enumerate() {
                col_used[c] |= 1 << (v - 1);
            }
            rows.push(perm);
            extend(perms, n, rows, col_used, out);
            rows.pop();
            for (c, &v) in perm.iter().enumerate() {
                col_used[c] &= !(1 << (v - 1));
            }
        }
    }

    let mut out = Vec::new();
    let mut rows: Vec<&Vec<usize>> = Vec::with_capacity(n);
    let mut col_used = vec![0u64; n];
    extend(&perms, n, &mut rows, &mut col_used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(cells: &[&[usize]]) -> Grid {
        Grid::new(cells.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn puzzle_validation() {
        let mut clues = Clues::empty(2);
        clues.top[0] = Some(3);
        assert_eq!(
            Puzzle::with_clues(2, clues).unwrap_err(),
            PuzzleError::ClueValue {
                side: Side::Top,
                index: 1,
                value: 3,
                n: 2
            }
        );

        let clues = Clues::empty(2);
        let givens = vec![vec![Some(1), Some(1)], vec![None, None]];
        assert_eq!(
            Puzzle::new(2, clues, givens).unwrap_err(),
            PuzzleError::GivenDuplicateInRow { row: 1, value: 1 }
        );

        let clues = Clues::empty(2);
        let givens = vec![vec![Some(1), None], vec![Some(1), None]];
        assert_eq!(
            Puzzle::new(2, clues, givens).unwrap_err(),
            PuzzleError::GivenDuplicateInColumn { col: 1, value: 1 }
        );
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(vec![vec![1, 2], vec![2, 1]]).is_ok());
        assert!(Grid::new(vec![vec![1, 2]]).is_err());
        assert_eq!(
            Grid::new(vec![vec![1, 3], vec![3, 1]]).unwrap_err(),
            PuzzleError::CellValue {
                row: 1,
                col: 2,
                value: 3,
                n: 2
            }
        );
    }

    #[test]
    fn clues_of_small_grids() {
        let g = grid(&[&[1, 2], &[2, 1]]);
        let clues = clues_of_grid(&g);
        assert_eq!(clues.top, vec![Some(2), Some(1)]);
        assert_eq!(clues.bottom, vec![Some(1), Some(2)]);
        assert_eq!(clues.left, vec![Some(2), Some(1)]);
        assert_eq!(clues.right, vec![Some(1), Some(2)]);

        let g = grid(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]]);
        let clues = clues_of_grid(&g);
        assert_eq!(clues.left, vec![Some(3), Some(2), Some(1)]);
        assert_eq!(clues.right, vec![Some(1), Some(2), Some(2)]);
        assert_eq!(clues.top, vec![Some(3), Some(2), Some(1)]);
        assert_eq!(clues.bottom, vec![Some(1), Some(2), Some(2)]);

        let g = grid(&[&[1]]);
        let clues = clues_of_grid(&g);
        assert_eq!(clues.present(), 4);
        assert!(clues.top[0] == Some(1) && clues.bottom[0] == Some(1));
    }

    #[test]
    fn verification_passes_and_fails() {
        // n = 1, all four clues 1.
        let mut clues = Clues::empty(1);
        clues.top[0] = Some(1);
        clues.bottom[0] = Some(1);
        clues.left[0] = Some(1);
        clues.right[0] = Some(1);
        let p = Puzzle::with_clues(1, clues).unwrap();
        assert!(verify_solution(&p, &grid(&[&[1]])).passed());

        // top = (2, 1), left = (2, 1), rest open; unique among the two
        // order-2 Latin squares.
        let mut clues = Clues::empty(2);
        clues.top = vec![Some(2), Some(1)];
        clues.left = vec![Some(2), Some(1)];
        let p = Puzzle::with_clues(2, clues).unwrap();
        assert!(verify_solution(&p, &grid(&[&[1, 2], &[2, 1]])).passed());

        let report = verify_solution(&p, &grid(&[&[2, 1], &[1, 2]]));
        assert!(!report.passed());
        assert!(report.violations.contains(&Violation::ClueMismatch {
            side: Side::Top,
            index: 1,
            clue: 2,
            seen: 1
        }));
        assert!(report.violations.contains(&Violation::ClueMismatch {
            side: Side::Left,
            index: 1,
            clue: 2,
            seen: 1
        }));
    }

    #[test]
    fn verification_reports_non_latin_and_givens() {
        let clues = Clues::empty(2);
        let givens = vec![vec![Some(2), None], vec![None, None]];
        let p = Puzzle::new(2, clues, givens).unwrap();

        let report = verify_solution(&p, &grid(&[&[1, 1], &[2, 2]]));
        assert!(report
            .violations
            .contains(&Violation::RowNotPermutation { row: 1 }));
        assert!(report.violations.contains(&Violation::GivenMismatch {
            row: 1,
            col: 1,
            given: 2,
            found: 1
        }));

        let report = verify_solution(&p, &grid(&[&[1, 2], &[1, 2]]));
        assert!(report
            .violations
            .contains(&Violation::ColumnNotPermutation { col: 1 }));
        assert!(report
            .violations
            .contains(&Violation::ColumnNotPermutation { col: 2 }));
    }

    #[test]
    fn size_mismatch_is_its_own_violation() {
        let p = Puzzle::with_clues(3, Clues::empty(3)).unwrap();
        let report = verify_solution(&p, &grid(&[&[1, 2], &[2, 1]]));
        assert_eq!(
            report.violations,
            vec![Violation::SizeMismatch { expected: 3, got: 2 }]
        );
    }

    #[test]
    fn latin_square_counts() {
        assert_eq!(all_latin_squares(1).len(), 1);
        assert_eq!(all_latin_squares(2).len(), 2);
        assert_eq!(all_latin_squares(3).len(), 12);
        assert_eq!(all_latin_squares(4).len(), 576);
    }

    #[test]
    fn latin_squares_are_sorted_and_latin() {
        let squares = all_latin_squares(3);
        let mut sorted = squares.clone();
        sorted.sort();
        assert_eq!(squares, sorted);
        assert!(squares.iter().all(Grid::is_latin));
        assert!(!grid(&[&[1, 2], &[1, 2]]).is_latin());
    }
}
