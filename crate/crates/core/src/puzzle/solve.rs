//! Exact puzzle solver.
//!
//! Every row and every column is a *line* with up to two clues. A line's
//! candidate set is the list of height permutations matching its clue pair
//! and its pre-filled cells; the number of such rows is exactly the count
//! the rest of this crate computes, which is why the least-constrained
//! lines have the largest sets. Search branches on the line with the
//! fewest candidates and propagates by intersecting, per cell, the heights
//! supported by the row line and the column line through it.
//!
//! The search is sequential and fully deterministic: candidate lists stay
//! in lexicographic order, ties in line selection break towards rows
//! before columns, and identical inputs give identical results including
//! `nodes_expanded`.

use thiserror::Error;

use super::{verify_solution, Grid, Puzzle};
use crate::combinatorics::Count;
use crate::oracle::enumerate_rows;

/// Largest grid the solver accepts; line candidate lists grow as `n!`.
pub const MAX_SOLVE_N: usize = 9;

/// Default node budget for exhaustive counting.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("grids larger than {max} x {max} are not searchable (candidate lists grow as n!), got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("search exceeded its node budget of {budget}")]
    NodeBudget { budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Exhausted the space and found exactly one solution.
    Unique,
    /// Found at least two solutions.
    Multiple,
    /// Exhausted the space and found none.
    Unsatisfiable,
    /// Stopped at the solution cap without learning whether more exist.
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Solutions in canonical order (lexicographic by row-major cells),
    /// capped at the requested maximum.
    pub solutions: Vec<Grid>,
    /// Exact solution count, present only when the space was exhausted.
    pub count: Option<Count>,
    /// Branch assignments tried; a deterministic search-effort measure.
    pub nodes_expanded: u64,
}

// Candidates are permutations packed four bits per cell: cell c occupies
// bits 4c..4c+4 and holds the height itself (1-based). MAX_SOLVE_N keeps
// this within a u64.
fn pack(heights: &[usize]) -> u64 {
    heights
        .iter()
        .enumerate()
        .fold(0u64, |acc, (c, &h)| acc | (h as u64) << (4 * c))
}

fn unpack(cand: u64, c: usize) -> usize {
    ((cand >> (4 * c)) & 0xF) as usize
}

/// All packed candidate rows for one line: length `n`, visibility matching
/// the clue pair, fixed cells respected. Lexicographic order.
pub(crate) fn line_candidates(
    n: usize,
    near_clue: Option<usize>,
    far_clue: Option<usize>,
    fixed: &[Option<usize>],
) -> Vec<u64> {
    enumerate_rows(n, near_clue, far_clue, None)
        .expect("solver grids stay below the enumeration cap")
        .into_iter()
        .filter_map(|p| {
            let heights = p.heights();
            let ok = fixed
                .iter()
                .zip(heights)
                .all(|(f, &h)| f.map_or(true, |v| v == h));
            ok.then(|| pack(heights))
        })
        .collect()
}

/// Lines 0..n are rows top to bottom; lines n..2n are columns left to
/// right, read downward so the top clue plays the "near" role.
fn initial_lines(puzzle: &Puzzle) -> Vec<Vec<u64>> {
    let n = puzzle.n();
    let clues = puzzle.clues();
    let mut lines = Vec::with_capacity(2 * n);
    for r in 0..n {
        let fixed: Vec<Option<usize>> = (0..n).map(|c| puzzle.given(r, c)).collect();
        lines.push(line_candidates(n, clues.left[r], clues.right[r], &fixed));
    }
    for c in 0..n {
        let fixed: Vec<Option<usize>> = (0..n).map(|r| puzzle.given(r, c)).collect();
        lines.push(line_candidates(n, clues.top[c], clues.bottom[c], &fixed));
    }
    lines
}

struct Searcher<'p> {
    puzzle: &'p Puzzle,
    n: usize,
    /// Stop after this many solutions; `None` runs to exhaustion.
    stop_at: Option<u64>,
    /// Keep at most this many grids.
    max_store: usize,
    node_budget: u64,
    nodes: u64,
    found: u64,
    solutions: Vec<Grid>,
    exhausted: bool,
}

enum Flow {
    Continue,
    Stop,
}

impl<'p> Searcher<'p> {
    fn new(puzzle: &'p Puzzle, stop_at: Option<u64>, max_store: usize, node_budget: u64) -> Self {
        Searcher {
            puzzle,
            n: puzzle.n(),
            stop_at,
            max_store,
            node_budget,
            nodes: 0,
            found: 0,
            solutions: Vec::new(),
            exhausted: true,
        }
    }

    /// Shrinks every candidate list against the per-cell height masks until
    /// nothing moves. False means contradiction.
    fn propagate(&self, lines: &mut [Vec<u64>]) -> bool {
        let n = self.n;
        loop {
            let mut masks = vec![vec![0u16; n]; n];
            for r in 0..n {
                let mut row_support = vec![0u16; n];
                for &cand in &lines[r] {
                    for (c, support) in row_support.iter_mut().enumerate() {
                        *support |= 1 << (unpack(cand, c) - 1);
                    }
                }
                for c in 0..n {
                    masks[r][c] = row_support[c];
                }
            }
            for c in 0..n {
                let mut col_support = vec![0u16; n];
                for &cand in &lines[n + c] {
                    for (r, support) in col_support.iter_mut().enumerate() {
                        *support |= 1 << (unpack(cand, r) - 1);
                    }
                }
                for r in 0..n {
                    masks[r][c] &= col_support[r];
                }
            }
            let mut changed = false;
            for l in 0..2 * n {
                let before = lines[l].len();
                lines[l].retain(|&cand| {
                    (0..n).all(|i| {
                        let (r, c) = if l < n { (l, i) } else { (i, l - n) };
                        masks[r][c] & (1 << (unpack(cand, i) - 1)) != 0
                    })
                });
                if lines[l].is_empty() {
                    return false;
                }
                changed |= lines[l].len() != before;
            }
            if !changed {
                return true;
            }
        }
    }

    fn record(&mut self, lines: &[Vec<u64>]) {
        let cells: Vec<Vec<usize>> = (0..self.n)
            .map(|r| (0..self.n).map(|c| unpack(lines[r][0], c)).collect())
            .collect();
        let grid = Grid::new(cells).expect("candidates hold valid heights");
        debug_assert!(verify_solution(self.puzzle, &grid).passed());
        self.found += 1;
        if self.solutions.len() < self.max_store {
            self.solutions.push(grid);
        }
    }

    fn search(&mut self, mut lines: Vec<Vec<u64>>) -> Result<Flow, SolveError> {
        if !self.propagate(&mut lines) {
            return Ok(Flow::Continue);
        }
        if lines.iter().all(|l| l.len() == 1) {
            self.record(&lines);
            if let Some(cap) = self.stop_at {
                if self.found >= cap {
                    self.exhausted = false;
                    return Ok(Flow::Stop);
                }
            }
            return Ok(Flow::Continue);
        }
        let branch = lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.len() > 1)
            .min_by_key(|(i, l)| (l.len(), *i))
            .map(|(i, _)| i)
            .expect("some line is still undecided");
        let candidates = lines[branch].clone();
        for cand in candidates {
            self.nodes += 1;
            if self.nodes > self.node_budget {
                return Err(SolveError::NodeBudget {
                    budget: self.node_budget,
                });
            }
            let mut child = lines.clone();
            child[branch] = vec![cand];
            if let Flow::Stop = self.search(child)? {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }
}

fn check_size(puzzle: &Puzzle) -> Result<(), SolveError> {
    if puzzle.n() > MAX_SOLVE_N {
        return Err(SolveError::TooLarge {
            n: puzzle.n(),
            max: MAX_SOLVE_N,
        });
    }
    Ok(())
}

/// Finds solutions up to `max_solutions` (default 2, enough to refute
/// uniqueness). No node budget; the solution cap bounds the work.
pub fn solve(puzzle: &Puzzle, max_solutions: Option<usize>) -> Result<SolveResult, SolveError> {
    solve_with_options(puzzle, max_solutions.unwrap_or(2), u64::MAX)
}

/// [`solve`] with the cap and node budget spelled out. `usize::MAX`
/// solutions means exhaustive enumeration with every solution kept.
pub fn solve_with_options(
    puzzle: &Puzzle,
    max_solutions: usize,
    node_budget: u64,
) -> Result<SolveResult, SolveError> {
    check_size(puzzle)?;
    if max_solutions == 0 {
        return Ok(SolveResult {
            status: SolveStatus::Truncated,
            solutions: Vec::new(),
            count: None,
            nodes_expanded: 0,
        });
    }
    let mut searcher = Searcher::new(
        puzzle,
        Some(max_solutions as u64),
        max_solutions,
        node_budget,
    );
    searcher.search(initial_lines(puzzle))?;
    let mut solutions = std::mem::take(&mut searcher.solutions);
    solutions.sort();
    let status = if searcher.exhausted {
        match searcher.found {
            0 => SolveStatus::Unsatisfiable,
            1 => SolveStatus::Unique,
            _ => SolveStatus::Multiple,
        }
    } else if searcher.found >= 2 {
        SolveStatus::Multiple
    } else {
        SolveStatus::Truncated
    };
    Ok(SolveResult {
        status,
        solutions,
        count: searcher.exhausted.then(|| Count::from(searcher.found)),
        nodes_expanded: searcher.nodes,
    })
}

/// Exact number of solutions by exhaustive search under the default node
/// budget. Full counts are guaranteed practical for `n <= 5`; beyond that
/// the budget decides.
pub fn count_solutions(puzzle: &Puzzle) -> Result<Count, SolveError> {
    count_solutions_with_budget(puzzle, DEFAULT_NODE_BUDGET)
}

/// [`count_solutions`] with an explicit node budget.
pub fn count_solutions_with_budget(puzzle: &Puzzle, budget: u64) -> Result<Count, SolveError> {
    check_size(puzzle)?;
    let mut searcher = Searcher::new(puzzle, None, 0, budget);
    searcher.search(initial_lines(puzzle))?;
    Ok(Count::from(searcher.found))
}
