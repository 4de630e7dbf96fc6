//! Exact counting of permutations by how many buildings are visible from
//! each end of a row, plus the machinery that grows out of it: brute-force
//! oracles, identity verification suites, and a skyscraper puzzle solver.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate.

pub mod combinatorics;
pub mod oracle;
pub mod puzzle;
pub mod skyscraper;
pub mod verify;

pub use combinatorics::{
    binomial, factorial, rising_factorial_coeffs, stirling_first_unsigned, stirling_row, Count,
    StirlingTable,
};
pub use oracle::{
    brute_counts, brute_counts_partitioned, cycle_count, enumerate_rows, visibility, BruteCounts,
    EnumerationLimit, InvalidPermutation, Permutation, VisibilityPair,
};
pub use puzzle::{
    all_latin_squares, clues_of_grid, count_solutions, count_solutions_with_budget, parse_puzzle,
    solve, solve_with_options, verify_solution, Clues, Grid, ParseError, Puzzle, PuzzleError,
    Side, SolveError, SolveResult, SolveStatus, VerificationReport, Violation,
};
pub use skyscraper::{
    max_pairs, row_sum, sequence, skyscraper_number, skyscraper_number_closed, skyscraper_table,
    support, MaxPairReport, SequenceTerm, SkyTable,
};
