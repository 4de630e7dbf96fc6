//! Named identity and oracle-equivalence suites.
//!
//! Each check re-derives one published fact or cross-checks two independent
//! routes to the same numbers (formula against formula, or formula against
//! exhaustive enumeration). The suites exist so that a single command can
//! re-certify the whole artifact.

use num_traits::Zero;

use crate::combinatorics::{
    binomial, factorial, rising_factorial_coeffs, stirling_first_unsigned, stirling_row, Count,
};
use crate::oracle::{brute_counts_partitioned, enumerate_rows, line_visibility, visibility};
use crate::puzzle::{
    all_latin_squares, clues_of_grid, count_solutions, solve, solve_with_options, Clues, Puzzle,
};
use crate::skyscraper::{
    max_pairs, row_sum, skyscraper_number, skyscraper_number_closed, skyscraper_table, support,
};

/// Bounds for the enumeration-backed suites; identity suites use the fixed
/// ranges they are stated for.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Exhaustive sweeps cover `1..=oracle_max_n`.
    pub oracle_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { oracle_max_n: 8 }
    }
}

/// Result of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckResult = Result<String, String>;

fn outcome(name: &'static str, result: CheckResult) -> CheckOutcome {
    match result {
        Ok(detail) => CheckOutcome {
            name,
            passed: true,
            detail,
        },
        Err(detail) => CheckOutcome {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs every suite and reports one outcome per check, in a fixed order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let k = opts.oracle_max_n;
    vec![
        outcome("stirling-two-term-recurrence", two_term_recurrence(12)),
        outcome("stirling-cycle-decomposition", cycle_decomposition(12)),
        outcome("stirling-row-sums", stirling_row_sums(12)),
        outcome("rising-factorial-coefficients", rising_coeffs(10)),
        outcome("stirling-golden-rows", golden_stirling_rows()),
        outcome("closed-form-vs-convolution", formula_equivalence(15)),
        outcome("table-symmetry", table_symmetry(15)),
        outcome("table-mass", table_mass(15)),
        outcome("antidiagonal-binomial", antidiagonal(15)),
        outcome("pascal-rescaling", pascal_rescaling(15)),
        outcome("row-sums-are-stirling", row_sums_are_stirling(15)),
        outcome("max-pair-gap", max_pair_gap(30)),
        outcome("support-positivity", support_positivity(9)),
        outcome("table-seven-golden", golden_table_seven()),
        outcome("oracle-pair-counts", oracle_pair_counts(k)),
        outcome("oracle-left-and-cycles", oracle_left_and_cycles(k)),
        outcome("enumerate-length", enumerate_length(k.min(7))),
        outcome("reversal-duality", reversal_duality(k.min(8))),
        outcome("split-at-tallest", split_at_tallest(k.min(8))),
        outcome("latin-round-trip", latin_round_trip(4)),
        outcome("count-consistency", count_consistency(4)),
        outcome("line-candidates", line_candidate_counts(7)),
        outcome("solver-determinism", solver_determinism()),
    ]
}

const TABLE1_STIRLING_ROWS: [&[u64]; 6] = [
    &[0, 1],
    &[0, 1, 1],
    &[0, 2, 3, 1],
    &[0, 6, 11, 6, 1],
    &[0, 24, 50, 35, 10, 1],
    &[0, 120, 274, 225, 85, 15, 1],
];

const TABLE2_SEVEN: [[u64; 7]; 7] = [
    [0, 120, 274, 225, 85, 15, 1],
    [120, 548, 675, 340, 75, 6, 0],
    [274, 675, 510, 150, 15, 0, 0],
    [225, 340, 150, 20, 0, 0, 0],
    [85, 75, 15, 0, 0, 0, 0],
    [15, 6, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
];

const ROW_SUMS_SEVEN: [u64; 7] = [720, 1764, 1624, 735, 175, 21, 1];

fn two_term_recurrence(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for a in 1..=n {
            let lhs = stirling_first_unsigned(n, a);
            let rhs = stirling_first_unsigned(n - 1, a - 1)
                + Count::from(n - 1) * stirling_first_unsigned(n - 1, a);
            if lhs != rhs {
                return Err(format!("c({n}, {a}) = {lhs} but the recurrence gives {rhs}"));
            }
        }
    }
    Ok(format!(
        "c(n,a) = c(n-1,a-1) + (n-1)c(n-1,a) for n <= {max_n}"
    ))
}

/// Summed form of the recurrence, by the length k of the cycle through the
/// smallest element: c(n,a) = sum_{k=1..n} (n-1)!/(n-k)! c(n-k, a-1),
/// where the k = n term needs c(0,0) = 1 to cover a = 1.
fn cycle_decomposition(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for a in 1..=n {
            let mut sum = Count::zero();
            for k in 1..=n {
                sum += factorial(n - 1) / factorial(n - k) * stirling_first_unsigned(n - k, a - 1);
            }
            let direct = stirling_first_unsigned(n, a);
            if sum != direct {
                return Err(format!("c({n}, {a}) = {direct} but the sum gives {sum}"));
            }
        }
    }
    Ok(format!(
        "c(n,a) = sum_k (n-1)!/(n-k)! c(n-k,a-1) for n <= {max_n}"
    ))
}

fn stirling_row_sums(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        let sum: Count = stirling_row(n).into_iter().sum();
        if sum != factorial(n) {
            return Err(format!("row {n} sums to {sum}, expected {n}!"));
        }
    }
    Ok(format!("every row n <= {max_n} sums to n!"))
}

fn rising_coeffs(max_n: usize) -> CheckResult {
    for n in 0..=max_n {
        let coeffs = rising_factorial_coeffs(n);
        for (k, e) in coeffs.iter().enumerate() {
            let want = stirling_first_unsigned(n + 1, k + 1);
            if *e != want {
                return Err(format!(
                    "coefficient of x^{k} in (x+1)..(x+{n}) is {e}, expected c({}, {})",
                    n + 1,
                    k + 1
                ));
            }
        }
    }
    Ok(format!(
        "product coefficients match c(n+1, k+1) for n <= {max_n}"
    ))
}

fn golden_stirling_rows() -> CheckResult {
    for (i, want) in TABLE1_STIRLING_ROWS.iter().enumerate() {
        let n = i + 1;
        let got = stirling_row(n);
        let want: Vec<Count> = want.iter().map(|&v| Count::from(v)).collect();
        if got != want {
            return Err(format!("stirling row {n} diverges from the reference"));
        }
    }
    Ok("six reference rows reproduced exactly".into())
}

fn formula_equivalence(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for a in 1..=n {
            for b in 1..=n {
                let conv = skyscraper_number(n, a, b);
                let closed = skyscraper_number_closed(n, a, b);
                if conv != closed {
                    return Err(format!(
                        "f_{n}({a}, {b}): convolution {conv} vs closed form {closed}"
                    ));
                }
            }
        }
    }
    Ok(format!("both formulas agree on all pairs for n <= {max_n}"))
}

fn table_symmetry(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let table = skyscraper_table(n);
        for a in 1..=n {
            for b in a..=n {
                if table.get(a, b) != table.get(b, a) {
                    return Err(format!("f_{n}({a}, {b}) != f_{n}({b}, {a})"));
                }
            }
        }
    }
    Ok(format!("f_n(a,b) = f_n(b,a) for n <= {max_n}"))
}

fn table_mass(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let total = skyscraper_table(n).total();
        if total != factorial(n) {
            return Err(format!(
                "entries of the n = {n} table sum to {total}, not n!"
            ));
        }
    }
    Ok(format!("table entries sum to n! for n <= {max_n}"))
}

fn antidiagonal(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let table = skyscraper_table(n);
        for a in 1..=n {
            let want = binomial(n - 1, a as isize - 1);
            if *table.get(a, n + 1 - a) != want {
                return Err(format!(
                    "f_{n}({a}, {}) != C({}, {})",
                    n + 1 - a,
                    n - 1,
                    a - 1
                ));
            }
        }
    }
    Ok(format!("antidiagonals are binomial rows for n <= {max_n}"))
}

/// Lines of constant a + b are a rescaled row of Pascal's triangle:
/// f_n(a, s - a) = c(n-1, s-2) * C(s-2, a-1).
fn pascal_rescaling(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let table = skyscraper_table(n);
        for s in 2..=n + 1 {
            let scale = stirling_first_unsigned(n - 1, s - 2);
            for a in 1..s {
                let b = s - a;
                if b < 1 || b > n || a > n {
                    continue;
                }
                let want = &scale * binomial(s - 2, a as isize - 1);
                if *table.get(a, b) != want {
                    return Err(format!(
                        "f_{n}({a}, {b}) != c({}, {}) * C({}, {})",
                        n - 1,
                        s - 2,
                        s - 2,
                        a - 1
                    ));
                }
            }
        }
    }
    Ok(format!("diagonals rescale to Pascal rows for n <= {max_n}"))
}

fn row_sums_are_stirling(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for a in 1..=n {
            let sum = row_sum(n, a);
            let want = stirling_first_unsigned(n, a);
            if sum != want {
                return Err(format!(
                    "sum_b f_{n}({a}, b) = {sum}, expected c({n}, {a}) = {want}"
                ));
            }
        }
    }
    Ok(format!("row sums equal c(n, a) for n <= {max_n}"))
}

fn max_pair_gap(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let report = max_pairs(n);
        for &(a, b) in &report.pairs {
            if b - a > 1 {
                return Err(format!(
                    "maximizing pair ({a}, {b}) of n = {n} differs by more than 1"
                ));
            }
        }
    }
    Ok(format!("maximizing pairs stay within gap 1 for n <= {max_n}"))
}

fn support_positivity(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for a in 1..=n {
            for b in 1..=n {
                let positive = !skyscraper_number(n, a, b).is_zero();
                if support(n, a, b) != positive {
                    return Err(format!(
                        "support({n}, {a}, {b}) = {} but the count is {}",
                        support(n, a, b),
                        if positive { "positive" } else { "zero" },
                    ));
                }
            }
        }
    }
    Ok(format!(
        "support predicate matches positivity for n <= {max_n}"
    ))
}

fn golden_table_seven() -> CheckResult {
    let table = skyscraper_table(7);
    for a in 1..=7usize {
        for b in 1..=7usize {
            if *table.get(a, b) != Count::from(TABLE2_SEVEN[a - 1][b - 1]) {
                return Err(format!("f_7({a}, {b}) diverges from the reference table"));
            }
        }
    }
    for (a, want) in (1..=7usize).zip(ROW_SUMS_SEVEN) {
        if row_sum(7, a) != Count::from(want) {
            return Err(format!("row sum {a} of the 7x7 table diverges"));
        }
    }
    Ok("7x7 table and its row sums reproduced exactly".into())
}

fn oracle_pair_counts(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let counts = brute_counts_partitioned(n, 8);
        for a in 1..=n {
            for b in 1..=n {
                let brute = Count::from(counts.pair(a, b));
                let formula = skyscraper_number(n, a, b);
                if brute != formula {
                    return Err(format!(
                        "n = {n}: enumeration sees {brute} rows for ({a}, {b}), formula says {formula}"
                    ));
                }
            }
        }
        for (&(a, b), &c) in &counts.by_pair {
            if c > 0 && !support(n, a, b) {
                return Err(format!(
                    "n = {n}: pair ({a}, {b}) observed outside the support"
                ));
            }
        }
    }
    Ok(format!(
        "exhaustive pair tallies match the formula for n <= {max_n}"
    ))
}

fn oracle_left_and_cycles(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let counts = brute_counts_partitioned(n, 8);
        for a in 1..=n {
            let left = Count::from(counts.by_left.get(&a).copied().unwrap_or(0));
            let cycles = Count::from(counts.by_cycles.get(&a).copied().unwrap_or(0));
            let want = stirling_first_unsigned(n, a);
            if left != want || cycles != want {
                return Err(format!(
                    "n = {n}, a = {a}: left-maxima {left}, cycles {cycles}, c(n,a) {want}"
                ));
            }
        }
    }
    Ok(format!(
        "left-maxima and cycle tallies both match c(n, a) for n <= {max_n}"
    ))
}

fn enumerate_length(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for a in 1..=n {
            for b in 1..=n {
                let rows = enumerate_rows(n, Some(a), Some(b), None)
                    .expect("suite range is far below the cap");
                let want = skyscraper_number(n, a, b);
                if Count::from(rows.len()) != want {
                    return Err(format!(
                        "enumerate_rows({n}, {a}, {b}) lists {} rows, formula says {want}",
                        rows.len()
                    ));
                }
            }
        }
    }
    Ok(format!(
        "row enumeration lengths match the counts for n <= {max_n}"
    ))
}

fn reversal_duality(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for p in enumerate_rows(n, None, None, None).expect("below cap") {
            if visibility(&p.reversed()) != visibility(&p).swap() {
                return Err(format!("reversal duality fails for {:?}", p.heights()));
            }
        }
    }
    Ok(format!("reversal swaps the visibility pair for n <= {max_n}"))
}

fn split_at_tallest(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        for p in enumerate_rows(n, None, None, None).expect("below cap") {
            let heights = p.heights();
            let k = heights.iter().position(|&h| h == n).unwrap();
            let vis = visibility(&p);
            let left_part = line_visibility(&heights[..k]).left;
            let right_part = line_visibility(&heights[k + 1..]).right;
            if left_part != vis.left - 1 || right_part != vis.right - 1 {
                return Err(format!("split at the tallest fails for {heights:?}"));
            }
        }
    }
    Ok(format!(
        "both sides of the tallest carry one fewer maximum for n <= {max_n}"
    ))
}

fn latin_round_trip(max_order: usize) -> CheckResult {
    for n in 1..=max_order {
        for square in all_latin_squares(n) {
            let puzzle =
                Puzzle::with_clues(n, clues_of_grid(&square)).expect("grid clues are in range");
            let result = solve_with_options(&puzzle, usize::MAX, u64::MAX)
                .map_err(|e| format!("order {n}: {e}"))?;
            if !result.solutions.contains(&square) {
                return Err(format!(
                    "order {n}: a square is missing from its own clue set"
                ));
            }
        }
    }
    Ok(format!(
        "every square of order <= {max_order} solves its own full-clue puzzle"
    ))
}

fn count_consistency(max_order: usize) -> CheckResult {
    for n in 1..=max_order {
        let squares = all_latin_squares(n);
        let empty = Puzzle::with_clues(n, Clues::empty(n)).expect("empty clues are valid");
        let counted = count_solutions(&empty).map_err(|e| format!("order {n}: {e}"))?;
        if counted != Count::from(squares.len()) {
            return Err(format!(
                "order {n}: solver counts {counted}, enumeration finds {}",
                squares.len()
            ));
        }
        // A partial clue set, cross-checked by generate-and-filter.
        let mut clues = Clues::empty(n);
        clues.top = clues_of_grid(&squares[0]).top;
        let puzzle = Puzzle::with_clues(n, clues).expect("clues are in range");
        let filtered = squares
            .iter()
            .filter(|g| crate::puzzle::verify_solution(&puzzle, g).passed())
            .count();
        let counted = count_solutions(&puzzle).map_err(|e| format!("order {n}: {e}"))?;
        if counted != Count::from(filtered) {
            return Err(format!(
                "order {n} with top clues: solver counts {counted}, filter finds {filtered}"
            ));
        }
    }
    Ok(format!(
        "solver counts match generate-and-filter for orders <= {max_order}"
    ))
}

fn line_candidate_counts(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let unconstrained = vec![None; n];
        for a in 1..=n {
            for b in 1..=n {
                let got =
                    crate::puzzle::line_candidates(n, Some(a), Some(b), &unconstrained).len();
                let want = skyscraper_number(n, a, b);
                if Count::from(got) != want {
                    return Err(format!(
                        "solver generates {got} candidate rows for ({a}, {b}) at n = {n}, count says {want}"
                    ));
                }
            }
        }
    }
    Ok(format!(
        "solver candidate lists have the predicted lengths for n <= {max_n}"
    ))
}

fn solver_determinism() -> CheckResult {
    let text = "4\n0 2 0 0\n0 0 3 0\n4 0 0 0\n0 0 0 1\n";
    let puzzle = crate::puzzle::parse_puzzle(text).expect("fixture parses");
    let first = solve(&puzzle, Some(16)).map_err(|e| e.to_string())?;
    let second = solve(&puzzle, Some(16)).map_err(|e| e.to_string())?;
    if first != second {
        return Err("two identical solves disagreed".into());
    }
    Ok(format!(
        "repeat solve identical ({} nodes expanded)",
        first.nodes_expanded
    ))
}
