//! Skyscraper numbers `f_n(a, b)`: how many permutations of length `n` show
//! exactly `a` buildings from the left and `b` from the right.
//!
//! Two independent routes are kept side by side:
//!
//! * [`skyscraper_number`] evaluates the convolution over the position of
//!   the tallest building,
//!   `sum_{k=0}^{n-1} C(n-1,k) c(k,a-1) c(n-k-1,b-1)`;
//! * [`skyscraper_number_closed`] evaluates the closed form
//!   `C(a+b-2, a-1) * c(n-1, a+b-2)`.
//!
//! The closed form is the default path everywhere else in the crate; the
//! convolution stays as its checker and is never rewritten in terms of it.

use num_traits::Zero;

use crate::combinatorics::{choose, stirling_first_unsigned, Count, StirlingTable};

/// `f_n(a, b)` by the convolution over the position of the tallest
/// building. Out-of-range `a` or `b` gives zero.
pub fn skyscraper_number(n: usize, a: usize, b: usize) -> Count {
    assert!(n >= 1, "row length must be positive");
    if a < 1 || b < 1 || a > n || b > n {
        return Count::zero();
    }
    let table = StirlingTable::shared();
    let mut sum = Count::zero();
    for k in 0..n {
        let left = table.value(k, a - 1);
        if left.is_zero() {
            continue;
        }
        let right = table.value(n - k - 1, b - 1);
        if right.is_zero() {
            continue;
        }
        sum += choose(n - 1, k) * left * right;
    }
    sum
}

/// `f_n(a, b)` by the closed form `C(a+b-2, a-1) * c(n-1, a+b-2)`.
pub fn skyscraper_number_closed(n: usize, a: usize, b: usize) -> Count {
    assert!(n >= 1, "row length must be positive");
    if a < 1 || b < 1 || a > n || b > n {
        return Count::zero();
    }
    choose(a + b - 2, a - 1) * stirling_first_unsigned(n - 1, a + b - 2)
}

/// Whether any permutation of length `n` realizes the pair `(a, b)`:
/// both clues in range and `3 <= a + b <= n + 1`, except that the single
/// building of `n = 1` is seen from both sides with `a + b = 2`.
pub fn support(n: usize, a: usize, b: usize) -> bool {
    assert!(n >= 1, "row length must be positive");
    a >= 1 && b >= 1 && a + b <= n + 1 && (a + b >= 3 || n == 1)
}

/// The full `n x n` matrix of `f_n(a, b)` values, indexed `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkyTable {
    n: usize,
    rows: Vec<Vec<Count>>,
}

impl SkyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `f_n(a, b)`; indices are 1-based like the clue values.
    pub fn get(&self, a: usize, b: usize) -> &Count {
        assert!(
            (1..=self.n).contains(&a) && (1..=self.n).contains(&b),
            "table indices run 1..={}",
            self.n
        );
        &self.rows[a - 1][b - 1]
    }

    /// Row `a` as a slice over `b = 1..=n`.
    pub fn row(&self, a: usize) -> &[Count] {
        assert!((1..=self.n).contains(&a));
        &self.rows[a - 1]
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }

    /// Sum of all entries; equals `n!`.
    pub fn total(&self) -> Count {
        self.rows.iter().flatten().sum()
    }
}

/// Builds the table through the closed form.
pub fn skyscraper_table(n: usize) -> SkyTable {
    assert!(n >= 1, "row length must be positive");
    let table = StirlingTable::shared();
    let stirling = table.row(n - 1);
    let rows = (1..=n)
        .map(|a| {
            (1..=n)
                .map(|b| {
                    let s = a + b - 2;
                    if s > n - 1 {
                        Count::zero()
                    } else {
                        choose(s, a - 1) * stirling[s].clone()
                    }
                })
                .collect()
        })
        .collect();
    SkyTable { n, rows }
}

/// The largest table value for a given `n`, every pair attaining it, and
/// the lexicographically smallest such pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPairReport {
    pub n: usize,
    pub max_value: Count,
    /// All `(a, b)` with `a <= b` attaining the maximum, in lexicographic
    /// order.
    pub pairs: Vec<(usize, usize)>,
    pub canonical_pair: (usize, usize),
}

/// Scans the table over pairs with `a <= b` for the least restrictive pair.
pub fn max_pairs(n: usize) -> MaxPairReport {
    let table = skyscraper_table(n);
    let mut max_value = Count::zero();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let v = table.get(a, b);
            if v.is_zero() {
                // f_n(1, n) = 1, so a zero entry never maximizes.
                continue;
            }
            if *v > max_value {
                max_value = v.clone();
                pairs.clear();
                pairs.push((a, b));
            } else if *v == max_value {
                pairs.push((a, b));
            }
        }
    }
    let canonical_pair = pairs[0];
    MaxPairReport {
        n,
        max_value,
        pairs,
        canonical_pair,
    }
}

/// One term of the skyscraper sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTerm {
    pub n: usize,
    pub max_value: Count,
    pub canonical_pair: (usize, usize),
}

/// Terms for `n = 1..=max_n`: the maximal `f_n` value and its canonical
/// maximizing pair.
pub fn sequence(max_n: usize) -> Vec<SequenceTerm> {
    (1..=max_n)
        .map(|n| {
            let report = max_pairs(n);
            SequenceTerm {
                n,
                max_value: report.max_value,
                canonical_pair: report.canonical_pair,
            }
        })
        .collect()
}

/// `sum_b f_n(a, b)`; equals `c(n, a)`.
pub fn row_sum(n: usize, a: usize) -> Count {
    assert!((1..=n).contains(&a), "row index runs 1..=n");
    (1..=n).map(|b| skyscraper_number_closed(n, a, b)).sum()
}

/// Row sums for a symmetric sanity check against `n!`.
pub fn table_mass(n: usize) -> Count {
    (1..=n).map(|a| row_sum(n, a)).sum()
}
