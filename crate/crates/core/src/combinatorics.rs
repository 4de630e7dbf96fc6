//! Exact-arithmetic primitives: factorials, binomial coefficients, and a
//! memoized triangle of unsigned Stirling numbers of the first kind.
//!
//! Everything here is integer-exact. `c(n, a)` counts permutations of length
//! `n` with exactly `a` left-to-right maxima (equivalently, with `a` cycles),
//! and satisfies
//!
//! ```text
//! c(n, a) = c(n-1, a-1) + (n-1) * c(n-1, a)
//! ```
//!
//! with `c(0, 0) = 1`, `c(n, 0) = 0` for `n >= 1`, and `c(n, a) = 0` for
//! `a > n`.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer used for every count in this
/// crate. Values outgrow `u64` quickly (row sums are `n!`).
pub type Count = BigUint;

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> Count {
    let mut acc = Count::one();
    for i in 2..=n {
        acc *= Count::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: isize) -> Count {
    if k < 0 || k as usize > n {
        return Count::zero();
    }
    choose(n, k as usize)
}

/// In-range binomial used internally once indices are known nonnegative.
pub(crate) fn choose(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= Count::from(n - i);
        acc /= Count::from(i + 1);
    }
    acc
}

/// Memoized triangle of unsigned Stirling numbers of the first kind.
///
/// Rows are built on demand by the two-term recurrence and published behind
/// an `Arc`; once a row is visible it never changes, so readers may hold it
/// concurrently while later rows are appended. Building the same row from
/// several threads is idempotent.
pub struct StirlingTable {
    rows: RwLock<Vec<Arc<Vec<Count>>>>,
}

impl StirlingTable {
    /// Empty table; rows appear as they are first requested.
    pub fn new() -> Self {
        StirlingTable {
            rows: RwLock::new(Vec::new()),
        }
    }

    /// The process-wide table shared by every consumer in this crate.
    pub fn shared() -> &'static StirlingTable {
        static SHARED: OnceLock<StirlingTable> = OnceLock::new();
        SHARED.get_or_init(StirlingTable::new)
    }

    /// Largest `n` for which a row has been built so far.
    pub fn max_n(&self) -> Option<usize> {
        let rows = self.rows.read().unwrap();
        rows.len().checked_sub(1)
    }

    /// Row `n` of the triangle: `[c(n,0), c(n,1), ..., c(n,n)]`.
    pub fn row(&self, n: usize) -> Arc<Vec<Count>> {
        {
            let rows = self.rows.read().unwrap();
            if let Some(row) = rows.get(n) {
                return Arc::clone(row);
            }
        }
        let mut rows = self.rows.write().unwrap();
        // Another writer may have raced us here; extending is idempotent.
        while rows.len() <= n {
            let next = match rows.last() {
                None => vec![Count::one()],
                Some(prev) => {
                    let m = rows.len(); // building row m from row m-1
                    let mut row = vec![Count::zero(); m + 1];
                    let weight = Count::from(m - 1);
                    for a in 1..=m {
                        let mut v = prev[a - 1].clone();
                        if a < m {
                            v += &prev[a] * &weight;
                        }
                        row[a] = v;
                    }
                    row
                }
            };
            rows.push(Arc::new(next));
        }
        Arc::clone(&rows[n])
    }

    /// `c(n, a)`, zero outside the triangle.
    pub fn value(&self, n: usize, a: usize) -> Count {
        if a > n {
            return Count::zero();
        }
        self.row(n)[a].clone()
    }
}

impl Default for StirlingTable {
    fn default() -> Self {
        StirlingTable::new()
    }
}

/// Unsigned Stirling number of the first kind `c(n, a)` from the shared
/// memo table. Zero outside the triangle `0 <= a <= n`.
pub fn stirling_first_unsigned(n: usize, a: usize) -> Count {
    StirlingTable::shared().value(n, a)
}

/// Row `n` of the Stirling triangle as an owned list `[c(n,0), ..., c(n,n)]`.
pub fn stirling_row(n: usize) -> Vec<Count> {
    StirlingTable::shared().row(n).as_ref().clone()
}

/// Coefficients `[e_0, ..., e_n]` of `x^0 .. x^n` in the expansion of
/// `(x+1)(x+2)...(x+n)`. These satisfy `e_k = c(n+1, k+1)`.
pub fn rising_factorial_coeffs(n: usize) -> Vec<Count> {
    let mut coeffs = vec![Count::one()];
    for i in 1..=n {
        let mut next = vec![Count::zero(); coeffs.len() + 1];
        let factor = Count::from(i);
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += c * &factor;
            next[k + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}
