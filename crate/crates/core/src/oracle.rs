//! Brute-force ground truth: enumerate permutations, read off visibility
//! statistics and cycle counts, and tally the results exhaustively.
//!
//! Nothing in this module consults the counting formulas; the identity
//! suites compare both sides and neither may lean on the other.

use std::collections::BTreeMap;
use std::thread;

use thiserror::Error;

/// Exhaustive enumeration refuses to walk more than `cap!` permutations.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("refusing to enumerate {n}! permutations (cap is n <= {cap}); raise the cap explicitly for a longer run")]
pub struct EnumerationLimit {
    pub n: usize,
    pub cap: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("sequence is not a permutation of 1..={expected_len}")]
pub struct InvalidPermutation {
    pub expected_len: usize,
}

/// Visible-building counts of a line: `left` left-to-right maxima and
/// `right` right-to-left maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VisibilityPair {
    pub left: usize,
    pub right: usize,
}

impl VisibilityPair {
    pub fn swap(self) -> VisibilityPair {
        VisibilityPair {
            left: self.right,
            right: self.left,
        }
    }
}

/// A row of buildings: each height `1..=n` exactly once, one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    heights: Vec<usize>,
}

impl Permutation {
    /// Validates that `heights` is a bijection on `1..=n`.
    pub fn new(heights: Vec<usize>) -> Result<Self, InvalidPermutation> {
        let n = heights.len();
        let mut seen = vec![false; n + 1];
        for &h in &heights {
            if h == 0 || h > n || seen[h] {
                return Err(InvalidPermutation { expected_len: n });
            }
            seen[h] = true;
        }
        Ok(Permutation { heights })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            heights: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn into_heights(self) -> Vec<usize> {
        self.heights
    }

    /// Same buildings walked from the other side.
    pub fn reversed(&self) -> Self {
        let mut heights = self.heights.clone();
        heights.reverse();
        Permutation { heights }
    }
}

/// Left-to-right and right-to-left maxima counts of a raw line. Helper for
/// grids, whose columns are slices rather than `Permutation` values.
pub(crate) fn line_visibility(line: &[usize]) -> VisibilityPair {
    let mut left = 0;
    let mut best = 0;
    for &h in line {
        if h > best {
            best = h;
            left += 1;
        }
    }
    let mut right = 0;
    best = 0;
    for &h in line.iter().rev() {
        if h > best {
            best = h;
            right += 1;
        }
    }
    VisibilityPair { left, right }
}

/// How many buildings are visible from each end of the row.
pub fn visibility(p: &Permutation) -> VisibilityPair {
    line_visibility(&p.heights)
}

/// Number of cycles of the map `i -> heights[i]` on `{1..n}`.
pub fn cycle_count(p: &Permutation) -> usize {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut cycles = 0;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p.heights[i - 1];
        }
    }
    cycles
}

/// Exhaustive tallies over all `n!` permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteCounts {
    pub n: usize,
    /// (left, right) visibility pair -> number of permutations.
    pub by_pair: BTreeMap<(usize, usize), u64>,
    /// left-to-right maxima count -> number of permutations.
    pub by_left: BTreeMap<usize, u64>,
    /// cycle count -> number of permutations.
    pub by_cycles: BTreeMap<usize, u64>,
}

impl BruteCounts {
    fn empty(n: usize) -> Self {
        BruteCounts {
            n,
            by_pair: BTreeMap::new(),
            by_left: BTreeMap::new(),
            by_cycles: BTreeMap::new(),
        }
    }

    fn absorb(&mut self, other: BruteCounts) {
        for (k, v) in other.by_pair {
            *self.by_pair.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.by_left {
            *self.by_left.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.by_cycles {
            *self.by_cycles.entry(k).or_insert(0) += v;
        }
    }

    pub fn pair(&self, left: usize, right: usize) -> u64 {
        self.by_pair.get(&(left, right)).copied().unwrap_or(0)
    }
}

/// `n!` as a machine word; enumeration ranks must fit.
fn factorial_u64(n: usize) -> u64 {
    assert!(n <= 20, "rank arithmetic overflows u64 beyond 20!");
    (2..=n as u64).product::<u64>().max(1)
}

/// Steps `items` to its lexicographic successor. Returns false from the
/// final arrangement.
fn next_permutation(items: &mut [usize]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Permutation of `1..=n` at lexicographic `rank` (0-based), via the
/// factorial number system.
fn nth_permutation(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial_u64(i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

fn sweep_range(n: usize, from: u64, to: u64) -> BruteCounts {
    let mut counts = BruteCounts::empty(n);
    if from >= to {
        return counts;
    }
    let mut heights = nth_permutation(n, from);
    for _ in from..to {
        let vis = line_visibility(&heights);
        *counts.by_pair.entry((vis.left, vis.right)).or_insert(0) += 1;
        *counts.by_left.entry(vis.left).or_insert(0) += 1;
        let p = Permutation {
            heights: heights.clone(),
        };
        *counts.by_cycles.entry(cycle_count(&p)).or_insert(0) += 1;
        next_permutation(&mut heights);
    }
    counts
}

/// Exhaustive tallies over all `n!` permutations, `n` capped at
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn brute_counts(n: usize) -> Result<BruteCounts, EnumerationLimit> {
    brute_counts_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// Same as [`brute_counts`] with an explicit cap for deliberate longer runs.
pub fn brute_counts_capped(n: usize, cap: usize) -> Result<BruteCounts, EnumerationLimit> {
    if n > cap {
        return Err(EnumerationLimit { n, cap });
    }
    let parts = thread::available_parallelism().map_or(1, |p| p.get());
    Ok(brute_counts_partitioned(n, parts))
}

/// Splits rank space `0..n!` into `parts` contiguous ranges, tallies each
/// independently, and merges the partial sums in range order. The result is
/// identical for every partitioning.
pub fn brute_counts_partitioned(n: usize, parts: usize) -> BruteCounts {
    let total = factorial_u64(n);
    let parts = parts.clamp(1, 64) as u64;
    let bounds: Vec<(u64, u64)> = (0..parts)
        .map(|i| (i * total / parts, (i + 1) * total / parts))
        .collect();
    let mut merged = BruteCounts::empty(n);
    if parts == 1 {
        merged.absorb(sweep_range(n, 0, total));
        return merged;
    }
    let partials: Vec<BruteCounts> = thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(from, to)| scope.spawn(move || sweep_range(n, from, to)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for part in partials {
        merged.absorb(part);
    }
    merged
}

/// All permutations of length `n` matching the given visibility clues, in
/// lexicographic order.
///
/// An absent clue leaves that side unconstrained. With `limit` present the
/// walk stops after `limit` matches; without it, `n` is capped at
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_rows(
    n: usize,
    left_clue: Option<usize>,
    right_clue: Option<usize>,
    limit: Option<usize>,
) -> Result<Vec<Permutation>, EnumerationLimit> {
    if limit.is_none() && n > DEFAULT_ENUMERATION_CAP {
        return Err(EnumerationLimit {
            n,
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }
    let cap = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if n == 0 || cap == 0 {
        return Ok(out);
    }
    let mut heights: Vec<usize> = (1..=n).collect();
    loop {
        let vis = line_visibility(&heights);
        let ok = left_clue.map_or(true, |a| vis.left == a)
            && right_clue.map_or(true, |b| vis.right == b);
        if ok {
            out.push(Permutation {
                heights: heights.clone(),
            });
            if out.len() >= cap {
                break;
            }
        }
        if !next_permutation(&mut heights) {
            break;
        }
    }
    Ok(out)
}
