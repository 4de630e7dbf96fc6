//! Benchmark-only crate; see the `benches/` targets.

/// Puzzle fixture shared by the solver benchmarks.
pub fn fixture_7x7() -> &'static str {
    include_str!("../../../fixtures/puzzle7.txt")
}
