//! Criterion benchmarks for `k5list`; see `benches/`.
