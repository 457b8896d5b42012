//! Criterion benchmarks for the cobasis crate live under `benches/`.
