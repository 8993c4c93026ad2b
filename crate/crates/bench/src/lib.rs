//! Criterion benchmarks for the exhaustive searches; see `benches/search.rs`.
