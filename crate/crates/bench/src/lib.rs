//! Benchmarks for lambda-count; see `benches/`.
