//! Criterion benchmarks for the cycle engine and the connectivity test; see `benches/`.
