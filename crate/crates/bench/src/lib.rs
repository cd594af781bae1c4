//! Criterion benchmarks for springer-core live in `benches/`.
