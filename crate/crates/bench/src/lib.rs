//! Criterion benchmarks for `idcode-core`; see `benches/`.
