//! Criterion benchmarks for rspin-core; see `benches/`.
