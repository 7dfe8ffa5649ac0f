//! Criterion benchmarks for the mvvol recursions live in `benches/`.
