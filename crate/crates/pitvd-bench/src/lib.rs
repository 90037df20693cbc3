//! Benchmarks for the kernel pipeline live in `benches/`.
