//! Criterion benchmarks for the theta, lattice, resultant and contour engines; see `benches/engines.rs`.
