//! Benchmark harness for homforge kernels; see `benches/`.
