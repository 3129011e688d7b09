//! Criterion benchmarks for `coxinv-core`; run with `cargo bench -p coxinv-bench`.
