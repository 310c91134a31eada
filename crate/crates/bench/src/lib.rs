//! Benchmarks for `renner-core` live in `benches/`; run them with
//! `cargo bench -p renner-bench`.
