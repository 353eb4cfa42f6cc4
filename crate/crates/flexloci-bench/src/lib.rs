//! Benchmark-only crate; see `benches/flexloci.rs`.
