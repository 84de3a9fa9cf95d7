//! Benchmark fixtures for `atlas-core`. The benchmarks themselves live in
//! `benches/`.

use atlas_core::{LatticeVector, SubsystemConfig};

/// The nodal vanishing cycle 2e0 - e1 - ... - e6.
pub fn nodal_cycle() -> LatticeVector {
    LatticeVector::new([2, -1, -1, -1, -1, -1, -1])
}

/// The 21 singularity configurations in table order.
pub fn table_configs() -> Vec<SubsystemConfig> {
    atlas_core::atlas::PUBLISHED_TABLE1
        .iter()
        .map(|row| row.config.parse().expect("published labels parse"))
        .collect()
}
