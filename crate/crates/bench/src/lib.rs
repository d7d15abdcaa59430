//! Shared fixtures for the benchmarks.

use garnir_core::{generate_group, RootSystem, SystemPair, WeylGroup};

pub fn group(label: &str) -> WeylGroup {
    generate_group(RootSystem::from_label(label).expect("known label")).expect("small group")
}

/// The G₂ pair `J = {10,32}`, `J′ = {11}`.
pub fn example_pair(g: &WeylGroup) -> SystemPair<'_> {
    let phi = g.root_system();
    let j = phi.parse_roots("10,32").expect("roots of G2");
    let jp = phi.parse_roots("11").expect("roots of G2");
    SystemPair::new(g, &j, &jp).expect("disjoint")
}
