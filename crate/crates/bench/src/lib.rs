//! Shared workloads for the criterion benchmarks.

use fibcube_core::{Family, Method};

/// `(family, n)` pairs large enough for big-integer cost to dominate.
pub fn workloads() -> Vec<(Family, usize)> {
    vec![
        (Family::KOrder(2), 1000),
        (Family::KOrder(3), 1000),
        (Family::KOrder(5), 1000),
        (Family::KOrder(8), 1000),
        (Family::PCube(2), 1000),
    ]
}

pub const METHODS: [Method; 3] = Method::FORMULAS;
