//! Structural check of the partition of `V(Γ_n^(k))` into the blocks
//! `1^i 0 V(Γ_{n-i-1}^(k))`, `i = 0..k-1`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{construct, BitString, Budget, FamilyTag};
use crate::error::{require_k, Error, Result};
use crate::sequences::{BigNat, KStepSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionBlock {
    /// Number of leading 1s in the block prefix `1^i 0`.
    pub ones: usize,
    pub size: usize,
    /// `F_{n-i-1+k}^(k)`.
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub expected_size: BigNat,
    /// Prefix-stripped block equals the independently built `Γ_{n-i-1}^(k)`.
    pub isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub k: usize,
    pub n: usize,
    pub order: usize,
    pub blocks: Vec<DecompositionBlock>,
    pub disjoint: bool,
    pub exhaustive: bool,
    pub failures: Vec<String>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type EdgeSet = BTreeSet<(u64, u64)>;

pub fn check_decomposition(k: usize, n: usize, budget: Budget) -> Result<DecompositionReport> {
    require_k(k)?;
    if n < k {
        return Err(Error::domain("n", n, format!("n >= k (k = {k})")));
    }
    let family = FamilyTag::KOrder(k);
    let graph = construct(family, n, budget)?;
    let mut fib = KStepSequence::new(k)?;
    let mut failures = Vec::new();

    // membership of every vertex in every block, tested independently per block
    let prefix_of = |i: usize| -> BitString {
        let code = ((1u64 << i) - 1) << 1;
        BitString::from_parts(i + 1, code)
    };
    let in_block = |v: &BitString, i: usize| -> bool {
        let shift = v.len() - (i + 1);
        v.code() >> shift == prefix_of(i).code()
    };

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut disjoint = true;
    let mut exhaustive = true;
    for (idx, v) in graph.vertices().iter().enumerate() {
        let hits: Vec<usize> = (0..k).filter(|&i| in_block(v, i)).collect();
        match hits.len() {
            0 => {
                exhaustive = false;
                failures.push(format!("vertex {v} lies in no block"));
            }
            1 => members[hits[0]].push(idx),
            _ => {
                disjoint = false;
                failures.push(format!("vertex {v} lies in blocks {hits:?}"));
            }
        }
    }

    let mut blocks = Vec::with_capacity(k);
    for (i, idxs) in members.iter().enumerate() {
        let rest = n - i - 1;
        let expected_size = fib.term(rest + k).clone();
        if BigNat::from(idxs.len()) != expected_size {
            failures.push(format!(
                "block 1^{i}0 has {} vertices, expected F_{}^({k}) = {expected_size}",
                idxs.len(),
                rest + k
            ));
        }

        let strip = |v: &BitString| v.strip_prefix(i + 1);
        let stripped: Vec<BitString> = idxs.iter().map(|&x| strip(&graph.vertices()[x])).collect();
        let inside: BTreeSet<usize> = idxs.iter().copied().collect();
        let block_edges: EdgeSet = graph
            .edges()
            .iter()
            .filter(|(a, b)| inside.contains(a) && inside.contains(b))
            .map(|&(a, b)| (strip(&graph.vertices()[a]).code(), strip(&graph.vertices()[b]).code()))
            .collect();

        let smaller = construct(family, rest, budget)?;
        let smaller_edges: EdgeSet = smaller
            .edges()
            .iter()
            .map(|&(a, b)| (smaller.vertices()[a].code(), smaller.vertices()[b].code()))
            .collect();
        let isomorphic = stripped == smaller.vertices() && block_edges == smaller_edges;
        if !isomorphic {
            failures.push(format!(
                "block 1^{i}0 does not reduce to the cube of dimension {rest} by stripping its prefix"
            ));
        }

        blocks.push(DecompositionBlock {
            ones: i,
            size: idxs.len(),
            expected_size,
            isomorphic,
        });
    }

    let total: usize = blocks.iter().map(|b| b.size).sum();
    if total != graph.order() {
        failures.push(format!("block sizes sum to {total}, order is {}", graph.order()));
    }
    let order_expected = fib.term(n + k).clone();
    if BigNat::from(graph.order()) != order_expected {
        failures.push(format!(
            "order {} differs from F_{}^({k}) = {order_expected}",
            graph.order(),
            n + k
        ));
    }

    Ok(DecompositionReport {
        k,
        n,
        order: graph.order(),
        blocks,
        disjoint,
        exhaustive,
        failures,
    })
}
