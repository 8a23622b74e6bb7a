use std::fmt;

use serde::{Deserialize, Serialize};

use super::BitString;
use crate::error::{require_k, require_p, Error, Result};
use crate::sequences::BigNat;

/// Which induced subgraph of the hypercube a vertex set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    /// Words avoiding `1^k`.
    KOrder(usize),
    /// Words whose 1s are separated by at least `p` zeros.
    PCube(usize),
    Hypercube,
}

impl FamilyTag {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyTag::KOrder(k) => require_k(k),
            FamilyTag::PCube(p) => require_p(p),
            FamilyTag::Hypercube => Ok(()),
        }
    }

    pub fn admits(&self, word: &BitString) -> bool {
        match *self {
            FamilyTag::KOrder(k) => !word.contains_run_of_ones(k),
            FamilyTag::PCube(p) => word.ones_separated_by(p),
            FamilyTag::Hypercube => true,
        }
    }

    /// Short identifier used in exported graph names: `k3`, `p2`, `Q`.
    pub fn label(&self) -> String {
        match *self {
            FamilyTag::KOrder(k) => format!("k{k}"),
            FamilyTag::PCube(p) => format!("p{p}"),
            FamilyTag::Hypercube => "Q".to_string(),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyTag::KOrder(k) => write!(f, "k-order Fibonacci cube (k = {k})"),
            FamilyTag::PCube(p) => write!(f, "Fibonacci p-cube (p = {p})"),
            FamilyTag::Hypercube => f.write_str("hypercube"),
        }
    }
}

/// Upper bound on the number of candidate strings an enumeration may scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 22);
    pub const ENV_VAR: &'static str = "FIBCUBE_BUDGET";

    /// Reads `FIBCUBE_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> std::result::Result<Budget, String> {
        match std::env::var(Self::ENV_VAR) {
            Ok(raw) => raw
                .trim()
                .parse::<u64>()
                .map(Budget)
                .map_err(|e| format!("{}={raw:?}: {e}", Self::ENV_VAR)),
            Err(std::env::VarError::NotPresent) => Ok(Self::DEFAULT),
            Err(e) => Err(format!("{}: {e}", Self::ENV_VAR)),
        }
    }

    pub fn admits(&self, n: usize) -> bool {
        n <= BitString::MAX_LEN && (1u64 << n) <= self.0
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.admits(n) {
            Ok(())
        } else {
            Err(Error::BudgetExceeded { n, budget: self.0 })
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// An induced subgraph of `Q_n` with canonically ordered vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeGraph {
    n: usize,
    family: FamilyTag,
    vertices: Vec<BitString>,
    edges: Vec<(usize, usize)>,
}

impl CubeGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn vertices(&self) -> &[BitString] {
        &self.vertices
    }

    /// Index pairs `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, word: &BitString) -> Option<usize> {
        self.vertices.binary_search(word).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }
}

/// All length-`n` words of `family`, in canonical order.
pub fn enumerate_vertices(family: FamilyTag, n: usize, budget: Budget) -> Result<Vec<BitString>> {
    family.validate()?;
    budget.check(n)?;
    Ok((0..1u64 << n)
        .map(|code| BitString::from_parts(n, code))
        .filter(|w| family.admits(w))
        .collect())
}

pub fn enumerate_k_vertices(k: usize, n: usize, budget: Budget) -> Result<Vec<BitString>> {
    enumerate_vertices(FamilyTag::KOrder(k), n, budget)
}

pub fn enumerate_p_vertices(p: usize, n: usize, budget: Budget) -> Result<Vec<BitString>> {
    enumerate_vertices(FamilyTag::PCube(p), n, budget)
}

/// Builds the subgraph of `Q_n` induced by `vertices`.
///
/// Neighbours are found by flipping each bit and binary-searching the sorted
/// vertex list; a pair is kept only from its smaller endpoint.
pub fn build_graph(vertices: Vec<BitString>, n: usize, family: FamilyTag) -> Result<CubeGraph> {
    family.validate()?;
    for (idx, v) in vertices.iter().enumerate() {
        if v.len() != n {
            return Err(Error::Consistency(format!(
                "vertex {v} at position {idx} has length {}, expected {n}",
                v.len()
            )));
        }
        if !family.admits(v) {
            return Err(Error::Consistency(format!("vertex {v} is not a member of the {family}")));
        }
    }
    if let Some(w) = vertices.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::Consistency(format!(
            "vertices must be strictly increasing, found {} before {}",
            w[0], w[1]
        )));
    }

    let mut edges = Vec::new();
    let mut row = Vec::with_capacity(n);
    for (i, v) in vertices.iter().enumerate() {
        row.clear();
        for b in 0..n {
            let code = v.code() ^ (1u64 << b);
            if code < v.code() {
                continue;
            }
            if let Ok(j) = vertices.binary_search(&BitString::from_parts(n, code)) {
                row.push(j);
            }
        }
        row.sort_unstable();
        edges.extend(row.iter().map(|&j| (i, j)));
    }

    Ok(CubeGraph {
        n,
        family,
        vertices,
        edges,
    })
}

/// Enumerates and builds `family`'s graph of dimension `n`.
pub fn construct(family: FamilyTag, n: usize, budget: Budget) -> Result<CubeGraph> {
    let vertices = enumerate_vertices(family, n, budget)?;
    build_graph(vertices, n, family)
}

/// Edge count of the explicitly constructed graph.
pub fn brute_force_size(family: FamilyTag, n: usize, budget: Budget) -> Result<BigNat> {
    Ok(BigNat::from(construct(family, n, budget)?.size()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[&str]) -> Vec<BitString> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn as_strings(v: &[BitString]) -> Vec<String> {
        v.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn k_vertex_examples() {
        let b = Budget::default();
        assert_eq!(as_strings(&enumerate_k_vertices(3, 2, b).unwrap()), ["00", "01", "10", "11"]);
        assert_eq!(enumerate_k_vertices(2, 0, b).unwrap(), vec![BitString::empty()]);
        let v = enumerate_k_vertices(2, 4, b).unwrap();
        assert_eq!(v.len(), 8);
        assert!(v.iter().all(|w| !w.to_string().contains("11")));
    }

    #[test]
    fn p_vertex_examples() {
        let b = Budget::default();
        assert_eq!(as_strings(&enumerate_p_vertices(2, 3, b).unwrap()), ["000", "001", "010", "100"]);
        assert_eq!(as_strings(&enumerate_p_vertices(1, 2, b).unwrap()), ["00", "01", "10"]);
        let v = enumerate_p_vertices(3, 3, b).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|w| w.ones() <= 1));
    }

    #[test]
    fn build_examples() {
        let b = Budget::default();
        let q3 = construct(FamilyTag::Hypercube, 3, b).unwrap();
        assert_eq!(q3.size(), 12);
        assert_eq!(construct(FamilyTag::KOrder(3), 5, b).unwrap().size(), 50);
        for k in 2..=6 {
            assert_eq!(construct(FamilyTag::KOrder(k), 1, b).unwrap().size(), 1);
        }
        let g = construct(FamilyTag::KOrder(2), 0, b).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn brute_force_examples() {
        let b = Budget::default();
        assert_eq!(brute_force_size(FamilyTag::KOrder(4), 9, b).unwrap(), BigNat::from(1624u32));
        assert_eq!(brute_force_size(FamilyTag::KOrder(2), 13, b).unwrap(), BigNat::from(2285u32));
    }

    #[test]
    fn rejects_unsorted_duplicate_or_foreign_vertices() {
        let fam = FamilyTag::Hypercube;
        assert!(matches!(build_graph(words(&["01", "00"]), 2, fam), Err(Error::Consistency(_))));
        assert!(matches!(build_graph(words(&["01", "01"]), 2, fam), Err(Error::Consistency(_))));
        assert!(matches!(build_graph(words(&["01", "100"]), 2, fam), Err(Error::Consistency(_))));
        assert!(matches!(
            build_graph(words(&["00", "11"]), 2, FamilyTag::KOrder(2)),
            Err(Error::Consistency(_))
        ));
    }

    #[test]
    fn budget_is_a_typed_error() {
        let tight = Budget(1 << 10);
        assert!(construct(FamilyTag::KOrder(2), 10, tight).is_ok());
        assert_eq!(
            construct(FamilyTag::KOrder(2), 11, tight),
            Err(Error::BudgetExceeded { n: 11, budget: 1 << 10 })
        );
        assert!(matches!(
            construct(FamilyTag::Hypercube, 64, Budget(u64::MAX)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn edges_are_canonical() {
        let g = construct(FamilyTag::KOrder(3), 7, Budget::default()).unwrap();
        assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
        for &(i, j) in g.edges() {
            assert!(i < j);
            assert_eq!(g.vertices()[i].hamming(&g.vertices()[j]), 1);
        }
    }
}
