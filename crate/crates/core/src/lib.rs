//! Orders and sizes of k-th order Fibonacci cubes `Γ_n^(k)` and Fibonacci
//! p-cubes `Γ_n^p`, computed in exact arithmetic.
//!
//! Every edge count is available through several independent formula
//! families (iterative, convolution, linear) and can be reconciled against an
//! explicit graph construction with [`size_formulas::cross_check`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub mod cube_graphs;
mod decimal;
pub mod error;
pub mod golden;
pub mod identities;
pub mod sequences;
pub mod size_formulas;

pub use cube_graphs::{BitString, Budget, CubeGraph, FamilyTag};
pub use error::{Error, Result};
pub use sequences::{kstep_fib, kstep_fib_range, pstep_fib, pstep_fib_range, BigNat};
pub use sequences::{KStepSequence, PStepSequence};
pub use size_formulas::{cross_check, size, LinearCoefficients, Method, SizeReport};

/// A cube family whose edge count has closed formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    KOrder(usize),
    PCube(usize),
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::KOrder(k) => error::require_k(k),
            Family::PCube(p) => error::require_p(p),
        }
    }

    /// `k` or `p`.
    pub fn parameter(&self) -> usize {
        match *self {
            Family::KOrder(k) | Family::PCube(k) => k,
        }
    }

    /// `k_order` or `p_cube`.
    pub fn kind(&self) -> &'static str {
        match self {
            Family::KOrder(_) => "k_order",
            Family::PCube(_) => "p_cube",
        }
    }

    /// Number of vertices: `F_{n+k}^(k)` or `F_{n+p+1}^p`.
    pub fn order(&self, n: usize) -> Result<BigNat> {
        match *self {
            Family::KOrder(k) => kstep_fib(k, n + k),
            Family::PCube(p) => pstep_fib(p, n + p + 1),
        }
    }
}

impl From<Family> for FamilyTag {
    fn from(f: Family) -> Self {
        match f {
            Family::KOrder(k) => FamilyTag::KOrder(k),
            Family::PCube(p) => FamilyTag::PCube(p),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::KOrder(k) => write!(f, "k={k}"),
            Family::PCube(p) => write!(f, "p={p}"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    /// Parses `k=3` / `p=2`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, value) = s
            .split_once('=')
            .ok_or_else(|| format!("expected k=<int> or p=<int>, got {s:?}"))?;
        let value: usize = value.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
        match kind.trim() {
            "k" => Ok(Family::KOrder(value)),
            "p" => Ok(Family::PCube(value)),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}
