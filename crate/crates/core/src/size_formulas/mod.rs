//! Edge counts of `Γ_n^(k)` and `Γ_n^p` by every formula family, plus a
//! reconciliation harness over them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cube_graphs::{brute_force_size, Budget};
use crate::error::{Error, Result};
use crate::sequences::BigNat;
use crate::Family;

mod coefficients;
mod kfamily;
mod pfamily;
mod report;

pub use coefficients::{LinearCoefficients, ScaledCoefficients};
pub use kfamily::{
    linear_coefficients, size_convolution, size_iterative, size_iterative_range, size_linear,
    KSizes,
};
pub use pfamily::{
    pcube_size_convolution, pcube_size_iterative, pcube_size_linear, PSizes,
};
pub use report::{cross_check, Discrepancy, SizeReport};

/// How an edge count is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "iter")]
    Iterative,
    #[serde(rename = "conv")]
    Convolution,
    #[serde(rename = "linear")]
    Linear,
    /// Explicit graph construction.
    #[serde(rename = "brute")]
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Iterative,
        Method::Convolution,
        Method::Linear,
        Method::Brute,
    ];
    pub const FORMULAS: [Method; 3] = [Method::Iterative, Method::Convolution, Method::Linear];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Iterative => "iter",
            Method::Convolution => "conv",
            Method::Linear => "linear",
            Method::Brute => "brute",
        }
    }

    /// Smallest `n` at which the method is defined for `family`.
    pub fn domain_start(&self, family: Family) -> usize {
        match (self, family) {
            (Method::Linear, Family::KOrder(k)) => k,
            (Method::Linear, Family::PCube(p)) => p + 1,
            _ => 0,
        }
    }

    pub fn in_domain(&self, family: Family, n: usize) -> bool {
        n >= self.domain_start(family)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}; expected one of iter, conv, linear, brute"))
    }
}

/// One family's formulas behind a single evaluator, caches shared across calls.
#[derive(Debug, Clone)]
pub enum Sizes {
    KOrder(KSizes),
    PCube(PSizes),
}

impl Sizes {
    pub fn new(family: Family) -> Result<Self> {
        Ok(match family {
            Family::KOrder(k) => Sizes::KOrder(KSizes::new(k)?),
            Family::PCube(p) => Sizes::PCube(PSizes::new(p)?),
        })
    }

    pub fn family(&self) -> Family {
        match self {
            Sizes::KOrder(s) => Family::KOrder(s.k()),
            Sizes::PCube(s) => Family::PCube(s.p()),
        }
    }

    /// Evaluates one method. Brute force builds the graph within `budget`.
    pub fn evaluate(&mut self, method: Method, n: usize, budget: Budget) -> Result<BigNat> {
        let family = self.family();
        match (self, method) {
            (Sizes::KOrder(s), Method::Iterative) => Ok(s.iterative(n)),
            (Sizes::KOrder(s), Method::Convolution) => Ok(s.convolution(n)),
            (Sizes::KOrder(s), Method::Linear) => s.linear(n),
            (Sizes::PCube(s), Method::Iterative) => Ok(s.iterative(n)),
            (Sizes::PCube(s), Method::Convolution) => Ok(s.convolution(n)),
            (Sizes::PCube(s), Method::Linear) => s.linear(n),
            (_, Method::Brute) => brute_force_size(family.into(), n, budget),
        }
    }
}

/// Edge count of `family` at `n`.
///
/// With `method = None` the linear form is used where it is defined and the
/// recurrence elsewhere. An explicit method outside its domain is an error.
pub fn size(family: Family, n: usize, method: Option<Method>, budget: Budget) -> Result<BigNat> {
    let mut sizes = Sizes::new(family)?;
    let method = method.unwrap_or(if Method::Linear.in_domain(family, n) {
        Method::Linear
    } else {
        Method::Iterative
    });
    sizes
        .evaluate(method, n, budget)
        .map_err(|e| match e {
            e @ Error::Domain { .. } => e,
            other => other.at(method, n),
        })
}
