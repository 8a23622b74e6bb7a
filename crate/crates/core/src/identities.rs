//! Validators for the supporting identities behind the convolution and
//! linear edge-count forms. Each validator evaluates both sides from raw sums
//! and sequence terms and reports whether they coincide.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{require_k, Error, Result};
use crate::sequences::{BigNat, KStepSequence};
use crate::size_formulas::KSizes;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    /// `sum_{i=1}^n i 2^(i-1) = (n-1) 2^n + 1`
    #[serde(rename = "L31_i")]
    L31I,
    /// `sum_{i=1}^n i 2^(n-i) + sum_{i=1}^{n-2} i (n-1-i) 2^(n-2-i) = n 2^(n-1)`
    #[serde(rename = "L31_ii")]
    L31Ii,
    /// `F_{n+k-1}` as a three-part weighted sum, parameterised by `t`.
    #[serde(rename = "L33_i")]
    L33I,
    /// `sum_{i=1}^k i F_{n-i} = (2k-1) F_n - F_{n+k-1} + sum_{j=1}^{k-3} j F_{n+k-2-j}`
    #[serde(rename = "L33_ii")]
    L33Ii,
    /// `(k+1) e_n - 2k e_{n-1} = (n+k) F_{n+k-1} - k (n+1) F_{n-1}`
    #[serde(rename = "L34")]
    L34,
    /// `F_n = 2 F_{n+k} - F_{n+k+1}`
    #[serde(rename = "L35")]
    L35,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::L31I,
        IdentityId::L31Ii,
        IdentityId::L33I,
        IdentityId::L33Ii,
        IdentityId::L34,
        IdentityId::L35,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::L31I => "L31_i",
            IdentityId::L31Ii => "L31_ii",
            IdentityId::L33I => "L33_i",
            IdentityId::L33Ii => "L33_ii",
            IdentityId::L34 => "L34",
            IdentityId::L35 => "L35",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheckResult {
    pub identity_id: IdentityId,
    pub params: IdentityParams,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

impl IdentityCheckResult {
    fn new(identity_id: IdentityId, params: IdentityParams, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs == rhs;
        IdentityCheckResult {
            identity_id,
            params,
            lhs,
            rhs,
            holds,
        }
    }
}

impl fmt::Display for IdentityCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.identity_id)?;
        if let Some(k) = self.params.k {
            write!(f, "k={k}, ")?;
        }
        write!(f, "n={}", self.params.n)?;
        if let Some(t) = self.params.t {
            write!(f, ", t={t}")?;
        }
        write!(f, "): {} vs {}", self.lhs, self.rhs)
    }
}

fn int(v: &BigNat) -> BigInt {
    BigInt::from(v.clone())
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn require_n_at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::domain("n", n, format!("n >= {min}{what}")));
    }
    Ok(())
}

pub fn lemma31_i(n: usize) -> Result<IdentityCheckResult> {
    require_n_at_least(n, 1, "")?;
    let lhs: BigInt = (1..=n).map(|i| BigInt::from(i) * pow2(i - 1)).sum();
    let rhs = BigInt::from(n as i64 - 1) * pow2(n) + 1;
    Ok(IdentityCheckResult::new(
        IdentityId::L31I,
        IdentityParams { k: None, n, t: None },
        lhs,
        rhs,
    ))
}

pub fn lemma31_ii(n: usize) -> Result<IdentityCheckResult> {
    require_n_at_least(n, 1, "")?;
    let first: BigInt = (1..=n).map(|i| BigInt::from(i) * pow2(n - i)).sum();
    // empty for n <= 2
    let second: BigInt = (1..=n.saturating_sub(2))
        .map(|i| BigInt::from(i * (n - 1 - i)) * pow2(n - 2 - i))
        .sum();
    let rhs = BigInt::from(n) * pow2(n - 1);
    Ok(IdentityCheckResult::new(
        IdentityId::L31Ii,
        IdentityParams { k: None, n, t: None },
        first + second,
        rhs,
    ))
}

pub fn lemma33_i(k: usize, n: usize, t: usize) -> Result<IdentityCheckResult> {
    if k < 4 {
        return Err(Error::domain("k", k, "k >= 4"));
    }
    require_n_at_least(n, k, " = k")?;
    if t < 1 || t > k - 2 {
        return Err(Error::domain("t", t, format!("1 <= t <= k - 2 = {}", k - 2)));
    }
    let mut seq = KStepSequence::new(k)?;
    let f = seq.prefix(n + k - 1);

    let lhs = int(&f[n + k - 1]);
    // first sum runs j = 1..=k-(t+2) and is empty at t = k-2
    let weighted_head: BigInt = (1..=k - (t + 2))
        .map(|j| BigInt::from(j) * int(&f[n + k - 2 - j]))
        .sum();
    let block: BigInt = (0..t).map(|s| int(&f[n + s])).sum::<BigInt>() * BigInt::from(k - t);
    let tail: BigInt = (1..=k - t)
        .map(|i| BigInt::from(k - i - t + 1) * int(&f[n - i]))
        .sum();
    Ok(IdentityCheckResult::new(
        IdentityId::L33I,
        IdentityParams { k: Some(k), n, t: Some(t) },
        lhs,
        weighted_head + block + tail,
    ))
}

pub fn lemma33_ii(k: usize, n: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    require_n_at_least(n, k, " = k")?;
    let mut seq = KStepSequence::new(k)?;
    let f = seq.prefix(n + k - 1);

    let lhs: BigInt = (1..=k).map(|i| BigInt::from(i) * int(&f[n - i])).sum();
    // trailing sum empty for k <= 3
    let trailing: BigInt = (1..=k.saturating_sub(3))
        .map(|j| BigInt::from(j) * int(&f[n + k - 2 - j]))
        .sum();
    let rhs = BigInt::from(2 * k - 1) * int(&f[n]) - int(&f[n + k - 1]) + trailing;
    Ok(IdentityCheckResult::new(
        IdentityId::L33Ii,
        IdentityParams { k: Some(k), n, t: None },
        lhs,
        rhs,
    ))
}

pub fn lemma34(k: usize, n: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    require_n_at_least(n, 1, "")?;
    let mut sizes = KSizes::new(k)?;
    let lhs = BigInt::from(k + 1) * int(&sizes.iterative(n))
        - BigInt::from(2 * k) * int(&sizes.iterative(n - 1));

    let mut seq = KStepSequence::new(k)?;
    let f = seq.prefix(n + k - 1);
    let rhs = BigInt::from(n + k) * int(&f[n + k - 1]) - BigInt::from(k * (n + 1)) * int(&f[n - 1]);
    Ok(IdentityCheckResult::new(
        IdentityId::L34,
        IdentityParams { k: Some(k), n, t: None },
        lhs,
        rhs,
    ))
}

pub fn lemma35(k: usize, n: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    let mut seq = KStepSequence::new(k)?;
    let f = seq.prefix(n + k + 1);
    let lhs = int(&f[n]);
    let rhs = BigInt::from(2) * int(&f[n + k]) - int(&f[n + k + 1]);
    Ok(IdentityCheckResult::new(
        IdentityId::L35,
        IdentityParams { k: Some(k), n, t: None },
        lhs,
        rhs,
    ))
}

/// Parameter ranges for a sweep over all validators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRanges {
    /// `n` range for both parts of L31.
    pub l31_n_max: usize,
    /// `k` range for L33(i); values below 4 are skipped.
    pub l33_i_k: std::ops::RangeInclusive<usize>,
    pub l33_ii_k: std::ops::RangeInclusive<usize>,
    /// L33 checks `n` in `k..=k + l33_n_span`.
    pub l33_n_span: usize,
    pub l34_k: std::ops::RangeInclusive<usize>,
    pub l34_n_max: usize,
    pub l35_k: std::ops::RangeInclusive<usize>,
    pub l35_n_max: usize,
}

impl Default for SweepRanges {
    fn default() -> Self {
        SweepRanges {
            l31_n_max: 100,
            l33_i_k: 4..=7,
            l33_ii_k: 2..=7,
            l33_n_span: 50,
            l34_k: 2..=6,
            l34_n_max: 100,
            l35_k: 2..=7,
            l35_n_max: 100,
        }
    }
}

impl SweepRanges {
    /// Ranges bounded by a largest `k` and `n`, as used by quick verification runs.
    pub fn bounded(k_max: usize, n_max: usize) -> Self {
        SweepRanges {
            l31_n_max: n_max,
            l33_i_k: 4..=k_max,
            l33_ii_k: 2..=k_max,
            l33_n_span: n_max,
            l34_k: 2..=k_max,
            l34_n_max: n_max,
            l35_k: 2..=k_max,
            l35_n_max: n_max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySweep {
    pub results: Vec<IdentityCheckResult>,
}

#[derive(Serialize)]
struct SweepEntry<'a> {
    identity_id: IdentityId,
    params: &'a IdentityParams,
    holds: bool,
}

#[derive(Serialize)]
struct SweepSummary {
    total: usize,
    held: usize,
    failed: usize,
}

impl IdentitySweep {
    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn held(&self) -> usize {
        self.results.iter().filter(|r| r.holds).count()
    }

    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheckResult> {
        self.results.iter().find(|r| !r.holds)
    }

    /// `{"results": [{identity_id, params, holds}, ...], "summary": {...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<SweepEntry> = self
            .results
            .iter()
            .map(|r| SweepEntry {
                identity_id: r.identity_id,
                params: &r.params,
                holds: r.holds,
            })
            .collect();
        let summary = SweepSummary {
            total: self.total(),
            held: self.held(),
            failed: self.total() - self.held(),
        };
        serde_json::json!({ "results": entries, "summary": summary })
    }
}

impl Serialize for IdentitySweep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

pub fn sweep(ranges: &SweepRanges) -> Result<IdentitySweep> {
    let mut results = Vec::new();
    for n in 1..=ranges.l31_n_max {
        results.push(lemma31_i(n)?);
        results.push(lemma31_ii(n)?);
    }
    for k in ranges.l33_i_k.clone().filter(|&k| k >= 4) {
        for n in k..=k + ranges.l33_n_span {
            for t in 1..=k - 2 {
                results.push(lemma33_i(k, n, t)?);
            }
        }
    }
    for k in ranges.l33_ii_k.clone() {
        for n in k..=k + ranges.l33_n_span {
            results.push(lemma33_ii(k, n)?);
        }
    }
    for k in ranges.l34_k.clone() {
        for n in 1..=ranges.l34_n_max {
            results.push(lemma34(k, n)?);
        }
    }
    for k in ranges.l35_k.clone() {
        for n in 0..=ranges.l35_n_max {
            results.push(lemma35(k, n)?);
        }
    }
    debug_assert!(results.iter().all(|r| r.holds == (r.lhs == r.rhs)));
    Ok(IdentitySweep { results })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(r: &IdentityCheckResult) -> (i64, i64) {
        (r.lhs.to_string().parse().unwrap(), r.rhs.to_string().parse().unwrap())
    }

    #[test]
    fn lemma31_examples() {
        assert_eq!(both(&lemma31_i(1).unwrap()), (1, 1));
        assert_eq!(1 + 4 + 12 + 32, 49);
        assert_eq!(both(&lemma31_i(4).unwrap()), (49, 49));
        assert!(lemma31_i(60).unwrap().holds);

        assert_eq!(both(&lemma31_ii(1).unwrap()), (1, 1));
        assert_eq!(both(&lemma31_ii(2).unwrap()), (4, 4));
        // 1*16+2*8+3*4+4*2+5*1 = 57, plus 1*3*4 + 2*2*2 + 3*1*1 = 23
        assert_eq!(both(&lemma31_ii(5).unwrap()), (80, 80));
        assert!(lemma31_i(0).is_err());
    }

    #[test]
    fn lemma33_examples() {
        assert!(lemma33_i(4, 4, 2).unwrap().holds);
        assert!(lemma33_i(4, 4, 1).unwrap().holds);
        assert!(lemma33_i(5, 7, 3).unwrap().holds);
        assert!(lemma33_i(3, 5, 1).is_err());
        assert!(lemma33_i(5, 7, 4).is_err());
        assert!(lemma33_i(5, 7, 0).is_err());
        assert!(lemma33_i(5, 4, 1).is_err());

        // F_4 + 2 F_3 = 3 F_5 - F_6
        assert_eq!(both(&lemma33_ii(2, 5).unwrap()), (7, 7));
        // F_5 + 2F_4 + 3F_3 = 4 + 4 + 3 and 5 F_6 - F_8 = 35 - 24
        assert_eq!(both(&lemma33_ii(3, 6).unwrap()), (11, 11));
        assert!(lemma33_ii(5, 9).unwrap().holds);
    }

    #[test]
    fn lemma34_examples() {
        assert_eq!(both(&lemma34(2, 1).unwrap()), (3, 3));
        assert_eq!(both(&lemma34(3, 3).unwrap()), (12, 12));
        assert!(lemma34(4, 12).unwrap().holds);
        assert!(lemma34(4, 0).is_err());
    }

    #[test]
    fn lemma35_examples() {
        assert_eq!(both(&lemma35(3, 5).unwrap()), (4, 4));
        assert_eq!(both(&lemma35(2, 0).unwrap()), (0, 0));
        let r = lemma35(5, 11).unwrap();
        assert_eq!(both(&r), (61, 61));
        assert_eq!(2 * 1793 - 3525, 61);
    }

    #[test]
    fn small_sweep_json() {
        let sweep = sweep(&SweepRanges::bounded(4, 2)).unwrap();
        assert!(sweep.all_hold());
        let json = sweep.to_json();
        assert_eq!(json["summary"]["failed"], 0);
        assert_eq!(json["summary"]["total"], sweep.total());
        assert_eq!(json["results"][0], serde_json::json!({"identity_id": "L31_i", "params": {"n": 1}, "holds": true}));
    }
}
