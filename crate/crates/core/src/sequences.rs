//! k-step Fibonacci numbers and Fibonacci p-numbers.
//!
//! Both sequences are memoized: the cache only ever grows by one index at a
//! time, and every step costs a constant number of big-integer additions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{require_k, require_p, Result};

/// Arbitrary-precision non-negative integer used for every count.
pub type BigNat = BigUint;

/// Memoized `F_n^(k)`: `k - 1` zeros, then `1`, then each term is the sum of
/// the previous `k` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KStepSequence {
    k: usize,
    terms: Vec<BigNat>,
}

impl KStepSequence {
    pub fn new(k: usize) -> Result<Self> {
        require_k(k)?;
        Ok(KStepSequence {
            k,
            terms: Self::seed(k),
        })
    }

    fn seed(k: usize) -> Vec<BigNat> {
        let mut terms = vec![BigNat::zero(); k - 1];
        terms.push(BigNat::one());
        terms
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Terms computed so far, starting at index 0.
    pub fn cached(&self) -> &[BigNat] {
        &self.terms
    }

    pub fn extend_to(&mut self, n: usize) {
        let k = self.k;
        while self.terms.len() <= n {
            let m = self.terms.len();
            let next = if m == k {
                // the only index where the window still holds the seed
                self.terms[..k].iter().sum()
            } else {
                // F_m = 2 F_{m-1} - F_{m-k-1}, never negative
                (&self.terms[m - 1] << 1usize) - &self.terms[m - k - 1]
            };
            self.terms.push(next);
        }
    }

    pub fn term(&mut self, n: usize) -> &BigNat {
        self.extend_to(n);
        &self.terms[n]
    }

    /// `[F_0, ..., F_{n_max}]`.
    pub fn prefix(&mut self, n_max: usize) -> &[BigNat] {
        self.extend_to(n_max);
        &self.terms[..=n_max]
    }

    /// Drops cached terms beyond `len`; the seed segment is always kept.
    pub fn truncate(&mut self, len: usize) {
        self.terms.truncate(len.max(self.k));
    }
}

/// Memoized Fibonacci p-numbers: `F_0 = 0`, `F_1 = ... = F_p = 1`,
/// `F_n = F_{n-1} + F_{n-p-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PStepSequence {
    p: usize,
    terms: Vec<BigNat>,
}

impl PStepSequence {
    pub fn new(p: usize) -> Result<Self> {
        require_p(p)?;
        Ok(PStepSequence {
            p,
            terms: Self::seed(p),
        })
    }

    fn seed(p: usize) -> Vec<BigNat> {
        let mut terms = vec![BigNat::zero()];
        terms.extend(std::iter::repeat_with(BigNat::one).take(p));
        terms
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn cached(&self) -> &[BigNat] {
        &self.terms
    }

    pub fn extend_to(&mut self, n: usize) {
        let p = self.p;
        while self.terms.len() <= n {
            let m = self.terms.len();
            let next = &self.terms[m - 1] + &self.terms[m - p - 1];
            self.terms.push(next);
        }
    }

    pub fn term(&mut self, n: usize) -> &BigNat {
        self.extend_to(n);
        &self.terms[n]
    }

    pub fn prefix(&mut self, n_max: usize) -> &[BigNat] {
        self.extend_to(n_max);
        &self.terms[..=n_max]
    }

    pub fn truncate(&mut self, len: usize) {
        self.terms.truncate(len.max(self.p + 1));
    }
}

/// `F_n^(k)`.
pub fn kstep_fib(k: usize, n: usize) -> Result<BigNat> {
    Ok(KStepSequence::new(k)?.term(n).clone())
}

/// `[F_0^(k), ..., F_{n_max}^(k)]`.
pub fn kstep_fib_range(k: usize, n_max: usize) -> Result<Vec<BigNat>> {
    Ok(KStepSequence::new(k)?.prefix(n_max).to_vec())
}

/// `F_n^p`.
pub fn pstep_fib(p: usize, n: usize) -> Result<BigNat> {
    Ok(PStepSequence::new(p)?.term(n).clone())
}

pub fn pstep_fib_range(p: usize, n_max: usize) -> Result<Vec<BigNat>> {
    Ok(PStepSequence::new(p)?.prefix(n_max).to_vec())
}
