use num_bigint::BigInt;
use num_traits::Zero;

use super::coefficients::LinearCoefficients;
use crate::error::{require_k, Error, Result};
use crate::sequences::{BigNat, KStepSequence};

/// Edge counts of `Γ_n^(k)` for one fixed `k`, sharing a single sequence
/// cache and a memo of iteratively computed sizes across calls.
#[derive(Debug, Clone)]
pub struct KSizes {
    fib: KStepSequence,
    sizes: Vec<BigNat>,
    coefficients: Option<LinearCoefficients>,
}

impl KSizes {
    pub fn new(k: usize) -> Result<Self> {
        require_k(k)?;
        Ok(KSizes {
            fib: KStepSequence::new(k)?,
            sizes: Vec::new(),
            coefficients: None,
        })
    }

    pub fn k(&self) -> usize {
        self.fib.k()
    }

    /// `e_n` by the size recurrence
    /// `e_n = sum_{i=1}^k e_{n-i} + sum_{i=2}^k (i-1) F_{n-i+k}` for `n >= k`,
    /// seeded with `e_n = n 2^(n-1)` below `k`.
    pub fn iterative(&mut self, n: usize) -> BigNat {
        let k = self.k();
        while self.sizes.len() <= n {
            let m = self.sizes.len();
            let next = if m < k {
                if m == 0 {
                    BigNat::zero()
                } else {
                    BigNat::from(m) << (m - 1)
                }
            } else {
                let fib = self.fib.prefix(m + k - 2);
                let previous: BigNat = self.sizes[m - k..].iter().sum();
                let correction: BigNat = (2..=k).map(|i| &fib[m - i + k] * (i - 1)).sum();
                previous + correction
            };
            self.sizes.push(next);
        }
        self.sizes[n].clone()
    }

    /// `e_n = sum_{j=1}^{k-1} j sum_{i=k-1}^{n+k-1-j} F_i F_{n+2k-2-j-i}`.
    /// Inner sums with an empty index range contribute nothing, so `n = 0` gives 0.
    pub fn convolution(&mut self, n: usize) -> BigNat {
        let k = self.k();
        let fib = self.fib.prefix(n + k);
        let mut total = BigNat::zero();
        for j in 1..k {
            let upper = n + k - 1;
            if upper < j + (k - 1) {
                continue;
            }
            let mut inner = BigNat::zero();
            for i in k - 1..=upper - j {
                inner += &fib[i] * &fib[n + 2 * k - 2 - j - i];
            }
            total += inner * j;
        }
        total
    }

    pub fn coefficients(&mut self) -> &LinearCoefficients {
        let k = self.k();
        self.coefficients
            .get_or_insert_with(|| LinearCoefficients::new(k).expect("k validated"))
    }

    /// Numerator of the linear form before division by `D(k)`.
    pub fn linear_numerator(&mut self, n: usize) -> Result<BigInt> {
        self.require_linear_domain(n)?;
        let k = self.k();
        self.fib.extend_to(n + k - 1);
        let coeffs = self.coefficients().clone();
        Ok(coeffs.numerator(n, self.fib.cached()))
    }

    /// `e_n` by the linear form, defined for `n >= k`.
    pub fn linear(&mut self, n: usize) -> Result<BigNat> {
        self.require_linear_domain(n)?;
        let k = self.k();
        self.fib.extend_to(n + k - 1);
        if self.coefficients.is_none() {
            self.coefficients = Some(LinearCoefficients::new(k)?);
        }
        let coeffs = self.coefficients.as_ref().unwrap();
        coeffs.evaluate(n, self.fib.cached())
    }

    fn require_linear_domain(&self, n: usize) -> Result<()> {
        let k = self.k();
        if n < k {
            return Err(Error::domain("n", n, format!("n >= k = {k} for the linear form")));
        }
        Ok(())
    }
}

/// `e_n^(k)` by the size recurrence.
pub fn size_iterative(k: usize, n: usize) -> Result<BigNat> {
    Ok(KSizes::new(k)?.iterative(n))
}

/// `[e_0^(k), ..., e_{n_max}^(k)]` by the size recurrence.
pub fn size_iterative_range(k: usize, n_max: usize) -> Result<Vec<BigNat>> {
    let mut sizes = KSizes::new(k)?;
    sizes.iterative(n_max);
    Ok(sizes.sizes)
}

/// `e_n^(k)` by the convolution of k-step Fibonacci numbers.
pub fn size_convolution(k: usize, n: usize) -> Result<BigNat> {
    Ok(KSizes::new(k)?.convolution(n))
}

/// `e_n^(k)` as a linear combination of `k` consecutive k-step Fibonacci numbers, `n >= k`.
pub fn size_linear(k: usize, n: usize) -> Result<BigNat> {
    KSizes::new(k)?.linear(n)
}

pub fn linear_coefficients(k: usize) -> Result<LinearCoefficients> {
    LinearCoefficients::new(k)
}
