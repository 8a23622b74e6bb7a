use num_traits::{Pow, Zero};

use super::coefficients::exact_quotient;
use crate::error::{require_p, Error, Result};
use crate::sequences::{BigNat, PStepSequence};

/// Edge counts of the Fibonacci p-cube `Γ_n^p` for one fixed `p`.
#[derive(Debug, Clone)]
pub struct PSizes {
    fib: PStepSequence,
    sizes: Vec<BigNat>,
}

impl PSizes {
    pub fn new(p: usize) -> Result<Self> {
        require_p(p)?;
        Ok(PSizes {
            fib: PStepSequence::new(p)?,
            sizes: Vec::new(),
        })
    }

    pub fn p(&self) -> usize {
        self.fib.p()
    }

    /// `|E_n| = |E_{n-1}| + |E_{n-p-1}| + F_n` beyond the star regime
    /// `|E_n| = n` for `n <= p + 1`.
    pub fn iterative(&mut self, n: usize) -> BigNat {
        let p = self.p();
        while self.sizes.len() <= n {
            let m = self.sizes.len();
            let next = if m <= p + 1 {
                BigNat::from(m)
            } else {
                &self.sizes[m - 1] + &self.sizes[m - p - 1] + self.fib.term(m)
            };
            self.sizes.push(next);
        }
        self.sizes[n].clone()
    }

    /// `sum_{i=1}^n F_i F_{n-i+1}`.
    pub fn convolution(&mut self, n: usize) -> BigNat {
        let fib = self.fib.prefix(n.max(1));
        (1..=n).map(|i| &fib[i] * &fib[n - i + 1]).sum()
    }

    pub fn denominator(&self) -> BigNat {
        let p = self.p();
        Pow::pow(BigNat::from(p), p) + Pow::pow(BigNat::from(p + 1), p + 1)
    }

    /// `p^p n F_n + sum_{t=0}^p p^t (p+1)^(p-t) (n+p-t) F_{n-t}`, for `n >= p + 1`.
    pub fn linear_numerator(&mut self, n: usize) -> Result<BigNat> {
        let p = self.p();
        if n < p + 1 {
            return Err(Error::domain("n", n, format!("n >= p + 1 = {} for the linear form", p + 1)));
        }
        let fib = self.fib.prefix(n);
        let pb = BigNat::from(p);
        let qb = BigNat::from(p + 1);
        let mut total: BigNat = Pow::pow(&pb, p) * n * &fib[n];
        for t in 0..=p {
            total += Pow::pow(&pb, t) * Pow::pow(&qb, p - t) * (n + p - t) * &fib[n - t];
        }
        Ok(total)
    }

    pub fn linear(&mut self, n: usize) -> Result<BigNat> {
        let numerator = self.linear_numerator(n)?;
        let denominator = self.denominator();
        debug_assert!(!denominator.is_zero());
        exact_quotient(numerator.into(), &denominator, || {
            format!("p-cube linear form, p = {}, n = {n}", self.p())
        })
    }
}

pub fn pcube_size_iterative(p: usize, n: usize) -> Result<BigNat> {
    Ok(PSizes::new(p)?.iterative(n))
}

pub fn pcube_size_convolution(p: usize, n: usize) -> Result<BigNat> {
    Ok(PSizes::new(p)?.convolution(n))
}

pub fn pcube_size_linear(p: usize, n: usize) -> Result<BigNat> {
    PSizes::new(p)?.linear(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> BigNat {
        BigNat::from(v)
    }

    /// Memo-free recursion, straight from the definition.
    fn naive(p: usize, n: usize) -> u64 {
        fn f(p: usize, n: usize) -> u64 {
            match n {
                0 => 0,
                n if n <= p => 1,
                n => f(p, n - 1) + f(p, n - p - 1),
            }
        }
        if n <= p + 1 {
            n as u64
        } else {
            naive(p, n - 1) + naive(p, n - p - 1) + f(p, n)
        }
    }

    #[test]
    fn iterative_examples() {
        assert_eq!(pcube_size_iterative(1, 10).unwrap(), nat(420));
        assert_eq!(pcube_size_iterative(3, 4).unwrap(), nat(4));
        assert_eq!(naive(2, 12), 330);
        assert_eq!(pcube_size_iterative(2, 12).unwrap(), nat(naive(2, 12)));
    }

    #[test]
    fn linear_examples() {
        assert_eq!(pcube_size_linear(1, 14).unwrap(), nat(3970));
        assert_eq!(pcube_size_linear(2, 3).unwrap(), nat(3));
        assert_eq!(pcube_size_iterative(2, 3).unwrap(), nat(3));
        // (1*2*F_2 + 2*3*F_2 + 1*1*2*F_1) / 5
        assert_eq!((2 + 6 + 2) / 5, 2);
        assert_eq!(pcube_size_linear(1, 2).unwrap(), nat(2));
        assert!(matches!(pcube_size_linear(3, 3), Err(Error::Domain { .. })));
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(pcube_size_convolution(1, 7).unwrap(), nat(71));
        assert_eq!(pcube_size_convolution(4, 5).unwrap(), nat(5));
        assert_eq!(pcube_size_convolution(3, 0).unwrap(), nat(0));
        assert_eq!(
            pcube_size_convolution(2, 15).unwrap(),
            pcube_size_iterative(2, 15).unwrap()
        );
    }

    #[test]
    fn naive_recursion_agrees() {
        for p in 1..=4 {
            let mut s = PSizes::new(p).unwrap();
            for n in 0..=22 {
                assert_eq!(s.iterative(n), nat(naive(p, n)), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn rejects_p_zero() {
        assert!(pcube_size_iterative(0, 3).is_err());
        assert!(pcube_size_convolution(0, 3).is_err());
    }
}
