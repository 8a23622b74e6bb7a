use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};
use serde::Serialize;

use crate::error::{require_k, Error, Result};
use crate::sequences::BigNat;

/// Exact coefficients of the linear edge-count form
///
/// ```text
/// e_n^(k) = sum_{j=0}^{k-1} (n A_j + B_j) F_{n+j}^(k) / D(k),   D(k) = 2 (2k)^k - (k+1)^(k+1)
/// ```
///
/// Values are stored unreduced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearCoefficients {
    pub k: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub denominator: BigNat,
    #[serde(serialize_with = "ser_ints")]
    pub a: Vec<BigInt>,
    #[serde(serialize_with = "ser_ints")]
    pub b: Vec<BigInt>,
}

/// The same coefficients divided by a common factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledCoefficients {
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub factor: BigNat,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub denominator: BigNat,
    #[serde(serialize_with = "ser_ints")]
    pub a: Vec<BigInt>,
    #[serde(serialize_with = "ser_ints")]
    pub b: Vec<BigInt>,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn pow(base: usize, exp: usize) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

impl LinearCoefficients {
    pub fn new(k: usize) -> Result<Self> {
        require_k(k)?;
        let two_k_pow_k = pow(2 * k, k);
        let k1_pow_k = pow(k + 1, k);
        let km1 = BigInt::from(k - 1);
        let kb = BigInt::from(k);

        let denominator = (BigInt::from(2) * &two_k_pow_k - pow(k + 1, k + 1))
            .to_biguint()
            .expect("denominator is positive for k >= 2");

        let common_a = &two_k_pow_k - &kb * &k1_pow_k;
        let a = (0..k)
            .map(|j| &common_a + &km1 * pow(k + 1, j) * pow(2 * k, k - j - 1))
            .collect();
        let b = (0..k)
            .map(|j| {
                pow(2 * k, k - j - 1) * pow(k + 1, j) * BigInt::from(3 * k + (k - 1) * j - 1)
                    - &kb * &k1_pow_k
            })
            .collect();

        Ok(LinearCoefficients { k, denominator, a, b })
    }

    /// `sum_j (n A_j + B_j) F_{n+j}` given `fib[i] = F_i^(k)` for `i <= n + k - 1`.
    pub fn numerator(&self, n: usize, fib: &[BigNat]) -> BigInt {
        let nb = BigInt::from(n);
        (0..self.k)
            .map(|j| {
                let coeff = &nb * &self.a[j] + &self.b[j];
                coeff * BigInt::from_biguint(Sign::Plus, fib[n + j].clone())
            })
            .sum()
    }

    /// Divides the numerator by `D(k)`, refusing to round.
    pub fn evaluate(&self, n: usize, fib: &[BigNat]) -> Result<BigNat> {
        exact_quotient(
            self.numerator(n, fib),
            &self.denominator,
            || format!("linear form, k = {}, n = {n}", self.k),
        )
    }

    /// Largest factor dividing the denominator and every `A_j`, `B_j`.
    pub fn common_factor(&self) -> BigNat {
        let g = self
            .a
            .iter()
            .chain(&self.b)
            .fold(BigInt::from(self.denominator.clone()), |g, c| g.gcd(c));
        g.magnitude().clone()
    }

    pub fn reduced(&self) -> ScaledCoefficients {
        self.scaled_down(&self.common_factor())
            .expect("gcd divides every coefficient")
    }

    /// Divides every coefficient by `factor`; fails unless the division is exact.
    pub fn scaled_down(&self, factor: &BigNat) -> Result<ScaledCoefficients> {
        let f = BigInt::from(factor.clone());
        if f.is_zero() {
            return Err(Error::Consistency("scale factor must be positive".into()));
        }
        let div = |c: &BigInt| -> Result<BigInt> {
            let (q, r) = c.div_rem(&f);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::Consistency(format!("{factor} does not divide coefficient {c}")))
            }
        };
        let denominator = div(&BigInt::from(self.denominator.clone()))?
            .to_biguint()
            .expect("positive");
        Ok(ScaledCoefficients {
            factor: factor.clone(),
            denominator,
            a: self.a.iter().map(div).collect::<Result<_>>()?,
            b: self.b.iter().map(div).collect::<Result<_>>()?,
        })
    }
}

pub(crate) fn exact_quotient(
    numerator: BigInt,
    denominator: &BigNat,
    context: impl FnOnce() -> String,
) -> Result<BigNat> {
    let d = BigInt::from(denominator.clone());
    let (q, r) = numerator.div_rem(&d);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Divisibility {
            context: context(),
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q.magnitude().clone())
}
