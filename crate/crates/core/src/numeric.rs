//! Arbitrary-precision counts, factorials, binomials and dense integer
//! polynomials.

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Nonnegative arbitrary-precision integer used for every count, rank and index.
pub type Count = BigUint;

/// Largest argument accepted by [`factorial`].
pub const DEFAULT_FACTORIAL_LIMIT: usize = 10_000;

fn factorial_cache() -> &'static RwLock<Vec<Count>> {
    static CACHE: OnceLock<RwLock<Vec<Count>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Count::one()]))
}

fn fill_factorials(k: usize) {
    let cache = factorial_cache();
    if cache.read().unwrap().len() > k {
        return;
    }
    let mut table = cache.write().unwrap();
    while table.len() <= k {
        let next = table.last().unwrap() * table.len();
        table.push(next);
    }
}

/// Returns `k!`, filling the shared cache on demand.
pub fn factorial(k: usize) -> Result<Count> {
    with_factorials(k, |table| table[k].clone())
}

/// Runs `f` with a slice holding at least `0!, 1!, ..., k!`.
///
/// Lets hot loops read many factorials under a single lock acquisition.
pub fn with_factorials<R>(k: usize, f: impl FnOnce(&[Count]) -> R) -> Result<R> {
    if k > DEFAULT_FACTORIAL_LIMIT {
        return Err(Error::Capacity {
            what: "factorial argument",
            value: k,
            limit: DEFAULT_FACTORIAL_LIMIT,
        });
    }
    fill_factorials(k);
    let table = factorial_cache().read().unwrap();
    Ok(f(&table[..=k]))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 1..=k {
        // acc = C(n - k + i - 1, i - 1) here, so the division is exact.
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// `sum_k (-1)^k coeffs[k] * (m - k)!`.
///
/// Fails when a coefficient index exceeds `m` or the sum would be negative.
pub fn alternating_factorial_sum(coeffs: &[Count], m: usize) -> Result<Count> {
    if coeffs.len() > m + 1 {
        return Err(Error::InconsistentInput(format!(
            "polynomial of degree {} on a board of size {}",
            coeffs.len() - 1,
            m
        )));
    }
    with_factorials(m, |fact| {
        let mut positive = Count::zero();
        let mut negative = Count::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = c * &fact[m - k];
            if k % 2 == 0 {
                positive += term;
            } else {
                negative += term;
            }
        }
        if negative > positive {
            Err(Error::InconsistentInput(
                "inclusion-exclusion sum is negative".into(),
            ))
        } else {
            Ok(positive - negative)
        }
    })?
}

/// Dense polynomial with [`Count`] coefficients in ascending degree.
///
/// Always normalized: no trailing zero coefficients, and the zero
/// polynomial is stored as `[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coefficients: Vec<Count>,
}

impl IntegerPolynomial {
    pub fn new(mut coefficients: Vec<Count>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(Count::zero());
        }
        IntegerPolynomial { coefficients }
    }

    pub fn from_u64s(coefficients: &[u64]) -> Self {
        Self::new(coefficients.iter().map(|&c| Count::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial {
            coefficients: vec![Count::zero()],
        }
    }

    pub fn one() -> Self {
        IntegerPolynomial {
            coefficients: vec![Count::one()],
        }
    }

    /// `sum_j C(n, j) x^j`, i.e. `(1 + x)^n`.
    pub fn binomial_row(n: usize) -> Self {
        Self::new((0..=n).map(|j| binomial(n, j)).collect())
    }

    pub fn coefficients(&self) -> &[Count] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<Count> {
        self.coefficients
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> Count {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.len() == 1 && self.coefficients[0].is_zero()
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(Count::zero());
        coefficients.extend(self.coefficients.iter().cloned());
        IntegerPolynomial { coefficients }
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let coefficients = (0..len)
            .map(|k| match (self.coefficients.get(k), rhs.coefficients.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        IntegerPolynomial::new(coefficients)
    }
}

impl Add for IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
        &self + &rhs
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut coefficients = vec![Count::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(coefficients)
    }
}

impl Mul for IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
        &self * &rhs
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => {}
                _ => write!(f, "{c}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
