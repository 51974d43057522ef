//! Prefix counting for menage permutations: `pi(i) != i` and
//! `pi(i) + 1 != i (mod n)`.
//!
//! After a nonempty prefix is placed, the forbidden squares left on the
//! derived board split into staircase blocks that share no rows or columns.
//! A staircase with `k` squares has the `k`-th Fibonacci polynomial as its
//! rook polynomial, so the forbidden-square polynomial is a product of
//! Fibonacci polynomials and inclusion-exclusion gives the count.

use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use crate::engine::PrefixCountFamily;
use crate::error::{Error, Result};
use crate::numeric::{Count, IntegerPolynomial};
use crate::rook::stanley_count;
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MenageFamily {
    n: usize,
}

/// Square counts of the staircase blocks, one per maximal run of unused
/// columns, in column order. Zero-size runs are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSizes {
    pub sizes: Vec<usize>,
}

impl BlockSizes {
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Sizes in ascending order, for multiset comparison.
    pub fn sorted(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }
}

impl MenageFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidFamily(format!(
                "menage permutations need n >= 3, got {n}"
            )));
        }
        Ok(MenageFamily { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn letter_allowed(n: usize, position: usize, letter: usize) -> bool {
    let forbidden_shift = if position == 1 { n } else { position - 1 };
    letter >= 1 && letter <= n && letter != position && letter != forbidden_shift
}

/// Letters distinct, in `[1, n]`, `alpha_i != i` and `alpha_i != i - 1 (mod n)`.
pub fn is_valid_prefix_m(n: usize, alpha: &[usize]) -> bool {
    if alpha.len() > n {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for (i, &l) in alpha.iter().enumerate() {
        if !letter_allowed(n, i + 1, l) || seen[l] {
            return false;
        }
        seen[l] = true;
    }
    true
}

/// Forbidden squares left in column `i` once rows `1..=ell` are gone.
pub fn column_weight(n: usize, ell: usize, i: usize) -> usize {
    if i < ell {
        0
    } else if i == ell || i == n {
        1
    } else {
        2
    }
}

/// Staircase block sizes for a valid, nonempty prefix.
pub fn block_sizes(n: usize, alpha: &[usize]) -> Result<BlockSizes> {
    if alpha.is_empty() {
        return Err(Error::InvalidPrefix("block sizes need a nonempty prefix"));
    }
    if !is_valid_prefix_m(n, alpha) {
        return Err(Error::InvalidPrefix("not a menage prefix"));
    }
    let ell = alpha.len();
    let mut used = vec![false; n + 1];
    for &l in alpha {
        used[l] = true;
    }
    let mut sizes = Vec::new();
    let mut run: Option<usize> = None;
    for i in 1..=n {
        if used[i] {
            sizes.extend(run.take());
        } else {
            *run.get_or_insert(0) += column_weight(n, ell, i);
        }
    }
    sizes.extend(run);
    Ok(BlockSizes { sizes })
}

fn fibonacci_cache() -> &'static RwLock<Vec<IntegerPolynomial>> {
    static CACHE: OnceLock<RwLock<Vec<IntegerPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(vec![
            IntegerPolynomial::one(),
            IntegerPolynomial::from_u64s(&[1, 1]),
        ])
    })
}

fn with_fibonacci<R>(k: usize, f: impl FnOnce(&[IntegerPolynomial]) -> R) -> R {
    let cache = fibonacci_cache();
    if cache.read().unwrap().len() <= k {
        let mut table = cache.write().unwrap();
        while table.len() <= k {
            let len = table.len();
            let next = &table[len - 2].shift() + &table[len - 1];
            table.push(next);
        }
    }
    let table = cache.read().unwrap();
    f(&table[..=k])
}

/// `F_0 = 1`, `F_1 = 1 + x`, `F_k = x F_{k-2} + F_{k-1}`.
pub fn fibonacci_polynomial(k: usize) -> IntegerPolynomial {
    with_fibonacci(k, |table| table[k].clone())
}

/// Rook polynomial of the forbidden squares left by a valid nonempty prefix.
pub fn complement_polynomial(n: usize, alpha: &[usize]) -> Result<IntegerPolynomial> {
    let blocks = block_sizes(n, alpha)?;
    let largest = blocks.sizes.iter().copied().max().unwrap_or(0);
    Ok(with_fibonacci(largest, |table| {
        blocks
            .sizes
            .iter()
            .filter(|&&k| k > 0)
            .fold(IntegerPolynomial::one(), |acc, &k| &acc * &table[k])
    }))
}

/// Menage permutations of `[n]` beginning with `alpha`; zero for invalid
/// prefixes. The empty prefix sums over the first letter.
pub fn count_prefix_m(n: usize, alpha: &[usize]) -> Count {
    if !is_valid_prefix_m(n, alpha) {
        return Count::zero();
    }
    if alpha.is_empty() {
        return (1..=n).map(|x| count_prefix_m(n, &[x])).sum();
    }
    let poly = complement_polynomial(n, alpha).expect("prefix already validated");
    stanley_count(&poly, n - alpha.len()).expect("block polynomial fits the derived board")
}

impl PrefixCountFamily for MenageFamily {
    fn alphabet_size(&self) -> usize {
        self.n
    }

    fn count_prefix(&self, prefix: &Word) -> Count {
        count_prefix_m(self.n, prefix.letters())
    }

    fn contains(&self, word: &Word) -> bool {
        word.len() == self.n && is_valid_prefix_m(self.n, word.letters())
    }

    fn quick_letter_ok(&self, position: usize, letter: usize) -> bool {
        letter_allowed(self.n, position, letter)
    }
}
