//! Prefix counting for derangements (permutations without fixed points).
//!
//! Fixing a prefix of length `l` leaves an `(n-l) x (n-l)` board whose
//! forbidden squares are the surviving diagonal squares. Those never share
//! a row or column, so with `c` of them the count is
//! `sum_j (-1)^j C(c, j) (n - l - j)!`.

use num_traits::Zero;

use crate::engine::PrefixCountFamily;
use crate::error::{Error, Result};
use crate::numeric::{with_factorials, Count};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerangementFamily {
    n: usize,
}

/// Prefix length together with the number of forbidden squares left on the
/// derived board.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerangementPrefixStats {
    pub ell: usize,
    pub complement_size: usize,
}

impl DerangementFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!(
                "derangements need n >= 2, got {n}"
            )));
        }
        Ok(DerangementFamily { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prefix_stats(&self, alpha: &[usize]) -> Result<DerangementPrefixStats> {
        Ok(DerangementPrefixStats {
            ell: alpha.len(),
            complement_size: complement_size_d(self.n, alpha)?,
        })
    }
}

/// Letters distinct, inside `[1, n]`, and `alpha_i != i`.
pub fn is_valid_prefix_d(n: usize, alpha: &[usize]) -> bool {
    if alpha.len() > n {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for (i, &l) in alpha.iter().enumerate() {
        if l == 0 || l > n || l == i + 1 || seen[l] {
            return false;
        }
        seen[l] = true;
    }
    true
}

/// `n - l - |{l+1, ..., n} & alpha|`.
pub fn complement_size_d(n: usize, alpha: &[usize]) -> Result<usize> {
    if !is_valid_prefix_d(n, alpha) {
        return Err(Error::InvalidPrefix("not a derangement prefix"));
    }
    let ell = alpha.len();
    let above = alpha.iter().filter(|&&l| l > ell).count();
    Ok(n - ell - above)
}

/// Derangements of `[n]` beginning with `alpha`; zero for invalid prefixes.
pub fn count_prefix_d(n: usize, alpha: &[usize]) -> Count {
    let Ok(c) = complement_size_d(n, alpha) else {
        return Count::zero();
    };
    let m = n - alpha.len();
    with_factorials(m, |fact| {
        let mut positive = Count::zero();
        let mut negative = Count::zero();
        let mut choose = Count::from(1u32);
        for j in 0..=c {
            let term = &choose * &fact[m - j];
            if j % 2 == 0 {
                positive += term;
            } else {
                negative += term;
            }
            choose = choose * (c - j) / (j + 1);
        }
        positive - negative
    })
    .expect("n within the factorial limit")
}

impl PrefixCountFamily for DerangementFamily {
    fn alphabet_size(&self) -> usize {
        self.n
    }

    fn count_prefix(&self, prefix: &Word) -> Count {
        count_prefix_d(self.n, prefix.letters())
    }

    fn contains(&self, word: &Word) -> bool {
        word.len() == self.n && is_valid_prefix_d(self.n, word.letters())
    }

    fn quick_letter_ok(&self, position: usize, letter: usize) -> bool {
        position != letter
    }
}
