//! Boards, rook polynomials and the slow reference counts built on them.
//!
//! Everything here works on explicit square sets and is meant for arbitrary
//! boards and as an oracle for the closed-form family counters.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::numeric::{alternating_factorial_sum, Count, IntegerPolynomial};
use crate::words::Word;

/// Largest grid accepted by [`permanent_count`].
pub const ORACLE_LIMIT: usize = 12;

/// A set of allowed squares inside the `size x size` grid, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Board {
    size: usize,
    squares: BTreeSet<(usize, usize)>,
}

/// The four staircase shapes, each a diagonal plus one adjacent diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Staircase {
    /// `{(i,i) : i <= m} + {(i,i+1) : i < m}`, `2m - 1` squares.
    Odd,
    /// `{(i,i) : i <= m} + {(i+1,i) : i < m}`, `2m - 1` squares.
    OddTransposed,
    /// `{(i,i) : i < m} + {(i+1,i) : i < m}`, `2m - 2` squares.
    Even,
    /// `{(i,i) : i < m} + {(i,i+1) : i < m}`, `2m - 2` squares.
    EvenTransposed,
}

impl Staircase {
    pub const ALL: [Staircase; 4] = [
        Staircase::Odd,
        Staircase::OddTransposed,
        Staircase::Even,
        Staircase::EvenTransposed,
    ];

    pub fn is_odd(self) -> bool {
        matches!(self, Staircase::Odd | Staircase::OddTransposed)
    }
}

impl Board {
    pub fn new(size: usize, squares: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let squares: BTreeSet<_> = squares.into_iter().collect();
        if let Some(&(r, c)) = squares
            .iter()
            .find(|&&(r, c)| r == 0 || c == 0 || r > size || c > size)
        {
            return Err(Error::InvalidInput(format!(
                "square ({r}, {c}) is outside the {size}x{size} grid"
            )));
        }
        Ok(Board { size, squares })
    }

    pub fn empty(size: usize) -> Self {
        Board {
            size,
            squares: BTreeSet::new(),
        }
    }

    pub fn full(size: usize) -> Self {
        let squares = (1..=size)
            .flat_map(|r| (1..=size).map(move |c| (r, c)))
            .collect();
        Board { size, squares }
    }

    /// Allowed squares for derangements: everything off the diagonal.
    pub fn derangement(size: usize) -> Self {
        Board::full(size).without(|r, c| r == c)
    }

    /// Allowed squares for menage permutations: forbids `(i,i)`,
    /// `(i+1,i)` and the corner `(1,size)`.
    pub fn menage(size: usize) -> Self {
        Board::full(size).without(|r, c| r == c || r == c + 1 || (r == 1 && c == size))
    }

    /// Staircase board of the given shape with exactly `squares` squares.
    pub fn staircase(shape: Staircase, squares: usize) -> Result<Self> {
        if shape.is_odd() != (squares % 2 == 1) {
            return Err(Error::InvalidInput(format!(
                "{shape:?} staircase cannot have {squares} squares"
            )));
        }
        let m = squares.div_ceil(2) + usize::from(!shape.is_odd());
        let diag_len = if shape.is_odd() { m } else { m - 1 };
        let mut set: Vec<_> = (1..=diag_len).map(|i| (i, i)).collect();
        set.extend((1..m).map(|i| match shape {
            Staircase::Odd | Staircase::EvenTransposed => (i, i + 1),
            Staircase::OddTransposed | Staircase::Even => (i + 1, i),
        }));
        Board::new(m, set)
    }

    fn without(mut self, drop: impl Fn(usize, usize) -> bool) -> Self {
        self.squares.retain(|&(r, c)| !drop(r, c));
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn squares(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.squares.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.squares.contains(&(row, col))
    }
}

/// Rook polynomial via include/exclude on the smallest square, memoized.
pub fn rook_polynomial(b: &Board) -> IntegerPolynomial {
    let squares: Vec<(usize, usize)> = b.squares().collect();
    let words = squares.len().div_ceil(64).max(1);
    // conflicts[k]: squares sharing a row or column with square k, itself included.
    let conflicts: Vec<Vec<u64>> = squares
        .iter()
        .map(|&(r, c)| {
            let mut mask = vec![0u64; words];
            for (idx, &(r2, c2)) in squares.iter().enumerate() {
                if r == r2 || c == c2 {
                    mask[idx / 64] |= 1 << (idx % 64);
                }
            }
            mask
        })
        .collect();
    let mut all = vec![0u64; words];
    for idx in 0..squares.len() {
        all[idx / 64] |= 1 << (idx % 64);
    }
    let mut memo = HashMap::new();
    rook_rec(all, &conflicts, &mut memo)
}

fn rook_rec(
    set: Vec<u64>,
    conflicts: &[Vec<u64>],
    memo: &mut HashMap<Vec<u64>, IntegerPolynomial>,
) -> IntegerPolynomial {
    let Some(pivot) = set
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    else {
        return IntegerPolynomial::one();
    };
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let included: Vec<u64> = set
        .iter()
        .zip(&conflicts[pivot])
        .map(|(s, c)| s & !c)
        .collect();
    let mut excluded = set.clone();
    excluded[pivot / 64] &= !(1 << (pivot % 64));
    let p = &rook_rec(included, conflicts, memo).shift() + &rook_rec(excluded, conflicts, memo);
    memo.insert(set, p.clone());
    p
}

/// Squares of the grid not in `b`.
pub fn complement(b: &Board) -> Board {
    Board::full(b.size).without(|r, c| b.contains(r, c))
}

/// Full placements (one rook per row and column) counted as the permanent
/// of the 0/1 incidence matrix, by inclusion-exclusion over column subsets.
pub fn permanent_count(b: &Board) -> Result<Count> {
    let m = b.size;
    if m > ORACLE_LIMIT {
        return Err(Error::Capacity {
            what: "oracle board size",
            value: m,
            limit: ORACLE_LIMIT,
        });
    }
    let rows: Vec<u32> = (1..=m)
        .map(|r| {
            (1..=m)
                .filter(|&c| b.contains(r, c))
                .fold(0u32, |acc, c| acc | 1 << (c - 1))
        })
        .collect();
    let mut total: i128 = 0;
    for cols in 0u32..(1 << m) {
        let mut product: i128 = 1;
        for &row in &rows {
            product *= i128::from((row & cols).count_ones());
            if product == 0 {
                break;
            }
        }
        if (m - cols.count_ones() as usize) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    Ok(Count::from(u128::try_from(total).expect("permanent is nonnegative")))
}

/// Drops rows `1..=len(alpha)` and the columns named by `alpha`, then
/// reindexes both coordinates to `1..=size - len(alpha)` keeping order.
pub fn derived_board(b: &Board, alpha: &Word) -> Result<Board> {
    let letters = alpha.letters();
    let ell = letters.len();
    if ell > b.size {
        return Err(Error::InvalidPrefix("prefix is longer than the board"));
    }
    let mut removed = vec![false; b.size + 1];
    for &l in letters {
        if l > b.size {
            return Err(Error::InvalidPrefix("letter outside the board"));
        }
        if removed[l] {
            return Err(Error::InvalidPrefix("repeated letter"));
        }
        removed[l] = true;
    }
    // new_col[c] = c minus the number of removed columns before it
    let mut new_col = vec![0; b.size + 1];
    let mut shift = 0;
    for c in 1..=b.size {
        if removed[c] {
            shift += 1;
        } else {
            new_col[c] = c - shift;
        }
    }
    let squares = b
        .squares()
        .filter(|&(r, c)| r > ell && !removed[c])
        .map(|(r, c)| (r - ell, new_col[c]));
    Board::new(b.size - ell, squares)
}

/// Product of the parts' rook polynomials; the parts must share no row and
/// no column.
pub fn disjoint_product(parts: &[Board]) -> Result<IntegerPolynomial> {
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    for part in parts {
        let part_rows: BTreeSet<_> = part.squares().map(|(r, _)| r).collect();
        let part_cols: BTreeSet<_> = part.squares().map(|(_, c)| c).collect();
        if !rows.is_disjoint(&part_rows) || !cols.is_disjoint(&part_cols) {
            return Err(Error::NotDisjoint);
        }
        rows.extend(part_rows);
        cols.extend(part_cols);
    }
    Ok(parts
        .iter()
        .fold(IntegerPolynomial::one(), |acc, part| &acc * &rook_polynomial(part)))
}

/// Full placements on an `m x m` board from the rook polynomial of its
/// complement: `sum_k (-1)^k r_k (m - k)!`.
pub fn stanley_count(complement_poly: &IntegerPolynomial, m: usize) -> Result<Count> {
    alternating_factorial_sum(complement_poly.coefficients(), m)
}
