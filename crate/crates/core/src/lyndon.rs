//! Lyndon words over `{0, 1}` counted by prefix, the Euler transform of
//! those counts, and a small search for linear recurrences they satisfy.
//!
//! Recurrences found here are conjectures fitted to finitely many terms.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::Count;

/// Longest word length [`count_lyndon_prefix`] will enumerate.
pub const LYNDON_LENGTH_LIMIT: usize = 24;

/// Extra terms computed past the fitted ones to re-check a recurrence.
pub const EXTRA_CHECK_TERMS: usize = 4;

/// Prefixes covered by the conjecture table, in row order.
pub const TABLE_PREFIXES: [&str; 14] = [
    "0", "00", "01", "000", "001", "010", "011", "0000", "0001", "0010", "0011", "0101", "0110",
    "0111",
];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidInput("binary words use only 0 and 1".into()));
        }
        Ok(BinaryWord { bits })
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidInput(format!("not a binary letter: {ch:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|bits| BinaryWord { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// True iff `w` is strictly smaller than each of its nontrivial rotations.
pub fn is_lyndon(w: &BinaryWord) -> Result<bool> {
    let bits = w.bits();
    if bits.is_empty() {
        return Err(Error::InvalidInput("the empty word has no rotations".into()));
    }
    let n = bits.len();
    Ok((1..n).all(|r| {
        let rotated = bits[r..].iter().chain(&bits[..r]);
        bits.iter().lt(rotated)
    }))
}

/// Lyndon words of length exactly `len` beginning with `alpha`.
///
/// Walks Duval's generator, which yields every Lyndon word of length at
/// most `len` in lexicographic order, and stops once the words move past
/// `alpha`.
pub fn count_lyndon_prefix(alpha: &BinaryWord, len: usize) -> Result<Count> {
    if len == 0 {
        return Err(Error::InvalidInput("length must be at least 1".into()));
    }
    if len > LYNDON_LENGTH_LIMIT {
        return Err(Error::Capacity {
            what: "Lyndon word length",
            value: len,
            limit: LYNDON_LENGTH_LIMIT,
        });
    }
    let alpha = alpha.bits();
    let mut count = 0u64;
    let mut w: Vec<u8> = vec![0];
    loop {
        let k = w.len().min(alpha.len());
        match w[..k].cmp(&alpha[..k]) {
            std::cmp::Ordering::Greater => break,
            std::cmp::Ordering::Equal if w.len() == len && k == alpha.len() => count += 1,
            _ => {}
        }
        let period = w.len();
        while w.len() < len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last = 1,
            None => break,
        }
    }
    Ok(Count::from(count))
}

/// Counts for lengths `1..=len`.
pub fn lyndon_prefix_counts(alpha: &BinaryWord, len: usize) -> Result<Vec<Count>> {
    (1..=len).map(|n| count_lyndon_prefix(alpha, n)).collect()
}

/// Euler transform `b_1 .. b_L` of `a_1 .. a_L`, where
/// `1 + sum b_n x^n = prod (1 - x^i)^(-a_i)`.
pub fn euler_transform(a: &[Count]) -> Vec<Count> {
    let len = a.len();
    // c[n] = sum_{d | n} d a_d
    let mut c = vec![Count::zero(); len + 1];
    for d in 1..=len {
        for n in (d..=len).step_by(d) {
            c[n] += &a[d - 1] * d;
        }
    }
    let mut b = vec![Count::zero(); len + 1];
    for n in 1..=len {
        let mut acc = c[n].clone();
        for k in 1..n {
            acc += &c[k] * &b[n - k];
        }
        let (q, r) = acc.div_rem(&Count::from(n));
        assert!(r.is_zero(), "Euler transform division must be exact");
        b[n] = q;
    }
    b.split_off(1)
}

/// The power series `1 + b_1 x + ...` truncated to `a.len()` terms, i.e.
/// `1, b_1, ..., b_{L-1}` (the form the conjecture table prints).
pub fn euler_series(a: &[Count]) -> Vec<Count> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut series = Vec::with_capacity(a.len());
    series.push(Count::from(1u32));
    series.extend(euler_transform(&a[..a.len() - 1]));
    series
}

/// Recovers `a` from `b = euler_transform(a)`. Fails when the result would
/// not be a sequence of nonnegative integers.
pub fn inverse_euler_transform(b: &[Count]) -> Result<Vec<Count>> {
    let len = b.len();
    let b: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain(b.iter().map(|x| BigInt::from(x.clone())))
        .collect();
    let mut c = vec![BigInt::zero(); len + 1];
    let mut a = vec![BigInt::zero(); len + 1];
    for n in 1..=len {
        let mut cn = &b[n] * n;
        for k in 1..n {
            cn -= &c[k] * &b[n - k];
        }
        c[n] = cn;
        let mut rest = c[n].clone();
        for d in (1..n).filter(|d| n % d == 0) {
            rest -= &a[d] * d;
        }
        let (q, r) = rest.div_rem(&BigInt::from(n));
        if !r.is_zero() || q.is_negative() {
            return Err(Error::InvalidInput(format!(
                "not the Euler transform of a nonnegative integer sequence (term {n})"
            )));
        }
        a[n] = q;
    }
    Ok(a.into_iter()
        .skip(1)
        .map(|x| x.to_biguint().expect("checked nonnegative"))
        .collect())
}

/// `a_{n+order} = sum_i coefficients[i] * a_{n+i}` for every `n >= valid_from`
/// (1-based), as far as the data reaches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceGuess {
    pub order: usize,
    pub coefficients: Vec<u8>,
    pub valid_from: usize,
}

impl RecurrenceGuess {
    /// Whether every equation from `valid_from` on holds in `seq` (1-based).
    pub fn holds_on(&self, seq: &[Count]) -> bool {
        let k = self.order;
        (self.valid_from..)
            .take_while(|&n| n + k <= seq.len())
            .all(|n| {
                let rhs: Count = self
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| &seq[n + i - 1] * c)
                    .sum();
                seq[n + k - 1] == rhs
            })
    }

    fn equations(&self, len: usize) -> usize {
        (len + 1).saturating_sub(self.valid_from + self.order)
    }
}

impl fmt::Display for RecurrenceGuess {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |i: usize| match i {
            0 => "a(n)".to_string(),
            _ => format!("a(n+{i})"),
        };
        write!(f, "{} =", term(self.order))?;
        let mut first = true;
        for i in (0..self.order).rev() {
            let c = self.coefficients[i];
            if c == 0 {
                continue;
            }
            f.write_str(if first { " " } else { " + " })?;
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            f.write_str(&term(i))?;
        }
        if first {
            f.write_str(" 0")?;
        }
        write!(f, " for n >= {} (conjectured)", self.valid_from)
    }
}

/// Smallest-order recurrence with coefficients in `{0, 1, 2}` that the
/// whole tail of `b` satisfies from some start in `from_candidates`.
///
/// Orders are tried from 1 up, then starts from the smallest; a candidate
/// must be backed by at least `order + 1` equations so that short tails
/// cannot fit by accident.
pub fn detect_recurrence(
    b: &[Count],
    max_order: usize,
    from_candidates: RangeInclusive<usize>,
) -> Result<Option<RecurrenceGuess>> {
    if max_order == 0 || b.len() < 2 * max_order {
        return Err(Error::InsufficientData {
            needed: 2 * max_order.max(1),
            got: b.len(),
        });
    }
    for order in 1..=max_order {
        for valid_from in from_candidates.clone().filter(|&f| f >= 1) {
            let mut guess = RecurrenceGuess {
                order,
                coefficients: vec![0; order],
                valid_from,
            };
            if guess.equations(b.len()) < order + 1 {
                break;
            }
            for code in 0..3usize.pow(order as u32) {
                // most significant digit is the coefficient of a(n)
                let mut rest = code;
                for slot in guess.coefficients.iter_mut().rev() {
                    *slot = (rest % 3) as u8;
                    rest /= 3;
                }
                if guess.holds_on(b) {
                    return Ok(Some(guess));
                }
            }
        }
    }
    Ok(None)
}

/// One row of the conjecture table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub prefix: BinaryWord,
    /// Lyndon words with this prefix, lengths `1..=len`.
    pub counts: Vec<Count>,
    /// `1, b_1, ..., b_{len-1}` of the Euler transform of `counts`.
    pub transformed: Vec<Count>,
    pub recurrence: Option<RecurrenceGuess>,
    /// Whether the recurrence also holds on [`EXTRA_CHECK_TERMS`] more terms.
    pub extended_check: bool,
}

/// Counts, transform and fitted recurrence for one prefix.
pub fn conjecture_row(prefix: &BinaryWord, len: usize) -> Result<ConjectureRow> {
    let extended = lyndon_prefix_counts(prefix, len + EXTRA_CHECK_TERMS)?;
    let extended_series = euler_series(&extended);
    let counts = extended[..len].to_vec();
    let transformed = extended_series[..len].to_vec();
    let recurrence = detect_recurrence(&transformed, len / 2, 1..=len)?;
    let extended_check = recurrence
        .as_ref()
        .is_some_and(|r| r.holds_on(&extended_series));
    Ok(ConjectureRow {
        prefix: prefix.clone(),
        counts,
        transformed,
        recurrence,
        extended_check,
    })
}

/// Rows for [`TABLE_PREFIXES`].
pub fn conjecture_table(len: usize) -> Result<Vec<ConjectureRow>> {
    TABLE_PREFIXES
        .iter()
        .map(|p| conjecture_row(&BinaryWord::parse(p).expect("static prefix"), len))
        .collect()
}
