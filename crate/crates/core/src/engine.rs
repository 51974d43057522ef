//! Generic lexicographic rank/unrank over any family of words that can count
//! its members by prefix.
//!
//! Unranking walks a prefix `alpha` together with `j`, the number of members
//! strictly before `alpha`, and applies one of four moves per step:
//!
//! 1. `i > j + #prefix(alpha)`: step the last letter up, `j += #prefix(alpha)`;
//! 2. `alpha` is not a member and `i <= j + #prefix(alpha)`: append the letter 1;
//! 3. `alpha` is a member, `i <= j + #prefix(alpha)`, `i != j + 1`: append 1, `j += 1`;
//! 4. `alpha` is a member and `i == j + 1`: done.

use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numeric::Count;
use crate::words::Word;

/// A finite set of words over `[n]` that can count its members by prefix.
pub trait PrefixCountFamily {
    fn alphabet_size(&self) -> usize;

    /// Number of members that begin with `prefix`. Must be total: prefixes
    /// that no member extends return zero.
    fn count_prefix(&self, prefix: &Word) -> Count;

    fn contains(&self, word: &Word) -> bool;

    /// Cheap filter for letter `letter` at 1-based `position`. Returning
    /// false promises that no member has that letter there.
    fn quick_letter_ok(&self, _position: usize, _letter: usize) -> bool {
        true
    }

    /// Whether members never repeat a letter (permutation families).
    fn distinct_letters(&self) -> bool {
        true
    }
}

impl<F: PrefixCountFamily + ?Sized> PrefixCountFamily for &F {
    fn alphabet_size(&self) -> usize {
        (**self).alphabet_size()
    }
    fn count_prefix(&self, prefix: &Word) -> Count {
        (**self).count_prefix(prefix)
    }
    fn contains(&self, word: &Word) -> bool {
        (**self).contains(word)
    }
    fn quick_letter_ok(&self, position: usize, letter: usize) -> bool {
        (**self).quick_letter_ok(position, letter)
    }
    fn distinct_letters(&self) -> bool {
        (**self).distinct_letters()
    }
}

/// One application of the unranking recursion, as recorded by [`unrank_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrankStep {
    pub prefix: Word,
    pub count: Count,
    /// Members strictly before `prefix`; the members with this prefix have
    /// indices in `(preceding, preceding + count]`.
    pub preceding: Count,
}

/// Current prefix and the number of members strictly before it.
#[derive(Debug, Clone)]
pub struct EngineState {
    pub alpha: Word,
    pub j: Count,
    used: Vec<u32>,
}

impl EngineState {
    fn seed(n: usize) -> Self {
        let mut used = vec![0; n + 1];
        used[1] = 1;
        EngineState {
            alpha: Word::new(n, vec![1]).expect("n >= 1"),
            j: Count::zero(),
            used,
        }
    }

    fn prefix_count<F: PrefixCountFamily>(&self, family: &F) -> Count {
        let last = self.alpha.last().expect("engine prefix is never empty");
        let repeated = family.distinct_letters() && self.used[last] > 1;
        if repeated || !family.quick_letter_ok(self.alpha.len(), last) {
            Count::zero()
        } else {
            family.count_prefix(&self.alpha)
        }
    }

    fn increment(&mut self) -> Result<()> {
        let last = self.alpha.last().expect("engine prefix is never empty");
        self.alpha = self.alpha.increment_last()?;
        self.used[last] -= 1;
        self.used[last + 1] += 1;
        Ok(())
    }

    fn append_one(&mut self) -> Result<()> {
        self.alpha = self.alpha.append_one()?;
        self.used[1] += 1;
        Ok(())
    }

    fn pop(&mut self) {
        let last = self.alpha.last().expect("engine prefix is never empty");
        self.used[last] -= 1;
        self.alpha = self.alpha.truncated(self.alpha.len() - 1);
    }

    /// Advances until `alpha` is the member at index `i`.
    ///
    /// Requires `j < i` and `alpha <= w_i`. With `resume` set, a move past the
    /// last letter backtracks to the parent prefix; a fresh descent treats it
    /// as an out-of-range index.
    fn seek<F: PrefixCountFamily>(
        &mut self,
        family: &F,
        i: &Count,
        resume: bool,
        mut trace: Option<&mut Vec<UnrankStep>>,
        steps: &mut usize,
    ) -> Result<()> {
        let out_of_range = || Error::IndexOutOfRange {
            index: i.to_string(),
            total: "the family size".into(),
        };
        loop {
            *steps += 1;
            let count = self.prefix_count(family);
            if let Some(t) = trace.as_deref_mut() {
                t.push(UnrankStep {
                    prefix: self.alpha.clone(),
                    count: count.clone(),
                    preceding: self.j.clone(),
                });
            }
            let end = &self.j + &count;
            if *i > end {
                self.j = end;
                while self.alpha.last() == Some(family.alphabet_size()) {
                    if !resume || self.alpha.len() == 1 {
                        return Err(out_of_range());
                    }
                    self.pop();
                }
                self.increment().map_err(|_| out_of_range())?;
            } else if !family.contains(&self.alpha) {
                self.append_one().map_err(|_| out_of_range())?;
            } else if *i != &self.j + 1u32 {
                self.append_one().map_err(|_| out_of_range())?;
                self.j += 1u32;
            } else {
                return Ok(());
            }
        }
    }
}

/// Number of members, summed over the single-letter prefixes.
pub fn total_count<F: PrefixCountFamily>(family: &F) -> Count {
    let n = family.alphabet_size();
    (1..=n)
        .filter(|&x| family.quick_letter_ok(1, x))
        .map(|x| family.count_prefix(&Word::new(n, vec![x]).expect("letter in range")))
        .sum()
}

fn check_index(i: &Count, total: &Count) -> Result<()> {
    if i.is_zero() || i > total {
        return Err(Error::IndexOutOfRange {
            index: i.to_string(),
            total: total.to_string(),
        });
    }
    Ok(())
}

/// The `i`-th member (1-based) in lexicographic order.
pub fn unrank<F: PrefixCountFamily>(family: &F, i: &Count) -> Result<Word> {
    unrank_counting_steps(family, i).map(|(w, _)| w)
}

/// Like [`unrank`], also returning the number of recursion steps taken.
pub fn unrank_counting_steps<F: PrefixCountFamily>(family: &F, i: &Count) -> Result<(Word, usize)> {
    let total = total_count(family);
    check_index(i, &total)?;
    let mut state = EngineState::seed(family.alphabet_size());
    let mut steps = 0;
    state.seek(family, i, false, None, &mut steps)?;
    Ok((state.alpha, steps))
}

/// Like [`unrank`], also returning every visited prefix with its index range.
pub fn unrank_traced<F: PrefixCountFamily>(family: &F, i: &Count) -> Result<(Word, Vec<UnrankStep>)> {
    let total = total_count(family);
    check_index(i, &total)?;
    let mut state = EngineState::seed(family.alphabet_size());
    let mut trace = Vec::new();
    let mut steps = 0;
    state.seek(family, i, false, Some(&mut trace), &mut steps)?;
    Ok((state.alpha, trace))
}

/// 1-based lexicographic index of a member.
///
/// Sums `#prefix(w_1 .. w_{p-1} x)` over positions `p` and letters
/// `x < w_p`, plus one for each member that is a proper prefix of `w`.
pub fn rank<F: PrefixCountFamily>(family: &F, w: &Word) -> Result<Count> {
    let n = family.alphabet_size();
    if w.alphabet_size() != n || !family.contains(w) {
        return Err(Error::NotAMember);
    }
    let distinct = family.distinct_letters();
    let mut used = vec![false; n + 1];
    let mut rank = Count::one();
    for (pos, &letter) in w.letters().iter().enumerate() {
        let parent = w.truncated(pos);
        if pos > 0 && family.contains(&parent) {
            rank += 1u32;
        }
        for x in 1..letter {
            if (distinct && used[x]) || !family.quick_letter_ok(pos + 1, x) {
                continue;
            }
            let candidate = parent.append(x)?;
            rank += family.count_prefix(&candidate);
        }
        used[letter] = true;
    }
    Ok(rank)
}

/// Uniform index in `[1, total]`: rejection sampling over `total.bits()` random bits.
pub fn uniform_index<R: RngCore>(rng: &mut R, total: &Count) -> Count {
    debug_assert!(!total.is_zero());
    let bits = total.bits();
    let nbytes = bits.div_ceil(8) as usize;
    let spare = (nbytes as u64) * 8 - bits;
    let mut buf = vec![0u8; nbytes];
    loop {
        rng.fill_bytes(&mut buf);
        if let Some(top) = buf.last_mut() {
            *top &= 0xffu8 >> spare;
        }
        let candidate = Count::from_bytes_le(&buf);
        if candidate < *total {
            return candidate + 1u32;
        }
    }
}

/// `count` members drawn independently and uniformly; reproducible for a fixed seed.
pub fn sample_uniform<F: PrefixCountFamily>(family: &F, seed: u64, count: usize) -> Result<Vec<Word>> {
    let total = total_count(family);
    if total.is_zero() {
        return Err(Error::EmptyFamily);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices: Vec<Count> = (0..count).map(|_| uniform_index(&mut rng, &total)).collect();
    indices.iter().map(|i| unrank(family, i)).collect()
}

/// Members `from ..= to` in lexicographic order.
pub fn enumerate_range<F: PrefixCountFamily>(family: F, from: &Count, to: &Count) -> Result<Enumerate<F>> {
    let total = total_count(&family);
    check_index(from, &total)?;
    check_index(to, &total)?;
    if from > to {
        return Err(Error::IndexOutOfRange {
            index: format!("{from}..={to}"),
            total: total.to_string(),
        });
    }
    let state = EngineState::seed(family.alphabet_size());
    Ok(Enumerate {
        family,
        state,
        next: from.clone(),
        to: to.clone(),
    })
}

/// Iterator returned by [`enumerate_range`]. Each member after the first
/// resumes the recursion from the previous one instead of starting over.
pub struct Enumerate<F> {
    family: F,
    state: EngineState,
    next: Count,
    to: Count,
}

impl<F: PrefixCountFamily> Iterator for Enumerate<F> {
    type Item = Result<Word>;

    fn next(&mut self) -> Option<Result<Word>> {
        if self.next > self.to {
            return None;
        }
        let mut steps = 0;
        let result = self
            .state
            .seek(&self.family, &self.next, true, None, &mut steps)
            .map(|_| self.state.alpha.clone());
        if result.is_err() {
            self.next = &self.to + 1u32;
        } else {
            self.next += 1u32;
        }
        Some(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Explicit word set, counted by scanning. Not prefix-free on purpose.
    struct Listed {
        n: usize,
        words: BTreeSet<Vec<usize>>,
    }

    impl PrefixCountFamily for Listed {
        fn alphabet_size(&self) -> usize {
            self.n
        }
        fn count_prefix(&self, prefix: &Word) -> Count {
            Count::from(self.words.iter().filter(|w| w.starts_with(prefix.letters())).count())
        }
        fn contains(&self, word: &Word) -> bool {
            self.words.contains(word.letters())
        }
        fn distinct_letters(&self) -> bool {
            false
        }
    }

    fn listed() -> Listed {
        let words = [vec![1], vec![1, 1, 2], vec![1, 2], vec![2, 2, 2], vec![3], vec![3, 1]];
        Listed {
            n: 3,
            words: words.into_iter().collect(),
        }
    }

    #[test]
    fn handles_members_that_prefix_other_members() {
        let family = listed();
        let sorted: Vec<_> = family.words.iter().cloned().collect();
        assert_eq!(total_count(&family), Count::from(sorted.len()));
        for (k, expected) in sorted.iter().enumerate() {
            let i = Count::from(k + 1);
            let w = unrank(&family, &i).unwrap();
            assert_eq!(w.letters(), expected.as_slice());
            assert_eq!(rank(&family, &w).unwrap(), i);
        }
        let all: Vec<_> = enumerate_range(&family, &Count::from(1u32), &Count::from(6u32))
            .unwrap()
            .map(|w| w.unwrap().letters().to_vec())
            .collect();
        assert_eq!(all, sorted);
    }

    #[test]
    fn out_of_range_indices() {
        let family = listed();
        assert!(matches!(unrank(&family, &Count::zero()), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(unrank(&family, &Count::from(7u32)), Err(Error::IndexOutOfRange { .. })));
        assert!(enumerate_range(&family, &Count::from(3u32), &Count::from(2u32)).is_err());
    }

    #[test]
    fn non_member_rank() {
        let family = listed();
        let w = Word::new(3, vec![2, 2]).unwrap();
        assert_eq!(rank(&family, &w), Err(Error::NotAMember));
    }

    #[test]
    fn uniform_index_stays_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for total in [1u32, 2, 3, 255, 256, 257, 1000] {
            let total = Count::from(total);
            for _ in 0..200 {
                let i = uniform_index(&mut rng, &total);
                assert!(i >= Count::one() && i <= total);
            }
        }
    }
}
