//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the counting code it is used to check.

#![allow(dead_code)]

pub mod reference;

use std::collections::HashMap;

use num_bigint::BigUint;

/// All permutations of `[n]` (1-based letters) in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

pub fn is_derangement(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| v != i + 1)
}

/// `pi(i) != i` and `pi(i) + 1 != i (mod n)`.
pub fn is_menage(p: &[usize]) -> bool {
    let n = p.len();
    p.iter()
        .enumerate()
        .all(|(i, &v)| v != i + 1 && (v + 1) % n != (i + 1) % n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Derangement,
    Menage,
}

impl Kind {
    pub fn accepts(self, p: &[usize]) -> bool {
        match self {
            Kind::Derangement => is_derangement(p),
            Kind::Menage => is_menage(p),
        }
    }
}

/// Sorted members of the family, by filtering all of `S_n`.
pub fn members(kind: Kind, n: usize) -> Vec<Vec<usize>> {
    permutations(n).into_iter().filter(|p| kind.accepts(p)).collect()
}

/// Map from every prefix of every member to the number of members with it.
pub fn prefix_counts(members: &[Vec<usize>]) -> HashMap<Vec<usize>, u64> {
    let mut map = HashMap::new();
    for m in members {
        for k in 0..=m.len() {
            *map.entry(m[..k].to_vec()).or_insert(0) += 1;
        }
    }
    map
}

/// Every word over `[n]` with distinct letters and length at most `n`.
pub fn injective_words(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 1..=n {
                if !w.contains(&x) {
                    let mut v: Vec<usize> = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every word over `[n]` of length at most `max_len`, repeats allowed.
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let next: Vec<Vec<usize>> = frontier
            .iter()
            .flat_map(|w| {
                (1..=n).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Full rook placements on a board given as a membership predicate, by
/// enumerating permutations.
pub fn brute_placements(m: usize, allowed: impl Fn(usize, usize) -> bool) -> u64 {
    permutations(m)
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &c)| allowed(i + 1, c)))
        .count() as u64
}

fn big_binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = vec![BigUint::from(1u32); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[k].clone()
}

/// Touchard's closed form for the number of menage permutations of `[n]`,
/// `sum_k (-1)^k (2n / (2n - k)) C(2n - k, k) (n - k)!`, for `n >= 2`.
pub fn touchard(n: usize) -> BigUint {
    let mut pos = BigUint::from(0u32);
    let mut neg = BigUint::from(0u32);
    for k in 0..=n {
        // 2n/(2n-k) C(2n-k, k) = C(2n-k, k) + C(2n-k-1, k-1)
        let mut coeff = big_binomial(2 * n - k, k);
        if k > 0 {
            coeff += big_binomial(2 * n - k - 1, k - 1);
        }
        let fact: BigUint = (1..=n - k).map(BigUint::from).product();
        if k % 2 == 0 {
            pos += coeff * fact;
        } else {
            neg += coeff * fact;
        }
    }
    pos - neg
}

/// `1/n sum_{d | n} mu(d) 2^(n/d)`: binary Lyndon words of length `n`.
pub fn necklace_lyndon_count(n: usize) -> i64 {
    fn mobius(mut d: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= d {
            if d % p == 0 {
                d /= p;
                if d % p == 0 {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if d > 1 {
            result = -result;
        }
        result
    }
    let total: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(d) * (1i64 << (n / d)))
        .sum();
    total / n as i64
}
