//! Integer partitions and the small number-theoretic helpers used throughout
//! the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is the canonical order used for every map keyed by partitions:
/// first by size, then reverse-lexicographically within a size, so that
/// `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Union of the two multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.parts, &other.parts);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                merged.push(a[i]);
                i += 1;
            } else {
                merged.push(b[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&a[i..]);
        merged.extend_from_slice(&b[j..]);
        Partition { parts: merged }
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// Removes one part equal to `i`, if present.
    pub fn remove_part(&self, i: usize) -> Option<Partition> {
        let pos = self.parts.iter().rposition(|&p| p == i)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_powers_of_two(&self) -> bool {
        self.parts.iter().all(|&p| p.is_power_of_two())
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// Exponent notation as printed in character tables, e.g. `(3,2^2,1^3)`.
    pub fn exponent_notation(&self) -> String {
        let body: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect();
        format!("({})", body.join(","))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the wire form `[2,1,1]` (brackets optional, `[]` is the empty partition).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Restrictions on the parts produced by [`partitions_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartFilter {
    All,
    DistinctParts,
    PartsPowersOfTwo,
    NoPartEqualOne,
    PowersOfTwoAndNoOne,
}

impl PartFilter {
    fn allows_part(self, p: usize) -> bool {
        match self {
            PartFilter::All | PartFilter::DistinctParts => true,
            PartFilter::PartsPowersOfTwo => p.is_power_of_two(),
            PartFilter::NoPartEqualOne => p >= 2,
            PartFilter::PowersOfTwoAndNoOne => p >= 2 && p.is_power_of_two(),
        }
    }
}

/// All partitions of `n` satisfying `filter`, in reverse-lexicographic order.
pub fn partitions_of(n: usize, filter: PartFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let strict = filter == PartFilter::DistinctParts;
    generate(n, n, strict, filter, &mut current, &mut out);
    out
}

fn generate(
    remaining: usize,
    max_part: usize,
    strict: bool,
    filter: PartFilter,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        if !filter.allows_part(p) {
            continue;
        }
        current.push(p);
        let next_max = if strict { p - 1 } else { p };
        generate(remaining - p, next_max, strict, filter, current, out);
        current.pop();
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            table[m] += table[m - part];
        }
    }
    table[n]
}

/// Centralizer order `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, mult) in lambda.multiplicities() {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Number-theoretic Möbius function; `mobius(1) = 1`.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let factors = prime_factors(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn totient(n: usize) -> u64 {
    assert!(n >= 1, "totient is defined on positive integers");
    prime_factors(n)
        .into_iter()
        .fold(n as u64, |acc, (p, _)| acc / p as u64 * (p as u64 - 1))
}

/// Largest power of two dividing `n`.
pub fn two_adic_part(n: usize) -> usize {
    assert!(n >= 1, "two_adic_part is defined on positive integers");
    1 << n.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_has_only_the_empty_partition() {
        assert_eq!(partitions_of(0, PartFilter::All), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_canonical_order() {
        let all = partitions_of(4, PartFilter::All);
        assert_eq!(
            all,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn powers_of_two_filter() {
        let got = partitions_of(4, PartFilter::PartsPowersOfTwo);
        assert_eq!(got, vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn filters_match_brute_force() {
        for n in 0..=20 {
            let all = partitions_of(n, PartFilter::All);
            assert_eq!(all.len(), partition_count(n));
            let check = |filter: PartFilter, pred: &dyn Fn(&Partition) -> bool| {
                let expected: Vec<_> = all.iter().filter(|l| pred(l)).cloned().collect();
                assert_eq!(partitions_of(n, filter), expected, "n={n} {filter:?}");
            };
            check(PartFilter::DistinctParts, &|l| l.has_distinct_parts());
            check(PartFilter::PartsPowersOfTwo, &|l| l.all_parts_powers_of_two());
            check(PartFilter::NoPartEqualOne, &|l| l.multiplicity(1) == 0);
            check(PartFilter::PowersOfTwoAndNoOne, &|l| {
                l.all_parts_powers_of_two() && l.multiplicity(1) == 0
            });
            let both: Vec<_> = partitions_of(n, PartFilter::DistinctParts)
                .into_iter()
                .filter(|l| l.all_parts_powers_of_two())
                .collect();
            let brute: Vec<_> = all
                .iter()
                .filter(|l| l.has_distinct_parts() && l.all_parts_powers_of_two())
                .cloned()
                .collect();
            assert_eq!(both, brute);
        }
    }

    #[test]
    fn z_values() {
        for n in 1..=8 {
            assert_eq!(z_of(&Partition::column(n)), factorial(n));
            assert_eq!(z_of(&Partition::row(n)), BigInt::from(n));
        }
        assert_eq!(z_of(&p(&[2, 1, 1])), BigInt::from(4));
        assert_eq!(z_of(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=12 {
            let total: BigInt = partitions_of(n, PartFilter::All)
                .iter()
                .map(|l| factorial(n) / z_of(l))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(mobius(4), 0);
        assert_eq!(totient(4), 2);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(two_adic_part(12), 4);
        assert_eq!(two_adic_part(7), 1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(gcd(12, 18), 6);
    }

    #[test]
    fn divisor_sums() {
        for n in 1..=1000 {
            let ds = divisors(n);
            assert_eq!(ds.iter().map(|&d| totient(d)).sum::<u64>(), n as u64);
            let mu: i64 = ds.iter().map(|&d| mobius(d)).sum();
            assert_eq!(mu, i64::from(n == 1));
        }
    }

    #[test]
    fn wire_form_round_trip() {
        let l = p(&[2, 1, 1]);
        assert_eq!(l.to_string(), "[2,1,1]");
        assert_eq!("[2,1,1]".parse::<Partition>().unwrap(), l);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 2, 2, 1, 1, 1]).exponent_notation(), "(3,2^2,1^3)");
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=9 {
            for l in partitions_of(n, PartFilter::All) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().size(), n);
            }
        }
    }
}
