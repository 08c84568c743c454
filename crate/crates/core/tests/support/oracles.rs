//! Independent reference computations used only by tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use plethy_core::partitions::{factorial, Partition};
use plethy_core::symfunc::{integer, rational};
use plethy_core::SymFunc;

/// `n! / Π hooks`.
pub fn hook_length_dim(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let conj = lambda.conjugate();
    let cols = conj.parts();
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for (j, &col) in cols.iter().enumerate().take(row) {
            hooks *= BigInt::from((row - j - 1) + (col - i - 1) + 1);
        }
    }
    factorial(lambda.size()) / hooks
}

fn det(m: &[Vec<SymFunc>]) -> SymFunc {
    let n = m.len();
    if n == 0 {
        return SymFunc::one();
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<SymFunc>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let t = &m[0][j] * &det(&minor);
            if j % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `s_λ = det(h_{λ_i - i + j})`, or `det(e_{λ'_i - i + j})` when that matrix is smaller.
pub fn jacobi_trudi(lambda: &Partition) -> SymFunc {
    let conj = lambda.conjugate();
    let (shape, use_e) = if conj.len() < lambda.len() {
        (conj, true)
    } else {
        (lambda.clone(), false)
    };
    let parts = shape.parts();
    let l = parts.len();
    let entry = |k: i64| {
        if use_e {
            SymFunc::e_signed(k)
        } else {
            SymFunc::h_signed(k)
        }
    };
    let m: Vec<Vec<SymFunc>> = (0..l)
        .map(|i| (0..l).map(|j| entry(parts[i] as i64 - i as i64 + j as i64)).collect())
        .collect();
    det(&m)
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for s in 0..perm.len() {
        if !seen[s] {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            parts.push(len);
        }
    }
    Partition::from_unsorted(parts)
}

/// Characteristic of the character of `C_n` sending the long cycle to
/// `exp(2πi r/n)`, induced to `S_n`. Works with actual permutations and
/// floating roots of unity, rounding class sums to integers.
pub fn induced_cyclic_character(n: usize, r: usize) -> SymFunc {
    let mut out = SymFunc::zero();
    let mut by_type: std::collections::BTreeMap<Partition, f64> = Default::default();
    for j in 0..n {
        let perm: Vec<usize> = (0..n).map(|i| (i + j) % n).collect();
        let angle = 2.0 * std::f64::consts::PI * ((j * r) % n) as f64 / n as f64;
        *by_type.entry(cycle_type(&perm)).or_default() += angle.cos();
    }
    for (mu, sum) in by_type {
        let rounded = sum.round();
        assert!((sum - rounded).abs() < 1e-9, "class sum {sum} is not an integer");
        if rounded != 0.0 {
            out += &SymFunc::term(mu, rational(rounded as i64, n as i64));
        }
    }
    out
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Fixed-point-free permutations of `0..n`, counted one by one.
pub fn derangements_by_count(n: usize) -> u64 {
    permutations(n)
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &x)| i != x))
        .count() as u64
}

/// Permutations of `0..n` with exactly `k` cycles, counted one by one.
pub fn permutations_with_cycles(n: usize, k: usize) -> u64 {
    permutations(n)
        .iter()
        .filter(|p| cycle_type(p).len() == k)
        .count() as u64
}

/// Unsigned Stirling numbers of the first kind from the recurrence.
pub fn stirling_cycle(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j + 1] += c;
            next[j] += c * BigInt::from(m);
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// Coefficientwise integer check for a Schur expansion's dimension.
pub fn dim_by_hooks(terms: &std::collections::BTreeMap<Partition, BigInt>) -> BigInt {
    terms.iter().map(|(l, c)| c * hook_length_dim(l)).sum()
}

pub fn int_sym(n: i64) -> SymFunc {
    SymFunc::constant(integer(n))
}
