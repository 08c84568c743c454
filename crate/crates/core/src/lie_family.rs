//! Characteristics of modules induced from linear characters of the cyclic
//! group `C_n`: `Lie_n`, `Conj_n`, the 2-adic variant `Lie_n^(2)`, and the
//! general family `f_n = (1/n) Σ_{d|n} ψ(d) p_d^{n/d}`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::partitions::{divisors, gcd, mobius, partitions_of, totient, two_adic_part, PartFilter, Partition};
use crate::symfunc::{integer, rational, Rational, SymFunc};

/// The arithmetic function `ψ` defining `f_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiSpec {
    Mobius,
    Totient,
    /// `ψ(d) = c_d(r)`, the Ramanujan sum; gives `ℓ_n^(r)` at every `n`.
    Ramanujan(usize),
    /// `ψ(d) = φ(2-part of d)·μ(odd part of d)`; gives `Lie_n^(2)` at every `n`.
    RamanujanTwoAdic,
    /// Values for `d = 1, 2, ...`; missing entries are zero.
    Custom(Vec<i64>),
}

impl PsiSpec {
    pub fn value(&self, d: usize) -> i64 {
        match self {
            PsiSpec::Mobius => mobius(d),
            PsiSpec::Totient => totient(d) as i64,
            PsiSpec::Ramanujan(r) => ramanujan_sum(d, *r),
            PsiSpec::RamanujanTwoAdic => {
                let two = two_adic_part(d);
                totient(two) as i64 * mobius(d / two)
            }
            PsiSpec::Custom(table) => table.get(d - 1).copied().unwrap_or(0),
        }
    }

    /// Coefficients of `f_m(v) = (1/m) Σ_{d|m} ψ(d) v^{m/d}`, indexed by power of `v`.
    pub fn polynomial(&self, m: usize) -> Vec<Rational> {
        let mut coeffs = vec![Rational::zero(); m + 1];
        for d in divisors(m) {
            coeffs[m / d] += rational(self.value(d), m as i64);
        }
        coeffs
    }

    /// `f_m(t)` at a rational point.
    pub fn eval_polynomial(&self, m: usize, t: &Rational) -> Rational {
        self.polynomial(m)
            .iter()
            .enumerate()
            .map(|(k, c)| c * num_traits::pow(t.clone(), k))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

/// `f_n = (1/n) Σ_{d|n} ψ(d) p_d^{n/d}`.
pub fn f_from_psi(psi: &PsiSpec, n: usize) -> SymFunc {
    assert!(n >= 1, "f_n is defined for n >= 1");
    SymFunc::from_terms(divisors(n).into_iter().map(|d| {
        (
            Partition::from_sorted_unchecked(vec![d; n / d]),
            rational(psi.value(d), n as i64),
        )
    }))
}

/// Sum of the `r`-th powers of the primitive `d`-th roots of unity,
/// `φ(d) μ(d/g) / φ(d/g)` with `g = gcd(d, r)`.
pub fn ramanujan_sum(d: usize, r: usize) -> i64 {
    assert!(d >= 1 && r >= 1);
    let q = d / gcd(d, r);
    totient(d) as i64 * mobius(q) / totient(q) as i64
}

/// `ℓ_n^(r)`, the characteristic of `exp(2πi r/n)↑_{C_n}^{S_n}`.
pub fn ell(n: usize, r: usize) -> SymFunc {
    assert!(r >= 1 && r <= n, "ell(n, r) needs 1 <= r <= n");
    f_from_psi(&PsiSpec::Ramanujan(r), n)
}

pub fn lie(n: usize) -> SymFunc {
    f_from_psi(&PsiSpec::Mobius, n)
}

pub fn conj(n: usize) -> SymFunc {
    f_from_psi(&PsiSpec::Totient, n)
}

/// `Lie_n^(2) = ℓ_n^(k)` with `k` the largest power of two dividing `n`.
pub fn lie2(n: usize) -> SymFunc {
    ell(n, two_adic_part(n))
}

/// Which of the cyclic-induced families a construction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Lie,
    Lie2,
    Conj,
}

impl Family {
    pub fn psi(self) -> PsiSpec {
        match self {
            Family::Lie => PsiSpec::Mobius,
            Family::Lie2 => PsiSpec::RamanujanTwoAdic,
            Family::Conj => PsiSpec::Totient,
        }
    }

    pub fn term(self, n: usize) -> SymFunc {
        match self {
            Family::Lie => lie(n),
            Family::Lie2 => lie2(n),
            Family::Conj => conj(n),
        }
    }
}

/// Degree-`n` part of `Σ_{k≥0} Lie ∘ p_{2^k}`.
pub fn lie2_via_lie(n: usize) -> SymFunc {
    let mut out = SymFunc::zero();
    let mut power = 1;
    while power <= n {
        if n % power == 0 {
            out += &lie(n / power).adams(power);
        }
        power *= 2;
    }
    out
}

/// Degree-`n` part of `Lie^(2) - Lie^(2) ∘ p_2`.
pub fn lie_via_lie2(n: usize) -> SymFunc {
    let mut out = lie2(n);
    if n % 2 == 0 {
        out -= &lie2(n / 2).adams(2);
    }
    out
}

/// `p_1·F_{n-1} - F_n`; for `Lie` its image under `ω` is the Whitehouse module.
pub fn whitehouse_deficit(n: usize, family: Family) -> SymFunc {
    assert!(n >= 2, "whitehouse_deficit needs n >= 2");
    &(&SymFunc::p_k(1) * &family.term(n - 1)) - &family.term(n)
}

/// A standard Young tableau stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn row_of(&self) -> Vec<usize> {
        let n = self.shape.size();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of[x] = r;
            }
        }
        row_of
    }

    /// `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let row_of = self.row_of();
        (1..self.shape.size())
            .filter(|&i| row_of[i + 1] > row_of[i])
            .collect()
    }

    pub fn major_index(&self) -> usize {
        self.descents().iter().sum()
    }
}

/// Every standard tableau of the given shape, by exhaustive backtracking.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fill(shape.parts(), 1, shape.size(), &mut rows, &mut out, shape);
    out
}

fn fill(
    shape: &[usize],
    next: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
    partition: &Partition,
) {
    if next > n {
        out.push(StandardTableau {
            shape: partition.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits_row = len < shape[r];
        let fits_column = r == 0 || rows[r - 1].len() > len;
        if fits_row && fits_column {
            rows[r].push(next);
            fill(shape, next + 1, n, rows, out, partition);
            rows[r].pop();
        }
    }
}

/// Number of standard tableaux of shape `λ ⊢ n` whose major index is `≡ r (mod n)`.
pub fn syt_multiplicity(lambda: &Partition, r: usize) -> usize {
    let n = lambda.size();
    assert!(n >= 1 && r >= 1 && r <= n);
    standard_tableaux(lambda)
        .iter()
        .filter(|t| t.major_index() % n == r % n)
        .count()
}

/// For each shape `λ ⊢ n`, the counts of standard tableaux by major index mod `n`.
pub fn major_index_distribution(n: usize) -> Vec<(Partition, Vec<usize>)> {
    partitions_of(n, PartFilter::All)
        .into_par_iter()
        .map(|lambda| {
            let mut counts = vec![0; n];
            for t in standard_tableaux(&lambda) {
                counts[t.major_index() % n] += 1;
            }
            (lambda, counts)
        })
        .collect()
}

/// `f_n(t)` at an integer point.
pub fn value_at(psi: &PsiSpec, n: usize, t: i64) -> Rational {
    psi.eval_polynomial(n, &integer(t))
}
