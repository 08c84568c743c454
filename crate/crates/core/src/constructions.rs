//! Single-value constructions derived from the series operators: Whitney
//! homology pieces, the `Vh_k(n)` modules and their truncated alternating
//! sums, the injective-words pieces `Δ_n^k`, the restriction sequences
//! `σ_n`, `τ_n`, and the `κ`-iteration.

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie_family::Family;
use crate::partitions::{mobius, partitions_of, PartFilter};
use crate::series::{binomial_product, length_slice, Outer, Series};
use crate::symfunc::{plethysm, Rational, SymFunc};

fn alternating_prefix(k: usize, term: impl Fn(usize) -> Result<SymFunc>) -> Result<SymFunc> {
    let mut acc = SymFunc::zero();
    for j in 0..=k {
        let t = term(j)?;
        if (k - j) % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    Ok(acc)
}

/// `ω(e_{n-k} ∘ Lie)|_n`, the `k`-th Whitney homology of the partition lattice.
pub fn whitney(n: usize, k: usize) -> Result<SymFunc> {
    if k >= n {
        return Ok(SymFunc::zero());
    }
    let q = Series::family(Family::Lie, n);
    Ok(length_slice(Outer::E, &q, n, n - k)?.omega())
}

/// `h_{n-k} ∘ Lie^(2)` restricted to degree `n`.
pub fn vh(n: usize, k: usize) -> Result<SymFunc> {
    if k >= n {
        return Ok(SymFunc::zero());
    }
    let q = Series::family(Family::Lie2, n);
    length_slice(Outer::H, &q, n, n - k)
}

/// `Σ_{j≤k} (-1)^{k-j} Vh_j(n)`.
pub fn u(n: usize, k: usize) -> Result<SymFunc> {
    let q = Series::family(Family::Lie2, n);
    alternating_prefix(k, |j| {
        if j >= n {
            Ok(SymFunc::zero())
        } else {
            length_slice(Outer::H, &q, n, n - j)
        }
    })
}

/// `Σ_{j≤k} (-1)^{k-j} WH_j(Π_n)`, the rank-selected homology of the first `k` ranks.
pub fn beta_rank(n: usize, k: usize) -> Result<SymFunc> {
    let q = Series::family(Family::Lie, n);
    alternating_prefix(k, |j| {
        if j >= n {
            Ok(SymFunc::zero())
        } else {
            Ok(length_slice(Outer::E, &q, n, n - j)?.omega())
        }
    })
}

/// `Δ_n = Σ_{k=0}^{n} (-1)^k p_1^{n-k} h_k`.
pub fn delta(n: usize) -> SymFunc {
    (0..=n)
        .map(|k| {
            let t = &SymFunc::p1_pow(n - k) * &SymFunc::h(k);
            if k % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// `e_k ∘ Lie^(2)_{≥2}` restricted to degree `n`.
pub fn delta_part(n: usize, k: usize) -> Result<SymFunc> {
    let q = Series::family(Family::Lie2, n).restrict_ge2()?;
    length_slice(Outer::E, &q, n, k)
}

/// `h_k ∘ Lie_{≥2}` restricted to degree `n` (a Hodge piece after `ω`).
pub fn hodge_part(n: usize, k: usize) -> Result<SymFunc> {
    let q = Series::family(Family::Lie, n).restrict_ge2()?;
    length_slice(Outer::H, &q, n, k)
}

/// `g_n = Σ p_λ` over partitions of `n` into powers of 2 with no part 1.
pub fn g(n: usize) -> SymFunc {
    SymFunc::from_terms(
        partitions_of(n, PartFilter::PowersOfTwoAndNoOne)
            .into_iter()
            .map(|l| (l, Rational::one())),
    )
}

fn point_values(f: &Series, t: i64) -> Result<Vec<Rational>> {
    let t = Rational::from_integer(t.into());
    f.slots().iter().map(|c| c.point_specialize(&t)).collect()
}

/// `Σ g_n = ∏_{m≥2} (1 - p_m)^{-f_m(1)}` for a series with `f_1 = p_1`.
pub fn g_series(f: &Series) -> Result<Series> {
    f.restrict_ge2()?;
    let vals = point_values(f, 1)?;
    Ok(binomial_product(2..=f.cap(), -1, f.cap(), |m| vec![-vals[m].clone()]).at_v(1))
}

/// `Σ k_n = ∏_{m≥2} (1 - p_m)^{f_m(-1)}` for a series with `f_1 = p_1`.
pub fn k_series(f: &Series) -> Result<Series> {
    f.restrict_ge2()?;
    let vals = point_values(f, -1)?;
    Ok(binomial_product(2..=f.cap(), -1, f.cap(), |m| vec![vals[m].clone()]).at_v(1))
}

fn signed_convolution(outer: impl Fn(usize) -> SymFunc, inner: &Series) -> Series {
    Series::from_fn(inner.cap(), |n| {
        (0..=n)
            .map(|i| {
                let t = &outer(n - i) * inner.degree_ref(i);
                if i % 2 == 1 {
                    -t
                } else {
                    t
                }
            })
            .sum()
    })
}

/// `σ_n = Σ_i (-1)^i e_{n-i} g_i` for every degree up to the cap of `f`.
pub fn sigma_series(f: &Series) -> Result<Series> {
    Ok(signed_convolution(SymFunc::e, &g_series(f)?))
}

/// `τ_n = Σ_i (-1)^i h_{n-i} k_i` for every degree up to the cap of `f`.
pub fn tau_series(f: &Series) -> Result<Series> {
    Ok(signed_convolution(SymFunc::h, &k_series(f)?))
}

/// `σ_n` for `Lie^(2)`: `Σ_i e_{n-2i} g_{2i}`.
pub fn sigma(n: usize) -> Result<SymFunc> {
    Ok(sigma_series(&Series::family(Family::Lie2, n))?.degree(n))
}

/// `τ_n` for `Lie`: `h_n - h_{n-2} p_2`.
pub fn tau(n: usize) -> Result<SymFunc> {
    Ok(tau_series(&Series::family(Family::Lie, n))?.degree(n))
}

/// `T_1 + T_2 + … + T_depth` with `T_1 = base` and `T_{j+1} = base ∘ T_j`.
pub fn kappa_iterate(base: &Series, depth: usize) -> Result<Series> {
    let mut sum = Series::zero(base.cap());
    let mut term = base.clone();
    for _ in 0..depth {
        sum = &sum + &term;
        term = base.compose(&term)?;
    }
    Ok(sum)
}

/// Iterates until the next term vanishes below the cap. Returns the sum and
/// the number of terms used; `base` must start in degree 2 or higher.
pub fn kappa_fixed_point(base: &Series) -> Result<(Series, usize)> {
    if !base.degree_ref(0).is_zero() || (base.cap() >= 1 && !base.degree_ref(1).is_zero()) {
        return Err(Error::InvalidArgument(
            "iteration needs a series starting in degree 2".into(),
        ));
    }
    let mut sum = Series::zero(base.cap());
    let mut term = base.clone();
    let mut depth = 0;
    while term.slots().iter().any(|c| !c.is_zero()) {
        sum = &sum + &term;
        term = base.compose(&term)?;
        depth += 1;
    }
    Ok((sum, depth))
}

/// `Σ_k p_k ∘ Lie` for `Lie`, and `Σ_k p_{2k-1} ∘ Lie^(2)` for `Lie^(2)`;
/// both equal `Σ Conj_n`.
pub fn conj_from(family: Family, cap: usize) -> Result<Series> {
    let step = match family {
        Family::Lie => 1,
        Family::Lie2 => 2,
        Family::Conj => {
            return Err(Error::InvalidArgument("conj_from takes Lie or Lie2".into()));
        }
    };
    let f = Series::family(family, cap);
    Ok(Series::from_fn(cap, |n| {
        (1..=n)
            .step_by(step)
            .filter(|k| n % k == 0)
            .map(|k| f.degree_ref(n / k).adams(k))
            .sum()
    }))
}

/// `Σ_k μ(k) p_k ∘ Conj` (all `k`, giving `Lie`) or over odd `k` (giving `Lie^(2)`).
pub fn from_conj(odd_only: bool, cap: usize) -> Result<Series> {
    let c = Series::family(Family::Conj, cap).to_symfunc();
    let outer: SymFunc = (1..=cap)
        .filter(|k| !odd_only || k % 2 == 1)
        .map(|k| SymFunc::p_k(k).scale(&Rational::from_integer(mobius(k).into())))
        .sum();
    Ok(Series::from_symfunc(&plethysm(&outer, &c, cap)?, cap))
}
