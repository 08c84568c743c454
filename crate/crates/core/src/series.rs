//! Truncated series of symmetric functions and the plethystic operators
//! built on them.
//!
//! A [`Series`] holds one homogeneous slot per degree `0..=cap`. A
//! [`GradedSeries`] adds a second index, the length weight `v`, so that
//! `H(v)[F] = Σ_λ v^{ℓ(λ)} H_λ[F]` can be compared slot by slot with the
//! product formulas; setting `v = ±1` is a fold.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie_family::{f_from_psi, Family, PsiSpec};
use crate::partitions::{partitions_of, PartFilter, Partition};
use crate::symfunc::{integer, plethysm, Rational, SymFunc};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    cap: usize,
    coeffs: Vec<SymFunc>,
}

impl Series {
    pub fn zero(cap: usize) -> Self {
        Self {
            cap,
            coeffs: vec![SymFunc::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::from_fn(cap, |n| if n == 0 { SymFunc::one() } else { SymFunc::zero() })
    }

    /// Builds the series whose degree-`n` slot is `f(n)`. Each value must be
    /// homogeneous of degree `n`.
    pub fn from_fn(cap: usize, mut f: impl FnMut(usize) -> SymFunc) -> Self {
        let coeffs: Vec<SymFunc> = (0..=cap).map(&mut f).collect();
        debug_assert!(coeffs
            .iter()
            .enumerate()
            .all(|(n, c)| c.is_zero() || c.homogeneous_degree().ok() == Some(Some(n))));
        Self { cap, coeffs }
    }

    /// Splits an inhomogeneous function by degree, dropping anything above `cap`.
    pub fn from_symfunc(f: &SymFunc, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for (lambda, c) in f.terms() {
            let d = lambda.size();
            if d <= cap {
                out.coeffs[d].add_term(lambda.clone(), c.clone());
            }
        }
        out
    }

    /// `Σ_{n≥1} f_n` for one of the named module families.
    pub fn family(family: Family, cap: usize) -> Self {
        Self::from_fn(cap, |n| if n == 0 { SymFunc::zero() } else { family.term(n) })
    }

    pub fn from_psi(psi: &PsiSpec, cap: usize) -> Self {
        Self::from_fn(cap, |n| if n == 0 { SymFunc::zero() } else { f_from_psi(psi, n) })
    }

    /// `H = Σ_{n≥0} h_n`.
    pub fn h_all(cap: usize) -> Self {
        Self::from_fn(cap, SymFunc::h)
    }

    /// `E = Σ_{n≥0} e_n`.
    pub fn e_all(cap: usize) -> Self {
        Self::from_fn(cap, SymFunc::e)
    }

    /// `H^± = Σ (-1)^n h_n`.
    pub fn h_pm(cap: usize) -> Self {
        Self::h_all(cap).alternate()
    }

    /// `E^± = Σ (-1)^n e_n`.
    pub fn e_pm(cap: usize) -> Self {
        Self::e_all(cap).alternate()
    }

    /// `(1 - p_1)^{-1} = Σ_{n≥0} p_1^n`.
    pub fn regular(cap: usize) -> Self {
        Self::from_fn(cap, SymFunc::p1_pow)
    }

    /// `Σ_{n≥2} s_{(n-1,1)}`.
    pub fn kappa(cap: usize) -> Self {
        Self::from_fn(cap, |n| {
            if n < 2 {
                SymFunc::zero()
            } else {
                crate::schur::s(&[n - 1, 1])
            }
        })
    }

    /// `Σ_{λ⊢n} p_λ` over the partitions accepted by `filter`, with a sign
    /// `(-1)^{ℓ(λ)}` when `signed` is set.
    pub fn partition_sum(cap: usize, filter: PartFilter, signed: bool) -> Self {
        Self::from_fn(cap, |n| {
            SymFunc::from_terms(partitions_of(n, filter).into_iter().map(|l| {
                let c = if signed && l.len() % 2 == 1 { -Rational::one() } else { Rational::one() };
                (l, c)
            }))
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Degree-`n` slot; zero beyond the cap.
    pub fn degree(&self, n: usize) -> SymFunc {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn degree_ref(&self, n: usize) -> &SymFunc {
        &self.coeffs[n]
    }

    pub fn slots(&self) -> &[SymFunc] {
        &self.coeffs
    }

    pub fn to_symfunc(&self) -> SymFunc {
        self.coeffs.iter().cloned().sum()
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        Self::from_fn(cap, |n| self.degree(n))
    }

    pub fn map(&self, f: impl Fn(usize, &SymFunc) -> SymFunc) -> Self {
        Self::from_fn(self.cap, |n| f(n, &self.coeffs[n]))
    }

    pub fn omega(&self) -> Self {
        self.map(|_, c| c.omega())
    }

    /// `Σ (-1)^n q_n`.
    pub fn alternate(&self) -> Self {
        self.map(|n, c| if n % 2 == 1 { -c } else { c.clone() })
    }

    /// `Q^alt = Σ (-1)^{n-1} q_n`.
    pub fn alt(&self) -> Self {
        -&self.alternate()
    }

    /// `Σ (-1)^{n-1} ω(q_n)`, the series written `ω(Q)^alt`.
    pub fn omega_alt(&self) -> Self {
        self.omega().alt()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|_, f| f.scale(c))
    }

    pub fn mul(&self, other: &Series) -> Series {
        let cap = self.cap.min(other.cap);
        Self::from_fn(cap, |n| {
            (0..=n)
                .map(|k| &self.coeffs[k] * &other.coeffs[n - k])
                .sum()
        })
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = self.coeffs[0].coeff(&Partition::empty());
        if c0.is_zero() {
            return Err(Error::InvalidArgument("series has no invertible constant term".into()));
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.cap);
        out.coeffs[0] = SymFunc::constant(inv0.clone());
        for n in 1..=self.cap {
            let acc: SymFunc = (1..=n).map(|k| &self.coeffs[k] * &out.coeffs[n - k]).sum();
            out.coeffs[n] = acc.scale(&-inv0.clone());
        }
        Ok(out)
    }

    /// `self ∘ inner`, truncated at the smaller cap.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        let cap = self.cap.min(inner.cap);
        let f = plethysm(&self.to_symfunc(), &inner.to_symfunc(), cap)?;
        Ok(Self::from_symfunc(&f, cap))
    }

    /// Degree-1 slot zeroed; requires `f_1 = p_1`.
    pub fn restrict_ge2(&self) -> Result<Series> {
        if self.cap >= 1 && self.coeffs[1] != SymFunc::p_k(1) {
            return Err(Error::LinearTermNotP1);
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("series has a constant term".into()));
        }
        Ok(self.map(|n, c| if n == 1 { SymFunc::zero() } else { c.clone() }))
    }

    /// The first degree at which the two series differ, with the difference.
    pub fn first_difference(&self, other: &Series) -> Option<(usize, SymFunc)> {
        let cap = self.cap.min(other.cap);
        (0..=cap).find_map(|n| {
            let d = &self.coeffs[n] - &other.coeffs[n];
            (!d.is_zero()).then_some((n, d))
        })
    }
}

impl std::ops::Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let cap = self.cap.min(rhs.cap);
        Series::from_fn(cap, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl std::ops::Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let cap = self.cap.min(rhs.cap);
        Series::from_fn(cap, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl std::ops::Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.map(|_, c| -c)
    }
}

/// Plethystic inverse of `g` with `g_1 = c·p_1`, `c ≠ 0`, computed degree by
/// degree: `f_1 = p_1/c` and `f_n = -(1/c)·[g ∘ f_{<n}]_n`.
pub fn plethystic_inverse(g: &Series) -> Result<Series> {
    let cap = g.cap;
    if !g.coeffs[0].is_zero() {
        return Err(Error::ConstantTermInPlethysm);
    }
    if cap == 0 {
        return Ok(Series::zero(0));
    }
    let g1 = &g.coeffs[1];
    let c = g1.coeff(&Partition::column(1));
    if c.is_zero() || g1.num_terms() != 1 {
        return Err(Error::NonInvertibleLinearTerm(g1.to_string()));
    }
    let inv = c.recip();
    let outer = g.to_symfunc();
    let mut f = Series::zero(cap);
    f.coeffs[1] = SymFunc::p_k(1).scale(&inv);
    for n in 2..=cap {
        let partial = f.to_symfunc();
        let composed = plethysm(&outer, &partial, n)?;
        f.coeffs[n] = composed.degree_part(n).scale(&-inv.clone());
    }
    Ok(f)
}

/// Which outer function a plethystic series operator applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outer {
    /// `H(v) = Σ v^r h_r`
    H,
    /// `E(v) = Σ v^r e_r`
    E,
    /// `H^±(v) = Σ (-1)^r v^r h_r`
    HPm,
    /// `E^±(v) = Σ (-1)^r v^r e_r`
    EPm,
}

impl Outer {
    fn elementary(self) -> bool {
        matches!(self, Outer::E | Outer::EPm)
    }

    fn signed(self) -> bool {
        matches!(self, Outer::HPm | Outer::EPm)
    }

    /// The unbracketed outer function itself as a graded series: slot `(r, r)`.
    pub fn series(self, cap: usize) -> GradedSeries {
        let mut out = GradedSeries::zero(cap);
        for r in 0..=cap {
            let base = if self.elementary() { SymFunc::e(r) } else { SymFunc::h(r) };
            let base = if self.signed() && r % 2 == 1 { -base } else { base };
            out.set(r, r, base);
        }
        out
    }
}

/// `H_λ[Q]` or `E_λ[Q]` with `h_m ∘ q_i` cached across partitions.
pub struct BracketCache<'a> {
    kind: Outer,
    q: &'a Series,
    powers: HashMap<(usize, usize), SymFunc>,
}

impl<'a> BracketCache<'a> {
    /// Only the unsigned kinds are meaningful here; signs are applied by callers.
    pub fn new(kind: Outer, q: &'a Series) -> Result<Self> {
        if !q.coeffs[0].is_zero() {
            return Err(Error::ConstantTermInPlethysm);
        }
        Ok(Self {
            kind,
            q,
            powers: HashMap::new(),
        })
    }

    fn power(&mut self, m: usize, i: usize) -> Result<SymFunc> {
        if let Some(v) = self.powers.get(&(m, i)) {
            return Ok(v.clone());
        }
        let outer = if self.kind.elementary() { SymFunc::e(m) } else { SymFunc::h(m) };
        let v = plethysm(&outer, self.q.degree_ref(i), m * i)?;
        self.powers.insert((m, i), v.clone());
        Ok(v)
    }

    pub fn bracket(&mut self, lambda: &Partition) -> Result<SymFunc> {
        if lambda.size() > self.q.cap {
            return Err(Error::CapExceeded {
                degree: lambda.size(),
                cap: self.q.cap,
            });
        }
        let mut acc = SymFunc::one();
        for (i, m) in lambda.multiplicities() {
            acc = &acc * &self.power(m, i)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

/// `∏_{i: m_i ≥ 1} h_{m_i} ∘ q_i` (or with `e`); the empty partition gives 1.
pub fn higher_bracket(kind: Outer, lambda: &Partition, q: &Series) -> Result<SymFunc> {
    BracketCache::new(kind, q)?.bracket(lambda)
}

/// Applies `H(v)`, `E(v)`, `H^±(v)` or `E^±(v)` to `f` through higher brackets:
/// slot `(n, r)` is `Σ_{λ⊢n, ℓ(λ)=r} H_λ[F]` (times `(-1)^r` for the signed kinds).
pub fn apply_series(outer: Outer, f: &Series, cap: usize) -> Result<GradedSeries> {
    if cap > f.cap {
        return Err(Error::CapExceeded { degree: cap, cap: f.cap });
    }
    let mut cache = BracketCache::new(outer, f)?;
    let mut out = GradedSeries::zero(cap);
    for n in 0..=cap {
        for lambda in partitions_of(n, PartFilter::All) {
            let b = cache.bracket(&lambda)?;
            let r = lambda.len();
            let b = if outer.signed() && r % 2 == 1 { -b } else { b };
            out.add(n, r, &b);
        }
    }
    Ok(out)
}

/// `Σ_{λ⊢n, ℓ(λ)=r} H_λ[Q]` (or `E_λ`), i.e. the degree-`n` part of `h_r ∘ Q`.
pub fn length_slice(kind: Outer, q: &Series, n: usize, r: usize) -> Result<SymFunc> {
    let mut cache = BracketCache::new(kind, q)?;
    let mut acc = SymFunc::zero();
    for lambda in partitions_of(n, PartFilter::All) {
        if lambda.len() == r {
            acc += &cache.bracket(&lambda)?;
        }
    }
    Ok(if kind.signed() && r % 2 == 1 { -acc } else { acc })
}

/// A truncated series with a second grading by length weight `v`; slot
/// `(n, r)` is homogeneous of degree `n` and carries `v^r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries {
    cap: usize,
    slots: BTreeMap<(usize, usize), SymFunc>,
}

impl GradedSeries {
    pub fn zero(cap: usize) -> Self {
        Self {
            cap,
            slots: BTreeMap::new(),
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut out = Self::zero(cap);
        out.set(0, 0, SymFunc::one());
        out
    }

    /// Places an ungraded series entirely in weight 0.
    pub fn from_series(s: &Series) -> Self {
        let mut out = Self::zero(s.cap);
        for n in 0..=s.cap {
            out.set(n, 0, s.degree(n));
        }
        out
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn slot(&self, n: usize, r: usize) -> SymFunc {
        self.slots.get(&(n, r)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, n: usize, r: usize, f: SymFunc) {
        if n > self.cap {
            return;
        }
        if f.is_zero() {
            self.slots.remove(&(n, r));
        } else {
            self.slots.insert((n, r), f);
        }
    }

    pub fn add(&mut self, n: usize, r: usize, f: &SymFunc) {
        if n > self.cap || f.is_zero() {
            return;
        }
        let entry = self.slots.entry((n, r)).or_default();
        *entry += f;
        if entry.is_zero() {
            self.slots.remove(&(n, r));
        }
    }

    /// Nonzero slots in `(degree, weight)` order.
    pub fn slots(&self) -> impl Iterator<Item = (&(usize, usize), &SymFunc)> {
        self.slots.iter()
    }

    /// Specializes `v`: the degree-`n` slot becomes `Σ_r v^r · slot(n, r)`.
    pub fn at_v(&self, v: i64) -> Series {
        let mut out = Series::zero(self.cap);
        for (&(n, r), f) in &self.slots {
            let w = num_traits::pow(integer(v), r);
            out.coeffs[n] += &f.scale(&w);
        }
        out
    }

    /// Replaces `v` by `-v`.
    pub fn negate_v(&self) -> Self {
        self.map(|_, r, f| if r % 2 == 1 { -f } else { f.clone() })
    }

    pub fn omega(&self) -> Self {
        self.map(|_, _, f| f.omega())
    }

    pub fn map(&self, f: impl Fn(usize, usize, &SymFunc) -> SymFunc) -> Self {
        let mut out = Self::zero(self.cap);
        for (&(n, r), g) in &self.slots {
            out.set(n, r, f(n, r, g));
        }
        out
    }

    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(cap);
        for (&(n1, r1), a) in &self.slots {
            if n1 > cap {
                break;
            }
            for (&(n2, r2), b) in &other.slots {
                if n1 + n2 > cap {
                    break;
                }
                out.add(n1 + n2, r1 + r2, &(a * b));
            }
        }
        out
    }

    /// Inverse of a series whose constant slot `(0, 0)` is exactly 1.
    pub fn inverse(&self) -> Result<GradedSeries> {
        if self.slot(0, 0) != SymFunc::one() || self.slots.keys().any(|&(n, r)| n == 0 && r != 0) {
            return Err(Error::InvalidArgument("graded inverse needs constant term 1".into()));
        }
        let mut out = Self::one(self.cap);
        for n in 1..=self.cap {
            let mut level: BTreeMap<usize, SymFunc> = BTreeMap::new();
            for (&(k, r1), a) in self.slots.range((1, 0)..=(n, usize::MAX)) {
                for (&(_, r2), b) in out.slots.range((n - k, 0)..=(n - k, usize::MAX)) {
                    *level.entry(r1 + r2).or_default() -= &(a * b);
                }
            }
            for (r, f) in level {
                out.set(n, r, f);
            }
        }
        Ok(out)
    }

    /// The first slot at which the two series differ, with the difference.
    pub fn first_difference(&self, other: &GradedSeries) -> Option<((usize, usize), SymFunc)> {
        let cap = self.cap.min(other.cap);
        let keys: std::collections::BTreeSet<(usize, usize)> = self
            .slots
            .keys()
            .chain(other.slots.keys())
            .copied()
            .filter(|&(n, _)| n <= cap)
            .collect();
        keys.into_iter().find_map(|k| {
            let d = &self.slot(k.0, k.1) - &other.slot(k.0, k.1);
            (!d.is_zero()).then_some((k, d))
        })
    }
}

/// A polynomial in `v` with rational coefficients, lowest power first.
pub type VPoly = Vec<Rational>;

fn vpoly_mul(a: &VPoly, b: &VPoly) -> VPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 + s·x)^{a(v)} = Σ_j C(a(v), j) s^j x^j` with `x = p_m`, as a graded series.
fn binomial_factor(m: usize, sign: i64, exponent: &VPoly, cap: usize) -> GradedSeries {
    let mut out = GradedSeries::one(cap);
    let mut binom: VPoly = vec![Rational::one()];
    let mut j = 1;
    while m * j <= cap {
        // C(a, j) = C(a, j-1)·(a - (j-1))/j
        let mut shifted = exponent.clone();
        if shifted.is_empty() {
            shifted.push(Rational::zero());
        }
        shifted[0] -= integer(j as i64 - 1);
        binom = vpoly_mul(&binom, &shifted)
            .into_iter()
            .map(|c| c / integer(j as i64))
            .collect();
        let s = if sign < 0 && j % 2 == 1 { -Rational::one() } else { Rational::one() };
        let lambda = Partition::from_unsorted(vec![m; j]);
        for (r, c) in binom.iter().enumerate() {
            if !c.is_zero() {
                out.set(m * j, r, SymFunc::term(lambda.clone(), c * &s));
            }
        }
        j += 1;
    }
    out
}

/// `∏_{m ∈ ms} (1 + sign·p_m)^{a_m(v)}`, truncated at `cap`.
pub fn binomial_product(
    ms: impl IntoIterator<Item = usize>,
    sign: i64,
    cap: usize,
    exponent: impl Fn(usize) -> VPoly,
) -> GradedSeries {
    let mut out = GradedSeries::one(cap);
    for m in ms {
        if m == 0 || m > cap {
            continue;
        }
        let a = exponent(m);
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        out = out.mul(&binomial_factor(m, sign, &a, cap));
    }
    out
}

/// The product side of each plethystic generating function for `f_n` built
/// from `ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductVariant {
    /// `H(v)[F] = ∏ (1 - p_m)^{-f_m(v)}`
    Sym,
    /// `E(v)[F] = ∏ (1 - p_m)^{f_m(-v)}`
    Ext,
    /// `H(v)[ω(F)^alt] = ∏ (1 + p_m)^{f_m(v)}`
    AltExt,
    /// `E(v)[ω(F)^alt] = ∏ (1 + p_m)^{-f_m(-v)}`
    AltSym,
    /// `E^±(v)[F] = ∏ (1 - p_m)^{f_m(v)}`
    ExtPm,
    /// `H^±(v)[F] = ∏ (1 - p_m)^{-f_m(-v)}`
    SymPm,
}

impl ProductVariant {
    pub const ALL: [ProductVariant; 6] = [
        ProductVariant::Sym,
        ProductVariant::Ext,
        ProductVariant::AltExt,
        ProductVariant::AltSym,
        ProductVariant::ExtPm,
        ProductVariant::SymPm,
    ];

    /// (sign inside the factor, sign of the exponent, sign of `v`)
    fn signs(self) -> (i64, i64, i64) {
        match self {
            ProductVariant::Sym => (-1, -1, 1),
            ProductVariant::Ext => (-1, 1, -1),
            ProductVariant::AltExt => (1, 1, 1),
            ProductVariant::AltSym => (1, -1, -1),
            ProductVariant::ExtPm => (-1, 1, 1),
            ProductVariant::SymPm => (-1, -1, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductVariant::Sym => "sym",
            ProductVariant::Ext => "ext",
            ProductVariant::AltExt => "alt-ext",
            ProductVariant::AltSym => "alt-sym",
            ProductVariant::ExtPm => "ext-pm",
            ProductVariant::SymPm => "sym-pm",
        }
    }
}

/// Expands `∏_m (1 ± p_m)^{±f_m(±v)}` for `f_m(v) = (1/m) Σ_{d|m} ψ(d) v^{m/d}`.
pub fn product_form(psi: &PsiSpec, variant: ProductVariant, cap: usize) -> GradedSeries {
    let (inner, outer, vs) = variant.signs();
    binomial_product(1..=cap, inner, cap, |m| {
        psi.polynomial(m)
            .into_iter()
            .enumerate()
            .map(|(r, c)| {
                let c = if vs < 0 && r % 2 == 1 { -c } else { c };
                if outer < 0 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_family::{lie, lie2};
    use crate::symfunc::rational;

    #[test]
    fn h_times_e_pm_is_one() {
        let cap = 8;
        let prod = Series::h_all(cap).mul(&Series::e_pm(cap));
        assert_eq!(prod, Series::one(cap));
    }

    #[test]
    fn inverse_of_regular_series() {
        let cap = 7;
        let inv = Series::regular(cap).inverse().unwrap();
        let expected = Series::from_symfunc(&(SymFunc::one() - SymFunc::p_k(1)), cap);
        assert_eq!(inv, expected);
    }

    #[test]
    fn brackets_examples() {
        let q = Series::family(Family::Lie, 6);
        for n in 1..=6 {
            let b = higher_bracket(Outer::H, &Partition::column(n), &q).unwrap();
            assert_eq!(b, SymFunc::h(n));
        }
        let total: SymFunc = partitions_of(4, PartFilter::All)
            .iter()
            .map(|l| higher_bracket(Outer::H, l, &q).unwrap())
            .sum();
        assert_eq!(total, SymFunc::p1_pow(4));
        let q2 = Series::family(Family::Lie2, 4);
        let one = higher_bracket(Outer::E, &Partition::row(4), &q2).unwrap();
        assert_eq!(one, lie2(4));
        assert_eq!(higher_bracket(Outer::H, &Partition::empty(), &q).unwrap(), SymFunc::one());
    }

    #[test]
    fn bracket_beyond_cap_is_an_error() {
        let q = Series::family(Family::Lie, 3);
        assert!(matches!(
            higher_bracket(Outer::H, &Partition::column(4), &q),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn apply_series_examples() {
        let cap = 6;
        let lie_s = Series::family(Family::Lie, cap);
        let h = apply_series(Outer::H, &lie_s, cap).unwrap().at_v(1);
        assert_eq!(h, Series::regular(cap));
        let e2 = apply_series(Outer::E, &Series::family(Family::Lie2, cap), cap).unwrap().at_v(1);
        assert_eq!(e2, Series::regular(cap));
        let e = apply_series(Outer::E, &lie_s, cap).unwrap().at_v(1);
        let one_minus_p2 = Series::from_symfunc(&(SymFunc::one() - SymFunc::p_k(2)), cap);
        assert_eq!(e, one_minus_p2.mul(&Series::regular(cap)));
    }

    #[test]
    fn graded_slots_are_brackets_by_length() {
        let cap = 5;
        let g = apply_series(Outer::H, &Series::family(Family::Lie, cap), cap).unwrap();
        assert_eq!(g.slot(5, 5), SymFunc::h(5));
        assert_eq!(g.slot(5, 1), lie(5));
        assert_eq!(g.slot(0, 0), SymFunc::one());
    }

    #[test]
    fn product_form_matches_brackets() {
        let cap = 6;
        let direct = apply_series(Outer::H, &Series::family(Family::Lie, cap), cap).unwrap();
        let prod = product_form(&PsiSpec::Mobius, ProductVariant::Sym, cap);
        assert_eq!(direct, prod);
    }

    #[test]
    fn solomon_from_product_form() {
        let cap = 6;
        let prod = product_form(&PsiSpec::Totient, ProductVariant::Sym, cap).at_v(1);
        assert_eq!(prod, Series::partition_sum(cap, PartFilter::All, false));
    }

    #[test]
    fn two_adic_product_form() {
        let cap = 8;
        let prod = product_form(&PsiSpec::RamanujanTwoAdic, ProductVariant::Sym, cap).at_v(1);
        assert_eq!(prod, Series::partition_sum(cap, PartFilter::PartsPowersOfTwo, false));
    }

    #[test]
    fn binomial_with_fractional_exponent() {
        // (1 - p_1)^{1/2} = 1 - p_1/2 - p_1^2/8 - ...
        let g = binomial_product([1], -1, 3, |_| vec![rational(1, 2)]).at_v(1);
        assert_eq!(g.degree(1), SymFunc::p_k(1).scale(&rational(-1, 2)));
        assert_eq!(g.degree(2), SymFunc::p1_pow(2).scale(&rational(-1, 8)));
        assert_eq!(g.degree(3), SymFunc::p1_pow(3).scale(&rational(-1, 16)));
    }

    #[test]
    fn plethystic_inverse_examples() {
        let cap = 6;
        let h_minus_1 = &Series::h_all(cap) - &Series::one(cap);
        let inv = plethystic_inverse(&h_minus_1).unwrap();
        let expected = Series::family(Family::Lie, cap).omega_alt();
        assert_eq!(inv, expected);

        let e_minus_1 = &Series::e_all(cap) - &Series::one(cap);
        let inv = plethystic_inverse(&e_minus_1).unwrap();
        assert_eq!(inv, Series::family(Family::Lie2, cap).omega_alt());

        let cap = 8;
        let g = Series::from_symfunc(&(SymFunc::p_k(1) - SymFunc::p_k(2)), cap);
        let inv = plethystic_inverse(&g).unwrap();
        let expected = Series::from_fn(cap, |n| {
            if n.is_power_of_two() {
                SymFunc::p_k(n)
            } else {
                SymFunc::zero()
            }
        });
        assert_eq!(inv, expected);
        assert_eq!(g.compose(&inv).unwrap(), Series::from_symfunc(&SymFunc::p_k(1), cap));
        assert_eq!(inv.compose(&g).unwrap(), Series::from_symfunc(&SymFunc::p_k(1), cap));
    }

    #[test]
    fn plethystic_inverse_scaled_linear_term() {
        let cap = 5;
        let g = Series::from_symfunc(&SymFunc::p_k(1).scale(&integer(2)), cap);
        let inv = plethystic_inverse(&g).unwrap();
        assert_eq!(inv.degree(1), SymFunc::p_k(1).scale(&rational(1, 2)));
        let bad = Series::from_symfunc(&SymFunc::p_k(2), cap);
        assert!(matches!(plethystic_inverse(&bad), Err(Error::NonInvertibleLinearTerm(_))));
    }

    #[test]
    fn restrict_ge2_requires_p1() {
        let lie_s = Series::family(Family::Lie, 5).restrict_ge2().unwrap();
        assert!(lie_s.degree(1).is_zero());
        assert_eq!(lie_s.degree(4), lie(4));
        let bad = Series::family(Family::Lie, 5).scale(&integer(2));
        assert!(matches!(bad.restrict_ge2(), Err(Error::LinearTermNotP1)));
    }

    #[test]
    fn graded_inverse_round_trip() {
        let cap = 6;
        let g = apply_series(Outer::H, &Series::family(Family::Lie2, cap), cap).unwrap();
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv), GradedSeries::one(cap));
    }

    #[test]
    fn outer_series_is_graded_by_degree() {
        let h = Outer::H.series(4);
        assert_eq!(h.slot(3, 3), SymFunc::h(3));
        assert_eq!(h.at_v(1), Series::h_all(4));
        assert_eq!(Outer::EPm.series(4).at_v(1), Series::e_pm(4));
    }
}
