//! Symmetric functions with exact rational coefficients, stored in the
//! power-sum basis.
//!
//! Everything else in the crate is built on [`SymFunc`]: the complete and
//! elementary functions are expanded into power sums once, and the operations
//! that matter most (products, plethysm, `ω`, the Hall scalar product and
//! the derivative in `p_1`) are all monomial or diagonal in this basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, z_of, PartFilter, Partition};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// A finite linear combination of power sums `p_λ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Partition::empty(), c)
    }

    pub fn term(lambda: Partition, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
        Self { terms }
    }

    /// The power sum `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::term(lambda, Rational::one())
    }

    /// The single power sum `p_k`; `p_0` is taken to be 1.
    pub fn p_k(k: usize) -> Self {
        Self::p(Partition::row(k))
    }

    /// `p_1^n`, the characteristic of the regular representation.
    pub fn p1_pow(n: usize) -> Self {
        Self::p(Partition::column(n))
    }

    /// Complete homogeneous `h_n = Σ_{λ⊢n} p_λ / z_λ`.
    pub fn h(n: usize) -> Self {
        Self::from_terms(
            partitions_of(n, PartFilter::All)
                .into_iter()
                .map(|l| {
                    let z = z_of(&l);
                    (l, Rational::new(BigInt::one(), z))
                }),
        )
    }

    /// Elementary `e_n = Σ_{λ⊢n} (-1)^{n-ℓ(λ)} p_λ / z_λ`.
    pub fn e(n: usize) -> Self {
        Self::from_terms(
            partitions_of(n, PartFilter::All)
                .into_iter()
                .map(|l| {
                    let s = sign((n - l.len()) % 2 == 1);
                    let z = z_of(&l);
                    (l, s * Rational::new(BigInt::one(), z))
                }),
        )
    }

    /// `h_n` for `n ≥ 0`, zero for negative `n`.
    pub fn h_signed(n: i64) -> Self {
        if n < 0 {
            Self::zero()
        } else {
            Self::h(n as usize)
        }
    }

    pub fn e_signed(n: i64) -> Self {
        if n < 0 {
            Self::zero()
        } else {
            Self::e(n as usize)
        }
    }

    /// Sums repeated partitions; drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (l, c) in iter {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees carrying a nonzero coefficient.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::size).collect()
    }

    /// The common degree of all terms; `None` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let degrees = self.degrees();
        match degrees.len() {
            0 => Ok(None),
            1 => Ok(degrees.into_iter().next()),
            _ => Err(Error::Inhomogeneous {
                degrees: degrees.into_iter().collect(),
            }),
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Partition::size)
    }

    /// Homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> SymFunc {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `cap`.
    pub fn truncate(&self, cap: usize) -> SymFunc {
        Self {
            terms: self
                .terms
                .iter()
                .take_while(|(l, _)| l.size() <= cap)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// Product, keeping only terms of degree at most `cap`.
    pub fn mul_truncated(&self, other: &SymFunc, cap: usize) -> SymFunc {
        let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            let da = a.size();
            if da > cap {
                break;
            }
            for (b, cb) in &other.terms {
                if da + b.size() > cap {
                    break;
                }
                let prod = ca * cb;
                match acc.entry(a.union(b)) {
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    Entry::Occupied(mut o) => *o.get_mut() += prod,
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    pub fn pow(&self, n: usize) -> SymFunc {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p_k ∘ self`: replaces every `p_m` by `p_{km}`.
    pub fn adams(&self, k: usize) -> SymFunc {
        assert!(k >= 1, "p_0 is not a plethystic operator");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.scale(k), c.clone()))
                .collect(),
        }
    }

    /// The involution `ω`: `p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ`.
    pub fn omega(&self) -> SymFunc {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| {
                    if (l.size() - l.len()) % 2 == 1 {
                        (l.clone(), -c)
                    } else {
                        (l.clone(), c.clone())
                    }
                })
                .collect(),
        }
    }

    /// Hall scalar product, `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
    pub fn hall_inner(&self, other: &SymFunc) -> Rational {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(l, c)| {
                large
                    .terms
                    .get(l)
                    .map(|d| c * d * Rational::from_integer(z_of(l)))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes `p_k → t` for every `k`, so `p_λ ↦ t^{ℓ(λ)}`.
    ///
    /// Only homogeneous input is accepted.
    pub fn point_specialize(&self, t: &Rational) -> Result<Rational> {
        self.homogeneous_degree()?;
        Ok(self
            .terms
            .iter()
            .map(|(l, c)| c * num_traits::pow(t.clone(), l.len()))
            .fold(Rational::zero(), |a, b| a + b))
    }

    /// Formal derivative with respect to `p_1` (restriction from `S_n` to `S_{n-1}`).
    pub fn partial_p1(&self) -> SymFunc {
        Self::from_terms(self.terms.iter().filter_map(|(l, c)| {
            let m = l.multiplicity(1);
            (m > 0).then(|| (l.remove_part(1).unwrap(), c * integer(m as i64)))
        }))
    }

    /// Dimension of the (virtual) module: `⟨f, p_1^n⟩ = n!·[p_{1^n}] f`.
    pub fn dimension(&self) -> Result<Rational> {
        match self.homogeneous_degree()? {
            None => Ok(Rational::zero()),
            Some(n) => Ok(self.coeff(&Partition::column(n)) * Rational::from_integer(factorial(n))),
        }
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// Plethysm `f ∘ g` truncated to total degree `cap`.
///
/// `f = Σ c_λ p_λ` is sent to `Σ c_λ ∏_i p_{λ_i} ∘ g`, where `p_k ∘ g` replaces
/// each `p_m` in `g` by `p_{km}` and leaves the coefficients alone. `g` must not
/// have a constant term.
pub fn plethysm(f: &SymFunc, g: &SymFunc, cap: usize) -> Result<SymFunc> {
    if !g.coeff(&Partition::empty()).is_zero() {
        return Err(Error::ConstantTermInPlethysm);
    }
    let constant = f.coeff(&Partition::empty());
    let Some(min_deg) = g.min_degree() else {
        return Ok(SymFunc::constant(constant));
    };
    let g = g.truncate(cap);

    let mut adams: HashMap<usize, SymFunc> = HashMap::new();
    let mut prefix: HashMap<Vec<usize>, SymFunc> = HashMap::new();
    let mut out = SymFunc::constant(constant);

    for (lambda, c) in f.terms() {
        if lambda.is_empty() || lambda.size() * min_deg > cap {
            continue;
        }
        let parts = lambda.parts();
        let mut start = parts.len();
        while start > 0 && !prefix.contains_key(&parts[..start]) {
            start -= 1;
        }
        for j in start..parts.len() {
            let k = parts[j];
            let factor = adams
                .entry(k)
                .or_insert_with(|| g.adams(k).truncate(cap))
                .clone();
            let next = if j == 0 {
                factor
            } else {
                prefix[&parts[..j]].mul_truncated(&factor, cap)
            };
            prefix.insert(parts[..=j].to_vec(), next);
        }
        let product = &prefix[parts];
        for (mu, d) in product.terms() {
            out.add_term(mu.clone(), c * d);
        }
    }
    Ok(out)
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if !a.is_one() || l.is_empty() {
                write!(f, "{a}")?;
                if !l.is_empty() {
                    write!(f, " ")?;
                }
            }
            if !l.is_empty() {
                write!(f, "p{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c);
        }
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(mut self, rhs: SymFunc) -> SymFunc {
        self -= &rhs;
        self
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&-Rational::one())
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.mul_truncated(rhs, usize::MAX)
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> SymFunc {
        SymFunc::p(Partition::new(parts.to_vec()).unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    #[test]
    fn h2_and_e2_expansions() {
        assert_eq!(
            SymFunc::h(2),
            p(&[1, 1]).scale(&q(1, 2)) + p(&[2]).scale(&q(1, 2))
        );
        assert_eq!(
            SymFunc::e(2),
            p(&[1, 1]).scale(&q(1, 2)) - p(&[2]).scale(&q(1, 2))
        );
        assert_eq!(SymFunc::h(0), SymFunc::one());
        assert_eq!(SymFunc::e(0), SymFunc::one());
    }

    #[test]
    fn products() {
        assert_eq!(&p(&[2]) * &p(&[1]), p(&[2, 1]));
        assert_eq!(&SymFunc::h(1) * &SymFunc::h(1), p(&[1, 1]));
        let expected = p(&[1, 1, 1, 1]).scale(&q(1, 4)) - p(&[2, 2]).scale(&q(1, 4));
        assert_eq!(&SymFunc::e(2) * &SymFunc::h(2), expected);
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(plethysm(&p(&[2]), &p(&[3]), 10).unwrap(), p(&[6]));
        let expected = p(&[2, 2]).scale(&q(1, 2)) + p(&[4]).scale(&q(1, 2));
        assert_eq!(plethysm(&SymFunc::h(2), &p(&[2]), 10).unwrap(), expected);
        // p_1 - p_2 composed with the sum of p_{2^k}
        let inner = p(&[1]) + p(&[2]) + p(&[4]) + p(&[8]);
        assert_eq!(plethysm(&(p(&[1]) - p(&[2])), &inner, 8).unwrap(), p(&[1]));
    }

    #[test]
    fn plethysm_rejects_constant_term() {
        let g = SymFunc::one() + p(&[1]);
        assert!(matches!(
            plethysm(&p(&[2]), &g, 4),
            Err(Error::ConstantTermInPlethysm)
        ));
    }

    #[test]
    fn plethysm_truncates_at_cap() {
        let g = p(&[1]) + p(&[2]);
        let got = plethysm(&SymFunc::h(3), &g, 4).unwrap();
        assert_eq!(got.max_degree(), Some(4));
        let full = plethysm(&SymFunc::h(3), &g, 6).unwrap();
        assert_eq!(got, full.truncate(4));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFunc::h(3).omega(), SymFunc::e(3));
        assert_eq!(p(&[2, 1]).omega(), -p(&[2, 1]));
    }

    #[test]
    fn hall_inner_examples() {
        assert_eq!(p(&[2, 1]).hall_inner(&p(&[2, 1])), integer(2));
        for n in 0..=8 {
            let h = SymFunc::h(n);
            let count = crate::partitions::partition_count(n) as i64;
            // h_n = s_(n) has norm one; pairing it with Σ_λ p_λ counts partitions.
            assert_eq!(h.hall_inner(&h), integer(1), "n={n}");
            let all: SymFunc = partitions_of(n, PartFilter::All)
                .into_iter()
                .map(SymFunc::p)
                .sum();
            assert_eq!(all.hall_inner(&h), integer(count), "n={n}");
        }
    }

    #[test]
    fn partial_p1_examples() {
        for n in 1..=8 {
            assert_eq!(
                SymFunc::p1_pow(n).partial_p1(),
                SymFunc::p1_pow(n - 1).scale(&integer(n as i64))
            );
            assert_eq!(SymFunc::e(n).partial_p1(), SymFunc::e(n - 1));
        }
    }

    #[test]
    fn dimension_examples() {
        for n in 0..=8 {
            assert_eq!(SymFunc::h(n).dimension().unwrap(), integer(1));
        }
        assert!(SymFunc::h(2).add(SymFunc::h(3)).dimension().is_err());
    }

    #[test]
    fn point_specialize_rejects_inhomogeneous() {
        let f = SymFunc::h(2) + SymFunc::h(1);
        assert!(matches!(
            f.point_specialize(&integer(1)),
            Err(Error::Inhomogeneous { .. })
        ));
        assert_eq!(SymFunc::h(3).point_specialize(&integer(1)).unwrap(), integer(1));
    }

    #[test]
    fn generating_function_identity() {
        // (Σ t^n h_n)(Σ (-t)^n e_n) = 1 through degree 12
        let cap = 12;
        let h: SymFunc = (0..=cap).map(SymFunc::h).sum();
        let e_alt: SymFunc = (0..=cap)
            .map(|n| SymFunc::e(n).scale(&sign(n % 2 == 1)))
            .sum();
        assert_eq!(h.mul_truncated(&e_alt, cap), SymFunc::one());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(SymFunc::h(2).to_string(), "1/2 p[2] + 1/2 p[1,1]");
        assert_eq!((-p(&[1])).to_string(), "-p[1]");
        assert_eq!(SymFunc::zero().to_string(), "0");
    }
}
