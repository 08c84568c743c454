//! The identity registry: every plethystic identity the engine knows how to
//! check, each expanded into per-degree claims whose two sides are computed
//! by different routes.
//!
//! Conjectures live in the same registry under [`Tier::Conjecture`]; a
//! failing conjecture is a finding rather than a defect, and the CLI only
//! turns theorem-tier failures into a nonzero exit code.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::constructions::{
    conj_from, delta, from_conj, kappa_fixed_point, kappa_iterate, sigma_series, tau_series,
};
use crate::error::{Error, Result};
use crate::lie_family::{
    conj, f_from_psi, lie, lie2, lie2_via_lie, lie_via_lie2, value_at, whitehouse_deficit,
    Family, PsiSpec,
};
use crate::partitions::{mobius, partitions_of, totient, PartFilter, Partition};
use crate::schur::{is_schur_positive, s, Positivity};
use crate::series::{
    apply_series, plethystic_inverse, product_form, GradedSeries, Outer, ProductVariant, Series,
};
use crate::symfunc::{integer, plethysm, rational, Rational, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tier {
    Theorem,
    Conjecture,
}

impl Tier {
    pub fn as_str(self) -> &'static str {
        match self {
            Tier::Theorem => "theorem",
            Tier::Conjecture => "conjecture",
        }
    }
}

/// One checkable statement at one degree.
#[derive(Clone, Debug)]
pub enum Claim {
    Equal {
        degree: usize,
        label: String,
        lhs: SymFunc,
        rhs: SymFunc,
    },
    Positivity {
        degree: usize,
        label: String,
        value: SymFunc,
        expect_positive: bool,
    },
}

impl Claim {
    pub fn degree(&self) -> usize {
        match self {
            Claim::Equal { degree, .. } | Claim::Positivity { degree, .. } => *degree,
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Claim::Equal { label, .. } | Claim::Positivity { label, .. } => label,
        }
    }
}

pub struct Identity {
    pub id: &'static str,
    pub tier: Tier,
    /// Smallest degree at which the identity is asserted.
    pub min_degree: usize,
    pub summary: &'static str,
    build: fn(usize) -> Result<Vec<Claim>>,
}

impl Identity {
    pub fn claims(&self, cap: usize) -> Result<Vec<Claim>> {
        let mut claims = (self.build)(cap)?;
        claims.retain(|c| c.degree() >= self.min_degree && c.degree() <= cap);
        claims.sort_by_key(Claim::degree);
        Ok(claims)
    }
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tier", &self.tier)
            .field("min_degree", &self.min_degree)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub degree: usize,
    pub label: String,
    /// `lhs - rhs` for an equality; the tested function for a positivity claim.
    pub difference: SymFunc,
    /// Most negative Schur coefficient, for positivity claims.
    pub witness: Option<(Partition, BigInt)>,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub tier: Tier,
    pub cap: usize,
    pub min_degree: usize,
    pub checks: usize,
    pub failed_checks: usize,
    pub status: Status,
    pub first_failure: Option<Failure>,
    pub error: Option<String>,
    pub seconds: f64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_fail_degree(&self) -> Option<usize> {
        self.first_failure.as_ref().map(|f| f.degree)
    }
}

fn evaluate(claim: &Claim) -> Result<Option<Failure>> {
    match claim {
        Claim::Equal {
            degree,
            label,
            lhs,
            rhs,
        } => {
            if lhs == rhs {
                Ok(None)
            } else {
                Ok(Some(Failure {
                    degree: *degree,
                    label: label.clone(),
                    difference: lhs - rhs,
                    witness: None,
                }))
            }
        }
        Claim::Positivity {
            degree,
            label,
            value,
            expect_positive,
        } => {
            let p = is_schur_positive(value)?;
            if p.is_positive() == *expect_positive {
                return Ok(None);
            }
            let witness = match p {
                Positivity::NotPositive { witness, coeff } => Some((witness, coeff)),
                Positivity::Positive => None,
            };
            Ok(Some(Failure {
                degree: *degree,
                label: label.clone(),
                difference: value.clone(),
                witness,
            }))
        }
    }
}

/// Checks one identity at every degree from its minimum up to `cap`.
pub fn verify(identity: &Identity, cap: usize) -> IdentityReport {
    let start = Instant::now();
    let mut report = IdentityReport {
        id: identity.id.to_string(),
        tier: identity.tier,
        cap,
        min_degree: identity.min_degree,
        checks: 0,
        failed_checks: 0,
        status: Status::Pass,
        first_failure: None,
        error: None,
        seconds: 0.0,
    };
    let outcome = identity.claims(cap).and_then(|claims| {
        report.checks = claims.len();
        for claim in &claims {
            if let Some(f) = evaluate(claim)? {
                report.failed_checks += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some(f);
                }
            }
        }
        Ok(())
    });
    if let Err(e) = outcome {
        report.error = Some(e.to_string());
    }
    if report.failed_checks > 0 || report.error.is_some() {
        report.status = Status::Fail;
    }
    report.seconds = start.elapsed().as_secs_f64();
    report
}

pub fn lookup(id: &str) -> Option<&'static Identity> {
    REGISTRY.iter().find(|i| i.id.eq_ignore_ascii_case(id))
}

pub fn registry() -> &'static [Identity] {
    REGISTRY
}

pub fn verify_identity(id: &str, cap: usize) -> Result<IdentityReport> {
    let identity = lookup(id).ok_or_else(|| Error::InvalidArgument(format!("unknown identity {id}")))?;
    Ok(verify(identity, cap))
}

/// Runs the whole registry; `jobs = Some(1)` is single-threaded. Reports
/// come back in registry order whatever the completion order.
pub fn verify_all(cap: usize, jobs: Option<usize>) -> Vec<IdentityReport> {
    verify_many(REGISTRY.iter().collect(), cap, jobs)
}

pub fn verify_many(ids: Vec<&Identity>, cap: usize, jobs: Option<usize>) -> Vec<IdentityReport> {
    match jobs {
        Some(1) => ids.iter().map(|i| verify(i, cap)).collect(),
        _ => {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                builder = builder.num_threads(j);
            }
            match builder.build() {
                Ok(pool) => pool.install(|| ids.par_iter().map(|i| verify(i, cap)).collect()),
                Err(_) => ids.iter().map(|i| verify(i, cap)).collect(),
            }
        }
    }
}

/// Positivity of `p_1·Lie^(2)_{n-1} - Lie^(2)_n` for `2 ≤ n ≤ max_n`.
pub fn whitehouse_scan(max_n: usize) -> Result<Vec<(usize, Positivity)>> {
    (2..=max_n)
        .map(|n| Ok((n, is_schur_positive(&whitehouse_deficit(n, Family::Lie2))?)))
        .collect()
}

/// Positivity of every truncated alternating sum `U_k(n)`, `1 ≤ n ≤ max_n`, `0 ≤ k ≤ n-1`.
pub fn u_pos_scan(max_n: usize) -> Result<Vec<(usize, usize, Positivity)>> {
    let graded = apply_series(Outer::H, &Series::family(Family::Lie2, max_n), max_n)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut acc = SymFunc::zero();
        for k in 0..n {
            acc = &graded.slot(n, n - k) - &acc;
            out.push((n, k, is_schur_positive(&acc)?));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// claim building

struct Claims {
    cap: usize,
    items: Vec<Claim>,
}

impl Claims {
    fn new(cap: usize) -> Self {
        Self {
            cap,
            items: Vec::new(),
        }
    }

    fn eq(&mut self, degree: usize, label: impl Into<String>, lhs: SymFunc, rhs: SymFunc) {
        self.items.push(Claim::Equal {
            degree,
            label: label.into(),
            lhs,
            rhs,
        });
    }

    fn series(&mut self, label: &str, from: usize, lhs: &Series, rhs: &Series) {
        for n in from..=self.cap {
            self.eq(n, label, lhs.degree(n), rhs.degree(n));
        }
    }

    fn graded(&mut self, label: &str, from: usize, lhs: &GradedSeries, rhs: &GradedSeries) {
        for n in from..=self.cap {
            for r in 0..=n {
                self.eq(n, format!("{label} [v^{r}]"), lhs.slot(n, r), rhs.slot(n, r));
            }
        }
    }

    fn positive(&mut self, degree: usize, label: impl Into<String>, value: SymFunc, expect: bool) {
        self.items.push(Claim::Positivity {
            degree,
            label: label.into(),
            value,
            expect_positive: expect,
        });
    }

    fn done(self) -> Result<Vec<Claim>> {
        Ok(self.items)
    }
}

fn ser(f: SymFunc, cap: usize) -> Series {
    Series::from_symfunc(&f, cap)
}

fn p1(cap: usize) -> Series {
    ser(SymFunc::p_k(1), cap)
}

fn one_plus_p1(cap: usize) -> Series {
    ser(SymFunc::one() + SymFunc::p_k(1), cap)
}

fn one_minus_p1(cap: usize) -> Series {
    ser(SymFunc::one() - SymFunc::p_k(1), cap)
}

fn fam(f: Family, cap: usize) -> Series {
    Series::family(f, cap)
}

fn without_constant(s: &Series) -> Series {
    s.map(|n, c| if n == 0 { SymFunc::zero() } else { c.clone() })
}

fn flip(f: SymFunc, odd: bool) -> SymFunc {
    if odd {
        -f
    } else {
        f
    }
}

/// `Σ_{λ⊢n} c(λ)·p_λ` over partitions accepted by `keep`.
fn psum(cap: usize, keep: impl Fn(&Partition) -> bool, coeff: impl Fn(&Partition) -> Rational) -> Series {
    Series::from_fn(cap, |n| {
        SymFunc::from_terms(
            partitions_of(n, PartFilter::All)
                .into_iter()
                .filter(|l| keep(l))
                .map(|l| {
                    let c = coeff(&l);
                    (l, c)
                }),
        )
    })
}

fn unit(_: &Partition) -> Rational {
    Rational::one()
}

fn pow2_sum(cap: usize) -> Series {
    psum(cap, Partition::all_parts_powers_of_two, unit)
}

/// `Σ_{r≥1} (-1)^{r-1} (slot r)`, degree by degree.
fn alt_sum(g: &GradedSeries) -> Series {
    &Series::one(g.cap()) - &g.at_v(-1)
}

/// `Σ_r (-1)^{n-r} (slot r)` in degree `n`.
fn co_alt_sum(g: &GradedSeries) -> Series {
    g.at_v(-1).alternate()
}

fn total(g: &GradedSeries) -> Series {
    g.at_v(1)
}

/// `(-1)^{n-r} ω(slot (n, r))`.
fn signed_omega(g: &GradedSeries) -> GradedSeries {
    g.map(|n, r, f| flip(f.omega(), (n - r) % 2 == 1))
}

/// `s_{(2,1^{n-2})}` in degrees `n ≥ 2`.
fn hook_column(cap: usize) -> Series {
    Series::kappa(cap).omega()
}

fn p1_times_prev(s: &Series, n: usize) -> SymFunc {
    &SymFunc::p_k(1) * &s.degree(n - 1)
}

// ---------------------------------------------------------------------------
// power and exterior sums of Lie, Lie^(2), Conj

fn thrall(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let h = total(&apply_series(Outer::H, &fam(Family::Lie, cap), cap)?);
    c.series("H[Lie] = (1-p1)^-1", 0, &h, &Series::regular(cap));
    c.done()
}

fn cadogan(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let f = fam(Family::Lie, cap).omega_alt();
    let h = total(&apply_series(Outer::H, &f, cap)?);
    c.series("H[sum (-1)^(n-1) w(Lie_n)] = 1+p1", 0, &h, &one_plus_p1(cap));
    let inv = plethystic_inverse(&without_constant(&Series::h_all(cap)))?;
    c.series("plethystic inverse of H-1", 1, &inv, &f);
    c.done()
}

fn solomon(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let h = total(&apply_series(Outer::H, &fam(Family::Conj, cap), cap)?);
    c.series("H[Conj] = prod (1-p_n)^-1", 0, &h, &psum(cap, |_| true, unit));
    c.done()
}

fn ext_reg(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let e = total(&apply_series(Outer::E, &fam(Family::Lie2, cap), cap)?);
    c.series("E[Lie2] = (1-p1)^-1", 0, &e, &Series::regular(cap));
    c.done()
}

fn plinv_e(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let l2 = fam(Family::Lie2, cap);
    let f = l2.omega_alt();
    let e = total(&apply_series(Outer::E, &f, cap)?);
    c.series("E[sum (-1)^(n-1) w(Lie2_n)] = 1+p1", 0, &e, &one_plus_p1(cap));
    let inv = plethystic_inverse(&without_constant(&Series::e_all(cap)))?;
    c.series("plethystic inverse of E-1", 1, &inv, &f);
    let hpm = total(&apply_series(Outer::HPm, &l2, cap)?);
    c.series("H^pm[Lie2] = 1-p1", 0, &hpm, &one_minus_p1(cap));
    let h_alt = without_constant(&Series::h_all(cap).alt());
    let inv = plethystic_inverse(&h_alt)?;
    c.series("plethystic inverse of sum (-1)^(n-1) h_n", 1, &inv, &l2);
    c.done()
}

fn sym_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let l2 = fam(Family::Lie2, cap);
    let direct = Series::h_all(cap).compose(&l2)?;
    c.series("H o Lie2 (direct plethysm) = powers-of-2 sum", 0, &direct, &pow2_sum(cap));
    let brackets = total(&apply_series(Outer::H, &l2, cap)?);
    c.series("sum of H_lambda[Lie2] = powers-of-2 sum", 0, &brackets, &pow2_sum(cap));
    c.done()
}

fn alt_e_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let l2 = fam(Family::Lie2, cap);
    let g = apply_series(Outer::E, &l2, cap)?;
    let lhs = alt_sum(&g);
    let keep = |l: &Partition| l.has_distinct_parts() && l.all_parts_powers_of_two() && !l.is_empty();
    let rhs = psum(cap, keep, |l| if l.len() % 2 == 0 { -Rational::one() } else { Rational::one() });
    c.series("sum (-1)^(r-1) e_r[Lie2] = signed distinct powers-of-2 sum", 1, &lhs, &rhs);
    let dpar = psum(cap, |l| l.has_distinct_parts() && l.all_parts_powers_of_two(), unit);
    let alt_ext = signed_omega(&g).at_v(1);
    c.series("sum (-1)^(|l|-len) w(E_l[Lie2]) = distinct powers-of-2 sum", 0, &alt_ext, &dpar);
    let h = total(&apply_series(Outer::H, &l2.omega_alt(), cap)?);
    c.series("H[sum (-1)^(n-1) w(Lie2_n)] = distinct powers-of-2 sum", 0, &h, &dpar);
    c.done()
}

fn alt_h_lie(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let g = apply_series(Outer::H, &fam(Family::Lie, cap), cap)?;
    let lhs = alt_sum(&g);
    let rhs = Series::from_fn(cap, |n| {
        if n == 0 {
            SymFunc::zero()
        } else if n % 2 == 1 {
            &SymFunc::p_k(1) * &SymFunc::p_k(2).pow(n / 2)
        } else {
            -SymFunc::p_k(2).pow(n / 2)
        }
    });
    c.series("sum (-1)^(r-1) h_r[Lie] = p1 p2^k | -p2^k", 1, &lhs, &rhs);
    c.done()
}

fn ext_lie(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let e = total(&apply_series(Outer::E, &fam(Family::Lie, cap), cap)?);
    let rhs = ser(SymFunc::one() - SymFunc::p_k(2), cap).mul(&Series::regular(cap));
    c.series("E[Lie] = (1-p2)(1-p1)^-1", 0, &e, &rhs);
    c.done()
}

fn alt_h_lie_prod(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lie_s = fam(Family::Lie, cap);
    let lhs = co_alt_sum(&apply_series(Outer::H, &lie_s, cap)?);
    let mid = total(&apply_series(Outer::E, &lie_s.omega_alt(), cap)?).omega();
    let rhs = one_plus_p1(cap).mul(&ser(SymFunc::one() - SymFunc::p_k(2), cap).inverse()?);
    c.series("sum (-1)^(|l|-len) H_l[Lie] = w(E[w(Lie)^alt])", 0, &lhs, &mid);
    c.series("w(E[w(Lie)^alt]) = (1+p1)(1-p2)^-1", 0, &mid, &rhs);
    c.done()
}

fn ext_conj(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let e = total(&apply_series(Outer::E, &fam(Family::Conj, cap), cap)?);
    c.series("E[Conj] = prod_odd (1-p_n)^-1", 0, &e, &psum(cap, Partition::all_parts_odd, unit));
    c.done()
}

fn alt_conj(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let f = fam(Family::Conj, cap).omega_alt();
    let e = total(&apply_series(Outer::E, &f, cap)?);
    let rhs = psum(cap, |l| l.all_parts_odd() && l.has_distinct_parts(), unit);
    c.series("E[sum (-1)^(n-1) w(Conj_n)] = prod_odd (1+p_n)", 0, &e, &rhs);
    c.done()
}

fn acyc_lie(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lhs = co_alt_sum(&apply_series(Outer::E, &fam(Family::Lie, cap), cap)?);
    c.series("sum (-1)^(n-len) E_l[Lie] = 0", 2, &lhs, &Series::zero(cap));
    c.done()
}

fn acyc_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lhs = co_alt_sum(&apply_series(Outer::H, &fam(Family::Lie2, cap), cap)?);
    c.series("sum (-1)^(n-len) H_l[Lie2] = 0", 2, &lhs, &Series::zero(cap));
    c.done()
}

fn totalcoh_lie(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lhs = total(&apply_series(Outer::E, &fam(Family::Lie, cap), cap)?);
    let rhs = Series::from_fn(cap, |n| {
        if n < 2 {
            SymFunc::zero()
        } else {
            (&SymFunc::e(2) * &SymFunc::p1_pow(n - 2)).scale(&integer(2))
        }
    });
    c.series("sum E_l[Lie] = 2 e2 p1^(n-2)", 2, &lhs, &rhs);
    c.done()
}

fn totalcoh_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lhs = total(&apply_series(Outer::H, &fam(Family::Lie2, cap), cap)?);
    c.series("sum H_l[Lie2] = powers-of-2 sum", 2, &lhs, &pow2_sum(cap));
    c.done()
}

// ---------------------------------------------------------------------------
// equivalence chains

/// `Σ_i (-1)^i · (slot n-i)` in degree `n`, the cochain-ordered alternating sum.
fn cochain_sum(g: &GradedSeries) -> Series {
    Series::from_fn(g.cap(), |n| {
        (0..=n).map(|i| flip(g.slot(n, n - i), i % 2 == 1)).sum()
    })
}

fn equiv_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let l2 = fam(Family::Lie2, cap);
    let l2ge2 = l2.restrict_ge2()?;
    let wk = Series::kappa(cap).omega();

    let e = total(&apply_series(Outer::E, &l2, cap)?);
    c.series("(a) (E-1)[Lie2] = sum p1^n", 1, &e, &Series::regular(cap));

    let h = apply_series(Outer::H, &l2, cap)?;
    c.series("(b) sum (-1)^(r-1) h_r[Lie2] = p1", 1, &alt_sum(&h), &p1(cap));

    let hge2 = apply_series(Outer::H, &l2ge2, cap)?;
    c.series("(c) sum (-1)^(r-1) h_r[Lie2>=2] = w(kappa)", 2, &alt_sum(&hge2), &wk);

    let signed_hook = Series::from_fn(cap, |n| flip(wk.degree(n), n % 2 == 0));
    c.series(
        "(d) sum_i (-1)^i h_(n-i)[Lie2>=2] = (-1)^(n-1) s(2,1^(n-2))",
        2,
        &cochain_sum(&hge2),
        &signed_hook,
    );

    c.series("(e) Lie2>=2 = Lie2[w(kappa)]", 0, &l2ge2, &l2.compose(&wk)?);

    let (fixed, depth) = kappa_fixed_point(&wk)?;
    c.series("(f) Lie2>=2 = wk + wk[wk] + ...", 0, &l2ge2, &fixed);
    c.series("(f) iteration is stable", 0, &kappa_iterate(&wk, depth + 1)?, &fixed);

    let ege2 = total(&apply_series(Outer::E, &l2ge2, cap)?);
    let deltas = Series::from_fn(cap, delta);
    let middle = &Series::regular(cap).mul(&Series::h_pm(cap)) - &Series::one(cap);
    c.series("(g) (E-1)[Lie2>=2] = sum (-1)^k p1^(n-k) h_k", 2, &ege2, &deltas);
    c.series("(g) (1-p1)^-1 H^pm - 1 = sum (-1)^k p1^(n-k) h_k", 2, &middle, &deltas);
    c.done()
}

fn equiv_pbw(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lie_s = fam(Family::Lie, cap);
    let lge2 = lie_s.restrict_ge2()?;
    let kappa = Series::kappa(cap);

    let h = total(&apply_series(Outer::H, &lie_s, cap)?);
    c.series("(a) (H-1)[Lie] = sum p1^n", 1, &h, &Series::regular(cap));

    let hc = total(&apply_series(Outer::H, &lie_s.omega_alt(), cap)?);
    c.series("(b) (H-1)[sum (-1)^(i-1) w(Lie_i)] = p1", 1, &hc, &p1(cap));

    let e = apply_series(Outer::E, &lie_s, cap)?;
    c.series("(c) sum (-1)^(r-1) e_r[Lie] = p1", 1, &alt_sum(&e), &p1(cap));

    let ege2 = apply_series(Outer::E, &lge2, cap)?;
    c.series("(d) sum (-1)^(r-1) e_r[Lie>=2] = kappa", 2, &alt_sum(&ege2), &kappa);

    let signed = Series::from_fn(cap, |n| flip(kappa.degree(n), n % 2 == 0));
    c.series(
        "(e) sum_i (-1)^i e_(n-i)[Lie>=2] = (-1)^(n-1) s(n-1,1)",
        2,
        &cochain_sum(&ege2),
        &signed,
    );

    c.series("(f) Lie>=2 = Lie[kappa]", 0, &lge2, &lie_s.compose(&kappa)?);

    let (fixed, depth) = kappa_fixed_point(&kappa)?;
    c.series("(g) Lie>=2 = k + k[k] + ...", 0, &lge2, &fixed);
    c.series("(g) iteration is stable", 0, &kappa_iterate(&kappa, depth + 1)?, &fixed);

    let hge2 = total(&apply_series(Outer::H, &lge2, cap)?);
    let target = Series::from_fn(cap, |n| {
        (0..=n)
            .map(|k| flip(&SymFunc::p1_pow(n - k) * &SymFunc::e(k), k % 2 == 1))
            .sum()
    });
    let middle = &Series::regular(cap).mul(&Series::e_pm(cap)) - &Series::one(cap);
    c.series("(h) (H-1)[Lie>=2] = sum (-1)^k p1^(n-k) e_k", 2, &hge2, &target);
    c.series("(h) (1-p1)^-1 E^pm - 1 = sum (-1)^k p1^(n-k) e_k", 2, &middle, &target);
    c.done()
}

// ---------------------------------------------------------------------------
// generating functions for f_n built from ψ

const META_PSIS: [PsiSpec; 3] = [PsiSpec::Mobius, PsiSpec::Totient, PsiSpec::RamanujanTwoAdic];

fn psi_name(psi: &PsiSpec) -> String {
    match psi {
        PsiSpec::Mobius => "mobius".into(),
        PsiSpec::Totient => "totient".into(),
        PsiSpec::RamanujanTwoAdic => "ramanujan-2adic".into(),
        PsiSpec::Ramanujan(r) => format!("ramanujan({r})"),
        PsiSpec::Custom(_) => "custom".into(),
    }
}

fn meta_products(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for psi in &META_PSIS {
        let name = psi_name(psi);
        let f = Series::from_psi(psi, cap);
        let wf = f.omega_alt();
        let h = apply_series(Outer::H, &f, cap)?;
        let e = apply_series(Outer::E, &f, cap)?;
        let prod = |v| product_form(psi, v, cap);

        c.graded(&format!("{name}: H(v)[F] = product"), 0, &h, &prod(ProductVariant::Sym));
        c.graded(&format!("{name}: E(v)[F] = product"), 0, &e, &prod(ProductVariant::Ext));

        let alt_ext = apply_series(Outer::H, &wf, cap)?;
        c.graded(&format!("{name}: signed w(E_l[F]) = H(v)[w(F)^alt]"), 0, &signed_omega(&e), &alt_ext);
        c.graded(&format!("{name}: H(v)[w(F)^alt] = product"), 0, &alt_ext, &prod(ProductVariant::AltExt));

        let alt_sym = apply_series(Outer::E, &wf, cap)?;
        c.graded(&format!("{name}: signed w(H_l[F]) = E(v)[w(F)^alt]"), 0, &signed_omega(&h), &alt_sym);
        c.graded(&format!("{name}: E(v)[w(F)^alt] = product"), 0, &alt_sym, &prod(ProductVariant::AltSym));

        let epm = apply_series(Outer::EPm, &f, cap)?;
        c.graded(&format!("{name}: E^pm(v)[F] = product"), 0, &epm, &prod(ProductVariant::ExtPm));
        let hpm = apply_series(Outer::HPm, &f, cap)?;
        c.graded(&format!("{name}: H^pm(v)[F] = product"), 0, &hpm, &prod(ProductVariant::SymPm));
    }
    c.done()
}

fn metage2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for family in [Family::Lie, Family::Lie2] {
        let name = family_name(family);
        let f = fam(family, cap);
        let fge2 = f.restrict_ge2()?;
        let h = apply_series(Outer::H, &f, cap)?;
        let e = apply_series(Outer::E, &f, cap)?;

        let lhs = apply_series(Outer::H, &fge2, cap)?;
        c.graded(&format!("{name}: H(v)[F>=2] = E(-v) H(v)[F]"), 0, &lhs, &Outer::EPm.series(cap).mul(&h));

        let lhs = apply_series(Outer::EPm, &fge2, cap)?;
        let rhs = Outer::H.series(cap).mul(&h.inverse()?);
        c.graded(&format!("{name}: E^pm(v)[F>=2] = H(v) / H(v)[F]"), 0, &lhs, &rhs);

        let lhs = apply_series(Outer::E, &fge2, cap)?;
        c.graded(&format!("{name}: E(v)[F>=2] = H(-v) E(v)[F]"), 0, &lhs, &Outer::HPm.series(cap).mul(&e));

        let lhs = apply_series(Outer::HPm, &fge2, cap)?;
        let rhs = Outer::E.series(cap).mul(&e.inverse()?);
        c.graded(&format!("{name}: H^pm(v)[F>=2] = E(v) / E(v)[F]"), 0, &lhs, &rhs);
    }
    c.done()
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Lie => "Lie",
        Family::Lie2 => "Lie2",
        Family::Conj => "Conj",
    }
}

fn he_unit(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let one = Series::one(cap);
    c.series("H E^pm = 1", 0, &Series::h_all(cap).mul(&Series::e_pm(cap)), &one);
    c.series("H^pm E = 1", 0, &Series::h_pm(cap).mul(&Series::e_all(cap)), &one);
    let minus_p1 = ser(-SymFunc::p_k(1), cap);
    for family in [Family::Lie, Family::Lie2] {
        let name = family_name(family);
        let f = fam(family, cap);

        let g = total(&apply_series(Outer::H, &f, cap)?);
        let ginv = g.inverse()?;
        let epm = total(&apply_series(Outer::EPm, &f, cap)?);
        c.series(&format!("{name}: E^pm[F] = 1/H[F]"), 0, &epm, &ginv);
        c.series(
            &format!("{name}: sum (-1)^(r-1) e_r[F] = (G-1)/G"),
            0,
            &(&one - &epm),
            &(&g - &one).mul(&ginv),
        );

        let k = total(&apply_series(Outer::E, &f, cap)?);
        let kinv = k.inverse()?;
        let hpm = total(&apply_series(Outer::HPm, &f, cap)?);
        c.series(&format!("{name}: H^pm[F] = 1/E[F]"), 0, &hpm, &kinv);
        c.series(
            &format!("{name}: sum (-1)^(r-1) h_r[F] = (K-1)/K"),
            0,
            &(&one - &hpm),
            &(&k - &one).mul(&kinv),
        );

        let wf = f.omega_alt();
        let ka = total(&apply_series(Outer::H, &wf, cap)?);
        let ka_neg = ka.compose(&minus_p1)?;
        c.series(&format!("{name}: K[-p1] = w(K)^pm for K = H[w(F)^alt]"), 0, &ka_neg, &ka.omega().alternate());
        c.series(&format!("{name}: H[F] = 1/K[-p1]"), 0, &g, &ka_neg.inverse()?);
        c.series(&format!("{name}: E^pm[F] = K[-p1]"), 0, &epm, &ka_neg);

        let kb = total(&apply_series(Outer::E, &wf, cap)?);
        let kb_neg = kb.compose(&minus_p1)?;
        c.series(&format!("{name}: K[-p1] = w(K)^pm for K = E[w(F)^alt]"), 0, &kb_neg, &kb.omega().alternate());
        c.series(&format!("{name}: E[F] = 1/K[-p1]"), 0, &k, &kb_neg.inverse()?);
        c.series(&format!("{name}: H^pm[F] = K[-p1]"), 0, &hpm, &kb_neg);
    }
    c.done()
}

fn hodge_filt(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lge2 = fam(Family::Lie, cap).restrict_ge2()?;
    let l2ge2 = fam(Family::Lie2, cap).restrict_ge2()?;
    let deltas = Series::from_fn(cap, delta);

    let h_lie = apply_series(Outer::H, &lge2, cap)?;
    let e_lie2 = apply_series(Outer::E, &l2ge2, cap)?;
    let hodge = &total(&h_lie).omega() - &Series::one(cap);
    let inj = &total(&e_lie2) - &Series::one(cap);
    c.series("sum w(h_r[Lie>=2]) = injective words", 2, &hodge, &deltas);
    c.series("sum e_r[Lie2>=2] = injective words", 2, &inj, &deltas);

    let e_lie = apply_series(Outer::E, &lge2, cap)?;
    let h_lie2 = apply_series(Outer::H, &l2ge2, cap)?;
    let hook = hook_column(cap);
    c.series("sum (-1)^(r-1) w(e_r[Lie>=2]) = s(2,1^(n-2))", 2, &alt_sum(&e_lie).omega(), &hook);
    c.series("sum (-1)^(r-1) h_r[Lie2>=2] = s(2,1^(n-2))", 2, &alt_sum(&h_lie2), &hook);
    c.done()
}

// ---------------------------------------------------------------------------
// Whitney homology and the Vh modules

/// `WH_k(Π_n)` for every `n ≤ cap`, indexed `[n][k]`.
fn whitney_table(cap: usize) -> Result<Vec<Vec<SymFunc>>> {
    let e = apply_series(Outer::E, &fam(Family::Lie, cap), cap)?;
    Ok((0..=cap)
        .map(|n| (0..n).map(|k| e.slot(n, n - k).omega()).collect())
        .collect())
}

/// `Vh_k(n)` for every `n ≤ cap`, indexed `[n][k]`.
fn vh_table(cap: usize) -> Result<Vec<Vec<SymFunc>>> {
    let h = apply_series(Outer::H, &fam(Family::Lie2, cap), cap)?;
    Ok((0..=cap)
        .map(|n| (0..n).map(|k| h.slot(n, n - k)).collect())
        .collect())
}

fn parity_sums(row: &[SymFunc]) -> (SymFunc, SymFunc) {
    let odd = row.iter().skip(1).step_by(2).cloned().sum();
    let even = row.iter().step_by(2).cloned().sum();
    (odd, even)
}

fn lehrer(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let w = whitney_table(cap)?;
    for n in 2..=cap {
        let two_h2 = (&SymFunc::h(2) * &SymFunc::p1_pow(n - 2)).scale(&integer(2));
        c.eq(n, "sum_k WH_k = 2 h2 p1^(n-2)", w[n].iter().cloned().sum(), two_h2);
    }
    c.done()
}

fn evenodd(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let w = whitney_table(cap)?;
    for n in 2..=cap {
        let (odd, even) = parity_sums(&w[n]);
        let h2 = &SymFunc::h(2) * &SymFunc::p1_pow(n - 2);
        c.eq(n, "WH_odd = WH_even", odd.clone(), even);
        c.eq(n, "WH_odd = h2 p1^(n-2)", odd, h2);
    }
    c.done()
}

fn hl_reg(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let w = whitney_table(cap)?;
    for n in 2..=cap {
        let (odd, even) = parity_sums(&w[n]);
        c.eq(n, "WH_odd + w(WH_even) = p1^n", odd + even.omega(), SymFunc::p1_pow(n));
    }
    c.done()
}

fn ind_conf(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let w = whitney_table(cap)?;
    for n in 2..cap {
        let lower: SymFunc = w[n].iter().cloned().sum();
        let upper: SymFunc = w[n + 1].iter().cloned().sum();
        c.eq(n + 1, "WH(n+1) = p1 WH(n)", upper.clone(), &SymFunc::p_k(1) * &lower);
        // Frobenius reciprocity against every irreducible, through the p1-derivative.
        for lambda in partitions_of(n + 1, PartFilter::All) {
            let sl = crate::schur::schur(&lambda);
            let a = SymFunc::constant(upper.hall_inner(&sl));
            let b = SymFunc::constant(lower.hall_inner(&sl.partial_p1()));
            c.eq(n + 1, format!("<WH(n+1), s{lambda}> = <WH(n), d/dp1 s{lambda}>"), a, b);
        }
    }
    c.done()
}

fn lehrer_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let v = vh_table(cap)?;
    let pow2 = pow2_sum(cap);
    for n in 1..=cap {
        let (odd, even) = parity_sums(&v[n]);
        c.eq(n, "Vh(n) = powers-of-2 sum", &odd + &even, pow2.degree(n));
        if n >= 2 {
            let half = pow2.degree(n).scale(&rational(1, 2));
            c.eq(n, "Vh_odd = Vh_even", odd.clone(), even);
            c.eq(n, "Vh_odd = half powers-of-2 sum", odd, half);
        }
    }
    c.done()
}

fn hl_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let v = vh_table(cap)?;
    let rhs = psum(cap, |l| l.all_parts_powers_of_two() && (l.size() - l.len()) % 2 == 0, unit);
    for n in 2..=cap {
        let (odd, _) = parity_sums(&v[n]);
        c.eq(n, "Vh_odd + w(Vh_odd) = powers-of-2 sum with n-len even", &odd + &odd.omega(), rhs.degree(n));
    }
    c.done()
}

fn ind_lie2(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let v = vh_table(cap)?;
    let mut m = 1;
    while 2 * m < cap {
        let lower: SymFunc = v[2 * m].iter().cloned().sum();
        let upper: SymFunc = v[2 * m + 1].iter().cloned().sum();
        c.eq(2 * m + 1, "Vh(2m+1) = p1 Vh(2m)", upper, &SymFunc::p_k(1) * &lower);
        m += 1;
    }
    c.done()
}

fn dec4(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let h = apply_series(Outer::H, &fam(Family::Lie, cap), cap)?;
    let e = apply_series(Outer::E, &fam(Family::Lie2, cap), cap)?;
    for n in 1..=cap {
        let pbw: SymFunc = (1..=n).map(|k| h.slot(n, k)).sum();
        let ext: SymFunc = (1..=n).map(|k| e.slot(n, k)).sum();
        let reg = SymFunc::p1_pow(n);
        c.eq(n, "PBW: sum h_k[Lie] = p1^n", pbw.clone(), reg.clone());
        c.eq(n, "Eulerian: sum w(h_k[Lie]) = p1^n", pbw.omega(), reg.clone());
        c.eq(n, "Ext: sum e_k[Lie2] = p1^n", ext.clone(), reg.clone());
        c.eq(n, "sum w(e_k[Lie2]) = p1^n", ext.omega(), reg);
    }
    c.done()
}

// ---------------------------------------------------------------------------
// constructions of Conj and Lie^(2)

fn power_sum_series(cap: usize, keep: impl Fn(usize) -> bool, weight: impl Fn(usize) -> i64) -> Series {
    Series::from_fn(cap, |n| {
        if n >= 1 && keep(n) {
            SymFunc::p_k(n).scale(&integer(weight(n)))
        } else {
            SymFunc::zero()
        }
    })
}

fn conj_from_claims(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let conj_s = fam(Family::Conj, cap);
    c.series("sum Conj_n = sum p_k[Lie]", 1, &conj_from(Family::Lie, cap)?, &conj_s);
    c.series("Lie = sum mu(k) p_k[Conj]", 1, &from_conj(false, cap)?, &fam(Family::Lie, cap));
    c.series("sum Conj_n = sum p_(2k-1)[Lie2]", 1, &conj_from(Family::Lie2, cap)?, &conj_s);
    c.series("Lie2 = sum mu(2k-1) p_(2k-1)[Conj]", 1, &from_conj(true, cap)?, &fam(Family::Lie2, cap));

    let p1s = p1(cap);
    let all = power_sum_series(cap, |_| true, |_| 1);
    let all_mu = power_sum_series(cap, |_| true, mobius);
    c.series("sum p_k o sum mu(k) p_k = p1", 1, &all.compose(&all_mu)?, &p1s);
    c.series("sum mu(k) p_k o sum p_k = p1", 1, &all_mu.compose(&all)?, &p1s);
    let odd = power_sum_series(cap, |k| k % 2 == 1, |_| 1);
    let odd_mu = power_sum_series(cap, |k| k % 2 == 1, mobius);
    c.series("sum p_(2k-1) o sum mu(2k-1) p_(2k-1) = p1", 1, &odd.compose(&odd_mu)?, &p1s);
    c.series("sum mu(2k-1) p_(2k-1) o sum p_(2k-1) = p1", 1, &odd_mu.compose(&odd)?, &p1s);
    let p1_minus_p2 = ser(SymFunc::p_k(1) - SymFunc::p_k(2), cap);
    c.series("sum p_k o (p1 - p2) = sum p_(2k-1)", 1, &all.compose(&p1_minus_p2)?, &odd);
    c.done()
}

fn lie2_from_lie(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let lie_s = fam(Family::Lie, cap);
    let l2 = fam(Family::Lie2, cap);
    for n in 1..=cap {
        c.eq(n, "Lie2_n = [sum_k Lie[p_(2^k)]]_n", lie2_via_lie(n), lie2(n));
        c.eq(n, "Lie_n = [Lie2 - Lie2[p2]]_n", lie_via_lie2(n), lie(n));
    }
    let p1_minus_p2 = ser(SymFunc::p_k(1) - SymFunc::p_k(2), cap);
    c.series("Lie = (p1 - p2)[Lie2]", 1, &p1_minus_p2.compose(&l2)?, &lie_s);
    let pow2 = power_sum_series(cap, usize::is_power_of_two, |_| 1);
    c.series("plethystic inverse of p1 - p2", 1, &plethystic_inverse(&p1_minus_p2)?, &pow2);
    c.series("E = H[p1 - p2]", 0, &Series::h_all(cap).compose(&p1_minus_p2)?, &Series::e_all(cap));
    for n in (2..=cap).step_by(2) {
        let half = lie2(n / 2);
        let lhs = lie(n) + plethysm(&SymFunc::h(2), &half, n)?;
        let rhs = lie2(n) + plethysm(&SymFunc::e(2), &half, n)?;
        c.eq(n, "Lie_n + h2[Lie2_(n/2)] = Lie2_n + e2[Lie2_(n/2)]", lhs, rhs);
    }
    c.done()
}

fn lie2_basics(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for n in 1..=cap {
        let l2 = lie2(n);
        let expected = if n % 2 == 1 {
            lie(n)
        } else if n.is_power_of_two() {
            conj(n)
        } else if n % 4 == 2 {
            lie(n).omega()
        } else {
            l2.clone()
        };
        c.eq(n, "trichotomy: odd / power of 2 / twice odd", l2.clone(), expected);

        let alpha = n.trailing_zeros();
        let odd_part = n >> alpha;
        let factored: SymFunc = (0..=alpha)
            .flat_map(|s| {
                crate::partitions::divisors(odd_part)
                    .into_iter()
                    .map(move |d1| (s, d1))
            })
            .map(|(s, d1)| {
                let d = (1usize << s) * d1;
                let coeff = Rational::from_integer(totient(1 << s).into()) * integer(mobius(d1));
                SymFunc::p(Partition::from_unsorted(vec![d; n / d])).scale(&coeff)
            })
            .sum::<SymFunc>()
            .scale(&rational(1, n as i64));
        c.eq(n, "factored two-adic formula", l2.clone(), factored);

        let one = integer(i64::from(n.is_power_of_two()));
        let minus_one = integer(if n == 1 { -1 } else { 0 });
        c.eq(n, "Lie2_n(1) = [n is a power of 2]", SymFunc::constant(l2.point_specialize(&integer(1))?), SymFunc::constant(one));
        c.eq(n, "Lie2_n(-1) = -[n = 1]", SymFunc::constant(l2.point_specialize(&integer(-1))?), SymFunc::constant(minus_one));
        c.eq(
            n,
            "point value agrees with f_n(t)",
            SymFunc::constant(value_at(&PsiSpec::RamanujanTwoAdic, n, 1)),
            SymFunc::constant(l2.point_specialize(&integer(1))?),
        );
        c.eq(n, "two-adic psi reproduces Lie2", f_from_psi(&PsiSpec::RamanujanTwoAdic, n), l2);
    }
    c.done()
}

// ---------------------------------------------------------------------------
// restriction recurrences

fn sigma_rec(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for family in [Family::Lie, Family::Lie2] {
        let name = family_name(family);
        let f = fam(family, cap);
        let alpha = total(&apply_series(Outer::H, &f.restrict_ge2()?, cap)?);
        let sigma = sigma_series(&f)?;
        for n in 1..=cap {
            let rhs = p1_times_prev(&alpha, n) + flip(sigma.degree(n), n % 2 == 1);
            c.eq(n, format!("{name}: a_n = p1 a_(n-1) + (-1)^n sigma_n"), alpha.degree(n), rhs);
            c.eq(n, format!("{name}: dim sigma_n = 1"), SymFunc::constant(sigma.degree(n).dimension()?), SymFunc::one());
            c.eq(n, format!("{name}: d/dp1 sigma_n = sigma_(n-1)"), sigma.degree(n).partial_p1(), sigma.degree(n - 1));
        }
        match family {
            Family::Lie => {
                for n in 0..=cap {
                    c.eq(n, "Lie: sigma_n = e_n", sigma.degree(n), SymFunc::e(n));
                }
            }
            _ => {
                for n in 0..=cap {
                    let direct: SymFunc = (0..=n / 2)
                        .map(|i| &SymFunc::e(n - 2 * i) * &crate::constructions::g(2 * i))
                        .sum();
                    c.eq(n, "Lie2: sigma_n = sum e_(n-2i) g_(2i)", sigma.degree(n), direct);
                }
            }
        }
    }
    c.done()
}

fn tau_rec(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for family in [Family::Lie, Family::Lie2] {
        let name = family_name(family);
        let f = fam(family, cap);
        let beta = total(&apply_series(Outer::E, &f.restrict_ge2()?, cap)?);
        let tau = tau_series(&f)?;
        for n in 1..=cap {
            let rhs = p1_times_prev(&beta, n) + flip(tau.degree(n), n % 2 == 1);
            c.eq(n, format!("{name}: b_n = p1 b_(n-1) + (-1)^n tau_n"), beta.degree(n), rhs);
            c.eq(n, format!("{name}: dim tau_n = 1"), SymFunc::constant(tau.degree(n).dimension()?), SymFunc::one());
            c.eq(n, format!("{name}: d/dp1 tau_n = tau_(n-1)"), tau.degree(n).partial_p1(), tau.degree(n - 1));
        }
        if family == Family::Lie {
            for n in 2..=cap {
                let closed = SymFunc::h(n) - &SymFunc::h(n - 2) * &SymFunc::p_k(2);
                c.eq(n, "Lie: tau_n = h_n - h_(n-2) p2", tau.degree(n), closed);
                if n == 3 {
                    c.eq(n, "Lie: tau_3 = s(1^3)", tau.degree(3), s(&[1, 1, 1]));
                } else if n >= 4 {
                    c.eq(n, "Lie: tau_n = s(n-2,1,1) - s(n-2,2)", tau.degree(n), s(&[n - 2, 1, 1]) - s(&[n - 2, 2]));
                }
            }
        }
    }
    c.done()
}

fn restrict_rec(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let p1f = SymFunc::p_k(1);
    for family in [Family::Lie, Family::Lie2] {
        let name = family_name(family);
        let f = fam(family, cap);
        for n in 1..=cap {
            c.eq(n, format!("{name}: d/dp1 f_n = p1^(n-1)"), f.degree(n).partial_p1(), SymFunc::p1_pow(n - 1));
        }
        let fge2 = f.restrict_ge2()?;
        for kind in [Outer::H, Outer::E] {
            let k = if kind == Outer::H { "h" } else { "e" };
            let g = apply_series(kind, &f, cap)?;
            let at = |g: &GradedSeries, n: usize, i: i64| {
                if i < 0 {
                    SymFunc::zero()
                } else {
                    g.slot(n, i as usize)
                }
            };
            for n in 1..=cap {
                for j in 0..=n {
                    let i = (n - j) as i64;
                    let lhs = at(&g, n, i).partial_p1();
                    let rhs = at(&g, n - 1, i - 1) + &p1f * &at(&g, n - 1, i).partial_p1();
                    c.eq(n, format!("{name}/{k}: d G^(n-j)_n = G^(n-j-1)_(n-1) + p1 d G^(n-j)_(n-1)"), lhs, rhs);
                }
            }
            let gh = apply_series(kind, &fge2, cap)?;
            for n in 2..=cap {
                for j in 1..n {
                    let i = (n - j) as i64;
                    let lhs = at(&gh, n, i).partial_p1();
                    let inner = at(&gh, n - 1, i).partial_p1() + at(&gh, n - 2, i - 1);
                    c.eq(n, format!("{name}/{k}: d G^(n-j)_n = p1 (d G^(n-j)_(n-1) + G^(n-j-1)_(n-2))"), lhs, &p1f * &inner);
                }
            }
        }
    }
    c.done()
}

// ---------------------------------------------------------------------------
// truncated alternating sums

fn alternating_rows(table: &[Vec<SymFunc>]) -> Vec<Vec<SymFunc>> {
    table
        .iter()
        .map(|row| {
            let mut acc = SymFunc::zero();
            row.iter()
                .map(|t| {
                    acc = t - &acc;
                    acc.clone()
                })
                .collect()
        })
        .collect()
}

fn hs(n: i64) -> SymFunc {
    SymFunc::h_signed(n)
}

fn u_closed(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let v = vh_table(cap)?;
    let u = alternating_rows(&v);
    for n in 4..=cap {
        let ni = n as i64;
        let std2 = s(&[n - 1, 1]) + s(&[n - 2, 2]);
        c.eq(n, "U_0 = h_n", u[n][0].clone(), SymFunc::h(n));
        c.eq(n, "U_1 = h2 h_(n-2) - h_n", u[n][1].clone(), &SymFunc::h(2) * &hs(ni - 2) - SymFunc::h(n));
        c.eq(n, "U_1 = s(n-1,1) + s(n-2,2)", u[n][1].clone(), std2.clone());
        let u2 = &hs(ni - 3) * &s(&[2, 1]) - std2.clone() + &hs(ni - 4) * &(SymFunc::h(4) + s(&[2, 2]));
        c.eq(n, "U_2 closed form", u[n][2].clone(), u2);
        let u3 = &hs(ni - 4) * &s(&[2, 1, 1])
            + &s(&[2, 1]) * &(&hs(ni - 5) * &SymFunc::h(2) - hs(ni - 3))
            + &hs(ni - 6) * &(SymFunc::h(6) + s(&[4, 2]) + s(&[2, 2, 2]))
            + std2;
        c.eq(n, "U_3 closed form", u[n][3].clone(), u3);
    }
    for n in 2..=cap {
        c.eq(n, "U_(n-2)(n) = Lie2_n", u[n][n - 2].clone(), lie2(n));
        c.eq(n, "U_(n-1)(n) = 0", u[n][n - 1].clone(), SymFunc::zero());
    }
    c.done()
}

fn beta_pos(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let w = whitney_table(cap)?;
    let beta = alternating_rows(&w);
    for n in 1..=cap {
        for k in 0..n {
            c.positive(n, format!("beta_n([1,{k}]) is Schur-positive"), beta[n][k].clone(), true);
            let prev = if k == 0 { SymFunc::zero() } else { beta[n][k - 1].clone() };
            c.eq(n, format!("WH_{k} = beta([1,{k}]) + beta([1,{}])", k as i64 - 1), w[n][k].clone(), &beta[n][k] + &prev);
        }
    }
    c.done()
}

fn u_pos(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    let v = vh_table(cap)?;
    let u = alternating_rows(&v);
    for n in 1..=cap {
        for k in 0..n {
            c.positive(n, format!("U_{k}({n}) is Schur-positive"), u[n][k].clone(), true);
        }
    }
    c.done()
}

fn whitehouse(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for n in 3..=cap {
        let expect = !n.is_power_of_two();
        let label = if expect {
            "p1 Lie2_(n-1) - Lie2_n is Schur-positive"
        } else {
            "p1 Lie2_(n-1) - Lie2_n is not Schur-positive"
        };
        c.positive(n, label, whitehouse_deficit(n, Family::Lie2), expect);
    }
    c.done()
}

fn whitehouse_lie(cap: usize) -> Result<Vec<Claim>> {
    let mut c = Claims::new(cap);
    for n in 2..=cap {
        let w = whitehouse_deficit(n, Family::Lie).omega();
        c.positive(n, "p1 w(Lie_(n-1)) - w(Lie_n) is Schur-positive", w.clone(), true);
        let dim = crate::partitions::factorial(n - 2);
        c.eq(n, "dimension is (n-2)!", SymFunc::constant(w.dimension()?), SymFunc::constant(Rational::from_integer(dim)));
    }
    c.done()
}

macro_rules! identity {
    ($id:expr, $tier:ident, $min:expr, $summary:expr, $build:expr) => {
        Identity {
            id: $id,
            tier: Tier::$tier,
            min_degree: $min,
            summary: $summary,
            build: $build,
        }
    };
}

static REGISTRY: &[Identity] = &[
    identity!("THRALL", Theorem, 0, "H[Lie] = (1-p1)^-1", thrall),
    identity!("CADOGAN", Theorem, 0, "(H-1)[sum (-1)^(n-1) w(Lie_n)] = p1", cadogan),
    identity!("SOLOMON", Theorem, 0, "H[Conj] = prod (1-p_n)^-1", solomon),
    identity!("EXT-REG", Theorem, 0, "E[Lie2] = (1-p1)^-1", ext_reg),
    identity!("PLINV-E", Theorem, 0, "(E-1)[sum (-1)^(n-1) w(Lie2_n)] = p1", plinv_e),
    identity!("SYM-LIE2", Theorem, 0, "H[Lie2] = sum of p_l over parts powers of 2", sym_lie2),
    identity!("ALT-E-LIE2", Theorem, 0, "alternating exterior powers of Lie2", alt_e_lie2),
    identity!("ALT-H-LIE", Theorem, 1, "alternating symmetric powers of Lie", alt_h_lie),
    identity!("EXT-LIE", Theorem, 0, "E[Lie] = (1-p2)(1-p1)^-1", ext_lie),
    identity!("ALT-H-LIE-PROD", Theorem, 0, "sum (-1)^(|l|-len) H_l[Lie] = (1+p1)(1-p2)^-1", alt_h_lie_prod),
    identity!("EXT-CONJ", Theorem, 0, "E[Conj] = prod over odd n of (1-p_n)^-1", ext_conj),
    identity!("ALT-CONJ", Theorem, 0, "E[sum (-1)^(n-1) w(Conj_n)] = prod over odd n of (1+p_n)", alt_conj),
    identity!("ACYC-LIE", Theorem, 2, "sum (-1)^(n-len) E_l[Lie] = 0", acyc_lie),
    identity!("ACYC-LIE2", Theorem, 2, "sum (-1)^(n-len) H_l[Lie2] = 0", acyc_lie2),
    identity!("TOTALCOH-LIE", Theorem, 2, "sum E_l[Lie] = 2 e2 p1^(n-2)", totalcoh_lie),
    identity!("TOTALCOH-LIE2", Theorem, 2, "sum H_l[Lie2] = sum of p_l over parts powers of 2", totalcoh_lie2),
    identity!("EQUIV-LIE2", Theorem, 0, "exterior powers, filtration and injective words for Lie2", equiv_lie2),
    identity!("EQUIV-PBW", Theorem, 0, "Thrall, Cadogan, derived series and Hodge pieces for Lie", equiv_pbw),
    identity!("META-PRODUCTS", Theorem, 0, "graded generating functions against product formulas", meta_products),
    identity!("METAGE2", Theorem, 0, "powers of F>=2 from powers of F", metage2),
    identity!("HE-UNIT", Theorem, 0, "H E^pm = 1 and its plethystic consequences", he_unit),
    identity!("HODGE-FILT", Theorem, 2, "two decompositions of injective words and the hook", hodge_filt),
    identity!("LEHRER", Theorem, 2, "total Whitney homology = 2 h2 p1^(n-2)", lehrer),
    identity!("EVENODD", Theorem, 2, "odd and even Whitney homology agree", evenodd),
    identity!("HL-REG", Theorem, 2, "WH_odd + w(WH_even) = p1^n", hl_reg),
    identity!("IND-CONF", Theorem, 3, "WH(n+1) is induced from WH(n)", ind_conf),
    identity!("LEHRER-LIE2", Theorem, 1, "Vh_odd = Vh_even = half the powers-of-2 sum", lehrer_lie2),
    identity!("HL-LIE2", Theorem, 2, "Vh_odd + w(Vh_odd) = powers-of-2 sum with n-len even", hl_lie2),
    identity!("IND-LIE2", Theorem, 3, "Vh(2m+1) is induced from Vh(2m)", ind_lie2),
    identity!("DEC4", Theorem, 1, "four decompositions of the regular representation", dec4),
    identity!("CONJ-FROM", Theorem, 1, "Conj from power sums of Lie and Lie2", conj_from_claims),
    identity!("LIE2-FROM-LIE", Theorem, 1, "Lie2 as a plethysm of Lie with p_(2^k)", lie2_from_lie),
    identity!("LIE2-BASICS", Theorem, 1, "trichotomy, factored formula and point values of Lie2", lie2_basics),
    identity!("SIGMA-REC", Theorem, 1, "alpha_n = p1 alpha_(n-1) + (-1)^n sigma_n", sigma_rec),
    identity!("TAU-REC", Theorem, 1, "beta_n = p1 beta_(n-1) + (-1)^n tau_n", tau_rec),
    identity!("RESTRICT-REC", Theorem, 1, "restriction recurrences for powers of F and F>=2", restrict_rec),
    identity!("U-CLOSED", Theorem, 2, "closed forms for U_0 .. U_3", u_closed),
    identity!("BETA-POS", Theorem, 1, "truncated alternating sums of Whitney homology are modules", beta_pos),
    identity!("WHITEHOUSE-LIE", Theorem, 2, "p1 w(Lie_(n-1)) - w(Lie_n) is a module of dimension (n-2)!", whitehouse_lie),
    identity!("U-POS", Conjecture, 1, "truncated alternating sums of Vh are modules", u_pos),
    identity!("WHITEHOUSE", Conjecture, 3, "p1 Lie2_(n-1) - Lie2_n is positive iff n is not a power of 2", whitehouse),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = REGISTRY.iter().map(|i| i.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn registry_passes_at_small_cap() {
        for report in verify_all(6, None) {
            assert!(report.passed(), "{}: {:?} {:?}", report.id, report.first_failure, report.error);
            assert!(report.checks > 0, "{} produced no checks", report.id);
        }
    }

    #[test]
    fn broken_identity_reports_first_degree() {
        let bad = Identity {
            id: "BAD",
            tier: Tier::Theorem,
            min_degree: 1,
            summary: "",
            build: |cap| {
                let mut c = Claims::new(cap);
                for n in 1..=cap {
                    let rhs = if n >= 3 { SymFunc::h(n) } else { SymFunc::p1_pow(n) };
                    c.eq(n, "p1^n", SymFunc::p1_pow(n), rhs);
                }
                c.done()
            },
        };
        let r = verify(&bad, 5);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_fail_degree(), Some(3));
        assert_eq!(r.failed_checks, 3);
        assert_eq!(r.first_failure.unwrap().difference, SymFunc::p1_pow(3) - SymFunc::h(3));
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert!(lookup("thrall").is_some());
        assert!(verify_identity("NOPE", 4).is_err());
    }

    #[test]
    fn whitehouse_scan_small() {
        let scan = whitehouse_scan(8).unwrap();
        let negative: Vec<usize> = scan
            .iter()
            .filter(|(_, p)| !p.is_positive())
            .map(|(n, _)| *n)
            .collect();
        assert_eq!(negative, vec![4, 8]);
    }
}
