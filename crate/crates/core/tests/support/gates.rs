//! Randomized algebraic laws, run with a fixed seed so every run sees the
//! same cases. Shared by the core test suite and the acceptance binary.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use plethy_core::partitions::{partitions_of, PartFilter};
use plethy_core::series::Series;
use plethy_core::symfunc::{integer, rational};
use plethy_core::{plethysm, SymFunc};

pub const SEED: u64 = 0x00c0_ffee_5eed_2024;
const CAP: usize = 8;

pub struct Gate {
    pub name: &'static str,
    /// Gates the acceptance run singles out by name.
    pub mandatory: bool,
    pub run: fn() -> Result<(), String>,
}

pub const GATES: &[Gate] = &[
    Gate { name: "ring axioms", mandatory: false, run: ring_axioms },
    Gate { name: "plethysm associativity", mandatory: true, run: plethysm_associativity },
    Gate { name: "plethysm homomorphism", mandatory: false, run: plethysm_homomorphism },
    Gate { name: "power sums commute under plethysm", mandatory: false, run: power_sums_commute },
    Gate { name: "sign rule f[-g] = (-1)^deg f (wf)[g]", mandatory: true, run: sign_rule },
    Gate { name: "omega isometry and involution", mandatory: false, run: omega_isometry },
    Gate { name: "omega against plethysm", mandatory: false, run: omega_plethysm },
    Gate { name: "specialization is multiplicative", mandatory: false, run: specialization },
    Gate { name: "p1-derivative is adjoint to p1", mandatory: false, run: derivative_adjoint },
    Gate { name: "H(t) E(-t) = 1 through degree 12", mandatory: false, run: he_identity },
];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    })
}

fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

/// A random homogeneous symmetric function of degree `d` with up to four terms.
pub fn homogeneous_of(d: usize) -> BoxedStrategy<SymFunc> {
    let parts = partitions_of(d, PartFilter::All);
    let k = parts.len();
    prop::collection::vec((0..k, -3i64..=3, 1i64..=3), 1..=4)
        .prop_map(move |ts| {
            SymFunc::from_terms(ts.into_iter().map(|(i, a, b)| (parts[i].clone(), rational(a, b))))
        })
        .boxed()
}

pub fn homogeneous(lo: usize, hi: usize) -> BoxedStrategy<SymFunc> {
    (lo..=hi).prop_flat_map(homogeneous_of).boxed()
}

/// Sums of homogeneous pieces in degrees `lo..=hi`.
pub fn sparse(lo: usize, hi: usize) -> BoxedStrategy<SymFunc> {
    prop::collection::vec(homogeneous(lo, hi), 1..=2)
        .prop_map(|fs| fs.into_iter().sum())
        .boxed()
}

fn deg(f: &SymFunc) -> usize {
    f.homogeneous_degree().unwrap().unwrap_or(0)
}

fn ring_axioms() -> Result<(), String> {
    check(96, (sparse(0, 3), sparse(0, 3), sparse(0, 2)), |(f, g, h)| {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        #[allow(clippy::eq_op)]
        let zero = &f - &f;
        prop_assert_eq!(zero, SymFunc::zero());
        prop_assert_eq!(&f * &SymFunc::one(), f.clone());
        Ok(())
    })
}

fn plethysm_associativity() -> Result<(), String> {
    check(48, (sparse(1, 2), sparse(1, 2), sparse(1, 2)), |(f, g, h)| {
        let left = plethysm(&plethysm(&f, &g, CAP).unwrap(), &h, CAP).unwrap();
        let right = plethysm(&f, &plethysm(&g, &h, CAP).unwrap(), CAP).unwrap();
        prop_assert_eq!(left, right);
        Ok(())
    })
}

fn plethysm_homomorphism() -> Result<(), String> {
    check(48, (sparse(0, 2), sparse(0, 2), sparse(1, 2)), |(f, g, h)| {
        let fg = plethysm(&(&f * &g), &h, CAP).unwrap();
        let split = (&plethysm(&f, &h, CAP).unwrap() * &plethysm(&g, &h, CAP).unwrap()).truncate(CAP);
        prop_assert_eq!(fg, split);
        let sum = plethysm(&(&f + &g), &h, CAP).unwrap();
        prop_assert_eq!(sum, plethysm(&f, &h, CAP).unwrap() + plethysm(&g, &h, CAP).unwrap());
        Ok(())
    })
}

fn power_sums_commute() -> Result<(), String> {
    check(64, (1usize..=4, sparse(1, 2)), |(k, f)| {
        let pk = SymFunc::p_k(k);
        prop_assert_eq!(plethysm(&pk, &f, CAP).unwrap(), plethysm(&f, &pk, CAP).unwrap());
        prop_assert_eq!(plethysm(&pk, &f, CAP).unwrap(), f.adams(k).truncate(CAP));
        Ok(())
    })
}

fn sign_rule() -> Result<(), String> {
    check(48, (homogeneous(1, 4), homogeneous(1, 2)), |(f, g)| {
        let d = deg(&f);
        let lhs = plethysm(&f, &-g.clone(), CAP).unwrap();
        let wf = f.omega();
        let rhs = plethysm(&if d % 2 == 1 { -wf } else { wf }, &g, CAP).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

fn omega_isometry() -> Result<(), String> {
    let pair = (1usize..=8).prop_flat_map(|d| (homogeneous_of(d), homogeneous_of(d)));
    check(64, pair, |(f, g)| {
        prop_assert_eq!(f.omega().hall_inner(&g.omega()), f.hall_inner(&g));
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!((&f * &g).omega(), &f.omega() * &g.omega());
        Ok(())
    })
}

fn omega_plethysm() -> Result<(), String> {
    check(48, (homogeneous(1, 3), homogeneous(1, 2)), |(f, g)| {
        let lhs = plethysm(&f, &g, CAP).unwrap().omega();
        let rhs = if deg(&g) % 2 == 0 {
            plethysm(&f, &g.omega(), CAP).unwrap()
        } else {
            plethysm(&f.omega(), &g.omega(), CAP).unwrap()
        };
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

fn specialization() -> Result<(), String> {
    check(64, (homogeneous(0, 4), homogeneous(1, 2), -3i64..=3), |(f, g, t)| {
        let t = integer(t);
        let ft = f.point_specialize(&t).unwrap();
        let gt = g.point_specialize(&t).unwrap();
        prop_assert_eq!((&f * &g).point_specialize(&t).unwrap(), &ft * &gt);
        let composed = plethysm(&f, &g, CAP).unwrap().point_specialize(&t).unwrap();
        prop_assert_eq!(composed, f.point_specialize(&gt).unwrap());
        Ok(())
    })
}

fn derivative_adjoint() -> Result<(), String> {
    let pair = (1usize..=7).prop_flat_map(|d| (homogeneous_of(d - 1), homogeneous_of(d)));
    check(64, (pair, sparse(0, 3)), |((f, g), h)| {
        let p1f = &SymFunc::p_k(1) * &f;
        prop_assert_eq!(p1f.hall_inner(&g), f.hall_inner(&g.partial_p1()));
        let leibniz = &(&g.partial_p1() * &h) + &(&g * &h.partial_p1());
        prop_assert_eq!((&g * &h).partial_p1(), leibniz);
        Ok(())
    })
}

fn he_identity() -> Result<(), String> {
    let cap = 12;
    let product = Series::h_all(cap).mul(&Series::e_pm(cap));
    match product.first_difference(&Series::one(cap)) {
        None => Ok(()),
        Some((n, d)) => Err(format!("H(t)E(-t) differs from 1 in degree {n}: {d}")),
    }
}
