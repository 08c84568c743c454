//! Irreducible characters of `S_n` and the Schur basis.
//!
//! Characters come from the Murnaghan–Nakayama rule, evaluated on beta-sets
//! (rim-hook removal is moving a bead `k` places down an abacus). Full tables
//! are built once per degree and published into a process-wide cache; when
//! `PLETHY_CACHE_DIR` is set they are also persisted to disk.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, z_of, PartFilter, Partition};
use crate::symfunc::{Rational, SymFunc};

pub const CACHE_ENV: &str = "PLETHY_CACHE_DIR";
const CACHE_MAGIC: &[u8; 4] = b"PLCT";
const CACHE_VERSION: u32 = 1;

/// The character table of `S_n`, rows and columns in canonical partition order.
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<i128>,
}

impl CharacterTable {
    /// Fetches the table for `S_n`, building and publishing it on first use.
    pub fn for_degree(n: usize) -> Arc<CharacterTable> {
        let cache = table_cache();
        if let Some(t) = cache.read().expect("character cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(load_from_disk(n).unwrap_or_else(|| {
            let t = CharacterTable::compute(n);
            store_to_disk(&t);
            t
        }));
        let mut guard = cache.write().expect("character cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    /// Builds the table directly, bypassing every cache.
    pub fn compute(n: usize) -> CharacterTable {
        let partitions = partitions_of(n, PartFilter::All);
        let mut memo = HashMap::new();
        let mut values = Vec::with_capacity(partitions.len() * partitions.len());
        for lambda in &partitions {
            for mu in &partitions {
                values.push(mn_character(lambda.parts(), mu.parts(), &mut memo));
            }
        }
        Self::from_values(n, partitions, values)
    }

    fn from_values(degree: usize, partitions: Vec<Partition>, values: Vec<i128>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Self {
            degree,
            partitions,
            index,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `χ^λ(μ)`; `None` if either partition is not of this degree.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i128> {
        let i = *self.index.get(lambda)?;
        let j = *self.index.get(mu)?;
        Some(self.values[i * self.partitions.len() + j])
    }

    fn row(&self, i: usize) -> &[i128] {
        let k = self.partitions.len();
        &self.values[i * k..(i + 1) * k]
    }
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cache_path(n: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    Some(PathBuf::from(dir).join(format!("chartab-v{CACHE_VERSION}-n{n}.bin")))
}

fn load_from_disk(n: usize) -> Option<CharacterTable> {
    let mut bytes = Vec::new();
    fs::File::open(cache_path(n)?).ok()?.read_to_end(&mut bytes).ok()?;
    decode_table(n, &bytes)
}

fn store_to_disk(table: &CharacterTable) {
    let Some(path) = cache_path(table.degree) else {
        return;
    };
    // Persistence is best effort; a failed write just means a recompute next time.
    let _ = (|| -> std::io::Result<()> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::File::create(&tmp)?.write_all(&encode_table(table))?;
        fs::rename(tmp, path)
    })();
}

/// Binary layout: magic, version, n, p(n) (all u32 LE), then p(n)² i128 LE values.
pub fn encode_table(table: &CharacterTable) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + table.values.len() * 16);
    out.extend_from_slice(CACHE_MAGIC);
    out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    out.extend_from_slice(&(table.degree as u32).to_le_bytes());
    out.extend_from_slice(&(table.partitions.len() as u32).to_le_bytes());
    for v in &table.values {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn decode_table(n: usize, bytes: &[u8]) -> Option<CharacterTable> {
    let word = |i: usize| -> Option<u32> {
        Some(u32::from_le_bytes(bytes.get(i..i + 4)?.try_into().ok()?))
    };
    if bytes.get(0..4)? != CACHE_MAGIC || word(4)? != CACHE_VERSION || word(8)? as usize != n {
        return None;
    }
    let partitions = partitions_of(n, PartFilter::All);
    let k = word(12)? as usize;
    if k != partitions.len() || bytes.len() != 16 + k * k * 16 {
        return None;
    }
    let values = bytes[16..]
        .chunks_exact(16)
        .map(|c| i128::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Some(CharacterTable::from_values(n, partitions, values))
}

/// Murnaghan–Nakayama recursion, removing the largest remaining part of `mu`
/// first. Memoized on `(λ, μ-suffix)`.
fn mn_character(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i128>,
) -> i128 {
    if mu.is_empty() {
        return i128::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + len - 1 - i)
        .collect();
    let mut total = 0i128;
    for (i, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        // beta is strictly decreasing; beads strictly between target and b give the height.
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&part| part > 0)
            .collect();
        let sub = mn_character(&shape, &mu[1..], memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total);
    total
}

/// The irreducible character `χ^λ(μ)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i128> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    let table = CharacterTable::for_degree(lambda.size());
    Ok(table.get(lambda, mu).expect("partitions of the table degree"))
}

/// The Schur function `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
pub fn schur(lambda: &Partition) -> SymFunc {
    let table = CharacterTable::for_degree(lambda.size());
    let i = table.index[lambda];
    SymFunc::from_terms(table.partitions.iter().zip(table.row(i)).map(|(mu, &chi)| {
        (
            mu.clone(),
            BigRational::new(BigInt::from(chi), z_of(mu)),
        )
    }))
}

/// Schur function from a slice of parts; panics on an invalid partition.
pub fn s(parts: &[usize]) -> SymFunc {
    schur(&Partition::new(parts.to_vec()).expect("valid partition"))
}

/// A homogeneous symmetric function written in the Schur basis with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    pub degree: usize,
    pub terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Back to the power-sum basis.
    pub fn to_symfunc(&self) -> SymFunc {
        self.terms
            .iter()
            .map(|(l, c)| schur(l).scale(&Rational::from_integer(c.clone())))
            .sum()
    }

    /// Builds an expansion from `(coefficient, parts)` pairs.
    pub fn from_pairs(degree: usize, pairs: &[(i64, &[usize])]) -> Self {
        let mut terms = BTreeMap::new();
        for &(c, parts) in pairs {
            let l = Partition::new(parts.to_vec()).expect("valid partition");
            assert_eq!(l.size(), degree, "partition {l} is not of degree {degree}");
            *terms.entry(l).or_insert_with(BigInt::zero) += BigInt::from(c);
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        Self { degree, terms }
    }

    /// Human form as printed in tables: `(3,1)+2(2^2)+(2,1^2)`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let a = c.abs();
            if a != BigInt::from(1) {
                out.push_str(&a.to_string());
            }
            out.push_str(&l.exponent_notation());
        }
        out
    }
}

/// Converts a homogeneous `f` to the Schur basis.
///
/// The coefficient of `s_λ` is `Σ_μ c_μ χ^λ(μ)`; a non-integer result means `f`
/// is not a virtual character and is reported with the offending `λ`.
pub fn to_schur(f: &SymFunc) -> Result<SchurExpansion> {
    let Some(n) = f.homogeneous_degree()? else {
        return Ok(SchurExpansion::default());
    };
    let table = CharacterTable::for_degree(n);
    let support: Vec<(usize, &Rational)> = f
        .terms()
        .map(|(mu, c)| (table.index[mu], c))
        .collect();
    let k = table.partitions.len();
    let mut terms = BTreeMap::new();
    for (i, lambda) in table.partitions.iter().enumerate() {
        let row = &table.values[i * k..(i + 1) * k];
        let mut acc = Rational::zero();
        for &(j, c) in &support {
            let chi = row[j];
            if chi != 0 {
                acc += c * Rational::from_integer(BigInt::from(chi));
            }
        }
        if acc.is_zero() {
            continue;
        }
        if !acc.is_integer() {
            return Err(Error::NotVirtualCharacter {
                partition: lambda.clone(),
                coeff: acc,
            });
        }
        terms.insert(lambda.clone(), acc.to_integer());
    }
    Ok(SchurExpansion { degree: n, terms })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    /// The most negative coefficient; ties go to the first partition in canonical order.
    NotPositive { witness: Partition, coeff: BigInt },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive)
    }
}

pub fn positivity_of(expansion: &SchurExpansion) -> Positivity {
    let mut worst: Option<(&Partition, &BigInt)> = None;
    for (l, c) in &expansion.terms {
        if c.is_negative() && worst.is_none_or(|(_, w)| c < w) {
            worst = Some((l, c));
        }
    }
    match worst {
        None => Positivity::Positive,
        Some((l, c)) => Positivity::NotPositive {
            witness: l.clone(),
            coeff: c.clone(),
        },
    }
}

pub fn is_schur_positive(f: &SymFunc) -> Result<Positivity> {
    Ok(positivity_of(&to_schur(f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{factorial, partition_count};
    use crate::symfunc::integer;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Number of standard tableaux by the hook-length formula.
    fn hook_dimension(l: &Partition) -> BigInt {
        let conj = l.conjugate();
        let mut hooks = BigInt::from(1);
        for (i, &row) in l.parts().iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts()[j] - i - 1;
                hooks *= BigInt::from(arm + leg + 1);
            }
        }
        factorial(l.size()) / hooks
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8 {
            for mu in partitions_of(n, PartFilter::All) {
                assert_eq!(character(&Partition::row(n), &mu).unwrap(), 1);
                let sgn = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::column(n), &mu).unwrap(), sgn);
            }
        }
    }

    /// S_3 characters from permutation matrices: the standard representation is
    /// the permutation character minus the trivial one.
    #[test]
    fn standard_character_of_s3_from_fixed_points() {
        let fixed_points = |mu: &Partition| mu.multiplicity(1) as i128;
        for mu in partitions_of(3, PartFilter::All) {
            assert_eq!(character(&part(&[2, 1]), &mu).unwrap(), fixed_points(&mu) - 1);
        }
        assert_eq!(character(&part(&[2, 1]), &part(&[3])).unwrap(), -1);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            character(&part(&[2, 1]), &part(&[2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn orthogonality_relations() {
        for n in 0..=10 {
            let t = CharacterTable::for_degree(n);
            let ps = t.partitions();
            for a in ps {
                for b in ps {
                    let col: i128 = ps
                        .iter()
                        .map(|l| t.get(l, a).unwrap() * t.get(l, b).unwrap())
                        .sum();
                    let expected = if a == b { z_of(a) } else { BigInt::zero() };
                    assert_eq!(BigInt::from(col), expected, "columns {a} {b}");
                }
            }
            for a in ps {
                for b in ps {
                    let row: Rational = ps
                        .iter()
                        .map(|mu| {
                            Rational::new(
                                BigInt::from(t.get(a, mu).unwrap() * t.get(b, mu).unwrap()),
                                z_of(mu),
                            )
                        })
                        .fold(Rational::zero(), |x, y| x + y);
                    assert_eq!(row, integer(i64::from(a == b)), "rows {a} {b}");
                }
            }
        }
    }

    #[test]
    fn schur_functions_round_trip_and_are_orthonormal() {
        for n in 0..=8 {
            for l in partitions_of(n, PartFilter::All) {
                let sl = schur(&l);
                let exp = to_schur(&sl).unwrap();
                assert_eq!(exp.terms.len(), 1);
                assert_eq!(exp.coeff(&l), BigInt::from(1));
                if n <= 6 {
                    assert_eq!(sl.hall_inner(&sl), integer(1));
                }
                assert_eq!(
                    sl.dimension().unwrap(),
                    Rational::from_integer(hook_dimension(&l))
                );
            }
        }
        assert_eq!(s(&[1, 1]), SymFunc::e(2));
    }

    #[test]
    fn non_virtual_character_is_rejected() {
        let f = SymFunc::p_k(2).scale(&crate::symfunc::rational(1, 3));
        assert!(matches!(
            to_schur(&f),
            Err(Error::NotVirtualCharacter { .. })
        ));
        assert!(to_schur(&(SymFunc::h(2) + SymFunc::h(1))).is_err());
    }

    #[test]
    fn positivity_witness_is_most_negative() {
        let f = s(&[3]).scale(&integer(-1)) + s(&[2, 1]).scale(&integer(-2)) + s(&[1, 1, 1]);
        assert_eq!(
            is_schur_positive(&f).unwrap(),
            Positivity::NotPositive {
                witness: part(&[2, 1]),
                coeff: BigInt::from(-2)
            }
        );
        assert!(is_schur_positive(&SymFunc::p1_pow(4)).unwrap().is_positive());
    }

    #[test]
    fn table_encoding_round_trips() {
        let t = CharacterTable::compute(6);
        let bytes = encode_table(&t);
        let back = decode_table(6, &bytes).unwrap();
        assert_eq!(back.values, t.values);
        assert!(decode_table(7, &bytes).is_none());
        assert!(decode_table(6, &bytes[..bytes.len() - 1]).is_none());
        assert_eq!(t.partitions().len(), partition_count(6));
    }

    #[test]
    fn render_uses_exponent_notation() {
        let e = SchurExpansion::from_pairs(4, &[(1, &[3, 1]), (2, &[2, 2]), (-1, &[1, 1, 1, 1])]);
        assert_eq!(e.render(), "(3,1)+2(2^2)-(1^4)");
    }
}
