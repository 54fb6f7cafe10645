//! Characters of symmetric groups: Murnaghan–Nakayama values, class sizes,
//! decomposition of class functions, Kronecker and reduced Kronecker
//! coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A class function of `S_n` with exact rational values, keyed by cycle type.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Builds a class function from a rule on cycle types.
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> BigRational) -> Self {
        let values = Partition::all_of_size(n)
            .into_iter()
            .map(|rho| {
                let v = f(&rho);
                (rho, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    /// The irreducible character `χ_λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let chi = character_values(lambda);
        let classes = classes_of(lambda.size());
        ClassFunction {
            n: lambda.size(),
            values: classes
                .iter()
                .zip(chi.iter())
                .map(|(rho, v)| (rho.clone(), BigRational::from_integer(BigInt::from(*v))))
                .collect(),
        }
    }

    /// The regular character: `n!` at the identity and zero elsewhere.
    pub fn regular(n: usize) -> Self {
        let id = Partition::column(n);
        Self::from_fn(n, |rho| {
            if *rho == id {
                BigRational::from_integer(factorial(n))
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, rho: &Partition) -> &BigRational {
        &self.values[rho]
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigRational> {
        &self.values
    }

    /// Pointwise product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "class functions of S_{} and S_{}",
                self.n, other.n
            )));
        }
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v * &other.values[k]))
                .collect(),
        })
    }

    /// `<f, g> = (1/n!) Σ |C_ρ| f(ρ) g(ρ)` (all characters here are real).
    pub fn inner(&self, other: &Self) -> BigRational {
        let total: BigRational = self
            .values
            .iter()
            .map(|(rho, v)| BigRational::from_integer(class_size(rho)) * v * &other.values[rho])
            .sum();
        total / BigRational::from_integer(factorial(self.n))
    }
}

/// Integer multiplicity vector over the irreducibles of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct VirtualRep {
    pub n: usize,
    pub mult: BTreeMap<Partition, i64>,
}

impl VirtualRep {
    pub fn zero(n: usize) -> Self {
        VirtualRep {
            n,
            mult: BTreeMap::new(),
        }
    }

    pub fn unit(lambda: &Partition) -> Self {
        let mut r = Self::zero(lambda.size());
        r.mult.insert(lambda.clone(), 1);
        r
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.mult.get(lambda).copied().unwrap_or(0)
    }

    /// Adds `c` to the multiplicity of `lambda`, pruning zeros.
    pub fn add_term(&mut self, lambda: &Partition, c: i64) {
        let e = self.mult.entry(lambda.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.mult.remove(lambda);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.mult {
            out.add_term(k, *v);
        }
        out
    }

    pub fn character(&self) -> ClassFunction {
        let classes = classes_of(self.n);
        let mut vals = vec![BigRational::zero(); classes.len()];
        for (lambda, m) in &self.mult {
            let chi = character_values(lambda);
            for (slot, c) in vals.iter_mut().zip(chi.iter()) {
                *slot += BigRational::from_integer(BigInt::from(*c) * BigInt::from(*m));
            }
        }
        ClassFunction {
            n: self.n,
            values: classes.iter().cloned().zip(vals).collect(),
        }
    }

    /// Internal tensor product: pointwise character product, then decompose.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        decompose(&self.character().product(&other.character())?)
    }

    /// Total dimension `Σ m_λ dim λ`.
    pub fn dimension(&self) -> BigInt {
        self.mult
            .iter()
            .map(|(l, m)| BigInt::from(dimension(l)) * BigInt::from(*m))
            .sum()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `z_ρ = Π i^{m_i} m_i!`, the centralizer order.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::one(), |acc, (i, &m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m)
        })
}

/// Number of permutations of cycle type `ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / centralizer_order(rho)
}

/// `χ_λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i128> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{rho}| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    let classes = classes_of(rho.size());
    let idx = classes
        .binary_search(rho)
        .expect("every partition of n is a class");
    Ok(character_values(lambda)[idx])
}

/// `dim λ = χ_λ(1^n)`.
pub fn dimension(lambda: &Partition) -> i128 {
    *character_values(lambda)
        .last()
        .expect("class list is nonempty")
}

/// Conjugacy classes of `S_n` in crate order (`(n)` first, `(1^n)` last).
pub fn classes_of(n: usize) -> Arc<Vec<Partition>> {
    static CLASSES: OnceLock<RwLock<HashMap<usize, Arc<Vec<Partition>>>>> = OnceLock::new();
    let cache = CLASSES.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("poisoned").get(&n) {
        return v.clone();
    }
    let v = Arc::new(Partition::all_of_size(n));
    cache.write().expect("poisoned").insert(n, v.clone());
    v
}

/// The row `χ_λ(ρ)` for all `ρ` in [`classes_of`] order, cached per `λ`.
pub fn character_values(lambda: &Partition) -> Arc<Vec<i128>> {
    static ROWS: OnceLock<RwLock<HashMap<Partition, Arc<Vec<i128>>>>> = OnceLock::new();
    let cache = ROWS.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("poisoned").get(lambda) {
        return v.clone();
    }
    let mut memo = HashMap::new();
    let row: Vec<i128> = classes_of(lambda.size())
        .iter()
        .map(|rho| mn_recursive(lambda, rho.parts(), &mut memo))
        .collect();
    let row = Arc::new(row);
    cache
        .write()
        .expect("poisoned")
        .insert(lambda.clone(), row.clone());
    row
}

/// Beta-set `{λ_i + ℓ - i}` with `ℓ = len(λ)`, decreasing.
fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (0..l).map(|i| lambda.part(i) + l - 1 - i).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    Partition::new(
        beta.iter()
            .enumerate()
            .map(|(i, &b)| b + i + 1 - l)
            .collect(),
    )
    .expect("distinct beta numbers give a partition")
}

fn mn_recursive(
    lambda: &Partition,
    rho: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i128>,
) -> i128 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = beta_set(lambda);
    let mut total = 0i128;
    for (i, &x) in beta.iter().enumerate() {
        if x < r || beta.contains(&(x - r)) {
            continue;
        }
        // removing a rim hook of length r moves bead x to x - r; its height is
        // the number of beads strictly between
        let between = beta.iter().filter(|&&y| y > x - r && y < x).count();
        let mut next = beta.clone();
        next[i] = x - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_recursive(&from_beta_set(next), rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Decompose a class function into irreducibles.
pub fn decompose(f: &ClassFunction) -> Result<VirtualRep> {
    let mut out = VirtualRep::zero(f.n);
    for lambda in classes_of(f.n).iter() {
        let m = ClassFunction::irreducible(lambda).inner(f);
        if !m.is_integer() {
            return Err(Error::NonIntegralMultiplicity(lambda.clone()));
        }
        let m = m
            .to_integer()
            .to_i64()
            .expect("multiplicities at desk scale fit in i64");
        out.add_term(lambda, m);
    }
    Ok(out)
}

/// `g_{λμν} = (1/n!) Σ_ρ |C_ρ| χ_λ(ρ) χ_μ(ρ) χ_ν(ρ)`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "kronecker needs equal sizes, got {lambda} {mu} {nu}"
        )));
    }
    let classes = classes_of(n);
    let (a, b, c) = (
        character_values(lambda),
        character_values(mu),
        character_values(nu),
    );
    let total: BigInt = classes
        .par_iter()
        .enumerate()
        .map(|(i, rho)| {
            class_size(rho) * BigInt::from(a[i]) * BigInt::from(b[i]) * BigInt::from(c[i])
        })
        .sum();
    let nfact = factorial(n);
    assert!(
        (&total % &nfact).is_zero() && !total.is_negative(),
        "Kronecker sum is a nonnegative multiple of n!"
    );
    Ok((total / nfact).to_u64().expect("fits"))
}

/// Length of the plateau demanded before a reduced Kronecker value is accepted.
pub const PLATEAU: usize = 3;

/// First `n` at which the padded sequence is sampled.
pub fn stabilization_floor(lambda: &Partition, mu: &Partition, tau: &Partition) -> usize {
    lambda.size()
        + mu.size()
        + tau.size()
        + lambda.first_row().max(mu.first_row()).max(tau.first_row())
}

/// The padded sequence `n ↦ g(λ[n], μ[n], τ[n])` over `ns`.
pub fn padded_kronecker(
    lambda: &Partition,
    mu: &Partition,
    tau: &Partition,
    n: usize,
) -> Result<u64> {
    kronecker(&lambda.pad(n)?, &mu.pad(n)?, &tau.pad(n)?)
}

/// Reduced (stable) Kronecker coefficient `ḡ^λ_{μ,τ}`.
///
/// Samples the padded sequence from [`stabilization_floor`] upward and accepts
/// the first value repeated [`PLATEAU`] times in a row.
pub fn reduced_kronecker(
    lambda: &Partition,
    mu: &Partition,
    tau: &Partition,
    caps: &Caps,
) -> Result<u64> {
    static MEMO: OnceLock<RwLock<HashMap<[Partition; 3], u64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let mut key = [lambda.clone(), mu.clone(), tau.clone()];
    key.sort();
    if let Some(v) = memo.read().expect("poisoned").get(&key) {
        return Ok(*v);
    }
    let start = stabilization_floor(lambda, mu, tau);
    let mut run: Vec<u64> = Vec::new();
    let mut n = start;
    while n <= caps.stab_max {
        let v = padded_kronecker(lambda, mu, tau, n)?;
        if run.last().is_some_and(|&last| last != v) {
            run.clear();
        }
        run.push(v);
        if run.len() == PLATEAU {
            memo.write().expect("poisoned").insert(key, v);
            return Ok(v);
        }
        n += 1;
    }
    Err(Error::StabilizationNotReached {
        plateau: PLATEAU,
        cap: caps.stab_max,
    })
}

/// `Ind(triv_d ⊠ λ)`: multiplicity one on every `μ` with `μ/λ ∈ HS_d`.
pub fn pieri_expand(lambda: &Partition, d: usize) -> VirtualRep {
    let mut out = VirtualRep::zero(lambda.size() + d);
    for mu in lambda.horizontal_strip_additions(d) {
        out.add_term(&mu, 1);
    }
    out
}

/// Full character table of `S_n`: rows indexed by `λ`, columns by class.
pub fn character_table(n: usize) -> Vec<(Partition, Arc<Vec<i128>>)> {
    classes_of(n)
        .iter()
        .map(|l| (l.clone(), character_values(l)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    /// Hook length formula, independent of the character recursion.
    fn hook_dimension(l: &Partition) -> BigInt {
        let c = l.transpose();
        let mut hooks = BigInt::one();
        for i in 0..l.len() {
            for j in 0..l.part(i) {
                hooks *= BigInt::from(l.part(i) - j + c.part(j) - i - 1);
            }
        }
        factorial(l.size()) / hooks
    }

    #[test]
    fn mn_examples() {
        for n in 1..6 {
            for rho in Partition::all_of_size(n) {
                assert_eq!(mn_character(&Partition::row(n), &rho).unwrap(), 1);
            }
        }
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(matches!(
            mn_character(&p(&[2, 1]), &p(&[2])),
            Err(Error::SizeMismatch(_))
        ));
        assert_eq!(
            mn_character(&Partition::empty(), &Partition::empty()).unwrap(),
            1
        );
    }

    #[test]
    fn sign_character_is_sign() {
        for n in 1..8 {
            for rho in Partition::all_of_size(n) {
                let odd = rho.parts().iter().filter(|&&c| c % 2 == 0).count() % 2;
                let want = if odd == 1 { -1 } else { 1 };
                assert_eq!(mn_character(&Partition::column(n), &rho).unwrap(), want);
            }
        }
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(&p(&[1, 1, 1])), BigInt::from(1));
        assert_eq!(class_size(&p(&[2, 1])), BigInt::from(3));
        assert_eq!(class_size(&p(&[3])), BigInt::from(2));
        for n in 0..9 {
            let total: BigInt = Partition::all_of_size(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn dimensions_match_hook_length_formula() {
        for l in Partition::all_up_to(10) {
            assert_eq!(BigInt::from(dimension(&l)), hook_dimension(&l), "{l}");
        }
    }

    #[test]
    fn decompose_examples() {
        let l = p(&[2, 1]);
        assert_eq!(
            decompose(&ClassFunction::irreducible(&l)).unwrap(),
            VirtualRep::unit(&l)
        );
        let reg = decompose(&ClassFunction::regular(3)).unwrap();
        assert_eq!(reg.get(&p(&[3])), 1);
        assert_eq!(reg.get(&p(&[2, 1])), 2);
        assert_eq!(reg.get(&p(&[1, 1, 1])), 1);
        let half = ClassFunction::from_fn(1, |_| BigRational::new(1.into(), 2.into()));
        assert!(matches!(
            decompose(&half),
            Err(Error::NonIntegralMultiplicity(_))
        ));
    }

    #[test]
    fn kronecker_examples() {
        for mu in Partition::all_of_size(4) {
            for nu in Partition::all_of_size(4) {
                let want = u64::from(mu == nu);
                assert_eq!(kronecker(&Partition::row(4), &mu, &nu).unwrap(), want);
            }
        }
        let s = p(&[2, 1]);
        assert_eq!(kronecker(&s, &s, &s).unwrap(), 1);
        let sg = p(&[1, 1]);
        assert_eq!(kronecker(&sg, &sg, &sg).unwrap(), 0);
        assert!(kronecker(&s, &sg, &s).is_err());
    }

    #[test]
    fn kronecker_matches_tensor_decomposition() {
        let a = VirtualRep::unit(&p(&[3, 1]));
        let b = VirtualRep::unit(&p(&[2, 2]));
        let prod = a.tensor(&b).unwrap();
        for nu in Partition::all_of_size(4) {
            assert_eq!(
                prod.get(&nu),
                kronecker(&nu, &p(&[3, 1]), &p(&[2, 2])).unwrap() as i64
            );
        }
    }

    #[test]
    fn reduced_kronecker_examples() {
        let caps = Caps::default();
        let e = Partition::empty();
        for mu in Partition::all_up_to(3) {
            assert_eq!(reduced_kronecker(&e, &mu, &mu, &caps).unwrap(), 1, "{mu}");
        }
        let one = p(&[1]);
        assert_eq!(reduced_kronecker(&one, &one, &one, &caps).unwrap(), 1);
        assert_eq!(reduced_kronecker(&p(&[2]), &one, &one, &caps).unwrap(), 1);
        // finite-n witnesses quoted alongside the examples
        assert_eq!(padded_kronecker(&one, &one, &one, 5).unwrap(), 1);
        assert_eq!(padded_kronecker(&one, &one, &one, 6).unwrap(), 1);
        assert_eq!(padded_kronecker(&p(&[2]), &one, &one, 6).unwrap(), 1);
        assert_eq!(padded_kronecker(&p(&[2]), &one, &one, 7).unwrap(), 1);
    }

    #[test]
    fn reduced_kronecker_reports_low_cap() {
        let caps = Caps {
            stab_max: 4,
            ..Caps::default()
        };
        let one = p(&[1]);
        assert!(matches!(
            reduced_kronecker(&one, &one, &p(&[1, 1]), &caps),
            Err(Error::StabilizationNotReached { .. })
        ));
    }

    #[test]
    fn pieri_examples() {
        let l = p(&[3, 1]);
        assert_eq!(pieri_expand(&l, 0), VirtualRep::unit(&l));
        let r = pieri_expand(&p(&[1]), 1);
        assert_eq!(r.mult.len(), 2);
        assert_eq!(r.get(&p(&[2])) + r.get(&p(&[1, 1])), 2);
        let r = pieri_expand(&p(&[2]), 2);
        assert_eq!(
            r.mult.keys().cloned().collect::<Vec<_>>(),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
    }

    /// Induced character of `triv_d ⊠ λ` from `S_d × S_{|λ|}`: a sum over the
    /// `g`-stable `d`-subsets, i.e. over unions of cycles of total length `d`.
    fn induced_character(lambda: &Partition, d: usize) -> ClassFunction {
        let n = lambda.size() + d;
        ClassFunction::from_fn(n, |rho| {
            let cycles = rho.parts();
            let mut total = BigRational::zero();
            for mask in 0u32..(1 << cycles.len()) {
                let mut stable = 0;
                let mut rest = Vec::new();
                for (i, &c) in cycles.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        stable += c;
                    } else {
                        rest.push(c);
                    }
                }
                if stable != d {
                    continue;
                }
                let chi = mn_character(lambda, &Partition::new(rest).unwrap()).unwrap();
                total += BigRational::from_integer(BigInt::from(chi));
            }
            total
        })
    }

    #[test]
    fn pieri_matches_induced_character() {
        for lambda in Partition::all_up_to(5) {
            for d in 0..=3 {
                let got = decompose(&induced_character(&lambda, d)).unwrap();
                assert_eq!(got, pieri_expand(&lambda, d), "{lambda} + {d}");
            }
        }
    }
}
