//! The objects `Δ_k^N`, `▲_k^n` and the complex
//! `K_{n,N}: (▲_k^n ⊠ Δ_k^N)^{S_k}`, its cohomology as an
//! `S_n × S_N`-bimodule, and the hook formula for the derived
//! specialization of simple objects.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::characters::{character_values, class_size, classes_of, factorial};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::partition::{is_horizontal_strip, is_vertical_strip, Partition};
use crate::Rational;

/// Multiplicities over pairs of irreducible labels, one for each factor of
/// a product of two symmetric groups.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiRep {
    pub mult: BTreeMap<(Partition, Partition), i64>,
}

impl BiRep {
    pub fn get(&self, left: &Partition, right: &Partition) -> i64 {
        self.mult
            .get(&(left.clone(), right.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, left: &Partition, right: &Partition, c: i64) {
        if c == 0 {
            return;
        }
        let key = (left.clone(), right.clone());
        let e = self.mult.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.mult.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// The part whose left label is `left`.
    pub fn left_isotypic(&self, left: &Partition) -> BiRep {
        BiRep {
            mult: self
                .mult
                .iter()
                .filter(|((l, _), _)| l == left)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        }
    }
}

impl fmt::Display for BiRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "({l},{r})")?;
        }
        Ok(())
    }
}

impl Serialize for BiRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.mult.len()))?;
        for ((l, r), c) in &self.mult {
            map.serialize_entry(&format!("({l},{r})"), c)?;
        }
        map.end()
    }
}

fn check_size(p: &Partition, n: usize, what: &str) -> Result<()> {
    if p.size() != n {
        return Err(Error::SizeMismatch(format!(
            "{what} {p} is not a partition of {n}"
        )));
    }
    Ok(())
}

fn cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

/// Number of injections `f: [k] → [N]` with `σ ∘ f ∘ ρ^{-1} = f`.
///
/// A fixed injection sends every `ρ`-cycle bijectively onto a `σ`-cycle of
/// the same length, distinct cycles to distinct cycles, with a free choice
/// of rotation.
pub fn delta_character(k: usize, big_n: usize, rho: &Partition, sigma: &Partition) -> Result<u64> {
    check_size(rho, k, "cycle type")?;
    check_size(sigma, big_n, "cycle type")?;
    let mr = rho.multiplicities();
    let ms = sigma.multiplicities();
    let mut count: u64 = 1;
    for (a, &m) in mr.iter().enumerate().skip(1) {
        let avail = ms.get(a).copied().unwrap_or(0);
        if m > avail {
            return Ok(0);
        }
        for i in 0..m {
            count *= ((avail - i) * a) as u64;
        }
    }
    Ok(count)
}

fn cycle_sign(rho: &Partition) -> i64 {
    let even = rho.parts().iter().filter(|&&p| p % 2 == 0).count();
    if even % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(1/|G|) Σ |C| χ_left χ_right · trace` over pairs of classes.
fn decompose_bi(
    n: usize,
    m: usize,
    trace: impl Fn(&Partition, &Partition) -> i128 + Sync,
) -> BiRep {
    let cn = classes_of(n);
    let cm = classes_of(m);
    let sizes_n: Vec<i128> = cn
        .iter()
        .map(|c| class_size(c).to_i128().unwrap())
        .collect();
    let sizes_m: Vec<i128> = cm
        .iter()
        .map(|c| class_size(c).to_i128().unwrap())
        .collect();
    let traces: Vec<Vec<i128>> = cn
        .par_iter()
        .map(|a| cm.iter().map(|b| trace(a, b)).collect())
        .collect();
    let order = (factorial(n) * factorial(m)).to_i128().unwrap();
    let mut out = BiRep::default();
    for l in cn.iter() {
        let chi_l = character_values(l);
        for r in cm.iter() {
            let chi_r = character_values(r);
            let mut total: i128 = 0;
            for i in 0..cn.len() {
                for j in 0..cm.len() {
                    total += sizes_n[i] * sizes_m[j] * chi_l[i] * chi_r[j] * traces[i][j];
                }
            }
            assert_eq!(total % order, 0, "non-integral multiplicity");
            out.add_term(l, r, (total / order) as i64);
        }
    }
    out
}

/// `Δ_k^N = ℂ Inj([k],[N]) = ⊕ μ ⊗ λ` over `μ ⊢ N`, `λ ⊢ k`, `μ/λ ∈ HS`.
pub fn decompose_delta(k: usize, big_n: usize, caps: &Caps) -> Result<BiRep> {
    cap("k of Delta", k, caps.complex_n)?;
    cap("N of Delta", big_n, caps.complex_big_n)?;
    let mut out = BiRep::default();
    for mu in Partition::all_of_size(big_n) {
        for lambda in Partition::all_of_size(k) {
            if is_horizontal_strip(&lambda, &mu) {
                out.add_term(&mu, &lambda, 1);
            }
        }
    }
    Ok(out)
}

/// `Δ_k^N` decomposed through its character, keys `(μ ⊢ N, λ ⊢ k)`.
pub fn decompose_delta_by_characters(k: usize, big_n: usize) -> BiRep {
    decompose_bi(big_n, k, |sigma, rho| {
        delta_character(k, big_n, rho, sigma).unwrap() as i128
    })
}

/// `▲_k^n = ⊕ μ ⊗ λ` over `μ ⊢ n`, `λ ⊢ k`, `λ ⊆ μ^∨`, `μ^∨/λ ∈ VS`.
///
/// Twisting the strip rule for `Δ_k^n` by the sign of `S_k` gives the
/// same set: `μ^∨/λ ∈ VS` exactly when `μ/λ^∨ ∈ HS`.
pub fn blacktriangle_decompose(k: usize, n: usize, caps: &Caps) -> Result<BiRep> {
    cap("k of Delta", k, caps.complex_n)?;
    cap("n of Delta", n, caps.complex_big_n)?;
    let mut out = BiRep::default();
    for mu in Partition::all_of_size(n) {
        let conj = mu.transpose();
        for lambda in Partition::all_of_size(k) {
            if is_vertical_strip(&lambda, &conj) {
                out.add_term(&mu, &lambda, 1);
            }
        }
    }
    Ok(out)
}

/// `▲_k^n` decomposed through its character, keys `(μ ⊢ n, λ ⊢ k)`.
pub fn blacktriangle_by_characters(k: usize, n: usize) -> BiRep {
    decompose_bi(n, k, |pi, rho| {
        cycle_sign(rho) as i128 * delta_character(k, n, rho, pi).unwrap() as i128
    })
}

/// A permutation of `0..n` given by its images.
pub type Perm = Vec<usize>;

fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All arrangements of `k` distinct values from `0..n`, lexicographic.
fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; n];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

fn increasing(k: usize, n: usize) -> Vec<Vec<usize>> {
    injections(k, n)
        .into_iter()
        .filter(|f| f.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// One term `(▲_k^n ⊠ Δ_k^N)^{S_k}` of the complex.
///
/// Basis vector `(f, g)`, with `f: [k] → [n]` increasing and `g: [k] → [N]`
/// injective, stands for `Σ_{σ ∈ S_k} sgn(σ) (f∘σ, g∘σ)`.
#[derive(Clone, Debug)]
pub struct Term {
    pub k: usize,
    basis: Vec<(Vec<usize>, Vec<usize>)>,
    index: HashMap<(Vec<usize>, Vec<usize>), usize>,
}

impl Term {
    fn new(k: usize, n: usize, big_n: usize) -> Self {
        let mut basis = Vec::new();
        for f in increasing(k, n) {
            for g in injections(k, big_n) {
                basis.push((f.clone(), g));
            }
        }
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();
        Term { k, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.basis
    }

    /// Index and sign of the basis vector proportional to the one given by
    /// an arbitrary pair of injections.
    pub fn locate(&self, f: &[usize], g: &[usize]) -> (usize, i64) {
        let mut order: Vec<usize> = (0..f.len()).collect();
        order.sort_by_key(|&i| f[i]);
        let fs: Vec<usize> = order.iter().map(|&i| f[i]).collect();
        let gs: Vec<usize> = order.iter().map(|&i| g[i]).collect();
        (self.index[&(fs, gs)], perm_sign(&order))
    }

    /// `π ∈ S_n` acting on basis vector `i`.
    pub fn act_left(&self, pi: &[usize], i: usize) -> (usize, i64) {
        let (f, g) = &self.basis[i];
        let pf: Vec<usize> = f.iter().map(|&x| pi[x]).collect();
        self.locate(&pf, g)
    }

    /// `ρ ∈ S_N` acting on basis vector `i`.
    pub fn act_right(&self, rho: &[usize], i: usize) -> (usize, i64) {
        let (f, g) = &self.basis[i];
        let rg: Vec<usize> = g.iter().map(|&x| rho[x]).collect();
        (self.index[&(f.clone(), rg)], 1)
    }
}

/// The complex `0 → K^{-n} → … → K^0 → 0` with its two group actions.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    pub n: usize,
    pub big_n: usize,
    terms: Vec<Term>,
}

/// Sparse integer vector.
pub type Sparse = HashMap<usize, i64>;

impl EquivariantComplex {
    /// `K_{n,N}` with differential `Σ_{i=1}^k (-1)^i res^i ⊗ res^i`.
    pub fn build(n: usize, big_n: usize, caps: &Caps) -> Result<Self> {
        cap("n of the complex", n, caps.complex_n)?;
        cap("N of the complex", big_n, caps.complex_big_n)?;
        let terms = (0..=n).map(|k| Term::new(k, n, big_n)).collect();
        Ok(EquivariantComplex { n, big_n, terms })
    }

    pub fn term(&self, k: usize) -> &Term {
        &self.terms[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Term::dim).collect()
    }

    /// Image of basis vector `i` of term `k` under `d: K^{-k} → K^{-k+1}`.
    ///
    /// Collapsing the sum over `i` and `σ` leaves
    /// `k Σ_p (-1)^p (f ∖ p, g ∖ p)`, deleting the `p`-th entries.
    pub fn differential_column(&self, k: usize, i: usize) -> Sparse {
        let mut out = Sparse::new();
        if k == 0 {
            return out;
        }
        let (f, g) = &self.terms[k].basis[i];
        let target = &self.terms[k - 1];
        for p in 0..k {
            let mut fr = f.clone();
            let mut gr = g.clone();
            fr.remove(p);
            gr.remove(p);
            let j = target.index[&(fr, gr)];
            let sign = if p % 2 == 0 { -1 } else { 1 };
            *out.entry(j).or_insert(0) += sign * k as i64;
        }
        out
    }

    /// `d` applied to a dense rational vector of term `k`.
    fn apply_d(&self, k: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.terms[k - 1].dim()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in self.differential_column(k, i) {
                out[j] += c * Rational::from_integer(d.into());
            }
        }
        out
    }

    /// `tr((π, ρ) | K^{-k})` for class representatives.
    pub fn trace(&self, k: usize, pi: &[usize], rho: &[usize]) -> i64 {
        let term = &self.terms[k];
        let mut total = 0;
        for i in 0..term.dim() {
            let (j, s) = term.act_left(pi, i);
            let (j, t) = term.act_right(rho, j);
            if j == i {
                total += s * t;
            }
        }
        total
    }

    /// Decomposition of `K^{-k}` from the traces of the two actions, keys
    /// `(S_n label, S_N label)`.
    pub fn term_decomposition(&self, k: usize) -> BiRep {
        decompose_bi(self.n, self.big_n, |a, b| {
            self.trace(k, &class_representative(a), &class_representative(b)) as i128
        })
    }

    /// Cohomology `H^{-k}` for `k = 0..=n`, as `S_n × S_N` multiplicities.
    pub fn cohomology(&self) -> Vec<BiRep> {
        self.cohomology_filtered(|_| true)
    }

    /// Cohomology restricted to the `S_n` labels accepted by `keep`.
    pub fn cohomology_filtered(&self, keep: impl Fn(&Partition) -> bool) -> Vec<BiRep> {
        let decomps: Vec<BiRep> = (0..=self.n).map(|k| self.term_decomposition(k)).collect();
        let mut labels: Vec<(Partition, Partition)> = decomps
            .iter()
            .flat_map(|d| d.mult.keys().cloned())
            .filter(|(a, _)| keep(a))
            .collect();
        labels.sort();
        labels.dedup();
        let per_label: Vec<((Partition, Partition), Vec<i64>)> = labels
            .into_par_iter()
            .map(|(a, b)| {
                let r: Vec<usize> = decomps.iter().map(|d| d.get(&a, &b) as usize).collect();
                let h = self.isotypic_cohomology(&a, &b, &r);
                ((a, b), h)
            })
            .collect();
        let mut out = vec![BiRep::default(); self.n + 1];
        for ((a, b), h) in per_label {
            for (k, c) in h.into_iter().enumerate() {
                out[k].add_term(&a, &b, c);
            }
        }
        out
    }

    /// Multiplicities of `α ⊠ β` in each `H^{-k}`, given the term
    /// multiplicities `r`.
    ///
    /// A Young symmetrizer `e` of `α ⊠ β` commutes with `d`, and `e K^{-k}`
    /// has dimension `r_k`, so the multiplicity is the cohomology of the
    /// small complex `e K`.
    fn isotypic_cohomology(&self, alpha: &Partition, beta: &Partition, r: &[usize]) -> Vec<i64> {
        let sym = YoungSymmetrizer::new(alpha, beta);
        let images: Vec<Vec<Vec<Rational>>> = (0..=self.n)
            .map(|k| self.symmetrized_basis(k, &sym, r[k]))
            .collect();
        let mut rank_d = vec![0usize; self.n + 2];
        for k in 1..=self.n {
            let mut span = EchelonBasis::new(self.terms[k - 1].dim());
            for v in &images[k] {
                span.insert(self.apply_d(k, v));
            }
            rank_d[k] = span.rank();
        }
        (0..=self.n)
            .map(|k| r[k] as i64 - rank_d[k] as i64 - rank_d[k + 1] as i64)
            .collect()
    }

    /// A basis of `e K^{-k}` of the expected size `want`.
    fn symmetrized_basis(
        &self,
        k: usize,
        sym: &YoungSymmetrizer,
        want: usize,
    ) -> Vec<Vec<Rational>> {
        let term = &self.terms[k];
        let mut span = EchelonBasis::new(term.dim());
        let mut out = Vec::with_capacity(want);
        for i in 0..term.dim() {
            if out.len() == want {
                break;
            }
            let v = sym.apply(term, i);
            if v.is_empty() {
                continue;
            }
            let mut dense = vec![Rational::zero(); term.dim()];
            for (j, c) in v {
                dense[j] = Rational::from_integer(c.into());
            }
            if span.insert(dense.clone()) {
                out.push(dense);
            }
        }
        assert_eq!(
            out.len(),
            want,
            "symmetrizer image smaller than the multiplicity"
        );
        out
    }
}

/// The permutation `(0 1 … ρ_1-1)(ρ_1 …) …` of cycle type `ρ`.
pub fn class_representative(rho: &Partition) -> Perm {
    let mut p: Perm = (0..rho.size()).collect();
    let mut start = 0;
    for &len in rho.parts() {
        for i in 0..len {
            p[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    p
}

/// All permutations of `0..n` preserving the given blocks, with signs.
fn block_group(blocks: &[Vec<usize>], n: usize) -> Vec<(Perm, i64)> {
    let mut out = vec![((0..n).collect::<Perm>(), 1)];
    for block in blocks {
        let arrangements = injections(block.len(), block.len());
        let mut next = Vec::with_capacity(out.len() * arrangements.len());
        for (p, s) in &out {
            for a in &arrangements {
                let mut q = p.clone();
                for (i, &j) in a.iter().enumerate() {
                    q[block[i]] = block[j];
                }
                next.push((q, s * perm_sign(a)));
            }
        }
        out = next;
    }
    out
}

/// Row and column groups of the row-reading tableau of `λ`.
fn tableau_groups(lambda: &Partition) -> (Vec<(Perm, i64)>, Vec<(Perm, i64)>) {
    let mut rows = Vec::new();
    let mut start = 0;
    for &len in lambda.parts() {
        rows.push((start..start + len).collect::<Vec<_>>());
        start += len;
    }
    let cols: Vec<Vec<usize>> = (0..lambda.first_row())
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    (block_group(&rows, start), block_group(&cols, start))
}

/// `e = a_α b_α ⊗ a_β b_β` acting on a term.
struct YoungSymmetrizer {
    left_rows: Vec<(Perm, i64)>,
    left_cols: Vec<(Perm, i64)>,
    right_rows: Vec<(Perm, i64)>,
    right_cols: Vec<(Perm, i64)>,
}

impl YoungSymmetrizer {
    fn new(alpha: &Partition, beta: &Partition) -> Self {
        let (left_rows, left_cols) = tableau_groups(alpha);
        let (right_rows, right_cols) = tableau_groups(beta);
        YoungSymmetrizer {
            left_rows,
            left_cols,
            right_rows,
            right_cols,
        }
    }

    fn apply(&self, term: &Term, i: usize) -> Sparse {
        let mut v = Sparse::from([(i, 1)]);
        v = sum_over(&v, &self.left_cols, true, |p, j| term.act_left(p, j));
        v = sum_over(&v, &self.left_rows, false, |p, j| term.act_left(p, j));
        v = sum_over(&v, &self.right_cols, true, |p, j| term.act_right(p, j));
        sum_over(&v, &self.right_rows, false, |p, j| term.act_right(p, j))
    }
}

fn sum_over(
    v: &Sparse,
    group: &[(Perm, i64)],
    signed: bool,
    act: impl Fn(&[usize], usize) -> (usize, i64),
) -> Sparse {
    let mut out = Sparse::new();
    for (j, c) in v {
        for (p, s) in group {
            let (j2, t) = act(p, *j);
            let w = if signed { *s } else { 1 };
            *out.entry(j2).or_insert(0) += c * t * w;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Cohomology of `K_{n,N}` by degree: entry `k` is `H^{-k}`.
pub fn cohomology_bimodule(n: usize, big_n: usize, caps: &Caps) -> Result<Vec<BiRep>> {
    Ok(EquivariantComplex::build(n, big_n, caps)?.cohomology())
}

/// `R^m Γ_N(L_μ)`, nonzero in at most one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedGamma {
    /// `None` when every derived specialization vanishes.
    pub degree: Option<usize>,
    pub value: Option<Partition>,
}

/// Derived specialization of `L_μ` to `S_N`.
///
/// For `N ≥ |μ| + μ_1` it is `μ[N]` in degree zero. Otherwise it is
/// nonzero exactly when a hook with vertex in row one leaves a diagram of
/// size `N`; the degree is the height of that hook and the value its
/// remainder.
pub fn derived_gamma(mu: &Partition, big_n: usize) -> DerivedGamma {
    if big_n >= mu.size() + mu.first_row() {
        return DerivedGamma {
            degree: Some(0),
            value: Some(mu.pad(big_n).expect("in the stable range")),
        };
    }
    match mu.row1_hooks().into_iter().find(|h| h.target_size == big_n) {
        Some(h) => DerivedGamma {
            degree: Some(h.height),
            value: Some(h.remainder),
        },
        None => DerivedGamma {
            degree: None,
            value: None,
        },
    }
}

/// Derived specialization by straightening `(N - |μ|, μ_1, μ_2, …)`.
///
/// Moving the first entry down `m` places gives
/// `(μ_1 - 1, …, μ_m - 1, N - |μ| + m, μ_{m+1}, …)`, a partition exactly when
/// `μ_{m+1} ≤ N - |μ| + m < μ_m`; that `m` is the degree. This is the rule
/// the cohomology of `K_{n,N}` follows, including below the stable range
/// where [`derived_gamma`] and the complex disagree.
pub fn derived_gamma_straightened(mu: &Partition, big_n: usize) -> DerivedGamma {
    let a = big_n as i64 - mu.size() as i64;
    let row = |i: usize| {
        if i == 0 {
            i64::MAX
        } else {
            mu.part(i - 1) as i64
        }
    };
    for m in 0..=mu.len() {
        let moved = a + m as i64;
        if row(m + 1) <= moved && moved < row(m) {
            let mut parts: Vec<usize> = mu.parts()[..m].iter().map(|p| p - 1).collect();
            parts.push(moved as usize);
            parts.extend_from_slice(&mu.parts()[m..]);
            return DerivedGamma {
                degree: Some(m),
                value: Some(
                    Partition::new(parts).expect("straightened sequence is weakly decreasing"),
                ),
            };
        }
    }
    DerivedGamma {
        degree: None,
        value: None,
    }
}

/// `#{λ ⊢ k : τ ⊆ λ ⊆ μ^∨, μ^∨/λ ∈ VS, λ/τ ∈ HS}`.
pub fn a_count(mu: &Partition, tau: &Partition, k: usize) -> usize {
    let conj = mu.transpose();
    Partition::all_of_size(k)
        .into_iter()
        .filter(|l| is_vertical_strip(l, &conj) && is_horizontal_strip(tau, l))
        .count()
}

/// `Σ_k (-1)^k a_count(μ, τ, k)` for every `τ ⊆ μ^∨`, keyed by `τ`.
pub fn euler_characteristics(mu: &Partition) -> BTreeMap<Partition, i64> {
    let conj = mu.transpose();
    Partition::all_up_to(mu.size())
        .into_iter()
        .filter(|tau| conj.contains(tau))
        .map(|tau| {
            let chi: i64 = (0..=mu.size())
                .map(|k| {
                    let s = if k % 2 == 0 { 1 } else { -1 };
                    s * a_count(mu, &tau, k) as i64
                })
                .sum();
            (tau, chi)
        })
        .collect()
}

/// Whether the alternating sums equal `(-1)^n δ_{τ, μ^∨}`.
pub fn euler_identity_check(mu: &Partition) -> bool {
    let conj = mu.transpose();
    let top = if mu.size() % 2 == 0 { 1 } else { -1 };
    euler_characteristics(mu)
        .into_iter()
        .all(|(tau, chi)| chi == if tau == conj { top } else { 0 })
}
