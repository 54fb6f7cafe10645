//! Blocks of the abelian envelope of `Rep(S_t)` at a nonnegative integer
//! `t`: block sequences, classification, dagger shifts, the index sets
//! `B^t_μ`, and K-theoretic labels of simples, standards, indecomposables and
//! injectives.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Where a partition sits at a fixed integer `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockPosition {
    Semisimple {
        partition: Partition,
    },
    /// `μ = base^(index)` for a base with `base[t]` a Young diagram.
    NonSemisimple {
        base: Partition,
        index: usize,
    },
}

impl BlockPosition {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, BlockPosition::Semisimple { .. })
    }
}

impl fmt::Display for BlockPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockPosition::Semisimple { partition } => write!(f, "semisimple {partition}"),
            BlockPosition::NonSemisimple { base, index } => write!(f, "{base}^({index})"),
        }
    }
}

/// Whether `base` indexes a non-semisimple block at `t`.
pub fn is_block_base(base: &Partition, t: usize) -> bool {
    base.size() + base.first_row() <= t
}

/// The `i`-th member `λ^(i)` of the block sequence of `base`.
///
/// `λ^(0) = λ`; the first step adds `t - |λ| - λ_1 + 1` boxes in row one and
/// step `i + 1` adds `λ_i - λ_{i+1} + 1` boxes in row `i + 1`, so
/// `λ^(i) = (t - |λ| + 1, λ_1 + 1, ..., λ_{i-1} + 1, λ_{i+1}, λ_{i+2}, ...)`.
pub fn block_member(base: &Partition, t: usize, i: usize) -> Result<Partition> {
    if !is_block_base(base, t) {
        return Err(Error::NotABlockBase {
            partition: base.clone(),
            t,
        });
    }
    if i == 0 {
        return Ok(base.clone());
    }
    let mut parts = Vec::with_capacity(base.len().max(i) + 1);
    parts.push(t + 1 - base.size());
    for j in 1..i {
        parts.push(base.part(j - 1) + 1);
    }
    parts.extend(base.parts().iter().skip(i).copied());
    Partition::new(parts)
}

/// `[λ^(0), ..., λ^(i_max)]`.
pub fn block_sequence(base: &Partition, t: usize, i_max: usize) -> Result<Vec<Partition>> {
    (0..=i_max).map(|i| block_member(base, t, i)).collect()
}

/// Classify `μ` at `t` by inverting the block-member formula.
pub fn classify(mu: &Partition, t: usize) -> BlockPosition {
    if is_block_base(mu, t) {
        return BlockPosition::NonSemisimple {
            base: mu.clone(),
            index: 0,
        };
    }
    // For i ≥ 1, row one of μ fixes |λ| = t + 1 - μ_1; rows 2..i give
    // λ_1..λ_{i-1}; rows past i copy λ_{i+1}, ...; λ_i takes the remainder.
    let Some(size) = (t + 1).checked_sub(mu.first_row()) else {
        return BlockPosition::Semisimple {
            partition: mu.clone(),
        };
    };
    for i in 1..=mu.len() {
        let mut parts = Vec::with_capacity(mu.len());
        let mut ok = true;
        for j in 1..i {
            match mu.part(j).checked_sub(1) {
                Some(v) => parts.push(v),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let tail: Vec<usize> = mu.parts().iter().skip(i).copied().collect();
        let known: usize = parts.iter().sum::<usize>() + tail.iter().sum::<usize>();
        let Some(middle) = size.checked_sub(known) else {
            continue;
        };
        parts.push(middle);
        parts.extend(tail);
        let Ok(base) = Partition::new(parts) else {
            continue;
        };
        if is_block_base(&base, t) && block_member(&base, t, i).as_ref() == Ok(mu) {
            return BlockPosition::NonSemisimple { base, index: i };
        }
    }
    BlockPosition::Semisimple {
        partition: mu.clone(),
    }
}

/// `μ^{†k}`: shift by `k` inside the block, `None` when absent.
pub fn dagger(mu: &Partition, t: usize, k: i64) -> Option<Partition> {
    match classify(mu, t) {
        BlockPosition::Semisimple { partition } => (k == 0).then_some(partition),
        BlockPosition::NonSemisimple { base, index } => {
            let j = index as i64 + k;
            if j < 0 {
                None
            } else {
                Some(block_member(&base, t, j as usize).expect("base is valid"))
            }
        }
    }
}

/// `B^t_μ`: the `τ ⊆ μ` with `μ/τ ∈ HS` that are semisimple or are the last
/// member of their block contained in `μ`.
pub fn b_set(mu: &Partition, t: usize) -> Vec<Partition> {
    mu.horizontal_strip_removals()
        .into_iter()
        .filter(|tau| match classify(tau, t) {
            BlockPosition::Semisimple { .. } => true,
            BlockPosition::NonSemisimple { base, index } => {
                let next = block_member(&base, t, index + 1).expect("base is valid");
                !mu.contains(&next)
            }
        })
        .collect()
}

/// Which family of objects a [`KElement`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Simple objects `L_λ`.
    Simple,
    /// Standard objects `M_λ`.
    Standard,
    /// Indecomposable tilting objects `X_λ`.
    Indecomposable,
    /// Indecomposable injectives `Q_λ` of `Rep(S_∞)`.
    Injective,
}

impl Basis {
    fn letter(self) -> &'static str {
        match self {
            Basis::Simple => "L",
            Basis::Standard => "M",
            Basis::Indecomposable => "X",
            Basis::Injective => "Q",
        }
    }
}

/// An integer combination of labelled objects of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KElement {
    pub basis: Basis,
    terms: BTreeMap<Partition, i64>,
}

impl KElement {
    pub fn zero(basis: Basis) -> Self {
        KElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(basis: Basis, label: &Partition) -> Self {
        let mut k = Self::zero(basis);
        k.add_term(label, 1);
        k
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut k = Self::zero(basis);
        for (p, c) in terms {
            k.add_term(&p, c);
        }
        k
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn get(&self, label: &Partition) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, label: &Partition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(label.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(label);
        }
    }

    pub fn add_scaled(&mut self, other: &KElement, c: i64) {
        assert_eq!(
            self.basis, other.basis,
            "adding elements of different bases"
        );
        for (p, v) in &other.terms {
            self.add_term(p, c * v);
        }
    }

    pub fn add(&self, other: &KElement) -> KElement {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    /// Rewrite in another basis via a linear map on basis labels.
    pub fn map_linear(&self, basis: Basis, f: impl Fn(&Partition) -> KElement) -> KElement {
        let mut out = KElement::zero(basis);
        for (p, c) in &self.terms {
            out.add_scaled(&f(p), *c);
        }
        out
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == 1 {
                write!(f, "{letter}{p}")?;
            } else {
                write!(f, "{c}*{letter}{p}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for KElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            map.serialize_entry(&p.to_string(), c)?;
        }
        map.end()
    }
}

/// Standard filtration multiplicities of `X_τ` (for `τ` in some `B^t_μ`).
///
/// Index zero and semisimple labels are standard themselves; for `i ≥ 1` the
/// filtration is `M_{τ'^(i)}, M_{τ'^(i-1)}`.
pub fn standard_components_x(tau: &Partition, t: usize) -> KElement {
    match classify(tau, t) {
        BlockPosition::NonSemisimple { base, index } if index >= 1 => KElement::from_terms(
            Basis::Standard,
            [
                (tau.clone(), 1),
                (block_member(&base, t, index - 1).expect("base is valid"), 1),
            ],
        ),
        _ => KElement::unit(Basis::Standard, tau),
    }
}

/// `Γ_t(Q_λ) = ⊕_{μ ∈ B^t_λ} X_μ`.
pub fn gamma_q(lambda: &Partition, t: usize) -> KElement {
    KElement::from_terms(
        Basis::Indecomposable,
        b_set(lambda, t).into_iter().map(|p| (p, 1)),
    )
}

/// Simple constituents of `Q_λ`: every `L_μ` with `λ/μ ∈ HS`, once each.
pub fn q_simple_constituents(lambda: &Partition) -> KElement {
    KElement::from_terms(
        Basis::Simple,
        lambda
            .horizontal_strip_removals()
            .into_iter()
            .map(|p| (p, 1)),
    )
}

/// Terms `I^j = ⊕_{λ/μ ∈ VS_j} Q_μ` of the minimal injective resolution of
/// `L_λ` in `Rep(S_∞)`, for `j = 0..=ℓ(λ)`.
pub fn injective_resolution_shape(lambda: &Partition) -> Vec<KElement> {
    let conj = lambda.transpose();
    let mut by_degree = vec![KElement::zero(Basis::Injective); lambda.len() + 1];
    for mu_conj in conj.horizontal_strip_removals() {
        let j = lambda.size() - mu_conj.size();
        by_degree[j].add_term(&mu_conj.transpose(), 1);
    }
    by_degree
}
