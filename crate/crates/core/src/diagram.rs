//! Set-partition diagrams and their `ℤ[t]`-linear combinations.
//!
//! A diagram in `Hom([r],[s])` partitions the points `1..r` (source, written
//! without a prime) and `1'..s'` (target, primed). Internally the points are
//! numbered `0..r` followed by `r..r+s`, which is also the total order used
//! for the canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::scalar::{Field, Ring};

/// A set partition of `[r] ⊔ [s]` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionDiagram {
    r: usize,
    s: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartitionDiagram {
    /// Builds a diagram from blocks over the internal point numbering.
    pub fn new(r: usize, s: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let total = r + s;
        let mut seen = vec![false; total];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &p in b {
                if p >= total || seen[p] {
                    return Err(Error::Parse(format!("point {p} out of range or repeated")));
                }
                seen[p] = true;
            }
        }
        if seen.iter().any(|x| !x) {
            return Err(Error::Parse("blocks do not cover every point".into()));
        }
        Ok(Self::canonical(r, s, blocks))
    }

    fn canonical(r: usize, s: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartitionDiagram { r, s, blocks }
    }

    /// Diagram whose blocks are the fibres of `label` on the points.
    pub fn from_labels(r: usize, s: usize, label: &[usize]) -> Self {
        assert_eq!(label.len(), r + s);
        let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (p, &l) in label.iter().enumerate() {
            by_label.entry(l).or_default().push(p);
        }
        Self::canonical(r, s, by_label.into_values().collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::canonical(n, n, (0..n).map(|i| vec![i, n + i]).collect())
    }

    pub fn source(&self) -> usize {
        self.r
    }

    pub fn target(&self) -> usize {
        self.s
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Every block meets the source and the target at most once each.
    pub fn is_partial_pairing(&self) -> bool {
        self.blocks.iter().all(|b| {
            b.iter().filter(|&&p| p < self.r).count() <= 1
                && b.iter().filter(|&&p| p >= self.r).count() <= 1
        })
    }

    /// `self ∘ other`: stack `other: [n] → [m]` under `self: [m] → [k]`.
    ///
    /// Returns the induced diagram on `[n] ⊔ [k]` together with the number of
    /// joined blocks that live entirely in the middle row, which is the power
    /// of `t` carried by the composite.
    pub fn compose(&self, other: &Self) -> Result<(Self, usize)> {
        if other.s != self.r {
            return Err(Error::ArityMismatch(format!(
                "cannot compose Hom([{}],[{}]) after Hom([{}],[{}])",
                self.r, self.s, other.r, other.s
            )));
        }
        let (n, m, k) = (other.r, other.s, self.s);
        let mut uf = UnionFind::new(n + m + k);
        // `other` uses points 0..n+m directly; `self` is shifted by n
        for b in &other.blocks {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(w[0] + n, w[1] + n);
            }
        }
        let mut outer: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in (0..n).chain(n + m..n + m + k) {
            let q = if p < n { p } else { p - m };
            outer.entry(uf.find(p)).or_default().push(q);
        }
        let mut middle_only = 0;
        let mut counted = vec![false; n + m + k];
        for p in n..n + m {
            let root = uf.find(p);
            if !outer.contains_key(&root) && !counted[root] {
                counted[root] = true;
                middle_only += 1;
            }
        }
        Ok((
            Self::canonical(n, k, outer.into_values().collect()),
            middle_only,
        ))
    }

    /// Whether the colouring `f` of the source and `g` of the target is
    /// constant on every block.
    fn admits(&self, f: &[usize], g: &[usize]) -> bool {
        self.blocks.iter().all(|b| {
            let colour = |p: usize| if p < self.r { f[p] } else { g[p - self.r] };
            let c0 = colour(b[0]);
            b.iter().all(|&p| colour(p) == c0)
        })
    }

    fn point_label(&self, p: usize) -> String {
        if p < self.r {
            format!("{}", p + 1)
        } else {
            format!("{}'", p - self.r + 1)
        }
    }
}

impl fmt::Display for SetPartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let labels: Vec<String> = b.iter().map(|&p| self.point_label(p)).collect();
            write!(f, "[{}]", labels.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SetPartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}", self, self.r, self.s)
    }
}

impl FromStr for SetPartitionDiagram {
    type Err = Error;

    /// Parses `"[[1,1'],[2],[2']]"`; arities are the largest labels present.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [[..],..], got {s:?}")))?;
        let mut raw: Vec<Vec<(usize, bool)>> = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected '[' in {s:?}")))?;
            let close = inner
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed block in {s:?}")))?;
            let block = inner[..close]
                .split(',')
                .map(|tok| {
                    let (num, primed) = match tok.strip_suffix('\'') {
                        Some(n) => (n, true),
                        None => (tok, false),
                    };
                    match num.parse::<usize>() {
                        Ok(v) if v >= 1 => Ok((v, primed)),
                        _ => Err(Error::Parse(format!("bad point {tok:?} in {s:?}"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            raw.push(block);
            rest = &inner[close + 1..];
            rest = rest.strip_prefix(',').unwrap_or(rest);
        }
        let r = raw
            .iter()
            .flatten()
            .filter(|p| !p.1)
            .map(|p| p.0)
            .max()
            .unwrap_or(0);
        let t = raw
            .iter()
            .flatten()
            .filter(|p| p.1)
            .map(|p| p.0)
            .max()
            .unwrap_or(0);
        let blocks = raw
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|(v, primed)| if primed { r + v - 1 } else { v - 1 })
                    .collect()
            })
            .collect();
        SetPartitionDiagram::new(r, t, blocks)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A linear combination of diagrams in `Hom([r],[s])` with coefficients in
/// `T[t]`.
#[derive(Clone, PartialEq)]
pub struct Morphism<T> {
    r: usize,
    s: usize,
    terms: BTreeMap<SetPartitionDiagram, Poly<T>>,
}

impl<T: Ring> Morphism<T> {
    pub fn zero(r: usize, s: usize) -> Self {
        Morphism {
            r,
            s,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: SetPartitionDiagram) -> Self {
        Self::from_term(d, Poly::constant(T::one()))
    }

    pub fn from_term(d: SetPartitionDiagram, c: Poly<T>) -> Self {
        let mut m = Self::zero(d.r, d.s);
        m.add_term(d, c);
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(SetPartitionDiagram::identity(n))
    }

    pub fn source(&self) -> usize {
        self.r
    }

    pub fn target(&self) -> usize {
        self.s
    }

    pub fn terms(&self) -> &BTreeMap<SetPartitionDiagram, Poly<T>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &SetPartitionDiagram) -> Poly<T> {
        self.terms.get(d).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add_term(&mut self, d: SetPartitionDiagram, c: Poly<T>) {
        assert_eq!(
            (d.r, d.s),
            (self.r, self.s),
            "term arity differs from morphism"
        );
        let sum = &self.coeff(&d) + &c;
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Poly::constant(-T::one())))
    }

    pub fn scale(&self, c: &Poly<T>) -> Self {
        let mut out = Self::zero(self.r, self.s);
        for (d, a) in &self.terms {
            out.add_term(d.clone(), a * c);
        }
        out
    }

    /// `self ∘ other`, extended bilinearly from [`SetPartitionDiagram::compose`].
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.s != self.r {
            return Err(Error::ArityMismatch(format!(
                "cannot compose Hom([{}],[{}]) after Hom([{}],[{}])",
                self.r, self.s, other.r, other.s
            )));
        }
        let mut out = Self::zero(other.r, self.s);
        for (dg, cg) in &self.terms {
            for (df, cf) in &other.terms {
                let (d, ell) = dg.compose(df)?;
                out.add_term(d, (cg * cf).shift(ell));
            }
        }
        Ok(out)
    }

    /// Matrix of the morphism on `Fun([r],[N]) → Fun([s],[N])` with `t := N`.
    ///
    /// Functions are indexed in base `N` with the first point most
    /// significant.
    pub fn evaluate_at<F>(&self, big_n: usize, caps: &Caps) -> Result<Matrix<F>>
    where
        F: Field + From<T>,
    {
        let cols = checked_pow(big_n, self.r);
        let rows = checked_pow(big_n, self.s);
        let entries = rows.zip(cols).and_then(|(a, b)| a.checked_mul(b));
        match entries {
            Some(e) if e <= caps.eval_entries => {}
            _ => {
                return Err(Error::CapExceeded {
                    what: "evaluation matrix entries",
                    value: entries.unwrap_or(usize::MAX),
                    cap: caps.eval_entries,
                })
            }
        }
        let (rows, cols) = (rows.unwrap(), cols.unwrap());
        let t = T::from_int(big_n as i64);
        let mut out: Matrix<F> = Matrix::zeros(rows, cols);
        let sources: Vec<Vec<usize>> = (0..cols).map(|i| digits(i, big_n, self.r)).collect();
        let targets: Vec<Vec<usize>> = (0..rows).map(|i| digits(i, big_n, self.s)).collect();
        for (d, c) in &self.terms {
            let value = F::from(c.eval(&t));
            if value.is_zero() {
                continue;
            }
            for (gi, g) in targets.iter().enumerate() {
                for (fi, f) in sources.iter().enumerate() {
                    if d.admits(f, g) {
                        out[(gi, fi)] = out[(gi, fi)].clone() + value.clone();
                    }
                }
            }
        }
        Ok(out)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Morphism<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {d}")?;
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Morphism<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism[{}->{}]({self})", self.r, self.s)
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

fn digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

/// Every partial pairing of `[r]` and `[s]`, ordered by canonical form.
pub fn partial_pairings(r: usize, s: usize, caps: &Caps) -> Result<Vec<SetPartitionDiagram>> {
    let arity = r.max(s);
    if arity > caps.pairing_arity {
        return Err(Error::CapExceeded {
            what: "pairing arity",
            value: arity,
            cap: caps.pairing_arity,
        });
    }
    // choose, for every source point, a target partner or none
    let mut out = Vec::new();
    let mut partner = vec![None; r];
    let mut used = vec![false; s];
    fn rec(
        i: usize,
        r: usize,
        s: usize,
        partner: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        out: &mut Vec<SetPartitionDiagram>,
    ) {
        if i == r {
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            for (a, p) in partner.iter().enumerate() {
                match p {
                    Some(b) => blocks.push(vec![a, r + b]),
                    None => blocks.push(vec![a]),
                }
            }
            for (b, &u) in used.iter().enumerate() {
                if !u {
                    blocks.push(vec![r + b]);
                }
            }
            out.push(SetPartitionDiagram::canonical(r, s, blocks));
            return;
        }
        partner[i] = None;
        rec(i + 1, r, s, partner, used, out);
        for b in 0..s {
            if !used[b] {
                used[b] = true;
                partner[i] = Some(b);
                rec(i + 1, r, s, partner, used, out);
                used[b] = false;
            }
        }
        partner[i] = None;
    }
    rec(0, r, s, &mut partner, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// `res^l ∈ Hom([k],[k-1])`: `i ↦ i` for `i < l`, `l` unmatched, `i ↦ i-1`
/// for `i > l`.
pub fn res_diagram(k: usize, l: usize) -> Result<SetPartitionDiagram> {
    if k == 0 || l == 0 || l > k {
        return Err(Error::IndexOutOfRange(format!(
            "res^{l} needs 1 <= l <= k, got k = {k}"
        )));
    }
    let s = k - 1;
    let blocks = (1..=k)
        .map(|i| match i.cmp(&l) {
            std::cmp::Ordering::Less => vec![i - 1, k + i - 1],
            std::cmp::Ordering::Equal => vec![i - 1],
            std::cmp::Ordering::Greater => vec![i - 1, k + i - 2],
        })
        .collect();
    Ok(SetPartitionDiagram::canonical(k, s, blocks))
}

/// An equivalence relation on `[k]`, stored as its sorted classes (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    k: usize,
    classes: Vec<Vec<usize>>,
}

impl Relation {
    pub fn new(k: usize, mut classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; k];
        for c in classes.iter_mut() {
            c.sort_unstable();
            for &x in c.iter() {
                if x >= k || seen[x] {
                    return Err(Error::Parse(format!("invalid relation on [{k}]")));
                }
                seen[x] = true;
            }
        }
        classes.retain(|c| !c.is_empty());
        if seen.iter().any(|x| !x) {
            return Err(Error::Parse(format!("relation does not cover [{k}]")));
        }
        classes.sort_unstable_by_key(|c| c[0]);
        Ok(Relation { k, classes })
    }

    pub fn discrete(k: usize) -> Self {
        Relation {
            k,
            classes: (0..k).map(|i| vec![i]).collect(),
        }
    }

    pub fn total(k: usize) -> Self {
        Relation {
            k,
            classes: if k == 0 {
                vec![]
            } else {
                vec![(0..k).collect()]
            },
        }
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Every relation on `[k]`, from restricted growth strings.
    pub fn all(k: usize) -> Vec<Relation> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; k];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Relation>) {
            if i == rgs.len() {
                let blocks = if rgs.is_empty() { 0 } else { max + 1 };
                let mut classes = vec![Vec::new(); blocks];
                for (x, &b) in rgs.iter().enumerate() {
                    classes[b].push(x);
                }
                out.push(Relation {
                    k: rgs.len(),
                    classes,
                });
                return;
            }
            let limit = if i == 0 { 0 } else { max + 1 };
            for b in 0..=limit {
                rgs[i] = b;
                rec(i + 1, max.max(b), rgs, out);
            }
        }
        rec(0, 0, &mut rgs, &mut out);
        out
    }

    /// `self ⊆ other` as relations, i.e. `other` is coarser or equal.
    pub fn refines(&self, other: &Relation) -> bool {
        let mut owner = vec![0; self.k];
        for (i, c) in other.classes.iter().enumerate() {
            for &x in c {
                owner[x] = i;
            }
        }
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| owner[x] == owner[c[0]]))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let items: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Relation {
    type Err = Error;

    /// Parses `"[[1,2],[3]]"` on `[k]` with `k` the largest entry.
    fn from_str(s: &str) -> Result<Self> {
        let d: SetPartitionDiagram = s.parse()?;
        if d.s != 0 {
            return Err(Error::Parse(format!(
                "relation {s:?} must not use primed points"
            )));
        }
        Relation::new(d.r, d.blocks)
    }
}

/// `π_R`: each class `C` of `R` becomes the block `C ∪ C'`.
pub fn pi_r(rel: &Relation) -> SetPartitionDiagram {
    let k = rel.k;
    SetPartitionDiagram::canonical(
        k,
        k,
        rel.classes
            .iter()
            .map(|c| c.iter().copied().chain(c.iter().map(|x| x + k)).collect())
            .collect(),
    )
}

/// `x_R = π_R - Σ_{R' ⊋ R} x_{R'}`.
pub fn x_r<T: Ring>(rel: &Relation, caps: &Caps) -> Result<Morphism<T>> {
    if rel.k > caps.bell_k {
        return Err(Error::CapExceeded {
            what: "relation size",
            value: rel.k,
            cap: caps.bell_k,
        });
    }
    let mut memo = BTreeMap::new();
    Ok(x_r_memo(rel, &Relation::all(rel.k), &mut memo))
}

fn x_r_memo<T: Ring>(
    rel: &Relation,
    all: &[Relation],
    memo: &mut BTreeMap<Relation, Morphism<T>>,
) -> Morphism<T> {
    if let Some(m) = memo.get(rel) {
        return m.clone();
    }
    let mut out = Morphism::from_diagram(pi_r(rel));
    for coarser in all.iter().filter(|r| *r != rel && rel.refines(r)) {
        out = out.sub(&x_r_memo(coarser, all, memo));
    }
    memo.insert(rel.clone(), out.clone());
    out
}

/// All `x_R` for relations on `[k]`, in [`Relation::all`] order.
pub fn idempotent_system<T: Ring>(k: usize, caps: &Caps) -> Result<Vec<(Relation, Morphism<T>)>> {
    if k > caps.bell_k {
        return Err(Error::CapExceeded {
            what: "relation size",
            value: k,
            cap: caps.bell_k,
        });
    }
    let all = Relation::all(k);
    let mut memo = BTreeMap::new();
    Ok(all
        .iter()
        .map(|r| (r.clone(), x_r_memo(r, &all, &mut memo)))
        .collect())
}
