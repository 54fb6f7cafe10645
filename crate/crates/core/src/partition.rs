//! Young diagrams: containment, strips, transpose, padding, row-one hooks and
//! enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ ... ≥ 1`, stored without trailing zeros.
///
/// Ordering is by size first and then reverse-lexicographic, so that within
/// one size `(n)` comes first and `(1^n)` last.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        Self::of(&[n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.first_row();
        Partition {
            parts: (0..cols)
                .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
                .collect(),
        }
    }

    /// `self ⊇ inner` as Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `λ[n]`: prepend a row of length `n - |λ|`.
    pub fn pad(&self, n: usize) -> Result<Partition> {
        let required = self.size() + self.first_row();
        if n < required {
            return Err(Error::PadTooSmall {
                partition: self.clone(),
                n,
                required,
            });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n - self.size());
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Inverse of [`Partition::pad`]: drop the first row.
    pub fn unpad(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Every `τ ⊆ self` with `self/τ` a horizontal strip.
    pub fn horizontal_strip_removals(&self) -> Vec<Partition> {
        // τ_i ranges over [λ_{i+1}, λ_i] independently
        let mut out = vec![Vec::new()];
        for i in 0..self.len() {
            let (lo, hi) = (self.part(i + 1), self.part(i));
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (lo..=hi).rev().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        let mut parts: Vec<Partition> = out
            .into_iter()
            .map(|p| Partition::new(p).expect("interlacing sequences are partitions"))
            .collect();
        parts.sort();
        parts
    }

    /// Every `μ ⊇ self` with `μ/self` a horizontal strip of size `d`.
    pub fn horizontal_strip_additions(&self, d: usize) -> Vec<Partition> {
        // μ_1 ≥ λ_1 free, μ_i ∈ [λ_i, λ_{i-1}] for i ≥ 2, one new row of length ≤ λ_last
        let rows = self.len() + 1;
        let mut out = Vec::new();
        let mut cur = vec![0usize; rows];
        fn rec(
            lam: &Partition,
            i: usize,
            left: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("interlacing"));
                }
                return;
            }
            let base = lam.part(i);
            let max_extra = if i == 0 {
                left
            } else {
                (lam.part(i - 1) - base).min(left)
            };
            for e in 0..=max_extra {
                cur[i] = base + e;
                rec(lam, i + 1, left - e, cur, out);
            }
        }
        rec(self, 0, d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Hooks with vertex in row one, one per column, sorted by target size.
    pub fn row1_hooks(&self) -> Vec<RowOneHook> {
        let conj = self.transpose();
        let n = self.size();
        let first = self.first_row();
        (1..=first)
            .map(|j| {
                let height = conj.part(j - 1);
                // removing the rim hook from (1, λ_1) to (height, j)
                let mut rem = Vec::with_capacity(self.len());
                for r in 1..height {
                    rem.push(self.part(r) - 1);
                }
                rem.push(j - 1);
                rem.extend_from_slice(&self.parts[height..]);
                RowOneHook {
                    column: j,
                    target_size: n + j - first - height,
                    height,
                    remainder: Partition::new(rem).expect("rim hook removal yields a partition"),
                }
            })
            .collect()
    }

    /// All partitions of `n`, reverse-lexicographic, without a cap.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, in the crate ordering.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }

    /// Multiplicities `m_i` of each part size, indexed by part value.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first_row() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

/// All partitions of `n` in reverse-lexicographic order, guarded by
/// `caps.partition_n`.
pub fn partitions_of(n: usize, caps: &Caps) -> Result<Vec<Partition>> {
    if n > caps.partition_n {
        return Err(Error::CapExceeded {
            what: "partition size",
            value: n,
            cap: caps.partition_n,
        });
    }
    Ok(Partition::all_of_size(n))
}

pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| inner.part(i) >= outer.part(i + 1))
}

pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    is_horizontal_strip(&inner.transpose(), &outer.transpose())
}

/// A hook of `μ` with vertex `(1, column)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowOneHook {
    pub column: usize,
    /// `|μ| - μ_1 - μ^∨_j + j`, the size left after removal.
    pub target_size: usize,
    /// Number of boxes of the hook in column `j`.
    pub height: usize,
    pub remainder: Partition,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                let v: usize = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))?;
                if v == 0 {
                    return Err(Error::Parse(format!("zero part in {s:?}")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn strip_examples() {
        let l = p(&[3, 1]);
        assert!(is_horizontal_strip(&l, &l));
        assert!(is_horizontal_strip(&p(&[1, 1]), &p(&[2, 1])));
        assert!(!is_horizontal_strip(&p(&[1]), &p(&[2, 2])));
        assert!(is_vertical_strip(&l, &l));
        assert!(is_vertical_strip(&p(&[1]), &p(&[1, 1])));
        assert!(!is_vertical_strip(&p(&[1]), &p(&[3])));
        assert!(!is_horizontal_strip(&p(&[2]), &p(&[1, 1])));
    }

    #[test]
    fn pad_examples() {
        assert_eq!(Partition::empty().pad(5).unwrap(), p(&[5]));
        assert_eq!(p(&[1]).pad(3).unwrap(), p(&[2, 1]));
        assert!(matches!(
            p(&[2, 1]).pad(4),
            Err(Error::PadTooSmall { required: 5, .. })
        ));
        assert_eq!(Partition::empty().pad(0).unwrap(), Partition::empty());
    }

    #[test]
    fn enumeration_examples() {
        let caps = Caps::default();
        assert_eq!(partitions_of(0, &caps).unwrap(), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3, &caps).unwrap(),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(partitions_of(5, &caps).unwrap().len(), 7);
        assert!(matches!(
            partitions_of(41, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_counts_match_euler_recurrence() {
        // p(n) via the pentagonal number recurrence
        let mut pn = vec![1i64];
        for n in 1..=20i64 {
            let mut s = 0;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * pn[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    s += sign * pn[(n - g2) as usize];
                }
                k += 1;
            }
            pn.push(s);
        }
        for n in 0..=20 {
            assert_eq!(Partition::all_of_size(n).len() as i64, pn[n], "p({n})");
        }
    }

    #[test]
    fn row1_hook_examples() {
        let h = p(&[1]).row1_hooks();
        assert_eq!(h.len(), 1);
        assert_eq!((h[0].column, h[0].target_size, h[0].height), (1, 0, 1));
        assert_eq!(h[0].remainder, Partition::empty());

        let h = p(&[2, 1]).row1_hooks();
        assert_eq!(
            (h[0].target_size, h[0].height, h[0].remainder.clone()),
            (0, 2, Partition::empty())
        );
        assert_eq!(
            (h[1].target_size, h[1].height, h[1].remainder.clone()),
            (2, 1, p(&[1, 1]))
        );

        for n in 1..6 {
            let h = Partition::row(n).row1_hooks();
            for (j, hook) in h.iter().enumerate() {
                assert_eq!(hook.target_size, j);
                assert_eq!(hook.height, 1);
                assert_eq!(hook.remainder, Partition::row(j));
            }
        }
        // vertex (1,3) of (5,4,4,2,1,1) removes a height-3 hook
        let h = &p(&[5, 4, 4, 2, 1, 1]).row1_hooks()[2];
        assert_eq!(h.height, 3);
        assert_eq!(h.remainder, p(&[3, 3, 2, 2, 1, 1]));
    }

    #[test]
    fn strip_duality_exhaustive() {
        let all = Partition::all_up_to(8);
        for outer in &all {
            for inner in &all {
                if inner.size() > outer.size() {
                    continue;
                }
                assert_eq!(
                    is_horizontal_strip(inner, outer),
                    is_vertical_strip(&inner.transpose(), &outer.transpose()),
                    "{inner} {outer}"
                );
            }
        }
    }

    #[test]
    fn strip_enumerators_match_predicate() {
        let all = Partition::all_up_to(7);
        for mu in &all {
            let removed = mu.horizontal_strip_removals();
            let brute: Vec<_> = all
                .iter()
                .filter(|t| is_horizontal_strip(t, mu))
                .cloned()
                .collect();
            assert_eq!(removed, brute, "{mu}");
            for d in 0..3 {
                let added = mu.horizontal_strip_additions(d);
                let brute: Vec<_> = Partition::all_of_size(mu.size() + d)
                    .into_iter()
                    .filter(|o| is_horizontal_strip(mu, o))
                    .collect();
                let mut added_sorted = added.clone();
                added_sorted.sort();
                let mut brute_sorted = brute;
                brute_sorted.sort();
                assert_eq!(added_sorted, brute_sorted, "{mu} + {d}");
            }
        }
    }

    #[test]
    fn text_syntax() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 2 , 1 ] ".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1,0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..7, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(l in arb_partition()) {
            prop_assert_eq!(l.transpose().transpose(), l.clone());
            prop_assert_eq!(l.transpose().size(), l.size());
        }

        #[test]
        fn padding_adds_one_row(l in arb_partition(), extra in 0usize..5) {
            let n = l.size() + l.first_row() + extra;
            let padded = l.pad(n).unwrap();
            prop_assert_eq!(padded.size(), n);
            prop_assert_eq!(padded.unpad(), l.clone());
            if n > 0 {
                prop_assert_eq!(padded.transpose().part(0), l.len() + 1);
            }
        }

        #[test]
        fn row1_hooks_invariants(l in arb_partition()) {
            let hooks = l.row1_hooks();
            prop_assert_eq!(hooks.len(), l.first_row());
            for w in hooks.windows(2) {
                prop_assert!(w[0].target_size < w[1].target_size);
            }
            for h in &hooks {
                prop_assert_eq!(h.remainder.size(), h.target_size);
                prop_assert!(l.contains(&h.remainder));
            }
        }

        #[test]
        fn serde_roundtrip(l in arb_partition()) {
            let v: Vec<usize> = l.clone().into();
            prop_assert_eq!(Partition::try_from(v).unwrap(), l.clone());
            prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }
    }
}
