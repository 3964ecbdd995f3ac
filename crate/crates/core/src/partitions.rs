//! Partitions, strict partitions, dominance order and the diagram statistics
//! used throughout the crate.
//!
//! The canonical order on partitions of `n` is reverse lexicographic:
//! `(n)` first, `(1^n)` last. Every matrix in the crate is indexed in this
//! order, which is a linear extension of dominance, so dominance-triangular
//! matrices come out visibly triangular.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the entries and drops zeros, so any composition is accepted.
    pub fn from_composition(parts: &[u32]) -> Self {
        let mut parts: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u32 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Parity of the length: 0 if even, 1 if odd.
    pub fn delta_stat(&self) -> u32 {
        (self.len() % 2) as u32
    }

    /// `m_i(λ)` for `i = 1..=λ_1`, as a vector indexed by `i - 1`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let first = self.parts.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0; first];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// True iff the partial sums of `self` weakly dominate those of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Arm and leg lengths along the main diagonal.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let rank = (1..=self.len()).take_while(|&i| self.part(i) as usize >= i).count();
        let arms = (1..=rank).map(|i| self.part(i) - i as u32).collect();
        let legs = (1..=rank).map(|i| conj.part(i) - i as u32).collect();
        (arms, legs)
    }

    /// Inverse of [`Partition::frobenius`].
    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Partition> {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(arms) || !strict(legs) {
            return Err(Error::Parse(format!("bad Frobenius symbol ({arms:?}|{legs:?})")));
        }
        let rank = arms.len();
        let rows = legs.first().map(|&l| l as usize + 1).unwrap_or(0);
        let mut parts = Vec::with_capacity(rows);
        for i in 1..=rows {
            if i <= rank {
                parts.push(arms[i - 1] + i as u32);
            } else {
                // row i below the diagonal block: count columns j <= rank whose leg reaches row i
                let cnt = (1..=rank).filter(|&j| legs[j - 1] as usize + j >= i).count();
                parts.push(cnt as u32);
            }
        }
        Partition::new(parts)
    }

    /// Ordinary hook length at the 1-based cell `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let conj = self.conjugate();
        self.part(i) + conj.part(j) + 1 - i as u32 - j as u32
    }

    /// Cells `(i, j)` (1-based) in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Order of the centralizer of a permutation of cycle type `self`:
    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub fn z_factor(&self) -> num_bigint::BigInt {
        let mut z = num_bigint::BigInt::from(1u32);
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z *= (i as u32 + 1) * k;
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `4,2,1`, `(4,2,1)`, `[4,2,1]` or `4 2 1`; the empty string is `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A partition with strictly decreasing parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Partition);

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0.parts
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p.parts))
        }
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts.clone())
            .map_err(|_| Error::NotStrict(parts))
            .and_then(StrictPartition::try_from)
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The double partition `(ξ_1,…,ξ_ℓ | ξ_1-1,…,ξ_ℓ-1)` in Frobenius notation.
    pub fn double_partition(&self) -> Partition {
        let legs: Vec<u32> = self.parts().iter().map(|&p| p - 1).collect();
        Partition::from_frobenius(self.parts(), &legs).expect("strict parts give a valid Frobenius symbol")
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::str::FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::try_from(s.parse::<Partition>()?)
    }
}

/// One cell of a shifted diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftedCell {
    pub row: usize,
    pub col: usize,
    pub content: i32,
    pub hook: u32,
}

/// The shifted diagram `ξ*` with contents and shifted hook lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedDiagram {
    pub owner: StrictPartition,
    pub cells: Vec<ShiftedCell>,
    pub double_partition: Partition,
}

impl ShiftedDiagram {
    /// Row `i` (1-based) of the diagram, left to right.
    pub fn row(&self, i: usize) -> impl Iterator<Item = &ShiftedCell> {
        self.cells.iter().filter(move |c| c.row == i)
    }

    pub fn hooks_by_row(&self) -> Vec<Vec<u32>> {
        (1..=self.owner.len())
            .map(|i| self.row(i).map(|c| c.hook).collect())
            .collect()
    }

    pub fn contents_by_row(&self) -> Vec<Vec<i32>> {
        (1..=self.owner.len())
            .map(|i| self.row(i).map(|c| c.content).collect())
            .collect()
    }
}

/// Shifted hooks are read off the double diagram: cell `(i, j)` of `ξ*`
/// sits at `(i, j + 1)` of the double diagram.
pub fn shifted_diagram(xi: &StrictPartition) -> ShiftedDiagram {
    let double = xi.double_partition();
    let mut cells = Vec::with_capacity(xi.size());
    for (r, &p) in xi.parts().iter().enumerate() {
        let i = r + 1;
        for j in i..i + p as usize {
            cells.push(ShiftedCell {
                row: i,
                col: j,
                content: j as i32 - i as i32,
                hook: double.hook(i, j + 1),
            });
        }
    }
    ShiftedDiagram {
        owner: xi.clone(),
        cells,
        double_partition: double,
    }
}

/// Row `i` hooks as the multiset `{1..ξ_i} ∪ {ξ_i+ξ_k} \ {ξ_i-ξ_k}` (k > i),
/// sorted decreasingly. Independent of the double-diagram construction.
pub fn shifted_row_hooks_by_formula(xi: &StrictPartition, i: usize) -> Vec<u32> {
    let parts = xi.parts();
    let xi_i = parts[i - 1];
    let mut hooks: Vec<u32> = (1..=xi_i).collect();
    hooks.extend(parts[i..].iter().map(|&x| xi_i + x));
    for &x in &parts[i..] {
        let gone = xi_i - x;
        let pos = hooks.iter().position(|&h| h == gone).expect("excluded hook is present");
        hooks.remove(pos);
    }
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    hooks
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions of `n`, in the same relative order as [`partitions_of`].
pub fn strict_partitions_of(n: usize) -> Vec<StrictPartition> {
    partitions_of(n)
        .into_iter()
        .filter(Partition::is_strict)
        .map(StrictPartition)
        .collect()
}

/// Canonical listing of `P_n` with a reverse index, shared process-wide.
#[derive(Debug, PartialEq, Eq)]
pub struct PartitionIndex {
    pub degree: usize,
    pub list: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl PartitionIndex {
    pub fn get(n: usize) -> Arc<PartitionIndex> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<PartitionIndex>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(found) = cache.read().unwrap().get(&n) {
            return found.clone();
        }
        let list = partitions_of(n);
        let index = list.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let built = Arc::new(PartitionIndex { degree: n, list, index });
        cache.write().unwrap().entry(n).or_insert(built).clone()
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    // p(n) via Euler's pentagonal recurrence
    fn partition_count(n: usize) -> usize {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as usize
    }

    #[test]
    fn small_listings() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
        assert_eq!(strict_partitions_of(3), vec![sp(&[3]), sp(&[2, 1])]);
        assert_eq!(strict_partitions_of(4), vec![sp(&[4]), sp(&[3, 1])]);
        assert_eq!(strict_partitions_of(1), vec![sp(&[1])]);
    }

    #[test]
    fn counts_match_recurrence() {
        for n in 0..=10 {
            let all = partitions_of(n);
            assert_eq!(all.len(), partition_count(n), "n = {n}");
            let mut sorted = all.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            assert!(all.iter().all(|q| q.size() == n));
            for s in strict_partitions_of(n) {
                assert!(all.contains(s.as_partition()));
            }
        }
    }

    #[test]
    fn canonical_order_is_reverse_lex() {
        for n in 1..=8 {
            let all = partitions_of(n);
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(serde_json::from_str::<StrictPartition>("[3,3]").is_err());
        let ok: StrictPartition = serde_json::from_str("[4,2,1]").unwrap();
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[4,2,1]");
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3]).dominates(&p(&[2, 1])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 1]).dominates(&p(&[2, 1])).unwrap());
        assert!(p(&[2, 1]).dominates(&p(&[3])).is_ok_and(|d| !d));
        assert_eq!(p(&[2]).dominates(&p(&[1])), Err(Error::SizeMismatch(2, 1)));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=8 {
            let all = partitions_of(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    if ab && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if ab && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[2, 1]).delta_stat(), 0);
        assert_eq!(p(&[3]).delta_stat(), 1);
        assert_eq!(p(&[3, 3]).conjugate(), p(&[2, 2, 2]));
        assert_eq!(p(&[5, 4, 3, 1]).frobenius(), (vec![4, 2, 0], vec![3, 1, 0]));
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![1, 2]);
        assert_eq!(p(&[2, 1, 1]).z_factor(), 4.into());
    }

    #[test]
    fn conjugate_and_frobenius_round_trip() {
        for n in 0..=9 {
            for q in partitions_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
                let (a, b) = q.frobenius();
                assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), q);
            }
        }
    }

    #[test]
    fn shifted_diagram_of_421() {
        let d = shifted_diagram(&sp(&[4, 2, 1]));
        assert_eq!(d.hooks_by_row(), vec![vec![6, 5, 4, 1], vec![3, 2], vec![1]]);
        assert_eq!(d.contents_by_row(), vec![vec![0, 1, 2, 3], vec![0, 1], vec![0]]);
        assert_eq!(d.double_partition, p(&[5, 4, 4, 1]));
    }

    #[test]
    fn shifted_diagram_small() {
        let d = shifted_diagram(&sp(&[2, 1]));
        assert_eq!(d.double_partition, p(&[3, 3]));
        assert_eq!(d.hooks_by_row(), vec![vec![3, 2], vec![1]]);
        let d = shifted_diagram(&sp(&[1]));
        assert_eq!(
            d.cells,
            vec![ShiftedCell {
                row: 1,
                col: 1,
                content: 0,
                hook: 1
            }]
        );
    }

    #[test]
    fn row_hook_law_and_double_size() {
        for n in 1..=9 {
            for xi in strict_partitions_of(n) {
                let d = shifted_diagram(&xi);
                assert_eq!(d.cells.len(), n);
                assert_eq!(d.double_partition.size(), 2 * n);
                for (i, row) in d.hooks_by_row().into_iter().enumerate() {
                    let mut row = row;
                    row.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(row, shifted_row_hooks_by_formula(&xi, i + 1), "{xi} row {}", i + 1);
                }
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,2".parse::<StrictPartition>().is_err());
    }
}
