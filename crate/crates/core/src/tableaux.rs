//! Semistandard Young tableaux, the charge statistic and marked shifted
//! tableaux, all by backtracking enumeration.
//!
//! Cells are filled in row-major order, so enumerations come out in
//! lexicographic order of their row-concatenated entries.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};

/// A semistandard tableau; rows weakly increase, columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ssyt {
    #[serde(skip)]
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Multiplicity of each letter `1..=max`.
    pub fn weight(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut w = vec![0; max];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        w
    }

    /// Row reading word: bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut [u32],
    visit: &mut dyn FnMut(&[Vec<u32>]),
) {
    if k == cells.len() {
        visit(rows);
        return;
    }
    let (i, j) = cells[k];
    let left = if j > 1 { rows[i - 1][j - 2] } else { 1 };
    let above = if i > 1 { rows[i - 2][j - 1] + 1 } else { 1 };
    let lo = left.max(above);
    for x in lo..=remaining.len() as u32 {
        if remaining[x as usize - 1] == 0 {
            continue;
        }
        remaining[x as usize - 1] -= 1;
        rows[i - 1].push(x);
        fill_ssyt(cells, k + 1, rows, remaining, visit);
        rows[i - 1].pop();
        remaining[x as usize - 1] += 1;
    }
}

fn walk_ssyt(shape: &Partition, weight: &[u32], visit: &mut dyn FnMut(&[Vec<u32>])) -> Result<()> {
    let wsum: usize = weight.iter().map(|&w| w as usize).sum();
    if shape.size() != wsum {
        return Err(Error::SizeMismatch(shape.size(), wsum));
    }
    let cells: Vec<_> = shape.cells().collect();
    let mut rows = vec![Vec::new(); shape.len()];
    let mut remaining = weight.to_vec();
    fill_ssyt(&cells, 0, &mut rows, &mut remaining, visit);
    Ok(())
}

/// All SSYT of shape `shape` and weight `weight` (a composition).
pub fn enumerate_ssyt(shape: &Partition, weight: &[u32]) -> Result<Vec<Ssyt>> {
    let mut out = Vec::new();
    walk_ssyt(shape, weight, &mut |rows| {
        out.push(Ssyt {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    })?;
    Ok(out)
}

/// The Kostka number `K_{λμ}`.
pub fn count_ssyt(shape: &Partition, weight: &Partition) -> Result<u64> {
    let mut n = 0u64;
    walk_ssyt(shape, weight.parts(), &mut |_| n += 1)?;
    Ok(n)
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are peeled off one at a time: starting from the right
/// end, scan leftwards (cyclically) for 1, then 2, and so on. In a standard
/// subword the letter 1 has index 0 and `r+1` has the index of `r`, plus one
/// if `r+1` lies to the right of `r`. The charge is the sum of all indices.
pub fn charge_word(word: &[u32]) -> Result<u32> {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut content = vec![0u32; max];
    for &x in word {
        if x == 0 {
            return Err(Error::WeightNotPartition(content));
        }
        content[x as usize - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::WeightNotPartition(content));
    }
    let mut alive = vec![true; word.len()];
    let mut left = word.len();
    let mut total = 0;
    while left > 0 {
        let letters = (1..=max as u32)
            .take_while(|&r| word.iter().zip(&alive).any(|(&x, &a)| a && x == r))
            .count() as u32;
        let mut pos = word.len();
        let mut prev: Option<usize> = None;
        let mut index = 0;
        for r in 1..=letters {
            // cyclic scan leftwards from just before `pos`
            let n = word.len();
            let found = (1..=n)
                .map(|k| (pos + n - k) % n)
                .find(|&p| alive[p] && word[p] == r)
                .expect("letter present");
            if let Some(pp) = prev {
                if found > pp {
                    index += 1;
                }
            }
            total += index;
            alive[found] = false;
            left -= 1;
            prev = Some(found);
            pos = found;
        }
    }
    Ok(total)
}

/// Charge of the row reading word of a tableau with partition weight.
pub fn charge(t: &Ssyt) -> Result<u32> {
    charge_word(&t.reading_word())
}

/// A marked shifted tableau. Entries use the encoding `k -> k`, `k' -> -k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedShiftedTableau {
    #[serde(skip)]
    pub shape: StrictPartition,
    pub rows: Vec<Vec<i32>>,
}

impl MarkedShiftedTableau {
    pub fn weight(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0) as usize;
        let mut w = vec![0; max];
        for x in self.rows.iter().flatten() {
            w[x.unsigned_abs() as usize - 1] += 1;
        }
        w
    }
}

// Letters are coded on one line, 1' < 1 < 2' < 2 < …: k' -> 2k-1, k -> 2k.
fn decode(code: u32) -> i32 {
    let k = code.div_ceil(2) as i32;
    if code % 2 == 1 {
        -k
    } else {
        k
    }
}

fn fill_marked(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut [u32],
    visit: &mut dyn FnMut(&[Vec<u32>]),
) {
    if k == cells.len() {
        visit(rows);
        return;
    }
    let (i, j) = cells[k];
    // row i occupies columns i..; the cell above (i-1, j) sits at index j-i+1 of row i-1
    let left = (j > i).then(|| rows[i - 1][j - i - 1]);
    let above = (i > 1).then(|| rows[i - 2][j - i + 1]);
    let lo = left.unwrap_or(1).max(above.unwrap_or(1));
    for code in lo..=2 * remaining.len() as u32 {
        let letter = code.div_ceil(2) as usize;
        if remaining[letter - 1] == 0 {
            continue;
        }
        let marked = code % 2 == 1;
        if marked && left == Some(code) {
            continue;
        }
        if !marked && above == Some(code) {
            continue;
        }
        remaining[letter - 1] -= 1;
        rows[i - 1].push(code);
        fill_marked(cells, k + 1, rows, remaining, visit);
        rows[i - 1].pop();
        remaining[letter - 1] += 1;
    }
}

fn walk_marked(shape: &StrictPartition, weight: &[u32], visit: &mut dyn FnMut(&[Vec<u32>])) -> Result<()> {
    let wsum: usize = weight.iter().map(|&w| w as usize).sum();
    if shape.size() != wsum {
        return Err(Error::SizeMismatch(shape.size(), wsum));
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (r + 1..r + 1 + p as usize).map(move |j| (r + 1, j)))
        .collect();
    let mut rows = vec![Vec::new(); shape.len()];
    let mut remaining = weight.to_vec();
    fill_marked(&cells, 0, &mut rows, &mut remaining, visit);
    Ok(())
}

/// All marked shifted tableaux of shape `shape` and weight `weight`
/// (any composition).
pub fn enumerate_marked_shifted(shape: &StrictPartition, weight: &[u32]) -> Result<Vec<MarkedShiftedTableau>> {
    let mut out = Vec::new();
    walk_marked(shape, weight, &mut |rows| {
        out.push(MarkedShiftedTableau {
            shape: shape.clone(),
            rows: rows.iter().map(|r| r.iter().map(|&c| decode(c)).collect()).collect(),
        })
    })?;
    Ok(out)
}

/// Number of marked shifted tableaux with the given weight composition.
pub fn count_marked_shifted_composition(shape: &StrictPartition, weight: &[u32]) -> Result<u64> {
    let mut n = 0u64;
    walk_marked(shape, weight, &mut |_| n += 1)?;
    Ok(n)
}

/// `K⁻_{ξμ}`, the number of marked shifted tableaux of shape `ξ` and weight `μ`.
pub fn count_marked_shifted(shape: &StrictPartition, weight: &Partition) -> Result<u64> {
    count_marked_shifted_composition(shape, weight.parts())
}

/// Number of standard shifted tableaux of shape `ξ`, by removing corners.
pub fn count_standard_shifted(shape: &StrictPartition) -> u64 {
    fn go(parts: Vec<u32>, memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(&parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] - 1 > next || (parts[i] == 1 && i + 1 == parts.len()) {
                let mut smaller = parts.clone();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += go(smaller, memo);
            }
        }
        memo.insert(parts, total);
        total
    }
    go(shape.parts().to_vec(), &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, shifted_diagram, strict_partitions_of};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    /// Brute force: every map from cells to 1..=k, filtered by the row and
    /// column rules and the weight.
    fn brute_ssyt(shape: &Partition, weight: &[u32]) -> u64 {
        let cells: Vec<_> = shape.cells().collect();
        let k = weight.len() as u32;
        let total = (k as u64).pow(cells.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut c = code;
            let mut fill = HashMap::new();
            for &cell in &cells {
                fill.insert(cell, (c % k as u64) as u32 + 1);
                c /= k as u64;
            }
            let ok_rows = cells.iter().all(|&(i, j)| j == 1 || fill[&(i, j - 1)] <= fill[&(i, j)]);
            let ok_cols = cells.iter().all(|&(i, j)| i == 1 || fill[&(i - 1, j)] < fill[&(i, j)]);
            let mut w = vec![0; k as usize];
            for v in fill.values() {
                w[*v as usize - 1] += 1;
            }
            if ok_rows && ok_cols && w == weight {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(count_ssyt(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(brute_ssyt(&p(&[2, 1]), &[1, 1, 1]), 2);
        for n in 1..=5 {
            for lam in partitions_of(n) {
                assert_eq!(count_ssyt(&lam, &lam).unwrap(), 1);
                for mu in partitions_of(n) {
                    assert_eq!(count_ssyt(&p(&[n as u32]), &mu).unwrap(), 1);
                    if n <= 4 {
                        assert_eq!(count_ssyt(&lam, &mu).unwrap(), brute_ssyt(&lam, mu.parts()));
                    }
                }
            }
        }
        assert_eq!(count_ssyt(&p(&[2]), &p(&[1])), Err(Error::SizeMismatch(2, 1)));
    }

    #[test]
    fn charge_examples() {
        let t = enumerate_ssyt(&p(&[2, 1]), &[2, 1]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(charge(&t[0]).unwrap(), 0);
        let mut charges: Vec<u32> = enumerate_ssyt(&p(&[2, 1]), &[1, 1, 1])
            .unwrap()
            .iter()
            .map(|t| charge(t).unwrap())
            .collect();
        charges.sort();
        assert_eq!(charges, vec![1, 2]);
        let t = enumerate_ssyt(&p(&[2]), &[1, 1]).unwrap();
        assert_eq!(charge(&t[0]).unwrap(), 1);
        assert!(matches!(charge_word(&[1, 2, 2]), Err(Error::WeightNotPartition(_))));
    }

    #[test]
    fn superstandard_has_charge_zero() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let t = enumerate_ssyt(&lam, lam.parts()).unwrap();
                assert_eq!(t.len(), 1);
                assert_eq!(charge(&t[0]).unwrap(), 0);
            }
        }
    }

    #[test]
    fn marked_shifted_counts() {
        assert_eq!(count_marked_shifted(&sp(&[3]), &p(&[1, 1, 1])).unwrap(), 8);
        assert_eq!(count_marked_shifted(&sp(&[2, 1]), &p(&[2, 1])).unwrap(), 4);
        assert_eq!(count_marked_shifted(&sp(&[1]), &p(&[1])).unwrap(), 2);
        let all = enumerate_marked_shifted(&sp(&[1]), &[1]).unwrap();
        let rows: Vec<_> = all.iter().map(|t| t.rows.clone()).collect();
        assert_eq!(rows, vec![vec![vec![-1]], vec![vec![1]]]);
        assert_eq!(serde_json::to_string(&all[0]).unwrap(), r#"{"rows":[[-1]]}"#);
    }

    #[test]
    fn marked_shifted_rules_hold() {
        for t in enumerate_marked_shifted(&sp(&[3, 1]), &[2, 1, 1]).unwrap() {
            let key = |x: i32| if x < 0 { 2 * (-x) - 1 } else { 2 * x };
            for r in &t.rows {
                for w in r.windows(2) {
                    assert!(key(w[0]) <= key(w[1]));
                    assert!(!(w[0] < 0 && w[0] == w[1]));
                }
            }
            // row 2 starts under column 2 of row 1
            let (a, b) = (t.rows[0][1], t.rows[1][0]);
            assert!(key(a) <= key(b));
            assert!(!(a > 0 && a == b));
            assert_eq!(t.weight(), vec![2, 1, 1]);
        }
    }

    #[test]
    fn weight_permutation_invariance() {
        for n in 1..=6 {
            for xi in strict_partitions_of(n) {
                for mu in partitions_of(n) {
                    let base = count_marked_shifted(&xi, &mu).unwrap();
                    let mut rev = mu.parts().to_vec();
                    rev.reverse();
                    assert_eq!(count_marked_shifted_composition(&xi, &rev).unwrap(), base);
                    if mu.len() >= 2 {
                        let mut sw = mu.parts().to_vec();
                        sw.swap(0, 1);
                        sw.insert(1, 0);
                        assert_eq!(count_marked_shifted_composition(&xi, &sw).unwrap(), base);
                    }
                }
            }
        }
    }

    #[test]
    fn shifted_hook_length_formula() {
        for n in 1..=9 {
            let fact: u64 = (1..=n as u64).product();
            for xi in strict_partitions_of(n) {
                let hooks: u64 = shifted_diagram(&xi).cells.iter().map(|c| c.hook as u64).product();
                assert_eq!(hooks * count_standard_shifted(&xi), fact, "{xi}");
            }
        }
    }
}
