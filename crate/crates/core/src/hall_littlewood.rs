//! Hall-Littlewood functions and Kostka-Foulkes polynomials.
//!
//! `P_μ(x;t)` is defined by Gram–Schmidt: it is `m_μ` plus lower terms in
//! dominance, and the `P_μ` are pairwise orthogonal for
//! `⟨p_λ, p_μ⟩_t = δ_{λμ} z_λ Π_i 1/(1 - t^{λ_i})`. Orthogonalization runs
//! along the canonical order, which extends dominance; since the result is
//! known to be triangular for dominance itself, any linear extension gives
//! the same basis.
//!
//! `K_{λμ}(t)` is computed three ways:
//!
//! * `Charge`: `Σ_T t^{charge(T)}` over semistandard tableaux;
//! * `LinearSolve`: the coefficients of `s_λ` in the P basis (production);
//! * `Kostant`: Lusztig's t-weight multiplicity
//!   `Σ_{w ∈ S_n} sgn(w) 𝒫_t(w(λ+ρ) - (μ+ρ))` with the t-analogue `𝒫_t` of
//!   Kostant's partition function for the roots `ε_i - ε_j`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionIndex};
use crate::rings::gcd::gcd_qt;
use crate::rings::{q_int, Coeff, Field, PolyQT, PolyT, RatQT, Q};
use crate::symfunc::{transition_from_schur, transition_matrix, Basis, SymFunc};
use crate::tableaux::{charge, enumerate_ssyt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KostkaRoute {
    Charge,
    LinearSolve,
    Kostant,
}

/// A basis of degree-`n` symmetric functions, each element stored densely
/// in monomial coordinates: `rows[μ][λ]` is the coefficient of `m_λ`.
#[derive(Clone, Debug)]
pub struct MonomialTriangularBasis {
    pub index: Arc<PartitionIndex>,
    pub rows: Vec<Vec<RatQT>>,
}

impl MonomialTriangularBasis {
    pub fn element(&self, mu: &Partition) -> SymFunc<RatQT> {
        let i = self.index.position(mu).expect("partition of the basis degree");
        let terms = self.index.list.iter().cloned().zip(self.rows[i].iter().cloned());
        SymFunc::from_terms(self.index.degree, Basis::Monomial, terms).expect("degrees match")
    }

    /// Coefficients of `f` in this basis, indexed canonically. Requires
    /// every element to be `m_μ` plus terms later in canonical order.
    pub fn expand(&self, f: &SymFunc<RatQT>) -> Vec<RatQT> {
        let n = self.index.len();
        let fm = f.to_basis(Basis::Monomial);
        let mut rest: Vec<RatQT> = self.index.list.iter().map(|l| fm.coeff(l)).collect();
        let mut out = vec![RatQT::zero(); n];
        for i in 0..n {
            let c = rest[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, slot) in rest.iter_mut().enumerate().skip(i) {
                let b = &self.rows[i][j];
                if !b.is_zero() {
                    *slot = slot.minus(&c.times(b));
                }
            }
            out[i] = c;
        }
        out
    }
}

/// Gram matrix of the monomial basis for `⟨p_ρ, p_σ⟩ = δ z_ρ w(ρ)`,
/// multiplied through by a common denominator of the weights. The scaling
/// changes no orthogonality relation and keeps every entry polynomial.
#[allow(clippy::needless_range_loop)]
pub fn monomial_gram_numerators(n: usize, weight: &dyn Fn(&Partition) -> RatQT) -> Vec<Vec<PolyQT>> {
    let idx = PartitionIndex::get(n);
    let m2p = transition_matrix(Basis::Monomial, Basis::Power, n);
    let ws: Vec<RatQT> = idx.list.iter().map(weight).collect();
    let common = ws
        .iter()
        .fold(PolyQT::constant(q_int(1)), |acc, w| lcm(&acc, w.denominator()));
    let nums: Vec<PolyQT> = idx
        .list
        .iter()
        .zip(&ws)
        .map(|(rho, w)| {
            let cofactor = common.exact_divide(w.denominator()).expect("common multiple");
            w.numerator().mul(&cofactor).scale(&Q::from_integer(rho.z_factor()))
        })
        .collect();
    let size = idx.len();
    let mut g = vec![vec![PolyQT::zero(); size]; size];
    for a in 0..size {
        for b in a..size {
            let mut acc = PolyQT::zero();
            for (r, num) in nums.iter().enumerate() {
                let c = m2p.get(a, r) * m2p.get(b, r);
                if !num_traits::Zero::is_zero(&c) {
                    acc = acc.add(&num.scale(&c));
                }
            }
            g[a][b] = acc.clone();
            g[b][a] = acc;
        }
    }
    g
}

fn lcm(a: &PolyQT, b: &PolyQT) -> PolyQT {
    if b.is_constant() {
        return a.clone();
    }
    if a.is_constant() {
        return b.clone();
    }
    a.mul(&b.exact_divide(&gcd_qt(a, b)).expect("gcd divides"))
}

fn dot(row: &[PolyQT], g: &[PolyQT], from: usize) -> PolyQT {
    let mut acc = PolyQT::zero();
    for l in from..row.len() {
        if !row[l].is_zero() && !g[l].is_zero() {
            acc = acc.add(&row[l].mul(&g[l]));
        }
    }
    acc
}

/// The unique basis with elements `m_μ + (terms later in canonical order)`
/// that is orthogonal for the weighted inner product.
///
/// Row `k` is kept as polynomial numerators over one denominator. With
/// `P_j = num_j / den_j`, Gram–Schmidt gives
/// `P_k = m_k - Σ_j (A_j / B_j) P_j`, where `A_j = ⟨m_k, num_j⟩` and
/// `B_j = ⟨m_j, num_j⟩`; the `den_j` cancel.
pub fn orthogonal_monomial_basis(n: usize, weight: &dyn Fn(&Partition) -> RatQT) -> MonomialTriangularBasis {
    let idx = PartitionIndex::get(n);
    let size = idx.len();
    let g = monomial_gram_numerators(n, weight);
    let mut nums: Vec<Vec<PolyQT>> = vec![Vec::new(); size];
    let mut dens: Vec<PolyQT> = vec![PolyQT::zero(); size];
    let mut selfdots: Vec<PolyQT> = vec![PolyQT::zero(); size];
    for k in (0..size).rev() {
        let mut terms = Vec::new();
        let mut common = PolyQT::constant(q_int(1));
        for j in k + 1..size {
            let a = dot(&nums[j], &g[k], j);
            if a.is_zero() {
                continue;
            }
            let d = selfdots[j].mul(&dens[j]);
            common = lcm(&common, &d);
            terms.push((j, a, d));
        }
        let mut row = vec![PolyQT::zero(); size];
        row[k] = common.clone();
        for (j, a, d) in terms {
            let f = a.mul(&common.exact_divide(&d).expect("common multiple")).neg();
            for l in j..size {
                if !nums[j][l].is_zero() {
                    row[l] = row[l].add(&nums[j][l].mul(&f));
                }
            }
        }
        let mut den = common;
        if !den.is_constant() {
            let mut gc = den.clone();
            for x in &row {
                if gc.is_constant() {
                    break;
                }
                if !x.is_zero() {
                    gc = gcd_qt(&gc, x);
                }
            }
            if !gc.is_constant() {
                den = den.exact_divide(&gc).expect("gcd divides");
                for x in row.iter_mut() {
                    *x = x.exact_divide(&gc).expect("gcd divides");
                }
            }
        }
        selfdots[k] = dot(&row, &g[k], k);
        nums[k] = row;
        dens[k] = den;
    }
    let rows = nums
        .into_iter()
        .zip(dens)
        .map(|(row, den)| {
            row.into_iter()
                .map(|x| RatQT::new(x, den.clone()).expect("nonzero denominator"))
                .collect()
        })
        .collect();
    MonomialTriangularBasis { index: idx, rows }
}

/// `Π_i 1/(1 - t^{ρ_i})`.
pub fn hl_weight(rho: &Partition) -> RatQT {
    let den = rho
        .parts()
        .iter()
        .fold(PolyT::from_coeffs(&[1]), |acc, &r| acc.mul(&PolyT::one_minus_t_pow(r)));
    RatQT::from_t(&den).inv().expect("nonzero")
}

/// The Hall-Littlewood P basis of degree `n`, memoized.
pub fn hl_basis(n: usize) -> Arc<MonomialTriangularBasis> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MonomialTriangularBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap().get(&n) {
        return b.clone();
    }
    let b = Arc::new(orthogonal_monomial_basis(n, &hl_weight));
    cache.write().unwrap().entry(n).or_insert(b).clone()
}

/// `P_μ(x;t)` in the monomial basis.
pub fn hl_p(mu: &Partition) -> SymFunc<RatQT> {
    hl_basis(mu.size()).element(mu)
}

/// Kostka-Foulkes polynomials `K_{λμ}(t)` for all `λ, μ ⊢ n`.
#[derive(Clone, Debug, PartialEq)]
pub struct KostkaMatrix {
    pub degree: usize,
    pub index: Arc<PartitionIndex>,
    /// `entries[λ][μ]` in canonical order.
    pub entries: Vec<Vec<PolyT>>,
}

impl KostkaMatrix {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> &PolyT {
        let i = self.index.position(lambda).expect("partition of the degree");
        let j = self.index.position(mu).expect("partition of the degree");
        &self.entries[i][j]
    }
}

fn kostka_matrix_linear_solve(n: usize) -> KostkaMatrix {
    let basis = hl_basis(n);
    let idx = basis.index.clone();
    let s2m = transition_from_schur(Basis::Monomial, n);
    let entries = (0..idx.len())
        .map(|i| {
            let s_in_m = SymFunc::from_terms(
                n,
                Basis::Monomial,
                idx.list
                    .iter()
                    .enumerate()
                    .map(|(j, mu)| (mu.clone(), RatQT::constant(s2m.get(i, j).clone()))),
            )
            .expect("degrees match");
            basis
                .expand(&s_in_m)
                .into_iter()
                .map(|c| c.to_poly_t().expect("Kostka-Foulkes polynomials are polynomials"))
                .collect()
        })
        .collect();
    KostkaMatrix {
        degree: n,
        index: idx,
        entries,
    }
}

/// The production Kostka matrix (linear solve), memoized.
pub fn kostka_matrix(n: usize) -> Arc<KostkaMatrix> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.read().unwrap().get(&n) {
        return k.clone();
    }
    let k = Arc::new(kostka_matrix_linear_solve(n));
    cache.write().unwrap().entry(n).or_insert(k).clone()
}

/// The full matrix through a chosen route.
pub fn kostka_matrix_by(n: usize, route: KostkaRoute) -> Result<KostkaMatrix> {
    if route == KostkaRoute::LinearSolve {
        return Ok((*kostka_matrix(n)).clone());
    }
    let idx = PartitionIndex::get(n);
    let entries = idx
        .list
        .iter()
        .map(|l| {
            idx.list
                .iter()
                .map(|m| kostka_poly(l, m, route))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KostkaMatrix {
        degree: n,
        index: idx,
        entries,
    })
}

pub fn kostka_poly(lambda: &Partition, mu: &Partition, route: KostkaRoute) -> Result<PolyT> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    match route {
        KostkaRoute::Charge => kostka_poly_charge(lambda, mu),
        KostkaRoute::LinearSolve => Ok(kostka_matrix(lambda.size()).get(lambda, mu).clone()),
        KostkaRoute::Kostant => kostka_poly_kostant(lambda, mu, lambda.len().max(mu.len())),
    }
}

pub fn kostka_poly_charge(lambda: &Partition, mu: &Partition) -> Result<PolyT> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let mut out = PolyT::zero();
    for tab in enumerate_ssyt(lambda, mu.parts())? {
        out.add_term(charge(&tab)?, &q_int(1));
    }
    Ok(out)
}

/// All permutations of `0..n` with their signs.
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // inversions contributed by placing v now: unused values below v
            let smaller_unused = (0..v).filter(|&u| !used[u]).count();
            used[v] = true;
            prefix.push(v);
            let s = if smaller_unused % 2 == 0 { sign } else { -sign };
            go(prefix, used, s, out);
            prefix.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// `𝒫_t(γ) = Σ t^{Σ c_α}` over ways to write `γ = Σ c_α α` with
/// `α = ε_i - ε_j`, `i < j`, and `c_α ≥ 0`.
fn kostant_partition_t(gamma: &[i64], memo: &mut HashMap<Vec<i64>, PolyT>) -> PolyT {
    if gamma.iter().all(|&g| g == 0) {
        return PolyT::from_coeffs(&[1]);
    }
    if gamma.iter().sum::<i64>() != 0 {
        return PolyT::zero();
    }
    let mut partial = 0;
    for &g in gamma {
        partial += g;
        if partial < 0 {
            return PolyT::zero();
        }
    }
    if let Some(v) = memo.get(gamma) {
        return v.clone();
    }
    // the roots ε_1 - ε_j carry all of γ_1
    let first = gamma[0];
    let rest = &gamma[1..];
    let mut total = PolyT::zero();
    let mut alloc = vec![0i64; rest.len()];
    fn spread(
        k: usize,
        left: i64,
        alloc: &mut Vec<i64>,
        rest: &[i64],
        memo: &mut HashMap<Vec<i64>, PolyT>,
        total: &mut PolyT,
    ) {
        if k + 1 == alloc.len() {
            alloc[k] = left;
            let next: Vec<i64> = rest.iter().zip(alloc.iter()).map(|(g, a)| g + a).collect();
            *total = total.add(&kostant_partition_t(&next, memo));
            return;
        }
        for a in 0..=left {
            alloc[k] = a;
            spread(k + 1, left - a, alloc, rest, memo, total);
        }
    }
    spread(0, first, &mut alloc, rest, memo, &mut total);
    let total = total.mul(&PolyT::t_pow(first as u32));
    memo.insert(gamma.to_vec(), total.clone());
    total
}

/// Lusztig's t-analogue of weight multiplicity for `gl_{n_vars}`.
pub fn kostka_poly_kostant(lambda: &Partition, mu: &Partition, n_vars: usize) -> Result<PolyT> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let needed = lambda.len().max(mu.len());
    if n_vars < needed {
        return Err(Error::TooFewVariables { needed, got: n_vars });
    }
    if n_vars == 0 {
        return Ok(PolyT::from_coeffs(&[1]));
    }
    let pad = |p: &Partition| -> Vec<i64> {
        (1..=n_vars)
            .map(|i| i64::from(p.part(i)) + (n_vars - i) as i64)
            .collect()
    };
    let lr = pad(lambda);
    let mr = pad(mu);
    let mut memo = HashMap::new();
    let mut out = PolyT::zero();
    for (w, sign) in signed_permutations(n_vars) {
        let gamma: Vec<i64> = (0..n_vars).map(|i| lr[w[i]] - mr[i]).collect();
        let v = kostant_partition_t(&gamma, &mut memo);
        if !v.is_zero() {
            out = out.add(&v.scale(&q_int(sign)));
        }
    }
    Ok(out)
}

/// The dual function `H_μ(x;t) = Σ_λ K_{λμ}(t) s_λ`.
pub fn hl_h(mu: &Partition) -> SymFunc<PolyT> {
    let k = kostka_matrix(mu.size());
    let j = k.index.position(mu).expect("partition of the degree");
    let terms = k
        .index
        .list
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), k.entries[i][j].clone()));
    SymFunc::from_terms(mu.size(), Basis::Schur, terms).expect("degrees match")
}

/// `b_μ(t) = Π_i Π_{k=1}^{m_i(μ)} (1 - t^k)`.
pub fn b_mu(mu: &Partition) -> PolyT {
    mu.multiplicities()
        .iter()
        .flat_map(|&m| 1..=m)
        .fold(PolyT::from_coeffs(&[1]), |acc, k| acc.mul(&PolyT::one_minus_t_pow(k)))
}

/// `t^{n(λ')} (1-t)⋯(1-t^n) / Π_{cells} (1 - t^{h})`, exactly divided.
pub fn hook_formula(lambda: &Partition) -> Result<PolyT> {
    let n = lambda.size() as u32;
    let num = (1..=n).fold(PolyT::t_pow(lambda.conjugate().n_stat()), |acc, k| {
        acc.mul(&PolyT::one_minus_t_pow(k))
    });
    let den = lambda.cells().fold(PolyT::from_coeffs(&[1]), |acc, (i, j)| {
        acc.mul(&PolyT::one_minus_t_pow(lambda.hook(i, j)))
    });
    num.exact_divide(&den)
}

/// Lifts a `PolyT`-valued function to `RatQT` coefficients.
pub fn lift_t(f: &SymFunc<PolyT>) -> SymFunc<RatQT> {
    f.map_coeffs(RatQT::from_t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::symfunc::sym_eq;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tp(c: &[i64]) -> PolyT {
        PolyT::from_coeffs(c)
    }

    fn at_t(f: &SymFunc<RatQT>, t: i64) -> SymFunc<Q> {
        f.map_coeffs(|c| c.evaluate(&q_int(0), &q_int(t)).unwrap())
    }

    #[test]
    fn small_p_functions() {
        let p11 = hl_p(&p(&[1, 1]));
        assert!(sym_eq(&p11, &SymFunc::basis_element(Basis::Monomial, &p(&[1, 1]))));
        let p2 = hl_p(&p(&[2]));
        assert_eq!(p2.coeff(&p(&[2])), RatQT::one());
        assert_eq!(p2.coeff(&p(&[1, 1])), RatQT::from_t(&tp(&[1, -1])));
    }

    #[test]
    fn p_specializations() {
        for mu in partitions_of(5) {
            let f = hl_p(&mu);
            let s = SymFunc::<Q>::basis_element(Basis::Schur, &mu);
            let m = SymFunc::<Q>::basis_element(Basis::Monomial, &mu);
            assert!(sym_eq(&at_t(&f, 0), &s), "P({mu};0)");
            assert!(sym_eq(&at_t(&f, 1), &m), "P({mu};1)");
        }
    }

    #[test]
    fn p_orthogonal() {
        let n = 4;
        let ps: Vec<_> = partitions_of(n).iter().map(hl_p).collect();
        for (i, a) in ps.iter().enumerate() {
            for (j, b) in ps.iter().enumerate() {
                let v = a.inner_product_weighted(b, hl_weight).unwrap();
                assert_eq!(v.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn three_routes_agree_small() {
        for n in 1..=5 {
            let a = kostka_matrix_by(n, KostkaRoute::Charge).unwrap();
            let b = kostka_matrix_by(n, KostkaRoute::LinearSolve).unwrap();
            let c = kostka_matrix_by(n, KostkaRoute::Kostant).unwrap();
            assert_eq!(a, b, "charge vs solve at {n}");
            assert_eq!(b, c, "solve vs kostant at {n}");
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(
            kostka_poly(&p(&[2, 1]), &p(&[1, 1, 1]), KostkaRoute::LinearSolve).unwrap(),
            tp(&[0, 1, 1])
        );
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let row = kostka_poly(&Partition::row(n as u32), &mu, KostkaRoute::LinearSolve).unwrap();
                assert_eq!(row, PolyT::t_pow(mu.n_stat()));
            }
            for lam in partitions_of(n) {
                let col = kostka_poly(&lam, &Partition::column(n as u32), KostkaRoute::LinearSolve).unwrap();
                assert_eq!(col, hook_formula(&lam).unwrap());
            }
        }
    }

    #[test]
    fn kostant_errors() {
        assert!(matches!(
            kostka_poly_kostant(&p(&[2, 1]), &p(&[1, 1, 1]), 2),
            Err(Error::TooFewVariables { needed: 3, got: 2 })
        ));
        assert_eq!(
            kostka_poly_kostant(&p(&[2, 1]), &p(&[1, 1, 1]), 4).unwrap(),
            tp(&[0, 1, 1])
        );
        assert!(kostka_poly(&p(&[2]), &p(&[1]), KostkaRoute::Charge).is_err());
    }

    #[test]
    fn dual_functions() {
        let h = hl_h(&p(&[1, 1]));
        assert_eq!(h.coeff(&p(&[1, 1])), tp(&[1]));
        assert_eq!(h.coeff(&p(&[2])), tp(&[0, 1]));
        for mu in partitions_of(4) {
            let h = hl_h(&mu);
            let h0 = h.map_coeffs(|c| c.evaluate(&q_int(0)));
            let h1 = h.map_coeffs(|c| c.evaluate(&q_int(1)));
            assert!(sym_eq(&h0, &SymFunc::basis_element(Basis::Schur, &mu)));
            assert!(sym_eq(&h1, &SymFunc::basis_element(Basis::Complete, &mu)));
            for nu in partitions_of(4) {
                let v = lift_t(&h).inner_product(&hl_p(&nu)).unwrap();
                assert_eq!(v, RatQT::constant(q_int(i64::from(mu == nu))));
            }
        }
    }

    #[test]
    fn signs_of_permutations() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert!(perms.contains(&(vec![1, 0, 2], -1)));
        assert!(perms.contains(&(vec![1, 2, 0], 1)));
    }
}
