//! Macdonald polynomials, q,t-Kostka polynomials and their spin versions.
//!
//! `P_λ(x;q,t)` comes from the same Gram–Schmidt as the Hall-Littlewood
//! basis with weight `Π_i (1 - q^{λ_i})/(1 - t^{λ_i})`. The integral form is
//! `J_μ = c_μ(q,t) P_μ` with `c_μ = Π_{s ∈ μ} (1 - q^{a(s)} t^{l(s)+1})`, and
//! `H_μ(x;q,t) = J_μ[X/(1-t)]`, whose Schur coefficients are `K_{λμ}(q,t)`.
//! Both integrality and the reduction `K_{λμ}(0,t) = K_{λμ}(t)` are checked
//! by the tests, which pins the normalization.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::hall_littlewood::{orthogonal_monomial_basis, MonomialTriangularBasis};
use crate::partitions::{strict_partitions_of, Partition, PartitionIndex, StrictPartition};
use crate::rings::{q_int, Coeff, Field, PolyQT, PolyT, QtMonomial, RatQT, Q};
use crate::spin::{branching, half_spin_factor};
use crate::symfunc::{to_schur_q_basis, Basis, SymFunc};

fn one_minus(q: u32, t: u32) -> PolyQT {
    PolyQT::from_terms([(QtMonomial::new(0, 0), q_int(1)), (QtMonomial::new(q, t), q_int(-1))])
}

/// `Π_i (1 - q^{ρ_i})/(1 - t^{ρ_i})`.
pub fn macdonald_weight(rho: &Partition) -> RatQT {
    let (num, den) = rho.parts().iter().fold(
        (PolyQT::constant(q_int(1)), PolyQT::constant(q_int(1))),
        |(n, d), &r| (n.mul(&one_minus(r, 0)), d.mul(&one_minus(0, r))),
    );
    RatQT::new(num, den).expect("nonzero denominator")
}

/// The Macdonald P basis of degree `n`, memoized.
pub fn macdonald_basis(n: usize) -> Arc<MonomialTriangularBasis> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MonomialTriangularBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap().get(&n) {
        return b.clone();
    }
    let b = Arc::new(orthogonal_monomial_basis(n, &macdonald_weight));
    cache.write().unwrap().entry(n).or_insert(b).clone()
}

pub fn macdonald_p(lambda: &Partition) -> SymFunc<RatQT> {
    macdonald_basis(lambda.size()).element(lambda)
}

/// `c_μ(q,t) = Π_{s ∈ μ} (1 - q^{a(s)} t^{l(s)+1})`.
pub fn j_normalization(mu: &Partition) -> PolyQT {
    let conj = mu.conjugate();
    mu.cells().fold(PolyQT::constant(q_int(1)), |acc, (i, j)| {
        let arm = mu.part(i) - j as u32;
        let leg = conj.part(j) - i as u32;
        acc.mul(&one_minus(arm, leg + 1))
    })
}

pub fn macdonald_j(mu: &Partition) -> SymFunc<RatQT> {
    macdonald_p(mu).scale(&RatQT::from_poly(j_normalization(mu)))
}

/// `H_μ(x;q,t) = J_μ[X/(1-t)]` in the Schur basis.
pub fn macdonald_h(mu: &Partition) -> SymFunc<RatQT> {
    let factor = |r: u32| RatQT::from_poly(one_minus(0, r)).inv().expect("nonzero");
    macdonald_j(mu).plethysm_scale(factor).to_basis(Basis::Schur)
}

/// `K_{λμ}(q,t)` for all `λ, μ ⊢ n`.
#[derive(Clone, Debug, PartialEq)]
pub struct QtKostkaMatrix {
    pub degree: usize,
    pub rows: Vec<Partition>,
    pub cols: Arc<PartitionIndex>,
    pub entries: Vec<Vec<PolyQT>>,
}

impl QtKostkaMatrix {
    pub fn get(&self, row: &Partition, mu: &Partition) -> &PolyQT {
        let i = self.rows.iter().position(|r| r == row).expect("row of the matrix");
        let j = self.cols.position(mu).expect("partition of the degree");
        &self.entries[i][j]
    }

    /// Sets `q = 0`.
    pub fn at_q_zero(&self) -> Vec<Vec<PolyT>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.specialize_q(&q_int(0))).collect())
            .collect()
    }
}

fn qt_kostka_matrix_uncached(n: usize) -> Result<QtKostkaMatrix> {
    let idx = PartitionIndex::get(n);
    let mut entries = vec![Vec::with_capacity(idx.len()); idx.len()];
    for mu in &idx.list {
        let h = macdonald_h(mu);
        for (i, lam) in idx.list.iter().enumerate() {
            let c = h.coeff(lam);
            entries[i].push(
                c.to_poly()
                    .map_err(|_| Error::NotPolynomial(format!("K[{lam},{mu}](q,t) = {}", c.render())))?,
            );
        }
    }
    Ok(QtKostkaMatrix {
        degree: n,
        rows: idx.list.clone(),
        cols: idx,
        entries,
    })
}

/// The classical q,t-Kostka matrix, memoized.
pub fn qt_kostka_matrix(n: usize) -> Result<Arc<QtKostkaMatrix>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<QtKostkaMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&n) {
        return Ok(m.clone());
    }
    let m = Arc::new(qt_kostka_matrix_uncached(n)?);
    Ok(cache.write().unwrap().entry(n).or_insert(m).clone())
}

pub fn qt_kostka(lambda: &Partition, mu: &Partition) -> Result<PolyQT> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(qt_kostka_matrix(mu.size())?.get(lambda, mu).clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinQtRoute {
    ViaB,
    ViaPhi,
}

fn spin_qt_row_via_b(xi: &StrictPartition) -> Result<Vec<PolyQT>> {
    let k = qt_kostka_matrix(xi.size())?;
    let br = branching(xi)?;
    Ok((0..k.cols.len())
        .map(|j| {
            br.b.iter().fold(PolyQT::zero(), |acc, (lam, &b)| {
                let i = k.cols.position(lam).expect("degree n");
                acc.add(&k.entries[i][j].scale(&q_int(b)))
            })
        })
        .collect())
}

/// `K⁻_{ξμ}(q,t)` for every strict `ξ ⊢ n`, from `φ(H_μ)` expanded in
/// `2^{-ℓ(ξ)} Q_ξ`.
fn spin_qt_matrix_via_phi(n: usize) -> Result<Vec<Vec<PolyQT>>> {
    let rows = strict_partitions_of(n);
    let idx = PartitionIndex::get(n);
    let mut entries = vec![Vec::with_capacity(idx.len()); rows.len()];
    for mu in &idx.list {
        let coeffs = to_schur_q_basis(&macdonald_h(mu).phi())?;
        for (i, xi) in rows.iter().enumerate() {
            let c = coeffs
                .iter()
                .find(|(z, _)| z == xi)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(RatQT::zero);
            let full = c.scale(&Q::from_integer(num_bigint::BigInt::from(1u64) << xi.len()));
            entries[i].push(full.to_poly()?);
        }
    }
    Ok(entries)
}

/// The spin q,t-Kostka matrix through a chosen route.
pub fn spin_qt_kostka_matrix(n: usize, route: SpinQtRoute) -> Result<QtKostkaMatrix> {
    let rows = strict_partitions_of(n);
    let entries = match route {
        SpinQtRoute::ViaB => rows.iter().map(spin_qt_row_via_b).collect::<Result<Vec<_>>>()?,
        SpinQtRoute::ViaPhi => spin_qt_matrix_via_phi(n)?,
    };
    Ok(QtKostkaMatrix {
        degree: n,
        rows: rows.into_iter().map(|x| x.as_partition().clone()).collect(),
        cols: PartitionIndex::get(n),
        entries,
    })
}

pub fn spin_qt_kostka(xi: &StrictPartition, mu: &Partition, route: SpinQtRoute) -> Result<PolyQT> {
    if xi.size() != mu.size() {
        return Err(Error::SizeMismatch(xi.size(), mu.size()));
    }
    Ok(spin_qt_kostka_matrix(mu.size(), route)?
        .get(xi.as_partition(), mu)
        .clone())
}

/// `C⁻_{ξμ}(q,t) = 2^{-(ℓ-δ)/2} K⁻_{ξμ}(q,t^{-1}) t^{n(μ)}`, required to lie
/// in `ℤ_{≥0}[q,t]`.
pub fn c_qt(xi: &StrictPartition, mu: &Partition) -> Result<PolyQT> {
    let k = spin_qt_kostka(xi, mu, SpinQtRoute::ViaB)?;
    let c = k.substitute_t_inverse(mu.n_stat())?.scale(&half_spin_factor(xi));
    if !c.is_nonneg_integral() {
        return Err(Error::Consistency(format!("C[{xi},{mu}](q,t) = {c} is not in Z+[q,t]")));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall_littlewood::{hl_p, kostka_matrix};
    use crate::partitions::partitions_of;
    use crate::spin::spin_kostka_matrix;
    use crate::symfunc::sym_eq;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn qt(terms: &[(u32, u32, i64)]) -> PolyQT {
        PolyQT::from_terms(terms.iter().map(|&(a, b, c)| (QtMonomial::new(a, b), q_int(c))))
    }

    #[test]
    fn p_specializations() {
        for lam in partitions_of(4) {
            let f = macdonald_p(&lam);
            let at_q_eq_t = f.try_map_coeffs(|c| c.q_to_t()).unwrap();
            let s = SymFunc::<RatQT>::basis_element(Basis::Schur, &lam);
            assert!(sym_eq(&at_q_eq_t, &s), "q=t at {lam}");
            let at_q0 = f.try_map_coeffs(|c| c.specialize_q(&q_int(0))).unwrap();
            assert!(sym_eq(&at_q0, &hl_p(&lam)), "q=0 at {lam}");
        }
        let e4 = SymFunc::<RatQT>::basis_element(Basis::Elementary, &p(&[4]));
        assert!(sym_eq(&macdonald_p(&Partition::column(4)), &e4));
    }

    #[test]
    fn degree_two_table() {
        let k = qt_kostka_matrix(2).unwrap();
        assert_eq!(k.get(&p(&[2]), &p(&[2])), &qt(&[(0, 0, 1)]));
        assert_eq!(k.get(&p(&[1, 1]), &p(&[2])), &qt(&[(1, 0, 1)]));
        assert_eq!(k.get(&p(&[2]), &p(&[1, 1])), &qt(&[(0, 1, 1)]));
        assert_eq!(k.get(&p(&[1, 1]), &p(&[1, 1])), &qt(&[(0, 0, 1)]));
    }

    #[test]
    fn reductions_and_positivity() {
        for n in 1..=4 {
            let k = qt_kostka_matrix(n).unwrap();
            let classical = kostka_matrix(n);
            assert_eq!(k.at_q_zero(), classical.entries);
            for (i, row) in k.entries.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    assert!(e.is_nonneg_integral());
                    let at00 = e.evaluate(&q_int(0), &q_int(0));
                    assert_eq!(at00, q_int(i64::from(i == j)));
                }
            }
        }
    }

    #[test]
    fn spin_examples_and_routes() {
        let a = spin_qt_kostka(&sp(&[2]), &p(&[2]), SpinQtRoute::ViaB).unwrap();
        assert_eq!(a, qt(&[(0, 0, 2), (1, 0, 2)]));
        let b = spin_qt_kostka(&sp(&[2]), &p(&[1, 1]), SpinQtRoute::ViaPhi).unwrap();
        assert_eq!(b, qt(&[(0, 0, 2), (0, 1, 2)]));
        for n in 1..=4 {
            let x = spin_qt_kostka_matrix(n, SpinQtRoute::ViaB).unwrap();
            let y = spin_qt_kostka_matrix(n, SpinQtRoute::ViaPhi).unwrap();
            assert_eq!(x, y);
            assert_eq!(x.at_q_zero(), spin_kostka_matrix(n).entries);
        }
    }

    #[test]
    fn doubly_graded_multiplicities() {
        let a = c_qt(&sp(&[2]), &p(&[2])).unwrap();
        let b = c_qt(&sp(&[2]), &p(&[1, 1])).unwrap();
        assert_eq!(a.evaluate(&q_int(1), &q_int(1)), b.evaluate(&q_int(1), &q_int(1)));
        for n in 1..=4 {
            for xi in strict_partitions_of(n) {
                for mu in partitions_of(n) {
                    let c = c_qt(&xi, &mu).unwrap();
                    let g = crate::spin::graded_multiplicity_c(&xi, &mu).unwrap();
                    assert_eq!(c.specialize_q(&q_int(0)), g);
                }
            }
        }
    }
}
