//! Spin Kostka polynomials and spin Hall-Littlewood functions.
//!
//! `Q_ξ = Σ_λ b_{ξλ} s_λ` with `g_{ξλ} = 2^{-ℓ(ξ)} b_{ξλ} ∈ ℤ_{≥0}`, and
//! `Q_ξ = Σ_μ K⁻_{ξμ}(t) P_μ(x;t)`. Since `s_λ = Σ_μ K_{λμ}(t) P_μ`, the
//! production route is `K⁻_{ξμ}(t) = Σ_λ b_{ξλ} K_{λμ}(t)`; expanding `Q_ξ`
//! directly in the P basis is the check.
//!
//! Stored entries are always the full `K⁻`, never the halved `2^{-ℓ}K⁻`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hall_littlewood::{hl_basis, kostka_matrix, kostka_poly_kostant, signed_permutations};
use crate::partitions::{shifted_diagram, strict_partitions_of, Partition, PartitionIndex, StrictPartition};
use crate::rings::linalg::{inverse, Matrix};
use crate::rings::{q_frac, q_int, q_to_i64, Coeff, PolyT, RatQT, Q};
use crate::symfunc::{exp_power_series, q_fun, schur_q, schur_q_in_s, to_schur_q_basis, Basis, SymFunc};

fn two_pow(e: usize) -> Q {
    Q::from_integer(BigInt::from(1u64) << e)
}

/// `2^{-(ℓ(ξ) - δ(ξ))/2}`; the exponent is always an integer.
pub fn half_spin_factor(xi: &StrictPartition) -> Q {
    let e = (xi.len() - xi.as_partition().delta_stat() as usize) / 2;
    q_int(1) / two_pow(e)
}

/// The Schur coefficients of `Q_ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinBranching {
    pub xi: StrictPartition,
    /// `b_{ξλ}`, nonzero entries only.
    pub b: BTreeMap<Partition, i64>,
    /// `g_{ξλ} = 2^{-ℓ(ξ)} b_{ξλ}`, nonzero entries only.
    pub g: BTreeMap<Partition, i64>,
}

impl SpinBranching {
    pub fn b_at(&self, lambda: &Partition) -> i64 {
        self.b.get(lambda).copied().unwrap_or(0)
    }

    pub fn g_at(&self, lambda: &Partition) -> i64 {
        self.g.get(lambda).copied().unwrap_or(0)
    }
}

/// Expands `Q_ξ` in Schur functions and checks that `g` is a nonnegative
/// integer vector, supported below `ξ` in dominance, with `g_{ξξ} = 1`.
pub fn branching(xi: &StrictPartition) -> Result<SpinBranching> {
    let q = schur_q_in_s(xi);
    let scale = two_pow(xi.len());
    let mut b = BTreeMap::new();
    let mut g = BTreeMap::new();
    for (lam, c) in q.terms() {
        let bi = q_to_i64(c).ok_or_else(|| Error::Consistency(format!("b[{xi},{lam}] = {c} is not an integer")))?;
        let gq = c / &scale;
        let gi = q_to_i64(&gq)
            .filter(|&v| v > 0)
            .ok_or_else(|| Error::Consistency(format!("g[{xi},{lam}] = {gq} is not a positive integer")))?;
        if !xi.as_partition().dominates(lam)? {
            return Err(Error::Consistency(format!(
                "g[{xi},{lam}] nonzero but {xi} does not dominate {lam}"
            )));
        }
        b.insert(lam.clone(), bi);
        g.insert(lam.clone(), gi);
    }
    if g.get(xi.as_partition()) != Some(&1) {
        return Err(Error::Consistency(format!("g[{xi},{xi}] is not 1")));
    }
    Ok(SpinBranching { xi: xi.clone(), b, g })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinRoute {
    ViaB,
    Direct,
}

/// `K⁻_{ξμ}(t)` for strict `ξ ⊢ n` (rows) and all `μ ⊢ n` (columns).
#[derive(Clone, Debug, PartialEq)]
pub struct SpinKostkaMatrix {
    pub degree: usize,
    pub rows: Vec<StrictPartition>,
    pub cols: Arc<PartitionIndex>,
    pub entries: Vec<Vec<PolyT>>,
}

impl SpinKostkaMatrix {
    pub fn get(&self, xi: &StrictPartition, mu: &Partition) -> &PolyT {
        let i = self
            .rows
            .iter()
            .position(|r| r == xi)
            .expect("strict partition of the degree");
        let j = self.cols.position(mu).expect("partition of the degree");
        &self.entries[i][j]
    }

    /// `2^{-ℓ(ξ)} K⁻_{ξμ}(t)`, row by row.
    pub fn halved(&self) -> Vec<Vec<PolyT>> {
        self.rows
            .iter()
            .zip(&self.entries)
            .map(|(xi, row)| {
                let s = q_int(1) / two_pow(xi.len());
                row.iter().map(|p| p.scale(&s)).collect()
            })
            .collect()
    }
}

fn spin_row_via_b(xi: &StrictPartition) -> Result<Vec<PolyT>> {
    let n = xi.size();
    let br = branching(xi)?;
    let k = kostka_matrix(n);
    Ok((0..k.index.len())
        .map(|j| {
            let mut acc = PolyT::zero();
            for (lam, &b) in &br.b {
                let i = k.index.position(lam).expect("degree n");
                acc = acc.add(&k.entries[i][j].scale(&q_int(b)));
            }
            acc
        })
        .collect())
}

fn spin_row_direct(xi: &StrictPartition) -> Result<Vec<PolyT>> {
    let basis = hl_basis(xi.size());
    let q = schur_q(xi).map_coeffs(|c| RatQT::constant(c.clone()));
    basis.expand(&q).into_iter().map(|c| c.to_poly_t()).collect()
}

pub fn spin_kostka(xi: &StrictPartition, mu: &Partition, route: SpinRoute) -> Result<PolyT> {
    if xi.size() != mu.size() {
        return Err(Error::SizeMismatch(xi.size(), mu.size()));
    }
    let j = PartitionIndex::get(mu.size()).position(mu).expect("degree n");
    match route {
        SpinRoute::ViaB => Ok(spin_kostka_matrix(xi.size()).get(xi, mu).clone()),
        SpinRoute::Direct => Ok(spin_row_direct(xi)?.swap_remove(j)),
    }
}

/// The production matrix (via `b`), memoized.
pub fn spin_kostka_matrix(n: usize) -> Arc<SpinKostkaMatrix> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<SpinKostkaMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&n) {
        return m.clone();
    }
    let m = Arc::new(spin_kostka_matrix_by(n, SpinRoute::ViaB).expect("branching invariants hold"));
    cache.write().unwrap().entry(n).or_insert(m).clone()
}

pub fn spin_kostka_matrix_by(n: usize, route: SpinRoute) -> Result<SpinKostkaMatrix> {
    let rows = strict_partitions_of(n);
    let entries = rows
        .iter()
        .map(|xi| match route {
            SpinRoute::ViaB => spin_row_via_b(xi),
            SpinRoute::Direct => spin_row_direct(xi),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpinKostkaMatrix {
        degree: n,
        rows,
        cols: PartitionIndex::get(n),
        entries,
    })
}

/// `t^{n(μ)} Π_{i=1}^{ℓ(μ)} (1 + t^{1-i})`, cleared of negative powers as
/// `t^{n(μ) - ℓ(ℓ-1)/2} Π (1 + t^{i-1})`.
pub fn spin_kostka_row_closed(mu: &Partition) -> Result<PolyT> {
    let l = mu.len() as u32;
    let shift = l * l.saturating_sub(1) / 2;
    let n = mu.n_stat();
    if n < shift {
        return Err(Error::InsufficientShift {
            shift: n,
            needed: shift,
        });
    }
    let prod = (0..l).fold(PolyT::from_coeffs(&[1]), |acc, e| acc.mul(&PolyT::one_plus_t_pow(e)));
    Ok(prod.mul(&PolyT::t_pow(n - shift)))
}

/// `t^{n(ξ)} (1-t)⋯(1-t^n) Π(1 + t^{c}) / Π(1 - t^{h*})` over cells of the
/// shifted diagram, by exact division.
pub fn spin_kostka_col_closed(xi: &StrictPartition) -> Result<PolyT> {
    let diagram = shifted_diagram(xi);
    let n = xi.size() as u32;
    let mut num = PolyT::t_pow(xi.as_partition().n_stat());
    for k in 1..=n {
        num = num.mul(&PolyT::one_minus_t_pow(k));
    }
    let mut den = PolyT::from_coeffs(&[1]);
    for cell in &diagram.cells {
        num = num.mul(&PolyT::one_plus_t_pow(cell.content as u32));
        den = den.mul(&PolyT::one_minus_t_pow(cell.hook));
    }
    num.exact_divide(&den)
}

/// `C⁻_{ξμ}(t) = 2^{-(ℓ-δ)/2} t^{n(μ)} K⁻_{ξμ}(t^{-1})`, required to lie in
/// `ℤ_{≥0}[t]`.
pub fn graded_multiplicity_c(xi: &StrictPartition, mu: &Partition) -> Result<PolyT> {
    let k = spin_kostka(xi, mu, SpinRoute::ViaB)?;
    let c = k.substitute_inverse(mu.n_stat())?.scale(&half_spin_factor(xi));
    if !c.is_nonneg_integral() {
        return Err(Error::Consistency(format!("C[{xi},{mu}] = {c} is not in Z+[t]")));
    }
    Ok(c)
}

/// `2^{ℓ(ξ)} Σ_λ g_{ξλ} m^λ_μ(t)` with Lusztig's t-weight multiplicities for
/// `gl_{n_vars}`; partitions longer than `n_vars` carry no weight space.
pub fn spin_qweight(xi: &StrictPartition, mu: &Partition, n_vars: usize) -> Result<PolyT> {
    if xi.size() != mu.size() {
        return Err(Error::SizeMismatch(xi.size(), mu.size()));
    }
    let needed = xi.len().max(mu.len());
    if n_vars < needed {
        return Err(Error::TooFewVariables { needed, got: n_vars });
    }
    let br = branching(xi)?;
    let mut acc = PolyT::zero();
    for (lam, &g) in &br.g {
        if lam.len() > n_vars {
            continue;
        }
        acc = acc.add(&kostka_poly_kostant(lam, mu, n_vars)?.scale(&q_int(g)));
    }
    Ok(acc.scale(&two_pow(xi.len())))
}

/// `H⁻_μ(x;t) = Σ_ξ 2^{-ℓ(ξ)} K⁻_{ξμ}(t) Q_ξ`, in the Schur basis.
pub fn spin_hl_h(mu: &Partition) -> SymFunc<PolyT> {
    let n = mu.size();
    let k = spin_kostka_matrix(n);
    let j = k.cols.position(mu).expect("degree n");
    let mut out = SymFunc::zero(n, Basis::Schur);
    for (xi, row) in k.rows.iter().zip(&k.entries) {
        let c = row[j].scale(&(q_int(1) / two_pow(xi.len())));
        if c.is_zero() {
            continue;
        }
        for (lam, b) in schur_q_in_s(xi).terms() {
            out.add_term(lam.clone(), &c.scale(b));
        }
    }
    out
}

/// `S_λ = det(q_{λ_i - i + j})`.
pub fn s_det(lambda: &Partition) -> SymFunc<Q> {
    let l = lambda.len();
    let n = lambda.size();
    let mut qs: HashMap<i64, SymFunc<Q>> = HashMap::new();
    let mut out = SymFunc::zero(n, Basis::Power);
    'perm: for (w, sign) in signed_permutations(l) {
        let mut term = SymFunc::one();
        for (i, &wi) in w.iter().enumerate() {
            let idx = i64::from(lambda.parts()[i]) - i as i64 + wi as i64;
            if idx < 0 {
                continue 'perm;
            }
            let q = qs.entry(idx).or_insert_with(|| q_fun(idx as usize));
            term = term.mul(q);
        }
        for (rho, c) in term.terms() {
            out.add_term(rho.clone(), &c.scale(&q_int(sign)));
        }
    }
    out
}

/// `g_r(x;t)`: the degree-`r` part of
/// `Π_i (1 - u x_i)/(1 + u x_i) · (1 + t u x_i)/(1 - t u x_i)`,
/// i.e. `exp(2 Σ_{r odd} (t^r - 1) p_r u^r / r)`.
pub fn g_series(r: usize) -> SymFunc<PolyT> {
    exp_power_series(r, |k| {
        if k % 2 == 1 {
            PolyT::one_minus_t_pow(k).scale(&q_frac(-2, i64::from(k)))
        } else {
            PolyT::zero()
        }
    })
}

/// Coordinates of `f ∈ Γ` in the Q basis, as a dense column over `rows`.
fn q_coordinates<C: Coeff>(f: &SymFunc<C>, rows: &[StrictPartition]) -> Result<Vec<C>> {
    let coeffs = to_schur_q_basis(f)?;
    Ok(rows
        .iter()
        .map(|xi| {
            coeffs
                .iter()
                .find(|(z, _)| z == xi)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(C::zero)
        })
        .collect())
}

/// The pairing on Γ with `⟨Q_ξ, Q_ζ⟩ = 2^{ℓ(ξ)} δ_{ξζ}`.
pub fn gamma_inner_product<C: Coeff>(f: &SymFunc<C>, g: &SymFunc<C>) -> Result<C> {
    if f.degree() != g.degree() {
        return Err(Error::SizeMismatch(f.degree(), g.degree()));
    }
    let rows = strict_partitions_of(f.degree());
    let a = q_coordinates(f, &rows)?;
    let b = q_coordinates(g, &rows)?;
    let mut acc = C::zero();
    for ((xi, x), y) in rows.iter().zip(a).zip(b) {
        acc.add_assign(&x.times(&y).scale(&two_pow(xi.len())));
    }
    Ok(acc)
}

/// `{H⁻_ξ}` and its dual basis `{Ĥ_ξ}` for strict `ξ ⊢ n`, in Q coordinates.
#[derive(Clone, Debug)]
pub struct SpinDualPair {
    pub rows: Vec<StrictPartition>,
    /// Column `ξ` holds `H⁻_ξ` in the Q basis: `2^{-ℓ(ζ)} K⁻_{ζξ}(t)`.
    pub h_minus: Matrix<RatQT>,
    /// Column `ξ` holds `Ĥ_ξ` in the Q basis.
    pub h_hat: Matrix<RatQT>,
}

impl SpinDualPair {
    fn column_function(&self, m: &Matrix<RatQT>, j: usize) -> SymFunc<RatQT> {
        let n = self.rows[0].size();
        let mut out = SymFunc::zero(n, Basis::Schur);
        for (i, zeta) in self.rows.iter().enumerate() {
            let c = m.get(i, j);
            if c.is_zero() {
                continue;
            }
            for (lam, b) in schur_q_in_s(zeta).terms() {
                out.add_term(lam.clone(), &c.scale(b));
            }
        }
        out
    }

    pub fn h_minus_fn(&self, j: usize) -> SymFunc<RatQT> {
        self.column_function(&self.h_minus, j)
    }

    pub fn h_hat_fn(&self, j: usize) -> SymFunc<RatQT> {
        self.column_function(&self.h_hat, j)
    }

    /// `⟨H⁻_ξ, Ĥ_η⟩` for all pairs.
    pub fn pairing(&self) -> Matrix<RatQT> {
        let r = self.rows.len();
        Matrix::from_fn(r, r, |a, b| {
            let mut acc = RatQT::zero();
            for (i, zeta) in self.rows.iter().enumerate() {
                let v = self
                    .h_minus
                    .get(i, a)
                    .times(self.h_hat.get(i, b))
                    .scale(&two_pow(zeta.len()));
                acc.add_assign(&v);
            }
            acc
        })
    }
}

/// Solves `⟨H⁻_ξ, Ĥ_η⟩ = δ_{ξη}`: with `A` the Q-coordinates of `H⁻` and
/// `D = diag(2^{ℓ})`, the Q-coordinates of `Ĥ` are `(Aᵀ D)⁻¹`.
pub fn dual_spin_hl(n: usize) -> Result<SpinDualPair> {
    let k = spin_kostka_matrix(n);
    let rows = k.rows.clone();
    let r = rows.len();
    let col_of = |xi: &StrictPartition| k.cols.position(xi.as_partition()).expect("degree n");
    let a = Matrix::from_fn(r, r, |i, j| {
        let c = k.entries[i][col_of(&rows[j])].scale(&(q_int(1) / two_pow(rows[i].len())));
        RatQT::from_t(&c)
    });
    let atd = Matrix::from_fn(r, r, |i, j| a.get(j, i).scale(&two_pow(rows[j].len())));
    let h_hat = inverse(&atd)?;
    Ok(SpinDualPair {
        rows,
        h_minus: a,
        h_hat,
    })
}

/// Outcome of testing the spin analogue of `P_μ = b_μ(t)^{-1} H_μ((1-t)x;t)`
/// for one strict `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinRelationCheck {
    pub xi: StrictPartition,
    /// `H⁻_ξ((1-t)x;t)` in the power-sum basis.
    pub lhs: Vec<(Partition, String)>,
    /// `Ĥ_ξ(x;t)` in the power-sum basis.
    pub dual: Vec<(Partition, String)>,
    /// The two are proportional over `Q(t)`.
    pub proportional: bool,
    /// The ratio when proportional.
    pub ratio: Option<String>,
    /// The ratio is a polynomial in `t`.
    pub polynomial_multiple: bool,
}

/// For every strict `ξ ⊢ n`, compares `H⁻_ξ((1-t)x;t)` with `Ĥ_ξ(x;t)`.
pub fn spin_relation_checks(n: usize) -> Result<Vec<SpinRelationCheck>> {
    let pair = dual_spin_hl(n)?;
    let mut out = Vec::new();
    for (j, xi) in pair.rows.iter().enumerate() {
        let factor = |r: u32| RatQT::from_t(&PolyT::one_minus_t_pow(r));
        let lhs = pair.h_minus_fn(j).plethysm_scale(factor);
        let dual = pair.h_hat_fn(j).to_basis(Basis::Power);
        let ratio = proportionality(&lhs, &dual);
        let polynomial_multiple = ratio.as_ref().is_some_and(|r| r.to_poly_t().is_ok());
        out.push(SpinRelationCheck {
            xi: xi.clone(),
            lhs: lhs.to_record().terms,
            dual: dual.to_record().terms,
            proportional: ratio.is_some(),
            ratio: ratio.map(|r| r.render()),
            polynomial_multiple,
        });
    }
    Ok(out)
}

/// `Some(c)` with `a = c·b` when `b ≠ 0` and such a scalar exists.
fn proportionality(a: &SymFunc<RatQT>, b: &SymFunc<RatQT>) -> Option<RatQT> {
    let a = a.to_basis(Basis::Power);
    let b = b.to_basis(Basis::Power);
    let (rho, lead) = b.terms().next()?;
    let c = crate::rings::Field::div(&a.coeff(rho), lead).ok()?;
    (a == b.scale(&c)).then_some(c)
}

/// One entry of the palindromicity scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryEntry {
    pub xi: StrictPartition,
    pub mu: Partition,
    pub polynomial: String,
    /// `"symmetric"`, `"not symmetric"` or `"zero"`.
    pub verdict: String,
    /// The exponent `m` with `K⁻(t) = t^m K⁻(1/t)`, when it exists.
    pub m: Option<u32>,
}

/// Tests `K⁻_{ξμ}(t) = t^m K⁻_{ξμ}(t^{-1})` for every pair of degree `n`.
pub fn symmetry_scan(n: usize) -> Vec<SymmetryEntry> {
    let k = spin_kostka_matrix(n);
    let mut out = Vec::new();
    for (xi, row) in k.rows.iter().zip(&k.entries) {
        for (mu, poly) in k.cols.list.iter().zip(row) {
            let (verdict, m) = match (poly.low_degree(), poly.degree()) {
                (Some(lo), Some(hi)) if poly.is_palindromic() => ("symmetric", Some(lo + hi)),
                (Some(_), Some(_)) => ("not symmetric", None),
                _ => ("zero", None),
            };
            out.push(SymmetryEntry {
                xi: xi.clone(),
                mu: mu.clone(),
                polynomial: poly.to_compact_string(),
                verdict: verdict.to_string(),
                m,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::symfunc::{q_fun_partition, sym_eq};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn tp(c: &[i64]) -> PolyT {
        PolyT::from_coeffs(c)
    }

    #[test]
    fn branching_examples() {
        let b = branching(&sp(&[2, 1])).unwrap();
        assert_eq!(b.b, BTreeMap::from([(p(&[2, 1]), 4)]));
        let b = branching(&sp(&[3])).unwrap();
        assert_eq!(b.b, BTreeMap::from([(p(&[3]), 2), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 2)]));
        for n in 1..=7u32 {
            assert_eq!(branching(&sp(&[n])).unwrap().g_at(&p(&[n])), 1);
        }
    }

    #[test]
    fn table_entries() {
        let k = spin_kostka(&sp(&[2, 1]), &p(&[1, 1, 1]), SpinRoute::ViaB).unwrap();
        assert_eq!(k, tp(&[0, 4, 4]));
        assert_eq!(
            spin_kostka(&sp(&[4]), &p(&[2, 2]), SpinRoute::ViaB).unwrap(),
            tp(&[0, 2, 2])
        );
        assert_eq!(
            spin_kostka(&sp(&[3, 1]), &p(&[2, 1, 1]), SpinRoute::Direct).unwrap(),
            tp(&[4, 8, 4])
        );
        assert!(spin_kostka(&sp(&[3]), &p(&[2]), SpinRoute::ViaB).is_err());
    }

    #[test]
    fn routes_agree() {
        for n in 1..=5 {
            assert_eq!(
                spin_kostka_matrix_by(n, SpinRoute::Direct).unwrap(),
                *spin_kostka_matrix(n)
            );
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(spin_kostka_row_closed(&p(&[2, 1])).unwrap(), tp(&[2, 2]));
        assert_eq!(spin_kostka_row_closed(&p(&[5])).unwrap(), tp(&[2]));
        assert_eq!(spin_kostka_row_closed(&p(&[1, 1])).unwrap(), tp(&[2, 2]));
        assert_eq!(spin_kostka_col_closed(&sp(&[2, 1])).unwrap(), tp(&[0, 4, 4]));
        assert_eq!(spin_kostka_col_closed(&sp(&[3])).unwrap(), tp(&[2, 2, 2, 2]));
        assert_eq!(spin_kostka_col_closed(&sp(&[4])).unwrap(), tp(&[2, 2, 2, 4, 2, 2, 2]));
    }

    #[test]
    fn graded_multiplicities() {
        assert_eq!(
            graded_multiplicity_c(&sp(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            tp(&[0, 2, 2])
        );
        assert_eq!(graded_multiplicity_c(&sp(&[4]), &p(&[4])).unwrap(), tp(&[2]));
        assert_eq!(graded_multiplicity_c(&sp(&[3, 1]), &p(&[3, 1])).unwrap(), tp(&[0, 2]));
    }

    #[test]
    fn qweights() {
        assert_eq!(spin_qweight(&sp(&[2, 1]), &p(&[1, 1, 1]), 3).unwrap(), tp(&[0, 4, 4]));
        assert_eq!(spin_qweight(&sp(&[3]), &p(&[3]), 1).unwrap(), tp(&[2]));
        assert_eq!(spin_qweight(&sp(&[3, 1]), &p(&[3, 1]), 2).unwrap(), tp(&[4]));
        assert!(matches!(
            spin_qweight(&sp(&[2, 1]), &p(&[1, 1, 1]), 2),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn spin_hl_specializations() {
        for mu in partitions_of(4) {
            let h = spin_hl_h(&mu);
            let at = |t: i64| h.map_coeffs(|c| c.evaluate(&q_int(t)));
            assert!(sym_eq(&at(1), &q_fun_partition(&mu)), "t=1 at {mu}");
            assert!(sym_eq(&at(0), &s_det(&mu)), "t=0 at {mu}");
            let expected = match StrictPartition::try_from(mu.clone()) {
                Ok(xi) => schur_q(&xi),
                Err(_) => SymFunc::zero(4, Basis::Schur),
            };
            assert!(sym_eq(&at(-1), &expected), "t=-1 at {mu}");
        }
    }

    #[test]
    fn s_determinants() {
        assert!(sym_eq(&s_det(&p(&[1])), &q_fun(1)));
        assert!(sym_eq(&s_det(&p(&[1, 1])), &q_fun(2)));
        let phi_s = SymFunc::<Q>::basis_element(Basis::Schur, &p(&[2, 1])).phi();
        assert!(sym_eq(&s_det(&p(&[2, 1])), &phi_s));
    }

    #[test]
    fn g_functions() {
        assert!(sym_eq(&g_series(0), &SymFunc::one()));
        let g1 = SymFunc::from_terms(1, Basis::Power, [(p(&[1]), tp(&[-2, 2]))]).unwrap();
        assert_eq!(g_series(1), g1);
        for n in 1..=5 {
            let lhs = q_fun(n)
                .map_coeffs(|c| PolyT::constant(c.clone()))
                .plethysm_scale(PolyT::one_minus_t_pow);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert!(sym_eq(&lhs, &g_series(n).scale(&tp(&[sign]))));
            let h = spin_hl_h(&Partition::row(n as u32)).plethysm_scale(PolyT::one_minus_t_pow);
            assert!(sym_eq(&h, &lhs));
        }
    }

    #[test]
    fn dual_basis_is_dual() {
        for n in 1..=5 {
            let pair = dual_spin_hl(n).unwrap();
            assert!(pair.pairing().is_identity(), "n = {n}");
            for j in 0..pair.rows.len() {
                let a = pair.h_minus_fn(j);
                let b = pair.h_hat_fn(j);
                assert_eq!(gamma_inner_product(&a, &b).unwrap(), RatQT::one());
            }
        }
        let pair = dual_spin_hl(1).unwrap();
        assert_eq!(pair.h_hat.get(0, 0), &RatQT::constant(q_frac(1, 2)));
    }

    #[test]
    fn symmetry_entries() {
        let scan = symmetry_scan(3);
        assert_eq!(scan.len(), 6);
        let e = scan
            .iter()
            .find(|e| e.xi == sp(&[2, 1]) && e.mu == p(&[1, 1, 1]))
            .unwrap();
        assert_eq!((e.verdict.as_str(), e.m), ("symmetric", Some(3)));
        assert!(scan.iter().any(|e| e.verdict == "zero"));
    }
}
