//! Homogeneous symmetric functions stored as coefficient maps over one of
//! the classical bases, with exact basis changes through the Schur basis.
//!
//! Transition matrices (all over `Q`, memoized per degree):
//!
//! * `s -> m`: Kostka numbers, i.e. semistandard tableau counts;
//! * `h`, `e`: transposes of the Kostka matrix (`e` through conjugation);
//! * `p -> s`: irreducible characters of the symmetric group, computed by the
//!   Murnaghan–Nakayama rule.
//!
//! The Hall inner product is `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`, with
//! `z_λ = Π i^{m_i} m_i!` the centralizer order (Macdonald, I.2). The
//! orthonormality of the Schur basis under it is checked in the tests, which
//! pins both the characters and the normalization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, strict_partitions_of, Partition, PartitionIndex, StrictPartition};
use crate::rings::linalg::{inverse, Matrix};
use crate::rings::{q_frac, q_int, Coeff, Q};
use crate::tableaux::{count_marked_shifted, count_ssyt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "h")]
    Complete,
    #[serde(rename = "p")]
    Power,
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Complete,
        Basis::Power,
        Basis::Schur,
    ];

    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Complete => 'h',
            Basis::Power => 'p',
            Basis::Schur => 's',
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Complete),
            "p" => Ok(Basis::Power),
            "s" => Ok(Basis::Schur),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A homogeneous symmetric function of fixed degree.
#[derive(Clone, PartialEq)]
pub struct SymFunc<C> {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymFunc<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1 (degree 0).
    pub fn one() -> Self {
        Self::basis_element(Basis::Schur, &Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.coeffs.insert(lambda.clone(), C::one());
        f
    }

    pub fn from_terms(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, C)>) -> Result<Self> {
        let mut f = Self::zero(degree, basis);
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(Error::SizeMismatch(degree, lam.size()));
            }
            f.add_term(lam, &c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.coeffs.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in canonical (reverse lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter().rev()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &C) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(C::zero);
        slot.add_assign(c);
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (lam, c) in other.coeffs {
            out.add_term(lam, &c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(C::negated)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree, self.basis);
        }
        self.map_coeffs(|x| x.times(c))
    }

    pub fn scale_q(&self, q: &Q) -> Self {
        self.map_coeffs(|x| x.scale(q))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.coeffs {
            out.add_term(lam.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymFunc<D>> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.coeffs {
            out.add_term(lam.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// The same element expressed in `target`.
    pub fn to_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let idx = PartitionIndex::get(self.degree);
        let to_s = transition_to_schur(self.basis, self.degree);
        let from_s = transition_from_schur(target, self.degree);
        let mut schur = vec![C::zero(); idx.len()];
        for (lam, c) in &self.coeffs {
            let i = idx.position(lam).expect("key is a partition of the degree");
            for (j, slot) in schur.iter_mut().enumerate() {
                let a = to_s.get(i, j);
                if !num_traits::Zero::is_zero(a) {
                    slot.add_assign(&c.scale(a));
                }
            }
        }
        let mut out = Self::zero(self.degree, target);
        for (j, cj) in schur.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (k, lam) in idx.list.iter().enumerate() {
                let a = from_s.get(j, k);
                if !num_traits::Zero::is_zero(a) {
                    out.add_term(lam.clone(), &cj.scale(a));
                }
            }
        }
        out
    }

    /// Product, computed in the power-sum basis.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.to_basis(Basis::Power);
        let b = other.to_basis(Basis::Power);
        let mut out = Self::zero(self.degree + other.degree, Basis::Power);
        for (l1, c1) in &a.coeffs {
            for (l2, c2) in &b.coeffs {
                let mut parts = l1.parts().to_vec();
                parts.extend_from_slice(l2.parts());
                out.add_term(Partition::from_composition(&parts), &c1.times(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `Σ_λ f_λ g_λ z_λ w(λ)` over power-sum coordinates.
    pub fn inner_product_weighted(&self, other: &Self, weight: impl Fn(&Partition) -> C) -> Result<C> {
        self.check_compatible(other)?;
        let a = self.to_basis(Basis::Power);
        let b = other.to_basis(Basis::Power);
        let mut acc = C::zero();
        for (lam, ca) in &a.coeffs {
            if let Some(cb) = b.coeffs.get(lam) {
                let z = Q::from_integer(lam.z_factor());
                acc.add_assign(&ca.times(cb).scale(&z).times(&weight(lam)));
            }
        }
        Ok(acc)
    }

    /// The Hall inner product, for which the Schur functions are orthonormal.
    pub fn inner_product(&self, other: &Self) -> Result<C> {
        self.inner_product_weighted(other, |_| C::one())
    }

    /// Multiplies each `p_ρ` coefficient by `Π_i factor(ρ_i)`; realizes
    /// `f[X(1-t)]` with factor `1 - t^r` and `f[X/(1-t)]` with `1/(1 - t^r)`.
    pub fn plethysm_scale(&self, factor: impl Fn(u32) -> C) -> Self {
        let p = self.to_basis(Basis::Power);
        let mut out = Self::zero(self.degree, Basis::Power);
        for (rho, c) in &p.coeffs {
            let f = rho.parts().iter().fold(C::one(), |acc, &r| acc.times(&factor(r)));
            out.add_term(rho.clone(), &c.times(&f));
        }
        out
    }

    /// The ring map doubling odd power sums and killing even ones.
    pub fn phi(&self) -> Self {
        let p = self.to_basis(Basis::Power);
        let mut out = Self::zero(self.degree, Basis::Power);
        for (rho, c) in &p.coeffs {
            if rho.parts().iter().all(|r| r % 2 == 1) {
                let two_pow = Q::from_integer(BigInt::from(1u64) << rho.len());
                out.add_term(rho.clone(), &c.scale(&two_pow));
            }
        }
        out
    }

    /// True if every power-sum term has only odd parts.
    pub fn in_odd_power_span(&self) -> bool {
        self.to_basis(Basis::Power)
            .coeffs
            .keys()
            .all(|rho| rho.parts().iter().all(|r| r % 2 == 1))
    }

    /// Human-readable expansion, e.g. `s[3] + (1+t)*s[2,1] - 2*s[1,1,1]`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (lam, c)) in self.terms().enumerate() {
            let mut body = c.render();
            let mut neg = false;
            if !c.is_compound() {
                if let Some(rest) = body.strip_prefix('-') {
                    neg = true;
                    body = rest.to_string();
                }
            } else {
                body = format!("({body})");
            }
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            let elem = format!(
                "{}[{}]",
                self.basis.letter(),
                lam.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            );
            if lam.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&elem);
            } else {
                out.push_str(&format!("{body}*{elem}"));
            }
        }
        out
    }

    /// Serializable form with coefficients rendered as strings.
    pub fn to_record(&self) -> SymFuncRecord {
        SymFuncRecord {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms().map(|(l, c)| (l.clone(), c.render())).collect(),
        }
    }
}

impl<C: Coeff> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc(deg {}: {})", self.degree, self.render())
    }
}

impl<C: Coeff> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `{degree, basis, terms: [[partition, coefficient], …]}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncRecord {
    pub degree: usize,
    pub basis: Basis,
    pub terms: Vec<(Partition, String)>,
}

impl SymFuncRecord {
    /// Reads back a record with rational coefficients.
    pub fn to_rational(&self) -> Result<SymFunc<Q>> {
        let terms = self
            .terms
            .iter()
            .map(|(l, c)| {
                c.parse::<Q>()
                    .map(|q| (l.clone(), q))
                    .map_err(|e| Error::Parse(format!("{c}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SymFunc::from_terms(self.degree, self.basis, terms)
    }
}

/// Equality as elements of Λ, regardless of the stored bases.
pub fn sym_eq<C: Coeff>(a: &SymFunc<C>, b: &SymFunc<C>) -> bool {
    a.degree == b.degree && a.to_basis(Basis::Schur) == b.to_basis(Basis::Schur)
}

// ---------------------------------------------------------------------------
// characters and transition matrices

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    fn go(lambda: &Partition, rho: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
        if rho.is_empty() {
            return i64::from(lambda.is_empty());
        }
        let key = (lambda.clone(), rho.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let r = rho[0];
        let len = lambda.len() as u32;
        let beta: Vec<u32> = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i as u32)
            .collect();
        let mut total = 0;
        for (k, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut nb = beta.clone();
            nb[k] = b - r;
            nb.sort_unstable_by(|x, y| y.cmp(x));
            let parts: Vec<u32> = nb.iter().enumerate().map(|(i, &x)| x + 1 + i as u32 - len).collect();
            let smaller = Partition::from_composition(&parts);
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * go(&smaller, &rho[1..], memo);
        }
        memo.insert(key, total);
        total
    }
    assert_eq!(lambda.size(), rho.size(), "character needs equal sizes");
    static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = memo.read().unwrap().get(&key) {
        return v;
    }
    let v = go(lambda, rho.parts(), &mut HashMap::new());
    memo.write().unwrap().insert(key, v);
    v
}

type MatrixCache = RwLock<HashMap<(Basis, usize, bool), Arc<Matrix<Q>>>>;

fn matrix_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Kostka numbers `K_{λμ}` indexed in canonical order.
pub fn kostka_number_matrix(n: usize) -> Arc<Matrix<Q>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Matrix<Q>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&n) {
        return m.clone();
    }
    let idx = PartitionIndex::get(n);
    let m = Matrix::from_fn(idx.len(), idx.len(), |i, j| {
        let (lam, mu) = (&idx.list[i], &idx.list[j]);
        if lam.dominates(mu).expect("same size") {
            q_int(count_ssyt(lam, mu).expect("same size") as i64)
        } else {
            q_int(0)
        }
    });
    let m = Arc::new(m);
    cache.write().unwrap().entry(n).or_insert(m).clone()
}

/// Row `μ` holds the Schur coefficients of the basis element `X_μ`.
pub fn transition_to_schur(basis: Basis, n: usize) -> Arc<Matrix<Q>> {
    let key = (basis, n, true);
    if let Some(m) = matrix_cache().read().unwrap().get(&key) {
        return m.clone();
    }
    let idx = PartitionIndex::get(n);
    let size = idx.len();
    let m = match basis {
        Basis::Schur => Matrix::identity(size),
        Basis::Monomial => inverse(&kostka_number_matrix(n)).expect("Kostka matrix is unitriangular"),
        Basis::Complete => kostka_number_matrix(n).transpose(),
        Basis::Elementary => {
            let k = kostka_number_matrix(n);
            Matrix::from_fn(size, size, |mu, lam| {
                let conj = idx
                    .position(&idx.list[lam].conjugate())
                    .expect("conjugate has the same size");
                k.get(conj, mu).clone()
            })
        }
        Basis::Power => Matrix::from_fn(size, size, |rho, lam| q_int(character(&idx.list[lam], &idx.list[rho]))),
    };
    let m = Arc::new(m);
    matrix_cache().write().unwrap().entry(key).or_insert(m).clone()
}

/// Row `λ` holds the `basis` coefficients of `s_λ`.
pub fn transition_from_schur(basis: Basis, n: usize) -> Arc<Matrix<Q>> {
    let key = (basis, n, false);
    if let Some(m) = matrix_cache().read().unwrap().get(&key) {
        return m.clone();
    }
    let m = match basis {
        Basis::Monomial => (*kostka_number_matrix(n)).clone(),
        Basis::Power => {
            // s_λ = Σ_ρ χ^λ(ρ) / z_ρ p_ρ
            let idx = PartitionIndex::get(n);
            Matrix::from_fn(idx.len(), idx.len(), |lam, rho| {
                let z = Q::from_integer(idx.list[rho].z_factor());
                q_int(character(&idx.list[lam], &idx.list[rho])) / z
            })
        }
        other => inverse(&transition_to_schur(other, n)).expect("transition matrices are invertible"),
    };
    let m = Arc::new(m);
    matrix_cache().write().unwrap().entry(key).or_insert(m).clone()
}

/// The matrix expressing `from`-basis elements in the `to` basis.
pub fn transition_matrix(from: Basis, to: Basis, n: usize) -> Matrix<Q> {
    transition_to_schur(from, n).mul(&transition_from_schur(to, n))
}

// ---------------------------------------------------------------------------
// generating series, q-functions and Schur Q-functions

/// Degree-`n` part of `exp(Σ_r a_r p_r)` in the power-sum basis:
/// `Σ_{ρ ⊢ n} Π_r a_r^{m_r} / m_r! · p_ρ`.
pub fn exp_power_series<C: Coeff>(n: usize, a: impl Fn(u32) -> C) -> SymFunc<C> {
    let mut out = SymFunc::zero(n, Basis::Power);
    for rho in partitions_of(n) {
        let mut c = C::one();
        for (i, &m) in rho.multiplicities().iter().enumerate() {
            if m == 0 {
                continue;
            }
            let ar = a(i as u32 + 1);
            let fact: BigInt = (1..=m).map(BigInt::from).product();
            c = c.times(&ar.pow(m)).scale(&Q::new(BigInt::from(1), fact));
        }
        out.add_term(rho, &c);
    }
    out
}

/// `h_n` from `H(u) = exp(Σ p_r u^r / r)`.
pub fn complete_h(n: usize) -> SymFunc<Q> {
    exp_power_series(n, |r| q_frac(1, r as i64))
}

/// `q_r`, the degree-`r` coefficient of `Q(u) = exp(2 Σ_{r odd} p_r u^r / r)`.
pub fn q_fun(r: usize) -> SymFunc<Q> {
    exp_power_series(r, |k| if k % 2 == 1 { q_frac(2, k as i64) } else { q_int(0) })
}

/// `q_λ = q_{λ_1} q_{λ_2} ⋯`.
pub fn q_fun_partition(lambda: &Partition) -> SymFunc<Q> {
    lambda
        .parts()
        .iter()
        .fold(SymFunc::one(), |acc, &r| acc.mul(&q_fun(r as usize)))
}

/// `Q_ξ = Σ_μ K⁻_{ξμ} m_μ` from marked shifted tableau counts, in the m basis.
pub fn schur_q(xi: &StrictPartition) -> SymFunc<Q> {
    let n = xi.size();
    let mut f = SymFunc::zero(n, Basis::Monomial);
    for mu in partitions_of(n) {
        if !xi.as_partition().dominates(&mu).expect("same size") {
            continue;
        }
        let k = count_marked_shifted(xi, &mu).expect("same size");
        f.add_term(mu, &q_int(k as i64));
    }
    f
}

/// `Q_ξ` in the Schur basis, memoized.
pub fn schur_q_in_s(xi: &StrictPartition) -> Arc<SymFunc<Q>> {
    static CACHE: OnceLock<RwLock<HashMap<StrictPartition, Arc<SymFunc<Q>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.read().unwrap().get(xi) {
        return f.clone();
    }
    let f = Arc::new(schur_q(xi).to_basis(Basis::Schur));
    cache.write().unwrap().entry(xi.clone()).or_insert(f).clone()
}

/// Coefficients of `f ∈ Γ` in the Schur Q basis `{Q_ξ}`.
///
/// `Q_ξ = 2^{ℓ(ξ)} s_ξ + (dominance-lower terms)`, so the leading Schur term
/// of whatever remains must sit at a strict partition; anything else means
/// `f` is not in Γ.
pub fn to_schur_q_basis<C: Coeff>(f: &SymFunc<C>) -> Result<Vec<(StrictPartition, C)>> {
    let mut rest = f.to_basis(Basis::Schur);
    let mut out = Vec::new();
    for lam in partitions_of(f.degree()) {
        let c = rest.coeff(&lam);
        if c.is_zero() {
            continue;
        }
        let xi = StrictPartition::try_from(lam.clone()).map_err(|_| Error::NotInGamma(lam.parts().to_vec()))?;
        let lead = Q::from_integer(BigInt::from(1u64) << xi.len());
        let coef = c.scale(&(Q::from_integer(BigInt::from(1)) / lead));
        let q_xi = schur_q_in_s(&xi);
        for (mu, b) in q_xi.terms() {
            rest.add_term(mu.clone(), &coef.scale(b).negated());
        }
        out.push((xi, coef));
    }
    Ok(out)
}

/// Reassembles `Σ c_ξ Q_ξ` in the Schur basis.
pub fn from_schur_q_basis<C: Coeff>(n: usize, coeffs: &[(StrictPartition, C)]) -> SymFunc<C> {
    let mut out = SymFunc::zero(n, Basis::Schur);
    for (xi, c) in coeffs {
        for (mu, b) in schur_q_in_s(xi).terms() {
            out.add_term(mu.clone(), &c.scale(b));
        }
    }
    out
}

/// The strict partitions of `n` paired with their Q-functions.
pub fn schur_q_family(n: usize) -> Vec<(StrictPartition, Arc<SymFunc<Q>>)> {
    strict_partitions_of(n)
        .into_iter()
        .map(|xi| {
            let f = schur_q_in_s(&xi);
            (xi, f)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// two-alphabet kernels in the m ⊗ m basis

/// Coefficient matrix (rows λ, columns μ, canonical order) of `m_λ(x) m_μ(y)`
/// in `Π_{i,j} f(x_i y_j)` where `f(z) = Σ_k w(k) z^k` and `w(0) = 1`.
///
/// The coefficient of `x^λ y^μ` is a sum over nonnegative integer matrices
/// with row sums λ and column sums μ of `Π w(a_ij)`.
pub fn kernel_mm(n: usize, w: impl Fn(u32) -> Q) -> Matrix<Q> {
    fn rows_of(row_sums: &[u32], col_left: &mut Vec<u32>, r: usize, acc: Q, w: &dyn Fn(u32) -> Q, total: &mut Q) {
        if r == row_sums.len() {
            if col_left.iter().all(|&c| c == 0) {
                *total += acc;
            }
            return;
        }
        #[allow(clippy::too_many_arguments)]
        fn fill(
            row_sums: &[u32],
            col_left: &mut Vec<u32>,
            r: usize,
            c: usize,
            left: u32,
            acc: Q,
            w: &dyn Fn(u32) -> Q,
            total: &mut Q,
        ) {
            if c == col_left.len() {
                if left == 0 {
                    rows_of(row_sums, col_left, r + 1, acc, w, total);
                }
                return;
            }
            for a in 0..=left.min(col_left[c]) {
                col_left[c] -= a;
                let next = if a == 0 { acc.clone() } else { &acc * w(a) };
                fill(row_sums, col_left, r, c + 1, left - a, next, w, total);
                col_left[c] += a;
            }
        }
        fill(row_sums, col_left, r, 0, row_sums[r], acc, w, total);
    }
    let idx = PartitionIndex::get(n);
    Matrix::from_fn(idx.len(), idx.len(), |i, j| {
        let mut total = q_int(0);
        let mut cols = idx.list[j].parts().to_vec();
        rows_of(idx.list[i].parts(), &mut cols, 0, q_int(1), &w, &mut total);
        total
    })
}

/// `Σ_k f_k(x) g_k(y)` as an m ⊗ m coefficient matrix.
pub fn bilinear_mm<C: Coeff>(n: usize, pairs: &[(SymFunc<C>, SymFunc<C>)]) -> Matrix<C> {
    let idx = PartitionIndex::get(n);
    let mut out = Matrix::<C>::zeros(idx.len(), idx.len());
    for (f, g) in pairs {
        let fm = f.to_basis(Basis::Monomial);
        let gm = g.to_basis(Basis::Monomial);
        for (l, a) in fm.terms() {
            let i = idx.position(l).expect("degree n");
            for (m, b) in gm.terms() {
                let j = idx.position(m).expect("degree n");
                let v = out.get(i, j).plus(&a.times(b));
                out.set(i, j, v);
            }
        }
    }
    out
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

    fn elem(b: Basis, v: &[u32]) -> SymFunc<Q> {
        SymFunc::basis_element(b, &p(v))
    }

    fn sf(b: Basis, n: usize, terms: &[(&[u32], i64)]) -> SymFunc<Q> {
        SymFunc::from_terms(n, b, terms.iter().map(|(l, c)| (p(l), q_int(*c)))).unwrap()
    }

    #[test]
    fn schur_in_monomials() {
        let f = elem(Basis::Schur, &[2, 1]).to_basis(Basis::Monomial);
        assert_eq!(f, sf(Basis::Monomial, 3, &[(&[2, 1], 1), (&[1, 1, 1], 2)]));
        assert_eq!(f.render(), "m[2,1] + 2*m[1,1,1]");
    }

    #[test]
    fn complete_and_power_in_schur() {
        for n in 1..=6 {
            let h = elem(Basis::Complete, &[n]).to_basis(Basis::Schur);
            assert_eq!(h, SymFunc::basis_element(Basis::Schur, &p(&[n])));
            assert!(sym_eq(&complete_h(n as usize), &elem(Basis::Complete, &[n])));
        }
        let p2 = elem(Basis::Power, &[2]).to_basis(Basis::Schur);
        assert_eq!(p2, sf(Basis::Schur, 2, &[(&[2], 1), (&[1, 1], -1)]));
        assert_eq!(p2.render(), "s[2] - s[1,1]");
    }

    #[test]
    fn schur_orthonormal() {
        for n in 1..=6 {
            let all = partitions_of(n);
            for a in &all {
                for b in &all {
                    let v = elem(Basis::Schur, a.parts())
                        .inner_product(&elem(Basis::Schur, b.parts()))
                        .unwrap();
                    assert_eq!(v, q_int(i64::from(a == b)), "{a} {b}");
                }
            }
        }
        let v = elem(Basis::Complete, &[2, 1])
            .inner_product(&elem(Basis::Monomial, &[2, 1]))
            .unwrap();
        assert_eq!(v, q_int(1));
        let v = elem(Basis::Power, &[1, 1])
            .inner_product(&elem(Basis::Power, &[1, 1]))
            .unwrap();
        assert_eq!(v, q_int(2));
        assert!(elem(Basis::Power, &[1])
            .inner_product(&elem(Basis::Power, &[2]))
            .is_err());
    }

    #[test]
    fn h_m_duality() {
        for n in 1..=5 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    let v = elem(Basis::Complete, a.parts())
                        .inner_product(&elem(Basis::Monomial, b.parts()))
                        .unwrap();
                    assert_eq!(v, q_int(i64::from(a == b)));
                }
            }
        }
    }

    #[test]
    fn round_trips_and_consistency() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                for &b in &Basis::ALL {
                    let f = SymFunc::<Q>::basis_element(b, &lam);
                    for &c in &Basis::ALL {
                        assert_eq!(f.to_basis(c).to_basis(b), f, "{b}->{c}->{b} at {lam}");
                    }
                }
            }
            let direct = transition_matrix(Basis::Monomial, Basis::Power, n);
            let via = transition_matrix(Basis::Monomial, Basis::Schur, n).mul(&transition_matrix(
                Basis::Schur,
                Basis::Power,
                n,
            ));
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn e_is_omega_of_h() {
        // e_n = Σ (-1)^{n-ℓ(ρ)} p_ρ / z_ρ
        for n in 1..=6u32 {
            let e = elem(Basis::Elementary, &[n]).to_basis(Basis::Power);
            for (rho, c) in e.terms() {
                let sign = if (n as usize - rho.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                assert_eq!(*c, q_int(sign) / Q::from_integer(rho.z_factor()));
            }
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(elem(Basis::Power, &[1]).phi(), sf(Basis::Power, 1, &[(&[1], 2)]));
        assert!(elem(Basis::Power, &[2]).phi().is_zero());
        for mu in partitions_of(4) {
            let lhs = elem(Basis::Complete, mu.parts()).phi();
            assert!(sym_eq(&lhs, &q_fun_partition(&mu)), "{mu}");
            assert!(lhs.in_odd_power_span());
        }
        let a = elem(Basis::Schur, &[2]).phi();
        let b = elem(Basis::Schur, &[1, 1]).phi();
        assert!(sym_eq(&a, &q_fun(2)) && sym_eq(&b, &q_fun(2)));
    }

    #[test]
    fn q_functions() {
        assert!(sym_eq(&q_fun(0), &SymFunc::one()));
        assert_eq!(q_fun(2), sf(Basis::Power, 2, &[(&[1, 1], 2)]));
        assert_eq!(
            q_fun(2).to_basis(Basis::Schur),
            sf(Basis::Schur, 2, &[(&[2], 2), (&[1, 1], 2)])
        );
        let q3 = SymFunc::from_terms(
            3,
            Basis::Power,
            [(p(&[1, 1, 1]), q_frac(4, 3)), (p(&[3]), q_frac(2, 3))],
        )
        .unwrap();
        assert_eq!(q_fun(3), q3);
    }

    #[test]
    fn schur_q_functions() {
        for r in 1..=6u32 {
            assert!(sym_eq(&schur_q(&sp(&[r])), &q_fun(r as usize)), "Q_({r}) = q_{r}");
        }
        assert_eq!(*schur_q_in_s(&sp(&[2, 1])), sf(Basis::Schur, 3, &[(&[2, 1], 4)]));
        assert_eq!(
            *schur_q_in_s(&sp(&[3])),
            sf(Basis::Schur, 3, &[(&[3], 2), (&[2, 1], 2), (&[1, 1, 1], 2)])
        );
        assert_eq!(schur_q_in_s(&sp(&[2, 1])).render(), "4*s[2,1]");
    }

    #[test]
    fn schur_q_basis_round_trip_and_rejection() {
        let f = q_fun_partition(&p(&[2, 1]));
        let coeffs = to_schur_q_basis(&f).unwrap();
        assert!(sym_eq(&from_schur_q_basis(3, &coeffs), &f));
        assert!(matches!(
            to_schur_q_basis(&elem(Basis::Schur, &[2])),
            Err(Error::NotInGamma(_))
        ));
    }

    #[test]
    fn q_functions_independent() {
        use crate::rings::linalg::rank;
        for n in 1..=8 {
            let fam = schur_q_family(n);
            let idx = PartitionIndex::get(n);
            let m = Matrix::from_fn(fam.len(), idx.len(), |i, j| fam[i].1.coeff(&idx.list[j]));
            assert_eq!(rank(&m), fam.len());
        }
    }

    #[test]
    fn plethysm_scaling() {
        use crate::rings::{Field, PolyT, RatQT};
        let p3: SymFunc<RatQT> = SymFunc::basis_element(Basis::Power, &p(&[3]));
        let scaled = p3.plethysm_scale(|r| RatQT::from_t(&PolyT::one_minus_t_pow(r)));
        assert_eq!(scaled.coeff(&p(&[3])), RatQT::from_t(&PolyT::one_minus_t_pow(3)));
        let h2: SymFunc<RatQT> = SymFunc::basis_element(Basis::Complete, &p(&[2]));
        assert!(sym_eq(&h2.plethysm_scale(|_| RatQT::one()), &h2));
        let there = h2.plethysm_scale(|r| RatQT::from_t(&PolyT::one_minus_t_pow(r)).inv().unwrap());
        let back = there.plethysm_scale(|r| RatQT::from_t(&PolyT::one_minus_t_pow(r)));
        assert!(sym_eq(&back, &h2));
    }

    #[test]
    fn records_round_trip() {
        let f = q_fun(3);
        let rec = f.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"degree":3,"basis":"p","terms":[[[3],"2/3"],[[1,1,1],"4/3"]]}"#
        );
        let back: SymFuncRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_rational().unwrap(), f);
    }

    #[test]
    fn cauchy_kernel_small() {
        // Π 1/(1 - x_i y_j): Σ_λ h_λ(x) m_λ(y), so the m⊗m matrix is h -> m transposed
        let k = kernel_mm(3, |_| q_int(1));
        let pairs: Vec<_> = partitions_of(3)
            .iter()
            .map(|l| (elem(Basis::Schur, l.parts()), elem(Basis::Schur, l.parts())))
            .collect();
        assert_eq!(bilinear_mm(3, &pairs), k);
    }
}
