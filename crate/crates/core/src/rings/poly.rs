//! Sparse polynomials with rational coefficients.
//!
//! [`Poly`] is generic over its monomial type. `Poly<u32>` is a polynomial
//! in one variable `t`; `Poly<QtMonomial>` is a polynomial in `q` and `t`.
//! Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_traits::{One, Signed, Zero};

use super::{q_int, q_is_nonneg_integer, Q};
use crate::error::{Error, Result};

pub trait Monomial: Copy + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    fn unit() -> Self;
    fn mul(self, other: Self) -> Self;
    fn checked_div(self, other: Self) -> Option<Self>;
    fn write(self, f: &mut dyn fmt::Write) -> fmt::Result;
}

impl Monomial for u32 {
    fn unit() -> Self {
        0
    }
    fn mul(self, other: Self) -> Self {
        self + other
    }
    fn checked_div(self, other: Self) -> Option<Self> {
        self.checked_sub(other)
    }
    fn write(self, f: &mut dyn fmt::Write) -> fmt::Result {
        match self {
            0 => Ok(()),
            1 => write!(f, "t"),
            e => write!(f, "t^{e}"),
        }
    }
}

/// `q^q t^t`, ordered by total degree and then by decreasing power of `q`
/// (graded lex with `q > t`), so `1 < q < t < q^2 < q*t < t^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct QtMonomial {
    pub q: u32,
    pub t: u32,
}

impl QtMonomial {
    pub fn new(q: u32, t: u32) -> Self {
        QtMonomial { q, t }
    }
}

impl Ord for QtMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.q + self.t).cmp(&(other.q + other.t)).then(other.q.cmp(&self.q))
    }
}

impl PartialOrd for QtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for QtMonomial {
    fn unit() -> Self {
        QtMonomial::default()
    }
    fn mul(self, other: Self) -> Self {
        QtMonomial {
            q: self.q + other.q,
            t: self.t + other.t,
        }
    }
    fn checked_div(self, other: Self) -> Option<Self> {
        Some(QtMonomial {
            q: self.q.checked_sub(other.q)?,
            t: self.t.checked_sub(other.t)?,
        })
    }
    fn write(self, f: &mut dyn fmt::Write) -> fmt::Result {
        let var = |f: &mut dyn fmt::Write, name: &str, e: u32| match e {
            0 => Ok(()),
            1 => write!(f, "{name}"),
            e => write!(f, "{name}^{e}"),
        };
        var(f, "q", self.q)?;
        if self.q > 0 && self.t > 0 {
            write!(f, "*")?;
        }
        var(f, "t", self.t)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, Q>,
}

pub type PolyT = Poly<u32>;
pub type PolyQT = Poly<QtMonomial>;

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(M::unit(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(q_int(c))
    }

    pub fn monomial(m: M, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, Q)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: M) -> Q {
        self.terms.get(&m).cloned().unwrap_or_else(Q::zero)
    }

    /// Largest monomial and its coefficient.
    pub fn leading(&self) -> Option<(M, &Q)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Smallest monomial and its coefficient.
    pub fn trailing(&self) -> Option<(M, &Q)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&M::unit()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn add_term(&mut self, m: M, c: &Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(*m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: M) -> Self {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Q::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient of an exact division; fails if `divisor` does not divide `self`.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        let (lm, lc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading() {
            let not_divisible = || Error::NotDivisible(format!("{divisor:?}"), format!("{self:?}"));
            let m = rm.checked_div(lm).ok_or_else(not_divisible)?;
            let c = rc / lc;
            rem = rem.sub(&divisor.mul_monomial(m).scale(&c));
            quot.add_term(m, &c);
        }
        Ok(quot)
    }

    /// Coefficients are all integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Coefficients are all non-negative integers.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(q_is_nonneg_integer)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Q) -> Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    fn write_with(&self, f: &mut dyn fmt::Write, spaced: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                let sign = if neg { '-' } else { '+' };
                if spaced {
                    write!(f, " {sign} ")?;
                } else {
                    write!(f, "{sign}")?;
                }
            }
            if *m == M::unit() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write(f)?;
            }
        }
        Ok(())
    }

    /// Rendering without spaces, as used in emitted tables: `1+t+2*t^3`.
    pub fn to_compact_string(&self) -> String {
        let mut s = String::new();
        self.write_with(&mut s, false).expect("writing to a String");
        s
    }
}

impl<M: Monomial> fmt::Display for Poly<M> {
    /// Ascending monomial order, `c0 + c1*t + c2*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, true)
    }
}

impl<M: Monomial> fmt::Debug for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<M: Monomial> super::Coeff for Poly<M> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(<Q as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn from_rational(q: &Q) -> Self {
        Poly::constant(q.clone())
    }
    fn scale(&self, q: &Q) -> Self {
        Poly::scale(self, q)
    }
    fn render(&self) -> String {
        self.to_compact_string()
    }
    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

fn q_pow(x: &Q, e: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl PolyT {
    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, Q::one())
    }

    pub fn t_pow(e: u32) -> Self {
        Self::monomial(e, Q::one())
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u32) -> Self {
        Self::from_terms([(0, Q::one()), (k, -Q::one())])
    }

    /// `1 + t^k`.
    pub fn one_plus_t_pow(k: u32) -> Self {
        Self::from_terms([(0, Q::one()), (k, Q::one())])
    }

    /// Builds from integer coefficients listed by ascending degree.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as u32, q_int(c))))
    }

    pub fn degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m)
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.trailing().map(|(m, _)| m)
    }

    pub fn evaluate(&self, x: &Q) -> Q {
        self.terms().map(|(e, c)| c * q_pow(x, *e)).sum()
    }

    /// `t^shift · f(t^{-1})`; the shift must be at least the degree.
    pub fn substitute_inverse(&self, shift: u32) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > shift {
                return Err(Error::InsufficientShift { shift, needed: d });
            }
        }
        Ok(Self::from_terms(self.terms().map(|(e, c)| (shift - e, c.clone()))))
    }

    /// Division with remainder by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let (dd, dc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rd, rc)) = rem.leading() {
            if rd < dd {
                break;
            }
            let c = rc / dc;
            rem = rem.sub(&divisor.mul_monomial(rd - dd).scale(&c));
            quot.add_term(rd - dd, &c);
        }
        Ok((quot, rem))
    }

    /// Embeds as a polynomial in `t` inside `Q[q,t]`.
    pub fn to_qt(&self) -> PolyQT {
        PolyQT::from_terms(self.terms().map(|(e, c)| (QtMonomial::new(0, *e), c.clone())))
    }

    /// Embeds with the variable renamed to `q`.
    pub fn to_qt_as_q(&self) -> PolyQT {
        PolyQT::from_terms(self.terms().map(|(e, c)| (QtMonomial::new(*e, 0), c.clone())))
    }

    /// Integer coefficient vector by ascending degree; `None` if a coefficient
    /// is not an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        let Some(d) = self.degree() else {
            return Some(Vec::new());
        };
        (0..=d).map(|e| super::q_to_i64(&self.coeff(e))).collect()
    }

    /// True iff `f(t) = t^m f(1/t)` for some integer `m`.
    pub fn is_palindromic(&self) -> bool {
        match (self.low_degree(), self.degree()) {
            (Some(lo), Some(hi)) => self.terms().all(|(e, c)| self.coeff(lo + hi - e) == *c),
            _ => true,
        }
    }
}

impl PolyQT {
    pub fn q() -> Self {
        Self::monomial(QtMonomial::new(1, 0), Q::one())
    }

    pub fn t() -> Self {
        Self::monomial(QtMonomial::new(0, 1), Q::one())
    }

    pub fn qt_pow(q: u32, t: u32) -> Self {
        Self::monomial(QtMonomial::new(q, t), Q::one())
    }

    pub fn evaluate(&self, q: &Q, t: &Q) -> Q {
        self.terms().map(|(m, c)| c * q_pow(q, m.q) * q_pow(t, m.t)).sum()
    }

    pub fn is_q_free(&self) -> bool {
        self.terms().all(|(m, _)| m.q == 0)
    }

    pub fn is_t_free(&self) -> bool {
        self.terms().all(|(m, _)| m.t == 0)
    }

    pub fn degree_q(&self) -> u32 {
        self.terms().map(|(m, _)| m.q).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms().map(|(m, _)| m.t).max().unwrap_or(0)
    }

    /// Sets `q = value`, leaving a polynomial in `t`.
    pub fn specialize_q(&self, value: &Q) -> PolyT {
        PolyT::from_terms(self.terms().map(|(m, c)| (m.t, c * q_pow(value, m.q))))
    }

    /// Sets `t = value`, leaving a polynomial in `q` (returned with variable `t`).
    pub fn specialize_t(&self, value: &Q) -> PolyT {
        PolyT::from_terms(self.terms().map(|(m, c)| (m.q, c * q_pow(value, m.t))))
    }

    /// Substitutes `q -> t`.
    pub fn q_to_t(&self) -> PolyT {
        PolyT::from_terms(self.terms().map(|(m, c)| (m.q + m.t, c.clone())))
    }

    /// `t^shift · f(q, t^{-1})`.
    pub fn substitute_t_inverse(&self, shift: u32) -> Result<Self> {
        let d = self.degree_t();
        if !self.is_zero() && d > shift {
            return Err(Error::InsufficientShift { shift, needed: d });
        }
        Ok(Self::from_terms(
            self.terms()
                .map(|(m, c)| (QtMonomial::new(m.q, shift - m.t), c.clone())),
        ))
    }

    /// The q-free polynomial as a [`PolyT`].
    pub fn to_t(&self) -> Option<PolyT> {
        self.is_q_free().then(|| self.specialize_q(&Q::zero()))
    }

    /// Coefficients of `t^0, t^1, …` as polynomials in `q` (stored as [`PolyT`]).
    pub fn t_coefficients(&self) -> Vec<PolyT> {
        let mut out = vec![PolyT::zero(); self.degree_t() as usize + 1];
        for (m, c) in self.terms() {
            out[m.t as usize].add_term(m.q, c);
        }
        out
    }

    /// Inverse of [`PolyQT::t_coefficients`].
    pub fn from_t_coefficients(coeffs: &[PolyT]) -> Self {
        let mut out = Self::zero();
        for (te, cq) in coeffs.iter().enumerate() {
            for (qe, c) in cq.terms() {
                out.add_term(QtMonomial::new(*qe, te as u32), c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::q_frac;

    #[test]
    fn exact_division() {
        let num = PolyT::one_minus_t_pow(2);
        let den = PolyT::one_minus_t_pow(1);
        assert_eq!(num.exact_divide(&den).unwrap(), PolyT::from_coeffs(&[1, 1]));
        assert!(matches!(
            PolyT::from_coeffs(&[1, 0, 1]).exact_divide(&den),
            Err(Error::NotDivisible(..))
        ));
        assert_eq!(num.exact_divide(&PolyT::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_and_inverse_substitution() {
        assert_eq!(PolyT::from_coeffs(&[1, 1, 1, 1]).evaluate(&q_int(1)), q_int(4));
        let f = PolyT::from_coeffs(&[0, 4, 4]);
        assert_eq!(f.substitute_inverse(3).unwrap(), PolyT::from_coeffs(&[0, 4, 4]));
        assert_eq!(
            f.substitute_inverse(1),
            Err(Error::InsufficientShift { shift: 1, needed: 2 })
        );
    }

    #[test]
    fn printing() {
        assert_eq!(PolyT::from_coeffs(&[1, 1, 0, 2]).to_string(), "1 + t + 2*t^3");
        assert_eq!(PolyT::from_coeffs(&[0, 1, 1]).to_compact_string(), "t+t^2");
        assert_eq!(PolyT::from_coeffs(&[1, -1]).to_string(), "1 - t");
        assert_eq!(PolyT::from_coeffs(&[0, -3]).to_string(), "-3*t");
        assert_eq!(PolyT::zero().to_string(), "0");
        assert_eq!(PolyT::monomial(2, q_frac(1, 2)).to_string(), "1/2*t^2");
        let f = PolyQT::from_terms([
            (QtMonomial::new(0, 0), q_int(1)),
            (QtMonomial::new(0, 1), q_int(1)),
            (QtMonomial::new(1, 0), q_int(1)),
            (QtMonomial::new(1, 1), q_int(2)),
            (QtMonomial::new(0, 2), q_int(1)),
            (QtMonomial::new(2, 0), q_int(1)),
        ]);
        assert_eq!(f.to_string(), "1 + q + t + q^2 + 2*q*t + t^2");
    }

    #[test]
    fn bivariate_division() {
        let a = PolyQT::from_terms([(QtMonomial::new(0, 0), q_int(1)), (QtMonomial::new(1, 1), q_int(-1))]);
        let b = PolyQT::from_terms([(QtMonomial::new(0, 0), q_int(1)), (QtMonomial::new(2, 1), q_int(3))]);
        assert_eq!(a.mul(&b).exact_divide(&b).unwrap(), a);
        assert!(a.exact_divide(&b).is_err());
    }

    #[test]
    fn palindromes() {
        assert!(PolyT::from_coeffs(&[0, 1, 2, 1]).is_palindromic());
        assert!(!PolyT::from_coeffs(&[1, 2]).is_palindromic());
    }
}
