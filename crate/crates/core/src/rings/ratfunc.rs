//! Rational functions in `q,t` over `Q`.
//!
//! Normal form: numerator and denominator are coprime (divided by their
//! [`gcd_qt`]) and the denominator's leading coefficient in the graded
//! monomial order is 1. The zero function is `0/1`. With that form,
//! structural equality is equality of rational functions.

use std::fmt;

use super::gcd::{gcd_qt, make_monic_qt};
use super::poly::{PolyQT, PolyT};
use super::{Coeff, Field, Q};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: PolyQT,
    den: PolyQT,
}

impl RatQT {
    pub fn new(num: PolyQT, den: PolyQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: PolyQT) -> Self {
        RatQT {
            num,
            den: PolyQT::constant(Q::one()),
        }
    }

    pub fn from_t(num: &PolyT) -> Self {
        Self::from_poly(num.to_qt())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(PolyQT::constant(c))
    }

    pub fn numerator(&self) -> &PolyQT {
        &self.num
    }

    pub fn denominator(&self) -> &PolyQT {
        &self.den
    }

    fn normalized(num: PolyQT, den: PolyQT) -> Self {
        if num.is_zero() {
            return Self::from_poly(PolyQT::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd_qt(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_divide(&g).expect("gcd divides numerator"),
                    den.exact_divide(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lead = den.leading().expect("nonzero denominator").1.recip();
        RatQT {
            num: num.scale(&lead),
            den: make_monic_qt(&den),
        }
    }

    /// Idempotent; values built through this API are already normal.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    /// Equality by clearing denominators, independent of the normal form.
    pub fn cross_equal(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The numerator if the denominator is 1.
    pub fn to_poly(&self) -> Result<PolyQT> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    /// A q-free polynomial as a [`PolyT`].
    pub fn to_poly_t(&self) -> Result<PolyT> {
        self.to_poly()?
            .to_t()
            .ok_or_else(|| Error::NotPolynomial(self.to_string()))
    }

    pub fn is_q_free(&self) -> bool {
        self.num.is_q_free() && self.den.is_q_free()
    }

    fn map_both(&self, f: impl Fn(&PolyQT) -> PolyQT) -> Result<Self> {
        Self::new(f(&self.num), f(&self.den))
    }

    /// Sets `q = value`.
    pub fn specialize_q(&self, value: &Q) -> Result<Self> {
        self.map_both(|p| p.specialize_q(value).to_qt())
    }

    /// Sets `t = value`, leaving a function of `q`.
    pub fn specialize_t(&self, value: &Q) -> Result<Self> {
        self.map_both(|p| p.specialize_t(value).to_qt_as_q())
    }

    /// Substitutes `q -> t`.
    pub fn q_to_t(&self) -> Result<Self> {
        self.map_both(|p| p.q_to_t().to_qt())
    }

    pub fn evaluate(&self, q: &Q, t: &Q) -> Result<Q> {
        let d = self.den.evaluate(q, t);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(q, t) / d)
    }
}

impl Coeff for RatQT {
    fn zero() -> Self {
        Self::from_poly(PolyQT::zero())
    }
    fn one() -> Self {
        Self::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }
    fn negated(&self) -> Self {
        RatQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && other.den.is_constant() {
            return RatQT {
                num: self.num.mul(&other.num),
                den: self.den.clone(),
            };
        }
        // cross-cancel first to keep the products small
        let g1 = gcd_qt(&self.num, &other.den);
        let g2 = gcd_qt(&other.num, &self.den);
        let div = |a: &PolyQT, g: &PolyQT| a.exact_divide(g).expect("gcd divides");
        let num = div(&self.num, &g1).mul(&div(&other.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&other.den, &g1));
        let lead = den.leading().expect("nonzero").1.recip();
        RatQT {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }
    fn from_rational(q: &Q) -> Self {
        Self::constant(q.clone())
    }
    fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RatQT {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }
    fn render(&self) -> String {
        if self.is_polynomial() {
            self.num.to_compact_string()
        } else {
            format!("({})/({})", self.num.to_compact_string(), self.den.to_compact_string())
        }
    }
    fn is_compound(&self) -> bool {
        !self.is_polynomial() || self.num.num_terms() > 1
    }
}

impl Field for RatQT {
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead = self.num.leading().expect("nonzero").1.recip();
        Ok(RatQT {
            num: self.den.scale(&lead),
            den: self.num.scale(&lead),
        })
    }
}

impl From<PolyQT> for RatQT {
    fn from(p: PolyQT) -> Self {
        Self::from_poly(p)
    }
}

impl From<&PolyT> for RatQT {
    fn from(p: &PolyT) -> Self {
        Self::from_t(p)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT({self})")
    }
}
