//! Exact coefficient arithmetic.
//!
//! The coefficient tower is `Q` (arbitrary precision rationals), sparse
//! polynomials in `t` ([`PolyT`]) and in `q,t` ([`PolyQT`]), and rational
//! functions in `q,t` ([`RatQT`]). Symmetric functions are generic over the
//! [`Coeff`] trait so the same basis-change code runs over every level.

pub mod gcd;
pub mod linalg;
pub mod poly;
pub mod ratfunc;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use poly::{Poly, PolyQT, PolyT, QtMonomial};
pub use ratfunc::RatQT;

use crate::error::{Error, Result};

/// Arbitrary precision rational numbers.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A commutative ring containing `Q`.
///
/// Method names avoid the `std::ops` ones so generic code never trips over
/// by-value operator impls during method resolution.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn from_rational(q: &Q) -> Self;
    fn scale(&self, q: &Q) -> Self;
    /// Compact single-token rendering used in expansions and tables.
    fn render(&self) -> String;
    /// True if `render` has more than one additive term.
    fn is_compound(&self) -> bool;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

/// A [`Coeff`] ring that is a field.
pub trait Field: Coeff {
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inv()?))
    }
}

impl Coeff for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }
    fn scale(&self, q: &Q) -> Self {
        self * q
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_compound(&self) -> bool {
        false
    }
}

impl Field for Q {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// `a` as a machine integer if it is one.
pub fn q_to_i64(a: &Q) -> Option<i64> {
    if !a.is_integer() {
        return None;
    }
    i64::try_from(a.to_integer()).ok()
}

pub(crate) fn q_is_nonneg_integer(a: &Q) -> bool {
    a.is_integer() && !a.is_negative()
}
