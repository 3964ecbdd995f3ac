//! Polynomial gcds over `Q`.
//!
//! Univariate: Euclid's algorithm, result made monic.
//!
//! Bivariate: a `Q[q,t]` polynomial is viewed as a polynomial in `t` with
//! coefficients in `Q[q]`. The gcd is `gcd(contents) · pp(last nonzero
//! primitive remainder)`, where the remainders come from a primitive
//! pseudo-remainder sequence. Contents are univariate gcds in `q`.

use num_traits::{One, Zero};

use super::poly::{PolyQT, PolyT};
use super::Q;

/// Monic gcd of two univariate polynomials; `gcd(0, 0) = 0`.
pub fn gcd_t(a: &PolyT, b: &PolyT) -> PolyT {
    let (mut f, mut g) = (a.clone(), b.clone());
    while !g.is_zero() {
        let (_, r) = f.div_rem(&g).expect("nonzero divisor");
        f = g;
        g = r;
    }
    make_monic_t(&f)
}

fn make_monic_t(f: &PolyT) -> PolyT {
    match f.leading() {
        Some((_, c)) => f.scale(&c.recip()),
        None => PolyT::zero(),
    }
}

type Dense = Vec<PolyT>;

fn trim(v: &mut Dense) {
    while v.last().is_some_and(PolyT::is_zero) {
        v.pop();
    }
}

fn content(v: &Dense) -> PolyT {
    v.iter().fold(PolyT::zero(), |acc, c| gcd_t(&acc, c))
}

fn primitive_part(v: &Dense) -> Dense {
    let c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    v.iter()
        .map(|x| x.exact_divide(&c).expect("content divides every coefficient"))
        .collect()
}

/// `lc(g)^k · f mod g` for the appropriate `k`, up to a nonzero factor.
fn pseudo_remainder(f: &Dense, g: &Dense) -> Dense {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.clone();
    trim(&mut r);
    while !r.is_empty() && r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for x in r.iter_mut() {
            *x = x.mul(lg);
        }
        for (i, gi) in g.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&gi.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

/// A gcd of two bivariate polynomials, normalized so its leading coefficient
/// (in the graded monomial order) is 1; `gcd(0, 0) = 0`.
pub fn gcd_qt(a: &PolyQT, b: &PolyQT) -> PolyQT {
    if a.is_zero() {
        return make_monic_qt(b);
    }
    if b.is_zero() {
        return make_monic_qt(a);
    }
    if a.is_constant() || b.is_constant() {
        return PolyQT::constant(Q::one());
    }
    if a.is_q_free() && b.is_q_free() {
        return gcd_t(&a.specialize_q(&Q::zero()), &b.specialize_q(&Q::zero())).to_qt();
    }
    if a.is_t_free() && b.is_t_free() {
        return gcd_t(&a.specialize_t(&Q::zero()), &b.specialize_t(&Q::zero())).to_qt_as_q();
    }
    let (da, db) = (a.t_coefficients(), b.t_coefficients());
    let c = gcd_t(&content(&da), &content(&db));
    let (mut f, mut g) = (primitive_part(&da), primitive_part(&db));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = pseudo_remainder(&f, &g);
        f = g;
        g = primitive_part(&r);
    }
    let f = primitive_part(&f);
    let g = PolyQT::from_t_coefficients(&f).mul(&c.to_qt_as_q());
    make_monic_qt(&g)
}

pub(crate) fn make_monic_qt(f: &PolyQT) -> PolyQT {
    match f.leading() {
        Some((_, c)) if !c.is_zero() => f.scale(&c.recip()),
        _ => PolyQT::zero(),
    }
}
