//! Multivariate gcd by recursive primitive pseudo-remainder sequences, exact
//! division, and squarefree parts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::monomial::ExponentVector;
use crate::poly::Polynomial;
use crate::{Error, Result};

const SQUAREFREE_ATTEMPTS: usize = 8;

/// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
pub fn exact_div(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero(), "division by zero polynomial");
    let field = f.field();
    let (lg, cg) = g.lex_leading_term().map(|(e, c)| (e.clone(), c))?;
    let inv = field.inv(cg);
    let mut r = f.clone();
    let mut q = Polynomial::zero(field, f.arity());
    while let Some((e, c)) = r.lex_leading_term() {
        if !lg.divides(e) {
            return None;
        }
        let m = e.div(&lg);
        let coef = field.mul(c, inv);
        r = &r - &g.mul_term(&m, coef);
        q.add_term(m, coef);
    }
    Some(q)
}

/// Monic greatest common divisor (leading coefficient 1 under grevlex).
/// `gcd(0, 0)` is `0`.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert_eq!(
        f.arity(),
        g.arity(),
        "gcd of polynomials with different arity"
    );
    gcd_rec(f, g).monic()
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let one = Polynomial::one(f.field(), f.arity());
    if f.is_constant() || g.is_constant() {
        return one;
    }
    let v = (0..f.arity())
        .rev()
        .find(|&i| f.uses_variable(i) || g.uses_variable(i))
        .expect("nonconstant polynomial uses some variable");
    if !f.uses_variable(v) {
        return gcd_rec(f, &content(g, v));
    }
    if !g.uses_variable(v) {
        return gcd_rec(&content(f, v), g);
    }
    let (cf, cg) = (content(f, v), content(g, v));
    let c = gcd_rec(&cf, &cg);
    let mut a = exact_div(f, &cf).expect("content divides");
    let mut b = exact_div(g, &cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if !r.uses_variable(v) {
            b = one.clone();
            break;
        }
        a = b;
        b = primitive_part(&r, v);
    }
    &c * &primitive_part(&b, v)
}

/// Coefficients of `f` viewed as a polynomial in `x_v`; entry `i` multiplies `x_v^i`.
pub fn coefficients_in(f: &Polynomial, v: usize) -> Vec<Polynomial> {
    let deg = f.degree_in(v) as usize;
    let mut out = vec![Polynomial::zero(f.field(), f.arity()); deg + 1];
    for (e, c) in f.terms() {
        let mut e2 = e.clone();
        e2.set(v, 0);
        out[e.exponent(v) as usize].add_term(e2, c);
    }
    out
}

/// Gcd of the coefficients of `f` in `x_v`.
fn content(f: &Polynomial, v: usize) -> Polynomial {
    let mut acc = Polynomial::zero(f.field(), f.arity());
    for c in coefficients_in(f, v).into_iter().filter(|c| !c.is_zero()) {
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

fn primitive_part(f: &Polynomial, v: usize) -> Polynomial {
    let c = content(f, v);
    exact_div(f, &c).expect("content divides")
}

/// Sparse pseudo-remainder of `a` by `b` with respect to `x_v`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let n = b.degree_in(v);
    let lc_b = coefficients_in(b, v).pop().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= n {
        let m = r.degree_in(v);
        let lc_r = coefficients_in(&r, v).pop().expect("nonzero");
        let shift = ExponentVector::variable(r.arity(), v);
        let mut shifted = b.clone();
        for _ in 0..(m - n) {
            shifted = shifted.mul_term(&shift, 1);
        }
        r = &(&lc_b * &r) - &(&lc_r * &shifted);
    }
    r
}

/// Squarefree part `f / gcd(f, D_l f)` for random directions `l`.
///
/// Two independent directions are tried and the larger result is kept (an
/// unlucky direction can only lose factors); the result is then confirmed
/// squarefree against a fresh direction.
pub fn squarefree_part(f: &Polynomial, seed: u64) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::Precondition("squarefree part of zero".into()));
    }
    let k = f.homogeneous_degree()?;
    if k == 0 {
        return Ok(f.clone());
    }
    if (k as u64) >= f.field().modulus() {
        return Err(Error::Precondition(
            "characteristic does not exceed the degree".into(),
        ));
    }
    let field = f.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Polynomial> = None;
    let mut agreeing = 0;
    for _ in 0..SQUAREFREE_ATTEMPTS {
        let dir: Vec<u64> = (0..f.arity()).map(|_| field.random(&mut rng)).collect();
        let df = f.directional_derivative(&dir);
        if df.is_zero() {
            continue;
        }
        let cand = exact_div(f, &gcd(f, &df)).expect("gcd divides");
        match &best {
            Some(b) if b.total_degree() >= cand.total_degree() => {
                if b.total_degree() == cand.total_degree() {
                    agreeing += 1;
                }
            }
            _ => {
                best = Some(cand);
                agreeing = 1;
            }
        }
        if agreeing >= 2 {
            let b = best.as_ref().expect("set above");
            let check: Vec<u64> = (0..f.arity()).map(|_| field.random(&mut rng)).collect();
            let db = b.directional_derivative(&check);
            if !db.is_zero() && gcd(b, &db).is_constant() {
                return Ok(b.clone());
            }
        }
    }
    Err(Error::DegenerateRandom(
        "squarefree part: no generic direction found".into(),
    ))
}

/// Squarefree part of a polynomial in the single variable `x_v` (any degree
/// pattern), `f / gcd(f, f')`.
pub fn univariate_squarefree(f: &Polynomial, v: usize) -> Polynomial {
    debug_assert!((0..f.arity()).all(|i| i == v || !f.uses_variable(i)));
    let d = f.derivative(v);
    if d.is_zero() {
        return f.monic();
    }
    exact_div(f, &gcd(f, &d)).expect("gcd divides").monic()
}

/// Number of distinct points of `P^1` where the binary form `f` in the
/// variables `kept` vanishes.
pub fn binary_form_distinct_roots(f: &Polynomial, kept: (usize, usize)) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::Precondition("binary form is zero".into()));
    }
    let (u, v) = kept;
    if u == v || u >= f.arity() || v >= f.arity() {
        return Err(Error::Precondition(
            "need two distinct variable indices".into(),
        ));
    }
    if (0..f.arity()).any(|i| i != u && i != v && f.uses_variable(i)) {
        return Err(Error::Precondition(
            "not a binary form in the kept variables".into(),
        ));
    }
    f.homogeneous_degree()?;
    // Strip the powers of u and v: each contributes one root, (0:1) or (1:0).
    let lowest = |i: usize| f.terms().map(|(e, _)| e.exponent(i)).min().unwrap_or(0);
    let (au, av) = (lowest(u), lowest(v));
    let mut strip = ExponentVector::zero(f.arity());
    strip.set(u, au);
    strip.set(v, av);
    let rest = f.map_exponents(f.arity(), |e| e.div(&strip));
    // rest has no root at (0:1) or (1:0); its roots are those of rest(u, 1).
    let affine = rest.dehomogenize(v);
    let distinct = univariate_squarefree(&affine, u).degree_in(u);
    Ok(distinct + (au > 0) as u32 + (av > 0) as u32)
}
