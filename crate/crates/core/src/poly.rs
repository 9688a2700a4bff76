//! Sparse multivariate polynomials over a prime field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::PrimeField;
use crate::monomial::{ExponentVector, MonomialOrder};
use crate::{Error, Result};

/// A polynomial in `arity` variables. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    arity: usize,
    terms: BTreeMap<ExponentVector, u64>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, arity: usize) -> Self {
        Polynomial {
            field,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, arity: usize, c: u64) -> Self {
        Self::monomial(field, ExponentVector::zero(arity), c)
    }

    pub fn one(field: PrimeField, arity: usize) -> Self {
        Self::constant(field, arity, 1)
    }

    pub fn variable(field: PrimeField, arity: usize, i: usize) -> Self {
        assert!(
            i < arity,
            "variable index {i} out of range for arity {arity}"
        );
        Self::monomial(field, ExponentVector::variable(arity, i), 1)
    }

    pub fn monomial(field: PrimeField, exps: ExponentVector, c: u64) -> Self {
        let arity = exps.arity();
        let mut terms = BTreeMap::new();
        let c = field.from_u64(c);
        if c != 0 {
            terms.insert(exps, c);
        }
        Polynomial {
            field,
            arity,
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(field: PrimeField, arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, u64)>,
    {
        let mut p = Self::zero(field, arity);
        for (e, c) in terms {
            assert_eq!(e.arity(), arity, "exponent arity mismatch");
            p.add_term(e, field.from_u64(c));
        }
        p
    }

    /// Convenience constructor with signed integer coefficients.
    pub fn from_int_terms(field: PrimeField, arity: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            field,
            arity,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::from_slice(e), field.from_i64(*c))),
        )
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: u64) {
        if c == 0 {
            return;
        }
        let f = self.field;
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage (lexicographic, ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, u64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Leading term in the lexicographic order `x_0 > x_1 > ...`.
    pub fn lex_leading_term(&self) -> Option<(&ExponentVector, u64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, e: &ExponentVector) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Terms sorted in descending order under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(ExponentVector, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, &c)| (e.clone(), c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&ExponentVector, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(e, &c)| (e, c))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e.exponent(i)).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_constant())
    }

    /// True for the zero polynomial and for polynomials whose terms all share
    /// one total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The common degree of a homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::Precondition("zero polynomial has no degree".into()));
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.total_degree().unwrap_or(0))
    }

    /// Variables that occur in some term.
    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e.exponent(i) > 0)
    }

    /// Is `x_i` a factor of every term?
    pub fn divisible_by_variable(&self, i: usize) -> bool {
        !self.is_zero() && self.terms.keys().all(|e| e.exponent(i) > 0)
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let c = f.from_u64(c);
        if c == 0 {
            return Self::zero(f, self.arity);
        }
        Polynomial {
            field: f,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, &a)| (e.clone(), f.mul(a, c)))
                .collect(),
        }
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mul_term(&self, e: &ExponentVector, c: u64) -> Self {
        let f = self.field;
        if c == 0 {
            return Self::zero(f, self.arity);
        }
        Polynomial {
            field: f,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, &a)| (m.mul(e), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::one(self.field, self.arity);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.arity, "variable index {i} out of range");
        let f = self.field;
        let mut out = Self::zero(f, self.arity);
        for (e, &c) in &self.terms {
            let a = e.exponent(i);
            if a == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.set(i, a - 1);
            out.add_term(e2, f.mul(c, f.from_u64(a as u64)));
        }
        out
    }

    /// Derivative along the direction `dir`, i.e. `sum_i dir_i * df/dx_i`.
    pub fn directional_derivative(&self, dir: &[u64]) -> Self {
        let mut out = Self::zero(self.field, self.arity);
        for (i, &c) in dir.iter().enumerate() {
            if c != 0 {
                out = &out + &self.derivative(i).scale(c);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        let f = self.field;
        let mut acc = 0;
        for (e, &c) in &self.terms {
            let mut t = c;
            for (i, a) in e.iter().enumerate() {
                if a > 0 {
                    t = f.mul(t, f.pow(point[i], a as u64));
                }
            }
            acc = f.add(acc, t);
        }
        acc
    }

    /// Substitutes `x_i -> images[i]`; all images share the target arity.
    pub fn substitute(&self, images: &[Polynomial]) -> Self {
        assert_eq!(images.len(), self.arity, "one image per variable required");
        let target = images.first().map_or(0, |p| p.arity);
        let f = self.field;
        // powers[i][a] = images[i]^a, filled lazily
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Self::one(f, target), p.clone()])
            .collect();
        let mut out = Self::zero(f, target);
        for (e, &c) in &self.terms {
            let mut t = Self::constant(f, target, c);
            for (i, a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[i].len() <= a as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][a as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Rewrites every exponent vector through `map` into a polynomial of
    /// arity `new_arity`.
    pub fn map_exponents<F>(&self, new_arity: usize, map: F) -> Self
    where
        F: Fn(&ExponentVector) -> ExponentVector,
    {
        let mut out = Self::zero(self.field, new_arity);
        for (e, &c) in &self.terms {
            out.add_term(map(e), c);
        }
        out
    }

    /// Inserts `count` new variables at position `at`.
    pub fn insert_variables(&self, at: usize, count: usize) -> Self {
        self.map_exponents(self.arity + count, |e| {
            let mut v: Vec<u32> = e.to_vec();
            v.splice(at..at, std::iter::repeat(0).take(count));
            ExponentVector::from_slice(&v)
        })
    }

    /// Drops variable `i`, which must not occur.
    pub fn remove_variable(&self, i: usize) -> Self {
        debug_assert!(!self.uses_variable(i));
        self.map_exponents(self.arity - 1, |e| {
            e.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, a)| a)
                .collect()
        })
    }

    /// Variable `i` of the result is variable `perm[i]` of `self`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        self.map_exponents(perm.len(), |e| {
            perm.iter().map(|&j| e.exponent(j)).collect()
        })
    }

    /// Sets `x_i = 1`, keeping the arity.
    pub fn dehomogenize(&self, i: usize) -> Self {
        self.map_exponents(self.arity, |e| {
            let mut e = e.clone();
            e.set(i, 0);
            e
        })
    }

    /// Sets `x_i = 0`, keeping the arity.
    pub fn restrict_to_hyperplane(&self, i: usize) -> Self {
        let mut out = Self::zero(self.field, self.arity);
        for (e, &c) in &self.terms {
            if e.exponent(i) == 0 {
                out.add_term(e.clone(), c);
            }
        }
        out
    }

    /// Euler's identity `sum_i x_i df/dx_i = k f` for homogeneous `f` of degree `k`.
    pub fn euler_identity_check(&self) -> Result<bool> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let k = self.total_degree().unwrap_or(0);
        let mut lhs = Self::zero(self.field, self.arity);
        for i in 0..self.arity {
            let xi = ExponentVector::variable(self.arity, i);
            lhs = &lhs + &self.derivative(i).mul_term(&xi, 1);
        }
        Ok(lhs == self.scale(self.field.from_u64(k as u64)))
    }

    /// Divides by the leading coefficient under grevlex.
    pub fn monic(&self) -> Self {
        match self.leading_term(MonomialOrder::GrevLex) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c)),
        }
    }

    /// Is `self` a nonzero scalar multiple of `other`?
    pub fn is_scalar_multiple_of(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }

    /// Renders with the given variable names, terms in descending grevlex
    /// order and coefficients as symmetric residues.
    pub fn to_string_with(&self, names: &[impl AsRef<str>]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self
            .sorted_terms(MonomialOrder::GrevLex)
            .into_iter()
            .enumerate()
        {
            let s = self.field.to_signed(c);
            let (neg, mag) = (s < 0, s.unsigned_abs());
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || e.is_constant() {
                factors.push(mag.to_string());
            }
            for (i, a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(names[i].as_ref().to_string()),
                    _ => factors.push(format!("{}^{}", names[i].as_ref(), a)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn default_names(arity: usize) -> Vec<String> {
        (0..arity).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&Self::default_names(self.arity)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn check_compatible(a: &Polynomial, b: &Polynomial) {
    assert_eq!(a.arity, b.arity, "polynomial arity mismatch");
    assert_eq!(a.field, b.field, "polynomial field mismatch");
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        check_compatible(self, rhs);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        check_compatible(self, rhs);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), self.field.neg(c));
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.field.modulus() - 1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        check_compatible(self, rhs);
        let f = self.field;
        let mut out = Polynomial::zero(f, self.arity);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                out.add_term(a.mul(b), f.mul(ca, cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        let names = Polynomial::default_names(n);
        parse_polynomial(s, &names, PrimeField::default()).unwrap()
    }

    #[test]
    fn power_rule() {
        assert_eq!(p("x0^2*x2", 3).derivative(0), p("2*x0*x2", 3));
        assert!(p("7", 3).derivative(1).is_zero());
    }

    #[test]
    fn cuspidal_cubic_derivative() {
        let f = p("4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2", 3);
        // d/dx1 by hand: 12 x1^2 - 2 x0 x1 - 18 x0 x2
        assert_eq!(f.derivative(1), p("12*x1^2 - 2*x0*x1 - 18*x0*x2", 3));
        assert_eq!(f.derivative(1).total_degree(), Some(2));
    }

    #[test]
    fn euler_identity() {
        assert!(p("x0^3", 3).euler_identity_check().unwrap());
        let f = p("4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2", 3);
        assert!(f.euler_identity_check().unwrap());
        assert!(matches!(
            p("x0^2 + x1", 3).euler_identity_check(),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn printing_is_canonical() {
        let f = p("x1*x2 + 3 - x0^2", 3);
        assert_eq!(f.to_string(), "-x0^2 + x1*x2 + 3");
        assert_eq!(p("x0 - x0", 2).to_string(), "0");
    }

    #[test]
    fn substitution_and_restriction() {
        let f = p("x0^2 + x1*x2", 3);
        let g = f.restrict_to_hyperplane(0);
        assert_eq!(g, p("x1*x2", 3));
        let field = PrimeField::default();
        let images = vec![
            p("x0 + x1", 2),
            Polynomial::variable(field, 2, 1),
            Polynomial::one(field, 2),
        ];
        assert_eq!(f.substitute(&images), p("x0^2 + 2*x0*x1 + x1^2 + x1", 2));
    }
}
