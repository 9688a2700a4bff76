//! Buchberger's algorithm with the Gebauer-Moeller pair criteria.
//!
//! Polynomials are converted to rows of terms sorted ascending under the
//! active order, so the leading term is the last entry and reduction pops
//! from the back.

mod hilbert;
mod ideal_ops;

pub use hilbert::{hilbert_dim_degree, hilbert_numerator, vector_space_dimension, HilbertData};
pub use ideal_ops::{eliminate, intersect, saturate};

use std::cmp::Ordering;

use crate::field::PrimeField;
use crate::monomial::{ExponentVector, MonomialOrder};
use crate::poly::Polynomial;

/// A polynomial ideal given by generators. Zero generators are dropped; an
/// empty generator list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    field: PrimeField,
    arity: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(field: PrimeField, arity: usize, generators: Vec<Polynomial>) -> Self {
        for g in &generators {
            assert_eq!(g.arity(), arity, "generator arity mismatch");
            assert_eq!(g.field(), field, "generator field mismatch");
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            field,
            arity,
            generators,
        }
    }

    /// Ideal of a nonempty generator list.
    pub fn from_generators(generators: Vec<Polynomial>) -> Self {
        let first = generators.first().expect("at least one generator");
        let (field, arity) = (first.field(), first.arity());
        Self::new(field, arity, generators)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn with_generator(&self, g: Polynomial) -> Self {
        let mut gens = self.generators.clone();
        gens.push(g);
        Self::new(self.field, self.arity, gens)
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> GroebnerBasis {
        buchberger(self, order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.groebner_basis(MonomialOrder::GrevLex)).is_zero()
    }

    /// Equality of ideals, decided by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.arity == other.arity
            && self.groebner_basis(MonomialOrder::GrevLex).elements
                == other.groebner_basis(MonomialOrder::GrevLex).elements
    }
}

/// A reduced Groebner basis: monic elements sorted ascending by leading
/// monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: PrimeField,
    arity: usize,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.elements
            .iter()
            .map(|g| {
                g.leading_term(self.order)
                    .expect("nonzero element")
                    .0
                    .clone()
            })
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.field, self.arity, self.elements.clone())
    }

    /// Every S-polynomial reduces to zero modulo the basis.
    pub fn is_groebner(&self) -> bool {
        let rows: Vec<Row> = self
            .elements
            .iter()
            .map(|g| Row::from_poly(g, self.order))
            .collect();
        let refs: Vec<&Row> = rows.iter().collect();
        for i in 0..rows.len() {
            for j in (i + 1)..rows.len() {
                let s = s_polynomial(&rows[i], &rows[j], self.order, self.field);
                if !reduce(s, &refs, self.order, self.field).terms.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// No term of an element is divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_term(self.order).map(|(_, c)| c) == Some(1)
                && g.terms().all(|(e, _)| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(e))
                })
        })
    }
}

/// Remainder of `f` on division by `basis`; no term of the result is
/// divisible by a leading monomial of the basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    assert_eq!(f.arity(), basis.arity, "arity mismatch in normal form");
    let rows: Vec<Row> = basis
        .elements
        .iter()
        .map(|g| Row::from_poly(g, basis.order))
        .collect();
    let refs: Vec<&Row> = rows.iter().collect();
    reduce(
        Row::from_poly(f, basis.order),
        &refs,
        basis.order,
        basis.field,
    )
    .to_poly(basis.field, basis.arity)
}

type Term = (ExponentVector, u64);

/// Terms ascending under the order; the leading term is last.
#[derive(Clone, Debug)]
struct Row {
    terms: Vec<Term>,
}

impl Row {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Row {
        let mut terms: Vec<Term> = p.terms().map(|(e, c)| (e.clone(), c)).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Row { terms }
    }

    fn to_poly(&self, field: PrimeField, arity: usize) -> Polynomial {
        Polynomial::from_terms(field, arity, self.terms.iter().cloned())
    }

    fn lead(&self) -> &ExponentVector {
        &self.terms.last().expect("nonzero row").0
    }

    fn make_monic(&mut self, field: PrimeField) {
        let inv = field.inv(self.terms.last().expect("nonzero row").1);
        if inv != 1 {
            for t in &mut self.terms {
                t.1 = field.mul(t.1, inv);
            }
        }
    }
}

/// `a - c * x^m * b`, both ascending, result ascending.
fn sub_mul(
    a: &[Term],
    b: &[Term],
    m: &ExponentVector,
    c: u64,
    order: MonomialOrder,
    field: PrimeField,
) -> Vec<Term> {
    let neg_c = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    for (be, bc) in b {
        let e = be.mul(m);
        let v = field.mul(*bc, neg_c);
        while i < a.len() && order.cmp(&a[i].0, &e) == Ordering::Less {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].0 == e {
            let s = field.add(a[i].1, v);
            if s != 0 {
                out.push((e, s));
            }
            i += 1;
        } else {
            out.push((e, v));
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

fn support_mask(e: &ExponentVector) -> u64 {
    e.iter().enumerate().fold(
        0u64,
        |m, (i, a)| if a > 0 { m | (1 << (i % 64)) } else { m },
    )
}

/// Full reduction of `f` by monic rows.
fn reduce(mut f: Row, basis: &[&Row], order: MonomialOrder, field: PrimeField) -> Row {
    let masks: Vec<u64> = basis.iter().map(|g| support_mask(g.lead())).collect();
    let mut rem: Vec<Term> = Vec::new();
    while let Some((lead, c)) = f.terms.last().cloned() {
        let lm = support_mask(&lead);
        let divisor = basis
            .iter()
            .zip(&masks)
            .find(|(g, &mask)| mask & !lm == 0 && g.lead().divides(&lead))
            .map(|(g, _)| *g);
        match divisor {
            Some(g) => {
                let m = lead.div(g.lead());
                let n = f.terms.len() - 1;
                f.terms = sub_mul(
                    &f.terms[..n],
                    &g.terms[..g.terms.len() - 1],
                    &m,
                    c,
                    order,
                    field,
                );
            }
            None => {
                rem.push(f.terms.pop().unwrap());
            }
        }
    }
    rem.reverse();
    Row { terms: rem }
}

fn s_polynomial(f: &Row, g: &Row, order: MonomialOrder, field: PrimeField) -> Row {
    let l = f.lead().lcm(g.lead());
    let mf = l.div(f.lead());
    let mg = l.div(g.lead());
    let fm: Vec<Term> = f.terms[..f.terms.len() - 1]
        .iter()
        .map(|(e, c)| (e.mul(&mf), *c))
        .collect();
    Row {
        terms: sub_mul(&fm, &g.terms[..g.terms.len() - 1], &mg, 1, order, field),
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<Row>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn active_rows(&self) -> Vec<&Row> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(r, _)| r)
            .collect()
    }

    /// Gebauer-Moeller update with the new element `h` (monic, reduced).
    fn insert(&mut self, h: Row) {
        let hi = self.polys.len();
        let lh = h.lead().clone();
        self.polys.push(h);
        self.active.push(true);

        let mut candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| Pair {
                i: g,
                j: hi,
                lcm: self.polys[g].lead().lcm(&lh),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.polys[p.i].lead().is_coprime(&lh);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // product criterion
        kept.retain(|p| !self.polys[p.i].lead().is_coprime(&lh));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i].lead().lcm(&lh) != p.lcm
                && polys[p.j].lead().lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);

        for g in 0..hi {
            if self.active[g] && lh.divides(self.polys[g].lead()) {
                self.active[g] = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = order.cmp(&a.lcm, &b.lcm).then((a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Groebner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let field = ideal.field;
    let arity = ideal.arity;
    let unit = || GroebnerBasis {
        order,
        field,
        arity,
        elements: vec![Polynomial::one(field, arity)],
    };
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    let mut inputs: Vec<Row> = ideal
        .generators
        .iter()
        .map(|g| Row::from_poly(g, order))
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    for f in inputs {
        let mut r = reduce(f, &engine.active_rows(), order, field);
        if r.terms.is_empty() {
            continue;
        }
        if r.lead().is_constant() {
            return unit();
        }
        r.make_monic(field);
        engine.insert(r);
    }

    while let Some(pair) = engine.select_pair() {
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j], order, field);
        let mut r = reduce(s, &engine.active_rows(), order, field);
        if r.terms.is_empty() {
            continue;
        }
        if r.lead().is_constant() {
            return unit();
        }
        r.make_monic(field);
        engine.insert(r);
    }

    // interreduce the minimal basis
    let minimal: Vec<Row> = engine
        .polys
        .iter()
        .zip(&engine.active)
        .filter(|(_, &a)| a)
        .map(|(r, _)| r.clone())
        .collect();
    let mut reduced: Vec<Row> = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Row> = minimal
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, r)| r)
            .collect();
        let lead = g.terms.last().cloned().unwrap();
        let tail = Row {
            terms: g.terms[..g.terms.len() - 1].to_vec(),
        };
        let mut t = reduce(tail, &others, order, field);
        t.terms.push(lead);
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    let gb = GroebnerBasis {
        order,
        field,
        arity,
        elements: reduced.iter().map(|r| r.to_poly(field, arity)).collect(),
    };
    debug_assert!(gb.is_groebner(), "S-pair check failed");
    gb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &Polynomial::default_names(n), PrimeField::default()).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(
            PrimeField::default(),
            n,
            gens.iter().map(|g| p(g, n)).collect(),
        )
    }

    #[test]
    fn already_reduced() {
        let gb = buchberger(&ideal(&["x0", "x1"], 3), MonomialOrder::GrevLex);
        assert_eq!(gb.elements(), &[p("x1", 3), p("x0", 3)]);
    }

    #[test]
    fn redundant_generator_disappears() {
        let gb = buchberger(
            &ideal(&["x0^2 - x1^2", "x0 - x1"], 2),
            MonomialOrder::GrevLex,
        );
        assert_eq!(gb.elements(), &[p("x0 - x1", 2)]);
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&ideal(&["x0*x1 - 1", "x0^2"], 2), MonomialOrder::GrevLex);
        assert!(gb.is_unit());
        assert!(normal_form(&p("1", 2), &gb).is_zero());
        // explicit certificate: 1 = x0*x1*(x0*x1 - 1)*(-1)... via
        // (x0*x1 + 1)(x0*x1 - 1) = x0^2 x1^2 - 1
        let cert = &(&p("x0*x1 + 1", 2) * &p("x0*x1 - 1", 2)) - &(&p("x1^2", 2) * &p("x0^2", 2));
        assert_eq!(cert, p("-1", 2));
    }

    #[test]
    fn normal_form_examples() {
        let gb = buchberger(&ideal(&["x0 - x1"], 2), MonomialOrder::Lex);
        assert_eq!(normal_form(&p("x0^2", 2), &gb), p("x1^2", 2));
        let gb = buchberger(&ideal(&["x0", "x1"], 3), MonomialOrder::GrevLex);
        assert_eq!(normal_form(&p("1", 3), &gb), p("1", 3));
        assert!(normal_form(&p("x0*x2 + x1^3", 3), &gb).is_zero());
    }

    #[test]
    fn cyclic_three_is_groebner() {
        let i = ideal(
            &["x0 + x1 + x2", "x0*x1 + x1*x2 + x2*x0", "x0*x1*x2 - 1"],
            3,
        );
        for order in [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination(1),
        ] {
            let gb = buchberger(&i, order);
            assert!(gb.is_groebner());
            assert!(gb.is_reduced());
            for g in i.generators() {
                assert!(normal_form(g, &gb).is_zero());
            }
        }
        // lex basis of cyclic-3 ends with the univariate x2^3 - 1
        let gb = buchberger(&i, MonomialOrder::Lex);
        assert_eq!(gb.elements()[0], p("x2^3 - 1", 3));
    }

    #[test]
    fn zero_ideal() {
        let gb = buchberger(
            &Ideal::new(PrimeField::default(), 2, vec![]),
            MonomialOrder::GrevLex,
        );
        assert!(gb.elements().is_empty());
        assert_eq!(normal_form(&p("x0 + 3", 2), &gb), p("x0 + 3", 2));
    }
}
