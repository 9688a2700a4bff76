//! Hilbert-series numerators of monomial ideals by pivot splitting, and the
//! dimension and degree read off from them.

use serde::Serialize;

use super::{buchberger, Ideal};
use crate::monomial::{ExponentVector, MonomialOrder};
use crate::{Error, Result};

/// Dimension and degree of the projective scheme of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^arity`.
    pub numerator: Vec<i64>,
    /// `-1` encodes the empty scheme.
    pub projective_dimension: i64,
    /// `None` for the empty scheme.
    pub degree: Option<u64>,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>, arity: usize) -> Self {
        let mut reduced = numerator.clone();
        trim(&mut reduced);
        if reduced.is_empty() {
            // unit ideal: the Hilbert series vanishes
            return HilbertData {
                numerator,
                projective_dimension: -1,
                degree: None,
            };
        }
        let mut krull = arity;
        while krull > 0 && reduced.iter().sum::<i64>() == 0 {
            reduced = divide_one_minus_t(&reduced);
            krull -= 1;
        }
        if krull == 0 {
            return HilbertData {
                numerator,
                projective_dimension: -1,
                degree: None,
            };
        }
        let value: i64 = reduced.iter().sum();
        debug_assert!(value > 0);
        HilbertData {
            numerator,
            projective_dimension: krull as i64 - 1,
            degree: Some(value as u64),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.projective_dimension < 0
    }

    /// Degree, counting the empty scheme as zero.
    pub fn degree_or_zero(&self) -> u64 {
        self.degree.unwrap_or(0)
    }
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// `p / (1 - t)`, assuming `p(1) = 0`.
fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in &p[..p.len().saturating_sub(1)] {
        acc += c;
        q.push(acc);
    }
    debug_assert_eq!(acc + p.last().copied().unwrap_or(0), 0);
    trim(&mut q);
    q
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series of `k[x] / (monomials)`, so that the
/// series is `N(t) / (1 - t)^n`. The zero vector encodes the unit ideal.
pub fn hilbert_numerator(monomials: &[ExponentVector]) -> Vec<i64> {
    numerator(minimalize(monomials.to_vec()))
}

fn numerator(gens: Vec<ExponentVector>) -> Vec<i64> {
    if gens.iter().any(|g| g.is_constant()) {
        return Vec::new();
    }
    if gens.iter().all(|g| g.support_size() <= 1) {
        // pure powers in distinct variables
        return gens.iter().fold(vec![1], |acc, g| {
            let mut factor = vec![0; g.degree() as usize + 1];
            factor[0] = 1;
            factor[g.degree() as usize] = -1;
            poly_mul(&acc, &factor)
        });
    }
    // pivot on the variable occurring in the most mixed generators
    let arity = gens[0].arity();
    let pivot = (0..arity)
        .max_by_key(|&i| {
            gens.iter()
                .filter(|g| g.support_size() > 1 && g.exponent(i) > 0)
                .count()
        })
        .expect("arity > 0");
    let x = ExponentVector::variable(arity, pivot);

    let mut plus: Vec<ExponentVector> = gens
        .iter()
        .filter(|g| g.exponent(pivot) == 0)
        .cloned()
        .collect();
    plus.push(x.clone());
    let colon: Vec<ExponentVector> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h.set(pivot, g.exponent(pivot).saturating_sub(1));
            h
        })
        .collect();
    let a = numerator(minimalize(plus));
    let b = numerator(minimalize(colon));
    let mut shifted = vec![0];
    shifted.extend(b);
    poly_add(&a, &shifted)
}

/// Projective dimension and degree of a homogeneous ideal.
pub fn hilbert_dim_degree(ideal: &Ideal) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = buchberger(ideal, MonomialOrder::GrevLex);
    Ok(HilbertData::from_numerator(
        hilbert_numerator(&gb.leading_monomials()),
        ideal.arity(),
    ))
}

/// `dim_k k[x] / I` for a zero-dimensional affine ideal.
pub fn vector_space_dimension(ideal: &Ideal) -> Result<u64> {
    let gb = buchberger(ideal, MonomialOrder::GrevLex);
    if gb.is_unit() {
        return Ok(0);
    }
    let leads = gb.leading_monomials();
    for i in 0..ideal.arity() {
        if !leads
            .iter()
            .any(|l| l.support_size() == 1 && l.exponent(i) > 0)
        {
            return Err(Error::PositiveDimensional(format!(
                "ideal: no pure power of variable {i} among leading terms"
            )));
        }
    }
    let mut series = hilbert_numerator(&leads);
    for _ in 0..ideal.arity() {
        series = divide_one_minus_t(&series);
    }
    Ok(series.iter().sum::<i64>() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;
    use crate::poly::Polynomial;
    use proptest::prelude::*;

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        let names = Polynomial::default_names(n);
        let field = PrimeField::default();
        Ideal::new(
            field,
            n,
            gens.iter()
                .map(|g| parse_polynomial(g, &names, field).unwrap())
                .collect(),
        )
    }

    /// Number of standard monomials of each degree up to `max_deg`.
    fn count_standard(leads: &[ExponentVector], arity: usize, max_deg: u32) -> Vec<u64> {
        let mut counts = vec![0u64; max_deg as usize + 1];
        let mut stack = vec![ExponentVector::zero(arity)];
        let mut seen = std::collections::HashSet::new();
        while let Some(m) = stack.pop() {
            if !seen.insert(m.clone()) || leads.iter().any(|l| l.divides(&m)) {
                continue;
            }
            counts[m.degree() as usize] += 1;
            if m.degree() < max_deg {
                for i in 0..arity {
                    stack.push(m.mul(&ExponentVector::variable(arity, i)));
                }
            }
        }
        counts
    }

    #[test]
    fn line_in_the_plane() {
        let h = hilbert_dim_degree(&ideal(&["x0"], 3)).unwrap();
        assert_eq!((h.projective_dimension, h.degree), (1, Some(1)));
    }

    #[test]
    fn irrelevant_ideal_is_empty() {
        let h = hilbert_dim_degree(&ideal(&["x0", "x1", "x2"], 3)).unwrap();
        assert_eq!(h.projective_dimension, -1);
        assert!(h.degree.is_none());
        let h = hilbert_dim_degree(&ideal(&["1"], 3)).unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn embedded_point_on_a_line() {
        // standard monomials of degree d are x1^a*x2^b (a + b = d) and x0*x2^(d-1)
        let i = ideal(&["x0^2", "x0*x1"], 3);
        let leads = i.groebner_basis(MonomialOrder::GrevLex).leading_monomials();
        let counts = count_standard(&leads, 3, 10);
        // h(d) = d + 2 for d >= 1: linear with slope 1 -> dim 1, degree 1
        for d in 2..=10u64 {
            assert_eq!(counts[d as usize] - counts[d as usize - 1], 1);
        }
        let h = hilbert_dim_degree(&i).unwrap();
        assert_eq!((h.projective_dimension, h.degree), (1, Some(1)));
    }

    #[test]
    fn vector_space_dimensions() {
        assert_eq!(vector_space_dimension(&ideal(&["x0", "x1"], 2)).unwrap(), 1);
        assert_eq!(
            vector_space_dimension(&ideal(&["x0^2", "x1^3"], 2)).unwrap(),
            6
        );
        assert_eq!(
            vector_space_dimension(&ideal(&["x0^2 - x1", "x1^2"], 2)).unwrap(),
            4
        );
        assert!(vector_space_dimension(&ideal(&["x0*x1"], 2)).is_err());
        assert_eq!(
            vector_space_dimension(&ideal(&["x0 - 1", "x0"], 2)).unwrap(),
            0
        );
    }

    #[test]
    fn nonhomogeneous_rejected() {
        assert_eq!(
            hilbert_dim_degree(&ideal(&["x0 - 1"], 2)),
            Err(Error::NotHomogeneous)
        );
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, n), 1i64..20), 1..5).prop_map(
            move |terms| {
                let field = PrimeField::default();
                Polynomial::from_terms(
                    field,
                    n,
                    terms
                        .into_iter()
                        .map(|(e, c)| (ExponentVector::from_slice(&e), field.from_i64(c))),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn hypersurface_degree(f in small_poly(4)) {
            // homogenize by taking the top-degree part
            let d = f.total_degree().unwrap();
            let top = Polynomial::from_terms(
                f.field(), 4, f.terms().filter(|(e, _)| e.degree() == d).map(|(e, c)| (e.clone(), c)));
            prop_assume!(d > 0);
            let h = hilbert_dim_degree(&Ideal::from_generators(vec![top])).unwrap();
            prop_assert_eq!(h.projective_dimension, 2);
            prop_assert_eq!(h.degree, Some(d as u64));
        }

        #[test]
        fn standard_monomial_count_matches_enumeration(
            a in 1u32..5, b in 1u32..5, extra in small_poly(2), extra2 in small_poly(2)
        ) {
            let field = PrimeField::default();
            let gens = vec![
                Polynomial::monomial(field, ExponentVector::from_slice(&[a, 0]), 1) + extra.clone(),
                Polynomial::monomial(field, ExponentVector::from_slice(&[0, b]), 1) + extra2.clone(),
                extra,
            ];
            let i = Ideal::new(field, 2, gens);
            if let Ok(dim) = vector_space_dimension(&i) {
                prop_assume!(dim <= 20);
                let leads = i.groebner_basis(MonomialOrder::GrevLex).leading_monomials();
                let counts = count_standard(&leads, 2, 40);
                prop_assert_eq!(counts.iter().sum::<u64>(), dim);
            }
        }

        #[test]
        fn three_variable_counts(
            a in 1u32..4, b in 1u32..4, c in 1u32..4, m in small_poly(3)
        ) {
            let field = PrimeField::default();
            let gens = vec![
                Polynomial::monomial(field, ExponentVector::from_slice(&[a, 0, 0]), 1),
                Polynomial::monomial(field, ExponentVector::from_slice(&[0, b, 0]), 1),
                Polynomial::monomial(field, ExponentVector::from_slice(&[0, 0, c]), 1),
                m,
            ];
            let i = Ideal::new(field, 3, gens);
            let dim = vector_space_dimension(&i).unwrap();
            let leads = i.groebner_basis(MonomialOrder::GrevLex).leading_monomials();
            let counts = count_standard(&leads, 3, 30);
            prop_assert_eq!(counts.iter().sum::<u64>(), dim);
        }
    }
}
