//! Elimination, saturation and intersection.

use super::{buchberger, Ideal};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Generators of `I ∩ k[kept variables]`. The result keeps the arity of `I`;
/// its generators do not involve the dropped variables.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let n = ideal.arity();
    let mut drop: Vec<usize> = drop.to_vec();
    drop.sort_unstable();
    drop.dedup();
    if drop.iter().any(|&i| i >= n) || drop.len() >= n {
        return Err(Error::Precondition(
            "dropped variables must be a proper subset".into(),
        ));
    }
    let k = drop.len();
    // new variable i is old variable perm[i]: dropped ones first
    let perm: Vec<usize> = drop
        .iter()
        .copied()
        .chain((0..n).filter(|i| !drop.contains(i)))
        .collect();
    let permuted: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.permute_variables(&perm))
        .collect();
    let gens = eliminate_leading_block(Ideal::new(ideal.field(), n, permuted), k);
    let back: Vec<Polynomial> = gens
        .into_iter()
        .map(|g| {
            g.map_exponents(n, |e| {
                let mut out = crate::monomial::ExponentVector::zero(n);
                for (i, &old) in perm.iter().enumerate() {
                    out.set(old, e.exponent(i));
                }
                out
            })
        })
        .collect();
    Ok(Ideal::new(ideal.field(), n, back))
}

/// Elements of the block-elimination basis free of the first `k` variables.
fn eliminate_leading_block(ideal: Ideal, k: usize) -> Vec<Polynomial> {
    let gb = buchberger(&ideal, MonomialOrder::Elimination(k));
    gb.elements()
        .iter()
        .filter(|g| (0..k).all(|i| !g.uses_variable(i)))
        .cloned()
        .collect()
}

/// Saturation `I : g^∞`, computed as `(I + <1 - t g>) ∩ k[x]`.
pub fn saturate(ideal: &Ideal, g: &Polynomial) -> Ideal {
    assert!(!g.is_zero(), "saturation by the zero polynomial");
    assert_eq!(g.arity(), ideal.arity());
    let (field, n) = (ideal.field(), ideal.arity());
    if ideal.is_zero() {
        return ideal.clone();
    }
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|f| f.insert_variables(0, 1))
        .collect();
    let t = Polynomial::variable(field, n + 1, 0);
    gens.push(&Polynomial::one(field, n + 1) - &(&t * &g.insert_variables(0, 1)));
    let kept = eliminate_leading_block(Ideal::new(field, n + 1, gens), 1);
    Ideal::new(
        field,
        n,
        kept.iter().map(|p| p.remove_variable(0)).collect(),
    )
}

/// `I ∩ J`, computed as `(t I + (1 - t) J) ∩ k[x]`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Ideal {
    assert_eq!(
        i.arity(),
        j.arity(),
        "intersection of ideals with different arity"
    );
    let (field, n) = (i.field(), i.arity());
    if i.is_zero() || j.is_zero() {
        return Ideal::new(field, n, vec![]);
    }
    let t = Polynomial::variable(field, n + 1, 0);
    let one_minus_t = &Polynomial::one(field, n + 1) - &t;
    let mut gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|f| &t * &f.insert_variables(0, 1))
        .collect();
    gens.extend(
        j.generators()
            .iter()
            .map(|f| &one_minus_t * &f.insert_variables(0, 1)),
    );
    let kept = eliminate_leading_block(Ideal::new(field, n + 1, gens), 1);
    Ideal::new(
        field,
        n,
        kept.iter().map(|p| p.remove_variable(0)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
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
    fn eliminate_examples() {
        // variables (t, x0, x1) as (x0, x1, x2)
        let i = ideal(&["x0*x1 - 1", "x0*x2"], 3);
        let e = eliminate(&i, &[0]).unwrap();
        assert!(e.same_ideal(&ideal(&["x2"], 3)));
        // x1 = -x1*(t*x0 - 1) + x0*(t*x1): membership of the eliminant in I
        let cert = &(&p("-x2", 3) * &p("x0*x1 - 1", 3)) + &(&p("x1", 3) * &p("x0*x2", 3));
        assert_eq!(cert, p("x2", 3));

        let i = ideal(&["x1 - x0", "x2 - x0"], 3);
        assert!(eliminate(&i, &[0])
            .unwrap()
            .same_ideal(&ideal(&["x1 - x2"], 3)));

        let i = ideal(&["x1^2 - x2", "x2^3"], 3);
        assert!(eliminate(&i, &[0]).unwrap().same_ideal(&i));
        assert!(eliminate(&i, &[0, 1, 2]).is_err());
    }

    #[test]
    fn eliminate_middle_variable() {
        let i = ideal(&["x0 - x1^2", "x2 - x1^3"], 3);
        let e = eliminate(&i, &[1]).unwrap();
        assert!(e.same_ideal(&ideal(&["x0^3 - x2^2"], 3)));
    }

    #[test]
    fn saturate_examples() {
        let s = saturate(&ideal(&["x0^2*x1"], 3), &p("x0", 3));
        assert!(s.same_ideal(&ideal(&["x1"], 3)));
        let s = saturate(&ideal(&["x0*x1", "x0*x2"], 3), &p("x0", 3));
        assert!(s.same_ideal(&ideal(&["x1", "x2"], 3)));
        let s = saturate(&ideal(&["x1"], 3), &p("x0", 3));
        assert!(s.same_ideal(&ideal(&["x1"], 3)));
        assert!(s.is_homogeneous());
    }

    #[test]
    fn saturation_is_idempotent() {
        let i = ideal(&["x0^3*x1 - x0^2*x2^2", "x0*x1*x2"], 3);
        let g = p("x0 + x1", 3);
        let once = saturate(&i, &g);
        let twice = saturate(&once, &g);
        assert!(once.same_ideal(&twice));
    }

    #[test]
    fn intersect_examples() {
        let r = intersect(&ideal(&["x0"], 2), &ideal(&["x1"], 2));
        assert!(r.same_ideal(&ideal(&["x0*x1"], 2)));
        let i = ideal(&["x0^2 + x1", "x1^2"], 2);
        assert!(intersect(&i, &i).same_ideal(&i));
        let r = intersect(&ideal(&["x0", "x1"], 2), &ideal(&["x0", "x1 - 1"], 2));
        let expected = ideal(&["x0", "x1^2 - x1"], 2);
        // both containments by normal forms
        for g in expected.generators() {
            assert!(r.contains(g));
        }
        for g in r.generators() {
            assert!(expected.contains(g));
        }
    }
}
