//! Plane-curve invariants and the degree formula
//! `deg T_f = k^2 - sum mu_p - i - t` for reduced plane curves without
//! coordinate-line components.
//!
//! [`total_milnor`] reads the sum of Milnor numbers off the degree of the
//! singular scheme, which counts Tjurina numbers. The two agree for
//! quasi-homogeneous singularities (nodes, cusps, ordinary multiple points),
//! and inputs are expected to be of that kind.

use serde::Serialize;

use crate::gcd::{binary_form_distinct_roots, gcd, squarefree_part, univariate_squarefree};
use crate::groebner::{
    eliminate, hilbert_dim_degree, intersect, saturate, vector_space_dimension, Ideal,
};
use crate::maps::{topological_degree, toric_polar_map, RandomizationConfig};
use crate::monomial::{ExponentVector, MonomialOrder};
use crate::poly::Polynomial;
use crate::{Error, Result};

const REDUCEDNESS_SEED: u64 = 0x5eed_c0de;

/// Components of the plane degree formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneCurveReport {
    pub k: u32,
    pub milnor_sum: u64,
    pub incidence: u32,
    pub tangency: u32,
    pub degree_formula: i64,
    /// Distinct intersection points with `x_j = 0`, for `j = 0, 1, 2`.
    pub per_line: [u32; 3],
}

fn check_plane_curve(f: &Polynomial) -> Result<u32> {
    if f.arity() != 3 {
        return Err(Error::Precondition(format!(
            "plane curve needs 3 variables, got {}",
            f.arity()
        )));
    }
    let k = f.homogeneous_degree()?;
    if k == 0 {
        return Err(Error::Precondition("curve equation is constant".into()));
    }
    if let Some(i) = (0..3).find(|&i| f.divisible_by_variable(i)) {
        return Err(Error::Precondition(format!(
            "curve contains the coordinate line x{i} = 0"
        )));
    }
    Ok(k)
}

/// Number of fundamental points `(1:0:0), (0:1:0), (0:0:1)` on the curve.
pub fn fundamental_incidence(f: &Polynomial) -> Result<u32> {
    let k = check_plane_curve(f)?;
    Ok((0..3)
        .filter(|&i| {
            let mut e = ExponentVector::zero(3);
            e.set(i, k);
            f.coefficient(&e) == 0
        })
        .count() as u32)
}

/// Distinct points of the curve on each coordinate line.
pub fn per_line_intersections(f: &Polynomial) -> Result<[u32; 3]> {
    check_plane_curve(f)?;
    let mut out = [0u32; 3];
    for (j, slot) in out.iter_mut().enumerate() {
        let restricted = f.restrict_to_hyperplane(j);
        let kept: Vec<usize> = (0..3).filter(|&i| i != j).collect();
        *slot = binary_form_distinct_roots(&restricted, (kept[0], kept[1]))?;
    }
    Ok(out)
}

/// `sum_j sum_{p in C ∩ H_j} (I_p(C, H_j) - 1)`, computed line by line as
/// `k` minus the number of distinct intersection points.
pub fn tangency_contribution(f: &Polynomial) -> Result<u32> {
    let k = check_plane_curve(f)?;
    Ok(per_line_intersections(f)?.iter().map(|&d| k - d).sum())
}

/// Milnor number of the curve at the rational point `p`, given by integer
/// projective coordinates.
pub fn milnor_at_point(f: &Polynomial, p: &[i64]) -> Result<u64> {
    check_plane_curve(f)?;
    let field = f.field();
    if p.len() != 3 {
        return Err(Error::Precondition("point needs 3 coordinates".into()));
    }
    let coords: Vec<u64> = p.iter().map(|&c| field.from_i64(c)).collect();
    let Some(chart) = coords.iter().position(|&c| c != 0) else {
        return Err(Error::Precondition("point has all coordinates zero".into()));
    };
    if f.evaluate(&coords) != 0 {
        return Err(Error::Precondition(
            "point does not lie on the curve".into(),
        ));
    }
    // affine chart x_chart = 1 with p moved to the origin
    let scale = field.inv(coords[chart]);
    let affine: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    let images: Vec<Polynomial> = (0..3)
        .map(|i| match affine.iter().position(|&a| a == i) {
            None => Polynomial::one(field, 2),
            Some(slot) => {
                let shift = Polynomial::constant(field, 2, field.mul(coords[i], scale));
                &Polynomial::variable(field, 2, slot) + &shift
            }
        })
        .collect();
    let local = f.substitute(&images);
    let jac = Ideal::new(field, 2, vec![local.derivative(0), local.derivative(1)]);
    let total = vector_space_dimension(&jac).map_err(|_| {
        Error::PositiveDimensional("affine Jacobian ideal; singularity is not isolated".into())
    })?;
    let away = intersect(
        &saturate(&jac, &Polynomial::variable(field, 2, 0)),
        &saturate(&jac, &Polynomial::variable(field, 2, 1)),
    );
    Ok(total - vector_space_dimension(&away)?)
}

/// Sum of the Milnor numbers over all singular points, read off the degree
/// of the singular scheme `V(f, f_x0, f_x1, f_x2)`.
pub fn total_milnor(f: &Polynomial) -> Result<u64> {
    check_plane_curve(f)?;
    let mut gens: Vec<Polynomial> = (0..3).map(|i| f.derivative(i)).collect();
    gens.push(f.clone());
    let data = hilbert_dim_degree(&Ideal::new(f.field(), 3, gens))?;
    match data.projective_dimension {
        -1 => Ok(0),
        0 => Ok(data.degree_or_zero()),
        _ => Err(Error::PositiveDimensional(
            "singular locus; the curve is not reduced".into(),
        )),
    }
}

fn is_reduced(f: &Polynomial) -> Result<bool> {
    Ok(squarefree_part(f, REDUCEDNESS_SEED)?.total_degree() == f.total_degree())
}

/// `k^2 - sum mu_p - i - t` together with its components.
pub fn plane_degree_formula(f: &Polynomial) -> Result<PlaneCurveReport> {
    let k = check_plane_curve(f)?;
    if !is_reduced(f)? {
        return Err(Error::Precondition("curve is not reduced".into()));
    }
    let milnor_sum = total_milnor(f)?;
    let incidence = fundamental_incidence(f)?;
    let per_line = per_line_intersections(f)?;
    let tangency = per_line.iter().map(|&d| k - d).sum::<u32>();
    let degree_formula = (k as i64).pow(2) - milnor_sum as i64 - incidence as i64 - tangency as i64;
    Ok(PlaneCurveReport {
        k,
        milnor_sum,
        incidence,
        tangency,
        degree_formula,
        per_line,
    })
}

/// Number of distinct points of `V(f) ∩ V(g)` off the coordinate triangle.
pub fn distinct_intersections_off_h(f: &Polynomial, g: &Polynomial) -> Result<u64> {
    check_plane_curve(f)?;
    check_plane_curve(g)?;
    if !gcd(f, g).is_constant() {
        return Err(Error::Precondition("curves share a component".into()));
    }
    let field = f.field();
    let triangle = Polynomial::from_terms(field, 3, [(ExponentVector::from_slice(&[1, 1, 1]), 1)]);
    let sat = saturate(&Ideal::new(field, 3, vec![f.clone(), g.clone()]), &triangle);
    // every surviving point has x0 != 0
    let affine: Vec<Polynomial> = sat
        .generators()
        .iter()
        .map(|p| p.dehomogenize(0).remove_variable(0))
        .collect();
    let ideal = Ideal::new(field, 2, affine);
    if ideal.groebner_basis(MonomialOrder::GrevLex).is_unit() {
        return Ok(0);
    }
    let mut radical = ideal.clone();
    for v in 0..2 {
        let elim = eliminate(&ideal, &[1 - v])?;
        let univariate = elim
            .groebner_basis(MonomialOrder::GrevLex)
            .elements()
            .iter()
            .find(|p| !p.is_constant())
            .cloned()
            .ok_or_else(|| Error::PositiveDimensional("intersection".into()))?;
        radical = radical.with_generator(univariate_squarefree(&univariate, v));
    }
    vector_space_dimension(&radical)
}

/// Whether `deg T_{fg} = deg T_f + deg T_g + #(V(f) ∩ V(g) \ H)`.
pub fn reducible_composition_check(
    f: &Polynomial,
    g: &Polynomial,
    cfg: &RandomizationConfig,
) -> Result<bool> {
    let off_h = distinct_intersections_off_h(f, g)?;
    let deg = |p: &Polynomial| topological_degree(&toric_polar_map(p)?, cfg);
    Ok(deg(&(f * g))? == deg(f)? + deg(g)? + off_h)
}
