//! Rational self-maps of projective space: toric polar and gradient maps and
//! the randomized multidegree algorithm.
//!
//! The multidegree `d_j` is the degree of the closure of the preimage of a
//! general codimension-`j` linear subspace. It is computed by restricting `j`
//! general combinations of the coordinates to a general `P^j` in the source,
//! then saturating by one further general combination to discard the base
//! locus. What remains is a finite set of points whose degree is `d_j`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::MonomialMatrix;
use crate::field::{mix_seed, PrimeField, DEFAULT_PRIME};
use crate::gcd::{exact_div, gcd, squarefree_part};
use crate::groebner::{hilbert_dim_degree, saturate, Ideal};
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Seed used for the direction of the squarefree-part computation. The
/// result is verified, so a fixed seed keeps map construction deterministic.
const REDUCTION_SEED: u64 = 0x7e57_ab1e;
const EMBEDDING_ATTEMPTS: usize = 8;
const TRANSLATE_ATTEMPTS: usize = 8;

/// Prime, master seed and number of independent trials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RandomizationConfig {
    pub prime: u64,
    pub seed: u64,
    pub trials: u32,
}

impl Default for RandomizationConfig {
    fn default() -> Self {
        RandomizationConfig {
            prime: DEFAULT_PRIME,
            seed: 1,
            trials: 2,
        }
    }
}

impl RandomizationConfig {
    pub fn new(prime: u64, seed: u64, trials: u32) -> Result<Self> {
        if trials == 0 {
            return Err(Error::Precondition("trials must be at least 1".into()));
        }
        PrimeField::new(prime)?;
        Ok(RandomizationConfig {
            prime,
            seed,
            trials,
        })
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime)
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        RandomizationConfig { seed, ..*self }
    }
}

/// `n + 1` homogeneous coordinates of equal degree with no common factor,
/// defining a rational map `P^n --> P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMapSpec {
    coordinates: Vec<Polynomial>,
    degree: u32,
}

impl RationalMapSpec {
    /// Validates the coordinates and divides out their common factor.
    pub fn new(coordinates: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = coordinates.first() else {
            return Err(Error::Precondition("a map needs coordinates".into()));
        };
        let arity = first.arity();
        if coordinates.len() != arity || arity < 2 {
            return Err(Error::Precondition(format!(
                "a self-map of P^n needs n + 1 >= 2 coordinates in n + 1 variables, got {} in {}",
                coordinates.len(),
                arity
            )));
        }
        if coordinates
            .iter()
            .any(|c| c.arity() != arity || c.field() != first.field())
        {
            return Err(Error::Precondition(
                "coordinates live in different rings".into(),
            ));
        }
        let nonzero: Vec<&Polynomial> = coordinates.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::Precondition("all coordinates vanish".into()));
        }
        let degree = nonzero[0].homogeneous_degree()?;
        for c in &nonzero {
            if c.homogeneous_degree()? != degree {
                return Err(Error::Precondition(
                    "coordinates have different degrees".into(),
                ));
            }
        }
        let common = nonzero
            .iter()
            .skip(1)
            .fold(nonzero[0].monic(), |acc, c| gcd(&acc, c));
        if common.is_constant() {
            return Ok(RationalMapSpec {
                coordinates,
                degree,
            });
        }
        let coordinates: Vec<Polynomial> = coordinates
            .iter()
            .map(|c| exact_div(c, &common).expect("common factor divides"))
            .collect();
        let degree = degree - common.total_degree().unwrap_or(0);
        Ok(RationalMapSpec {
            coordinates,
            degree,
        })
    }

    /// Dimension `n` of the projective space.
    pub fn n(&self) -> usize {
        self.coordinates.len() - 1
    }

    pub fn coordinates(&self) -> &[Polynomial] {
        &self.coordinates
    }

    /// Common degree of the reduced coordinates.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> PrimeField {
        self.coordinates[0].field()
    }

    /// Do the two maps agree up to a common nonzero scalar?
    pub fn projectively_eq(&self, other: &RationalMapSpec) -> bool {
        if self.coordinates.len() != other.coordinates.len() {
            return false;
        }
        let field = self.field();
        let pivot = self.coordinates.iter().position(|c| !c.is_zero());
        let Some(i) = pivot else { return false };
        let (a, b) = (&self.coordinates[i], &other.coordinates[i]);
        let Some((e, ca)) = a.leading_term(crate::MonomialOrder::GrevLex) else {
            return false;
        };
        let cb = b.coefficient(e);
        if cb == 0 {
            return false;
        }
        let lambda = field.mul(ca, field.inv(cb));
        self.coordinates
            .iter()
            .zip(&other.coordinates)
            .all(|(x, y)| *x == y.scale(lambda))
    }
}

/// Multidegrees `d_0, ..., d_n` of a rational map; `d_n` is its topological
/// degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MultidegreeVector(pub Vec<u64>);

impl MultidegreeVector {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn topological_degree(&self) -> u64 {
        *self.0.last().expect("nonempty")
    }

    /// A zero strictly between two nonzero entries.
    pub fn has_internal_zeros(&self) -> bool {
        let first = self.0.iter().position(|&d| d != 0);
        let last = self.0.iter().rposition(|&d| d != 0);
        match (first, last) {
            (Some(a), Some(b)) => self.0[a..=b].iter().any(|&d| d == 0),
            _ => false,
        }
    }
}

fn check_toric_input(f: &Polynomial) -> Result<u32> {
    let k = f.homogeneous_degree()?;
    if k == 0 {
        return Err(Error::Precondition("polynomial is constant".into()));
    }
    if let Some(i) = (0..f.arity()).find(|&i| f.divisible_by_variable(i)) {
        return Err(Error::Precondition(format!(
            "polynomial is divisible by the coordinate variable x{i}; strip it first"
        )));
    }
    Ok(k)
}

/// The toric polar map `x -> (x_0 f_{x_0} : ... : x_n f_{x_n})` of the
/// squarefree part of `f`.
pub fn toric_polar_map(f: &Polynomial) -> Result<RationalMapSpec> {
    check_toric_input(f)?;
    let reduced = squarefree_part(f, REDUCTION_SEED)?;
    let n1 = f.arity();
    let coords = (0..n1)
        .map(|i| {
            reduced
                .derivative(i)
                .mul_term(&ExponentVector::variable(n1, i), 1)
        })
        .collect();
    RationalMapSpec::new(coords)
}

/// The gradient map `x -> (f_{x_0} : ... : f_{x_n})` of the squarefree part
/// of `f`.
pub fn gradient_map(f: &Polynomial) -> Result<RationalMapSpec> {
    let k = f.homogeneous_degree()?;
    if k < 2 {
        return Err(Error::Precondition(
            "gradient map needs degree at least 2".into(),
        ));
    }
    let reduced = squarefree_part(f, REDUCTION_SEED)?;
    RationalMapSpec::new((0..f.arity()).map(|i| reduced.derivative(i)).collect())
}

fn random_combination<R: rand::Rng>(coords: &[Polynomial], rng: &mut R) -> Polynomial {
    let field = coords[0].field();
    coords
        .iter()
        .fold(Polynomial::zero(field, coords[0].arity()), |acc, q| {
            &acc + &q.scale(field.random(rng))
        })
}

/// Degree of one slice: the preimage of a general codimension-`j` subspace
/// cut with a general `P^j`.
fn slice_degree(map: &RationalMapSpec, j: usize, seed: u64) -> Result<u64> {
    let field = map.field();
    let n = map.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // general linear embedding P^j -> P^n, x = M y
    let mut embedding = None;
    for _ in 0..EMBEDDING_ATTEMPTS {
        let m: Vec<Vec<u64>> = (0..=n)
            .map(|_| (0..=j).map(|_| field.random(&mut rng)).collect())
            .collect();
        if field.rank(&m) == j + 1 {
            embedding = Some(m);
            break;
        }
    }
    let m = embedding.ok_or_else(|| Error::DegenerateRandom("no full-rank embedding".into()))?;
    let images: Vec<Polynomial> = m
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                field,
                j + 1,
                row.iter()
                    .enumerate()
                    .map(|(k, &c)| (ExponentVector::variable(j + 1, k), c)),
            )
        })
        .collect();

    let coords = map.coordinates();
    let sections: Vec<Polynomial> = (0..j)
        .map(|_| random_combination(coords, &mut rng).substitute(&images))
        .collect();
    let excision = random_combination(coords, &mut rng).substitute(&images);
    if excision.is_zero() {
        return Err(Error::DegenerateRandom(format!(
            "slice {j}: excising combination vanishes"
        )));
    }
    let ideal = Ideal::new(field, j + 1, sections);
    let saturated = saturate(&ideal, &excision);
    let data = hilbert_dim_degree(&saturated)?;
    match data.projective_dimension {
        -1 => Ok(0),
        0 => Ok(data.degree_or_zero()),
        d => Err(Error::SliceNotFinite(format!(
            "slice {j} has projective dimension {d}"
        ))),
    }
}

/// Multidegrees of `map`, computed independently `cfg.trials` times; the
/// trials must agree.
pub fn multidegrees(map: &RationalMapSpec, cfg: &RandomizationConfig) -> Result<MultidegreeVector> {
    if cfg.trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    if map.field().modulus() != cfg.prime {
        return Err(Error::Precondition(format!(
            "map is defined over F_{}, configuration asks for F_{}",
            map.field().modulus(),
            cfg.prime
        )));
    }
    let n = map.n();
    let tasks: Vec<(u32, usize)> = (0..cfg.trials)
        .flat_map(|t| (0..=n).map(move |j| (t, j)))
        .collect();
    let results: Vec<Result<u64>> = tasks
        .par_iter()
        .map(|&(t, j)| slice_degree(map, j, mix_seed(cfg.seed, &[j as u64, t as u64])))
        .collect();

    let mut trials: Vec<Vec<u64>> = Vec::with_capacity(cfg.trials as usize);
    for chunk in results.chunks(n + 1) {
        trials.push(chunk.iter().cloned().collect::<Result<Vec<u64>>>()?);
    }
    if let Some(t) = trials.iter().position(|v| *v != trials[0]) {
        return Err(Error::TrialDisagreement(format!(
            "seed {} prime {}: trial 0 gave {:?}, trial {} gave {:?}",
            cfg.seed, cfg.prime, trials[0], t, trials[t]
        )));
    }
    let d = MultidegreeVector(trials.swap_remove(0));
    if d.0[0] != 1 || d.0[1] != map.degree() as u64 {
        return Err(Error::DegenerateRandom(format!(
            "multidegrees {:?} violate d_0 = 1, d_1 = {}",
            d.0,
            map.degree()
        )));
    }
    Ok(d)
}

/// `d_n`, zero exactly when the map is not dominant.
pub fn topological_degree(map: &RationalMapSpec, cfg: &RandomizationConfig) -> Result<u64> {
    Ok(multidegrees(map, cfg)?.topological_degree())
}

/// `f(M x)` for a square matrix `M` (row `i` gives the image of `x_i`).
pub fn linear_substitution(f: &Polynomial, matrix: &[Vec<u64>]) -> Polynomial {
    let (field, n1) = (f.field(), f.arity());
    assert_eq!(matrix.len(), n1, "matrix size must match arity");
    let images: Vec<Polynomial> = matrix
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                field,
                n1,
                row.iter()
                    .enumerate()
                    .map(|(k, &c)| (ExponentVector::variable(n1, k), c)),
            )
        })
        .collect();
    f.substitute(&images)
}

/// A general translate of `f`: composition with a random invertible matrix.
pub fn random_translate(f: &Polynomial, seed: u64) -> Result<Polynomial> {
    f.homogeneous_degree()?;
    let field = f.field();
    let n1 = f.arity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TRANSLATE_ATTEMPTS {
        let m: Vec<Vec<u64>> = (0..n1)
            .map(|_| (0..n1).map(|_| field.random(&mut rng)).collect())
            .collect();
        if field.rank(&m) == n1 {
            return Ok(linear_substitution(f, &m));
        }
    }
    Err(Error::DegenerateRandom("no invertible matrix found".into()))
}

/// `phi_A^*(f)`: substitutes `x_i` by the monomial with exponents row `i` of `A`.
pub fn monomial_pullback(f: &Polynomial, a: &MonomialMatrix) -> Result<Polynomial> {
    if a.size() != f.arity() {
        return Err(Error::InvalidMatrix(format!(
            "matrix of size {} for a polynomial in {} variables",
            a.size(),
            f.arity()
        )));
    }
    let images: Vec<Polynomial> = a
        .rows()
        .iter()
        .map(|row| Polynomial::monomial(f.field(), ExponentVector::from_slice(row), 1))
        .collect();
    Ok(f.substitute(&images))
}

/// Divides out the largest monomial dividing `f`.
pub fn strip_monomial_factor(f: &Polynomial) -> Polynomial {
    let Some(content) = f.terms().map(|(e, _)| e.clone()).reduce(|a, b| a.gcd(&b)) else {
        return f.clone();
    };
    f.map_exponents(f.arity(), |e| e.div(&content))
}
