//! Families of hypersurfaces with known toric polar behavior, monomial
//! matrices, and the corpus-driven verification harness.

mod harness;
mod manifest;

pub use harness::{
    verify_constructions, verify_corpus, verify_propositions, CheckOutcome, HarnessOptions, Report,
};
pub use manifest::{default_corpus, Corpus, CorpusEntry};

use rand::Rng;

use crate::field::PrimeField;
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Square matrix of nonnegative exponents whose rows all sum to `k`; row `i`
/// is the exponent vector of the `i`-th monomial of `phi_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    rows: Vec<Vec<u32>>,
    k: u32,
}

impl MonomialMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let size = rows.len();
        if size < 2 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidMatrix(
                "matrix must be square of size at least 2".into(),
            ));
        }
        let k: u32 = rows[0].iter().sum();
        if k == 0 {
            return Err(Error::InvalidMatrix("row sums must be positive".into()));
        }
        if rows.iter().any(|r| r.iter().sum::<u32>() != k) {
            return Err(Error::InvalidMatrix("rows have different sums".into()));
        }
        if (0..size).any(|j| rows.iter().all(|r| r[j] > 0)) {
            return Err(Error::InvalidMatrix(
                "monomials share a common factor".into(),
            ));
        }
        Ok(MonomialMatrix { rows, k })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Common row sum, the degree of the monomials.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Exact integer determinant (fraction-free elimination).
    pub fn determinant(&self) -> i128 {
        let n = self.size();
        let mut m: Vec<Vec<i128>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
                return 0;
            };
            if pivot != col {
                m.swap(pivot, col);
                sign = -sign;
            }
            for r in (col + 1)..n {
                for c in (col + 1)..n {
                    m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
                }
                m[r][col] = 0;
            }
            prev = m[col][col];
        }
        sign * m[n - 1][n - 1]
    }

    /// `phi_A` is birational exactly when `|det A| = k`.
    pub fn is_invertible(&self) -> bool {
        self.determinant().unsigned_abs() == self.k as u128
    }

    /// Rejection-samples a valid invertible matrix of size `n + 1` with row
    /// sum `k`.
    pub fn random_invertible<R: Rng + ?Sized>(n: usize, k: u32, rng: &mut R) -> Result<Self> {
        for _ in 0..100_000 {
            let rows: Vec<Vec<u32>> = (0..=n)
                .map(|_| {
                    let mut row = vec![0u32; n + 1];
                    for _ in 0..k {
                        row[rng.gen_range(0..=n)] += 1;
                    }
                    row
                })
                .collect();
            if let Ok(a) = MonomialMatrix::new(rows) {
                if a.is_invertible() {
                    return Ok(a);
                }
            }
        }
        Err(Error::DegenerateRandom(format!(
            "no invertible {}x{} matrix with row sum {k}",
            n + 1,
            n + 1
        )))
    }
}

/// `f + m * x_{n+1}` in one more variable, for `m` a monomial of degree
/// `deg f - 1`.
pub fn pyramid(f: &Polynomial, m: &Polynomial) -> Result<Polynomial> {
    let k = f.homogeneous_degree()?;
    if m.num_terms() != 1 || m.arity() != f.arity() {
        return Err(Error::Precondition(
            "pyramid needs a single monomial in the same variables".into(),
        ));
    }
    if m.total_degree() != Some(k - 1) {
        return Err(Error::Precondition(format!(
            "monomial must have degree {}",
            k - 1
        )));
    }
    let n1 = f.arity();
    let apex = Polynomial::variable(f.field(), n1 + 1, n1);
    Ok(&f.insert_variables(n1, 1) + &(&m.insert_variables(n1, 1) * &apex))
}

/// `sum_j x_0 ... x_{j-1} x_{j+1} ... x_n`.
pub fn cremona_poly(n: usize, field: PrimeField) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok(Polynomial::from_terms(
        field,
        n + 1,
        (0..=n).map(|j| {
            (
                (0..=n).map(|i| (i != j) as u32).collect::<ExponentVector>(),
                1,
            )
        }),
    ))
}

/// `x_1^2 + x_0 x_1 + x_0 x_2 + ... + x_0 x_n`.
pub fn dolgachev_quadric(n: usize, field: PrimeField) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let x = |i| Polynomial::variable(field, n + 1, i);
    let mut q = &x(1) * &x(1);
    for i in 1..=n {
        q = &q + &(&x(0) * &x(i));
    }
    Ok(q)
}

/// The three families of hypersurfaces with birational toric polar maps
/// built from plane curves by repeated pyramids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x_1^2 + x_1 x_2 + x_0 (x_1 + ... + x_n)`
    A,
    /// `(x_0 + x_1)^k + x_1^{k-1} x_2 + ... + x_{n-1}^{k-1} x_n`
    B,
    /// `(x_0^2 + x_1^2 + x_2^2 - 2x_0x_1 - 2x_0x_2 - 2x_1x_2) + x_2 x_3 + ... + x_{n-1} x_n`
    C,
}

pub fn example_family(which: Family, n: usize, k: u32, field: PrimeField) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::Precondition(
            "families are defined for n >= 2".into(),
        ));
    }
    let x = |i| Polynomial::variable(field, n + 1, i);
    let c = |v: i64| Polynomial::constant(field, n + 1, field.from_i64(v));
    Ok(match which {
        Family::A => {
            let sum = (1..=n).fold(Polynomial::zero(field, n + 1), |acc, i| &acc + &x(i));
            &(&(&x(1) * &x(1)) + &(&x(1) * &x(2))) + &(&x(0) * &sum)
        }
        Family::B => {
            if k < 1 {
                return Err(Error::Precondition("family (b) needs k >= 1".into()));
            }
            let mut f = (&x(0) + &x(1)).pow(k);
            for i in 1..n {
                f = &f + &(&x(i).pow(k - 1) * &x(i + 1));
            }
            f
        }
        Family::C => {
            let mut f = &(&(&x(0) * &x(0)) + &(&x(1) * &x(1))) + &(&x(2) * &x(2));
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                f = &f + &(&c(-2) * &(&x(a) * &x(b)));
            }
            for i in 2..n {
                f = &f + &(&x(i) * &x(i + 1));
            }
            f
        }
    })
}

/// `g_A = phi_A^*(x_0 + ... + x_n)`, the sum of the row monomials.
pub fn monomial_sum_polynomial(a: &MonomialMatrix, field: PrimeField) -> Result<Polynomial> {
    if !a.is_invertible() {
        return Err(Error::InvalidMatrix(format!(
            "|det A| = {} differs from k = {}",
            a.determinant().unsigned_abs(),
            a.k()
        )));
    }
    Ok(Polynomial::from_terms(
        field,
        a.size(),
        a.rows().iter().map(|r| (ExponentVector::from_slice(r), 1)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use rand::SeedableRng;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &Polynomial::default_names(n), PrimeField::default()).unwrap()
    }

    #[test]
    fn determinant_and_validity() {
        let cremona =
            MonomialMatrix::new(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(cremona.determinant(), 2);
        assert!(cremona.is_invertible());
        let q = MonomialMatrix::new(vec![vec![0, 2, 0], vec![1, 1, 0], vec![1, 0, 1]]).unwrap();
        assert_eq!(q.determinant(), -2);
        assert!(q.is_invertible());
        assert!(MonomialMatrix::new(vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1]]).is_err());
        let singular =
            MonomialMatrix::new(vec![vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(singular.determinant(), 0);
        assert!(MonomialMatrix::new(vec![vec![1, 1], vec![2, 0]]).is_err());
        assert!(MonomialMatrix::new(vec![vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 0]]).is_err());
        let four = MonomialMatrix::new(vec![
            vec![0, 0, 1, 2],
            vec![3, 0, 0, 0],
            vec![0, 3, 0, 0],
            vec![1, 1, 1, 0],
        ])
        .unwrap();
        // cofactor expansion by hand: det = -(3*3*... ) computed independently
        assert_eq!(four.determinant(), laplace(four.rows()));
    }

    fn laplace(m: &[Vec<u32>]) -> i128 {
        if m.len() == 1 {
            return m[0][0] as i128;
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<u32>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * laplace(&minor)
            })
            .sum()
    }

    #[test]
    fn random_matrices_are_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for k in 1..=3 {
            let a = MonomialMatrix::random_invertible(2, k, &mut rng).unwrap();
            assert_eq!(a.k(), k);
            assert_eq!(a.determinant().unsigned_abs(), k as u128);
            assert_eq!(a.determinant(), laplace(a.rows()));
        }
    }

    #[test]
    fn pyramid_examples() {
        let q2 = p("x1^2 + x0*x1 + x0*x2", 3);
        let q3 = pyramid(&q2, &p("x0", 3)).unwrap();
        assert_eq!(q3, p("x1^2 + x0*x1 + x0*x2 + x0*x3", 4));
        let line = p("x0 + x1", 2);
        assert_eq!(pyramid(&line, &p("1", 2)).unwrap(), p("x0 + x1 + x2", 3));
        assert!(pyramid(&q2, &p("x0^2", 3)).is_err());
        assert!(pyramid(&q2, &p("x0 + x1", 3)).is_err());
    }

    #[test]
    fn named_polynomials() {
        let field = PrimeField::default();
        assert_eq!(
            cremona_poly(2, field).unwrap(),
            p("x1*x2 + x0*x2 + x0*x1", 3)
        );
        assert_eq!(cremona_poly(1, field).unwrap(), p("x0 + x1", 2));
        assert_eq!(
            dolgachev_quadric(2, field).unwrap(),
            p("x1^2 + x0*x1 + x0*x2", 3)
        );
        assert_eq!(dolgachev_quadric(1, field).unwrap(), p("x1^2 + x0*x1", 2));
        assert_eq!(
            example_family(Family::A, 3, 1, field).unwrap(),
            p("x1^2 + x1*x2 + x0*(x1 + x2 + x3)", 4)
        );
        assert_eq!(
            example_family(Family::B, 2, 2, field).unwrap(),
            p("(x0 + x1)^2 + x1*x2", 3)
        );
        assert_eq!(
            example_family(Family::C, 3, 1, field).unwrap(),
            p(
                "x0^2 + x1^2 + x2^2 - 2*x0*x1 - 2*x0*x2 - 2*x1*x2 + x2*x3",
                4
            )
        );
        assert!(example_family(Family::A, 1, 1, field).is_err());
        assert!(example_family(Family::B, 2, 0, field).is_err());
    }

    #[test]
    fn families_are_iterated_pyramids() {
        let field = PrimeField::default();
        for n in 2..4 {
            let a = example_family(Family::A, n, 1, field).unwrap();
            let twice = pyramid(&pyramid(&a, &p("x0", n + 1)).unwrap(), &p("x0", n + 2)).unwrap();
            assert_eq!(twice, example_family(Family::A, n + 2, 1, field).unwrap());

            let b = example_family(Family::B, n, 3, field).unwrap();
            let m = Polynomial::variable(field, n + 1, n).pow(2);
            assert_eq!(
                pyramid(&b, &m).unwrap(),
                example_family(Family::B, n + 1, 3, field).unwrap()
            );

            let c = example_family(Family::C, n, 1, field).unwrap();
            let m = Polynomial::variable(field, n + 1, n);
            assert_eq!(
                pyramid(&c, &m).unwrap(),
                example_family(Family::C, n + 1, 1, field).unwrap()
            );
        }
    }

    #[test]
    fn monomial_sums() {
        let field = PrimeField::default();
        let id = MonomialMatrix::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            monomial_sum_polynomial(&id, field).unwrap(),
            p("x0 + x1 + x2", 3)
        );
        let cremona =
            MonomialMatrix::new(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(
            monomial_sum_polynomial(&cremona, field).unwrap(),
            cremona_poly(2, field).unwrap()
        );
        let q = MonomialMatrix::new(vec![vec![0, 2, 0], vec![1, 1, 0], vec![1, 0, 1]]).unwrap();
        assert_eq!(
            monomial_sum_polynomial(&q, field).unwrap(),
            dolgachev_quadric(2, field).unwrap()
        );
        let singular =
            MonomialMatrix::new(vec![vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 0]]).unwrap();
        assert!(monomial_sum_polynomial(&singular, field).is_err());
    }
}
