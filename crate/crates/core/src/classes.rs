//! Integer Chow-class vectors on `P^n`: the CSM class of the standard
//! complement, Euler characteristics, and the binomial transforms relating
//! toric polar and gradient multidegrees.

use std::fmt;

use serde::Serialize;

use crate::maps::MultidegreeVector;
use crate::{Error, Result};

/// The class `sum_i c_i h^i ∩ [P^n]`, truncated at `h^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ChowClassVector {
    coefficients: Vec<i64>,
}

impl ChowClassVector {
    /// Panics on an empty coefficient list.
    pub fn new(coefficients: Vec<i64>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "a class on P^n has n + 1 coefficients"
        );
        ChowClassVector { coefficients }
    }

    pub fn zero(n: usize) -> Self {
        ChowClassVector::new(vec![0; n + 1])
    }

    /// The fundamental class `[P^n]`.
    pub fn one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = 1;
        ChowClassVector::new(c)
    }

    /// The hyperplane class `h`.
    pub fn hyperplane(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        if n >= 1 {
            c[1] = 1;
        }
        ChowClassVector::new(c)
    }

    /// Truncated expansion of `(1 + h)^e`; negative `e` uses
    /// `(1 + h)^{-m} = sum_k (-1)^k C(m + k - 1, k) h^k`.
    pub fn one_plus_h_pow(n: usize, e: i64) -> Self {
        let c = (0..=n as i64)
            .map(|k| {
                if e >= 0 {
                    binomial(e, k)
                } else {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binomial(-e + k - 1, k)
                }
            })
            .collect();
        ChowClassVector::new(c)
    }

    pub fn n(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> i64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    /// Degree of the zero-dimensional part, which for a CSM class is the
    /// Euler characteristic.
    pub fn degree(&self) -> i64 {
        self.coefficients[self.n()]
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        ChowClassVector::new(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        ChowClassVector::new(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: i64) -> Self {
        ChowClassVector::new(self.coefficients.iter().map(|a| a * s).collect())
    }

    /// Product truncated at `h^{n+1}`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let n = self.n();
        let mut out = vec![0i64; n + 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coefficients[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ChowClassVector::new(out)
    }

    /// `c(h / (1 + h))`, multiplying each `h^i` by the expansion of
    /// `(1 + h)^{-i}`.
    pub fn substitute_h_over_one_plus_h(&self) -> Self {
        let n = self.n();
        let mut out = ChowClassVector::zero(n);
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut hi = ChowClassVector::zero(n);
            hi.coefficients[i] = 1;
            out = out.add(
                &hi.mul(&ChowClassVector::one_plus_h_pow(n, -(i as i64)))
                    .scale(c),
            );
        }
        out
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.n(),
            other.n(),
            "classes live on different projective spaces"
        );
    }
}

impl fmt::Display for ChowClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "h")?,
                (1, _) => write!(f, "{mag}h")?,
                (_, 1) => write!(f, "h^{i}")?,
                _ => write!(f, "{mag}h^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

fn signed(d: &MultidegreeVector) -> Vec<i64> {
    d.values().iter().map(|&x| x as i64).collect()
}

/// `c_SM(1_U)` for `U = P^n \ (D ∪ H)`: the coefficients are `(-1)^i d_i`
/// for the toric polar multidegrees `d`.
pub fn csm_standard_complement(d: &MultidegreeVector) -> ChowClassVector {
    ChowClassVector::new(
        signed(d)
            .into_iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 0 { x } else { -x })
            .collect(),
    )
}

/// `χ(P^n \ (D ∪ H)) = (-1)^n d_n`.
pub fn euler_standard_complement(d: &MultidegreeVector) -> i64 {
    csm_standard_complement(d).degree()
}

/// `χ(D \ H) = (-1)^{n-1} d_n`.
pub fn euler_hypersurface_off_h(d: &MultidegreeVector) -> i64 {
    -euler_standard_complement(d)
}

/// `c_SM(1_{P^n \ D}) = (1 + h)^n q(h / (1 + h))` with
/// `q(h) = sum (-1)^i g_i h^i` for the gradient multidegrees `g`.
pub fn csm_complement_d_from_gradient(g: &MultidegreeVector) -> ChowClassVector {
    let q = csm_standard_complement(g);
    ChowClassVector::one_plus_h_pow(q.n(), q.n() as i64).mul(&q.substitute_h_over_one_plus_h())
}

/// `d_r = sum_j C(r, j) g_j`.
pub fn binomial_transform(g: &[i64]) -> Vec<i64> {
    (0..g.len() as i64)
        .map(|r| (0..=r).map(|j| binomial(r, j) * g[j as usize]).sum())
        .collect()
}

/// `g_r = sum_j (-1)^{r-j} C(r, j) d_j`, the inverse of [`binomial_transform`].
pub fn inverse_binomial_transform(d: &[i64]) -> Vec<i64> {
    (0..d.len() as i64)
        .map(|r| {
            (0..=r)
                .map(|j| {
                    let s = if (r - j) % 2 == 0 { 1 } else { -1 };
                    s * binomial(r, j) * d[j as usize]
                })
                .sum()
        })
        .collect()
}

fn to_multidegrees(v: Vec<i64>) -> Result<MultidegreeVector> {
    v.iter()
        .map(|&x| u64::try_from(x))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(MultidegreeVector)
        .map_err(|_| Error::Precondition(format!("transform {v:?} has negative entries")))
}

/// Toric polar multidegrees of a general translate from its gradient
/// multidegrees.
pub fn toric_from_gradient(g: &MultidegreeVector) -> MultidegreeVector {
    to_multidegrees(binomial_transform(&signed(g))).expect("binomial sums of nonnegative entries")
}

/// Gradient multidegrees from toric polar ones; fails if the input is not
/// the transform of a nonnegative vector.
pub fn gradient_from_toric(d: &MultidegreeVector) -> Result<MultidegreeVector> {
    to_multidegrees(inverse_binomial_transform(&signed(d)))
}

/// Whether `c_SM(1_{P^n \ D}) = (1 + h)^{n+1} c_SM(1_{P^n \ (D ∪ H)})`, which
/// holds when `D` is in general position with respect to `H`.
pub fn check_union_general_section(
    csm_complement_d: &ChowClassVector,
    csm_standard: &ChowClassVector,
) -> bool {
    let n = csm_standard.n();
    csm_complement_d.n() == n
        && *csm_complement_d == ChowClassVector::one_plus_h_pow(n, n as i64 + 1).mul(csm_standard)
}

/// `k^n - sum mu_p`, the toric polar degree of a general translate.
pub fn deg_from_milnor_general_position(k: u32, n: u32, milnor_sum: u64) -> i64 {
    (k as i64).pow(n) - milnor_sum as i64
}
