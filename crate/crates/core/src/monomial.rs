//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use smallvec::SmallVec;

/// Exponents of a monomial `x_0^{a_0} ... x_{n}^{a_n}`.
///
/// The derived `Ord` is the lexicographic order with `x_0 > x_1 > ...`; it is
/// used for storage only. Algorithms take an explicit [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[u32; 8]>);

impl ExponentVector {
    pub fn zero(arity: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, arity))
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        ExponentVector(SmallVec::from_slice(exps))
    }

    /// The monomial `x_i`.
    pub fn variable(arity: usize, i: usize) -> Self {
        let mut e = Self::zero(arity);
        e.0[i] = 1;
        e
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    /// Does `self` divide `other`?
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Number of variables with a positive exponent.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

impl Deref for ExponentVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl FromIterator<u32> for ExponentVector {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ExponentVector(iter.into_iter().collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A global, multiplicative total order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on the block
    /// `x_0..x_{k-1}`, ties broken by grevlex on the remaining variables.
    Elimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Elimination(k) => {
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

#[inline]
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // x0*x2 < x1^2 in grevlex
        assert_eq!(o.cmp(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&ev(&[2, 0, 0]), &ev(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[0, 0, 3]), &ev(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_puts_block_first() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&ev(&[1, 0, 0]), &ev(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[0, 2, 0]), &ev(&[0, 1, 0])), Ordering::Greater);
    }

    fn exps() -> impl Strategy<Value = ExponentVector> {
        proptest::collection::vec(0u32..4, 4).prop_map(|v| ExponentVector::from_slice(&v))
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in exps(), b in exps(), w in exps(), k in 0usize..4) {
            for o in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination(k)] {
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&w), &b.mul(&w)));
                // divisibility implies order
                if a.divides(&b) {
                    prop_assert_ne!(o.cmp(&a, &b), Ordering::Greater);
                }
            }
        }
    }
}
