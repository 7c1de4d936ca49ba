use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use core::fmt;

use super::{BasisDisplay, LinComb, Rational};

/// A subspace kept in reduced row echelon form.
///
/// The pivot of a row is its smallest basis element in the canonical order.
/// Every pivot coefficient is one, and every pivot appears in exactly one row.
#[derive(Clone, PartialEq, Eq)]
pub struct RowEchelon<B: Ord> {
    rows: BTreeMap<B, LinComb<B>>,
}

impl<B: Ord + BasisDisplay> fmt::Debug for RowEchelon<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.values()).finish()
    }
}

impl<B: Ord + Clone> Default for RowEchelon<B> {
    fn default() -> Self {
        Self::new()
    }
}

impl<B: Ord + Clone> RowEchelon<B> {
    pub fn new() -> Self {
        RowEchelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn from_vectors<'a, I>(vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a LinComb<B>>,
        B: 'a,
    {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &B> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &LinComb<B>> {
        self.rows.values()
    }

    /// Subtracts from `v` its component along the pivots, in increasing pivot
    /// order. The result has no support on any pivot.
    pub fn reduce(&self, v: &LinComb<B>) -> LinComb<B> {
        let mut rem = v.clone();
        for (pivot, row) in &self.rows {
            let c = rem.coeff(pivot);
            if !c.is_zero() {
                rem.add_scaled(&-c, row);
            }
        }
        rem
    }

    /// Adds `v` to the spanning set. Returns `false` when `v` was already in
    /// the span.
    pub fn insert(&mut self, v: &LinComb<B>) -> bool {
        let rem = self.reduce(v);
        let (pivot, lead) = match rem.leading() {
            None => return false,
            Some((b, c)) => (b.clone(), c.clone()),
        };
        let row = if lead.is_one() {
            rem
        } else {
            rem.scale(&(Rational::one() / lead))
        };
        for other in self.rows.values_mut() {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                other.add_scaled(&-c, &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: &LinComb<B>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn into_rows(self) -> Vec<LinComb<B>> {
        self.rows.into_values().collect()
    }
}

/// Decides whether `probe` lies in the span of `vectors` by exact Gaussian
/// elimination, and returns the remainder of `probe` after removing its
/// component along the eliminated pivots.
pub fn row_space_membership<B: Ord + Clone>(
    vectors: &[LinComb<B>],
    probe: &LinComb<B>,
) -> (bool, LinComb<B>) {
    let e = RowEchelon::from_vectors(vectors);
    let rem = e.reduce(probe);
    (rem.is_zero(), rem)
}
