use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Formatting of a basis element inside a printed linear combination.
pub trait BasisDisplay {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

macro_rules! display_basis {
    ($($t:ty),*) => {$(
        impl BasisDisplay for $t {
            fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    )*};
}

display_basis!(u8, u16, u32, u64, usize, i32, i64, char, &str, alloc::string::String);

impl<A: BasisDisplay, B: BasisDisplay> BasisDisplay for (A, B) {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_basis(f)?;
        f.write_str("(x)")?;
        self.1.fmt_basis(f)
    }
}

impl<A: BasisDisplay, B: BasisDisplay, C: BasisDisplay> BasisDisplay for (A, B, C) {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_basis(f)?;
        f.write_str("(x)")?;
        self.1.fmt_basis(f)?;
        f.write_str("(x)")?;
        self.2.fmt_basis(f)
    }
}

impl<A: BasisDisplay, B: BasisDisplay, C: BasisDisplay, D: BasisDisplay> BasisDisplay
    for (A, B, C, D)
{
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_basis(f)?;
        f.write_str("(x)")?;
        self.1.fmt_basis(f)?;
        f.write_str("(x)")?;
        self.2.fmt_basis(f)?;
        f.write_str("(x)")?;
        self.3.fmt_basis(f)
    }
}

/// A finitely supported linear combination with exact rational coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when they have the same support and coefficients. Iteration follows the
/// basis order, which makes printing deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

pub type Tensor<A, B> = LinComb<(A, B)>;
pub type Tensor3<A, B, C> = LinComb<(A, B, C)>;
pub type Tensor4<A, B, C, D> = LinComb<(A, B, C, D)>;

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, b: &B) -> Option<&Rational> {
        self.terms.get(b)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn support(&self) -> btree_map::Keys<'_, B, Rational> {
        self.terms.keys()
    }

    /// The smallest basis element in the support.
    pub fn leading(&self) -> Option<(&B, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn remove(&mut self, b: &B) -> Option<Rational> {
        self.terms.remove(b)
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<B>)
    where
        B: Clone,
    {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            self.add_term(b.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self
    where
        B: Clone,
    {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (b.clone(), x * c))
                .collect(),
        }
    }

    /// Linear extension of a basis map `f`.
    pub fn extend<C: Ord + Clone, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Linear extension of a map between bases.
    pub fn map_basis<C: Ord, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Applies a linear form given on basis elements.
    pub fn pair<F>(&self, mut f: F) -> Rational
    where
        F: FnMut(&B) -> Rational,
    {
        let mut acc = Rational::zero();
        for (b, c) in &self.terms {
            let v = f(b);
            if !v.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    /// `self ⊗ other`.
    pub fn tensor<C: Ord + Clone>(&self, other: &LinComb<C>) -> Tensor<B, C>
    where
        B: Clone,
    {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term((a.clone(), b.clone()), x * y);
            }
        }
        out
    }

    /// Bilinear extension of a map on pairs of basis elements.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone, F>(
        &self,
        other: &LinComb<C>,
        mut f: F,
    ) -> LinComb<D>
    where
        F: FnMut(&B, &C) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&(x * y), &f(a, b));
            }
        }
        out
    }

    /// Keeps only the terms whose basis element satisfies `keep`.
    pub fn filter<F>(&self, mut keep: F) -> Self
    where
        B: Clone,
        F: FnMut(&B) -> bool,
    {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<B, Rational> {
        self.terms
    }
}

impl<A: Ord + Clone, B: Ord + Clone> Tensor<A, B> {
    /// `(f ⊗ g)` applied to a two-leg tensor.
    pub fn map_legs<C, D, F, G>(&self, mut f: F, mut g: G) -> Tensor<C, D>
    where
        C: Ord + Clone,
        D: Ord + Clone,
        F: FnMut(&A) -> LinComb<C>,
        G: FnMut(&B) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for ((a, b), c) in self.iter() {
            let fa = f(a);
            if fa.is_zero() {
                continue;
            }
            let gb = g(b);
            out.add_scaled(c, &fa.tensor(&gb));
        }
        out
    }

    /// The flip `a ⊗ b ↦ b ⊗ a`.
    pub fn swap(&self) -> Tensor<B, A> {
        self.map_basis(|(a, b)| (b.clone(), a.clone()))
    }
}

impl<B: Ord> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord> FromIterator<B> for LinComb<B> {
    /// Sums the given basis elements, each with coefficient one.
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for b in iter {
            out.add_term(b, Rational::one());
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord> AddAssign<LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: LinComb<B>) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -(self.clone())
    }
}

impl<B: Ord + BasisDisplay> fmt::Display for LinComb<B> {
    /// Signed terms `c*basis` joined by ` + ` / ` - `; unit coefficients are
    /// elided and the zero combination prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{}*", a)?;
            }
            b.fmt_basis(f)?;
        }
        Ok(())
    }
}

impl<B: Ord + BasisDisplay> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
