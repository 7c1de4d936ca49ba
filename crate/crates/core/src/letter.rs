//! Alphabets: commutative semigroups with a total order.

use core::fmt;

/// A letter of a commutative-semigroup alphabet.
///
/// `combine` must be associative and commutative. The derived total order is
/// the one used for canonical printing and for lexicographic word order.
pub trait Letter: Clone + Ord + fmt::Debug + fmt::Display + 'static {
    fn combine(&self, other: &Self) -> Self;
}

/// Positive integers under addition, the default alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Nat(pub(crate) u32);

impl Nat {
    /// `None` for zero, which is not a letter.
    pub fn new(value: u32) -> Option<Nat> {
        (value > 0).then_some(Nat(value))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl Letter for Nat {
    fn combine(&self, other: &Self) -> Self {
        Nat(self.0 + other.0)
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multi-indices in `ℕⁿ \ {0}` under componentwise addition, ordered
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex<const N: usize>(pub [u32; N]);

impl<const N: usize> Letter for MultiIndex<N> {
    fn combine(&self, other: &Self) -> Self {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(other.0.iter()) {
            *o += x;
        }
        MultiIndex(out)
    }
}

impl<const N: usize> fmt::Display for MultiIndex<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str(")")
    }
}
