//! Exact mould calculus on the quasi-shuffle Hopf algebra of words and on
//! its arborified counterpart, the Hopf algebra of decorated rooted forests.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals and
//! every algebraic structure map returns a normalized sparse linear
//! combination. The crate is `no_std` and only needs `alloc`.
//!
//! Layout:
//!
//! - [`linalg`]: rationals, sparse linear combinations, tensors, row reduction.
//! - [`letter`] and [`words`]: words over a commutative-semigroup alphabet, the
//!   quasi-shuffle product, deconcatenation and the internal coproduct.
//! - [`surjections`]: packed words, (weak) quasi-shuffles and their factorizations.
//! - [`qsym`]: quasi-symmetric polynomials over finite ordered alphabets.
//! - [`moulds`]: moulds, their products and compositions, word series.
//! - [`forests`]: decorated rooted forests, their coproducts and arborification.
//! - [`arbomoulds`]: arborescent moulds and S-series.
//!
//! ```
//! use mouldcalc_core::words::{qsh, Word};
//!
//! let u: Word = "[1]".parse().unwrap();
//! let v: Word = "[2]".parse().unwrap();
//! assert_eq!(qsh(&u, &v).to_string(), "[1.2] + [2.1] + [3]");
//! ```
#![no_std]

extern crate alloc;

pub mod arbomoulds;
pub mod error;
pub mod forests;
pub mod letter;
pub mod linalg;
pub mod moulds;
pub mod qsym;
pub mod random;
pub mod surjections;
pub mod words;

mod memo;

pub use error::{Error, Result};
pub use letter::{Letter, MultiIndex, Nat};
pub use linalg::{LinComb, Rational, Tensor};
