//! Moulds: rational-valued rules on words, i.e. linear forms on the word
//! space, with product `×`, the compositions `∘` and `⋄`, and the built-in
//! moulds `ε`, `I`, `exp`, `J`.

mod growth;
mod series;
mod symmetry;

pub use growth::{
    audit_composition, audit_product, growth_audit, random_geometric, GrowthViolation,
};
pub use series::{iota, substitute, word_series, TruncatedSeries};
pub use symmetry::{
    check_symmetral, check_symmetrel, exp_convolution, gen_symmetrel, infinitesimal_character,
    is_symmetral, is_symmetrel, PairCounterexample,
};

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::letter::{Letter, Nat};
use crate::linalg::{inv_factorial, LinComb, Rational};
use crate::memo::Memo;
use crate::random::keyed_small_rational;
use crate::words::{block_decompositions, block_weights, qsh_product, Word};

struct Inner<L: Letter> {
    name: String,
    rule: Box<dyn Fn(&Word<L>) -> Rational>,
    memo: Memo<Word<L>, Rational>,
}

/// A mould given by a total evaluation rule with a per-mould cache.
///
/// Cloning is cheap and shares the cache. Moulds are single-threaded values;
/// build one per worker when evaluating in parallel.
#[derive(Clone)]
pub struct Mould<L: Letter = Nat>(Rc<Inner<L>>);

impl<L: Letter> Mould<L> {
    pub fn from_fn(name: impl Into<String>, rule: impl Fn(&Word<L>) -> Rational + 'static) -> Self {
        Mould(Rc::new(Inner {
            name: name.into(),
            rule: Box::new(rule),
            memo: Memo::new(),
        }))
    }

    /// Finite table with a default value outside it.
    pub fn table(
        name: impl Into<String>,
        entries: BTreeMap<Word<L>, Rational>,
        default: Rational,
    ) -> Self {
        Mould::from_fn(name, move |w| entries.get(w).cloned().unwrap_or_else(|| default.clone()))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn eval(&self, w: &Word<L>) -> Rational {
        self.0.memo.get_or_compute(w, || (self.0.rule)(w))
    }

    /// Linear extension to combinations of words.
    pub fn eval_lc(&self, a: &LinComb<Word<L>>) -> Rational {
        a.pair(|w| self.eval(w))
    }

    pub fn cached(&self) -> usize {
        self.0.memo.len()
    }

    /// `(M × N)^ω = Σ_{ω = ω′ω″} M^{ω′} N^{ω″}`.
    pub fn mul(&self, other: &Mould<L>) -> Mould<L> {
        let (m, n) = (self.clone(), other.clone());
        Mould::from_fn(format!("({} x {})", self.name(), other.name()), move |w| {
            (0..=w.len())
                .map(|k| {
                    let (a, b) = w.split_at(k);
                    m.eval(&a) * n.eval(&b)
                })
                .fold(Rational::zero(), |acc, x| acc + x)
        })
    }

    /// `(M ∘ N)^ω = Σ M^{‖ω¹‖⋯‖ωˢ‖} N^{ω¹}⋯N^{ωˢ}` over block decompositions,
    /// with `(M ∘ N)^{[]} = M^{[]}`.
    pub fn comp(&self, other: &Mould<L>) -> Mould<L> {
        let (m, n) = (self.clone(), other.clone());
        Mould::from_fn(format!("({} o {})", self.name(), other.name()), move |w| {
            if w.is_empty() {
                return m.eval(w);
            }
            let mut acc = Rational::zero();
            for blocks in block_decompositions(w) {
                let mut term = m.eval(&block_weights(&blocks));
                for b in &blocks {
                    if term.is_zero() {
                        break;
                    }
                    term *= n.eval(b);
                }
                acc += term;
            }
            acc
        })
    }

    /// `(M ⋄ N)^ω = Σ M^{‖ω¹‖⋯‖ωˢ‖} N^{ω¹ ⧢ ⋯ ⧢ ωˢ}`, with `(M ⋄ N)^{[]} = M^{[]}`.
    pub fn diamond(&self, other: &Mould<L>) -> Mould<L> {
        let (m, n) = (self.clone(), other.clone());
        Mould::from_fn(format!("({} <> {})", self.name(), other.name()), move |w| {
            if w.is_empty() {
                return m.eval(w);
            }
            let mut acc = Rational::zero();
            for blocks in block_decompositions(w) {
                let head = m.eval(&block_weights(&blocks));
                if !head.is_zero() {
                    acc += head * n.eval_lc(&qsh_product(&blocks));
                }
            }
            acc
        })
    }

    pub fn scale(&self, c: &Rational) -> Mould<L> {
        let (m, c) = (self.clone(), c.clone());
        Mould::from_fn(format!("{}*{}", c, self.name()), move |w| &c * m.eval(w))
    }

    pub fn add(&self, other: &Mould<L>) -> Mould<L> {
        let (m, n) = (self.clone(), other.clone());
        Mould::from_fn(format!("({} + {})", self.name(), other.name()), move |w| {
            m.eval(w) + n.eval(w)
        })
    }
}

impl<L: Letter> fmt::Debug for Mould<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mould({})", self.name())
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Unit for `×`: one on the empty word.
pub fn epsilon<L: Letter>() -> Mould<L> {
    Mould::from_fn("eps", |w: &Word<L>| indicator(w.is_empty()))
}

/// Unit for `∘`: one on single letters.
pub fn identity<L: Letter>() -> Mould<L> {
    Mould::from_fn("I", |w: &Word<L>| indicator(w.len() == 1))
}

/// `exp^ω = 1/|ω|!`
pub fn exp<L: Letter>() -> Mould<L> {
    Mould::from_fn("exp", |w: &Word<L>| inv_factorial(w.len()))
}

/// `J^{ω₁⋯ω_r} = (-1)^r`
pub fn j<L: Letter>() -> Mould<L> {
    Mould::from_fn("J", |w: &Word<L>| {
        if w.len().is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    })
}

/// The constant mould 1.
pub fn one<L: Letter>() -> Mould<L> {
    Mould::from_fn("one", |_: &Word<L>| Rational::one())
}

/// Built-in mould by name: `eps`, `I`, `exp`, `J`, `one`.
pub fn builtin<L: Letter>(name: &str) -> Result<Mould<L>> {
    match name {
        "eps" | "epsilon" => Ok(epsilon()),
        "I" => Ok(identity()),
        "exp" => Ok(exp()),
        "J" => Ok(j()),
        "one" => Ok(one()),
        _ => Err(Error::UnknownMould(name.to_string())),
    }
}

/// A total seeded mould with small rational values on every word.
pub fn random_table<L: Letter>(seed: u64) -> Mould<L> {
    Mould::from_fn(format!("random:{}", seed), move |w: &Word<L>| {
        keyed_small_rational(seed, w)
    })
}
