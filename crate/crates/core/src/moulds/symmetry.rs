use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Zero};

use super::Mould;
use crate::error::{Error, Result};
use crate::letter::{Letter, Nat};
use crate::linalg::{inv_factorial, LinComb, Rational};
use crate::random::keyed_small_rational;
use crate::words::{
    lyndon_factorization, qsh, qsh_product, shuffle, words_up_to_len,
    words_up_to_weight, Word,
};

/// A pair `(u, v)` where `M^{u·v} ≠ M^u M^v` for the product under test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCounterexample<L: Letter = Nat> {
    pub u: Word<L>,
    pub v: Word<L>,
    pub lhs: Rational,
    pub rhs: Rational,
}

fn check_multiplicative<L, F>(
    m: &Mould<L>,
    pairs: impl Iterator<Item = (Word<L>, Word<L>)>,
    product: F,
) -> Option<PairCounterexample<L>>
where
    L: Letter,
    F: Fn(&Word<L>, &Word<L>) -> LinComb<Word<L>>,
{
    let unit = m.eval(&Word::empty());
    if !unit.is_one() {
        return Some(PairCounterexample {
            u: Word::empty(),
            v: Word::empty(),
            lhs: unit,
            rhs: Rational::one(),
        });
    }
    for (u, v) in pairs {
        let lhs = m.eval_lc(&product(&u, &v));
        let rhs = m.eval(&u) * m.eval(&v);
        if lhs != rhs {
            return Some(PairCounterexample { u, v, lhs, rhs });
        }
    }
    None
}

fn bounded_pairs<L: Letter>(
    letters: &[L],
    max_len: usize,
) -> impl Iterator<Item = (Word<L>, Word<L>)> {
    let words: Vec<Word<L>> = words_up_to_len(letters, max_len)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    let mut pairs = Vec::new();
    for u in &words {
        for v in &words {
            if u.len() + v.len() <= max_len {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    pairs.into_iter()
}

/// First failure of `M^{u⧢v} = M^u M^v` (or of `M^{[]} = 1`) over nonempty
/// words with `|u| + |v| ≤ max_len`; `None` when the mould is symmetrel
/// within the bound.
pub fn check_symmetrel<L: Letter>(
    m: &Mould<L>,
    letters: &[L],
    max_len: usize,
) -> Option<PairCounterexample<L>> {
    check_multiplicative(m, bounded_pairs(letters, max_len), qsh)
}

/// As [`check_symmetrel`] for the ordinary shuffle.
pub fn check_symmetral<L: Letter>(
    m: &Mould<L>,
    letters: &[L],
    max_len: usize,
) -> Option<PairCounterexample<L>> {
    check_multiplicative(m, bounded_pairs(letters, max_len), shuffle)
}

pub fn is_symmetrel<L: Letter>(m: &Mould<L>, letters: &[L], max_len: usize) -> bool {
    check_symmetrel(m, letters, max_len).is_none()
}

pub fn is_symmetral<L: Letter>(m: &Mould<L>, letters: &[L], max_len: usize) -> bool {
    check_symmetral(m, letters, max_len).is_none()
}

/// `N = Σ_k α^{*k}/k!` for the deconcatenation convolution `*`, assuming
/// `α^{[]} = 0` so the sum is finite on every word.
pub fn exp_convolution<L: Letter>(name: impl Into<String>, alpha: &Mould<L>) -> Mould<L> {
    // powers[w][k] = (α^{*k})(w) for k ≤ |w|
    type Powers<L> = RefCell<BTreeMap<Word<L>, Rc<Vec<Rational>>>>;
    fn powers<L: Letter>(alpha: &Mould<L>, memo: &Powers<L>, w: &Word<L>) -> Rc<Vec<Rational>> {
        if let Some(p) = memo.borrow().get(w) {
            return p.clone();
        }
        let n = w.len();
        let mut p = alloc::vec![Rational::zero(); n + 1];
        if n == 0 {
            p[0] = Rational::one();
        }
        for i in 1..=n {
            let (head, tail) = w.split_at(i);
            let a = alpha.eval(&head);
            if a.is_zero() {
                continue;
            }
            let rest = powers(alpha, memo, &tail);
            for k in 1..=n {
                if k - 1 < rest.len() && !rest[k - 1].is_zero() {
                    p[k] += &a * &rest[k - 1];
                }
            }
        }
        let p = Rc::new(p);
        memo.borrow_mut().insert(w.clone(), p.clone());
        p
    }
    let alpha = alpha.clone();
    let memo: Powers<L> = RefCell::new(BTreeMap::new());
    Mould::from_fn(name, move |w| {
        powers(&alpha, &memo, w)
            .iter()
            .enumerate()
            .map(|(k, c)| c * inv_factorial(k))
            .fold(Rational::zero(), |acc, x| acc + x)
    })
}

struct Solver {
    seed: u64,
    alpha: RefCell<BTreeMap<Word, Rational>>,
}

impl Solver {
    /// Lyndon words get seeded values; a non-Lyndon `w = l₁⋯l_k` (Lyndon
    /// factorization) is fixed by `α(l₁ ⧢ ⋯ ⧢ l_k) = 0`, whose largest word
    /// in (length, lex) order is `w` itself, so solving recursively on the
    /// other terms terminates.
    fn value(&self, w: &Word) -> Result<Rational> {
        if w.is_empty() {
            return Ok(Rational::zero());
        }
        if let Some(v) = self.alpha.borrow().get(w) {
            return Ok(v.clone());
        }
        let factors = lyndon_factorization(w);
        let value = if factors.len() == 1 {
            keyed_small_rational(self.seed, w)
        } else {
            let row = qsh_product(&factors);
            let lead = row.coeff(w);
            if lead.is_zero() {
                return Err(Error::SelfCheck(format!("{} missing from its factor product", w)));
            }
            let below = |x: &Word| x.len().cmp(&w.len()).then_with(|| x.cmp(w)).is_lt();
            let mut rest = Rational::zero();
            for (x, c) in &row {
                if x == w {
                    continue;
                }
                if !below(x) {
                    return Err(Error::SelfCheck(format!("{} is not below {} in the solve order", x, w)));
                }
                rest += c * self.value(x)?;
            }
            -rest / lead
        };
        self.alpha.borrow_mut().insert(w.clone(), value.clone());
        Ok(value)
    }
}

/// A seeded infinitesimal character: `α^{[]} = 0` and `α^{u⧢v} = 0` for all
/// nonempty `u`, `v`. Free (seeded) on Lyndon words. Words up to
/// `max_weight` are solved eagerly; others on demand.
pub fn infinitesimal_character(seed: u64, max_weight: u32) -> Result<Mould> {
    let solver = Rc::new(Solver {
        seed,
        alpha: RefCell::new(BTreeMap::new()),
    });
    for w in words_up_to_weight(max_weight) {
        solver.value(&w)?;
    }
    Ok(Mould::from_fn(format!("alpha:{}", seed), move |w| {
        solver.value(w).expect("every word solves like the lighter ones")
    }))
}

/// A symmetrel mould generated from `seed`, as the convolution exponential
/// of [`infinitesimal_character`]. Multiplicativity is verified on all pairs
/// of nonempty words with total weight at most `max_weight`; a failure is an
/// error.
pub fn gen_symmetrel(seed: u64, max_weight: u32) -> Result<Mould> {
    if max_weight == 0 {
        return Err(Error::InvalidBound(String::from("max_weight must be at least 1")));
    }
    let alpha = infinitesimal_character(seed, max_weight)?;
    let n = exp_convolution(format!("gensym:{}", seed), &alpha);
    let words: Vec<Word> = words_up_to_weight(max_weight - 1)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    let pairs = words.iter().flat_map(|u| {
        words
            .iter()
            .filter(move |v| u.weight_value() + v.weight_value() <= max_weight)
            .map(move |v| (u.clone(), v.clone()))
    });
    if let Some(c) = check_multiplicative(&n, pairs, qsh) {
        return Err(Error::SelfCheck(format!(
            "generated mould not symmetrel at ({}, {}): {} != {}",
            c.u, c.v, c.lhs, c.rhs
        )));
    }
    Ok(n)
}
