//! Quasi-symmetric polynomials with exponents in the letter semigroup, over
//! finite totally ordered alphabets.
//!
//! `Q_ω(X) = Σ_{x₁<⋯<x_r} x₁^{ω₁}⋯x_r^{ω_r}`. Ordinal sums and lexicographic
//! products of alphabets realize deconcatenation and the internal coproduct,
//! which gives an independent way to compute both.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::linalg::{BasisDisplay, LinComb, Rational, Tensor};
use crate::words::{qsh, Word};

/// A variable: a named symbol, or a pair coming from an alphabet product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Atom(String),
    Pair(Box<Var>, Box<Var>),
}

impl Var {
    fn atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Var::Atom(s) => {
                out.insert(s.clone());
            }
            Var::Pair(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Atom(s) => f.write_str(s),
            Var::Pair(a, b) => write!(f, "({},{})", a, b),
        }
    }
}

/// A finite alphabet; the list order is the variable order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedAlphabet {
    vars: Vec<Var>,
}

impl OrderedAlphabet {
    /// `x1 < x2 < ⋯ < xn` for prefix `x`.
    pub fn named(prefix: &str, n: usize) -> Self {
        OrderedAlphabet {
            vars: (1..=n).map(|i| Var::Atom(format!("{}{}", prefix, i))).collect(),
        }
    }

    pub fn from_vars(vars: Vec<Var>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.clone()) {
                return Err(Error::SymbolCollision(format!("{}", v)));
            }
        }
        Ok(OrderedAlphabet { vars })
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for v in &self.vars {
            v.atoms(&mut out);
        }
        out
    }

    fn disjoint(&self, other: &Self) -> Result<()> {
        let a = self.atoms();
        match other.atoms().into_iter().find(|s| a.contains(s)) {
            Some(s) => Err(Error::SymbolCollision(s)),
            None => Ok(()),
        }
    }

    /// Ordinal sum `X + Y`: every variable of `Y` is above every variable of `X`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.disjoint(other)?;
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        Ok(OrderedAlphabet { vars })
    }

    /// Product `XY`: pairs `(x, y)` in lexicographic order.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.disjoint(other)?;
        let mut vars = Vec::with_capacity(self.len() * other.len());
        for x in &self.vars {
            for y in &other.vars {
                vars.push(Var::Pair(Box::new(x.clone()), Box::new(y.clone())));
            }
        }
        Ok(OrderedAlphabet { vars })
    }
}

/// A monomial `∏ x^{a_x}` with exponents in the letter semigroup.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial<L> {
    powers: BTreeMap<Var, L>,
}

impl<L: Letter> Monomial<L> {
    pub fn one() -> Self {
        Monomial {
            powers: BTreeMap::new(),
        }
    }

    pub fn power(var: Var, exp: L) -> Self {
        let mut powers = BTreeMap::new();
        powers.insert(var, exp);
        Monomial { powers }
    }

    pub fn powers(&self) -> &BTreeMap<Var, L> {
        &self.powers
    }

    /// `x^a · x^b = x^{a+b}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut powers = self.powers.clone();
        for (v, e) in &other.powers {
            let new = match powers.get(v) {
                Some(old) => old.combine(e),
                None => e.clone(),
            };
            powers.insert(v.clone(), new);
        }
        Monomial { powers }
    }

    /// Replaces each pair variable `(x, y)^a` by `x^a y^a`, recursively.
    pub fn split_pairs(&self) -> Self {
        fn push<L: Letter>(v: &Var, e: &L, acc: Monomial<L>) -> Monomial<L> {
            match v {
                Var::Atom(_) => acc.mul(&Monomial::power(v.clone(), e.clone())),
                Var::Pair(a, b) => push(b, e, push(a, e, acc)),
            }
        }
        self.powers
            .iter()
            .fold(Monomial::one(), |acc, (v, e)| push(v, e, acc))
    }
}

impl<L: Letter> fmt::Display for Monomial<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}^{}", v, e)?;
        }
        Ok(())
    }
}

impl<L: Letter> BasisDisplay for Monomial<L> {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Polynomial<L> = LinComb<Monomial<L>>;

pub fn poly_mul<L: Letter>(a: &Polynomial<L>, b: &Polynomial<L>) -> Polynomial<L> {
    a.bilinear(b, |x, y| LinComb::basis(x.mul(y)))
}

pub fn split_pairs<L: Letter>(p: &Polynomial<L>) -> Polynomial<L> {
    p.map_basis(Monomial::split_pairs)
}

/// `Q_ω(X)`; zero when `|X| < |ω|`.
pub fn q<L: Letter>(w: &Word<L>, alphabet: &OrderedAlphabet) -> Polynomial<L> {
    fn rec<L: Letter>(
        letters: &[L],
        vars: &[Var],
        acc: Monomial<L>,
        out: &mut Polynomial<L>,
    ) {
        if letters.is_empty() {
            out.add_term(acc, Rational::one());
            return;
        }
        if vars.len() < letters.len() {
            return;
        }
        for i in 0..=vars.len() - letters.len() {
            let m = acc.mul(&Monomial::power(vars[i].clone(), letters[0].clone()));
            rec(&letters[1..], &vars[i + 1..], m, out);
        }
    }
    let mut out = LinComb::zero();
    rec(w.letters(), alphabet.vars(), Monomial::one(), &mut out);
    out
}

pub fn q_lc<L: Letter>(a: &LinComb<Word<L>>, alphabet: &OrderedAlphabet) -> Polynomial<L> {
    a.extend(|w| q(w, alphabet))
}

/// `Q_u(X) Q_v(X) = Q_{u⧢v}(X)`.
pub fn q_product_check<L: Letter>(u: &Word<L>, v: &Word<L>, alphabet: &OrderedAlphabet) -> bool {
    poly_mul(&q(u, alphabet), &q(v, alphabet)) == q_lc(&qsh(u, v), alphabet)
}

/// Both sides of `Q_ω(X+Y) = Σ_{ω=ω′ω″} Q_{ω′}(X) Q_{ω″}(Y)`.
pub fn q_on_sum<L: Letter>(
    w: &Word<L>,
    x: &OrderedAlphabet,
    y: &OrderedAlphabet,
) -> Result<(Polynomial<L>, Polynomial<L>)> {
    let lhs = q(w, &x.sum(y)?);
    let mut rhs = LinComb::zero();
    for k in 0..=w.len() {
        let (a, b) = w.split_at(k);
        rhs += &poly_mul(&q(&a, x), &q(&b, y));
    }
    Ok((lhs, rhs))
}

/// Both sides of `Q_ω(XY) = Σ Q_{‖ω¹‖⋯‖ωˢ‖}(X) Q_{ω¹}(Y)⋯Q_{ωˢ}(Y)`, the left
/// side with pair variables split into commuting products.
pub fn q_on_product<L: Letter>(
    w: &Word<L>,
    x: &OrderedAlphabet,
    y: &OrderedAlphabet,
) -> Result<(Polynomial<L>, Polynomial<L>)> {
    let lhs = split_pairs(&q(w, &x.product(y)?));
    let rhs = if w.is_empty() {
        LinComb::basis(Monomial::one())
    } else {
        let mut rhs = LinComb::zero();
        for blocks in crate::words::block_decompositions(w) {
            let weights = crate::words::block_weights(&blocks);
            let mut term = q(&weights, x);
            for b in &blocks {
                term = poly_mul(&term, &q(b, y));
            }
            rhs += &term;
        }
        rhs
    };
    Ok((lhs, rhs))
}

/// Reads a polynomial in the disjoint variables of `X` and `Y` as a tensor
/// `Σ c_{u,v} Q_u(X) ⊗ Q_v(Y)`.
///
/// The coefficient of `Q_u(X) Q_v(Y)` is the coefficient of the monomial
/// `x₁^{u₁}⋯x_k^{u_k} y₁^{v₁}⋯y_l^{v_l}`, which occurs in no other product.
/// Fails if the polynomial is not in the span of such products (checked by
/// re-expanding), which happens when an alphabet is too small.
pub fn extract_tensor<L: Letter>(
    p: &Polynomial<L>,
    x: &OrderedAlphabet,
    y: &OrderedAlphabet,
) -> Result<Tensor<Word<L>, Word<L>>> {
    let leading = |m: &Monomial<L>, alphabet: &OrderedAlphabet| -> Option<Word<L>> {
        let mut letters = Vec::new();
        let mut expect_more = true;
        for v in alphabet.vars() {
            match m.powers().get(v) {
                Some(e) if expect_more => letters.push(e.clone()),
                Some(_) => return None,
                None => expect_more = false,
            }
        }
        Some(Word::new(letters))
    };
    let mut out = LinComb::zero();
    for (m, c) in p {
        let foreign = m
            .powers()
            .keys()
            .find(|v| !x.vars().contains(v) && !y.vars().contains(v));
        if let Some(v) = foreign {
            return Err(Error::SymbolCollision(format!("{}", v)));
        }
        if let (Some(u), Some(v)) = (leading(m, x), leading(m, y)) {
            out.add_term((u, v), c.clone());
        }
    }
    let mut back = LinComb::zero();
    for ((u, v), c) in &out {
        back.add_scaled(c, &poly_mul(&q(u, x), &q(v, y)));
    }
    if &back != p {
        return Err(Error::InvalidBound(String::from(
            "alphabets too small to separate the expansion",
        )));
    }
    Ok(out)
}

/// `Δ(w)` read off from `Q_w(X+Y)`.
pub fn deconcat_oracle<L: Letter>(
    w: &Word<L>,
    x: &OrderedAlphabet,
    y: &OrderedAlphabet,
) -> Result<Tensor<Word<L>, Word<L>>> {
    extract_tensor(&q(w, &x.sum(y)?), x, y)
}

/// `Γ(w)` read off from `Q_w(XY)`.
pub fn gamma_oracle<L: Letter>(
    w: &Word<L>,
    x: &OrderedAlphabet,
    y: &OrderedAlphabet,
) -> Result<Tensor<Word<L>, Word<L>>> {
    extract_tensor(&split_pairs(&q(w, &x.product(y)?)), x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RowEchelon;
    use crate::words::{deconcat, gamma, words_up_to_len};
    use crate::Nat;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn nats(v: &[u32]) -> Vec<Nat> {
        v.iter().map(|&x| Nat::new(x).unwrap()).collect()
    }

    #[test]
    fn q_examples() {
        let x2 = OrderedAlphabet::named("x", 2);
        assert_eq!(q(&w("[1]"), &x2).to_string(), "x1^1 + x2^1");
        assert_eq!(q(&w("[1.2]"), &x2).to_string(), "x1^1*x2^2");
        assert!(q(&w("[1.2.3]"), &x2).is_zero());
        assert_eq!(q(&w("[]"), &x2).to_string(), "1");
    }

    #[test]
    fn product_rule() {
        let x2 = OrderedAlphabet::named("x", 2);
        assert!(q_product_check(&w("[1]"), &w("[2]"), &x2));
        let x4 = OrderedAlphabet::named("x", 4);
        let all = words_up_to_len(&nats(&[1, 2, 3]), 4);
        for u in &all {
            for v in &all {
                if u.len() + v.len() <= 4 {
                    assert!(q_product_check(u, v, &x4), "{} {}", u, v);
                }
            }
        }
    }

    #[test]
    fn sum_and_product_expansions() {
        let (x1, y1) = (OrderedAlphabet::named("x", 1), OrderedAlphabet::named("y", 1));
        let (l, r) = q_on_sum(&w("[1]"), &x1, &y1).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.to_string(), "x1^1 + y1^1");
        let (l, r) = q_on_product(&w("[1]"), &x1, &y1).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.to_string(), "x1^1*y1^1");
        let (x2, y2) = (OrderedAlphabet::named("x", 2), OrderedAlphabet::named("y", 2));
        let (l, r) = q_on_sum(&w("[1.2]"), &x2, &y2).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.len(), 6);
        let (l, r) = q_on_product(&w("[1.2]"), &x2, &y2).unwrap();
        assert_eq!(l, r);
        let (x3, y3) = (OrderedAlphabet::named("x", 3), OrderedAlphabet::named("y", 3));
        let (l, r) = q_on_product(&w("[1.1.2]"), &x3, &y3).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn collisions_rejected() {
        let x = OrderedAlphabet::named("x", 2);
        assert!(x.sum(&x).is_err());
        assert!(x.product(&x).is_err());
        assert!(q_on_sum(&w("[1]"), &x, &x).is_err());
    }

    #[test]
    fn oracles_reproduce_coproducts() {
        let (x, y) = (OrderedAlphabet::named("x", 4), OrderedAlphabet::named("y", 4));
        for word in words_up_to_len(&nats(&[1, 2]), 3) {
            assert_eq!(deconcat_oracle(&word, &x, &y).unwrap(), deconcat(&word));
            assert_eq!(gamma_oracle(&word, &x, &y).unwrap(), gamma(&word));
        }
    }

    #[test]
    fn faithful_above_threshold() {
        let x3 = OrderedAlphabet::named("x", 3);
        let all = words_up_to_len(&nats(&[1, 2, 3]), 3);
        let polys: Vec<_> = all.iter().map(|u| q(u, &x3)).collect();
        assert_eq!(RowEchelon::from_vectors(&polys).rank(), all.len());
    }

    #[test]
    fn alphabet_operations_associate() {
        let (x, y, z) = (
            OrderedAlphabet::named("x", 2),
            OrderedAlphabet::named("y", 2),
            OrderedAlphabet::named("z", 2),
        );
        let s1 = x.sum(&y).unwrap().sum(&z).unwrap();
        let s2 = x.sum(&y.sum(&z).unwrap()).unwrap();
        let p1 = x.product(&y).unwrap().product(&z).unwrap();
        let p2 = x.product(&y.product(&z).unwrap()).unwrap();
        for word in [w("[1]"), w("[1.2]"), w("[2.1.1]")] {
            assert_eq!(q(&word, &s1), q(&word, &s2));
            assert_eq!(split_pairs(&q(&word, &p1)), split_pairs(&q(&word, &p2)));
        }
    }
}
