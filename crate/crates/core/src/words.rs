//! Words over a commutative-semigroup alphabet and the two bialgebra
//! structures on their span: the quasi-shuffle Hopf algebra `(H, ⧢, Δ)` with
//! deconcatenation, and the internal bialgebra `(H, ⧢, Γ)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::letter::{Letter, Nat};
use crate::linalg::{BasisDisplay, LinComb, Rational, Tensor};
use crate::surjections;

/// A finite sequence of letters, possibly empty.
///
/// The derived order is lexicographic on letters with a proper prefix
/// smaller than its extensions, so `[] < [1] < [1.2] < [2.1] < [3]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<L = Nat>(Vec<L>);

impl<L: Letter> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn letter(l: L) -> Self {
        Word(alloc::vec![l])
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Semigroup sum of the letters; `None` stands for the weight of the
    /// empty word.
    pub fn weight(&self) -> Option<L> {
        let mut it = self.0.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, l| acc.combine(l)))
    }

    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Appends a letter on the right (the operator `L^b`).
    pub fn push(&self, l: L) -> Word<L> {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    pub fn split_at(&self, k: usize) -> (Word<L>, Word<L>) {
        (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec()))
    }

    pub fn slice(&self, start: usize, end: usize) -> Word<L> {
        Word(self.0[start..end].to_vec())
    }
}

impl Word<Nat> {
    /// Builds a word from positive integers.
    pub fn from_values(values: &[u32]) -> Result<Self> {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| Nat::new(v).ok_or_else(|| Error::parse(i, "letters are positive")))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Integer weight; zero for the empty word.
    pub fn weight_value(&self) -> u32 {
        self.0.iter().map(|l| l.value()).sum()
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", l)?;
        }
        f.write_str("]")
    }
}

impl<L: Letter> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: Letter> BasisDisplay for Word<L> {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word<Nat> {
    type Err = Error;

    /// `[]` or `[a.b.c]` with positive integer letters.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let offset = s.len() - s.trim_start().len();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(offset, "a word is written `[a.b.c]`"))?;
        if inner.trim().is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut pos = offset + 1;
        for part in inner.split('.') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::parse(pos, "expected a positive integer letter"))?;
            letters.push(Nat::new(v).ok_or_else(|| Error::parse(pos, "letters are positive"))?);
            pos += part.len() + 1;
        }
        Ok(Word(letters))
    }
}

impl<L: Letter> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub fn concat<L: Letter>(u: &Word<L>, v: &Word<L>) -> Word<L> {
    u.concat(v)
}

fn interleave<L: Letter>(
    a: &[L],
    b: &[L],
    contract: bool,
    prefix: &mut Vec<L>,
    out: &mut LinComb<Word<L>>,
) {
    if a.is_empty() || b.is_empty() {
        let mut v = prefix.clone();
        v.extend_from_slice(a);
        v.extend_from_slice(b);
        out.add_term(Word(v), Rational::one());
        return;
    }
    prefix.push(a[0].clone());
    interleave(&a[1..], b, contract, prefix, out);
    prefix.pop();
    prefix.push(b[0].clone());
    interleave(a, &b[1..], contract, prefix, out);
    prefix.pop();
    if contract {
        prefix.push(a[0].combine(&b[0]));
        interleave(&a[1..], &b[1..], contract, prefix, out);
        prefix.pop();
    }
}

/// Quasi-shuffle product, by the three-term recursion on first letters.
pub fn qsh<L: Letter>(u: &Word<L>, v: &Word<L>) -> LinComb<Word<L>> {
    let mut out = LinComb::zero();
    interleave(&u.0, &v.0, true, &mut Vec::new(), &mut out);
    out
}

/// Ordinary shuffle product (quasi-shuffle without contractions).
pub fn shuffle<L: Letter>(u: &Word<L>, v: &Word<L>) -> LinComb<Word<L>> {
    let mut out = LinComb::zero();
    interleave(&u.0, &v.0, false, &mut Vec::new(), &mut out);
    out
}

/// Quasi-shuffle product as a sum over quasi-shuffle surjections.
pub fn qsh_via_surjections<L: Letter>(u: &Word<L>, v: &Word<L>) -> LinComb<Word<L>> {
    let w = u.concat(v);
    surjections::enumerate_qsh_all(u.len(), v.len())
        .iter()
        .map(|s| {
            surjections::apply_surjection(&w, s.surjection())
                .expect("quasi-shuffle domain matches the concatenated length")
        })
        .collect()
}

pub fn qsh_lc<L: Letter>(a: &LinComb<Word<L>>, b: &LinComb<Word<L>>) -> LinComb<Word<L>> {
    a.bilinear(b, qsh)
}

pub fn shuffle_lc<L: Letter>(a: &LinComb<Word<L>>, b: &LinComb<Word<L>>) -> LinComb<Word<L>> {
    a.bilinear(b, shuffle)
}

/// `w¹ ⧢ ⋯ ⧢ wˢ`; the empty product is the empty word.
pub fn qsh_product<'a, L: Letter + 'a, I>(words: I) -> LinComb<Word<L>>
where
    I: IntoIterator<Item = &'a Word<L>>,
{
    let mut acc = LinComb::basis(Word::empty());
    for w in words {
        acc = acc.extend(|x| qsh(x, w));
    }
    acc
}

/// Deconcatenation `Δ(w) = Σ w' ⊗ w''` over the `|w| + 1` splits.
pub fn deconcat<L: Letter>(w: &Word<L>) -> Tensor<Word<L>, Word<L>> {
    (0..=w.len()).map(|k| w.split_at(k)).collect()
}

pub fn deconcat_lc<L: Letter>(a: &LinComb<Word<L>>) -> Tensor<Word<L>, Word<L>> {
    a.extend(deconcat)
}

/// All ways of cutting a nonempty word into consecutive nonempty blocks,
/// `2^(n-1)` of them. The empty word has none.
pub fn block_decompositions<L: Letter>(w: &Word<L>) -> Vec<Vec<Word<L>>> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                blocks.push(w.slice(start, i + 1));
                start = i + 1;
            }
        }
        blocks.push(w.slice(start, n));
        out.push(blocks);
    }
    out
}

/// The word of block weights `‖w¹‖⋯‖wˢ‖`.
pub fn block_weights<L: Letter>(blocks: &[Word<L>]) -> Word<L> {
    blocks
        .iter()
        .map(|b| b.weight().expect("blocks are nonempty"))
        .collect()
}

/// Internal coproduct `Γ(w) = Σ ‖w¹‖⋯‖wˢ‖ ⊗ w¹ ⧢ ⋯ ⧢ wˢ` over block
/// decompositions, with `Γ([]) = [] ⊗ []`.
pub fn gamma<L: Letter>(w: &Word<L>) -> Tensor<Word<L>, Word<L>> {
    if w.is_empty() {
        return LinComb::basis((Word::empty(), Word::empty()));
    }
    let mut out = LinComb::zero();
    for blocks in block_decompositions(w) {
        let left = block_weights(&blocks);
        for (right, c) in &qsh_product(&blocks) {
            out.add_term((left.clone(), right.clone()), c.clone());
        }
    }
    out
}

/// `Γ(w)` as a sum over nondecreasing surjections `σ` of
/// `w^σ ⊗ (w_σ¹ ⧢ ⋯ ⧢ w_σˢ)`.
pub fn gamma_via_surjections<L: Letter>(w: &Word<L>) -> Tensor<Word<L>, Word<L>> {
    let mut out = LinComb::zero();
    for sigma in surjections::nondecreasing_surjections(w.len()) {
        let left = surjections::apply_surjection(w, &sigma).expect("domain is |w|");
        let blocks = surjections::blocks(w, &sigma).expect("domain is |w|");
        for (right, c) in &qsh_product(&blocks) {
            out.add_term((left.clone(), right.clone()), c.clone());
        }
    }
    out
}

pub fn gamma_lc<L: Letter>(a: &LinComb<Word<L>>) -> Tensor<Word<L>, Word<L>> {
    a.extend(gamma)
}

/// Counit of `Δ`: the indicator of the empty word.
pub fn counit_delta<L: Letter>(w: &Word<L>) -> Rational {
    if w.is_empty() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Counit of `Γ`: the indicator of words of length at most one.
pub fn counit_gamma<L: Letter>(w: &Word<L>) -> Rational {
    if w.len() <= 1 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn antipode_memo<L: Letter>(
    w: &Word<L>,
    left: bool,
    memo: &mut BTreeMap<Word<L>, LinComb<Word<L>>>,
) -> LinComb<Word<L>> {
    if let Some(s) = memo.get(w) {
        return s.clone();
    }
    let mut out = LinComb::zero();
    if w.is_empty() {
        out.add_term(Word::empty(), Rational::one());
    } else {
        out.add_term(w.clone(), -Rational::one());
        for k in 1..w.len() {
            let (a, b) = w.split_at(k);
            let term = if left {
                antipode_memo(&a, left, memo).extend(|x| qsh(x, &b))
            } else {
                antipode_memo(&b, left, memo).extend(|x| qsh(&a, x))
            };
            out -= &term;
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Antipode of `(H, ⧢, Δ)` from `S ⋆ Id = uε`:
/// `S(w) = -w - Σ S(w') ⧢ w''` over proper splits.
pub fn antipode<L: Letter>(w: &Word<L>) -> LinComb<Word<L>> {
    antipode_memo(w, true, &mut BTreeMap::new())
}

/// Antipode from `Id ⋆ S = uε`; equal to [`antipode`] since `⧢` is commutative.
pub fn antipode_right<L: Letter>(w: &Word<L>) -> LinComb<Word<L>> {
    antipode_memo(w, false, &mut BTreeMap::new())
}

pub fn antipode_lc<L: Letter>(a: &LinComb<Word<L>>) -> LinComb<Word<L>> {
    let mut memo = BTreeMap::new();
    a.extend(|w| antipode_memo(w, true, &mut memo))
}

/// All words of length at most `max_len` over `letters`, shortest first.
pub fn words_up_to_len<L: Letter>(letters: &[L], max_len: usize) -> Vec<Word<L>> {
    let mut out = alloc::vec![Word::empty()];
    let mut layer = alloc::vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                next.push(w.push(l.clone()));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// All words of weight exactly `n` over the positive integers (the
/// compositions of `n`), in lexicographic order.
pub fn words_of_weight(n: u32) -> Vec<Word<Nat>> {
    fn rec(rest: u32, prefix: &mut Vec<Nat>, out: &mut Vec<Word<Nat>>) {
        if rest == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(Nat(first));
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All words of weight at most `max_weight`, grouped by increasing weight.
pub fn words_up_to_weight(max_weight: u32) -> Vec<Word<Nat>> {
    (0..=max_weight).flat_map(words_of_weight).collect()
}

/// Whether `w` is strictly smaller than each of its proper nonempty suffixes.
pub fn is_lyndon<L: Letter>(w: &Word<L>) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w.0[..] < w.0[k..])
}

/// Lyndon factorization `w = l₁ l₂ ⋯ l_k` with `l₁ ≥ l₂ ≥ ⋯ ≥ l_k`
/// (Duval's algorithm).
pub fn lyndon_factorization<L: Letter>(w: &Word<L>) -> Vec<Word<L>> {
    let s = &w.0;
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lc(items: &[(&str, i64)]) -> LinComb<Word> {
        items.iter().map(|(s, c)| (w(s), int(*c))).collect()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("[]"), Word::empty());
        assert_eq!(w("[1.2.3]").to_string(), "[1.2.3]");
        assert_eq!(w(" [ 10 . 2 ] ").letters().len(), 2);
        assert!("[0]".parse::<Word>().is_err());
        assert!("1.2".parse::<Word>().is_err());
        assert!("[1..2]".parse::<Word>().is_err());
    }

    #[test]
    fn concatenation_examples() {
        assert_eq!(concat(&w("[]"), &w("[1.2]")), w("[1.2]"));
        assert_eq!(concat(&w("[1]"), &w("[2.3]")), w("[1.2.3]"));
        assert_eq!(concat(&w("[1]"), &w("[2]")).weight_value(), 3);
        assert_eq!(Word::<Nat>::empty().weight(), None);
    }

    #[test]
    fn quasi_shuffle_examples() {
        assert_eq!(qsh(&w("[1]"), &w("[2]")), lc(&[("[1.2]", 1), ("[2.1]", 1), ("[3]", 1)]));
        assert_eq!(
            qsh(&w("[1.2]"), &w("[3]")),
            lc(&[("[1.2.3]", 1), ("[1.3.2]", 1), ("[3.1.2]", 1), ("[1.5]", 1), ("[4.2]", 1)])
        );
        assert_eq!(qsh(&w("[]"), &w("[4.1]")), lc(&[("[4.1]", 1)]));
        assert_eq!(qsh(&w("[1]"), &w("[1]")), lc(&[("[1.1]", 2), ("[2]", 1)]));
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&w("[1]"), &w("[2]")), lc(&[("[1.2]", 1), ("[2.1]", 1)]));
        assert_eq!(shuffle(&w("[]"), &w("[2.2]")), lc(&[("[2.2]", 1)]));
        let s = shuffle(&w("[1.2]"), &w("[3]"));
        assert_eq!(s.len(), 3);
        assert!(s.support().all(|x| x.len() == 3));
    }

    #[test]
    fn deconcatenation_examples() {
        assert_eq!(deconcat(&w("[]")), LinComb::basis((w("[]"), w("[]"))));
        let d1: Tensor<Word, Word> =
            [(w("[1]"), w("[]")), (w("[]"), w("[1]"))].into_iter().collect();
        assert_eq!(deconcat(&w("[1]")), d1);
        let d3 = deconcat(&w("[1.2.3]"));
        assert_eq!(d3.len(), 4);
        assert_eq!(d3.coeff(&(w("[1]"), w("[2.3]"))), int(1));
        assert_eq!(d3.coeff(&(w("[1.2]"), w("[3]"))), int(1));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&w("[1]")), LinComb::basis((w("[1]"), w("[1]"))));
        let expected = LinComb::basis(w("[1.2]")).tensor(&qsh(&w("[1]"), &w("[2]")))
            + LinComb::basis((w("[3]"), w("[1.2]")));
        assert_eq!(gamma(&w("[1.2]")), expected);
        assert_eq!(
            gamma(&w("[1.2]")).to_string(),
            "[1.2](x)[1.2] + [1.2](x)[2.1] + [1.2](x)[3] + [3](x)[1.2]"
        );
        // letters are group-like, and so is their quasi-shuffle
        let p = qsh(&w("[1]"), &w("[2]"));
        assert_eq!(gamma_lc(&p), p.tensor(&p));
        assert_eq!(gamma(&w("[]")), LinComb::basis((w("[]"), w("[]"))));
    }

    #[test]
    fn gamma_agrees_with_surjection_form() {
        for s in ["[]", "[1]", "[1.2]", "[1.1.2]", "[2.1.3.1]"] {
            assert_eq!(gamma(&w(s)), gamma_via_surjections(&w(s)), "{}", s);
        }
    }

    #[test]
    fn counits() {
        assert_eq!(counit_delta(&w("[]")), int(1));
        assert_eq!(counit_delta(&w("[1]")), int(0));
        assert_eq!(counit_delta(&w("[1.2]")), int(0));
        assert_eq!(counit_gamma(&w("[]")), int(1));
        assert_eq!(counit_gamma(&w("[5]")), int(1));
        assert_eq!(counit_gamma(&w("[1.2]")), int(0));
        let lhs: LinComb<Word> = gamma(&w("[1.2]"))
            .iter()
            .map(|((a, b), c)| (b.clone(), c * counit_gamma(a)))
            .collect();
        assert_eq!(lhs, lc(&[("[1.2]", 1)]));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&w("[]")), lc(&[("[]", 1)]));
        assert_eq!(antipode(&w("[1]")), lc(&[("[1]", -1)]));
        assert_eq!(antipode(&w("[1.2]")), lc(&[("[2.1]", 1), ("[3]", 1)]));
        for s in ["[1.2.3]", "[1.1.2]", "[2.1.1.3]"] {
            assert_eq!(antipode(&w(s)), antipode_right(&w(s)));
        }
    }

    #[test]
    fn lyndon() {
        assert!(is_lyndon(&w("[1.2]")));
        assert!(!is_lyndon(&w("[2.1]")));
        assert!(!is_lyndon(&w("[1.1]")));
        assert!(is_lyndon(&w("[1.1.2]")));
        let f = lyndon_factorization(&w("[2.1.1.2.1]"));
        assert_eq!(f, alloc::vec![w("[2]"), w("[1.1.2]"), w("[1]")]);
        for x in words_up_to_weight(7) {
            let f = lyndon_factorization(&x);
            assert!(f.iter().all(is_lyndon));
            assert!(f.windows(2).all(|p| p[0] >= p[1]));
            let joined = f.iter().fold(Word::empty(), |acc, l| acc.concat(l));
            assert_eq!(joined, x);
        }
    }

    #[test]
    fn enumerations() {
        assert_eq!(words_of_weight(4).len(), 8);
        assert_eq!(words_up_to_weight(3).len(), 1 + 1 + 2 + 4);
        let letters = [Nat(1), Nat(2), Nat(3)];
        assert_eq!(words_up_to_len(&letters, 2).len(), 1 + 3 + 9);
    }
}
