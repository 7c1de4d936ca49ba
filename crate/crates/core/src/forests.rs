//! Decorated rooted forests: the Hopf algebra `(H_<, ·, Δ)` with admissible
//! cuts, the internal coproduct `Γ` over covering subforests, contracting
//! arborification onto words, grafting and the Grossman–Larson product.
//!
//! Text form: `3(1,2)` is a root decorated 3 with leaves 1 and 2, `1*2` is a
//! two-tree forest and `()` is the empty forest.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::letter::{Letter, Nat};
use crate::linalg::{BasisDisplay, LinComb, Rational, Tensor};
use crate::words::Word;

/// A decorated rooted tree with canonically sorted children.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree<L = Nat> {
    dec: L,
    children: Vec<Tree<L>>,
}

/// A multiset of trees, kept sorted. The empty forest is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest<L = Nat> {
    trees: Vec<Tree<L>>,
}

impl<L: Letter> Tree<L> {
    pub fn new(dec: L, mut children: Vec<Tree<L>>) -> Self {
        children.sort();
        Tree { dec, children }
    }

    pub fn leaf(dec: L) -> Self {
        Tree {
            dec,
            children: Vec::new(),
        }
    }

    pub fn decoration(&self) -> &L {
        &self.dec
    }

    pub fn children(&self) -> &[Tree<L>] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Tree::vertex_count).sum::<usize>()
    }

    /// The forest of subtrees above the root.
    pub fn branches(&self) -> Forest<L> {
        Forest {
            trees: self.children.clone(),
        }
    }
}

impl<L: Letter> Forest<L> {
    pub fn empty() -> Self {
        Forest { trees: Vec::new() }
    }

    pub fn new(mut trees: Vec<Tree<L>>) -> Self {
        trees.sort();
        Forest { trees }
    }

    pub fn tree(t: Tree<L>) -> Self {
        Forest {
            trees: alloc::vec![t],
        }
    }

    pub fn leaf(dec: L) -> Self {
        Forest::tree(Tree::leaf(dec))
    }

    pub fn trees(&self) -> &[Tree<L>] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(Tree::vertex_count).sum()
    }

    /// Combination of all decorations; `None` for the empty forest.
    pub fn weight(&self) -> Option<L> {
        let flat = Flat::of(self);
        let mut it = flat.dec.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, d| acc.combine(d)))
    }

    /// Disjoint union.
    pub fn mul(&self, other: &Forest<L>) -> Forest<L> {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest::new(trees)
    }
}

impl Forest<Nat> {
    pub fn weight_value(&self) -> u32 {
        self.weight().map_or(0, |l| l.value())
    }
}

impl<L: Letter> fmt::Display for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dec)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", c)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl<L: Letter> fmt::Display for Forest<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("()");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

impl<L: Letter> fmt::Debug for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: Letter> fmt::Debug for Forest<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: Letter> BasisDisplay for Tree<L> {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Forests of several trees are parenthesized so that a coefficient can
/// never be read as a factor: `2*(1*2)`.
impl<L: Letter> BasisDisplay for Forest<L> {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.len() > 1 {
            write!(f, "({})", self)
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, alloc::format!("expected `{}`", c as char)))
        }
    }

    fn tree(&mut self) -> Result<Tree<Nat>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = core::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::parse(start, "expected a positive integer decoration"))?;
        let dec = Nat::new(value).ok_or_else(|| Error::parse(start, "decorations are positive"))?;
        let mut children = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                children.push(self.tree()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(Error::parse(self.pos, "expected `,` or `)`")),
                }
            }
        }
        Ok(Tree::new(dec, children))
    }

    fn forest(&mut self) -> Result<Forest<Nat>> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            if self.peek() == Some(b')') {
                self.pos += 1;
                return Ok(Forest::empty());
            }
            let f = self.forest()?;
            self.expect(b')')?;
            return Ok(f);
        }
        let mut trees = alloc::vec![self.tree()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            trees.push(self.tree()?);
        }
        Ok(Forest::new(trees))
    }
}

impl FromStr for Forest<Nat> {
    type Err = Error;

    /// `tree ("*" tree)*`, `()` or `𝟙` for the empty forest, and an optional
    /// outer pair of parentheses.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "𝟙" {
            return Ok(Forest::empty());
        }
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let f = p.forest()?;
        if p.peek().is_some() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        Ok(f)
    }
}

impl FromStr for Tree<Nat> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let t = p.tree()?;
        if p.peek().is_some() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        Ok(t)
    }
}

/// Vertex-indexed view of a forest in preorder: parents precede children.
pub(crate) struct Flat<L> {
    pub(crate) dec: Vec<L>,
    pub(crate) parent: Vec<Option<usize>>,
}

impl<L: Letter> Flat<L> {
    pub(crate) fn of(f: &Forest<L>) -> Self {
        fn walk<L: Letter>(t: &Tree<L>, parent: Option<usize>, out: &mut Flat<L>) {
            let me = out.dec.len();
            out.dec.push(t.dec.clone());
            out.parent.push(parent);
            for c in &t.children {
                walk(c, Some(me), out);
            }
        }
        let mut out = Flat {
            dec: Vec::new(),
            parent: Vec::new(),
        };
        for t in &f.trees {
            walk(t, None, &mut out);
        }
        out
    }

    pub(crate) fn len(&self) -> usize {
        self.dec.len()
    }

    /// Rebuilds a forest from decorations and parent links (any vertex
    /// order); vertices outside `keep` are dropped, and a kept vertex whose
    /// parent is dropped becomes a root.
    pub(crate) fn build(dec: &[L], parent: &[Option<usize>], keep: impl Fn(usize) -> bool) -> Forest<L> {
        let n = dec.len();
        let mut children: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        let mut roots = Vec::new();
        for v in (0..n).filter(|&v| keep(v)) {
            match parent[v] {
                Some(p) if keep(p) => children[p].push(v),
                _ => roots.push(v),
            }
        }
        fn make<L: Letter>(v: usize, dec: &[L], children: &[Vec<usize>]) -> Tree<L> {
            Tree::new(
                dec[v].clone(),
                children[v].iter().map(|&c| make(c, dec, children)).collect(),
            )
        }
        Forest::new(roots.into_iter().map(|r| make(r, dec, &children)).collect())
    }

    pub(crate) fn restrict(&self, keep: impl Fn(usize) -> bool) -> Forest<L> {
        Flat::build(&self.dec, &self.parent, keep)
    }

    /// Children lists.
    pub(crate) fn children(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                out[*p].push(v);
            }
        }
        out
    }
}

fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Symmetry factor `|Aut F|`: `∏ m_t! σ(t)^{m_t}` over distinct trees,
/// with `σ(tree) = σ(branches)`.
pub fn aut<L: Letter>(f: &Forest<L>) -> BigUint {
    fn tree_aut<L: Letter>(t: &Tree<L>) -> BigUint {
        forest_aut(&t.children)
    }
    fn forest_aut<L: Letter>(trees: &[Tree<L>]) -> BigUint {
        let mut out = BigUint::one();
        let mut i = 0;
        while i < trees.len() {
            let mut j = i;
            while j < trees.len() && trees[j] == trees[i] {
                j += 1;
            }
            let m = j - i;
            out *= factorial(m) * num_traits::pow(tree_aut(&trees[i]), m);
            i = j;
        }
        out
    }
    forest_aut(&f.trees)
}

pub fn aut_rational<L: Letter>(f: &Forest<L>) -> Rational {
    Rational::from_integer(aut(f).into())
}

/// `B₊^b`: grafts the trees of `f` on a new root decorated `b`.
pub fn bplus<L: Letter>(b: L, f: &Forest<L>) -> Tree<L> {
    Tree::new(b, f.trees.clone())
}

pub fn bplus_lc<L: Letter>(b: &L, a: &LinComb<Forest<L>>) -> LinComb<Forest<L>> {
    a.map_basis(|f| Forest::tree(bplus(b.clone(), f)))
}

pub fn forest_mul_lc<L: Letter>(a: &LinComb<Forest<L>>, b: &LinComb<Forest<L>>) -> LinComb<Forest<L>> {
    a.bilinear(b, |x, y| LinComb::basis(x.mul(y)))
}

/// Counit: indicator of the empty forest.
pub fn forest_counit<L: Letter>(f: &Forest<L>) -> Rational {
    if f.is_empty() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Counit of `Γ`: one on forests without edges (including the empty one),
/// the character matching the word-side `|ω| ≤ 1` indicator under `𝔞`.
pub fn forest_counit_gamma<L: Letter>(f: &Forest<L>) -> Rational {
    if f.vertex_count() == f.trees().len() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Order ideals `V₁` (closed under taking parents) as vertex masks.
fn order_ideals<L: Letter>(flat: &Flat<L>) -> Vec<u64> {
    let n = flat.len();
    let mut out = Vec::new();
    fn rec<L: Letter>(flat: &Flat<L>, v: usize, mask: u64, out: &mut Vec<u64>) {
        if v == flat.len() {
            out.push(mask);
            return;
        }
        rec(flat, v + 1, mask, out);
        let allowed = match flat.parent[v] {
            None => true,
            Some(p) => mask & (1 << p) != 0,
        };
        if allowed {
            rec(flat, v + 1, mask | (1 << v), out);
        }
    }
    assert!(n < 64, "forests are limited to 63 vertices");
    rec(flat, 0, 0, &mut out);
    out
}

/// Admissible-cut coproduct `Δ(F) = Σ F|_{V₂} ⊗ F|_{V₁}`: crown on the left,
/// trunk (the part containing the roots) on the right.
pub fn forest_delta<L: Letter>(f: &Forest<L>) -> Tensor<Forest<L>, Forest<L>> {
    let flat = Flat::of(f);
    let mut out = LinComb::zero();
    for ideal in order_ideals(&flat) {
        let trunk = flat.restrict(|v| ideal & (1 << v) != 0);
        let crown = flat.restrict(|v| ideal & (1 << v) == 0);
        out.add_term((crown, trunk), Rational::one());
    }
    out
}

pub fn forest_delta_lc<L: Letter>(a: &LinComb<Forest<L>>) -> Tensor<Forest<L>, Forest<L>> {
    a.extend(forest_delta)
}

/// Every covering subforest `G` with its contraction `F/G`, one per subset
/// of kept edges; `2^{|E(F)|}` entries.
pub fn covering_subforests<L: Letter>(f: &Forest<L>) -> Vec<(Forest<L>, Forest<L>)> {
    let flat = Flat::of(f);
    let n = flat.len();
    let edges: Vec<usize> = (0..n).filter(|&v| flat.parent[v].is_some()).collect();
    let mut out = Vec::with_capacity(1 << edges.len());
    for mask in 0u64..(1u64 << edges.len()) {
        let kept = |v: usize| {
            edges
                .iter()
                .position(|&e| e == v)
                .is_some_and(|i| mask & (1 << i) != 0)
        };
        // G keeps the chosen edges
        let g_parent: Vec<Option<usize>> = (0..n)
            .map(|v| if kept(v) { flat.parent[v] } else { None })
            .collect();
        let g = Flat::build(&flat.dec, &g_parent, |_| true);
        // block representative: the top vertex reached through kept edges
        let mut top: Vec<usize> = (0..n).collect();
        for v in 0..n {
            if kept(v) {
                top[v] = top[flat.parent[v].expect("edge has a parent")];
            }
        }
        let mut dec: BTreeMap<usize, L> = BTreeMap::new();
        for v in 0..n {
            let t = top[v];
            let d = match dec.get(&t) {
                Some(old) => old.combine(&flat.dec[v]),
                None => flat.dec[v].clone(),
            };
            dec.insert(t, d);
        }
        let quotient_dec: Vec<L> = (0..n)
            .map(|v| dec.get(&v).cloned().unwrap_or_else(|| flat.dec[v].clone()))
            .collect();
        let quotient_parent: Vec<Option<usize>> = (0..n)
            .map(|v| flat.parent[v].map(|p| top[p]))
            .collect();
        let quotient = Flat::build(&quotient_dec, &quotient_parent, |v| top[v] == v);
        out.push((g, quotient));
    }
    out
}

/// Internal coproduct `Γ(F) = Σ_G F/G ⊗ G`.
pub fn forest_gamma<L: Letter>(f: &Forest<L>) -> Tensor<Forest<L>, Forest<L>> {
    covering_subforests(f)
        .into_iter()
        .map(|(g, q)| (q, g))
        .collect()
}

pub fn forest_gamma_lc<L: Letter>(a: &LinComb<Forest<L>>) -> Tensor<Forest<L>, Forest<L>> {
    a.extend(forest_gamma)
}

fn extensions<L: Letter>(f: &Forest<L>, contract: bool) -> LinComb<Word<L>> {
    let flat = Flat::of(f);
    let n = flat.len();
    let children = flat.children();
    let child_mask: Vec<u64> = children
        .iter()
        .map(|cs| cs.iter().fold(0u64, |m, &c| m | (1 << c)))
        .collect();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut out = LinComb::zero();
    fn rec<L: Letter>(
        flat: &Flat<L>,
        child_mask: &[u64],
        placed: u64,
        full: u64,
        contract: bool,
        prefix: &mut Vec<L>,
        out: &mut LinComb<Word<L>>,
    ) {
        if placed == full {
            out.add_term(Word::new(prefix.clone()), Rational::one());
            return;
        }
        // vertices whose subtrees are already placed; they form an antichain
        let avail: Vec<usize> = (0..flat.len())
            .filter(|&v| placed & (1 << v) == 0 && child_mask[v] & !placed == 0)
            .collect();
        if contract {
            for sub in 1u64..(1u64 << avail.len()) {
                let mut letter: Option<L> = None;
                let mut mask = placed;
                for (i, &v) in avail.iter().enumerate() {
                    if sub & (1 << i) != 0 {
                        letter = Some(match letter {
                            None => flat.dec[v].clone(),
                            Some(l) => l.combine(&flat.dec[v]),
                        });
                        mask |= 1 << v;
                    }
                }
                prefix.push(letter.expect("nonempty subset"));
                rec(flat, child_mask, mask, full, contract, prefix, out);
                prefix.pop();
            }
        } else {
            for &v in &avail {
                prefix.push(flat.dec[v].clone());
                rec(flat, child_mask, placed | (1 << v), full, contract, prefix, out);
                prefix.pop();
            }
        }
    }
    rec(&flat, &child_mask, 0, full, contract, &mut Vec::new(), &mut out);
    out
}

/// Contracting arborification: the sum of the linear extensions of `F`
/// (descendants before ancestors, so roots come last) where incomparable
/// vertices may share a position, their decorations combined.
pub fn arborify<L: Letter>(f: &Forest<L>) -> LinComb<Word<L>> {
    extensions(f, true)
}

/// Simple arborification: linear extensions without contraction.
pub fn arborify_simple<L: Letter>(f: &Forest<L>) -> LinComb<Word<L>> {
    extensions(f, false)
}

pub fn arborify_lc<L: Letter>(a: &LinComb<Forest<L>>) -> LinComb<Word<L>> {
    a.extend(arborify)
}

fn attach<L: Letter>(base: &Flat<L>, graft: &Tree<L>, at: Option<usize>) -> (Vec<L>, Vec<Option<usize>>) {
    let g = Flat::of(&Forest::tree(graft.clone()));
    let mut dec = base.dec.clone();
    let mut parent = base.parent.clone();
    let offset = dec.len();
    for v in 0..g.len() {
        dec.push(g.dec[v].clone());
        parent.push(match g.parent[v] {
            Some(p) => Some(p + offset),
            None => at,
        });
    }
    (dec, parent)
}

/// Pre-Lie grafting `s → t`: the sum over vertices `v` of `t` of `t` with `s`
/// attached as a new child of `v`.
pub fn graft<L: Letter>(s: &Tree<L>, t: &Tree<L>) -> LinComb<Tree<L>> {
    let base = Flat::of(&Forest::tree(t.clone()));
    (0..base.len())
        .map(|v| {
            let (dec, parent) = attach(&base, s, Some(v));
            let f = Flat::build(&dec, &parent, |_| true);
            f.trees.into_iter().next().expect("grafting keeps one tree")
        })
        .collect()
}

pub fn graft_lc<L: Letter>(a: &LinComb<Tree<L>>, b: &LinComb<Tree<L>>) -> LinComb<Tree<L>> {
    a.bilinear(b, graft)
}

/// Grossman–Larson product `F # G`: each tree of `F`, taken as
/// distinguishable, is either left at root level or grafted on a vertex of
/// `G`; all choices are summed.
pub fn gl_product<L: Letter>(f: &Forest<L>, g: &Forest<L>) -> LinComb<Forest<L>> {
    let base = Flat::of(g);
    let mut states: Vec<(Vec<L>, Vec<Option<usize>>)> = alloc::vec![(base.dec.clone(), base.parent.clone())];
    let sites = base.len();
    for t in &f.trees {
        let mut next = Vec::with_capacity(states.len() * (sites + 1));
        for (dec, parent) in &states {
            let cur = Flat {
                dec: dec.clone(),
                parent: parent.clone(),
            };
            next.push(attach(&cur, t, None));
            for v in 0..sites {
                next.push(attach(&cur, t, Some(v)));
            }
        }
        states = next;
    }
    states
        .into_iter()
        .map(|(dec, parent)| Flat::build(&dec, &parent, |_| true))
        .collect()
}

pub fn gl_product_lc<L: Letter>(a: &LinComb<Forest<L>>, b: &LinComb<Forest<L>>) -> LinComb<Forest<L>> {
    a.bilinear(b, gl_product)
}

/// Antipode of `(H_<, ·, Δ)`: `S(F) = -F - Σ S(crown) · trunk` over the
/// proper nonempty admissible cuts.
pub fn forest_antipode<L: Letter>(f: &Forest<L>) -> LinComb<Forest<L>> {
    fn rec<L: Letter>(
        f: &Forest<L>,
        memo: &mut BTreeMap<Forest<L>, LinComb<Forest<L>>>,
    ) -> LinComb<Forest<L>> {
        if let Some(s) = memo.get(f) {
            return s.clone();
        }
        let mut out = LinComb::zero();
        if f.is_empty() {
            out.add_term(Forest::empty(), Rational::one());
        } else {
            out.add_term(f.clone(), -Rational::one());
            for ((crown, trunk), c) in &forest_delta(f) {
                if crown.is_empty() || trunk.is_empty() {
                    continue;
                }
                let s = rec(crown, memo);
                out.add_scaled(&-c.clone(), &s.map_basis(|x| x.mul(trunk)));
            }
        }
        memo.insert(f.clone(), out.clone());
        out
    }
    rec(f, &mut BTreeMap::new())
}

/// All trees with exactly `n` vertices and decorations from `decs`.
pub fn trees_of_size<L: Letter>(n: usize, decs: &[L]) -> Vec<Tree<L>> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f in forests_of_size(n - 1, decs) {
        for d in decs {
            out.push(bplus(d.clone(), &f));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All forests with exactly `n` vertices and decorations from `decs`, sorted.
pub fn forests_of_size<L: Letter>(n: usize, decs: &[L]) -> Vec<Forest<L>> {
    // multisets of trees with nonincreasing (size, tree) to avoid repeats
    fn rec<L: Letter>(
        rest: usize,
        bound: Option<&Tree<L>>,
        by_size: &[Vec<Tree<L>>],
        acc: &mut Vec<Tree<L>>,
        out: &mut Vec<Forest<L>>,
    ) {
        if rest == 0 {
            out.push(Forest::new(acc.clone()));
            return;
        }
        for (k, trees) in by_size.iter().enumerate().take(rest + 1).skip(1) {
            for t in trees {
                let key = (k, t);
                if let Some(b) = bound {
                    if key > (b.vertex_count(), b) {
                        continue;
                    }
                }
                acc.push(t.clone());
                rec(rest - k, Some(t), by_size, acc, out);
                acc.pop();
            }
        }
    }
    let by_size: Vec<Vec<Tree<L>>> = (0..=n).map(|k| trees_of_size(k, decs)).collect();
    let mut out = Vec::new();
    rec(n, None, &by_size, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All forests with at most `max_vertices` vertices, smallest first.
pub fn forests_up_to<L: Letter>(max_vertices: usize, decs: &[L]) -> Vec<Forest<L>> {
    (0..=max_vertices).flat_map(|n| forests_of_size(n, decs)).collect()
}
