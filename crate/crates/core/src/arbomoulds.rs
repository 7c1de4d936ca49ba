//! Arborescent moulds: rational-valued rules on forests, with the product
//! `×` dual to admissible cuts, the compositions `∘` and `⋄` over covering
//! subforests, arborified moulds `M_<` and truncated S-series.

use alloc::boxed::Box;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::forests::{
    aut_rational, covering_subforests, forest_delta, forests_up_to, gl_product, Forest,
};
use crate::letter::{Letter, Nat};
use crate::linalg::{LinComb, Rational};
use crate::memo::Memo;
use crate::moulds::Mould;
use crate::random::keyed_small_rational;

struct Inner<L: Letter> {
    name: String,
    rule: Box<dyn Fn(&Forest<L>) -> Rational>,
    memo: Memo<Forest<L>, Rational>,
}

/// A mould indexed by decorated forests.
#[derive(Clone)]
pub struct ArboMould<L: Letter = Nat>(Rc<Inner<L>>);

impl<L: Letter> ArboMould<L> {
    pub fn from_fn(
        name: impl Into<String>,
        rule: impl Fn(&Forest<L>) -> Rational + 'static,
    ) -> Self {
        ArboMould(Rc::new(Inner {
            name: name.into(),
            rule: Box::new(rule),
            memo: Memo::new(),
        }))
    }

    pub fn table(
        name: impl Into<String>,
        entries: alloc::collections::BTreeMap<Forest<L>, Rational>,
        default: Rational,
    ) -> Self {
        ArboMould::from_fn(name, move |f| {
            entries.get(f).cloned().unwrap_or_else(|| default.clone())
        })
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn eval(&self, f: &Forest<L>) -> Rational {
        self.0.memo.get_or_compute(f, || (self.0.rule)(f))
    }

    pub fn eval_lc(&self, a: &LinComb<Forest<L>>) -> Rational {
        a.pair(|f| self.eval(f))
    }

    /// `(M × N)^F = Σ M^{crown} N^{trunk}` over admissible cuts.
    pub fn mul(&self, other: &ArboMould<L>) -> ArboMould<L> {
        let (m, n) = (self.clone(), other.clone());
        ArboMould::from_fn(format!("({} x {})", self.name(), other.name()), move |f| {
            forest_delta(f).pair(|(crown, trunk)| m.eval(crown) * n.eval(trunk))
        })
    }

    /// `(M ∘ N)^F = Σ_G M^{F/G} N^{G₁}⋯N^{G_r}` over covering subforests,
    /// `G₁, …, G_r` the trees of `G`; `(M ∘ N)^𝟙 = M^𝟙`.
    pub fn comp(&self, other: &ArboMould<L>) -> ArboMould<L> {
        let (m, n) = (self.clone(), other.clone());
        ArboMould::from_fn(format!("({} o {})", self.name(), other.name()), move |f| {
            if f.is_empty() {
                return m.eval(f);
            }
            let mut acc = Rational::zero();
            for (g, quotient) in covering_subforests(f) {
                let mut term = Rational::one();
                for t in g.trees() {
                    term *= n.eval(&Forest::tree(t.clone()));
                    if term.is_zero() {
                        break;
                    }
                }
                if !term.is_zero() {
                    acc += m.eval(&quotient) * term;
                }
            }
            acc
        })
    }

    /// `(M ⋄ N)^F = Σ_G M^{F/G} N^G`; `(M ⋄ N)^𝟙 = M^𝟙`.
    pub fn diamond(&self, other: &ArboMould<L>) -> ArboMould<L> {
        let (m, n) = (self.clone(), other.clone());
        ArboMould::from_fn(format!("({} <> {})", self.name(), other.name()), move |f| {
            if f.is_empty() {
                return m.eval(f);
            }
            covering_subforests(f)
                .iter()
                .map(|(g, quotient)| m.eval(quotient) * n.eval(g))
                .fold(Rational::zero(), |acc, x| acc + x)
        })
    }

    pub fn add(&self, other: &ArboMould<L>) -> ArboMould<L> {
        let (m, n) = (self.clone(), other.clone());
        ArboMould::from_fn(format!("({} + {})", self.name(), other.name()), move |f| {
            m.eval(f) + n.eval(f)
        })
    }
}

impl<L: Letter> fmt::Debug for ArboMould<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArboMould({})", self.name())
    }
}

/// `M_< = M ∘ 𝔞`: evaluates `M` on the contracting arborification.
pub fn arborify_mould<L: Letter>(m: &Mould<L>) -> ArboMould<L> {
    let m = m.clone();
    ArboMould::from_fn(format!("{}_<", m.name()), move |f| {
        m.eval_lc(&crate::forests::arborify(f))
    })
}

/// Unit for the arborescent product: one on the empty forest.
pub fn arbo_epsilon<L: Letter>() -> ArboMould<L> {
    ArboMould::from_fn("eps", |f: &Forest<L>| {
        if f.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Right unit for `∘`: one on single-vertex forests, zero elsewhere.
///
/// This is not `arborify_mould(&identity())`, which is also nonzero on
/// forests whose vertices can all be contracted into one letter.
pub fn i_arbo<L: Letter>() -> ArboMould<L> {
    ArboMould::from_fn("I_arbo", |f: &Forest<L>| {
        if f.vertex_count() == 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// A total seeded arborescent mould with small rational values.
pub fn random_arbo<L: Letter>(seed: u64) -> ArboMould<L> {
    ArboMould::from_fn(format!("random:{}", seed), move |f: &Forest<L>| {
        keyed_small_rational(seed, f)
    })
}

/// First pair `(F, G)` breaking `N^{F·G} = N^F N^G`, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparativeCounterexample<L: Letter = Nat> {
    pub left: Forest<L>,
    pub right: Forest<L>,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Checks `N^𝟙 = 1` and `N^{F·G} = N^F N^G` for nonempty `F`, `G` with at
/// most `max_vertices` vertices together.
pub fn check_separative<L: Letter>(
    n: &ArboMould<L>,
    decs: &[L],
    max_vertices: usize,
) -> core::result::Result<(), SeparativeCounterexample<L>> {
    let unit = Forest::empty();
    let at_unit = n.eval(&unit);
    if !at_unit.is_one() {
        return Err(SeparativeCounterexample {
            left: unit.clone(),
            right: unit,
            lhs: at_unit,
            rhs: Rational::one(),
        });
    }
    let basis = forests_up_to(max_vertices, decs);
    for f in basis.iter().filter(|f| !f.is_empty()) {
        for g in basis.iter().filter(|g| !g.is_empty()) {
            if f.vertex_count() + g.vertex_count() > max_vertices {
                continue;
            }
            let lhs = n.eval(&f.mul(g));
            let rhs = n.eval(f) * n.eval(g);
            if lhs != rhs {
                return Err(SeparativeCounterexample {
                    left: f.clone(),
                    right: g.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(())
}

pub fn is_separative<L: Letter>(n: &ArboMould<L>, decs: &[L], max_vertices: usize) -> bool {
    check_separative(n, decs, max_vertices).is_ok()
}

/// `S^M = Σ_F (M^F / |Aut F|) F`, truncated by vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSSeries<L: Letter = Nat> {
    pub max_vertices: usize,
    pub coeffs: LinComb<Forest<L>>,
}

impl<L: Letter> TruncatedSSeries<L> {
    pub fn new(max_vertices: usize, coeffs: LinComb<Forest<L>>) -> Self {
        let coeffs = coeffs.filter(|f| f.vertex_count() <= max_vertices);
        TruncatedSSeries {
            max_vertices,
            coeffs,
        }
    }

    /// Grossman–Larson product, truncated.
    pub fn gl_mul(&self, other: &TruncatedSSeries<L>) -> TruncatedSSeries<L> {
        let v = self.max_vertices.min(other.max_vertices);
        let mut out = LinComb::zero();
        for (f, a) in &self.coeffs {
            for (g, b) in &other.coeffs {
                if f.vertex_count() + g.vertex_count() > v {
                    continue;
                }
                out.add_scaled(&(a * b), &gl_product(f, g));
            }
        }
        TruncatedSSeries::new(v, out)
    }
}

pub fn s_series<L: Letter>(m: &ArboMould<L>, decs: &[L], max_vertices: usize) -> TruncatedSSeries<L> {
    let coeffs = forests_up_to(max_vertices, decs)
        .into_iter()
        .map(|f| {
            let c = m.eval(&f) / aut_rational(&f);
            (f, c)
        })
        .collect();
    TruncatedSSeries::new(max_vertices, coeffs)
}

pub fn gl_series_mul<L: Letter>(a: &TruncatedSSeries<L>, b: &TruncatedSSeries<L>) -> TruncatedSSeries<L> {
    a.gl_mul(b)
}

/// Evaluation of `M` on all forests up to a bound, for comparisons.
pub fn values<L: Letter>(m: &ArboMould<L>, decs: &[L], max_vertices: usize) -> Vec<(Forest<L>, Rational)> {
    forests_up_to(max_vertices, decs)
        .into_iter()
        .map(|f| {
            let v = m.eval(&f);
            (f, v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};
    use crate::moulds::{exp, identity, random_table};

    fn f(s: &str) -> Forest {
        s.parse().unwrap()
    }

    const D: [Nat; 2] = [Nat(1), Nat(2)];

    #[test]
    fn arborified_examples() {
        let e = arborify_mould(&exp::<Nat>());
        assert_eq!(e.eval(&f("3(1,2)")), ratio(5, 6));
        let i = arborify_mould(&identity::<Nat>());
        assert_eq!(i.eval(&f("1*2")), int(1));
        assert_eq!(i_arbo::<Nat>().eval(&f("1*2")), int(0));
        assert_eq!(i.eval(&f("1")), int(1));
        assert_eq!(arborify_mould(&crate::moulds::epsilon::<Nat>()).eval(&Forest::empty()), int(1));
    }

    #[test]
    fn small_products() {
        let (m, n) = (random_arbo::<Nat>(1), random_arbo::<Nat>(2));
        let a = f("1");
        let e = Forest::empty();
        assert_eq!(m.mul(&n).eval(&a), m.eval(&e) * n.eval(&a) + m.eval(&a) * n.eval(&e));
        assert_eq!(m.diamond(&n).eval(&a), m.eval(&a) * n.eval(&a));
        let t = f("1(2)");
        assert_eq!(
            m.diamond(&n).eval(&t),
            m.eval(&t) * n.eval(&f("1*2")) + m.eval(&f("3")) * n.eval(&t)
        );
        assert_eq!(
            m.comp(&n).eval(&t),
            m.eval(&t) * n.eval(&f("1")) * n.eval(&f("2")) + m.eval(&f("3")) * n.eval(&t)
        );
        assert_eq!(i_arbo::<Nat>().comp(&n).eval(&f("1*2")), int(0));
        for x in forests_up_to(4, &D) {
            assert_eq!(m.comp(&i_arbo()).eval(&x), m.eval(&x));
        }
    }

    #[test]
    fn separative_predicate() {
        assert!(is_separative(&arbo_epsilon::<Nat>(), &D, 4));
        let err = check_separative(&i_arbo::<Nat>(), &D, 4).unwrap_err();
        assert_eq!(err.lhs, int(0));
        assert_eq!(err.rhs, int(1));
        assert!(!is_separative(&arborify_mould(&random_table::<Nat>(3)), &D, 3));
    }

    #[test]
    fn series_basics() {
        let s = s_series(&arbo_epsilon::<Nat>(), &D, 2);
        assert_eq!(s.coeffs, LinComb::basis(Forest::empty()));
        let m = random_arbo::<Nat>(4);
        let one = [Nat(1)];
        let s = s_series(&m, &one, 2);
        assert_eq!(s.coeffs.coeff(&f("1*1")), m.eval(&f("1*1")) / int(2));
        assert_eq!(s.coeffs.coeff(&f("1(1)")), m.eval(&f("1(1)")));
        assert_eq!(s.coeffs.coeff(&f("1")), m.eval(&f("1")));
        assert!(s.coeffs.support().all(|x| x.vertex_count() <= 2));
    }
}
