//! Named verification suites. Each suite enumerates its inputs exhaustively
//! within the bounds and compares both sides of every identity exactly.

use std::fmt::Display;
use std::time::Instant;

use mouldcalc_core::arbomoulds::{
    arbo_epsilon, arborify_mould, check_separative, i_arbo, random_arbo, s_series, ArboMould,
};
use mouldcalc_core::forests::{
    arborify, arborify_simple, aut_rational, bplus, covering_subforests, forest_antipode,
    forest_counit, forest_counit_gamma, forest_delta, forest_gamma, forests_up_to, gl_product,
    graft, trees_of_size, Forest, Tree,
};
use mouldcalc_core::linalg::{int, ratio, RowEchelon};
use mouldcalc_core::moulds::{
    audit_composition, audit_product, check_symmetral, check_symmetrel, epsilon, exp,
    gen_symmetrel, growth_audit, identity, j, random_geometric, random_table, substitute,
    word_series, Mould, PairCounterexample,
};
use mouldcalc_core::qsym::{deconcat_oracle, gamma_oracle, q, q_product_check, split_pairs, OrderedAlphabet};
use mouldcalc_core::surjections::{
    apply_surjection, enumerate_qsh, enumerate_qsh_all, enumerate_wqsh, factor_block_product,
    factorize_wqsh, fiber_block_sum, fiber_qsh, nondecreasing_surjections, standardize,
    SplitSurjection, Surjection,
};
use mouldcalc_core::words::{
    antipode, antipode_right, concat, counit_delta, counit_gamma, deconcat, gamma,
    gamma_via_surjections, qsh, qsh_lc, qsh_via_surjections, shuffle, words_up_to_len, Word,
};
use mouldcalc_core::{LinComb, Nat, Rational, Tensor};

use crate::report::{Bounds, CheckResult, Counterexample, Outcome, SuiteReport};
use crate::{usage, Result};

pub const SUITES: &[&str] = &[
    "golden",
    "words-hopf",
    "gamma-bialgebra",
    "comodule",
    "wqsh",
    "qsym-oracle",
    "mould-algebra",
    "growth",
    "forest-hopf",
    "forest-gamma",
    "arborification",
    "arbomould-algebra",
    "s-series",
];

const LIMIT: f64 = 1e6;

struct Ctx {
    checks: Vec<CheckResult>,
}

impl Ctx {
    fn new() -> Self {
        Ctx { checks: Vec::new() }
    }

    fn push(&mut self, name: &str, cases: usize, outcome: Outcome) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            cases,
            outcome,
        });
    }

    /// Checks `lhs == rhs` on every case; records the first failure.
    fn identity<C, T, I, D, F>(&mut self, name: &str, cases: I, label: D, mut f: F)
    where
        I: IntoIterator<Item = C>,
        T: PartialEq + Display,
        D: Fn(&C) -> String,
        F: FnMut(&C) -> (T, T),
    {
        let mut n = 0;
        for c in cases {
            n += 1;
            let (l, r) = f(&c);
            if l != r {
                let x = Counterexample {
                    input: label(&c),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                };
                self.push(name, n, Outcome::Fail(x));
                return;
            }
        }
        self.push(name, n, Outcome::Pass);
    }

    /// A documented non-identity: passes when a counterexample is found.
    fn expect_fail<C, T, I, D, F>(&mut self, name: &str, cases: I, label: D, mut f: F)
    where
        I: IntoIterator<Item = C>,
        T: PartialEq + Display,
        D: Fn(&C) -> String,
        F: FnMut(&C) -> (T, T),
    {
        let mut n = 0;
        for c in cases {
            n += 1;
            let (l, r) = f(&c);
            if l != r {
                let x = Counterexample {
                    input: label(&c),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                };
                self.push(name, n, Outcome::ExpectedFail(x));
                return;
            }
        }
        let x = Counterexample {
            input: "none found".into(),
            lhs: "identity held on every case".into(),
            rhs: "a counterexample was expected".into(),
        };
        self.push(name, n, Outcome::Fail(x));
    }

    fn symmetry(&mut self, name: &str, cases: usize, found: Option<PairCounterexample>, expected: bool) {
        let outcome = match (found, expected) {
            (None, false) => Outcome::Pass,
            (Some(c), true) => Outcome::ExpectedFail(pair_cx(c)),
            (Some(c), false) => Outcome::Fail(pair_cx(c)),
            (None, true) => Outcome::Fail(Counterexample {
                input: "none found".into(),
                lhs: "multiplicative on every pair".into(),
                rhs: "a counterexample was expected".into(),
            }),
        };
        self.push(name, cases, outcome);
    }
}

fn pair_cx(c: PairCounterexample) -> Counterexample {
    Counterexample {
        input: format!("u={} v={}", c.u, c.v),
        lhs: c.lhs.to_string(),
        rhs: c.rhs.to_string(),
    }
}

fn nats(v: &[u32]) -> Result<Vec<Nat>> {
    v.iter()
        .map(|&x| Nat::new(x).ok_or_else(|| crate::Error::Usage("letters must be positive".into())))
        .collect()
}

fn words(b: &Bounds) -> Result<Vec<Word>> {
    Ok(words_up_to_len(&nats(&b.letters)?, b.max_len))
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn fo(s: &str) -> Forest {
    s.parse().expect("literal forest")
}

fn sp(s: &str) -> SplitSurjection {
    s.parse().expect("literal surjection")
}

fn pairs<T: Clone>(items: &[T], size: impl Fn(&T) -> usize, max: usize) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for a in items {
        for b in items {
            if size(a) + size(b) <= max {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn triples<T: Clone>(items: &[T], size: impl Fn(&T) -> usize, max: usize) -> Vec<(T, T, T)> {
    let mut out = Vec::new();
    for a in items {
        for b in items {
            for c in items {
                if size(a) + size(b) + size(c) <= max {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}

type T3<X> = LinComb<(X, X, X)>;

fn coassoc_left<X: Ord + Clone>(t: &Tensor<X, X>, co: impl Fn(&X) -> Tensor<X, X>) -> T3<X> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        out.add_scaled(c, &co(a).map_basis(|(x, y)| (x.clone(), y.clone(), b.clone())));
    }
    out
}

fn coassoc_right<X: Ord + Clone>(t: &Tensor<X, X>, co: impl Fn(&X) -> Tensor<X, X>) -> T3<X> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        out.add_scaled(c, &co(b).map_basis(|(x, y)| (a.clone(), x.clone(), y.clone())));
    }
    out
}

/// `(a₁ ⊗ b₁)(a₂ ⊗ b₂) = a₁a₂ ⊗ b₁b₂` for a product on basis elements.
fn tensor_mul<X: Ord + Clone>(
    s: &Tensor<X, X>,
    t: &Tensor<X, X>,
    mul: impl Fn(&X, &X) -> LinComb<X>,
) -> Tensor<X, X> {
    let mut out = LinComb::zero();
    for ((a1, b1), c1) in s {
        for ((a2, b2), c2) in t {
            out.add_scaled(&(c1 * c2), &mul(a1, a2).tensor(&mul(b1, b2)));
        }
    }
    out
}

fn left_counit<X: Ord + Clone>(t: &Tensor<X, X>, eps: impl Fn(&X) -> Rational) -> LinComb<X> {
    t.iter().map(|((a, b), c)| (b.clone(), c * eps(a))).collect()
}

fn right_counit<X: Ord + Clone>(t: &Tensor<X, X>, eps: impl Fn(&X) -> Rational) -> LinComb<X> {
    t.iter().map(|((a, b), c)| (a.clone(), c * eps(b))).collect()
}

/// `m(S ⊗ Id)Δ` and `m(Id ⊗ S)Δ`.
fn antipode_sides<X: Ord + Clone>(
    d: &Tensor<X, X>,
    s: impl Fn(&X) -> LinComb<X>,
    mul: impl Fn(&X, &X) -> LinComb<X>,
) -> (LinComb<X>, LinComb<X>) {
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a, b), c) in d {
        left.add_scaled(c, &s(a).extend(|x| mul(x, b)));
        right.add_scaled(c, &s(b).extend(|y| mul(a, y)));
    }
    (left, right)
}

/// `(Δ ⊗ Id)Γ(x)` and `m₁₃(Γ ⊗ Γ)Δ(x)`.
fn comodule_sides<X: Ord + Clone>(
    x: &X,
    delta: impl Fn(&X) -> Tensor<X, X>,
    gamma: impl Fn(&X) -> Tensor<X, X>,
    mul: impl Fn(&X, &X) -> LinComb<X>,
) -> (T3<X>, T3<X>) {
    let lhs = coassoc_left(&gamma(x), &delta);
    let mut rhs = LinComb::zero();
    for ((u, v), c) in &delta(x) {
        let gv = gamma(v);
        for ((u1, u2), x1) in &gamma(u) {
            for ((v1, v2), y1) in &gv {
                let prod = mul(u2, v2).map_basis(|m| (u1.clone(), v1.clone(), m.clone()));
                rhs.add_scaled(&(c * x1 * y1), &prod);
            }
        }
    }
    (lhs, rhs)
}

fn word_mul(a: &Word, b: &Word) -> LinComb<Word> {
    qsh(a, b)
}

fn forest_mul(a: &Forest, b: &Forest) -> LinComb<Forest> {
    LinComb::basis(a.mul(b))
}

fn golden(ctx: &mut Ctx) {
    let cases = [
        ("qsh [1] [2]", qsh(&w("[1]"), &w("[2]")).to_string(), "[1.2] + [2.1] + [3]"),
        (
            "qsh [1.2] [3]",
            qsh(&w("[1.2]"), &w("[3]")).to_string(),
            "[1.2.3] + [1.3.2] + [1.5] + [3.1.2] + [4.2]",
        ),
        ("gamma [1]", gamma(&w("[1]")).to_string(), "[1](x)[1]"),
        (
            "gamma [1.2]",
            gamma(&w("[1.2]")).to_string(),
            "[1.2](x)[1.2] + [1.2](x)[2.1] + [1.2](x)[3] + [3](x)[1.2]",
        ),
        ("Std(13224)", standardize(&[1, 3, 2, 2, 4]).to_string(), "14235"),
        ("arborify 3(1,2)", arborify(&fo("3(1,2)")).to_string(), "[1.2.3] + [2.1.3] + [3.3]"),
    ];
    ctx.identity("golden printed values", cases, |c| c.0.to_string(), |c| {
        (c.1.clone(), c.2.to_string())
    });

    let s = qsh(&w("[1]"), &w("[2]"));
    let lhs = s.extend(gamma);
    let rhs = s.tensor(&s);
    ctx.identity("gamma([1] qsh [2]) is group-like", [()], |_| "[1],[2]".into(), |_| {
        (lhs.clone(), rhs.clone())
    });

    let phi = sp("1224|113");
    let f = factorize_wqsh(&phi).map(|(s, d)| format!("delta={} sigma={}", d, s));
    ctx.identity("factorization of 1224|113", [()], |_| phi.to_string(), |_| {
        (
            f.clone().unwrap_or_else(|e| e.to_string()),
            "delta=124|13 sigma=1223|445".to_string(),
        )
    });
    let table = fiber_qsh(&phi)
        .map(|v| {
            v.iter()
                .map(|e| format!("{} {}", e.eta, e.sigma))
                .collect::<Vec<_>>()
                .join("; ")
        })
        .unwrap_or_else(|e| e.to_string());
    ctx.identity("fiber table of 1224|113", [()], |_| phi.to_string(), |_| {
        (
            table.clone(),
            "1457|236 1112234; 2457|136 1112234; 3457|126 1112234; 1346|125 112234; 2346|125 112234"
                .to_string(),
        )
    });
    let n = fiber_qsh(&sp("1224|112334")).map(|v| v.len()).unwrap_or(0);
    ctx.identity("fiber of 1224|112334 has 75 elements", [()], |_| "1224|112334".into(), |_| {
        (n, 75)
    });
}

fn words_hopf(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let ws = words(b)?;
    let len = |x: &Word| x.len();
    let label2 = |c: &(Word, Word)| format!("u={} v={}", c.0, c.1);
    let label3 = |c: &(Word, Word, Word)| format!("u={} v={} w={}", c.0, c.1, c.2);
    let p = pairs(&ws, len, b.max_len);
    let t = triples(&ws, len, b.max_len);
    ctx.identity("qsh associative", t.iter().cloned(), label3, |(u, v, x)| {
        (qsh(u, v).extend(|uv| qsh(uv, x)), qsh(v, x).extend(|vx| qsh(u, vx)))
    });
    ctx.identity("qsh commutative", p.iter().cloned(), label2, |(u, v)| (qsh(u, v), qsh(v, u)));
    ctx.identity("qsh unit", ws.iter().cloned(), |x| x.to_string(), |x| {
        (qsh(&Word::empty(), x), LinComb::basis(x.clone()))
    });
    ctx.identity("qsh by surjections", p.iter().cloned(), label2, |(u, v)| {
        (qsh(u, v), qsh_via_surjections(u, v))
    });
    ctx.identity("delta coassociative", ws.iter().cloned(), |x| x.to_string(), |x| {
        let d = deconcat(x);
        (coassoc_left(&d, deconcat), coassoc_right(&d, deconcat))
    });
    ctx.identity("delta counit", ws.iter().cloned(), |x| x.to_string(), |x| {
        let d = deconcat(x);
        (left_counit(&d, counit_delta), right_counit(&d, counit_delta))
    });
    ctx.identity("delta counit is the identity", ws.iter().cloned(), |x| x.to_string(), |x| {
        (left_counit(&deconcat(x), counit_delta), LinComb::basis(x.clone()))
    });
    ctx.identity("delta multiplicative", p.iter().cloned(), label2, |(u, v)| {
        (
            qsh(u, v).extend(deconcat),
            tensor_mul(&deconcat(u), &deconcat(v), word_mul),
        )
    });
    ctx.identity("antipode left", ws.iter().cloned(), |x| x.to_string(), |x| {
        let (l, _) = antipode_sides(&deconcat(x), antipode, word_mul);
        (l, LinComb::term(Word::empty(), counit_delta(x)))
    });
    ctx.identity("antipode right", ws.iter().cloned(), |x| x.to_string(), |x| {
        let (_, r) = antipode_sides(&deconcat(x), antipode, word_mul);
        (r, LinComb::term(Word::empty(), counit_delta(x)))
    });
    ctx.identity("antipode is a qsh morphism", p.iter().cloned(), label2, |(u, v)| {
        (qsh(u, v).extend(antipode), qsh_lc(&antipode(u), &antipode(v)))
    });
    ctx.identity("antipode recursions agree", ws.iter().cloned(), |x| x.to_string(), |x| {
        (antipode(x), antipode_right(x))
    });
    Ok(())
}

fn gamma_bialgebra(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let ws = words(b)?;
    let label2 = |c: &(Word, Word)| format!("u={} v={}", c.0, c.1);
    let p = pairs(&ws, |x| x.len(), b.max_len);
    ctx.identity("gamma coassociative", ws.iter().cloned(), |x| x.to_string(), |x| {
        let g = gamma(x);
        (coassoc_left(&g, gamma), coassoc_right(&g, gamma))
    });
    ctx.identity("gamma left counit", ws.iter().cloned(), |x| x.to_string(), |x| {
        (left_counit(&gamma(x), counit_gamma), LinComb::basis(x.clone()))
    });
    ctx.identity("gamma right counit", ws.iter().cloned(), |x| x.to_string(), |x| {
        (right_counit(&gamma(x), counit_gamma), LinComb::basis(x.clone()))
    });
    ctx.identity("gamma counit is a qsh character", p.iter().cloned(), label2, |(u, v)| {
        (qsh(u, v).pair(counit_gamma), counit_gamma(u) * counit_gamma(v))
    });
    ctx.identity("gamma multiplicative", p.iter().cloned(), label2, |(u, v)| {
        (qsh(u, v).extend(gamma), tensor_mul(&gamma(u), &gamma(v), word_mul))
    });
    ctx.identity("gamma internal", ws.iter().cloned(), |x| x.to_string(), |x| {
        let bad: Vec<String> = gamma(x)
            .iter()
            .filter(|((a, c), _)| a.weight() != x.weight() || c.weight() != x.weight())
            .map(|((a, c), _)| format!("{}(x){}", a, c))
            .collect();
        (bad.join(" "), String::new())
    });
    ctx.identity("gamma by surjections", ws.iter().cloned(), |x| x.to_string(), |x| {
        (gamma(x), gamma_via_surjections(x))
    });
    Ok(())
}

fn comodule(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let ws = words(b)?;
    ctx.identity("comodule coaction", ws.iter().cloned(), |x| x.to_string(), |x| {
        comodule_sides(x, deconcat, gamma, word_mul)
    });
    ctx.identity("comodule counit", ws.iter().cloned(), |x| x.to_string(), |x| {
        (
            left_counit(&gamma(x), counit_delta),
            LinComb::term(Word::empty(), counit_delta(x)),
        )
    });
    ctx.identity("comodule antipode", ws.iter().cloned(), |x| x.to_string(), |x| {
        let lhs = gamma(x).map_legs(antipode, |y| LinComb::basis(y.clone()));
        (lhs, antipode(x).extend(gamma))
    });
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All surjections of `{1..n}` onto an initial segment.
fn all_surjections(n: usize) -> Vec<Surjection> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; n];
    loop {
        if let Ok(s) = Surjection::new(cur.clone()) {
            out.push(s);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if (cur[k] as usize) < n {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
        }
    }
}

/// Elements of `qsh_φ` found by filtering every quasi-shuffle.
fn fiber_brute_force(phi: &SplitSurjection) -> Vec<(SplitSurjection, Vec<u32>)> {
    let mut out = Vec::new();
    'eta: for eta in enumerate_qsh_all(phi.p(), phi.q()) {
        let mut sigma = vec![0u32; eta.range()];
        for (a, (&e, &f)) in eta.map().iter().zip(phi.map()).enumerate() {
            let slot = &mut sigma[e as usize - 1];
            if *slot != 0 && *slot != f {
                continue 'eta;
            }
            *slot = f;
            for (bb, (&e2, &f2)) in eta.map().iter().zip(phi.map()).enumerate() {
                if a != bb && f < f2 && e >= e2 {
                    continue 'eta;
                }
            }
        }
        if sigma.windows(2).all(|p| p[0] <= p[1]) {
            out.push((eta, sigma));
        }
    }
    out.sort();
    out
}

fn wqsh(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let shapes = |max: usize| -> Vec<(usize, usize)> {
        (0..=max).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect()
    };
    ctx.identity("shuffles counted by binomials", shapes(8), |c| format!("{:?}", c), |&(p, q)| {
        (enumerate_qsh(p, q, 0).len(), binom(p + q, p))
    });
    ctx.identity("quasi-shuffles are weak quasi-shuffles", shapes(6), |c| format!("{:?}", c), |&(p, q)| {
        let weak = enumerate_wqsh(p, q);
        let missing = enumerate_qsh_all(p, q).into_iter().filter(|e| !weak.contains(e)).count();
        (missing, 0)
    });
    let phis: Vec<SplitSurjection> = shapes(6)
        .into_iter()
        .flat_map(|(p, q)| enumerate_wqsh(p, q))
        .collect();
    ctx.identity("factorization recomposes", phis.iter().cloned(), |c| c.to_string(), |phi| {
        let back = factorize_wqsh(phi).ok().and_then(|(s, d)| {
            let ok = s.surjection().is_nondecreasing()
                && (s.p() == 0 || s.q() == 0 || s.map()[s.p() - 1] < s.map()[s.p()])
                && d.is_quasi_shuffle();
            d.surjection().after(s.surjection()).ok().filter(|_| ok)
        });
        (format!("{:?}", back.map(|x| x.to_string())), format!("{:?}", Some(phi.surjection().to_string())))
    });
    ctx.identity("factorization unique", phis.iter().cloned(), |c| c.to_string(), |phi| {
        let (p, n) = (phi.p(), phi.map().len());
        let mut found = 0;
        for s in nondecreasing_surjections(n) {
            let im = s.images();
            if p > 0 && p < n && im[p - 1] >= im[p] {
                continue;
            }
            let left = if p == 0 { 0 } else { im[p - 1] as usize };
            for d in enumerate_qsh_all(left, s.range() - left) {
                if d.surjection().after(&s).ok().as_ref() == Some(phi.surjection()) {
                    found += 1;
                }
            }
        }
        (found, 1)
    });
    ctx.identity("fiber matches brute force", phis.iter().cloned(), |c| c.to_string(), |phi| {
        let mut fast: Vec<(SplitSurjection, Vec<u32>)> = fiber_qsh(phi)
            .unwrap_or_default()
            .into_iter()
            .map(|e| (e.eta, e.sigma.images().to_vec()))
            .collect();
        fast.sort();
        let ok = fast.iter().all(|(eta, s)| {
            Surjection::new(s.clone())
                .ok()
                .and_then(|s| s.after(eta.surjection()).ok())
                .as_ref()
                == Some(phi.surjection())
        });
        let fast = if ok { format!("{:?}", fast) } else { "fiber element does not recompose".into() };
        (fast, format!("{:?}", fiber_brute_force(phi)))
    });
    let letters = nats(&b.letters[..b.letters.len().min(2)])?;
    let ws = words_up_to_len(&letters, 5);
    let mut cases = Vec::new();
    for u in &ws {
        for v in &ws {
            if u.len() + v.len() <= 5 {
                for phi in enumerate_wqsh(u.len(), v.len()) {
                    cases.push((concat(u, v), phi));
                }
            }
        }
    }
    ctx.identity("fiber blocks equal factor blocks", cases, |(x, phi)| format!("w={} phi={}", x, phi), |(x, phi)| {
        (
            fiber_block_sum(x, phi).map_err(|e| e.to_string()),
            factor_block_product(x, phi).map_err(|e| e.to_string()),
        )
        .pipe(|(l, r)| (format!("{:?}", l.map(|v| v.to_string())), format!("{:?}", r.map(|v| v.to_string()))))
    });
    let mut comp_cases = Vec::new();
    for n in 0..=4usize {
        let x = Word::from_values(&(1..=n as u32).collect::<Vec<_>>())?;
        for s in all_surjections(n) {
            for t in all_surjections(s.range()) {
                comp_cases.push((x.clone(), s.clone(), t));
            }
        }
    }
    ctx.identity(
        "surjection action composes",
        comp_cases,
        |(x, s, t)| format!("w={} sigma={} tau={}", x, s, t),
        |(x, s, t)| {
            let lhs = apply_surjection(x, s).and_then(|y| apply_surjection(&y, t));
            let rhs = t.after(s).and_then(|ts| apply_surjection(x, &ts));
            (format!("{:?}", lhs), format!("{:?}", rhs))
        },
    );
    let n = fiber_qsh(&sp("1224|112334")).map(|v| v.len()).unwrap_or(0);
    ctx.identity("fiber of 1224|112334 has 75 elements", [()], |_| "1224|112334".into(), |_| {
        (n, 75)
    });
    ctx.identity("standardization", [(vec![1, 3, 2, 2, 4], "14235"), (vec![1, 1, 1], "123"), (vec![2, 1, 3], "213")], |c| format!("{:?}", c.0), |c| {
        (standardize(&c.0).to_string(), c.1.to_string())
    });
    Ok(())
}

trait Pipe: Sized {
    fn pipe<T>(self, f: impl FnOnce(Self) -> T) -> T {
        f(self)
    }
}

impl<T> Pipe for T {}

fn qsym_oracle(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let letters = nats(&b.letters[..b.letters.len().min(2)])?;
    let ws = words_up_to_len(&letters, b.max_len);
    let x = OrderedAlphabet::named("x", 4);
    let y = OrderedAlphabet::named("y", 4);
    ctx.identity("gamma from Q(XY)", ws.iter().cloned(), |w| w.to_string(), |w| {
        (
            gamma_oracle(w, &x, &y).map(|t| t.to_string()).unwrap_or_else(|e| e.to_string()),
            gamma(w).to_string(),
        )
    });
    ctx.identity("delta from Q(X+Y)", ws.iter().cloned(), |w| w.to_string(), |w| {
        (
            deconcat_oracle(w, &x, &y).map(|t| t.to_string()).unwrap_or_else(|e| e.to_string()),
            deconcat(w).to_string(),
        )
    });
    let small = words_up_to_len(&nats(&[1, 2, 3])?, 3);
    let x3 = OrderedAlphabet::named("x", 3);
    let qp: Vec<(Word, Word)> = pairs(&small, |w| w.len(), 3);
    ctx.identity("Q is a qsh morphism", qp, |c| format!("u={} v={}", c.0, c.1), |(u, v)| {
        (q_product_check(u, v, &x3), true)
    });
    let polys: Vec<_> = small.iter().map(|w| q(w, &x3)).collect();
    let rank = RowEchelon::from_vectors(polys.iter()).rank();
    ctx.identity("Q faithful on words of length 3", [()], |_| "|X|=3".into(), |_| (rank, small.len()));
    let z = OrderedAlphabet::named("z", 2);
    let x2 = OrderedAlphabet::named("x", 2);
    let y2 = OrderedAlphabet::named("y", 2);
    let assoc: Vec<Word> = words_up_to_len(&letters, 2);
    ctx.identity("alphabet operations associative", assoc, |w| w.to_string(), |w| {
        let run = || -> mouldcalc_core::Result<(bool, bool)> {
            let s1 = q(w, &x2.sum(&y2)?.sum(&z)?) == q(w, &x2.sum(&y2.sum(&z)?)?);
            let p1 = split_pairs(&q(w, &x2.product(&y2)?.product(&z)?))
                == split_pairs(&q(w, &x2.product(&y2.product(&z)?)?));
            Ok((s1, p1))
        };
        (format!("{:?}", run()), "Ok((true, true))".to_string())
    });
    Ok(())
}

fn mould_algebra(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let letters = nats(&b.letters)?;
    let ws = words(b)?;
    let nonempty: Vec<Word> = ws.iter().filter(|x| !x.is_empty()).cloned().collect();
    let weight = b.max_weight.max(1);
    let lw = |x: &Word| x.to_string();
    for k in 0..5u64 {
        let s = b.seed * 5 + k;
        let (m, m2, n, p): (Mould, Mould, Mould, Mould) = (
            random_table(4 * s + 1),
            random_table(4 * s + 2),
            random_table(4 * s + 3),
            random_table(4 * s + 4),
        );
        let tag = |t: &str| format!("{} [seed {}]", t, s);
        let e = epsilon();
        ctx.identity(&tag("x associative"), ws.iter().cloned(), lw, |x| {
            (m.mul(&n).mul(&p).eval(x), m.mul(&n.mul(&p)).eval(x))
        });
        ctx.identity(&tag("eps two-sided unit"), ws.iter().cloned(), lw, |x| {
            (format!("{} {}", e.mul(&m).eval(x), m.mul(&e).eval(x)), format!("{} {}", m.eval(x), m.eval(x)))
        });
        ctx.identity(&tag("o associative"), ws.iter().cloned(), lw, |x| {
            (m.comp(&n).comp(&p).eval(x), m.comp(&n.comp(&p)).eval(x))
        });
        ctx.identity(&tag("<> associative"), ws.iter().cloned(), lw, |x| {
            (m.diamond(&n).diamond(&p).eval(x), m.diamond(&n.diamond(&p)).eval(x))
        });
        ctx.identity(&tag("o distributes on the right over x"), ws.iter().cloned(), lw, |x| {
            (m.mul(&m2).comp(&n).eval(x), m.comp(&n).mul(&m2.comp(&n)).eval(x))
        });
        ctx.identity(&tag("I right unit"), ws.iter().cloned(), lw, |x| {
            (m.comp(&identity()).eval(x), m.eval(x))
        });
        ctx.identity(&tag("I left unit on letters"), ws.iter().filter(|x| x.len() == 1).cloned(), lw, |x| {
            (identity().comp(&n).eval(x), n.eval(x))
        });
        ctx.identity(&tag("x dual to delta"), ws.iter().cloned(), lw, |x| {
            (m.mul(&n).eval(x), deconcat(x).pair(|(u, v)| m.eval(u) * n.eval(v)))
        });
        ctx.identity(&tag("<> dual to gamma"), nonempty.iter().cloned(), lw, |x| {
            (m.diamond(&n).eval(x), gamma(x).pair(|(u, v)| m.eval(u) * n.eval(v)))
        });
        ctx.expect_fail(&tag("<> = o for a non-symmetrel inner mould"), nonempty.iter().cloned(), lw, |x| {
            (m.diamond(&n).eval(x), m.comp(&n).eval(x))
        });
        let g = gen_symmetrel(s, weight)?;
        ctx.identity(&tag("<> = o for a generated symmetrel mould"), nonempty.iter().cloned(), lw, |x| {
            (m.diamond(&g).eval(x), m.comp(&g).eval(x))
        });
    }
    let m: Mould = random_table(b.seed);
    let jj: Mould = j();
    ctx.identity("<> = o for J", nonempty.iter().cloned(), lw, |x| {
        (m.diamond(&jj).eval(x), m.comp(&jj).eval(x))
    });
    let pairs_count = pairs(&nonempty, |x| x.len(), b.max_len).len();
    let g1 = gen_symmetrel(b.seed + 100, weight)?;
    let g2 = gen_symmetrel(b.seed + 101, weight)?;
    ctx.symmetry("generated moulds symmetrel", pairs_count, check_symmetrel(&g1, &letters, b.max_len).or_else(|| check_symmetrel(&g2, &letters, b.max_len)), false);
    ctx.symmetry("J symmetrel", pairs_count, check_symmetrel(&jj, &letters, b.max_len), false);
    ctx.symmetry("composition of symmetrel moulds is symmetrel", pairs_count, check_symmetrel(&g1.comp(&g2), &letters, b.max_len), false);
    ctx.symmetry("composition with J is symmetrel", pairs_count, check_symmetrel(&g1.comp(&jj), &letters, b.max_len), false);
    let e: Mould = exp();
    ctx.symmetry("exp symmetral", pairs_count, check_symmetral(&e, &letters, b.max_len), false);
    ctx.symmetry("exp o exp symmetrel", pairs_count, check_symmetrel(&e.comp(&e), &letters, b.max_len), true);
    ctx.symmetry("symmetrel o exp is symmetral (J)", pairs_count, check_symmetral(&jj.comp(&e), &letters, b.max_len), false);
    ctx.symmetry("symmetrel o exp is symmetral (generated)", pairs_count, check_symmetral(&g1.comp(&e), &letters, b.max_len), false);
    let r = random_table::<Nat>(b.seed + 7);
    let unital = Mould::from_fn("unital", move |x: &Word| if x.is_empty() { int(1) } else { r.eval(x) });
    ctx.symmetry("non-symmetrel mould is not symmetrel", pairs_count, check_symmetrel(&unital, &letters, b.max_len), true);
    ctx.symmetry("non-symmetrel o exp is not symmetral", pairs_count, check_symmetral(&unital.comp(&e), &letters, b.max_len), true);
    Ok(())
}

fn growth(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let gw = b.growth_weight;
    let one = int(1);
    let geo = [
        (random_geometric(b.seed, &one, &int(2)), one.clone(), int(2)),
        (random_geometric(b.seed + 1, &ratio(1, 2), &ratio(3, 2)), ratio(1, 2), ratio(3, 2)),
    ];
    let moulds = [
        ("exp", exp(), one.clone(), one.clone()),
        ("J", j(), one.clone(), one.clone()),
        ("geometric a", geo[0].0.clone(), geo[0].1.clone(), geo[0].2.clone()),
        ("geometric b", geo[1].0.clone(), geo[1].1.clone(), geo[1].2.clone()),
    ];
    let show = |r: std::result::Result<(), mouldcalc_core::moulds::GrowthViolation>| match r {
        Ok(()) => "within bound".to_string(),
        Err(v) => format!("|M^{}| = {} > {}", v.word, v.value, v.bound),
    };
    ctx.identity("geometric bound", moulds.iter(), |m| m.0.to_string(), |(_, m, c, k)| {
        (show(growth_audit(m, c, k, gw)), "within bound".to_string())
    });
    let pairs = [(0usize, 0usize), (1, 1), (2, 3), (3, 2)];
    ctx.identity("product bound", pairs, |&(a, c)| format!("{} x {}", moulds[a].0, moulds[c].0), |&(a, c)| {
        let (m, n) = (&moulds[a], &moulds[c]);
        (show(audit_product(&m.1, &n.1, (&m.2, &m.3), (&n.2, &n.3), gw)), "within bound".to_string())
    });
    ctx.identity("composition bound", pairs, |&(a, c)| format!("{} o {}", moulds[a].0, moulds[c].0), |&(a, c)| {
        let (m, n) = (&moulds[a], &moulds[c]);
        (show(audit_composition(&m.1, &n.1, (&m.2, &m.3), (&n.2, &n.3), gw)), "within bound".to_string())
    });
    Ok(())
}

fn forest_basis(b: &Bounds) -> Result<Vec<Forest>> {
    Ok(forests_up_to(b.max_vertices, &nats(&b.decorations)?))
}

fn forest_hopf(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let fs = forest_basis(b)?;
    let decs = nats(&b.decorations)?;
    let v = |f: &Forest| f.vertex_count();
    let lf = |f: &Forest| f.to_string();
    let label2 = |c: &(Forest, Forest)| format!("F={} G={}", c.0, c.1);
    let p = pairs(&fs, v, b.max_vertices);
    ctx.identity("delta coassociative", fs.iter().cloned(), lf, |f| {
        let d = forest_delta(f);
        (coassoc_left(&d, forest_delta), coassoc_right(&d, forest_delta))
    });
    ctx.identity("delta counit", fs.iter().cloned(), lf, |f| {
        let d = forest_delta(f);
        (
            (left_counit(&d, forest_counit), right_counit(&d, forest_counit)),
            (LinComb::basis(f.clone()), LinComb::basis(f.clone())),
        )
            .pipe(|(l, r)| (format!("{} ; {}", l.0, l.1), format!("{} ; {}", r.0, r.1)))
    });
    ctx.identity("delta multiplicative", p.iter().cloned(), label2, |(f, g)| {
        (forest_delta(&f.mul(g)), tensor_mul(&forest_delta(f), &forest_delta(g), forest_mul))
    });
    let mut cocycle = Vec::new();
    for f in fs.iter().filter(|f| f.vertex_count() < b.max_vertices) {
        for d in &decs {
            cocycle.push((*d, f.clone()));
        }
    }
    ctx.identity("B+ cocycle", cocycle, |(d, f)| format!("b={} F={}", d, f), |(d, f)| {
        let t = Forest::tree(bplus(*d, f));
        let mut rhs: Tensor<Forest, Forest> = LinComb::basis((t.clone(), Forest::empty()));
        rhs += forest_delta(f).map_basis(|(a, c)| (a.clone(), Forest::tree(bplus(*d, c))));
        (forest_delta(&t), rhs)
    });
    ctx.identity("antipode", fs.iter().cloned(), lf, |f| {
        let (l, r) = antipode_sides(&forest_delta(f), forest_antipode, forest_mul);
        let unit = LinComb::term(Forest::<Nat>::empty(), forest_counit(f));
        (format!("{} ; {}", l, r), format!("{} ; {}", unit, unit))
    });
    ctx.identity("GL unit", fs.iter().cloned(), lf, |f| {
        let e = Forest::empty();
        let b = LinComb::basis(f.clone());
        (format!("{} ; {}", gl_product(&e, f), gl_product(f, &e)), format!("{} ; {}", b, b))
    });
    let t = triples(&fs, v, b.max_vertices);
    ctx.identity("GL associative", t, |c| format!("{} # {} # {}", c.0, c.1, c.2), |(x, y, z)| {
        (
            gl_product(x, y).extend(|xy| gl_product(xy, z)),
            gl_product(y, z).extend(|yz| gl_product(x, yz)),
        )
    });
    let mut pairing = Vec::new();
    for (f, g) in &p {
        for h in fs.iter().filter(|h| h.vertex_count() == f.vertex_count() + g.vertex_count()) {
            pairing.push((f.clone(), g.clone(), h.clone()));
        }
    }
    ctx.identity("GL pairing with automorphism factors", pairing, |c| format!("F={} G={} H={}", c.0, c.1, c.2), |(f, g, h)| {
        (
            gl_product(f, g).coeff(h) * aut_rational(h),
            forest_delta(h).coeff(&(f.clone(), g.clone())) * aut_rational(f) * aut_rational(g),
        )
    });
    let trees: Vec<Tree> = (1..=2).flat_map(|n| trees_of_size(n, &decs)).collect();
    let tt = triples(&trees, |_| 0, 0);
    ctx.identity("grafting left pre-Lie", tt, |c| format!("{} {} {}", c.0, c.1, c.2), |(x, y, z)| {
        let assoc = |x: &Tree, y: &Tree| -> LinComb<Tree> {
            graft(y, z).extend(|yz| graft(x, yz)) - graft(x, y).extend(|xy| graft(xy, z))
        };
        (assoc(x, y), assoc(y, x))
    });
    let all_trees: Vec<Tree> = (1..b.max_vertices).flat_map(|n| trees_of_size(n, &decs)).collect();
    let tp = pairs(&all_trees, |t| t.vertex_count(), b.max_vertices);
    ctx.identity("GL on trees is product plus grafting", tp, |c| format!("s={} t={}", c.0, c.1), |(s, t)| {
        let (fs_, ft) = (Forest::tree(s.clone()), Forest::tree(t.clone()));
        let mut rhs = LinComb::basis(fs_.mul(&ft));
        rhs += graft(s, t).map_basis(|x| Forest::tree(x.clone()));
        (gl_product(&fs_, &ft), rhs)
    });
    Ok(())
}

fn forest_gamma_suite(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let fs = forest_basis(b)?;
    let lf = |f: &Forest| f.to_string();
    let p = pairs(&fs, |f| f.vertex_count(), b.max_vertices);
    ctx.identity("covering subforests counted by edges", fs.iter().cloned(), lf, |f| {
        let edges = f.vertex_count() - f.trees().len();
        (covering_subforests(f).len(), 1usize << edges)
    });
    ctx.identity("gamma coassociative", fs.iter().cloned(), lf, |f| {
        let g = forest_gamma(f);
        (coassoc_left(&g, forest_gamma), coassoc_right(&g, forest_gamma))
    });
    ctx.identity("gamma counit", fs.iter().cloned(), lf, |f| {
        let g = forest_gamma(f);
        (
            format!("{} ; {}", left_counit(&g, forest_counit_gamma), right_counit(&g, forest_counit_gamma)),
            format!("{} ; {}", LinComb::basis(f.clone()), LinComb::basis(f.clone())),
        )
    });
    ctx.identity("gamma multiplicative", p, |c| format!("F={} G={}", c.0, c.1), |(f, g)| {
        (forest_gamma(&f.mul(g)), tensor_mul(&forest_gamma(f), &forest_gamma(g), forest_mul))
    });
    ctx.identity("gamma internal", fs.iter().cloned(), lf, |f| {
        let bad: Vec<String> = forest_gamma(f)
            .iter()
            .filter(|((a, c), _)| a.weight() != f.weight() || c.weight() != f.weight())
            .map(|((a, c), _)| format!("{}(x){}", a, c))
            .collect();
        (bad.join(" "), String::new())
    });
    ctx.identity("comodule coaction", fs.iter().cloned(), lf, |f| {
        comodule_sides(f, forest_delta, forest_gamma, forest_mul)
    });
    ctx.identity("comodule counit", fs.iter().cloned(), lf, |f| {
        (
            left_counit(&forest_gamma(f), forest_counit),
            LinComb::term(Forest::empty(), forest_counit(f)),
        )
    });
    ctx.identity("comodule antipode", fs.iter().cloned(), lf, |f| {
        let lhs = forest_gamma(f).map_legs(forest_antipode, |y| LinComb::basis(y.clone()));
        (lhs, forest_antipode(f).extend(forest_gamma))
    });
    Ok(())
}

fn arborification(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let fs = forest_basis(b)?;
    let decs = nats(&b.decorations)?;
    let lf = |f: &Forest| f.to_string();
    let p = pairs(&fs, |f| f.vertex_count(), b.max_vertices);
    let label2 = |c: &(Forest, Forest)| format!("F={} G={}", c.0, c.1);
    ctx.identity("delta morphism", fs.iter().cloned(), lf, |f| {
        (forest_delta(f).map_legs(arborify, arborify), arborify(f).extend(deconcat))
    });
    ctx.identity("qsh morphism", p.iter().cloned(), label2, |(f, g)| {
        (arborify(&f.mul(g)), qsh_lc(&arborify(f), &arborify(g)))
    });
    let mut bp = Vec::new();
    for f in fs.iter().filter(|f| f.vertex_count() < b.max_vertices) {
        for d in &decs {
            bp.push((*d, f.clone()));
        }
    }
    ctx.identity("B+ becomes appending a letter", bp, |(d, f)| format!("b={} F={}", d, f), |(d, f)| {
        (
            arborify(&Forest::tree(bplus(*d, f))),
            arborify(f).map_basis(|x| x.push(*d)),
        )
    });
    ctx.identity("gamma morphism", fs.iter().cloned(), lf, |f| {
        (forest_gamma(f).map_legs(arborify, arborify), arborify(f).extend(gamma))
    });
    ctx.identity("counits preserved", fs.iter().cloned(), lf, |f| {
        let a = arborify(f);
        (
            (a.pair(counit_delta), a.pair(counit_gamma)),
            (forest_counit(f), forest_counit_gamma(f)),
        )
            .pipe(|(l, r)| (format!("{:?}", l), format!("{:?}", r)))
    });
    ctx.identity("simple arborification is a shuffle morphism", p.iter().cloned(), label2, |(f, g)| {
        (
            arborify_simple(&f.mul(g)),
            arborify_simple(f).bilinear(&arborify_simple(g), shuffle),
        )
    });
    ctx.identity("simple arborification is a delta morphism", fs.iter().cloned(), lf, |f| {
        (forest_delta(f).map_legs(arborify_simple, arborify_simple), arborify_simple(f).extend(deconcat))
    });
    ctx.identity("arborify 3(1,2)", [fo("3(1,2)")], lf, |f| {
        (arborify(f).to_string(), "[1.2.3] + [2.1.3] + [3.3]".to_string())
    });
    Ok(())
}

fn arbo_agree(ctx: &mut Ctx, name: &str, fs: &[Forest], a: &ArboMould, b: &ArboMould) {
    ctx.identity(name, fs.iter().cloned(), |f| f.to_string(), |f| (a.eval(f), b.eval(f)));
}

fn arbomould_algebra(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let fs = forest_basis(b)?;
    let decs = nats(&b.decorations)?;
    let s = b.seed;
    let (m, m2, n, p) = (random_arbo(4 * s + 1), random_arbo(4 * s + 2), random_arbo(4 * s + 3), random_arbo(4 * s + 4));
    let e = arbo_epsilon();
    arbo_agree(ctx, "x associative", &fs, &m.mul(&n).mul(&p), &m.mul(&n.mul(&p)));
    arbo_agree(ctx, "eps left unit", &fs, &e.mul(&m), &m);
    arbo_agree(ctx, "eps right unit", &fs, &m.mul(&e), &m);
    arbo_agree(ctx, "o associative", &fs, &m.comp(&n).comp(&p), &m.comp(&n.comp(&p)));
    arbo_agree(ctx, "<> associative", &fs, &m.diamond(&n).diamond(&p), &m.diamond(&n.diamond(&p)));
    arbo_agree(ctx, "o distributes on the right over x", &fs, &m.mul(&m2).comp(&n), &m.comp(&n).mul(&m2.comp(&n)));
    arbo_agree(ctx, "I right unit", &fs, &m.comp(&i_arbo()), &m);
    let left = i_arbo().comp(&n);
    ctx.expect_fail("I left unit", fs.iter().cloned(), |f| f.to_string(), |f| (left.eval(f), n.eval(f)));
    let ia = arborify_mould(&identity::<Nat>());
    let ib = i_arbo::<Nat>();
    ctx.expect_fail("arborified I equals the right unit", fs.iter().cloned(), |f| f.to_string(), |f| {
        (ia.eval(f), ib.eval(f))
    });

    let (wm, wn): (Mould, Mould) = (random_table(4 * s + 5), random_table(4 * s + 6));
    let (am, an) = (arborify_mould(&wm), arborify_mould(&wn));
    arbo_agree(ctx, "arborification respects x", &fs, &arborify_mould(&wm.mul(&wn)), &am.mul(&an));
    arbo_agree(ctx, "arborification respects <>", &fs, &arborify_mould(&wm.diamond(&wn)), &am.diamond(&an));
    let comp_l = arborify_mould(&wm.comp(&wn));
    let comp_r = am.comp(&an);
    ctx.expect_fail("arborification respects o for any inner mould", fs.iter().cloned(), |f| f.to_string(), |f| {
        (comp_l.eval(f), comp_r.eval(f))
    });
    let mut ab = Vec::new();
    for x in &decs {
        for y in &decs {
            ab.push((x.value(), y.value()));
        }
    }
    ctx.identity("defect of o on two roots", ab, |&(a, c)| format!("a={} b={}", a, c), |&(a, c)| {
        let f = Forest::new(vec![Tree::leaf(nat(a)), Tree::leaf(nat(c))]);
        let (wa, wc, wac) = (Word::letter(nat(a)), Word::letter(nat(c)), Word::letter(nat(a + c)));
        (
            comp_l.eval(&f) - comp_r.eval(&f),
            wm.eval(&wac) * (wn.eval_lc(&qsh(&wa, &wc)) - wn.eval(&wa) * wn.eval(&wc)),
        )
    });
    let g = gen_symmetrel(s + 200, b.max_weight.max(1))?;
    let ag = arborify_mould(&g);
    arbo_agree(ctx, "arborification respects o for a symmetrel inner mould", &fs, &arborify_mould(&wm.comp(&g)), &am.comp(&ag));
    let sep = |ctx: &mut Ctx, name: &str, n: &ArboMould, expected: bool| {
        let outcome = match (check_separative(n, &decs, b.max_vertices), expected) {
            (Ok(()), false) => Outcome::Pass,
            (Err(c), e) => {
                let x = Counterexample {
                    input: format!("F={} G={}", c.left, c.right),
                    lhs: c.lhs.to_string(),
                    rhs: c.rhs.to_string(),
                };
                if e {
                    Outcome::ExpectedFail(x)
                } else {
                    Outcome::Fail(x)
                }
            }
            (Ok(()), true) => Outcome::Fail(Counterexample {
                input: "none found".into(),
                lhs: "separative".into(),
                rhs: "a counterexample was expected".into(),
            }),
        };
        ctx.push(name, fs.len(), outcome);
    };
    sep(ctx, "eps separative", &e, false);
    sep(ctx, "arborified symmetrel mould separative", &ag, false);
    sep(ctx, "I separative", &i_arbo(), true);
    sep(ctx, "I plus eps separative", &i_arbo().add(&arbo_epsilon()), true);
    arbo_agree(ctx, "o = <> for a separative inner mould", &fs, &m.comp(&ag), &m.diamond(&ag));
    ctx.expect_fail("o = <> for a non-separative inner mould", fs.iter().cloned(), |f| f.to_string(), |f| {
        (m.comp(&n).eval(f), m.diamond(&n).eval(f))
    });
    Ok(())
}

fn nat(v: u32) -> Nat {
    Nat::new(v).expect("positive")
}

fn s_series_suite(ctx: &mut Ctx, b: &Bounds) -> Result<()> {
    let decs = nats(&b.decorations)?;
    let v = b.max_vertices.min(3);
    let s = b.seed;
    let (m, n) = (random_arbo(4 * s + 1), random_arbo(4 * s + 2));
    ctx.identity("S of eps is the unit", [()], |_| "eps".into(), |_| {
        (s_series(&arbo_epsilon(), &decs, 2).coeffs, LinComb::basis(Forest::empty()))
    });
    ctx.identity("S turns x into GL", [v], |v| format!("vertices <= {}", v), |&v| {
        let lhs = s_series(&m.mul(&n), &decs, v);
        let rhs = s_series(&m, &decs, v).gl_mul(&s_series(&n, &decs, v));
        (lhs.coeffs, rhs.coeffs)
    });
    let wmax = b.max_weight;
    let (wm, wn, wr): (Mould, Mould, Mould) = (random_table(4 * s + 3), random_table(4 * s + 4), random_table(4 * s + 5));
    let (sm, sn) = (word_series(&wm, wmax), word_series(&wn, wmax));
    let label = |_: &()| format!("weight <= {}", wmax);
    ctx.identity("word series of x is the product", [()], label, |_| {
        (word_series(&wm.mul(&wn), wmax).coeffs().clone(), sm.mul(&sn).coeffs().clone())
    });
    ctx.identity("word series of o is a substitution", [()], label, |_| {
        (word_series(&wm.comp(&wn), wmax).coeffs().clone(), substitute(&wn, &sm).coeffs().clone())
    });
    let sr = word_series(&wr, wmax);
    ctx.identity("substitutions compose", [()], label, |_| {
        (
            substitute(&wn, &substitute(&wm, &sr)).coeffs().clone(),
            substitute(&wm.comp(&wn), &sr).coeffs().clone(),
        )
    });
    Ok(())
}

/// Size of the largest basis a suite enumerates: triples of words or
/// forests for the coassociativity checks, all compositions for weight-bound
/// checks.
fn estimate(name: &str, b: &Bounds) -> f64 {
    let triples = |n: f64, k_max: usize| {
        (0..=k_max)
            .map(|k| ((k + 1) * (k + 2) / 2) as f64 * n.powi(k as i32))
            .sum::<f64>()
    };
    let words = triples(b.letters.len() as f64, b.max_len);
    let forests = triples(4.0 * b.decorations.len() as f64, b.max_vertices);
    let weight = |w: u32| 2f64.powi(w as i32);
    match name {
        "golden" | "wqsh" => 0.0,
        "growth" => weight(b.growth_weight),
        "mould-algebra" => words + weight(b.max_weight),
        "s-series" => forests + weight(b.max_weight),
        "forest-hopf" | "forest-gamma" | "arborification" | "arbomould-algebra" => forests,
        _ => words,
    }
}

/// Runs one suite, or every suite for `all`.
pub fn run(name: &str, b: &Bounds) -> Result<Vec<SuiteReport>> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&name) {
        vec![name]
    } else {
        return usage(format!("unknown suite `{}`; known: {}, all", name, SUITES.join(", ")));
    };
    if b.letters.is_empty() || b.decorations.is_empty() {
        return usage("letter and decoration sets must be nonempty");
    }
    for n in &names {
        let est = estimate(n, b);
        if est > LIMIT {
            return usage(format!(
                "suite `{}` would enumerate about {:.0} basis elements (limit {:.0}); lower the bounds",
                n, est, LIMIT
            ));
        }
    }
    let mut out = Vec::new();
    for n in names {
        let mut ctx = Ctx::new();
        let start = Instant::now();
        match n {
            "golden" => golden(&mut ctx),
            "words-hopf" => words_hopf(&mut ctx, b)?,
            "gamma-bialgebra" => gamma_bialgebra(&mut ctx, b)?,
            "comodule" => comodule(&mut ctx, b)?,
            "wqsh" => wqsh(&mut ctx, b)?,
            "qsym-oracle" => qsym_oracle(&mut ctx, b)?,
            "mould-algebra" => mould_algebra(&mut ctx, b)?,
            "growth" => growth(&mut ctx, b)?,
            "forest-hopf" => forest_hopf(&mut ctx, b)?,
            "forest-gamma" => forest_gamma_suite(&mut ctx, b)?,
            "arborification" => arborification(&mut ctx, b)?,
            "arbomould-algebra" => arbomould_algebra(&mut ctx, b)?,
            "s-series" => s_series_suite(&mut ctx, b)?,
            _ => unreachable!("checked above"),
        }
        out.push(SuiteReport {
            suite: n.to_string(),
            bounds: b.clone(),
            checks: ctx.checks,
            elapsed: start.elapsed(),
        });
    }
    Ok(out)
}
