use std::collections::BTreeMap;

use mouldcalc_core::linalg::RowEchelon;
use mouldcalc_core::qsym::{
    deconcat_oracle, gamma_oracle, q, q_product_check, split_pairs, OrderedAlphabet, Polynomial, Var,
};
use mouldcalc_core::words::{deconcat, gamma, qsh, words_up_to_len, Word};
use mouldcalc_core::{LinComb, Nat, Rational};

fn nats(v: &[u32]) -> Vec<Nat> {
    v.iter().map(|&x| Nat::new(x).unwrap()).collect()
}

/// `Q_w` at a point: the sum over increasing index tuples.
fn q_at(w: &[u32], point: &[i128]) -> i128 {
    if w.is_empty() {
        return 1;
    }
    (0..point.len())
        .map(|i| point[i].pow(w[0]) * q_at(&w[1..], &point[i + 1..]))
        .sum()
}

fn values(w: &Word) -> Vec<u32> {
    w.letters().iter().map(|l| l.value()).collect()
}

fn lc_at(a: &LinComb<Word>, point: &[i128]) -> Rational {
    a.pair(|w| Rational::from_integer(q_at(&values(w), point).into()))
}

fn tensor_at(t: &LinComb<(Word, Word)>, x: &[i128], y: &[i128]) -> Rational {
    t.pair(|(a, b)| Rational::from_integer((q_at(&values(a), x) * q_at(&values(b), y)).into()))
}

fn poly_at(p: &Polynomial<Nat>, env: &BTreeMap<String, i128>) -> Rational {
    fn var(v: &Var, env: &BTreeMap<String, i128>) -> i128 {
        match v {
            Var::Atom(s) => env[s],
            Var::Pair(a, b) => var(a, env) * var(b, env),
        }
    }
    p.pair(|m| {
        let v: i128 = m.powers().iter().map(|(x, e)| var(x, env).pow(e.value())).product();
        Rational::from_integer(v.into())
    })
}

const X: [i128; 3] = [2, 3, 5];
const Y: [i128; 3] = [7, 11, 13];

#[test]
fn q_matches_point_evaluation() {
    let alphabet = OrderedAlphabet::named("x", 3);
    let env: BTreeMap<String, i128> = (0..3).map(|i| (format!("x{}", i + 1), X[i])).collect();
    for w in words_up_to_len(&nats(&[1, 2, 3]), 4) {
        let expected = Rational::from_integer(q_at(&values(&w), &X).into());
        assert_eq!(poly_at(&q(&w, &alphabet), &env), expected, "{}", w);
    }
}

#[test]
fn coproducts_at_points() {
    // X+Y is the concatenated point; XY the lexicographic pair products
    let sum: Vec<i128> = X.iter().chain(&Y).copied().collect();
    let prod: Vec<i128> = X.iter().flat_map(|a| Y.iter().map(move |b| a * b)).collect();
    for w in words_up_to_len(&nats(&[1, 2, 3]), 4) {
        let v = values(&w);
        let whole = |pt: &[i128]| Rational::from_integer(q_at(&v, pt).into());
        assert_eq!(whole(&sum), tensor_at(&deconcat(&w), &X, &Y), "delta {}", w);
        assert_eq!(whole(&prod), tensor_at(&gamma(&w), &X, &Y), "gamma {}", w);
    }
}

#[test]
fn products_at_points() {
    let ws = words_up_to_len(&nats(&[1, 2, 3]), 3);
    for u in &ws {
        for v in ws.iter().filter(|v| u.len() + v.len() <= 4) {
            let lhs = Rational::from_integer((q_at(&values(u), &X) * q_at(&values(v), &X)).into());
            assert_eq!(lhs, lc_at(&qsh(u, v), &X), "{} {}", u, v);
            assert!(q_product_check(u, v, &OrderedAlphabet::named("x", 4)));
        }
    }
}

#[test]
fn oracles_reproduce_coproducts() {
    let (x, y) = (OrderedAlphabet::named("x", 4), OrderedAlphabet::named("y", 4));
    for w in words_up_to_len(&nats(&[1, 2]), 4) {
        assert_eq!(gamma_oracle(&w, &x, &y).unwrap(), gamma(&w), "{}", w);
        assert_eq!(deconcat_oracle(&w, &x, &y).unwrap(), deconcat(&w), "{}", w);
    }
}

#[test]
fn faithful_on_short_words() {
    let ws = words_up_to_len(&nats(&[1, 2, 3]), 3);
    let polys: Vec<Polynomial<Nat>> = ws.iter().map(|w| q(w, &OrderedAlphabet::named("x", 3))).collect();
    assert_eq!(RowEchelon::from_vectors(polys.iter()).rank(), ws.len());
    // too small an alphabet loses words
    let small: Vec<Polynomial<Nat>> = ws.iter().map(|w| q(w, &OrderedAlphabet::named("x", 2))).collect();
    assert!(RowEchelon::from_vectors(small.iter()).rank() < ws.len());
}

#[test]
fn alphabet_operations_associate() {
    let (x, y, z) = (
        OrderedAlphabet::named("x", 2),
        OrderedAlphabet::named("y", 2),
        OrderedAlphabet::named("z", 2),
    );
    for w in words_up_to_len(&nats(&[1, 2]), 3) {
        let s1 = q(&w, &x.sum(&y).unwrap().sum(&z).unwrap());
        let s2 = q(&w, &x.sum(&y.sum(&z).unwrap()).unwrap());
        assert_eq!(s1, s2);
        let p1 = split_pairs(&q(&w, &x.product(&y).unwrap().product(&z).unwrap()));
        let p2 = split_pairs(&q(&w, &x.product(&y.product(&z).unwrap()).unwrap()));
        assert_eq!(p1, p2);
    }
}
