use mouldcalc_core::linalg::{abs, int, ratio};
use mouldcalc_core::moulds::{
    audit_composition, audit_product, check_symmetral, check_symmetrel, epsilon, exp,
    gen_symmetrel, growth_audit, identity, is_symmetral, is_symmetrel, j, random_geometric,
    random_table, Mould,
};
use mouldcalc_core::words::{gamma, words_up_to_len, Word};
use mouldcalc_core::{Nat, Rational};

fn letters() -> Vec<Nat> {
    (1..=3).map(|v| Nat::new(v).unwrap()).collect()
}

fn words() -> Vec<Word> {
    words_up_to_len(&letters(), 4)
}

fn blocks(w: &Word) -> Vec<Vec<Word>> {
    if w.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 1..=w.len() {
        let (head, tail) = w.split_at(i);
        for mut rest in blocks(&tail) {
            rest.insert(0, head.clone());
            out.push(rest);
        }
    }
    out
}

fn mul_oracle(m: &Mould, n: &Mould, w: &Word) -> Rational {
    (0..=w.len())
        .map(|i| {
            let (a, b) = w.split_at(i);
            m.eval(&a) * n.eval(&b)
        })
        .sum()
}

fn comp_oracle(m: &Mould, n: &Mould, w: &Word) -> Rational {
    if w.is_empty() {
        return m.eval(w);
    }
    blocks(w)
        .iter()
        .map(|bs| {
            let sums: Vec<u32> = bs.iter().map(|b| b.weight_value()).collect();
            let inner: Rational = bs.iter().map(|b| n.eval(b)).product();
            m.eval(&Word::from_values(&sums).unwrap()) * inner
        })
        .sum()
}

#[test]
fn operations_match_definitions() {
    for seed in 0..3 {
        let (m, n): (Mould, Mould) = (random_table(2 * seed), random_table(2 * seed + 1));
        let (p, c, d) = (m.mul(&n), m.comp(&n), m.diamond(&n));
        for w in words() {
            assert_eq!(p.eval(&w), mul_oracle(&m, &n, &w), "x at {}", w);
            assert_eq!(c.eval(&w), comp_oracle(&m, &n, &w), "o at {}", w);
            if !w.is_empty() {
                let dual = gamma(&w).pair(|(a, b)| m.eval(a) * n.eval(b));
                assert_eq!(d.eval(&w), dual, "<> at {}", w);
            }
        }
    }
}

#[test]
fn algebra_laws() {
    for seed in 0..5 {
        let s = 10 * seed;
        let (m, m2, n, p): (Mould, Mould, Mould, Mould) =
            (random_table(s), random_table(s + 1), random_table(s + 2), random_table(s + 3));
        let pairs = [
            ("x assoc", m.mul(&n).mul(&p), m.mul(&n.mul(&p))),
            ("o assoc", m.comp(&n).comp(&p), m.comp(&n.comp(&p))),
            ("<> assoc", m.diamond(&n).diamond(&p), m.diamond(&n.diamond(&p))),
            ("distributive", m.mul(&m2).comp(&n), m.comp(&n).mul(&m2.comp(&n))),
            ("eps left", epsilon().mul(&m), m.clone()),
            ("eps right", m.mul(&epsilon()), m.clone()),
            ("I right", m.comp(&identity()), m.clone()),
        ];
        for (name, a, b) in &pairs {
            for w in words() {
                assert_eq!(a.eval(&w), b.eval(&w), "{} seed {} at {}", name, seed, w);
            }
        }
        let left = identity().comp(&n);
        for w in words().into_iter().filter(|w| w.len() == 1) {
            assert_eq!(left.eval(&w), n.eval(&w));
        }
    }
}

#[test]
fn symmetrel_inner_moulds() {
    let l = letters();
    let gens = [gen_symmetrel(1, 6).unwrap(), gen_symmetrel(2, 6).unwrap(), j()];
    for g in &gens {
        assert!(is_symmetrel(g, &l, 4));
    }
    assert!(is_symmetrel(&gens[0].comp(&gens[1]), &l, 4));
    assert!(is_symmetrel(&gens[1].comp(&gens[2]), &l, 4));
    let m: Mould = random_table(99);
    for g in &gens {
        let (a, b) = (m.diamond(g), m.comp(g));
        for w in words().into_iter().filter(|w| !w.is_empty()) {
            assert_eq!(a.eval(&w), b.eval(&w), "{} at {}", g.name(), w);
        }
    }
    // a generic inner mould separates the two
    let n: Mould = random_table(100);
    assert!(words().iter().any(|w| m.diamond(&n).eval(w) != m.comp(&n).eval(w)));
}

#[test]
fn exponential() {
    let l = letters();
    assert!(is_symmetral(&exp(), &l, 4));
    let cx = check_symmetrel(&exp().comp(&exp()), &l, 4).expect("exp o exp is not symmetrel");
    assert_eq!((cx.u.to_string(), cx.v.to_string()), ("[1]".into(), "[1]".into()));
    assert_eq!((cx.lhs, cx.rhs), (int(3), int(1)));
    // N symmetrel iff N o exp symmetral
    assert!(check_symmetral(&j().comp(&exp()), &l, 4).is_none());
    assert!(check_symmetral(&gen_symmetrel(3, 6).unwrap().comp(&exp()), &l, 4).is_none());
    let r: Mould = random_table(5);
    let unital = Mould::from_fn("unital", move |w: &Word| if w.is_empty() { int(1) } else { r.eval(w) });
    assert!(check_symmetral(&unital.comp(&exp()), &l, 4).is_some());
}

#[test]
fn growth_bounds() {
    let one = int(1);
    for m in [exp(), j()] {
        assert!(growth_audit(&m, &one, &one, 8).is_ok());
        assert!(audit_product(&m, &m, (&one, &one), (&one, &one), 8).is_ok());
        assert!(audit_composition(&m, &m, (&one, &one), (&one, &one), 8).is_ok());
    }
    let (c1, k1, c2, k2) = (int(1), int(2), ratio(1, 2), ratio(3, 2));
    let (a, b) = (random_geometric(3, &c1, &k1), random_geometric(4, &c2, &k2));
    assert!(growth_audit(&a, &c1, &k1, 8).is_ok());
    assert!(audit_product(&a, &b, (&c1, &k1), (&c2, &k2), 8).is_ok());
    assert!(audit_composition(&a, &b, (&c1, &k1), (&c2, &k2), 8).is_ok());
    // a bound that is too tight is reported
    let v = growth_audit(&a, &ratio(1, 100), &k1, 8).unwrap_err();
    assert!(abs(&v.value) > v.bound);
}
