use mouldcalc_core::forests::{
    arborify, arborify_lc, aut_rational, forest_antipode, forest_counit, forest_delta,
    forest_delta_lc, forest_gamma, forest_gamma_lc, forest_mul_lc, forests_up_to, gl_product,
    graft, trees_of_size, Forest, Tree,
};
use mouldcalc_core::words::{deconcat_lc, gamma_lc, qsh_lc};
use mouldcalc_core::{LinComb, Nat, Rational, Tensor};

fn decs() -> Vec<Nat> {
    vec![Nat::new(1).unwrap(), Nat::new(2).unwrap()]
}

fn basis(n: usize) -> Vec<Forest> {
    forests_up_to(n, &decs())
}

type Triple = LinComb<(Forest, Forest, Forest)>;

fn left_assoc(t: &Tensor<Forest, Forest>, co: impl Fn(&Forest) -> Tensor<Forest, Forest>) -> Triple {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        let inner: Triple = co(a).map_basis(|(x, y)| (x.clone(), y.clone(), b.clone()));
        out.add_scaled(c, &inner);
    }
    out
}

fn right_assoc(t: &Tensor<Forest, Forest>, co: impl Fn(&Forest) -> Tensor<Forest, Forest>) -> Triple {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        let inner: Triple = co(b).map_basis(|(x, y)| (a.clone(), x.clone(), y.clone()));
        out.add_scaled(c, &inner);
    }
    out
}

#[test]
fn delta_is_coassociative_and_counital() {
    for f in basis(4) {
        let d = forest_delta(&f);
        assert_eq!(left_assoc(&d, forest_delta), right_assoc(&d, forest_delta), "{}", f);
        let l: LinComb<Forest> = d.iter().map(|((a, b), c)| (b.clone(), c * forest_counit(a))).collect();
        let r: LinComb<Forest> = d.iter().map(|((a, b), c)| (a.clone(), c * forest_counit(b))).collect();
        assert_eq!(l, LinComb::basis(f.clone()));
        assert_eq!(r, LinComb::basis(f.clone()));
    }
}

#[test]
fn delta_is_multiplicative() {
    let b = basis(2);
    for f in &b {
        for g in &b {
            let lhs = forest_delta(&f.mul(g));
            let (df, dg) = (forest_delta(f), forest_delta(g));
            let mut rhs = LinComb::zero();
            for ((a1, b1), c1) in &df {
                for ((a2, b2), c2) in &dg {
                    rhs.add_term((a1.mul(a2), b1.mul(b2)), c1 * c2);
                }
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn antipode_inverts_identity() {
    for f in basis(4) {
        let d = forest_delta(&f);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in &d {
            left.add_scaled(c, &forest_mul_lc(&forest_antipode(a), &LinComb::basis(b.clone())));
            right.add_scaled(c, &forest_mul_lc(&LinComb::basis(a.clone()), &forest_antipode(b)));
        }
        let unit = LinComb::term(Forest::empty(), forest_counit(&f));
        assert_eq!(left, unit, "{}", f);
        assert_eq!(right, unit, "{}", f);
    }
}

#[test]
fn gamma_is_coassociative_and_comodule() {
    for f in basis(4) {
        let g = forest_gamma(&f);
        assert_eq!(left_assoc(&g, forest_gamma), right_assoc(&g, forest_gamma), "{}", f);
    }
    // (Δ ⊗ Id)Γ = m_{13}(Γ ⊗ Γ)Δ
    for f in basis(4) {
        let lhs = left_assoc(&forest_gamma(&f), forest_delta);
        let mut rhs = LinComb::zero();
        for ((a, b), c) in &forest_delta(&f) {
            for ((a1, a2), x) in &forest_gamma(a) {
                for ((b1, b2), y) in &forest_gamma(b) {
                    rhs.add_term((a1.clone(), b1.clone(), a2.mul(b2)), c * x * y);
                }
            }
        }
        assert_eq!(lhs, rhs, "{}", f);
    }
}

#[test]
fn gamma_is_multiplicative() {
    let b = basis(2);
    for f in &b {
        for g in &b {
            let lhs = forest_gamma(&f.mul(g));
            let mut rhs = LinComb::zero();
            for ((a1, b1), c1) in &forest_gamma(f) {
                for ((a2, b2), c2) in &forest_gamma(g) {
                    rhs.add_term((a1.mul(a2), b1.mul(b2)), c1 * c2);
                }
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn arborification_is_a_bialgebra_morphism() {
    let b = basis(4);
    for f in &b {
        let a = arborify(f);
        let lc = LinComb::basis(f.clone());
        let forest_side = forest_delta_lc(&lc).map_legs(arborify, arborify);
        assert_eq!(deconcat_lc(&a), forest_side, "delta at {}", f);
        let forest_side = forest_gamma_lc(&lc).map_legs(arborify, arborify);
        assert_eq!(gamma_lc(&a), forest_side, "gamma at {}", f);
    }
    let small = basis(2);
    for f in &small {
        for g in &small {
            let lhs = arborify(&f.mul(g));
            let rhs = qsh_lc(&arborify(f), &arborify(g));
            assert_eq!(lhs, rhs);
        }
    }
    assert_eq!(arborify_lc(&LinComb::basis(Forest::<Nat>::empty())).len(), 1);
}

#[test]
fn grossman_larson_is_dual_to_cuts() {
    // ⟨F # G, H⟩ = ⟨F ⊗ G, ΔH⟩ with ⟨F, H⟩ = |Aut F| δ
    let b = basis(3);
    for f in &b {
        for g in &b {
            if f.vertex_count() + g.vertex_count() > 3 {
                continue;
            }
            let p = gl_product(f, g);
            for h in b.iter().filter(|h| h.vertex_count() == f.vertex_count() + g.vertex_count()) {
                let lhs = p.coeff(h) * aut_rational(h);
                let rhs = forest_delta(h).coeff(&(f.clone(), g.clone())) * aut_rational(f) * aut_rational(g);
                assert_eq!(lhs, rhs, "{} # {} at {}", f, g, h);
            }
        }
    }
}

#[test]
fn grossman_larson_is_associative() {
    let b = basis(2);
    for x in &b {
        for y in &b {
            for z in &b {
                let l = gl_product(x, y).extend(|xy| gl_product(xy, z));
                let r = gl_product(y, z).extend(|yz| gl_product(x, yz));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn grafting_is_left_pre_lie() {
    let d = decs();
    let trees: Vec<Tree> = (1..=2).flat_map(|n| trees_of_size(n, &d)).collect();
    for x in &trees {
        for y in &trees {
            for z in &trees {
                let assoc = |x: &Tree, y: &Tree| -> LinComb<Tree> {
                    let a = graft(y, z).extend(|yz| graft(x, yz));
                    let b = graft(x, y).extend(|xy| graft(xy, z));
                    let mut out = a;
                    out.add_scaled(&-Rational::from_integer(1.into()), &b);
                    out
                };
                assert_eq!(assoc(x, y), assoc(y, x));
            }
        }
    }
}
