use std::collections::BTreeSet;

use mouldcalc_core::surjections::{
    enumerate_qsh, enumerate_qsh_all, enumerate_wqsh, factor_block_product, factorize_wqsh,
    fiber_block_sum, fiber_qsh, standardize, SplitSurjection, Surjection,
};
use mouldcalc_core::words::{words_up_to_len, Word};
use mouldcalc_core::Nat;

/// All packed words of length `n`, by brute force over `{1..n}^n`.
fn packed(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; n];
    loop {
        let max = cur.iter().copied().max().unwrap_or(0);
        if (1..=max).all(|k| cur.contains(&k)) {
            out.push(cur.clone());
        }
        let mut i = 0;
        while i < n && cur[i] as usize == n {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            return out;
        }
        cur[i] += 1;
    }
}

fn strictly(x: &[u32]) -> bool {
    x.windows(2).all(|w| w[0] < w[1])
}

fn weakly(x: &[u32]) -> bool {
    x.windows(2).all(|w| w[0] <= w[1])
}

fn maps(v: &[SplitSurjection]) -> BTreeSet<Vec<u32>> {
    v.iter().map(|s| s.map().to_vec()).collect()
}

fn shapes(max: usize) -> Vec<(usize, usize)> {
    (0..=max).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect()
}

fn compose(outer: &[u32], inner: &[u32]) -> Vec<u32> {
    inner.iter().map(|&i| outer[i as usize - 1]).collect()
}

#[test]
fn enumeration_matches_definitions() {
    for (p, q) in shapes(5) {
        let all = packed(p + q);
        let qsh: BTreeSet<Vec<u32>> = all
            .iter()
            .filter(|m| strictly(&m[..p]) && strictly(&m[p..]))
            .cloned()
            .collect();
        let wqsh: BTreeSet<Vec<u32>> = all
            .iter()
            .filter(|m| weakly(&m[..p]) && weakly(&m[p..]))
            .cloned()
            .collect();
        assert_eq!(maps(&enumerate_qsh_all(p, q)), qsh, "qsh({},{})", p, q);
        assert_eq!(maps(&enumerate_wqsh(p, q)), wqsh, "wqsh({},{})", p, q);
        for r in 0..=p.min(q) {
            let typed: BTreeSet<Vec<u32>> = qsh
                .iter()
                .filter(|m| m.iter().copied().max().unwrap_or(0) as usize == p + q - r)
                .cloned()
                .collect();
            assert_eq!(maps(&enumerate_qsh(p, q, r)), typed);
        }
    }
}

#[test]
fn factorization_is_unique() {
    for (p, q) in shapes(6) {
        for phi in enumerate_wqsh(p, q) {
            let (sigma, delta) = factorize_wqsh(&phi).unwrap();
            assert_eq!(compose(delta.map(), sigma.map()), phi.map(), "{}", phi);
            assert!(weakly(sigma.map()) && delta.is_quasi_shuffle());
            // brute force: σ nondecreasing packed with σ_p < σ_{p+1}, δ ∈ qsh
            let mut found = Vec::new();
            for s in packed(p + q).into_iter().filter(|s| weakly(s)) {
                if p > 0 && q > 0 && s[p - 1] >= s[p] {
                    continue;
                }
                let t = s.iter().copied().max().unwrap_or(0) as usize;
                let left = if p == 0 { 0 } else { s[p - 1] as usize };
                for d in packed(t) {
                    if strictly(&d[..left]) && strictly(&d[left..]) && compose(&d, &s) == phi.map() {
                        found.push((s.clone(), d));
                    }
                }
            }
            assert_eq!(found, vec![(sigma.map().to_vec(), delta.map().to_vec())], "{}", phi);
        }
    }
}

#[test]
fn fibers_match_brute_force() {
    for (p, q) in shapes(5) {
        for phi in enumerate_wqsh(p, q) {
            let f = phi.map();
            let mut brute = BTreeSet::new();
            for eta in enumerate_qsh_all(p, q) {
                let e = eta.map();
                let order = (0..f.len()).all(|a| (0..f.len()).all(|b| f[a] >= f[b] || e[a] < e[b]));
                let t = e.iter().copied().max().unwrap_or(0) as usize;
                for s in packed(t).into_iter().filter(|s| weakly(s)) {
                    if order && compose(&s, e) == f {
                        brute.insert((e.to_vec(), s));
                    }
                }
            }
            let fast: BTreeSet<(Vec<u32>, Vec<u32>)> = fiber_qsh(&phi)
                .unwrap()
                .into_iter()
                .map(|x| (x.eta.map().to_vec(), x.sigma.images().to_vec()))
                .collect();
            assert_eq!(fast, brute, "{}", phi);
        }
    }
}

#[test]
fn worked_fibers() {
    let phi: SplitSurjection = "1224|113".parse().unwrap();
    let rows: Vec<String> = fiber_qsh(&phi)
        .unwrap()
        .iter()
        .map(|e| format!("{} {}", e.eta, e.sigma))
        .collect();
    assert_eq!(
        rows,
        ["1457|236 1112234", "2457|136 1112234", "3457|126 1112234", "1346|125 112234", "2346|125 112234"]
    );
    let big: SplitSurjection = "1224|112334".parse().unwrap();
    assert_eq!(fiber_qsh(&big).unwrap().len(), 75);
}

#[test]
fn standardization_definition() {
    for w in packed(4) {
        let s = standardize(&w);
        let im = s.images();
        for i in 0..w.len() {
            for j in 0..w.len() {
                if w[i] < w[j] || (w[i] == w[j] && i < j) {
                    assert!(im[i] < im[j], "{:?}", w);
                }
            }
        }
        assert!(s.is_permutation());
    }
    assert_eq!(standardize(&[1, 3, 2, 2, 4]), Surjection::new(vec![1, 4, 2, 3, 5]).unwrap());
}

#[test]
fn block_identity() {
    let letters: Vec<Nat> = (1..=2).map(|v| Nat::new(v).unwrap()).collect();
    let ws = words_up_to_len(&letters, 5);
    for u in &ws {
        for v in ws.iter().filter(|v| u.len() + v.len() <= 5) {
            let w: Word = u.concat(v);
            for phi in enumerate_wqsh(u.len(), v.len()) {
                assert_eq!(
                    fiber_block_sum(&w, &phi).unwrap(),
                    factor_block_product(&w, &phi).unwrap(),
                    "u={} v={} phi={}",
                    u,
                    v,
                    phi
                );
            }
        }
    }
}
