//! Surjections onto initial segments, written as packed words, and the
//! (weak) quasi-shuffles built from them.
//!
//! Images are 1-based: a surjection of `{1..n}` onto `{1..s}` is stored as
//! the packed word `σ₁⋯σ_n`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::linalg::LinComb;
use crate::words::{qsh_product, Word};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    images: Vec<u32>,
}

fn is_packed(images: &[u32]) -> bool {
    let s = images.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = alloc::vec![false; s + 1];
    for &v in images {
        if v == 0 {
            return false;
        }
        seen[v as usize] = true;
    }
    seen[1..].iter().all(|&b| b)
}

impl Surjection {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if !is_packed(&images) {
            return Err(Error::NotPacked(fmt_packed(&images)));
        }
        Ok(Surjection { images })
    }

    pub fn identity(n: usize) -> Self {
        Surjection {
            images: (1..=n as u32).collect(),
        }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Size `n` of the domain.
    pub fn domain(&self) -> usize {
        self.images.len()
    }

    /// Size `s` of the range.
    pub fn range(&self) -> usize {
        self.images.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.images.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn is_permutation(&self) -> bool {
        self.range() == self.domain()
    }

    /// `self ∘ inner`, i.e. `i ↦ self(inner(i))`.
    pub fn after(&self, inner: &Surjection) -> Result<Surjection> {
        if inner.range() != self.domain() {
            return Err(Error::LengthMismatch {
                expected: self.domain(),
                found: inner.range(),
            });
        }
        Ok(Surjection {
            images: inner
                .images
                .iter()
                .map(|&k| self.images[k as usize - 1])
                .collect(),
        })
    }

    /// 0-based positions mapped to `k`, increasing.
    pub fn preimage(&self, k: u32) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == k)
            .map(|(i, _)| i)
            .collect()
    }
}

fn fmt_packed(images: &[u32]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    if images.iter().all(|&v| v <= 35) {
        for &v in images {
            let c = if v < 10 {
                (b'0' + v as u8) as char
            } else {
                (b'A' + (v - 10) as u8) as char
            };
            out.push(c);
        }
    } else {
        for (i, v) in images.iter().enumerate() {
            if i > 0 {
                out.push('.');
            }
            let _ = write!(out, "{}", v);
        }
    }
    out
}

fn parse_packed(text: &str, offset: usize) -> Result<Vec<u32>> {
    if text.contains('.') {
        let mut pos = offset;
        let mut out = Vec::new();
        for part in text.split('.') {
            out.push(
                part.trim()
                    .parse()
                    .map_err(|_| Error::parse(pos, "expected an integer"))?,
            );
            pos += part.len() + 1;
        }
        return Ok(out);
    }
    text.chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0'..='9' => Ok(c as u32 - '0' as u32),
            'A'..='Z' => Ok(c as u32 - 'A' as u32 + 10),
            _ => Err(Error::parse(offset + i, "expected a digit or A-Z")),
        })
        .collect()
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_packed(&self.images))
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Surjection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Surjection::new(parse_packed(s.trim(), 0)?)
    }
}

/// A surjection of `{1..p+q}` with a marked split after position `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitSurjection {
    surj: Surjection,
    p: usize,
}

impl SplitSurjection {
    pub fn new(images: Vec<u32>, p: usize) -> Result<Self> {
        if p > images.len() {
            return Err(Error::LengthMismatch {
                expected: images.len(),
                found: p,
            });
        }
        Ok(SplitSurjection {
            surj: Surjection::new(images)?,
            p,
        })
    }

    pub fn map(&self) -> &[u32] {
        self.surj.images()
    }

    pub fn surjection(&self) -> &Surjection {
        &self.surj
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.surj.domain() - self.p
    }

    pub fn left(&self) -> &[u32] {
        &self.map()[..self.p]
    }

    pub fn right(&self) -> &[u32] {
        &self.map()[self.p..]
    }

    pub fn range(&self) -> usize {
        self.surj.range()
    }

    /// Number `r = p + q - s` of contractions.
    pub fn kind(&self) -> usize {
        self.surj.domain() - self.range()
    }

    pub fn is_quasi_shuffle(&self) -> bool {
        let inc = |x: &[u32]| x.windows(2).all(|w| w[0] < w[1]);
        inc(self.left()) && inc(self.right())
    }

    pub fn is_weak_quasi_shuffle(&self) -> bool {
        let nd = |x: &[u32]| x.windows(2).all(|w| w[0] <= w[1]);
        nd(self.left()) && nd(self.right())
    }
}

impl fmt::Display for SplitSurjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all = fmt_packed(self.map());
        if all.contains('.') {
            write!(f, "{}|{}", fmt_packed(self.left()), fmt_packed(self.right()))
        } else {
            write!(f, "{}|{}", &all[..self.p], &all[self.p..])
        }
    }
}

impl fmt::Debug for SplitSurjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SplitSurjection {
    type Err = Error;

    /// `1224|113`; either side may be empty.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (l, r) = t
            .split_once('|')
            .ok_or_else(|| Error::parse(0, "expected `left|right`"))?;
        let mut images = if l.is_empty() { Vec::new() } else { parse_packed(l, 0)? };
        let p = images.len();
        if !r.is_empty() {
            images.extend(parse_packed(r, l.len() + 1)?);
        }
        SplitSurjection::new(images, p)
    }
}

fn merge_paths(
    p: usize,
    q: usize,
    i: usize,
    j: usize,
    next: u32,
    left: &mut Vec<u32>,
    right: &mut Vec<u32>,
    out: &mut Vec<SplitSurjection>,
) {
    if i == p && j == q {
        let mut images = left.clone();
        images.extend_from_slice(right);
        out.push(SplitSurjection {
            surj: Surjection { images },
            p,
        });
        return;
    }
    if i < p {
        left.push(next);
        merge_paths(p, q, i + 1, j, next + 1, left, right, out);
        left.pop();
    }
    if j < q {
        right.push(next);
        merge_paths(p, q, i, j + 1, next + 1, left, right, out);
        right.pop();
    }
    if i < p && j < q {
        left.push(next);
        right.push(next);
        merge_paths(p, q, i + 1, j + 1, next + 1, left, right, out);
        left.pop();
        right.pop();
    }
}

/// All `(p,q)`-quasi-shuffles of every type, in lexicographic order of the
/// image sequence.
pub fn enumerate_qsh_all(p: usize, q: usize) -> Vec<SplitSurjection> {
    let mut out = Vec::new();
    merge_paths(p, q, 0, 0, 1, &mut Vec::new(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `(p,q)`-quasi-shuffles of type `r` (onto `{1..p+q-r}`); empty when `r`
/// exceeds `min(p,q)`.
pub fn enumerate_qsh(p: usize, q: usize, r: usize) -> Vec<SplitSurjection> {
    enumerate_qsh_all(p, q)
        .into_iter()
        .filter(|s| s.kind() == r)
        .collect()
}

fn nondecreasing_sequences(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            rec(len, v, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 1, max, &mut Vec::new(), &mut out);
    out
}

/// All weak `(p,q)`-quasi-shuffles of every type, in lexicographic order.
pub fn enumerate_wqsh(p: usize, q: usize) -> Vec<SplitSurjection> {
    let n = p + q;
    let mut out = Vec::new();
    if n == 0 {
        out.push(SplitSurjection {
            surj: Surjection { images: Vec::new() },
            p: 0,
        });
        return out;
    }
    for s in 1..=n as u32 {
        let lefts = nondecreasing_sequences(p, s);
        let rights = nondecreasing_sequences(q, s);
        for l in &lefts {
            for r in &rights {
                let mut images = l.clone();
                images.extend_from_slice(r);
                if images.iter().copied().max() == Some(s) && is_packed(&images) {
                    out.push(SplitSurjection {
                        surj: Surjection { images },
                        p,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// All nondecreasing surjections of `{1..n}`, in lexicographic order; the
/// empty map when `n = 0`.
pub fn nondecreasing_surjections(n: usize) -> Vec<Surjection> {
    fn rec(n: usize, cur: &mut Vec<u32>, out: &mut Vec<Surjection>) {
        if cur.len() == n {
            out.push(Surjection { images: cur.clone() });
            return;
        }
        let last = cur.last().copied().unwrap_or(0);
        if last > 0 {
            cur.push(last);
            rec(n, cur, out);
            cur.pop();
        }
        cur.push(last + 1);
        rec(n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

fn pack(values: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.binary_search(v).expect("value present") as u32 + 1)
        .collect()
}

/// Unique factorization `φ = δ ∘ σ` of a weak quasi-shuffle, with `σ`
/// nondecreasing, `σ_p < σ_{p+1}`, and `δ` a `(σ_p, t - σ_p)`-quasi-shuffle.
/// Returns `(σ, δ)`.
pub fn factorize_wqsh(phi: &SplitSurjection) -> Result<(SplitSurjection, SplitSurjection)> {
    if !phi.is_weak_quasi_shuffle() {
        return Err(Error::NotWeakQuasiShuffle(phi.to_string()));
    }
    let mut dl = phi.left().to_vec();
    dl.dedup();
    let mut dr = phi.right().to_vec();
    dr.dedup();
    let shift = dl.len() as u32;
    let mut sigma = pack(phi.left());
    sigma.extend(pack(phi.right()).into_iter().map(|v| v + shift));
    let p_delta = dl.len();
    dl.extend(dr);
    let sigma = SplitSurjection::new(sigma, phi.p())?;
    let delta = SplitSurjection::new(dl, p_delta)?;
    debug_assert_eq!(
        delta.surjection().after(sigma.surjection()).ok().as_ref(),
        Some(phi.surjection())
    );
    Ok((sigma, delta))
}

/// One element of `qsh_φ(p,q)` with its nondecreasing `σ[η]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberEntry {
    pub eta: SplitSurjection,
    pub sigma: Surjection,
}

/// The quasi-shuffles `η` through which `φ` factorizes order-compatibly,
/// each with the unique nondecreasing `σ[η]` such that `φ = σ[η] ∘ η`.
///
/// Built block by block: for each value `k` of `φ`, a quasi-shuffle of the
/// left and right preimages of `k` is chosen, and the choices are
/// concatenated. Sorted by decreasing image size, then lexicographically.
pub fn fiber_qsh(phi: &SplitSurjection) -> Result<Vec<FiberEntry>> {
    if !phi.is_weak_quasi_shuffle() {
        return Err(Error::NotWeakQuasiShuffle(phi.to_string()));
    }
    let p = phi.p();
    let n = phi.map().len();
    let s = phi.range() as u32;
    let parts: Vec<(Vec<usize>, Vec<usize>)> = (1..=s)
        .map(|k| {
            let pre = phi.surjection().preimage(k);
            let (l, r): (Vec<usize>, Vec<usize>) = pre.into_iter().partition(|&i| i < p);
            (l, r)
        })
        .collect();
    let choices: Vec<Vec<SplitSurjection>> = parts
        .iter()
        .map(|(l, r)| enumerate_qsh_all(l.len(), r.len()))
        .collect();

    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; choices.len()];
    loop {
        let mut images = alloc::vec![0u32; n];
        let mut sigma = Vec::new();
        let mut offset = 0u32;
        for (k, ((l, r), ch)) in parts.iter().zip(&choices).enumerate() {
            let eta_k = &ch[idx[k]];
            for (pos, &v) in l.iter().chain(r.iter()).zip(eta_k.map()) {
                images[*pos] = offset + v;
            }
            let c = eta_k.range() as u32;
            sigma.extend(core::iter::repeat_n(k as u32 + 1, c as usize));
            offset += c;
        }
        out.push(FiberEntry {
            eta: SplitSurjection {
                surj: Surjection { images },
                p,
            },
            sigma: Surjection { images: sigma },
        });
        // odometer over the per-block choices
        let mut k = choices.len();
        loop {
            if k == 0 {
                out.sort_by(|a, b| b.eta.range().cmp(&a.eta.range()).then(a.eta.cmp(&b.eta)));
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Standardization: the permutation ranking positions by value, ties broken
/// by position.
pub fn standardize(w: &[u32]) -> Surjection {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w[i], i));
    let mut images = alloc::vec![0u32; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        images[i] = rank as u32 + 1;
    }
    Surjection { images }
}

fn check_len<L: Letter>(w: &Word<L>, sigma: &Surjection) -> Result<()> {
    if w.letters().len() != sigma.domain() {
        return Err(Error::LengthMismatch {
            expected: sigma.domain(),
            found: w.letters().len(),
        });
    }
    Ok(())
}

/// `ω^σ`: the `k`-th letter is the combination of the letters sent to `k`.
pub fn apply_surjection<L: Letter>(w: &Word<L>, sigma: &Surjection) -> Result<Word<L>> {
    check_len(w, sigma)?;
    Ok(blocks(w, sigma)?
        .iter()
        .map(|b| b.weight().expect("surjective, so blocks are nonempty"))
        .collect())
}

/// `ω_σ^k`: the subword at the preimages of `k`.
pub fn block<L: Letter>(w: &Word<L>, sigma: &Surjection, k: u32) -> Result<Word<L>> {
    check_len(w, sigma)?;
    Ok(sigma
        .preimage(k)
        .into_iter()
        .map(|i| w.letters()[i].clone())
        .collect())
}

/// All blocks `ω_σ¹, …, ω_σˢ`.
pub fn blocks<L: Letter>(w: &Word<L>, sigma: &Surjection) -> Result<Vec<Word<L>>> {
    check_len(w, sigma)?;
    let mut out: Vec<Vec<L>> = alloc::vec![Vec::new(); sigma.range()];
    for (l, &k) in w.letters().iter().zip(sigma.images()) {
        out[k as usize - 1].push(l.clone());
    }
    Ok(out.into_iter().map(Word::new).collect())
}

/// Left side of the block identity for a weak quasi-shuffle `φ`:
/// `Σ_{η ∈ qsh_φ} (ω^η)_{σ[η]}¹ ⧢ ⋯ ⧢ (ω^η)_{σ[η]}ˢ`.
pub fn fiber_block_sum<L: Letter>(w: &Word<L>, phi: &SplitSurjection) -> Result<LinComb<Word<L>>> {
    let mut out = LinComb::zero();
    for e in fiber_qsh(phi)? {
        let we = apply_surjection(w, e.eta.surjection())?;
        out += &qsh_product(&blocks(&we, &e.sigma)?);
    }
    Ok(out)
}

/// Right side: `ω_σ¹ ⧢ ⋯ ⧢ ω_σᵗ` with `σ` the nondecreasing factor of `φ`.
pub fn factor_block_product<L: Letter>(
    w: &Word<L>,
    phi: &SplitSurjection,
) -> Result<LinComb<Word<L>>> {
    let (sigma, _) = factorize_wqsh(phi)?;
    Ok(qsh_product(&blocks(w, sigma.surjection())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sp(s: &str) -> SplitSurjection {
        s.parse().unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn packed_text_roundtrip() {
        assert_eq!(sp("1224|113").to_string(), "1224|113");
        assert_eq!(sp("|12").p(), 0);
        assert_eq!(sp("1459|23678A").map()[9], 10);
        assert!("13|5".parse::<SplitSurjection>().is_err());
        assert!("0".parse::<Surjection>().is_err());
    }

    #[test]
    fn qsh_small_cases() {
        let t0: Vec<_> = enumerate_qsh(1, 1, 0).iter().map(|s| s.to_string()).collect();
        assert_eq!(t0, ["1|2", "2|1"]);
        let t1: Vec<_> = enumerate_qsh(1, 1, 1).iter().map(|s| s.to_string()).collect();
        assert_eq!(t1, ["1|1"]);
        assert_eq!(enumerate_qsh_all(2, 1).len(), 5);
        assert!(enumerate_qsh(1, 1, 2).is_empty());
        assert_eq!(enumerate_qsh(0, 0, 0).len(), 1);
    }

    #[test]
    fn shuffle_counts_are_binomial() {
        for p in 0..=8 {
            for q in 0..=8 - p {
                assert_eq!(enumerate_qsh(p, q, 0).len(), binom(p + q, p));
            }
        }
    }

    #[test]
    fn weak_quasi_shuffles() {
        let w10: Vec<_> = enumerate_wqsh(1, 0).iter().map(|s| s.to_string()).collect();
        assert_eq!(w10, ["1|"]);
        assert_eq!(enumerate_wqsh(1, 1).len(), 3);
        for p in 0..=3 {
            for q in 0..=3 {
                let w = enumerate_wqsh(p, q);
                assert!(w.iter().all(|s| s.is_weak_quasi_shuffle()));
                for s in enumerate_qsh_all(p, q) {
                    assert!(w.contains(&s));
                }
            }
        }
    }

    #[test]
    fn factorization_example() {
        let (sigma, delta) = factorize_wqsh(&sp("1224|113")).unwrap();
        assert_eq!(delta.to_string(), "124|13");
        assert_eq!(sigma.to_string(), "1223|445");
        let phi = sp("13|24");
        let (sigma, delta) = factorize_wqsh(&phi).unwrap();
        assert_eq!(delta, phi);
        assert_eq!(sigma.surjection(), &Surjection::identity(4));
        assert!(factorize_wqsh(&sp("21|1")).is_err());
    }

    #[test]
    fn fiber_table() {
        let f = fiber_qsh(&sp("1224|113")).unwrap();
        let etas: Vec<_> = f.iter().map(|e| e.eta.to_string()).collect();
        let sigmas: Vec<_> = f.iter().map(|e| e.sigma.to_string()).collect();
        assert_eq!(etas, ["1457|236", "2457|136", "3457|126", "1346|125", "2346|125"]);
        assert_eq!(sigmas, ["1112234", "1112234", "1112234", "112234", "112234"]);
        assert_eq!(fiber_qsh(&sp("1224|112334")).unwrap().len(), 75);
        let phi = sp("13|24");
        let f = fiber_qsh(&phi).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].eta, phi);
        assert_eq!(f[0].sigma, Surjection::identity(4));
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[1, 3, 2, 2, 4]).to_string(), "14235");
        assert_eq!(standardize(&[2, 3, 1]).to_string(), "231");
        assert_eq!(standardize(&[1, 1, 1]).to_string(), "123");
        assert_eq!(
            standardize(sp("1224|112334").map()).to_string(),
            "145923678A"
        );
    }

    #[test]
    fn apply_and_blocks() {
        let w: Word = "[1.2]".parse().unwrap();
        let s: Surjection = "11".parse().unwrap();
        assert_eq!(apply_surjection(&w, &s).unwrap().to_string(), "[3]");
        assert_eq!(block(&w, &s, 1).unwrap(), w);
        let w3: Word = "[1.2.3]".parse().unwrap();
        let id = Surjection::identity(3);
        assert_eq!(apply_surjection(&w3, &id).unwrap(), w3);
        assert_eq!(blocks(&w3, &id).unwrap().len(), 3);
        assert!(apply_surjection(&w3, &s).is_err());
    }

    #[test]
    fn nondecreasing_count() {
        for n in 1..=6 {
            let all = nondecreasing_surjections(n);
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(Surjection::is_nondecreasing));
        }
        assert_eq!(nondecreasing_surjections(0).len(), 1);
    }
}
