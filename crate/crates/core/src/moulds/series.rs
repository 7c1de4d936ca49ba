use num_traits::Zero;

use super::Mould;
use crate::linalg::LinComb;
use crate::words::{words_of_weight, words_up_to_weight, Word};

/// A word series `Σ c_ω ω` truncated to words of weight at most `max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    max_weight: u32,
    coeffs: LinComb<Word>,
}

impl TruncatedSeries {
    /// Drops the terms above the weight bound.
    pub fn new(max_weight: u32, coeffs: LinComb<Word>) -> Self {
        TruncatedSeries {
            max_weight,
            coeffs: coeffs.filter(|w| w.weight_value() <= max_weight),
        }
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn coeffs(&self) -> &LinComb<Word> {
        &self.coeffs
    }

    /// Concatenation product, truncated.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let w = self.max_weight.min(other.max_weight);
        let mut out = LinComb::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if a.weight_value() + b.weight_value() <= w {
                    out.add_term(a.concat(b), ca * cb);
                }
            }
        }
        TruncatedSeries {
            max_weight: w,
            coeffs: out,
        }
    }
}

/// `W^M = Σ M^ω ω` over all words of weight at most `max_weight`.
pub fn word_series(m: &Mould, max_weight: u32) -> TruncatedSeries {
    let coeffs = words_up_to_weight(max_weight)
        .into_iter()
        .map(|w| {
            let c = m.eval(&w);
            (w, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    TruncatedSeries { max_weight, coeffs }
}

/// `ι^M(κ) = Σ_{‖ω‖ = κ} M^ω ω`.
pub fn iota(m: &Mould, kappa: u32) -> LinComb<Word> {
    words_of_weight(kappa)
        .into_iter()
        .map(|w| {
            let c = m.eval(&w);
            (w, c)
        })
        .collect()
}

/// Applies the concatenation endomorphism `j^M`, which sends each letter
/// `κ` to `ι^M(κ)`, and truncates.
pub fn substitute(m: &Mould, s: &TruncatedSeries) -> TruncatedSeries {
    let w = s.max_weight;
    let images: alloc::vec::Vec<TruncatedSeries> =
        (0..=w).map(|k| TruncatedSeries::new(w, iota(m, k))).collect();
    let mut out = LinComb::zero();
    for (word, c) in &s.coeffs {
        let mut acc = TruncatedSeries::new(w, LinComb::basis(Word::empty()));
        for l in word.letters() {
            acc = acc.mul(&images[l.value() as usize]);
        }
        out.add_scaled(c, &acc.coeffs);
    }
    TruncatedSeries::new(w, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moulds::{identity, random_table};

    #[test]
    fn identity_series() {
        let s = word_series(&identity(), 2);
        assert_eq!(alloc::format!("{}", s.coeffs()), "[1] + [2]");
        let r = word_series(&random_table(1), 4);
        assert_eq!(substitute(&identity(), &r), r);
    }

    #[test]
    fn product_and_composition_laws() {
        let (m, n) = (random_table(2), random_table(3));
        let wm = word_series(&m, 4);
        let wn = word_series(&n, 4);
        assert_eq!(word_series(&m.mul(&n), 4), wm.mul(&wn));
        // j^N ∘ j^M = j^{M∘N}, hence W^{M∘N} = j^N(W^M)
        assert_eq!(word_series(&m.comp(&n), 4), substitute(&n, &wm));
        let s = word_series(&random_table(4), 4);
        assert_eq!(substitute(&n, &substitute(&m, &s)), substitute(&m.comp(&n), &s));
    }
}
