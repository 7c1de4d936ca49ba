use alloc::format;

use num_traits::Signed;

use super::Mould;
use crate::linalg::{int, pow, Rational};
use crate::random::keyed_unit_rational;
use crate::words::{words_up_to_weight, Word};

/// A word where `|M^ω|` exceeds the audited bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthViolation {
    pub word: Word,
    pub value: Rational,
    pub bound: Rational,
}

fn audit(
    m: &Mould,
    max_weight: u32,
    skip_empty: bool,
    bound: impl Fn(&Word) -> Rational,
) -> Result<(), GrowthViolation> {
    for w in words_up_to_weight(max_weight) {
        if skip_empty && w.is_empty() {
            continue;
        }
        let value = m.eval(&w);
        let b = bound(&w);
        if value.abs() > b {
            return Err(GrowthViolation {
                word: w,
                value,
                bound: b,
            });
        }
    }
    Ok(())
}

/// `|M^ω| ≤ C κ^{‖ω‖}` for every word of weight at most `max_weight`.
pub fn growth_audit(
    m: &Mould,
    c: &Rational,
    kappa: &Rational,
    max_weight: u32,
) -> Result<(), GrowthViolation> {
    audit(m, max_weight, false, |w| c * pow(kappa, w.weight_value()))
}

/// Both forms of the product bound:
/// `|(M×N)^ω| ≤ CC′(|ω|+1) max(κ,κ′)^{‖ω‖} ≤ CC′(‖ω‖+1) max(κ,κ′)^{‖ω‖}`.
pub fn audit_product(
    m: &Mould,
    n: &Mould,
    (c, kappa): (&Rational, &Rational),
    (c2, kappa2): (&Rational, &Rational),
    max_weight: u32,
) -> Result<(), GrowthViolation> {
    let k = if kappa > kappa2 { kappa } else { kappa2 };
    let p = m.mul(n);
    audit(&p, max_weight, false, |w| {
        c * c2 * int(w.len() as i64 + 1) * pow(k, w.weight_value())
    })?;
    audit(&p, max_weight, false, |w| {
        c * c2 * int(w.weight_value() as i64 + 1) * pow(k, w.weight_value())
    })
}

/// Both forms of the composition bound on nonempty words:
/// `|(M∘N)^ω| ≤ C(1+C′)^{|ω|-1}(κκ′)^{‖ω‖} ≤ C((1+C′)κκ′)^{‖ω‖}`.
pub fn audit_composition(
    m: &Mould,
    n: &Mould,
    (c, kappa): (&Rational, &Rational),
    (c2, kappa2): (&Rational, &Rational),
    max_weight: u32,
) -> Result<(), GrowthViolation> {
    let base = int(1) + c2;
    let kk = kappa * kappa2;
    let comp = m.comp(n);
    audit(&comp, max_weight, true, |w| {
        c * pow(&base, w.len() as u32 - 1) * pow(&kk, w.weight_value())
    })?;
    audit(&comp, max_weight, true, |w| {
        c * pow(&(&base * &kk), w.weight_value())
    })
}

/// `M^ω = C κ^{‖ω‖} r_ω` with seeded `r_ω ∈ [-1, 1]`.
pub fn random_geometric(seed: u64, c: &Rational, kappa: &Rational) -> Mould {
    let (c, kappa) = (c.clone(), kappa.clone());
    Mould::from_fn(format!("geometric:{}", seed), move |w: &Word| {
        &c * pow(&kappa, w.weight_value()) * keyed_unit_rational(seed, w)
    })
}
