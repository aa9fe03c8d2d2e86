use crate::exact::FieldElement;
use crate::poly::TernaryCubic;

/// The Aronhold invariants of a ternary cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPair {
    pub s: FieldElement,
    pub t: FieldElement,
}

impl InvariantPair {
    /// `T² + 64 S³`, nonzero exactly on smooth cubics.
    pub fn discriminant(&self) -> FieldElement {
        let s3 = &(&self.s * &self.s) * &self.s;
        &(&self.t * &self.t) + &(&FieldElement::from(64) * &s3)
    }
}

fn evaluate<const N: usize>(terms: &[([u8; N], i64, i64)], a: &[FieldElement]) -> FieldElement {
    terms.iter().fold(FieldElement::zero(), |acc, (idx, n, d)| {
        let mono = idx
            .iter()
            .fold(FieldElement::ratio(*n, *d), |m, &i| &m * &a[i as usize]);
        &acc + &mono
    })
}

/// Degree-4 invariant `S` and degree-6 invariant `T`, scaled so that on
/// `x³+y³+z³+6λxyz` they equal `λ-λ⁴` and `1-20λ³-8λ⁶`.
pub fn aronhold_st(f: &TernaryCubic) -> InvariantPair {
    let a = f.coeffs();
    InvariantPair {
        s: evaluate(&S_TERMS, a),
        t: evaluate(&T_TERMS, a),
    }
}

// Each entry lists the coefficient indices of one monomial (with
// repetition) in the fixed cubic monomial order, then numerator and
// denominator of its coefficient.
#[rustfmt::skip]
const S_TERMS: [([u8; 4], i64, i64); 25] = [
    ([0, 3, 7, 9], -1, 9),
    ([0, 3, 8, 8], 1, 27),
    ([0, 4, 6, 9], 1, 6),
    ([0, 4, 7, 8], -1, 54),
    ([0, 5, 6, 8], -1, 9),
    ([0, 5, 7, 7], 1, 27),
    ([1, 1, 7, 9], 1, 27),
    ([1, 1, 8, 8], -1, 81),
    ([1, 2, 6, 9], -1, 9),
    ([1, 2, 7, 8], 1, 81),
    ([1, 3, 4, 9], -1, 54),
    ([1, 3, 5, 8], 1, 81),
    ([1, 4, 4, 8], 1, 162),
    ([1, 4, 5, 7], -1, 54),
    ([1, 5, 5, 6], 1, 27),
    ([2, 2, 6, 8], 1, 27),
    ([2, 2, 7, 7], -1, 81),
    ([2, 3, 3, 9], 1, 27),
    ([2, 3, 4, 8], -1, 54),
    ([2, 3, 5, 7], 1, 81),
    ([2, 4, 4, 7], 1, 162),
    ([2, 4, 5, 6], -1, 54),
    ([3, 3, 5, 5], -1, 81),
    ([3, 4, 4, 5], 1, 162),
    ([4, 4, 4, 4], -1, 1296),
];
#[rustfmt::skip]
const T_TERMS: [([u8; 6], i64, i64); 103] = [
    ([0, 0, 6, 6, 9, 9], 1, 1),
    ([0, 0, 6, 7, 8, 9], -2, 3),
    ([0, 0, 6, 8, 8, 8], 4, 27),
    ([0, 0, 7, 7, 7, 9], 4, 27),
    ([0, 0, 7, 7, 8, 8], -1, 27),
    ([0, 1, 3, 6, 9, 9], -2, 3),
    ([0, 1, 3, 7, 8, 9], 2, 9),
    ([0, 1, 3, 8, 8, 8], -4, 81),
    ([0, 1, 4, 6, 8, 9], 2, 9),
    ([0, 1, 4, 7, 7, 9], -4, 27),
    ([0, 1, 4, 7, 8, 8], 2, 81),
    ([0, 1, 5, 6, 7, 9], 2, 9),
    ([0, 1, 5, 6, 8, 8], -4, 27),
    ([0, 1, 5, 7, 7, 8], 2, 81),
    ([0, 2, 3, 6, 8, 9], 2, 9),
    ([0, 2, 3, 7, 7, 9], -4, 27),
    ([0, 2, 3, 7, 8, 8], 2, 81),
    ([0, 2, 4, 6, 7, 9], 2, 9),
    ([0, 2, 4, 6, 8, 8], -4, 27),
    ([0, 2, 4, 7, 7, 8], 2, 81),
    ([0, 2, 5, 6, 6, 9], -2, 3),
    ([0, 2, 5, 6, 7, 8], 2, 9),
    ([0, 2, 5, 7, 7, 7], -4, 81),
    ([0, 3, 3, 3, 9, 9], 4, 27),
    ([0, 3, 3, 4, 8, 9], -4, 27),
    ([0, 3, 3, 5, 7, 9], -4, 27),
    ([0, 3, 3, 5, 8, 8], 8, 81),
    ([0, 3, 4, 4, 7, 9], 1, 9),
    ([0, 3, 4, 4, 8, 8], 1, 81),
    ([0, 3, 4, 5, 6, 9], 2, 9),
    ([0, 3, 4, 5, 7, 8], -10, 81),
    ([0, 3, 5, 5, 6, 8], -4, 27),
    ([0, 3, 5, 5, 7, 7], 8, 81),
    ([0, 4, 4, 4, 6, 9], -5, 54),
    ([0, 4, 4, 4, 7, 8], -1, 162),
    ([0, 4, 4, 5, 6, 8], 1, 9),
    ([0, 4, 4, 5, 7, 7], 1, 81),
    ([0, 4, 5, 5, 6, 7], -4, 27),
    ([0, 5, 5, 5, 6, 6], 4, 27),
    ([1, 1, 1, 6, 9, 9], 4, 27),
    ([1, 1, 1, 7, 8, 9], -4, 81),
    ([1, 1, 1, 8, 8, 8], 8, 729),
    ([1, 1, 2, 6, 8, 9], -4, 27),
    ([1, 1, 2, 7, 7, 9], 8, 81),
    ([1, 1, 2, 7, 8, 8], -4, 243),
    ([1, 1, 3, 3, 9, 9], -1, 27),
    ([1, 1, 3, 4, 8, 9], 2, 81),
    ([1, 1, 3, 5, 7, 9], 2, 81),
    ([1, 1, 3, 5, 8, 8], -4, 243),
    ([1, 1, 4, 4, 7, 9], 1, 81),
    ([1, 1, 4, 4, 8, 8], -2, 243),
    ([1, 1, 4, 5, 6, 9], -4, 27),
    ([1, 1, 4, 5, 7, 8], 2, 81),
    ([1, 1, 5, 5, 6, 8], 8, 81),
    ([1, 1, 5, 5, 7, 7], -1, 27),
    ([1, 2, 2, 6, 7, 9], -4, 27),
    ([1, 2, 2, 6, 8, 8], 8, 81),
    ([1, 2, 2, 7, 7, 8], -4, 243),
    ([1, 2, 3, 3, 8, 9], 2, 81),
    ([1, 2, 3, 4, 7, 9], -10, 81),
    ([1, 2, 3, 4, 8, 8], 2, 81),
    ([1, 2, 3, 5, 6, 9], 2, 9),
    ([1, 2, 3, 5, 7, 8], -2, 243),
    ([1, 2, 4, 4, 6, 9], 1, 9),
    ([1, 2, 4, 4, 7, 8], -1, 243),
    ([1, 2, 4, 5, 6, 8], -10, 81),
    ([1, 2, 4, 5, 7, 7], 2, 81),
    ([1, 2, 5, 5, 6, 7], 2, 81),
    ([1, 3, 3, 4, 5, 9], 2, 81),
    ([1, 3, 3, 5, 5, 8], -4, 243),
    ([1, 3, 4, 4, 4, 9], -1, 162),
    ([1, 3, 4, 4, 5, 8], -1, 243),
    ([1, 3, 4, 5, 5, 7], 2, 81),
    ([1, 3, 5, 5, 5, 6], -4, 81),
    ([1, 4, 4, 4, 4, 8], 1, 486),
    ([1, 4, 4, 4, 5, 7], -1, 162),
    ([1, 4, 4, 5, 5, 6], 1, 81),
    ([2, 2, 2, 6, 6, 9], 4, 27),
    ([2, 2, 2, 6, 7, 8], -4, 81),
    ([2, 2, 2, 7, 7, 7], 8, 729),
    ([2, 2, 3, 3, 7, 9], 8, 81),
    ([2, 2, 3, 3, 8, 8], -1, 27),
    ([2, 2, 3, 4, 6, 9], -4, 27),
    ([2, 2, 3, 4, 7, 8], 2, 81),
    ([2, 2, 3, 5, 6, 8], 2, 81),
    ([2, 2, 3, 5, 7, 7], -4, 243),
    ([2, 2, 4, 4, 6, 8], 1, 81),
    ([2, 2, 4, 4, 7, 7], -2, 243),
    ([2, 2, 4, 5, 6, 7], 2, 81),
    ([2, 2, 5, 5, 6, 6], -1, 27),
    ([2, 3, 3, 3, 5, 9], -4, 81),
    ([2, 3, 3, 4, 4, 9], 1, 81),
    ([2, 3, 3, 4, 5, 8], 2, 81),
    ([2, 3, 3, 5, 5, 7], -4, 243),
    ([2, 3, 4, 4, 4, 8], -1, 162),
    ([2, 3, 4, 4, 5, 7], -1, 243),
    ([2, 3, 4, 5, 5, 6], 2, 81),
    ([2, 4, 4, 4, 4, 7], 1, 486),
    ([2, 4, 4, 4, 5, 6], -1, 162),
    ([3, 3, 3, 5, 5, 5], 8, 729),
    ([3, 3, 4, 4, 5, 5], -2, 243),
    ([3, 4, 4, 4, 4, 5], 1, 486),
    ([4, 4, 4, 4, 4, 4], -1, 5832),
];
