use alloc::vec::Vec;
use core::fmt;

use super::form::TernaryCubic;
use super::linear::LinearForm;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, FieldElement, Radicand};

/// One summand `coeff * form³`.
pub type Term = (FieldElement, LinearForm);

/// `Σ cᵢ lᵢ³`, expanded exactly.
pub fn expand_cubes(terms: &[Term]) -> TernaryCubic {
    terms
        .iter()
        .fold(TernaryCubic::zero(), |acc, (c, l)| acc.add(&l.cube().scale(c)))
}

/// Merges terms whose forms are proportional and drops zero terms, keeping
/// the first representative of each class.
pub fn merge_proportional(terms: &[Term]) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for (c, l) in terms {
        if c.is_zero() || l.is_zero() {
            continue;
        }
        match out.iter_mut().find_map(|t| l.proportional(&t.1).map(|s| (t, s))) {
            Some((t, s)) => t.0 = &t.0 + &(c * &s.pow(3)),
            None => out.push((c.clone(), l.clone())),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

/// A certified Waring decomposition: the terms expand exactly to the target.
#[derive(Clone, PartialEq, Eq)]
pub struct Decomposition {
    terms: Vec<Term>,
    target: TernaryCubic,
}

impl Decomposition {
    pub fn new(terms: Vec<Term>, target: TernaryCubic) -> Result<Self> {
        if expand_cubes(&terms) != target {
            return Err(Error::ExpansionMismatch);
        }
        Ok(Decomposition { terms, target })
    }

    pub fn from_terms(terms: Vec<Term>) -> Self {
        let target = expand_cubes(&terms);
        Decomposition { terms, target }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn target(&self) -> &TernaryCubic {
        &self.target
    }

    /// Number of cubes, the certified upper bound on the rank.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn tower(&self) -> Result<Option<Radicand>> {
        let mut t = None;
        for (c, l) in &self.terms {
            t = crate::exact::field::join_towers(t.as_ref(), c.radicand())?;
            t = crate::exact::field::join_towers(t.as_ref(), l.tower()?.as_ref())?;
        }
        Ok(t)
    }

    /// Decomposition of `target ∘ M`.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> Decomposition {
        Decomposition {
            terms: self
                .terms
                .iter()
                .map(|(c, l)| (c.clone(), l.substitute_linear(m)))
                .collect(),
            target: self.target.substitute_linear(m),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, l)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*({l})^3")?;
        }
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lf(a: i64, b: i64, c: i64) -> LinearForm {
        LinearForm::from_ints(a, b, c)
    }

    #[test]
    fn triangle_identity() {
        let q = FieldElement::ratio(1, 24);
        let mq = -&q;
        let terms = vec![
            (q.clone(), lf(1, 1, 1)),
            (mq.clone(), lf(-1, 1, 1)),
            (mq.clone(), lf(1, -1, 1)),
            (mq, lf(1, 1, -1)),
        ];
        let xyz = TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(expand_cubes(&terms), xyz);
        assert!(Decomposition::new(terms, xyz).is_ok());
    }

    #[test]
    fn worked_binary_example() {
        let terms = vec![
            (FieldElement::from(4), lf(1, 0, 0)),
            (FieldElement::from(-1), lf(1, 1, 0)),
            (FieldElement::from(-1), lf(1, -1, 0)),
        ];
        let f = TernaryCubic::from_ints([2, 0, 0, -6, 0, 0, 0, 0, 0, 0]);
        assert_eq!(expand_cubes(&terms), f);
    }

    #[test]
    fn tangent_line_identity() {
        let c = FieldElement::ratio(1, 96);
        let terms = vec![
            (c.clone(), lf(1, 4, 1)),
            (c.clone(), lf(-1, 4, -1)),
            (&c * &FieldElement::from(-2), lf(1, 2, -1)),
            (&c * &FieldElement::from(-2), lf(-1, 2, 1)),
        ];
        // y^3 + xyz
        assert_eq!(expand_cubes(&terms), TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn rejects_wrong_target() {
        let terms = vec![(FieldElement::one(), lf(1, 0, 0))];
        let y3 = TernaryCubic::from_ints([0, 0, 0, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(Decomposition::new(terms, y3), Err(Error::ExpansionMismatch));
    }

    #[test]
    fn merging() {
        let terms = vec![
            (FieldElement::one(), lf(1, 1, 0)),
            (FieldElement::one(), lf(2, 2, 0)),
            (FieldElement::from(3), lf(0, 0, 1)),
            (FieldElement::from(-3), lf(0, 0, 1)),
        ];
        let merged = merge_proportional(&terms);
        assert_eq!(merged, vec![(FieldElement::from(9), lf(1, 1, 0))]);
        assert_eq!(expand_cubes(&merged), expand_cubes(&terms));
    }
}
