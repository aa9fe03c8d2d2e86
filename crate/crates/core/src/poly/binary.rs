use core::fmt;

use super::form::{write_term, TernaryCubic};
use crate::error::Result;
use crate::exact::{FieldElement, Radicand};

/// Binary cubic `c0 u³ + c1 u²v + c2 uv² + c3 v³`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCubic([FieldElement; 4]);

impl BinaryCubic {
    pub fn new(coeffs: [FieldElement; 4]) -> Result<Self> {
        FieldElement::common_tower(&coeffs)?;
        Ok(BinaryCubic(coeffs))
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        BinaryCubic(c.map(FieldElement::from))
    }

    /// From the weighted view `A u³ + 3B u²v + 3C uv² + D v³`.
    pub fn from_abcd(abcd: [FieldElement; 4]) -> Result<Self> {
        let three = FieldElement::from(3);
        let [a, b, c, d] = abcd;
        Self::new([a, &b * &three, &c * &three, d])
    }

    pub fn coeffs(&self) -> &[FieldElement; 4] {
        &self.0
    }

    /// `(A, B, C, D)` with `B`, `C` the middle coefficients divided by 3.
    pub fn abcd(&self) -> [FieldElement; 4] {
        let third = FieldElement::ratio(1, 3);
        [
            self.0[0].clone(),
            &self.0[1] * &third,
            &self.0[2] * &third,
            self.0[3].clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    pub fn tower(&self) -> Result<Option<Radicand>> {
        FieldElement::common_tower(&self.0)
    }

    pub fn eval(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        let [c0, c1, c2, c3] = &self.0;
        let uu = u * u;
        let vv = v * v;
        &(&(c0 * &(&uu * u)) + &(c1 * &(&uu * v))) + &(&(c2 * &(u * &vv)) + &(c3 * &(&vv * v)))
    }

    /// `f(a u + b v, c u + d v)` for the matrix `[[a, b], [c, d]]`.
    pub fn substitute(&self, m: &[[FieldElement; 2]; 2]) -> BinaryCubic {
        let lu = [m[0][0].clone(), m[0][1].clone()];
        let lv = [m[1][0].clone(), m[1][1].clone()];
        let mul = |p: &[FieldElement], q: &[FieldElement]| {
            let mut out = alloc::vec![FieldElement::zero(); p.len() + q.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
            out
        };
        let u2 = mul(&lu, &lu);
        let v2 = mul(&lv, &lv);
        let parts = [
            mul(&u2, &lu),
            mul(&u2, &lv),
            mul(&lu, &v2),
            mul(&v2, &lv),
        ];
        let mut out: [FieldElement; 4] = Default::default();
        for (c, p) in self.0.iter().zip(&parts) {
            for k in 0..4 {
                out[k] = &out[k] + &(c * &p[k]);
            }
        }
        BinaryCubic(out)
    }

    /// The same polynomial read as a ternary cubic in `x, y` (u = x, v = y).
    pub fn to_ternary(&self) -> TernaryCubic {
        let mut c: [FieldElement; 10] = Default::default();
        c[0] = self.0[0].clone();
        c[1] = self.0[1].clone();
        c[3] = self.0[2].clone();
        c[6] = self.0[3].clone();
        TernaryCubic::new(c).unwrap()
    }

    /// Binary part of a ternary cubic that does not involve `z`.
    pub fn from_ternary_xy(f: &TernaryCubic) -> Option<BinaryCubic> {
        let c = f.coeffs();
        let uses_z = [2, 4, 5, 7, 8, 9].iter().any(|&i| !c[i].is_zero());
        (!uses_z).then(|| BinaryCubic([c[0].clone(), c[1].clone(), c[3].clone(), c[6].clone()]))
    }
}

impl fmt::Display for BinaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MONO: [&str; 4] = ["x^3", "x^2*y", "x*y^2", "y^3"];
        let mut first = true;
        for (c, m) in self.0.iter().zip(MONO) {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, m, first)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_view_round_trip() {
        let f = BinaryCubic::from_ints([2, 3, -6, 1]);
        let abcd = f.abcd();
        assert_eq!(abcd[1], FieldElement::from(1));
        assert_eq!(abcd[2], FieldElement::from(-2));
        assert_eq!(BinaryCubic::from_abcd(abcd).unwrap(), f);
    }

    #[test]
    fn substitution_matches_ternary() {
        let f = BinaryCubic::from_ints([1, 0, -1, 0]);
        let m = [[FieldElement::from(1), FieldElement::from(2)], [FieldElement::from(-1), FieldElement::from(3)]];
        let g = f.substitute(&m);
        let u = FieldElement::ratio(2, 7);
        let v = FieldElement::from(-3);
        let mu = &(&m[0][0] * &u) + &(&m[0][1] * &v);
        let mv = &(&m[1][0] * &u) + &(&m[1][1] * &v);
        assert_eq!(g.eval(&u, &v), f.eval(&mu, &mv));
    }
}
