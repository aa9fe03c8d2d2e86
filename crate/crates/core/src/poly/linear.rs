use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::form::{write_term, TernaryCubic, TernaryForm};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, FieldElement, Radicand, Rational};

fn cross(u: &[FieldElement; 3], v: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot(u: &[FieldElement; 3], v: &[FieldElement; 3]) -> FieldElement {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

fn first_nonzero(v: &[FieldElement; 3]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

fn scaled_to_first_one(v: &[FieldElement; 3]) -> [FieldElement; 3] {
    match first_nonzero(v) {
        None => v.clone(),
        Some(i) => {
            let inv = v[i].recip();
            [&v[0] * &inv, &v[1] * &inv, &v[2] * &inv]
        }
    }
}

fn proportional3(u: &[FieldElement; 3], v: &[FieldElement; 3]) -> Option<FieldElement> {
    let i = first_nonzero(v)?;
    let s = &u[i] / &v[i];
    if s.is_zero() {
        return None;
    }
    (0..3).all(|k| u[k] == &s * &v[k]).then_some(s)
}

/// Real order inside one tower; elements of different towers are ordered
/// by radicand (rationals first).
pub(crate) fn cmp_across_towers(a: &FieldElement, b: &FieldElement) -> Ordering {
    match (a.radicand(), b.radicand()) {
        (Some(d), Some(e)) if d != e => d.value().cmp(e.value()),
        _ => a.cmp(b),
    }
}

/// Linear form `a x + b y + c z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm([FieldElement; 3]);

impl LinearForm {
    pub fn new(coeffs: [FieldElement; 3]) -> Result<Self> {
        FieldElement::common_tower(&coeffs)?;
        Ok(LinearForm(coeffs))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        LinearForm([a.into(), b.into(), c.into()])
    }

    pub fn variable(var: usize) -> Self {
        let mut c = [0, 0, 0];
        c[var] = 1;
        Self::from_ints(c[0], c[1], c[2])
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    pub fn tower(&self) -> Result<Option<Radicand>> {
        FieldElement::common_tower(&self.0)
    }

    pub fn is_rational(&self) -> bool {
        self.0.iter().all(FieldElement::is_rational)
    }

    pub fn to_form(&self) -> TernaryForm {
        TernaryForm::new(1, self.0.to_vec()).unwrap()
    }

    pub fn eval(&self, p: &[FieldElement; 3]) -> FieldElement {
        dot(&self.0, p)
    }

    pub fn scale(&self, s: &FieldElement) -> LinearForm {
        LinearForm([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    pub fn add(&self, rhs: &LinearForm) -> LinearForm {
        LinearForm([&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1], &self.0[2] + &rhs.0[2]])
    }

    pub fn sub(&self, rhs: &LinearForm) -> LinearForm {
        LinearForm([&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1], &self.0[2] - &rhs.0[2]])
    }

    /// `l^3`, expanded by the multinomial theorem.
    pub fn cube(&self) -> TernaryCubic {
        let [a, b, c] = &self.0;
        let pa = [FieldElement::one(), a.clone(), a * a, &(a * a) * a];
        let pb = [FieldElement::one(), b.clone(), b * b, &(b * b) * b];
        let pc = [FieldElement::one(), c.clone(), c * c, &(c * c) * c];
        const FACT: [i64; 4] = [1, 1, 2, 6];
        let mut out = TernaryForm::zero(3);
        for e in super::form::monomials(3) {
            let m = FieldElement::from(6 / (FACT[e[0]] * FACT[e[1]] * FACT[e[2]]));
            out.set_coeff(e, &(&m * &pa[e[0]]) * &(&pb[e[1]] * &pc[e[2]]));
        }
        TernaryCubic::from_form(out).unwrap()
    }

    /// The form `l ∘ M`, i.e. coefficient vector `Mᵀ l`.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> LinearForm {
        LinearForm(m.transpose().mul_vec(&self.0).try_into().unwrap())
    }

    /// Scalar `s` with `self = s * other`.
    pub fn proportional(&self, other: &LinearForm) -> Option<FieldElement> {
        proportional3(&self.0, &other.0)
    }

    /// Representative whose first nonzero coefficient is 1.
    pub fn monic(&self) -> LinearForm {
        LinearForm(scaled_to_first_one(&self.0))
    }

    /// Display representative: a primitive integer vector whose entry of
    /// largest absolute value is positive when the form is rational, the
    /// monic representative otherwise.
    pub fn normalized(&self) -> LinearForm {
        if self.is_zero() {
            return self.clone();
        }
        if !self.is_rational() {
            return self.monic();
        }
        let rats: Vec<&Rational> = self.0.iter().map(|c| c.as_rational().unwrap()).collect();
        let l = Rational::lcm_denominators(rats.iter().copied());
        let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&l / r.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        let mut big = 0;
        for k in 1..3 {
            if ints[k].abs() > ints[big].abs() {
                big = k;
            }
        }
        if ints[big].is_negative() {
            for c in ints.iter_mut() {
                *c = -c.clone();
            }
        }
        let c: Vec<FieldElement> = ints
            .into_iter()
            .map(|n| FieldElement::rational(Rational::from(n)))
            .collect();
        LinearForm(c.try_into().unwrap())
    }

    /// Basis `(p1, p2)` of the points of `{l = 0}`. With `i` the first nonzero
    /// coordinate and `j < k` the others, `p1 = l_i e_j - l_j e_i` and
    /// `p2 = l_i e_k - l_k e_i`.
    pub fn parametrization(&self) -> Option<[[FieldElement; 3]; 2]> {
        let i = first_nonzero(&self.0)?;
        let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let basis = |k: usize| {
            let mut p: [FieldElement; 3] = Default::default();
            p[k] = self.0[i].clone();
            p[i] = -&self.0[k];
            p
        };
        Some([basis(others[0]), basis(others[1])])
    }

    /// Intersection point of two distinct lines.
    pub fn meet(&self, other: &LinearForm) -> Result<ProjectivePoint> {
        ProjectivePoint::new(cross(&self.0, &other.0))
    }

    /// Total order on monic representatives used for deterministic choices:
    /// index of the leading coordinate first, then the remaining coordinates.
    pub fn canonical_cmp(&self, other: &LinearForm) -> Ordering {
        let a = self.monic();
        let b = other.monic();
        let ia = first_nonzero(&a.0);
        let ib = first_nonzero(&b.0);
        ia.cmp(&ib).then_with(|| {
            for k in 0..3 {
                match cmp_across_towers(&a.0[k], &b.0[k]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["x", "y", "z"];
        let mut first = true;
        for (c, v) in self.0.iter().zip(VARS) {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, v, first)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Point of the real projective plane, stored with first nonzero coordinate 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint([FieldElement; 3]);

impl ProjectivePoint {
    pub fn new(coords: [FieldElement; 3]) -> Result<Self> {
        if coords.iter().all(FieldElement::is_zero) {
            return Err(Error::ZeroVector);
        }
        FieldElement::common_tower(&coords)?;
        Ok(ProjectivePoint(scaled_to_first_one(&coords)))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new([a.into(), b.into(), c.into()])
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.0
    }

    /// Line through two distinct points.
    pub fn join(&self, other: &ProjectivePoint) -> Result<LinearForm> {
        let l = cross(&self.0, &other.0);
        if l.iter().all(FieldElement::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(LinearForm(l))
    }

    pub fn lies_on(&self, l: &LinearForm) -> bool {
        l.eval(&self.0).is_zero()
    }

    /// Image under `v ↦ M v`.
    pub fn transform(&self, m: &ExactMatrix) -> Result<ProjectivePoint> {
        ProjectivePoint::new(m.mul_vec(&self.0).try_into().unwrap())
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
