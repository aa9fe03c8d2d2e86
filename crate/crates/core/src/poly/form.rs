use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, FieldElement, Radicand};

/// Number of monomials of degree `d` in three variables.
pub const fn monomial_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Position of `x^a y^b z^c` in the degree-`a+b+c` basis.
///
/// Monomials are ordered by descending power of `x`, then of `y`; for cubics
/// this is x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³.
pub const fn monomial_index(a: usize, b: usize, c: usize) -> usize {
    let d = a + b + c;
    (d - a) * (d - a + 1) / 2 + (d - a - b)
}

/// Exponent triples of degree `d` in basis order.
pub fn monomials(d: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Homogeneous polynomial of any degree in `x, y, z`, stored densely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: usize,
    coeffs: Vec<FieldElement>,
}

impl TernaryForm {
    pub fn zero(degree: usize) -> Self {
        TernaryForm {
            degree,
            coeffs: vec![FieldElement::zero(); monomial_count(degree)],
        }
    }

    pub fn new(degree: usize, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.len() != monomial_count(degree) {
            return Err(Error::Dimension("coefficient count does not match degree"));
        }
        FieldElement::common_tower(&coeffs)?;
        Ok(TernaryForm { degree, coeffs })
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(degree, coeffs.iter().map(|&c| FieldElement::from(c)).collect())
    }

    /// `c * x^a y^b z^c`.
    pub fn monomial(coeff: FieldElement, exps: [usize; 3]) -> Self {
        let mut f = Self::zero(exps.iter().sum());
        f.coeffs[monomial_index(exps[0], exps[1], exps[2])] = coeff;
        f
    }

    /// The variable `x`, `y` or `z` for `var` 0, 1, 2.
    pub fn variable(var: usize) -> Self {
        let mut e = [0; 3];
        e[var] = 1;
        Self::monomial(FieldElement::one(), e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, exps: [usize; 3]) -> &FieldElement {
        debug_assert_eq!(exps.iter().sum::<usize>(), self.degree);
        &self.coeffs[monomial_index(exps[0], exps[1], exps[2])]
    }

    pub fn set_coeff(&mut self, exps: [usize; 3], value: FieldElement) {
        self.coeffs[monomial_index(exps[0], exps[1], exps[2])] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn tower(&self) -> Result<Option<Radicand>> {
        FieldElement::common_tower(&self.coeffs)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_rational)
    }

    pub fn add(&self, rhs: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degree");
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> TernaryForm {
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero(self.degree + rhs.degree);
        let rm = monomials(rhs.degree);
        for (e, a) in monomials(self.degree).iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (f, b) in rm.iter().zip(&rhs.coeffs) {
                if b.is_zero() {
                    continue;
                }
                let i = monomial_index(e[0] + f[0], e[1] + f[1], e[2] + f[2]);
                out.coeffs[i] = &out.coeffs[i] + &(a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> TernaryForm {
        let mut acc = TernaryForm::monomial(FieldElement::one(), [0, 0, 0]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var` (0, 1, 2).
    pub fn partial(&self, var: usize) -> TernaryForm {
        assert!(var < 3, "variable index out of range");
        if self.degree == 0 {
            return TernaryForm::zero(0);
        }
        let mut out = TernaryForm::zero(self.degree - 1);
        for (e, c) in monomials(self.degree).iter().zip(&self.coeffs) {
            if e[var] == 0 || c.is_zero() {
                continue;
            }
            let mut f = *e;
            f[var] -= 1;
            out.set_coeff(f, c * &FieldElement::from(e[var] as i64));
        }
        out
    }

    pub fn eval(&self, p: &[FieldElement; 3]) -> FieldElement {
        let mut powers: [Vec<FieldElement>; 3] = Default::default();
        for (v, pw) in powers.iter_mut().enumerate() {
            pw.push(FieldElement::one());
            for k in 0..self.degree {
                let next = &pw[k] * &p[v];
                pw.push(next);
            }
        }
        monomials(self.degree)
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(FieldElement::zero(), |acc, (e, c)| {
                &acc + &(&(c * &powers[0][e[0]]) * &(&powers[1][e[1]] * &powers[2][e[2]]))
            })
    }

    /// `v ↦ F(M v)`: each variable is replaced by the matching row of `M`
    /// read as a linear form.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> TernaryForm {
        assert!(m.rows() == 3 && m.cols() == 3, "substitution matrix must be 3x3");
        let rows: Vec<TernaryForm> = (0..3)
            .map(|i| TernaryForm {
                degree: 1,
                coeffs: m.row(i).to_vec(),
            })
            .collect();
        let powers: Vec<Vec<TernaryForm>> = rows
            .iter()
            .map(|r| {
                let mut pw = vec![TernaryForm::monomial(FieldElement::one(), [0, 0, 0])];
                for k in 0..self.degree {
                    let next = pw[k].mul(r);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = TernaryForm::zero(self.degree);
        for (e, c) in monomials(self.degree).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let term = powers[0][e[0]].mul(&powers[1][e[1]]).mul(&powers[2][e[2]]);
            out = out.add(&term.scale(c));
        }
        out
    }

    /// The scalar `s` with `self = s * other`, if any. Two zero forms give 1.
    pub fn proportional(&self, other: &TernaryForm) -> Option<FieldElement> {
        if self.degree != other.degree {
            return None;
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some(FieldElement::one()),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        let pivot = other.coeffs.iter().position(|c| !c.is_zero())?;
        let s = &self.coeffs[pivot] / &other.coeffs[pivot];
        if other.scale(&s) == *self {
            Some(s)
        } else {
            None
        }
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["x", "y", "z"];
        let mut first = true;
        for (e, c) in monomials(self.degree).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut mono = alloc::string::String::new();
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(VARS[v]);
                if k > 1 {
                    mono.push('^');
                    mono.push_str(&alloc::format!("{k}"));
                }
            }
            write_term(f, c, &mono, first)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `± c*mono` in sum position, folding unit coefficients and signs.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &FieldElement,
    mono: &str,
    first: bool,
) -> fmt::Result {
    let mixed = !c.is_rational() && !c.rational_part().is_zero();
    let negative = !mixed && c.signum() < 0;
    let mag = if negative { -c } else { c.clone() };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if mono.is_empty() {
        return if mixed { write!(f, "({mag})") } else { write!(f, "{mag}") };
    }
    if mag.is_one() {
        f.write_str(mono)
    } else if mixed {
        write!(f, "({mag})*{mono}")
    } else {
        write!(f, "{mag}*{mono}")
    }
}

/// A ternary form of degree exactly three.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryCubic(TernaryForm);

impl TernaryCubic {
    pub fn new(coeffs: [FieldElement; 10]) -> Result<Self> {
        TernaryForm::new(3, coeffs.into()).map(TernaryCubic)
    }

    pub fn from_ints(coeffs: [i64; 10]) -> Self {
        TernaryCubic(TernaryForm::from_ints(3, &coeffs).unwrap())
    }

    pub fn zero() -> Self {
        TernaryCubic(TernaryForm::zero(3))
    }

    pub fn from_form(f: TernaryForm) -> Result<Self> {
        if f.degree() != 3 {
            return Err(Error::WrongDegree(3));
        }
        Ok(TernaryCubic(f))
    }

    pub fn form(&self) -> &TernaryForm {
        &self.0
    }

    pub fn into_form(self) -> TernaryForm {
        self.0
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        self.0.coeffs()
    }

    pub fn coeff(&self, exps: [usize; 3]) -> &FieldElement {
        self.0.coeff(exps)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn tower(&self) -> Result<Option<Radicand>> {
        self.0.tower()
    }

    pub fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    pub fn add(&self, rhs: &TernaryCubic) -> TernaryCubic {
        TernaryCubic(self.0.add(&rhs.0))
    }

    pub fn sub(&self, rhs: &TernaryCubic) -> TernaryCubic {
        TernaryCubic(self.0.sub(&rhs.0))
    }

    pub fn scale(&self, c: &FieldElement) -> TernaryCubic {
        TernaryCubic(self.0.scale(c))
    }

    /// Quadratic form `∂F/∂x_var`.
    pub fn partial(&self, var: usize) -> TernaryForm {
        self.0.partial(var)
    }

    pub fn eval(&self, p: &[FieldElement; 3]) -> FieldElement {
        self.0.eval(p)
    }

    pub fn substitute_linear(&self, m: &ExactMatrix) -> TernaryCubic {
        TernaryCubic(self.0.substitute_linear(m))
    }

    pub fn proportional(&self, other: &TernaryCubic) -> Option<FieldElement> {
        self.0.proportional(&other.0)
    }
}

impl fmt::Display for TernaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for TernaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
