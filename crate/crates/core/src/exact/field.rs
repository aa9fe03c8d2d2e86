use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive};

use super::rational::Rational;
use super::squarefree::square_free_split;
use crate::error::{Error, Result};

/// Square-free integer `d > 1` tagging the real quadratic field Q(sqrt(d)).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radicand(BigUint);

impl Radicand {
    pub fn new(d: u64) -> Result<Self> {
        Self::from_big(BigUint::from(d))
    }

    pub fn from_big(d: BigUint) -> Result<Self> {
        if d < BigUint::from(2u32) {
            return Err(Error::InvalidRadicand(d.to_string()));
        }
        match square_free_split(&d) {
            Some((sq, free)) if sq.is_one() && !free.is_one() => Ok(Radicand(d)),
            _ => Err(Error::InvalidRadicand(d.to_string())),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    fn as_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from_biguint(Sign::Plus, self.0.clone()))
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Common tower of two optional radicands, or a mismatch error.
pub fn join_towers(a: Option<&Radicand>, b: Option<&Radicand>) -> Result<Option<Radicand>> {
    match (a, b) {
        (None, None) => Ok(None),
        (Some(d), None) | (None, Some(d)) => Ok(Some(d.clone())),
        (Some(d), Some(e)) if d == e => Ok(Some(d.clone())),
        (Some(d), Some(e)) => Err(Error::FieldMismatch {
            left: d.to_string(),
            right: e.to_string(),
        }),
    }
}

/// Exact element `a + b*sqrt(d)` of Q or of a single real quadratic field.
///
/// The representation is canonical: `b == 0` if and only if the tower tag is
/// absent, so derived equality is field equality. Arithmetic operators panic
/// when two different radicands meet; use [`join_towers`] or the `try_*`
/// methods where inputs come from outside.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
    d: Option<Radicand>,
}

impl FieldElement {
    pub fn new(a: Rational, b: Rational, d: Radicand) -> Self {
        if b.is_zero() {
            FieldElement::rational(a)
        } else {
            FieldElement { a, b, d: Some(d) }
        }
    }

    pub fn rational(a: Rational) -> Self {
        FieldElement {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    pub fn zero() -> Self {
        FieldElement::rational(Rational::zero())
    }

    pub fn one() -> Self {
        FieldElement::rational(Rational::one())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FieldElement::rational(Rational::new(n, d))
    }

    /// `sqrt(d)` for a square-free radicand.
    pub fn sqrt_radicand(d: &Radicand) -> Self {
        FieldElement::new(Rational::zero(), Rational::one(), d.clone())
    }

    /// Exact square root of a non-negative rational, landing in Q or in
    /// Q(sqrt(d)) for the square-free part `d`. `Ok(None)` for negatives.
    pub fn sqrt_rational(r: &Rational) -> Result<Option<Self>> {
        match r.signum() {
            -1 => return Ok(None),
            0 => return Ok(Some(FieldElement::zero())),
            _ => {}
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let pq = (r.numer() * r.denom()).to_biguint().expect("positive");
        let (square, free) = square_free_split(&pq).ok_or_else(|| {
            Error::UnsupportedAlgebraicDegree(alloc::format!(
                "cannot certify the square-free part of {pq}"
            ))
        })?;
        let coeff = Rational::new(
            BigInt::from_biguint(Sign::Plus, square),
            r.denom().clone(),
        );
        if free.is_one() {
            Ok(Some(FieldElement::rational(coeff)))
        } else {
            Ok(Some(FieldElement::new(
                Rational::zero(),
                coeff,
                Radicand(free),
            )))
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> Option<&Radicand> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_none()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.a.is_one()
    }

    /// `a - b*sqrt(d)`.
    pub fn conj(&self) -> Self {
        FieldElement {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        match &self.d {
            None => &self.a * &self.a,
            Some(d) => &self.a * &self.a - d.as_rational() * &self.b * &self.b,
        }
    }

    /// Exact sign of the real number `a + b*sqrt(d)`.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        let d = self.d.as_ref().expect("b != 0 implies a radicand").as_rational();
        let a2 = &self.a * &self.a;
        let db2 = d * &self.b * &self.b;
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm();
        let c = self.conj();
        FieldElement {
            a: &c.a / &n,
            b: &c.b / &n,
            d: c.d,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FieldElement::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        join_towers(self.radicand(), rhs.radicand())?;
        Ok(self + rhs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        join_towers(self.radicand(), rhs.radicand())?;
        Ok(self * rhs)
    }

    /// Radicand shared by every element, or a mismatch error.
    pub fn common_tower<'a>(elems: impl IntoIterator<Item = &'a FieldElement>) -> Result<Option<Radicand>> {
        let mut acc: Option<Radicand> = None;
        for e in elems {
            acc = join_towers(acc.as_ref(), e.radicand())?;
        }
        Ok(acc)
    }

    fn tower_with(&self, rhs: &Self) -> Option<Radicand> {
        match join_towers(self.radicand(), rhs.radicand()) {
            Ok(d) => d,
            Err(e) => panic!("{e}"),
        }
    }

    fn build(a: Rational, b: Rational, d: Option<Radicand>) -> Self {
        match d {
            Some(d) => FieldElement::new(a, b, d),
            None => FieldElement::rational(a),
        }
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        FieldElement::rational(r)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::rational(Rational::from(n))
    }
}

impl From<i32> for FieldElement {
    fn from(n: i32) -> Self {
        FieldElement::rational(Rational::from(n))
    }
}

impl Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let d = self.tower_with(rhs);
        FieldElement::build(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let d = self.tower_with(rhs);
        FieldElement::build(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let d = self.tower_with(rhs);
        match &d {
            None => FieldElement::rational(&self.a * &rhs.a),
            Some(rad) => {
                let a = &self.a * &rhs.a + rad.as_rational() * &self.b * &rhs.b;
                let b = &self.a * &rhs.b + &self.b * &rhs.a;
                FieldElement::build(a, b, d)
            }
        }
    }
}

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        if let (Some(a), Some(b)) = (self.as_rational(), rhs.as_rational()) {
            return FieldElement::rational(a / b);
        }
        self * &rhs.recip()
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                $trait::$method(self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    /// Real-number order. Panics across different towers.
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for FieldElement {
    /// `p/q`, `p/q+r/s*sqrt(d)` or `r/s*sqrt(d)`; unit coefficients on the
    /// radical are written as `sqrt(d)` / `-sqrt(d)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = &self.d else {
            return write!(f, "{}", self.a);
        };
        let neg = self.b.signum() < 0;
        let mag = self.b.abs();
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            f.write_str(if neg { "-" } else { "+" })?;
        } else if neg {
            f.write_str("-")?;
        }
        if mag.is_one() {
            write!(f, "sqrt({d})")
        } else {
            write!(f, "{mag}*sqrt({d})")
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
