//! Hessian, polar conics, catalecticants, linear factors and the Aronhold
//! invariants of ternary cubics.

mod aronhold;
mod factor;

use alloc::vec::Vec;

pub use aronhold::{aronhold_st, InvariantPair};
pub use factor::{
    divide_by_line, factor_out_line, line_conic_position, linear_factors, LineConicPosition,
    LinePair,
};

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, FieldElement};
use crate::poly::{monomials, LinearForm, ProjectivePoint, TernaryCubic, TernaryForm};

/// Determinant of the matrix of second partial derivatives.
pub fn hessian(f: &TernaryCubic) -> TernaryCubic {
    let first: Vec<TernaryForm> = (0..3).map(|i| f.partial(i)).collect();
    let h: Vec<Vec<TernaryForm>> = first
        .iter()
        .map(|d| (0..3).map(|j| d.partial(j)).collect())
        .collect();
    let minor = |a: usize, b: usize, c: usize, d: usize| h[1][a].mul(&h[2][b]).sub(&h[1][c].mul(&h[2][d]));
    let det = h[0][0]
        .mul(&minor(1, 2, 2, 1))
        .sub(&h[0][1].mul(&minor(0, 2, 2, 0)))
        .add(&h[0][2].mul(&minor(0, 1, 1, 0)));
    TernaryCubic::from_form(det).unwrap()
}

/// Symmetric Gram matrix of a quadratic form; off-diagonal entries are half
/// the mixed coefficients.
pub fn gram_matrix(q: &TernaryForm) -> ExactMatrix {
    assert_eq!(q.degree(), 2, "Gram matrix of a non-quadratic form");
    let half = FieldElement::ratio(1, 2);
    let mut g = ExactMatrix::zeros(3, 3);
    for e in monomials(2) {
        let c = q.coeff(e).clone();
        let vars: Vec<usize> = (0..3).flat_map(|v| core::iter::repeat_n(v, e[v])).collect();
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            g[(i, i)] = c;
        } else {
            let h = &c * &half;
            g[(i, j)] = h.clone();
            g[(j, i)] = h;
        }
    }
    g
}

/// Quadratic form `vᵀ G v` of a symmetric matrix.
pub fn quadratic_from_gram(g: &ExactMatrix) -> TernaryForm {
    let two = FieldElement::from(2);
    let mut q = TernaryForm::zero(2);
    for i in 0..3 {
        for j in i..3 {
            let mut e = [0; 3];
            e[i] += 1;
            e[j] += 1;
            let c = if i == j { g[(i, i)].clone() } else { &g[(i, j)] * &two };
            q.set_coeff(e, c);
        }
    }
    q
}

/// The polar conic `P_Y F = Σ Yᵢ ∂F/∂xᵢ`, kept as its Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolarConic {
    pub gram: ExactMatrix,
}

impl PolarConic {
    pub fn from_quadratic(q: &TernaryForm) -> Self {
        PolarConic { gram: gram_matrix(q) }
    }

    pub fn quadratic(&self) -> TernaryForm {
        quadratic_from_gram(&self.gram)
    }
}

pub fn polar_quadratic(f: &TernaryCubic, y: &[FieldElement; 3]) -> TernaryForm {
    (0..3).fold(TernaryForm::zero(2), |acc, i| acc.add(&f.partial(i).scale(&y[i])))
}

pub fn polar_conic(f: &TernaryCubic, y: &[FieldElement; 3]) -> PolarConic {
    PolarConic::from_quadratic(&polar_quadratic(f, y))
}

/// Singular locus of a degenerate conic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConicSingularity {
    /// Rank two: the vertex of the line pair.
    Point(ProjectivePoint),
    /// Rank one: every point of this line is singular.
    DoubleLine(LinearForm),
}

pub fn conic_singular_point(c: &PolarConic) -> Result<ConicSingularity> {
    if c.gram.is_zero() {
        return Err(Error::ZeroConic);
    }
    let kernel = c.gram.kernel();
    match kernel.len() {
        0 => Err(Error::NonsingularConic),
        1 => Ok(ConicSingularity::Point(ProjectivePoint::new(
            kernel[0].clone().try_into().unwrap(),
        )?)),
        _ => {
            let p = ProjectivePoint::new(kernel[0].clone().try_into().unwrap())?;
            let q = ProjectivePoint::new(kernel[1].clone().try_into().unwrap())?;
            Ok(ConicSingularity::DoubleLine(p.join(&q)?.monic()))
        }
    }
}

/// Matrix of the contraction `V -> S²V*`: row `i` holds the coefficients of
/// `∂F/∂xᵢ` on x², xy, xz, y², yz, z². Only `k = 1` is meaningful for cubics
/// up to transposition.
pub fn catalecticant(f: &TernaryCubic, k: usize) -> Result<ExactMatrix> {
    if k != 1 {
        return Err(Error::UnsupportedK(k));
    }
    let rows: Vec<Vec<FieldElement>> = (0..3).map(|i| f.partial(i).coeffs().to_vec()).collect();
    ExactMatrix::from_rows(rows)
}

/// Number of variables `F` genuinely depends on after a linear change.
pub fn essential_variables(f: &TernaryCubic) -> usize {
    catalecticant(f, 1).unwrap().rank()
}
