use alloc::vec;
use alloc::vec::Vec;

use super::{conic_singular_point, gram_matrix, ConicSingularity, PolarConic};
use crate::exact::roots::{binary_roots, real_roots};
use crate::exact::{ExactMatrix, FieldElement, Inertia, Solution, UPoly};
use crate::poly::{monomial_index, monomials, LinearForm, TernaryCubic, TernaryForm};

/// Quotient `F / l` when `l` divides `F` exactly.
pub fn divide_by_line(f: &TernaryForm, l: &LinearForm) -> Option<TernaryForm> {
    if l.is_zero() || f.degree() == 0 {
        return None;
    }
    let d = f.degree();
    let qmons = monomials(d - 1);
    let mut a = ExactMatrix::zeros(f.coeffs().len(), qmons.len());
    for (col, e) in qmons.iter().enumerate() {
        for (v, c) in l.coeffs().iter().enumerate() {
            let mut g = *e;
            g[v] += 1;
            a[(monomial_index(g[0], g[1], g[2]), col)] = c.clone();
        }
    }
    match a.solve(f.coeffs()).ok()? {
        Solution::Unique(q) => TernaryForm::new(d - 1, q).ok(),
        Solution::Underdetermined { .. } => None,
    }
}

// Unit lower-triangular changes of coordinates whose planes `z = 0` map to
// four distinct lines, so at least one is not a component of a cubic.
fn chart(k: usize) -> ExactMatrix {
    let third: [[i64; 3]; 4] = [[0, 0, 1], [1, 1, 1], [1, 2, 1], [2, -1, 1]];
    ExactMatrix::from_ints(&[[1, 0, 0], [0, 1, 0], third[k]])
}

fn restricted_coeffs(g: &TernaryCubic, m: &ExactMatrix) -> [FieldElement; 4] {
    let h = g.substitute_linear(m);
    let c = h.coeffs();
    [c[0].clone(), c[1].clone(), c[3].clone(), c[6].clone()]
}

/// Lines `a x + b y + c z` dividing `g` for fixed `(a, b) != (0, 0)`.
fn lines_with_xy_part(g: &TernaryCubic, a: &FieldElement, b: &FieldElement) -> Vec<LinearForm> {
    // Restrict g to the line for c = 0..3; each coefficient of the restriction
    // is a polynomial of degree at most 3 in c.
    let samples: Vec<[FieldElement; 4]> = (0..4i64)
        .map(|c| {
            let c = FieldElement::from(c);
            let m = if !b.is_zero() {
                let ib = b.recip();
                ExactMatrix::from_rows(vec![
                    vec![1.into(), 0.into(), 0.into()],
                    vec![-&(a * &ib), -&(&c * &ib), 0.into()],
                    vec![0.into(), 1.into(), 0.into()],
                ])
            } else {
                ExactMatrix::from_rows(vec![
                    vec![0.into(), -&(&c / a), 0.into()],
                    vec![1.into(), 0.into(), 0.into()],
                    vec![0.into(), 1.into(), 0.into()],
                ])
            }
            .unwrap();
            restricted_coeffs(g, &m)
        })
        .collect();
    let mut common = UPoly::zero();
    for k in 0..4 {
        let pts: Vec<(FieldElement, FieldElement)> = (0..4)
            .map(|c| (FieldElement::from(c as i64), samples[c][k].clone()))
            .collect();
        common = common.gcd(&UPoly::interpolate(&pts));
    }
    if common.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let Ok(roots) = real_roots(&common) else {
        return Vec::new();
    };
    roots
        .roots
        .into_iter()
        .filter_map(|c| LinearForm::new([a.clone(), b.clone(), c]).ok())
        .filter(|l| divide_by_line(g.form(), l).is_some())
        .collect()
}

/// All distinct lines (monic representatives) dividing `F` whose
/// coefficients lie in Q or in a single real quadratic field; rational
/// lines first, then by [`LinearForm::canonical_cmp`].
pub fn linear_factors(f: &TernaryCubic) -> Vec<LinearForm> {
    if f.is_zero() {
        return Vec::new();
    }
    let Some(m) = (0..4).map(chart).find(|m| {
        let g = f.substitute_linear(m);
        restricted_coeffs(&g, &ExactMatrix::identity(3)).iter().any(|c| !c.is_zero())
    }) else {
        return Vec::new();
    };
    let g = f.substitute_linear(&m);
    let Ok((points, _)) = binary_roots(&restricted_coeffs(&g, &ExactMatrix::identity(3))) else {
        return Vec::new();
    };
    let back = m.inverse().expect("charts are unimodular");
    let mut out: Vec<LinearForm> = Vec::new();
    for [p, q] in points {
        for l in lines_with_xy_part(&g, &q, &-&p) {
            let l = l.substitute_linear(&back).monic();
            if !out.contains(&l) {
                out.push(l);
            }
        }
    }
    out.sort_by(|a, b| {
        b.is_rational()
            .cmp(&a.is_rational())
            .then_with(|| a.canonical_cmp(b))
    });
    out
}

/// A line `l` and conic `q` with `F = l q`, preferring rational lines and
/// then the smallest line in the canonical order.
pub fn factor_out_line(f: &TernaryCubic) -> Option<(LinearForm, TernaryForm)> {
    let l = linear_factors(f).into_iter().next()?;
    let q = divide_by_line(f.form(), &l)?;
    Some((l, q))
}

/// Kind of line pair of a rank-two conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinePair {
    Real,
    Imaginary,
    /// Rank one: a repeated line.
    Double,
}

/// How a line sits relative to a conic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineConicPosition {
    External,
    Secant,
    Tangent,
    ConicImaginary,
    Degenerate {
        singular: Option<ConicSingularity>,
        pair: LinePair,
        inertia: Inertia,
    },
}

/// Position of `{l = 0}` relative to `{q = 0}` for a quadratic form `q`.
pub fn line_conic_position(l: &LinearForm, q: &TernaryForm) -> LineConicPosition {
    let g = gram_matrix(q);
    let inertia = g.signature();
    if inertia.rank() < 3 {
        let pair = match inertia.rank() {
            2 if inertia.positive == 1 => LinePair::Real,
            2 => LinePair::Imaginary,
            _ => LinePair::Double,
        };
        return LineConicPosition::Degenerate {
            singular: conic_singular_point(&PolarConic { gram: g }).ok(),
            pair,
            inertia,
        };
    }
    if inertia.is_definite() {
        return LineConicPosition::ConicImaginary;
    }
    let [p1, p2] = l.parametrization().expect("zero line");
    let b = |u: &[FieldElement; 3], v: &[FieldElement; 3]| -> FieldElement {
        let gv = g.mul_vec(v);
        (0..3).fold(FieldElement::zero(), |acc, i| &acc + &(&u[i] * &gv[i]))
    };
    let b12 = b(&p1, &p2);
    let disc = &(&b12 * &b12) - &(&b(&p1, &p1) * &b(&p2, &p2));
    match disc.signum() {
        -1 => LineConicPosition::External,
        1 => LineConicPosition::Secant,
        _ => LineConicPosition::Tangent,
    }
}
