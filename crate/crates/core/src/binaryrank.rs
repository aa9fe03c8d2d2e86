//! Real Waring rank of binary cubics and explicit decompositions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::roots::binary_roots;
use crate::exact::{ExactMatrix, FieldElement, Solution};
use crate::poly::{BinaryCubic, Decomposition, LinearForm, Term};

/// Real orbit of a nonzero binary cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryOrbit {
    /// Perfect cube.
    C3,
    /// One real root, rank 2.
    GenericPositive,
    /// Three distinct real roots, rank 3.
    GenericNegative,
    /// A double root, rank 3.
    TangentSurface,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryClassification {
    pub rank: usize,
    pub catalecticant_rank: usize,
    pub discriminant: FieldElement,
    pub orbit: BinaryOrbit,
}

/// `(AD - BC)² - 4(BD - C²)(AC - B²)` in the weighted coefficients.
pub fn binary_discriminant(f: &BinaryCubic) -> FieldElement {
    let [a, b, c, d] = f.abcd();
    let p = &(&a * &d) - &(&b * &c);
    let q = &(&b * &d) - &(&c * &c);
    let r = &(&a * &c) - &(&b * &b);
    &(&p * &p) - &(&FieldElement::from(4) * &(&q * &r))
}

/// The Hankel matrix `[[A, B, C], [B, C, D]]`.
pub fn binary_catalecticant(f: &BinaryCubic) -> ExactMatrix {
    let [a, b, c, d] = f.abcd();
    ExactMatrix::from_rows(vec![vec![a, b.clone(), c.clone()], vec![b, c, d]]).unwrap()
}

pub fn binary_real_rank(f: &BinaryCubic) -> Result<BinaryClassification> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let catalecticant_rank = binary_catalecticant(f).rank();
    let discriminant = binary_discriminant(f);
    let (rank, orbit) = if catalecticant_rank == 1 {
        (1, BinaryOrbit::C3)
    } else {
        match discriminant.signum() {
            1 => (2, BinaryOrbit::GenericPositive),
            -1 => (3, BinaryOrbit::GenericNegative),
            _ => (3, BinaryOrbit::TangentSurface),
        }
    };
    Ok(BinaryClassification {
        rank,
        catalecticant_rank,
        discriminant,
        orbit,
    })
}

fn line(a: FieldElement, b: FieldElement) -> Result<LinearForm> {
    LinearForm::new([a, b, FieldElement::zero()])
}

/// A decomposition of minimal real length, with forms in `x, y`.
pub fn binary_decompose(f: &BinaryCubic) -> Result<Decomposition> {
    let class = binary_real_rank(f)?;
    let terms = match class.rank {
        1 => cube_terms(f)?,
        2 => sylvester_terms(f)?,
        _ => rank_three_terms(f)?,
    };
    Decomposition::new(terms, f.to_ternary())
}

fn cube_terms(f: &BinaryCubic) -> Result<Vec<Term>> {
    let [a, b, _, d] = f.abcd();
    if a.is_zero() {
        return Ok(vec![(d, line(0.into(), 1.into())?)]);
    }
    Ok(vec![(a.clone(), line(1.into(), &b / &a)?)])
}

fn sylvester_terms(f: &BinaryCubic) -> Result<Vec<Term>> {
    let kernel = binary_catalecticant(f).kernel();
    let apolar = &kernel[0];
    let (roots, _) = binary_roots(apolar)?;
    if roots.len() < 2 {
        return Err(Error::UnsupportedAlgebraicDegree(format!(
            "apolar quadratic {apolar:?} has no roots in a single quadratic field"
        )));
    }
    let lines: Vec<LinearForm> = roots
        .iter()
        .map(|[s, t]| line(s.clone(), t.clone()).map(|l| l.monic()))
        .collect::<Result<_>>()?;
    let columns: Vec<[FieldElement; 4]> = lines.iter().map(|l| {
        let c = l.cube();
        let c = c.coeffs();
        [c[0].clone(), c[1].clone(), c[3].clone(), c[6].clone()]
    }).collect();
    let rows: Vec<Vec<FieldElement>> = (0..4)
        .map(|k| columns.iter().map(|c| c[k].clone()).collect())
        .collect();
    let weights = match ExactMatrix::from_rows(rows)?.solve(f.coeffs())? {
        Solution::Unique(w) => w,
        Solution::Underdetermined { particular, .. } => particular,
    };
    Ok(weights.into_iter().zip(lines).collect())
}

/// Roots `(s : t)` of `f`, as linear factors `t u - s v`, best first: repeated
/// roots, then rational ones, then fewest nonzero coefficients.
fn preferred_root_lines(f: &BinaryCubic) -> Result<Vec<LinearForm>> {
    let (roots, _) = binary_roots(f.coeffs())?;
    let c = f.coeffs();
    let three = FieldElement::from(3);
    let two = FieldElement::from(2);
    let mut lines = Vec::new();
    for [s, t] in roots {
        let du = &(&(&three * &c[0]) * &(&s * &s)) + &(&(&(&two * &c[1]) * &(&s * &t)) + &(&c[2] * &(&t * &t)));
        let dv = &(&c[1] * &(&s * &s)) + &(&(&(&two * &c[2]) * &(&s * &t)) + &(&(&three * &c[3]) * &(&t * &t)));
        let repeated = du.is_zero() && dv.is_zero();
        let l = line(t, -&s)?.monic();
        lines.push((repeated, l));
    }
    lines.sort_by(|(ra, a), (rb, b)| {
        let support = |l: &LinearForm| l.coeffs().iter().filter(|c| !c.is_zero()).count();
        rb.cmp(ra)
            .then_with(|| b.is_rational().cmp(&a.is_rational()))
            .then_with(|| support(a).cmp(&support(b)))
            .then_with(|| a.canonical_cmp(b))
    });
    Ok(lines.into_iter().map(|(_, l)| l).collect())
}

fn rank_three_terms(f: &BinaryCubic) -> Result<Vec<Term>> {
    let Some(w) = preferred_root_lines(f)?.into_iter().next() else {
        return Err(Error::UnsupportedAlgebraicDegree(format!(
            "{f} has no real root in Q or a single quadratic field"
        )));
    };
    let [w0, w1, _] = w.coeffs().clone();
    // Coordinates W = w, M = m with m the unit form not proportional to w.
    let m = if w0.is_zero() { line(1.into(), 0.into())? } else { line(0.into(), 1.into())? };
    let (u_of, v_of) = if w0.is_zero() {
        // w = w1 v, m = u: u = M, v = W / w1.
        ([FieldElement::zero(), FieldElement::one()], [w1.recip(), FieldElement::zero()])
    } else {
        // m = v: u = (W - w1 M) / w0, v = M.
        ([w0.recip(), -&(&w1 / &w0)], [FieldElement::zero(), FieldElement::one()])
    };
    let g = f.substitute(&[u_of, v_of]);
    let [g_w3, g_w2m, g_wm2, g_m3] = g.coeffs().clone();
    debug_assert!(g_m3.is_zero());
    let (p0, p1, p2) = (g_wm2, g_w2m, g_w3);
    let sixth = FieldElement::ratio(1, 6);
    if p0.is_zero() {
        // f = w² n and a²b = ((b+a)³ + (b-a)³ - 2b³) / 6.
        let n = m.scale(&p1).add(&w.scale(&p2));
        return Ok(vec![
            (sixth.clone(), n.add(&w)),
            (sixth, n.sub(&w)),
            (FieldElement::ratio(-1, 3), n),
        ]);
    }
    // q = p0 m'² + delta w² with m' = m + p1/(2 p0) w.
    let shift = &p1 / &(&FieldElement::from(2) * &p0);
    let mp = m.add(&w.scale(&shift));
    let delta = &p2 - &(&(&p1 * &p1) / &(&FieldElement::from(4) * &p0));
    let g6 = &p0 * &sixth;
    let rest = &delta - &(&p0 * &FieldElement::ratio(1, 3));
    let mut terms = vec![(g6.clone(), w.add(&mp)), (g6, w.sub(&mp))];
    if !rest.is_zero() {
        terms.push((rest, w));
    }
    Ok(terms)
}
