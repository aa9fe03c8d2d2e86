//! Four-cube decompositions from a line meeting the Hessian in three points.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::binaryrank::binary_discriminant;
use crate::covariants::{conic_singular_point, hessian, polar_conic, ConicSingularity};
use crate::error::{Error, Result};
use crate::exact::roots::binary_roots;
use crate::exact::{ExactMatrix, FieldElement, Solution};
use crate::poly::{BinaryCubic, Decomposition, LinearForm, ProjectivePoint, TernaryCubic};

/// Every intermediate object of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DePaolisTrace {
    pub l0: LinearForm,
    pub points: [ProjectivePoint; 3],
    pub singular_points: [ProjectivePoint; 3],
    pub lines: [LinearForm; 3],
    pub coefficients: [FieldElement; 4],
}

/// `F(s p1 + t p2)` for the parametrization of `{l0 = 0}` given by
/// [`LinearForm::parametrization`].
pub fn restrict_to_line(f: &TernaryCubic, l0: &LinearForm) -> Result<BinaryCubic> {
    let [p1, p2] = l0.parametrization().ok_or(Error::ZeroVector)?;
    let m = ExactMatrix::from_rows(
        (0..3)
            .map(|i| vec![p1[i].clone(), p2[i].clone(), FieldElement::zero()])
            .collect(),
    )?;
    let g = f.substitute_linear(&m);
    let c = g.coeffs();
    BinaryCubic::new([c[0].clone(), c[1].clone(), c[3].clone(), c[6].clone()])
}

/// Points `P1, P2, P3` of `l0 ∩ H(F)`. When `l0` lies on the Hessian every
/// point of it qualifies, and the flexes `l0 ∩ F` are used.
fn line_points(f: &TernaryCubic, l0: &LinearForm) -> Result<[ProjectivePoint; 3]> {
    let mut h = restrict_to_line(&hessian(f), l0)?;
    if h.is_zero() {
        h = restrict_to_line(f, l0)?;
        if h.is_zero() {
            return Err(Error::IndistinctIntersection(format!(
                "{l0} is a component of both F and its Hessian"
            )));
        }
    }
    let (roots, count) = binary_roots(h.coeffs())?;
    if roots.len() < 3 {
        let sign = match binary_discriminant(&h).signum() {
            1 => "positive",
            -1 => "negative",
            _ => "zero",
        };
        return Err(Error::IndistinctIntersection(format!(
            "{count} distinct real intersection points, {} representable; discriminant of the restricted Hessian is {sign}",
            roots.len()
        )));
    }
    let [p1, p2] = l0.parametrization().unwrap();
    let pts: Vec<ProjectivePoint> = roots
        .iter()
        .map(|[s, t]| {
            ProjectivePoint::new([
                &(s * &p1[0]) + &(t * &p2[0]),
                &(s * &p1[1]) + &(t * &p2[1]),
                &(s * &p1[2]) + &(t * &p2[2]),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(pts.try_into().unwrap())
}

fn polar_vertex(f: &TernaryCubic, p: &ProjectivePoint, i: usize) -> Result<ProjectivePoint> {
    match conic_singular_point(&polar_conic(f, p.coords())) {
        Ok(ConicSingularity::Point(q)) => Ok(q),
        Ok(ConicSingularity::DoubleLine(l)) => Err(Error::InconsistentSystem(format!(
            "polar conic at P{i} = {p} is the double line {l}"
        ))),
        Err(Error::ZeroConic) => Err(Error::ConeDetected),
        Err(Error::NonsingularConic) => Err(Error::InconsistentSystem(format!(
            "polar conic at P{i} = {p} is nonsingular"
        ))),
        Err(e) => Err(e),
    }
}

fn join(p: &ProjectivePoint, q: &ProjectivePoint, name: &str) -> Result<LinearForm> {
    p.join(q)
        .map(|l| l.normalized())
        .map_err(|_| Error::InconsistentSystem(format!("{name} is undefined: points coincide")))
}

/// Runs the construction for `F` and the line `l0`; zero coefficients are
/// dropped from the decomposition but kept in the trace.
pub fn depaolis(f: &TernaryCubic, l0: &LinearForm) -> Result<(Decomposition, DePaolisTrace)> {
    let points = line_points(f, l0)?;
    let q: Vec<ProjectivePoint> = points
        .iter()
        .enumerate()
        .map(|(i, p)| polar_vertex(f, p, i + 1))
        .collect::<Result<_>>()?;
    let lines = [
        join(&points[0], &q[1], "l1")?,
        join(&points[1], &q[0], "l2")?,
        join(&points[2], &q[0], "l3")?,
    ];
    let forms = [l0.clone(), lines[0].clone(), lines[1].clone(), lines[2].clone()];
    let cubes: Vec<TernaryCubic> = forms.iter().map(LinearForm::cube).collect();
    let a = ExactMatrix::from_rows(
        (0..10)
            .map(|k| cubes.iter().map(|c| c.coeffs()[k].clone()).collect())
            .collect(),
    )?;
    let c = match a.solve(f.coeffs()) {
        Ok(Solution::Unique(c)) => c,
        Ok(Solution::Underdetermined { particular, .. }) => particular,
        Err(Error::NoSolution) => {
            return Err(Error::InconsistentSystem(
                "F is not a combination of the four cubes".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    let coefficients: [FieldElement; 4] = c.try_into().unwrap();
    let terms = coefficients
        .iter()
        .cloned()
        .zip(forms)
        .filter(|(c, _)| !c.is_zero())
        .collect();
    let decomposition = Decomposition::new(terms, f.clone())?;
    let trace = DePaolisTrace {
        l0: l0.clone(),
        points,
        singular_points: q.try_into().unwrap(),
        lines,
        coefficients,
    };
    Ok((decomposition, trace))
}

/// Flex line of a member `a(x³+y³+z³) + b xyz` of the Hesse pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HesseFlex {
    pub line: LinearForm,
    /// Set when the member is singular (`a = 0` or `1 + 8λ³ = 0`, `λ = b/6a`).
    pub degenerate: bool,
}

pub fn hesse_flex_line(f: &TernaryCubic) -> Result<HesseFlex> {
    let c = f.coeffs();
    let pattern = [1, 2, 3, 5, 7, 8].iter().all(|&i| c[i].is_zero()) && c[0] == c[6] && c[0] == c[9];
    if !pattern || f.is_zero() {
        return Err(Error::NotHesseForm);
    }
    let degenerate = c[0].is_zero() || {
        let l = &c[4] / &(&FieldElement::from(6) * &c[0]);
        (&FieldElement::one() + &(&FieldElement::from(8) * &l.pow(3))).is_zero()
    };
    Ok(HesseFlex {
        line: LinearForm::from_ints(1, 1, 1),
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binaryrank::binary_real_rank;

    fn hesse(l: &FieldElement) -> TernaryCubic {
        let mut c: [FieldElement; 10] = Default::default();
        c[0] = 1.into();
        c[6] = 1.into();
        c[9] = 1.into();
        c[4] = &FieldElement::from(6) * l;
        TernaryCubic::new(c).unwrap()
    }

    fn flex() -> LinearForm {
        LinearForm::from_ints(1, 1, 1)
    }

    #[test]
    fn restriction_examples() {
        let x3 = TernaryCubic::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(restrict_to_line(&x3, &LinearForm::from_ints(0, 0, 1)).unwrap(), BinaryCubic::from_ints([1, 0, 0, 0]));
        let f = TernaryCubic::from_ints([0, 18, 0, 0, 0, 0, 0, 18, 0, 0]);
        let h = restrict_to_line(&hessian(&f), &LinearForm::from_ints(1, 0, 0)).unwrap();
        assert_eq!(binary_real_rank(&h).unwrap().rank, 1);
    }

    #[test]
    fn hesse_points() {
        let f = hesse(&FieldElement::from(2));
        let pts = line_points(&f, &flex()).unwrap();
        assert_eq!(pts[0], ProjectivePoint::from_ints(0, 1, -1).unwrap());
        assert_eq!(pts[1], ProjectivePoint::from_ints(1, 0, -1).unwrap());
        assert_eq!(pts[2], ProjectivePoint::from_ints(1, -1, 0).unwrap());
    }

    #[test]
    fn hesse_coefficients() {
        for l in [FieldElement::from(1), FieldElement::from(2), FieldElement::ratio(1, 3), FieldElement::from(-1)] {
            let (d, trace) = depaolis(&hesse(&l), &flex()).unwrap();
            let one = FieldElement::one();
            let den = (&(&FieldElement::from(2) * &l) + &one).pow(2);
            let c0 = &(&l * &(&(&l * &l) + &(&l + &one))) / &den;
            let ci = den.recip();
            assert_eq!(trace.coefficients[0], c0);
            // Cyclic orientation of the joins P1 Q2, P2 Q1, P3 Q1.
            let lp = &l + &one;
            let paper = [
                LinearForm::new([lp.clone(), -&l, -&l]).unwrap(),
                LinearForm::new([-&l, lp.clone(), -&l]).unwrap(),
                LinearForm::new([-&l, -&l, lp]).unwrap(),
            ];
            for i in 0..3 {
                assert_eq!(
                    trace.lines[i].cube().scale(&trace.coefficients[i + 1]),
                    paper[i].cube().scale(&ci)
                );
            }
            assert_eq!(d.len(), 4);
            let q1 = ProjectivePoint::new([1.into(), l.clone(), l.clone()]).unwrap();
            assert_eq!(trace.singular_points[0], q1);
            let (p, q, l_) = (&trace.points, &trace.singular_points, &trace.lines);
            assert!(q[0].lies_on(&l_[1]) && q[0].lies_on(&l_[2]));
            assert!(q[1].lies_on(&l_[0]) && q[1].lies_on(&l_[2]));
            assert!(q[2].lies_on(&l_[0]) && q[2].lies_on(&l_[1]));
            for i in 0..3 {
                assert!(p[i].lies_on(&l_[i]));
            }
        }
    }

    #[test]
    fn golden_lambda_two() {
        let (_, trace) = depaolis(&hesse(&FieldElement::from(2)), &flex()).unwrap();
        assert_eq!(
            trace.coefficients,
            [FieldElement::ratio(14, 25), FieldElement::ratio(1, 25), FieldElement::ratio(1, 25), FieldElement::ratio(1, 25)]
        );
        assert_eq!(trace.lines[0], LinearForm::from_ints(3, -2, -2));
    }

    #[test]
    fn fermat_drops_zero_term() {
        let (d, trace) = depaolis(&hesse(&FieldElement::zero()), &flex()).unwrap();
        assert!(trace.coefficients[0].is_zero());
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn flex_line_detection() {
        let f = hesse(&FieldElement::from(2));
        assert_eq!(hesse_flex_line(&f).unwrap(), HesseFlex { line: flex(), degenerate: false });
        let xyz = TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0]);
        assert!(hesse_flex_line(&xyz).unwrap().degenerate);
        let g = TernaryCubic::from_ints([1, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(hesse_flex_line(&g), Err(Error::NotHesseForm));
        assert!(hesse_flex_line(&hesse(&FieldElement::ratio(-1, 2))).unwrap().degenerate);
    }

    #[test]
    fn cone_is_reported() {
        // x³ + y³ is a cone with vertex (0,0,1); every polar is degenerate.
        let f = TernaryCubic::from_ints([1, 0, 0, 0, 0, 0, 1, 0, 0, 0]);
        assert!(depaolis(&f, &flex()).is_err());
    }
}
