//! End-to-end orbit classification of real ternary cubics with rank bounds
//! and decomposition certificates.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binaryrank::{binary_decompose, binary_real_rank, BinaryOrbit};
use crate::catalog::{self, OrbitRecord, RecordId};
use crate::covariants::{
    aronhold_st, catalecticant, conic_singular_point, factor_out_line, gram_matrix,
    line_conic_position, ConicSingularity, LineConicPosition, PolarConic,
};
use crate::depaolis::{depaolis, hesse_flex_line};
use crate::error::{Error, Result};
use crate::exact::roots::real_roots;
use crate::exact::{ExactMatrix, FieldElement, UPoly};
use crate::poly::{merge_proportional, BinaryCubic, Decomposition, LinearForm, ProjectivePoint, Term, TernaryCubic, TernaryForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangentCone {
    Node,
    Cusp,
    Punctata,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerBoundSource {
    Catalecticant,
    ComplexRank(RecordId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateSource {
    Binary,
    DePaolis,
    Catalog,
    IdentityRewrite,
    PeelSearch,
}

impl fmt::Display for LowerBoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBoundSource::Catalecticant => f.write_str("catalecticant rank"),
            LowerBoundSource::ComplexRank(id) => write!(f, "complex rank of orbit {id}"),
        }
    }
}

impl fmt::Display for CertificateSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateSource::Binary => "binary",
            CertificateSource::DePaolis => "de-paolis",
            CertificateSource::Catalog => "catalog",
            CertificateSource::IdentityRewrite => "identity-rewrite",
            CertificateSource::PeelSearch => "peel-search",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    pub source: LowerBoundSource,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub value: usize,
    pub source: CertificateSource,
    pub certificate: Decomposition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub test: String,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub input: TernaryCubic,
    /// Real orbit row `1..=16`; `None` when undetermined.
    pub orbit: Option<u8>,
    pub description: Option<String>,
    pub rk_real: Option<usize>,
    pub brk_real: Option<usize>,
    pub rk_complex: Option<usize>,
    pub brk_complex: Option<usize>,
    pub lower: LowerBound,
    pub upper: UpperBound,
    pub evidence: Vec<Evidence>,
    pub errors: Vec<String>,
}

impl ClassificationReport {
    pub fn is_determined(&self) -> bool {
        self.orbit.is_some()
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// Line handed to the De Paolis construction.
    pub line: Option<LinearForm>,
    /// Look for a five-term certificate by peeling one cube.
    pub peel_search: bool,
}

fn unit(i: usize) -> [FieldElement; 3] {
    let mut v: [FieldElement; 3] = Default::default();
    v[i] = FieldElement::one();
    v
}

/// Invertible matrix whose last columns are `vs`, completed by unit vectors.
fn complete_basis(vs: &[[FieldElement; 3]]) -> ExactMatrix {
    let mut cols: Vec<[FieldElement; 3]> = Vec::new();
    for i in 0..3 {
        if cols.len() + vs.len() == 3 {
            break;
        }
        let mut trial = cols.clone();
        trial.push(unit(i));
        trial.extend(vs.iter().cloned());
        let rows: Vec<Vec<FieldElement>> = trial.iter().map(|c| c.to_vec()).collect();
        if ExactMatrix::from_rows(rows).unwrap().rank() == trial.len() {
            cols.push(unit(i));
        }
    }
    cols.extend(vs.iter().cloned());
    ExactMatrix::from_columns(&cols.try_into().expect("three columns"))
}

// (a, b, c) with q = a z² + b z + c and b, c free of z.
fn z_parts(q: &TernaryForm) -> (FieldElement, TernaryForm, TernaryForm) {
    let mut b = TernaryForm::zero(1);
    let mut c = TernaryForm::zero(2);
    b.set_coeff([1, 0, 0], q.coeff([1, 0, 1]).clone());
    b.set_coeff([0, 1, 0], q.coeff([0, 1, 1]).clone());
    for e in [[2, 0, 0], [1, 1, 0], [0, 2, 0]] {
        c.set_coeff(e, q.coeff(e).clone());
    }
    (q.coeff([0, 0, 2]).clone(), b, c)
}

/// Resultant in `z` of two quadrics, valid when `a2 != 0`.
fn z_resultant(p: &TernaryForm, q: &TernaryForm) -> TernaryForm {
    let (a1, b1, c1) = z_parts(p);
    let (a2, b2, c2) = z_parts(q);
    let ac = c2.scale(&a1).sub(&c1.scale(&a2));
    let ab = b2.scale(&a1).sub(&b1.scale(&a2));
    let bc = b1.mul(&c2).sub(&b2.mul(&c1));
    ac.mul(&ac).sub(&ab.mul(&bc))
}

fn dehomogenize_xy(r: &TernaryForm) -> UPoly {
    let d = r.degree();
    UPoly::new((0..=d).map(|i| r.coeff([i, d - i, 0]).clone()).collect())
}

fn z_poly(q: &TernaryForm, x0: &FieldElement, y0: &FieldElement) -> UPoly {
    let (a, b, c) = z_parts(q);
    let p = [x0.clone(), y0.clone(), FieldElement::zero()];
    UPoly::new(vec![c.eval(&p), b.eval(&p), a])
}

fn is_singular_at(f: &TernaryCubic, p: &[FieldElement; 3]) -> bool {
    (0..3).all(|i| f.partial(i).eval(p).is_zero())
}

/// A singular point of `F` with coordinates in its tower, found from the
/// resultants of the partials after moving a point off the curve to
/// `(0, 0, 1)`. `None` when no such point exists.
pub fn singular_point(f: &TernaryCubic) -> Option<ProjectivePoint> {
    if f.is_zero() {
        return None;
    }
    // A nonzero cubic cannot vanish on the whole 4 x 4 grid.
    let (a, b) = (0..4i64)
        .flat_map(|a| (0..4i64).map(move |b| (a, b)))
        .find(|&(a, b)| !f.eval(&[a.into(), b.into(), 1.into()]).is_zero())?;
    let m = ExactMatrix::from_ints(&[[1, 0, a], [0, 1, b], [0, 0, 1]]);
    let g = f.substitute_linear(&m);
    let partials: Vec<TernaryForm> = (0..3).map(|i| g.partial(i)).collect();
    // G(0,0,1) != 0, so by Euler's identity G_z has a nonzero z² term.
    let r1 = dehomogenize_xy(&z_resultant(&partials[0], &partials[2]));
    let r2 = dehomogenize_xy(&z_resultant(&partials[1], &partials[2]));
    let common = r1.gcd(&r2);
    let mut candidates: Vec<[FieldElement; 2]> = Vec::new();
    if !common.is_zero() && common.degree().unwrap_or(0) > 0 {
        if let Ok(rr) = real_roots(&common) {
            candidates.extend(rr.roots.into_iter().map(|t| [t, FieldElement::one()]));
        }
    }
    let top = |r: &UPoly| r.coeffs().get(4).is_none_or(FieldElement::is_zero);
    if top(&r1) && top(&r2) {
        candidates.push([FieldElement::one(), FieldElement::zero()]);
    }
    for [x0, y0] in candidates {
        let zs = partials
            .iter()
            .map(|q| z_poly(q, &x0, &y0))
            .fold(UPoly::zero(), |acc, p| acc.gcd(&p));
        if zs.is_zero() || zs.degree() == Some(0) {
            continue;
        }
        let Ok(roots) = real_roots(&zs) else { continue };
        for z0 in roots.roots {
            let v = [x0.clone(), y0.clone(), z0];
            if !is_singular_at(&g, &v) {
                continue;
            }
            let w: [FieldElement; 3] = m.mul_vec(&v).try_into().unwrap();
            if let Ok(p) = ProjectivePoint::new(w) {
                return Some(p);
            }
        }
    }
    None
}

/// Type of the double point `P` of `F` from the quadratic part of `F` at `P`.
pub fn tangent_cone_type(f: &TernaryCubic, p: &ProjectivePoint) -> Option<TangentCone> {
    if !is_singular_at(f, p.coords()) {
        return None;
    }
    let g = f.substitute_linear(&complete_basis(&[p.coords().clone()]));
    let c = g.coeffs();
    let (a, b, cc) = (&c[2], &c[4], &c[7]);
    if a.is_zero() && b.is_zero() && cc.is_zero() {
        return None;
    }
    let disc = &(b * b) - &(&FieldElement::from(4) * &(a * cc));
    Some(match disc.signum() {
        1 => TangentCone::Node,
        0 => TangentCone::Cusp,
        _ => TangentCone::Punctata,
    })
}

/// Rewrites every monomial with the three-cube identity for `a²b`, the
/// four-cube identity for `xyz`, and merges proportional terms.
pub fn identity_rewrite_upper_bound(f: &TernaryCubic) -> Decomposition {
    let var = |i: usize| LinearForm::new(unit(i)).unwrap();
    let sixth = FieldElement::ratio(1, 6);
    let mut terms: Vec<Term> = Vec::new();
    for (k, e) in crate::poly::monomials(3).into_iter().enumerate() {
        let c = &f.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        if let Some(i) = (0..3).find(|&i| e[i] == 3) {
            terms.push((c.clone(), var(i)));
        } else if let (Some(i), Some(j)) = ((0..3).find(|&i| e[i] == 2), (0..3).find(|&i| e[i] == 1)) {
            // a²b = ((b+a)³ + (b-a)³ - 2b³) / 6
            let (a, b) = (var(i), var(j));
            let s = c * &sixth;
            terms.push((s.clone(), b.add(&a)));
            terms.push((s, b.sub(&a)));
            terms.push((-&(c * &FieldElement::ratio(1, 3)), b));
        } else {
            let s = c * &FieldElement::ratio(1, 24);
            let ms = -&s;
            terms.push((s, LinearForm::from_ints(1, 1, 1)));
            terms.push((ms.clone(), LinearForm::from_ints(-1, 1, 1)));
            terms.push((ms.clone(), LinearForm::from_ints(1, -1, 1)));
            terms.push((ms, LinearForm::from_ints(1, 1, -1)));
        }
    }
    Decomposition::new(merge_proportional(&terms), f.clone()).expect("monomial identities are exact")
}

fn scaled(d: &Decomposition, s: &FieldElement) -> Vec<Term> {
    d.terms().iter().map(|(c, l)| (c * s, l.clone())).collect()
}

/// Certificate from the stored decomposition of `rec`, when `F` is a
/// multiple of its decomposition form or of its normal form.
fn catalog_certificate(f: &TernaryCubic, rec: &OrbitRecord) -> Option<Decomposition> {
    let stored = Decomposition::new(rec.decomposition.clone()?, rec.decomposition_form.clone()).ok()?;
    if let Some(s) = f.proportional(&rec.decomposition_form) {
        return Decomposition::new(scaled(&stored, &s), f.clone()).ok();
    }
    let m = rec.to_normal_form.as_ref()?;
    let moved = stored.substitute_linear(m);
    let s = f.proportional(moved.target())?;
    Decomposition::new(scaled(&moved, &s), f.clone()).ok()
}

/// Cubes of small lines subtracted before a De Paolis run on the rest.
pub fn peel_search(f: &TernaryCubic) -> Option<Decomposition> {
    let mut lines = Vec::new();
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            for c in -1..=1i64 {
                let l = LinearForm::from_ints(a, b, c);
                if !l.is_zero() && l.normalized() == l {
                    lines.push(l);
                }
            }
        }
    }
    let coeffs = [FieldElement::from(1), FieldElement::from(-1), FieldElement::ratio(1, 2), FieldElement::ratio(-1, 2)];
    for l in &lines {
        let cube = l.cube();
        for c in &coeffs {
            let g = f.sub(&cube.scale(c));
            for l0 in &lines {
                if let Ok((d, _)) = depaolis(&g, l0) {
                    let mut terms = d.into_terms();
                    terms.push((c.clone(), l.clone()));
                    let terms = merge_proportional(&terms);
                    if let Ok(d) = Decomposition::new(terms, f.clone()) {
                        return Some(d);
                    }
                }
            }
        }
    }
    None
}

struct Builder {
    evidence: Vec<Evidence>,
    errors: Vec<String>,
    certificates: Vec<(CertificateSource, Decomposition)>,
}

impl Builder {
    fn note(&mut self, test: &str, outcome: impl ToString) {
        self.evidence.push(Evidence { test: test.into(), outcome: outcome.to_string() });
    }
}

fn binary_row(orbit: BinaryOrbit) -> u8 {
    match orbit {
        BinaryOrbit::C3 => 1,
        BinaryOrbit::GenericPositive => 2,
        BinaryOrbit::GenericNegative => 3,
        BinaryOrbit::TangentSurface => 4,
    }
}

fn classify_binary(f: &TernaryCubic, b: &mut Builder) -> Result<Option<u8>> {
    let kernel = catalecticant(f, 1)?.transpose().kernel();
    let kv: Vec<[FieldElement; 3]> = kernel.into_iter().map(|k| k.try_into().unwrap()).collect();
    let m = complete_basis(&kv);
    let g = f.substitute_linear(&m);
    let Some(bc) = BinaryCubic::from_ternary_xy(&g) else {
        b.errors.push("reduction to two variables failed".into());
        return Ok(None);
    };
    let class = binary_real_rank(&bc)?;
    b.note("binary form", &bc);
    b.note("binary discriminant", &class.discriminant);
    b.note("binary orbit", format!("{:?}", class.orbit));
    match binary_decompose(&bc) {
        Ok(d) => {
            let back = m.inverse().expect("completed basis is invertible");
            let d = d.substitute_linear(&back);
            if let Ok(d) = Decomposition::new(d.into_terms(), f.clone()) {
                b.certificates.push((CertificateSource::Binary, d));
            }
        }
        Err(e) => b.errors.push(format!("binary decomposition: {e}")),
    }
    Ok(Some(binary_row(class.orbit)))
}

fn classify_reducible(l: &LinearForm, q: &TernaryForm, b: &mut Builder) -> Option<u8> {
    let inertia = gram_matrix(q).signature();
    b.note("linear factor", l);
    b.note("residual conic", q);
    b.note("conic signature", format!("({}, {}, {})", inertia.positive, inertia.negative, inertia.zero));
    match inertia.rank() {
        3 => {
            let pos = line_conic_position(l, q);
            b.note("line position", format!("{pos:?}"));
            match pos {
                LineConicPosition::ConicImaginary => Some(5),
                LineConicPosition::External => Some(6),
                LineConicPosition::Secant => Some(7),
                LineConicPosition::Tangent => Some(8),
                LineConicPosition::Degenerate { .. } => None,
            }
        }
        2 => {
            let vertex = match conic_singular_point(&PolarConic::from_quadratic(q)) {
                Ok(ConicSingularity::Point(p)) => p,
                _ => return None,
            };
            let on_line = vertex.lies_on(l);
            b.note("line pair vertex", &vertex);
            b.note("vertex on factor", on_line);
            let real_pair = inertia.positive == 1 && inertia.negative == 1;
            match (real_pair, on_line) {
                (true, false) => Some(16),
                (false, false) => Some(12),
                // Concurrent lines only need two variables.
                (true, true) => Some(3),
                (false, true) => Some(2),
            }
        }
        _ => None,
    }
}

fn classify_irreducible(f: &TernaryCubic, b: &mut Builder) -> Option<u8> {
    let inv = aronhold_st(f);
    let disc = inv.discriminant();
    b.note("S", &inv.s);
    b.note("T", &inv.t);
    b.note("discriminant T^2+64S^3", &disc);
    if let Some(p) = singular_point(f) {
        b.note("singular point", &p);
        let cone = tangent_cone_type(f, &p)?;
        b.note("tangent cone", format!("{cone:?}"));
        return Some(match cone {
            TangentCone::Node => 14,
            TangentCone::Cusp => 13,
            TangentCone::Punctata => 15,
        });
    }
    b.note("singular point", "none in the tower");
    if disc.is_zero() {
        // Three lines conjugate over a cubic field: the sign of T separates
        // the real triangle from the imaginary one.
        return match inv.t.signum() {
            -1 => Some(16),
            1 => Some(12),
            _ => {
                b.errors.push("singular cubic with S = T = 0 and no representable singular point".into());
                None
            }
        };
    }
    Some(match (inv.s.is_zero(), inv.t.signum()) {
        (true, 1) => 9,
        (true, _) => 10,
        (false, _) => 11,
    })
}

pub fn classify(f: &TernaryCubic) -> Result<ClassificationReport> {
    classify_with(f, &ClassifyOptions::default())
}

pub fn classify_with(f: &TernaryCubic, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut b = Builder { evidence: Vec::new(), errors: Vec::new(), certificates: Vec::new() };
    let ev = crate::covariants::essential_variables(f);
    b.note("essential variables", ev);

    let orbit = if ev <= 2 {
        classify_binary(f, &mut b)?
    } else if let Some((l, q)) = factor_out_line(f) {
        classify_reducible(&l, &q, &mut b)
    } else {
        b.note("linear factor", "none in the tower");
        classify_irreducible(f, &mut b)
    };

    if let Ok(flex) = hesse_flex_line(f) {
        b.note("Hesse form", if flex.degenerate { "degenerate member" } else { "flex line x + y + z" });
        match depaolis(f, &flex.line) {
            Ok((d, _)) => b.certificates.push((CertificateSource::DePaolis, d)),
            Err(e) => b.errors.push(format!("de Paolis on x + y + z: {e}")),
        }
    }
    if let Some(l0) = &opts.line {
        match depaolis(f, l0) {
            Ok((d, _)) => b.certificates.push((CertificateSource::DePaolis, d)),
            Err(e) => b.errors.push(format!("de Paolis on {l0}: {e}")),
        }
    }

    let records = catalog::builtin();
    let rec = orbit.and_then(|n| catalog::find(&records, RecordId::Real(n)).ok());
    if let Some(rec) = rec {
        if let Some(d) = catalog_certificate(f, rec) {
            b.certificates.push((CertificateSource::Catalog, d));
        }
    }
    if opts.peel_search {
        if let Some(d) = peel_search(f) {
            b.certificates.push((CertificateSource::PeelSearch, d));
        }
    }
    b.certificates.push((CertificateSource::IdentityRewrite, identity_rewrite_upper_bound(f)));
    let (source, certificate) = b
        .certificates
        .iter()
        .min_by_key(|(_, d)| d.len())
        .cloned()
        .unwrap();

    let complex = rec.and_then(|r| {
        catalog::correspondences(&records)
            .into_iter()
            .find(|(real, _)| real.id == r.id)
            .map(|(_, c)| c.id)
    });
    let mut lower = LowerBound { value: ev, source: LowerBoundSource::Catalecticant };
    if let (Some(r), Some(cid)) = (rec, complex) {
        if r.rk_complex > lower.value {
            lower = LowerBound { value: r.rk_complex, source: LowerBoundSource::ComplexRank(cid) };
        }
    }
    if orbit.is_none() {
        b.errors.push("orbit undetermined".into());
    }
    Ok(ClassificationReport {
        input: f.clone(),
        orbit,
        description: rec.map(|r| r.description.clone()),
        rk_real: rec.and_then(|r| r.rk_real),
        brk_real: rec.and_then(|r| r.brk_real),
        rk_complex: rec.map(|r| r.rk_complex),
        brk_complex: rec.map(|r| r.brk_complex),
        lower,
        upper: UpperBound { value: certificate.len(), source, certificate },
        evidence: b.evidence,
        errors: b.errors,
    })
}

/// Lower bound with its source and the shortest certificate found.
pub fn rank_bounds(f: &TernaryCubic) -> Result<(LowerBound, UpperBound)> {
    let r = classify(f)?;
    Ok((r.lower, r.upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn singular_points() {
        let cusp = TernaryCubic::from_ints([-1, 0, 0, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(singular_point(&cusp), Some(pt(0, 0, 1)));
        let folium = TernaryCubic::from_ints([1, 0, 0, 0, -3, 0, 1, 0, 0, 0]);
        assert_eq!(singular_point(&folium), Some(pt(0, 0, 1)));
        let fermat = TernaryCubic::from_ints([1, 0, 0, 0, 0, 0, 1, 0, 0, 1]);
        assert_eq!(singular_point(&fermat), None);
        // F(Mv) is singular at M^-1 (0,0,1) = (1, 2, 1).
        let m = ExactMatrix::from_ints(&[[1, 0, -1], [0, 1, -2], [0, 0, 1]]);
        assert_eq!(singular_point(&folium.substitute_linear(&m)), Some(pt(1, 2, 1)));
    }

    #[test]
    fn tangent_cones() {
        let folium = TernaryCubic::from_ints([1, 0, 0, 0, -3, 0, 1, 0, 0, 0]);
        assert_eq!(tangent_cone_type(&folium, &pt(0, 0, 1)), Some(TangentCone::Node));
        let cusp = TernaryCubic::from_ints([-1, 0, 0, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(tangent_cone_type(&cusp, &pt(0, 0, 1)), Some(TangentCone::Cusp));
        let punct = TernaryCubic::from_ints([-1, 0, 1, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(tangent_cone_type(&punct, &pt(0, 0, 1)), Some(TangentCone::Punctata));
        assert_eq!(tangent_cone_type(&punct, &pt(1, 0, 0)), None);
    }

    #[test]
    fn identity_rewrites() {
        let cusp = TernaryCubic::from_ints([-1, 0, 0, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(identity_rewrite_upper_bound(&cusp).len(), 4);
        assert_eq!(identity_rewrite_upper_bound(&TernaryCubic::from_ints([0, 1, 0, 0, 0, 0, 0, 0, 0, 0])).len(), 3);
        assert_eq!(identity_rewrite_upper_bound(&TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0])).len(), 4);
        let f = TernaryCubic::from_ints([3, -1, 4, 1, -5, 9, 2, -6, 5, 3]);
        assert_eq!(identity_rewrite_upper_bound(&f).target(), &f);
    }

    #[test]
    fn normal_forms() {
        for rec in catalog::builtin().iter().filter(|r| r.is_real()) {
            let r = classify(&rec.normal_form).unwrap();
            assert_eq!(r.orbit, Some(match rec.id { RecordId::Real(n) => n, _ => unreachable!() }), "{}: {:?}", rec.id, r.evidence);
            assert_eq!((r.rk_real, r.brk_real), (rec.rk_real, rec.brk_real));
            assert!(r.lower.value <= r.rk_real.unwrap() && r.rk_real.unwrap() <= r.upper.value, "{}", rec.id);
            assert_eq!(r.upper.certificate.target(), &rec.normal_form);
        }
    }

    #[test]
    fn bounds_examples() {
        let hesse2 = TernaryCubic::from_ints([1, 0, 0, 0, 12, 0, 1, 0, 0, 1]);
        let (lo, up) = rank_bounds(&hesse2).unwrap();
        assert_eq!((lo.value, up.value), (4, 4));
        assert_eq!(up.source, CertificateSource::DePaolis);
        let (lo, up) = rank_bounds(&TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!((lo.value, up.value), (4, 4));
        let (lo, up) = rank_bounds(&TernaryCubic::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!((lo.value, up.value), (1, 1));
        assert_eq!(classify(&TernaryCubic::zero()), Err(Error::ZeroForm));
    }

    #[test]
    fn transformed_triangle() {
        let xyz = TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0]);
        let m = ExactMatrix::from_ints(&[[1, 2, 0], [0, 1, -3], [1, 1, 0]]);
        let r = classify(&xyz.substitute_linear(&m)).unwrap();
        assert_eq!((r.orbit, r.rk_real), (Some(16), Some(4)));
    }

    #[test]
    fn cubic_field_triangles() {
        // Norm forms of x + t y + t² z: t³ = 2 has one real root, t³ - 3t + 1
        // has three, and no line is defined over Q or a quadratic field.
        let im = TernaryCubic::from_ints([1, 0, 0, 0, -6, 0, 2, 0, 0, 4]);
        let r = classify(&im).unwrap();
        assert_eq!(r.orbit, Some(12), "{:?}", r.evidence);
        let real = TernaryCubic::from_ints([1, 0, 6, -3, 3, 9, -1, 0, 3, 1]);
        let r = classify(&real).unwrap();
        assert_eq!(r.orbit, Some(16), "{:?}", r.evidence);
    }
}
