//! Real and complex orbit tables of ternary cubics, with stored
//! decompositions and an exact verifier.

mod data;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use data::builtin;

use crate::covariants::{aronhold_st, catalecticant, hessian};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Radicand};
use crate::poly::{expand_cubes, Term, TernaryCubic};

/// Row identifier: `1..=16` for real orbits, `C1..=C10` for complex ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RecordId {
    Real(u8),
    Complex(u8),
}

impl fmt::Display for RecordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordId::Real(n) => write!(f, "{n}"),
            RecordId::Complex(n) => write!(f, "C{n}"),
        }
    }
}

impl FromStr for RecordId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownRecord(s.into());
        let (complex, digits) = match s.strip_prefix(['C', 'c']) {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let n: u8 = digits.parse().map_err(|_| bad())?;
        match (complex, n) {
            (false, 1..=16) => Ok(RecordId::Real(n)),
            (true, 1..=10) => Ok(RecordId::Complex(n)),
            _ => Err(bad()),
        }
    }
}

/// How clause (c) compares the Hessian with the listed entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HessianCheck {
    /// Exact proportionality to `hessian_expected`.
    Proportional,
    /// The Hessian must be the cube of a linear form.
    PerfectCube,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub id: RecordId,
    pub description: String,
    pub normal_form: TernaryCubic,
    pub rk_real: Option<usize>,
    pub brk_real: Option<usize>,
    pub rk_complex: usize,
    pub brk_complex: usize,
    pub hessian_description: String,
    /// Hessian of the normal form up to scalar, as computed.
    pub hessian_expected: Option<TernaryCubic>,
    /// The Hessian entry as listed in the orbit table, which may differ.
    pub hessian_listed: Option<TernaryCubic>,
    pub hessian_check: HessianCheck,
    pub decomposition: Option<Vec<Term>>,
    pub decomposition_form: TernaryCubic,
    /// `M` with `decomposition_form ∘ M ∝ normal_form`.
    pub to_normal_form: Option<ExactMatrix>,
    /// Constants as originally displayed, kept when they had to be repaired.
    pub original_decomposition: Option<(Vec<Term>, TernaryCubic)>,
    /// For complex rows, the real rows over them.
    pub complex_correspondence: Vec<u8>,
    pub note: String,
}

impl OrbitRecord {
    pub fn is_real(&self) -> bool {
        matches!(self.id, RecordId::Real(_))
    }

    pub fn repaired(&self) -> bool {
        self.original_decomposition.is_some()
    }

    pub fn decomposition_tower(&self) -> Result<Option<Radicand>> {
        let mut t = None;
        for (c, l) in self.decomposition.iter().flatten() {
            t = crate::exact::field::join_towers(t.as_ref(), c.radicand())?;
            t = crate::exact::field::join_towers(t.as_ref(), l.tower()?.as_ref())?;
        }
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClauseOutcome {
    Passed(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: RecordId,
    pub terms: Option<usize>,
    pub tower: Option<Radicand>,
    pub repaired: bool,
    pub clauses: Vec<(char, ClauseOutcome)>,
}

fn fail(r: &OrbitRecord, clause: char, detail: String) -> Error {
    Error::VerificationFailed {
        id: format!("{}", r.id),
        clause,
        detail,
    }
}

fn same_sign_class(a: &TernaryCubic, b: &TernaryCubic) -> bool {
    let (p, q) = (aronhold_st(a), aronhold_st(b));
    p.s.signum() == q.s.signum()
        && p.t.signum() == q.t.signum()
        && &p.s.pow(3) * &q.t.pow(2) == &q.s.pow(3) * &p.t.pow(2)
}

/// Checks a record: (a) the stored decomposition expands to
/// `decomposition_form`; (b) `decomposition_form` is carried to the normal
/// form by the stored matrix, or linked by invariants when none is stored;
/// (c) the Hessian of the normal form matches `hessian_expected`;
/// (d) the decomposition length equals the real rank.
pub fn verify_record(r: &OrbitRecord) -> Result<VerificationReport> {
    let mut clauses = Vec::new();
    let terms = r.decomposition.as_ref();
    match terms {
        Some(t) => {
            let e = expand_cubes(t);
            if e != r.decomposition_form {
                return Err(fail(r, 'a', format!("expected {}, expansion {}", r.decomposition_form, e)));
            }
            clauses.push(('a', ClauseOutcome::Passed(format!("{} terms expand exactly", t.len()))));
        }
        None => clauses.push(('a', ClauseOutcome::Skipped("no stored decomposition".into()))),
    }

    if let Some(m) = &r.to_normal_form {
        let g = r.decomposition_form.substitute_linear(m);
        match g.proportional(&r.normal_form) {
            Some(s) => clauses.push(('b', ClauseOutcome::Passed(format!("transformed form = {s} * normal form")))),
            None => return Err(fail(r, 'b', format!("transformed form {g} is not proportional to {}", r.normal_form))),
        }
    } else if r.decomposition_form.proportional(&r.normal_form).is_some() {
        clauses.push(('b', ClauseOutcome::Skipped("decomposition is of the normal form".into())));
    } else if same_sign_class(&r.decomposition_form, &r.normal_form) {
        clauses.push(('b', ClauseOutcome::Passed("linked by the invariants S, T".into())));
    } else {
        return Err(fail(r, 'b', format!("{} and {} have different invariants", r.decomposition_form, r.normal_form)));
    }

    let h = hessian(&r.normal_form);
    match (&r.hessian_expected, r.hessian_check) {
        (None, _) => clauses.push(('c', ClauseOutcome::Skipped("no Hessian entry".into()))),
        (Some(_), HessianCheck::PerfectCube) => {
            if h.is_zero() || catalecticant(&h, 1)?.rank() != 1 {
                return Err(fail(r, 'c', format!("Hessian {h} is not a cube of a linear form")));
            }
            clauses.push(('c', ClauseOutcome::Passed(format!("Hessian {h} is a perfect cube"))));
        }
        (Some(e), HessianCheck::Proportional) => match h.proportional(e) {
            Some(s) => clauses.push(('c', ClauseOutcome::Passed(format!("Hessian = {s} * ({e})")))),
            None => return Err(fail(r, 'c', format!("Hessian {h} is not proportional to {e}"))),
        },
    }

    match (terms, r.rk_real) {
        (Some(t), Some(rk)) if t.len() != rk => {
            return Err(fail(r, 'd', format!("{} terms but real rank {rk}", t.len())))
        }
        (Some(t), Some(_)) => clauses.push(('d', ClauseOutcome::Passed(format!("length {} = real rank", t.len())))),
        _ => clauses.push(('d', ClauseOutcome::Skipped("nothing to compare".into()))),
    }

    Ok(VerificationReport {
        id: r.id,
        terms: terms.map(Vec::len),
        tower: r.decomposition_tower()?,
        repaired: r.repaired(),
        clauses,
    })
}

/// Checks the originally displayed constants of a repaired record.
pub fn verify_original(r: &OrbitRecord) -> Result<()> {
    let Some((terms, form)) = &r.original_decomposition else {
        return Ok(());
    };
    let e = expand_cubes(terms);
    if e != r.decomposition_form {
        return Err(fail(
            r,
            'a',
            format!("original display claims {form}; expansion {e} differs from {}", r.decomposition_form),
        ));
    }
    Ok(())
}

pub fn find(records: &[OrbitRecord], id: RecordId) -> Result<&OrbitRecord> {
    records
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownRecord(format!("{id}")))
}

pub fn record(id: RecordId) -> Result<OrbitRecord> {
    find(&builtin(), id).cloned()
}

pub fn verify_entry(id: RecordId) -> Result<VerificationReport> {
    verify_record(&record(id)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSummary {
    pub reports: Vec<(RecordId, Result<VerificationReport>)>,
    pub cross_checks: Vec<CrossCheck>,
}

impl CatalogSummary {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.is_ok()) && self.cross_checks.iter().all(|c| c.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.reports.iter().filter(|(_, r)| r.is_ok()).count()
    }
}

/// Pairs `(real row, complex row)` from the correspondence column.
pub fn correspondences(records: &[OrbitRecord]) -> Vec<(&OrbitRecord, &OrbitRecord)> {
    let mut out = Vec::new();
    for c in records.iter().filter(|r| !r.is_real()) {
        for &n in &c.complex_correspondence {
            if let Ok(r) = find(records, RecordId::Real(n)) {
                out.push((r, c));
            }
        }
    }
    out
}

fn cross_checks(records: &[OrbitRecord]) -> Vec<CrossCheck> {
    let mut out = Vec::new();
    let pairs = correspondences(records);
    let reals = records.iter().filter(|r| r.is_real()).count();
    let covered = records
        .iter()
        .filter(|r| r.is_real() && pairs.iter().any(|(p, _)| p.id == r.id))
        .count();
    out.push(CrossCheck {
        name: "correspondence".into(),
        passed: covered == reals && pairs.iter().all(|(r, c)| (r.rk_complex, r.brk_complex) == (c.rk_complex, c.brk_complex)),
        detail: format!("{covered}/{reals} real rows paired with a complex row of matching ranks"),
    });
    let rank_bad: Vec<String> = pairs
        .iter()
        .filter(|(r, c)| r.rk_real.is_none_or(|k| k < c.rk_complex))
        .map(|(r, c)| format!("{}/{}", r.id, c.id))
        .collect();
    out.push(CrossCheck {
        name: "rank inequality".into(),
        passed: rank_bad.is_empty(),
        detail: format!("rk_R >= rk_C on {}/{} pairs", pairs.len() - rank_bad.len(), pairs.len()),
    });
    let border_bad: Vec<String> = pairs
        .iter()
        .filter(|(r, c)| r.brk_real.is_none_or(|k| k < c.brk_complex))
        .map(|(r, c)| format!("{}/{}", r.id, c.id))
        .collect();
    out.push(CrossCheck {
        name: "border rank inequality".into(),
        passed: border_bad.is_empty(),
        detail: format!("brk_R >= brk_C on {}/{} pairs", pairs.len() - border_bad.len(), pairs.len()),
    });
    let gaps: Vec<String> = records
        .iter()
        .filter_map(|r| Some((r.id, r.rk_real?.checked_sub(r.brk_real?)?)))
        .filter(|&(_, g)| g > 0)
        .map(|(id, g)| format!("{id}:{g}"))
        .collect();
    let expected_gaps = ["4:1", "6:1", "8:2", "12:1", "13:1", "10:1"];
    out.push(CrossCheck {
        name: "rank gaps".into(),
        passed: ["6:1", "8:2", "12:1"].iter().all(|g| gaps.iter().any(|x| x == g))
            && gaps.iter().all(|g| expected_gaps.contains(&g.as_str())),
        detail: gaps.join(", "),
    });
    out
}

pub fn verify_catalog(records: &[OrbitRecord]) -> CatalogSummary {
    let reports = records
        .iter()
        .filter(|r| r.is_real())
        .map(|r| (r.id, verify_record(r)))
        .collect();
    CatalogSummary {
        reports,
        cross_checks: cross_checks(records),
    }
}

pub fn verify_all() -> CatalogSummary {
    verify_catalog(&builtin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn ids_round_trip() {
        for s in ["1", "16", "C1", "C10"] {
            assert_eq!(s.parse::<RecordId>().unwrap().to_string(), s);
        }
        assert!("17".parse::<RecordId>().is_err());
        assert!("C11".parse::<RecordId>().is_err());
        assert!("x".parse::<RecordId>().is_err());
    }

    #[test]
    fn all_real_rows_verify() {
        let s = verify_all();
        for (id, r) in &s.reports {
            assert!(r.is_ok(), "{id}: {r:?}");
        }
        for c in &s.cross_checks {
            assert!(c.passed, "{c:?}");
        }
        assert_eq!(s.pass_count(), 16);
    }

    #[test]
    fn triangle_and_external_line() {
        let r = verify_entry(RecordId::Real(16)).unwrap();
        assert_eq!(r.terms, Some(4));
        let r = verify_entry(RecordId::Real(6)).unwrap();
        assert_eq!(r.terms, Some(5));
    }

    #[test]
    fn nodal_original_fails_repair_passes() {
        let rec = record(RecordId::Real(14)).unwrap();
        assert!(matches!(verify_original(&rec), Err(Error::VerificationFailed { clause: 'a', .. })));
        let rep = verify_record(&rec).unwrap();
        assert!(rep.repaired);
        assert_eq!(rep.terms, Some(4));
        assert_eq!(rep.tower, Some(Radicand::new(5).unwrap()));
    }

    #[test]
    fn towers() {
        let d = |n| Some(Radicand::new(n).unwrap());
        for rec in builtin().iter().filter(|r| r.is_real()) {
            let want = match rec.id {
                RecordId::Real(5 | 15) => d(2),
                RecordId::Real(14) => d(5),
                RecordId::Real(2) => d(3),
                _ => None,
            };
            assert_eq!(rec.decomposition_tower().unwrap(), want, "{}", rec.id);
        }
    }

    #[test]
    fn tampered_record_is_rejected() {
        let mut rec = record(RecordId::Real(13)).unwrap();
        rec.decomposition.as_mut().unwrap()[0].0 = 1.into();
        assert!(matches!(verify_record(&rec), Err(Error::VerificationFailed { clause: 'a', .. })));
        let mut rec = record(RecordId::Real(9)).unwrap();
        rec.rk_real = Some(4);
        assert!(matches!(verify_record(&rec), Err(Error::VerificationFailed { clause: 'd', .. })));
    }

    #[test]
    fn inequalities_and_gaps() {
        let recs = builtin();
        for (r, c) in correspondences(&recs) {
            assert!(r.rk_real.unwrap() >= c.rk_complex && r.brk_real.unwrap() >= c.brk_complex);
        }
        let gap = |n| {
            let r = find(&recs, RecordId::Real(n)).unwrap();
            r.rk_real.unwrap() - r.brk_real.unwrap()
        };
        assert_eq!((gap(8), gap(6), gap(12)), (2, 1, 1));
    }
}
