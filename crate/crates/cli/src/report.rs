//! Text and JSON reports. Every number is an exact string.

use std::fmt::Write as _;

use cubic_waring::classify::ClassificationReport;
use cubic_waring::poly::Term;
use cubic_waring::{Error, FieldElement, TernaryCubic};
use serde::Serialize;
use serde_json::{Map, Value};

/// Stable code for a library error.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::FieldMismatch { .. } => "field-mismatch",
        Error::InvalidRadicand(_) => "invalid-radicand",
        Error::NoSolution => "no-solution",
        Error::ZeroVector => "zero-vector",
        Error::Dimension(_) => "dimension",
        Error::NonsingularConic => "nonsingular-conic",
        Error::ZeroConic => "zero-conic",
        Error::UnsupportedK(_) => "unsupported-k",
        Error::ZeroForm => "zero-form",
        Error::WrongDegree(_) => "wrong-degree",
        Error::UnsupportedAlgebraicDegree(_) => "unsupported-algebraic-degree",
        Error::IndistinctIntersection(_) => "indistinct-intersection",
        Error::ConeDetected => "cone-detected",
        Error::InconsistentSystem(_) => "inconsistent-system",
        Error::NotHesseForm => "not-hesse-form",
        Error::ExpansionMismatch => "expansion-mismatch",
        Error::VerificationFailed { .. } => "verification-failed",
        Error::UnknownRecord(_) => "unknown-record",
    }
}

pub fn exact(c: &FieldElement) -> String {
    c.to_string()
}

pub fn exact_all<'a>(xs: impl IntoIterator<Item = &'a FieldElement>) -> Vec<String> {
    xs.into_iter().map(exact).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub form: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceJson {
    pub test: String,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorJson {
    pub code: String,
    pub message: String,
}

/// The common report. Command-specific data goes in `extra`, which is
/// flattened next to the fixed fields.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub input: Option<String>,
    pub orbit: Option<u8>,
    pub description: Option<String>,
    pub rk_real: Option<usize>,
    pub brk_real: Option<usize>,
    pub rk_complex: Option<usize>,
    pub brk_complex: Option<usize>,
    pub decomposition: Vec<TermJson>,
    pub evidence: Vec<EvidenceJson>,
    pub errors: Vec<ErrorJson>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Report {
    pub fn for_input(f: &TernaryCubic) -> Report {
        Report { input: Some(f.to_string()), ..Report::default() }
    }

    pub fn terms(&mut self, terms: &[Term]) {
        self.decomposition = terms
            .iter()
            .map(|(c, l)| TermJson { coeff: exact(c), form: format!("({l})^3") })
            .collect();
    }

    pub fn evidence(&mut self, test: impl Into<String>, outcome: impl Into<String>) {
        self.evidence.push(EvidenceJson { test: test.into(), outcome: outcome.into() });
    }

    pub fn error(&mut self, code: impl Into<String>, message: impl Into<String>) {
        self.errors.push(ErrorJson { code: code.into(), message: message.into() });
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.extra
            .insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn from_classification(r: &ClassificationReport) -> Report {
        let mut out = Report::for_input(&r.input);
        out.orbit = r.orbit;
        out.description = r.description.clone();
        out.rk_real = r.rk_real;
        out.brk_real = r.brk_real;
        out.rk_complex = r.rk_complex;
        out.brk_complex = r.brk_complex;
        out.terms(r.upper.certificate.terms());
        for e in &r.evidence {
            out.evidence(&e.test, &e.outcome);
        }
        for e in &r.errors {
            let code = if e == "orbit undetermined" { "undetermined" } else { "note" };
            out.error(code, e);
        }
        out.set(
            "lower_bound",
            serde_json::json!({ "value": r.lower.value, "source": r.lower.source.to_string() }),
        );
        out.set(
            "upper_bound",
            serde_json::json!({ "value": r.upper.value, "source": r.upper.source.to_string() }),
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// `c1*(l1)^3 + c2*(l2)^3 + ...`, readable back by the parser.
pub fn sum_of_cubes(terms: &[Term]) -> String {
    let mut s = String::new();
    for (i, (c, l)) in terms.iter().enumerate() {
        if i > 0 {
            s.push_str(" + ");
        }
        let _ = write!(s, "({c})*({l})^3");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_cubic, parse_scalar};
    use cubic_waring::catalog::builtin;
    use cubic_waring::poly::expand_cubes;

    #[test]
    fn exact_strings_round_trip() {
        for r in builtin() {
            for (c, l) in r.decomposition.iter().flatten() {
                assert_eq!(&parse_scalar(&exact(c)).unwrap(), c);
                for x in l.coeffs() {
                    assert_eq!(&parse_scalar(&exact(x)).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn printed_sums_reparse() {
        for r in builtin() {
            if let Some(t) = &r.decomposition {
                assert_eq!(parse_cubic(&sum_of_cubes(t)).unwrap(), expand_cubes(t), "row {}", r.id);
            }
        }
    }

    #[test]
    fn schema_fields() {
        let f = parse_cubic("x*y*z").unwrap();
        let v: Value = serde_json::from_str(&Report::for_input(&f).to_json()).unwrap();
        for key in [
            "input", "orbit", "description", "rk_real", "brk_real", "rk_complex", "brk_complex",
            "decomposition", "evidence", "errors",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
