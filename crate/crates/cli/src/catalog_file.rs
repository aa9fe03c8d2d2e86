//! Versioned TOML form of the orbit catalog.
//!
//! Every coefficient is an exact string (`"3/4"`, `"1/2-sqrt(5)"`). Forms are
//! arrays of ten coefficients in the order
//! `x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3`; linear forms are
//! arrays of three.

use std::path::Path;

use cubic_waring::catalog::{HessianCheck, OrbitRecord, RecordId};
use cubic_waring::poly::Term;
use cubic_waring::{ExactMatrix, FieldElement, LinearForm, TernaryCubic};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::parse_scalar;

pub const FORMAT: &str = "cubic-waring-catalog";
pub const VERSION: u32 = 1;

/// The catalog shipped with the binary.
pub const BUNDLED: &str = include_str!("../data/catalog.toml");

#[derive(Debug, Error)]
pub enum CatalogFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed catalog: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("not a catalog file (format = {0:?})")]
    Format(String),
    #[error("unsupported catalog version {0} (expected {VERSION})")]
    Version(u32),
    #[error("record {id}: field {field}: {message}")]
    Field { id: String, field: &'static str, message: String },
}

impl CatalogFileError {
    pub fn code(&self) -> &'static str {
        match self {
            CatalogFileError::Io { .. } => "catalog-io",
            CatalogFileError::Toml(_) | CatalogFileError::Format(_) => "catalog-malformed",
            CatalogFileError::Version(_) => "catalog-version",
            CatalogFileError::Field { .. } => "catalog-field",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub format: String,
    pub version: u32,
    #[serde(rename = "record")]
    pub records: Vec<RecordEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermEntry {
    pub coeff: String,
    pub line: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OriginalEntry {
    pub form: Vec<String>,
    pub terms: Vec<TermEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecordEntry {
    pub id: String,
    pub description: String,
    pub normal_form: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rk_real: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brk_real: Option<usize>,
    pub rk_complex: usize,
    pub brk_complex: usize,
    pub hessian_description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hessian_expected: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hessian_listed: Option<Vec<String>>,
    pub hessian_check: String,
    pub decomposition_form: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to_normal_form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub complex_correspondence: Vec<u8>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<TermEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub original: Option<OriginalEntry>,
}

fn strings<'a>(xs: impl IntoIterator<Item = &'a FieldElement>) -> Vec<String> {
    xs.into_iter().map(ToString::to_string).collect()
}

fn term_entry((c, l): &Term) -> TermEntry {
    TermEntry {
        coeff: c.to_string(),
        line: l.coeffs().clone().map(|x| x.to_string()),
    }
}

fn record_entry(r: &OrbitRecord) -> RecordEntry {
    RecordEntry {
        id: r.id.to_string(),
        description: r.description.clone(),
        normal_form: strings(r.normal_form.coeffs()),
        rk_real: r.rk_real,
        brk_real: r.brk_real,
        rk_complex: r.rk_complex,
        brk_complex: r.brk_complex,
        hessian_description: r.hessian_description.clone(),
        hessian_expected: r.hessian_expected.as_ref().map(|h| strings(h.coeffs())),
        hessian_listed: r.hessian_listed.as_ref().map(|h| strings(h.coeffs())),
        hessian_check: match r.hessian_check {
            HessianCheck::Proportional => "proportional",
            HessianCheck::PerfectCube => "perfect-cube",
        }
        .into(),
        decomposition_form: strings(r.decomposition_form.coeffs()),
        to_normal_form: r
            .to_normal_form
            .as_ref()
            .map(|m| m.to_rows().iter().map(strings).collect()),
        complex_correspondence: r.complex_correspondence.clone(),
        note: r.note.clone(),
        decomposition: r.decomposition.as_ref().map(|t| t.iter().map(term_entry).collect()),
        original: r.original_decomposition.as_ref().map(|(t, g)| OriginalEntry {
            form: strings(g.coeffs()),
            terms: t.iter().map(term_entry).collect(),
        }),
    }
}

pub fn to_file(records: &[OrbitRecord]) -> CatalogFile {
    CatalogFile {
        format: FORMAT.into(),
        version: VERSION,
        records: records.iter().map(record_entry).collect(),
    }
}

pub fn to_toml(records: &[OrbitRecord]) -> String {
    toml::to_string(&to_file(records)).expect("catalog serializes")
}

struct Ctx<'a> {
    id: &'a str,
}

impl Ctx<'_> {
    fn err(&self, field: &'static str, message: impl ToString) -> CatalogFileError {
        CatalogFileError::Field { id: self.id.into(), field, message: message.to_string() }
    }

    fn scalar(&self, field: &'static str, s: &str) -> Result<FieldElement, CatalogFileError> {
        parse_scalar(s).map_err(|e| self.err(field, format!("{s:?}: {e}")))
    }

    fn cubic(&self, field: &'static str, xs: &[String]) -> Result<TernaryCubic, CatalogFileError> {
        let coeffs: Vec<FieldElement> = xs.iter().map(|s| self.scalar(field, s)).collect::<Result<_, _>>()?;
        let coeffs: [FieldElement; 10] = coeffs
            .try_into()
            .map_err(|v: Vec<_>| self.err(field, format!("expected 10 coefficients, found {}", v.len())))?;
        TernaryCubic::new(coeffs).map_err(|e| self.err(field, e))
    }

    fn terms(&self, field: &'static str, ts: &[TermEntry]) -> Result<Vec<Term>, CatalogFileError> {
        ts.iter()
            .map(|t| {
                let c = self.scalar(field, &t.coeff)?;
                let [a, b, d] = &t.line;
                let l = [self.scalar(field, a)?, self.scalar(field, b)?, self.scalar(field, d)?];
                Ok((c, LinearForm::new(l).map_err(|e| self.err(field, e))?))
            })
            .collect()
    }

    fn matrix(&self, field: &'static str, rows: &[Vec<String>]) -> Result<ExactMatrix, CatalogFileError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| self.scalar(field, s)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(self.err(field, "expected a 3x3 matrix"));
        }
        ExactMatrix::from_rows(rows).map_err(|e| self.err(field, e))
    }
}

fn record_from(e: &RecordEntry) -> Result<OrbitRecord, CatalogFileError> {
    let cx = Ctx { id: &e.id };
    let id: RecordId = e.id.parse().map_err(|err| cx.err("id", err))?;
    let hessian_check = match e.hessian_check.as_str() {
        "proportional" => HessianCheck::Proportional,
        "perfect-cube" => HessianCheck::PerfectCube,
        other => return Err(cx.err("hessian_check", format!("unknown value {other:?}"))),
    };
    let r = OrbitRecord {
        id,
        description: e.description.clone(),
        normal_form: cx.cubic("normal_form", &e.normal_form)?,
        rk_real: e.rk_real,
        brk_real: e.brk_real,
        rk_complex: e.rk_complex,
        brk_complex: e.brk_complex,
        hessian_description: e.hessian_description.clone(),
        hessian_expected: e.hessian_expected.as_deref().map(|h| cx.cubic("hessian_expected", h)).transpose()?,
        hessian_listed: e.hessian_listed.as_deref().map(|h| cx.cubic("hessian_listed", h)).transpose()?,
        hessian_check,
        decomposition: e.decomposition.as_deref().map(|t| cx.terms("decomposition", t)).transpose()?,
        decomposition_form: cx.cubic("decomposition_form", &e.decomposition_form)?,
        to_normal_form: e.to_normal_form.as_deref().map(|m| cx.matrix("to_normal_form", m)).transpose()?,
        original_decomposition: e
            .original
            .as_ref()
            .map(|o| Ok::<_, CatalogFileError>((cx.terms("original", &o.terms)?, cx.cubic("original", &o.form)?)))
            .transpose()?,
        complex_correspondence: e.complex_correspondence.clone(),
        note: e.note.clone(),
    };
    single_tower(&r).map_err(|err| cx.err("coefficients", err))?;
    Ok(r)
}

/// All numbers of a record must live in one field `Q(sqrt(d))`.
fn single_tower(r: &OrbitRecord) -> cubic_waring::Result<()> {
    let forms = [Some(&r.normal_form), Some(&r.decomposition_form), r.hessian_expected.as_ref(), r.hessian_listed.as_ref()];
    let mut all: Vec<&FieldElement> = forms.into_iter().flatten().flat_map(|f| f.coeffs()).collect();
    let terms = r.decomposition.iter().chain(r.original_decomposition.iter().map(|(t, _)| t));
    for (c, l) in terms.flatten() {
        all.push(c);
        all.extend(l.coeffs());
    }
    if let Some((_, g)) = &r.original_decomposition {
        all.extend(g.coeffs());
    }
    let rows = r.to_normal_form.as_ref().map(ExactMatrix::to_rows).unwrap_or_default();
    all.extend(rows.iter().flatten());
    FieldElement::common_tower(all).map(|_| ())
}

pub fn from_toml(text: &str) -> Result<Vec<OrbitRecord>, CatalogFileError> {
    let file: CatalogFile = toml::from_str(text)?;
    if file.format != FORMAT {
        return Err(CatalogFileError::Format(file.format));
    }
    if file.version != VERSION {
        return Err(CatalogFileError::Version(file.version));
    }
    file.records.iter().map(record_from).collect()
}

pub fn load(path: &Path) -> Result<Vec<OrbitRecord>, CatalogFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_toml(&text)
}

pub fn bundled() -> Result<Vec<OrbitRecord>, CatalogFileError> {
    from_toml(BUNDLED)
}
