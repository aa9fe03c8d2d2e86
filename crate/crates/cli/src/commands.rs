//! Subcommands as pure functions from arguments to a report and exit code.

use std::fmt::Write as _;
use std::path::Path;

use cubic_waring::binaryrank::{binary_decompose, binary_real_rank, BinaryOrbit};
use cubic_waring::catalog::{self, ClauseOutcome, OrbitRecord};
use cubic_waring::classify::{classify_with, ClassifyOptions};
use cubic_waring::covariants::{conic_singular_point, hessian, polar_conic, ConicSingularity};
use cubic_waring::depaolis::depaolis;
use cubic_waring::{Error, LinearForm, ProjectivePoint, TernaryCubic};
use serde_json::json;

use crate::catalog_file::{self, CatalogFileError};
use crate::parse::{parse_binary, parse_cubic, parse_triple, ParseError};
use crate::report::{error_code, exact, exact_all, sum_of_cubes, Report};
use crate::sample;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(report: Report, text: String) -> Outcome {
        Outcome { report, text, exit: EXIT_OK }
    }
}

fn parse_failure(what: &str, src: &str, e: ParseError) -> Outcome {
    let mut report = Report { input: Some(src.into()), ..Report::default() };
    report.error(e.code(), format!("{what}: {e}"));
    let mut text = format!("error: {what}: {e}\n");
    if let ParseError::Syntax { pos, .. } = e {
        let _ = writeln!(text, "  {src}\n  {}^", " ".repeat(pos));
    }
    Outcome { report, text, exit: EXIT_USAGE }
}

fn math_failure(mut report: Report, context: &str, e: &Error) -> Outcome {
    report.error(error_code(e), format!("{context}: {e}"));
    Outcome { text: format!("error: {context}: {e}\n"), report, exit: EXIT_FAILURE }
}

fn cubic_arg(src: &str) -> Result<TernaryCubic, Outcome> {
    parse_cubic(src).map_err(|e| parse_failure("polynomial", src, e))
}

fn write_terms(text: &mut String, terms: &[cubic_waring::poly::Term]) {
    for (c, l) in terms {
        let _ = writeln!(text, "  {c} * ({l})^3");
    }
}

pub fn classify_cmd(src: &str, line: Option<&str>, peel: bool) -> Outcome {
    let f = match cubic_arg(src) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let line = match line.map(|l| (l, parse_triple(l))) {
        None => None,
        Some((_, Ok(c))) => match LinearForm::new(c) {
            Ok(l) if !l.is_zero() => Some(l),
            _ => return parse_failure("line", src, ParseError::Syntax { pos: 0, message: "zero line".into() }),
        },
        Some((l, Err(e))) => return parse_failure("line", l, e),
    };
    let r = match classify_with(&f, &ClassifyOptions { line, peel_search: peel }) {
        Ok(r) => r,
        Err(e) => return math_failure(Report::for_input(&f), "classify", &e),
    };
    let report = Report::from_classification(&r);
    let mut text = format!("input: {f}\n");
    match r.orbit {
        Some(n) => {
            let _ = writeln!(text, "orbit: {n} ({})", r.description.as_deref().unwrap_or(""));
            let show = |x: Option<usize>| x.map_or("?".to_string(), |v| v.to_string());
            let _ = writeln!(text, "real rank: {}, border rank: {}", show(r.rk_real), show(r.brk_real));
            let _ = writeln!(text, "complex rank: {}, border rank: {}", show(r.rk_complex), show(r.brk_complex));
        }
        None => text.push_str("orbit: UNDETERMINED\n"),
    }
    let _ = writeln!(
        text,
        "bounds: {} <= rank <= {} (lower: {}; upper: {})",
        r.lower.value, r.upper.value, r.lower.source, r.upper.source
    );
    text.push_str("certificate:\n");
    write_terms(&mut text, r.upper.certificate.terms());
    text.push_str("evidence:\n");
    for e in &r.evidence {
        let _ = writeln!(text, "  {}: {}", e.test, e.outcome);
    }
    for e in &r.errors {
        let _ = writeln!(text, "note: {e}");
    }
    let exit = if r.is_determined() { EXIT_OK } else { EXIT_FAILURE };
    Outcome { report, text, exit }
}

pub fn decompose_cmd(src: &str) -> Outcome {
    let mut o = classify_cmd(src, None, true);
    if o.exit == EXIT_USAGE {
        return o;
    }
    let f = parse_cubic(src).expect("parsed above");
    let n = o.report.decomposition.len();
    let mut text = format!("{f} =\n");
    for t in &o.report.decomposition {
        let _ = writeln!(text, "  {} * {}", t.coeff, t.form);
    }
    match (o.report.rk_real, o.report.extra.get("lower_bound")) {
        (Some(rk), Some(lb)) => {
            let _ = writeln!(text, "{n} cubes; real rank {rk}; lower bound {}", lb["value"]);
        }
        _ => {
            let _ = writeln!(text, "{n} cubes; rank not determined");
        }
    }
    o.text = text;
    o.exit = EXIT_OK;
    o
}

pub fn hessian_cmd(src: &str) -> Outcome {
    let f = match cubic_arg(src) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let h = hessian(&f);
    let mut report = Report::for_input(&f);
    report.set("hessian", h.to_string());
    report.set("hessian_coefficients", exact_all(h.coeffs()));
    Outcome::ok(report, format!("H({f}) = {h}\n"))
}

pub fn polar_cmd(src: &str, point: &str) -> Outcome {
    let f = match cubic_arg(src) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let y = match parse_triple(point) {
        Ok(y) => y,
        Err(e) => return parse_failure("point", point, e),
    };
    let mut report = Report::for_input(&f);
    let p = match ProjectivePoint::new(y.clone()) {
        Ok(p) => p,
        Err(e) => return math_failure(report, "point", &e),
    };
    let c = polar_conic(&f, &y);
    let q = c.quadratic();
    let inertia = c.gram.signature();
    let gram: Vec<Vec<String>> = c.gram.to_rows().iter().map(exact_all).collect();
    report.set("point", exact_all(p.coords()));
    report.set("polar_conic", q.to_string());
    report.set("gram", &gram);
    report.set(
        "inertia",
        json!({ "positive": inertia.positive, "negative": inertia.negative, "zero": inertia.zero }),
    );
    let mut text = format!("polar conic of {f} at {p}:\n  {q}\n");
    let _ = writeln!(text, "rank {} (+{}, -{})", inertia.rank(), inertia.positive, inertia.negative);
    match conic_singular_point(&c) {
        Ok(ConicSingularity::Point(v)) => {
            report.set("singular", json!({ "point": exact_all(v.coords()) }));
            let _ = writeln!(text, "singular point {v}");
        }
        Ok(ConicSingularity::DoubleLine(l)) => {
            report.set("singular", json!({ "line": exact_all(l.coeffs()) }));
            let _ = writeln!(text, "double line {l}");
        }
        Err(Error::NonsingularConic) => {
            report.set("singular", serde_json::Value::Null);
            text.push_str("nonsingular\n");
        }
        Err(e) => {
            report.error(error_code(&e), e.to_string());
            let _ = writeln!(text, "{e}");
        }
    }
    Outcome::ok(report, text)
}

pub fn depaolis_cmd(src: &str, line: &str) -> Outcome {
    let f = match cubic_arg(src) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let l0 = match parse_triple(line) {
        Ok(c) => c,
        Err(e) => return parse_failure("line", line, e),
    };
    let report = Report::for_input(&f);
    let l0 = match LinearForm::new(l0) {
        Ok(l) if !l.is_zero() => l,
        Ok(_) => return math_failure(report, "line", &Error::ZeroVector),
        Err(e) => return math_failure(report, "line", &e),
    };
    let (d, trace) = match depaolis(&f, &l0) {
        Ok(x) => x,
        Err(e) => return math_failure(report, "de Paolis", &e),
    };
    let mut report = report;
    report.terms(d.terms());
    let pts = |ps: &[ProjectivePoint]| ps.iter().map(|p| exact_all(p.coords())).collect::<Vec<_>>();
    report.set(
        "trace",
        json!({
            "l0": exact_all(trace.l0.coeffs()),
            "points": pts(&trace.points),
            "singular_points": pts(&trace.singular_points),
            "lines": trace.lines.iter().map(|l| exact_all(l.coeffs())).collect::<Vec<_>>(),
            "coefficients": exact_all(&trace.coefficients),
        }),
    );
    let mut text = format!("F = {f}\nl0 = {}\n", trace.l0);
    for (i, (p, q)) in trace.points.iter().zip(&trace.singular_points).enumerate() {
        let _ = writeln!(text, "P{} = {p}, Q{} = {q}", i + 1, i + 1);
    }
    for (i, l) in trace.lines.iter().enumerate() {
        let _ = writeln!(text, "l{} = {l}", i + 1);
    }
    for (i, c) in trace.coefficients.iter().enumerate() {
        let _ = writeln!(text, "c{i} = {c}");
    }
    let _ = writeln!(text, "F = {}", sum_of_cubes(d.terms()));
    Outcome::ok(report, text)
}

fn binary_orbit_name(o: BinaryOrbit) -> &'static str {
    match o {
        BinaryOrbit::C3 => "perfect cube",
        BinaryOrbit::GenericPositive => "one real root",
        BinaryOrbit::GenericNegative => "three distinct real roots",
        BinaryOrbit::TangentSurface => "a double root",
    }
}

pub fn binary_cmd(src: &str) -> Outcome {
    let f = match parse_binary(src) {
        Ok(f) => f,
        Err(e) => return parse_failure("binary cubic", src, e),
    };
    let mut report = Report { input: Some(f.to_string()), ..Report::default() };
    let class = match binary_real_rank(&f) {
        Ok(c) => c,
        Err(e) => return math_failure(report, "binary rank", &e),
    };
    let d = match binary_decompose(&f) {
        Ok(d) => d,
        Err(e) => return math_failure(report, "binary decomposition", &e),
    };
    report.description = Some(binary_orbit_name(class.orbit).into());
    report.rk_real = Some(class.rank);
    report.terms(d.terms());
    report.evidence("catalecticant rank", class.catalecticant_rank.to_string());
    report.evidence("discriminant", exact(&class.discriminant));
    report.set(
        "binary",
        json!({
            "rank": class.rank,
            "catalecticant_rank": class.catalecticant_rank,
            "discriminant": exact(&class.discriminant),
            "discriminant_sign": class.discriminant.signum(),
        }),
    );
    let mut text = format!("{f}: {}\n", binary_orbit_name(class.orbit));
    let _ = writeln!(
        text,
        "real rank {}, catalecticant rank {}, discriminant {}",
        class.rank, class.catalecticant_rank, class.discriminant
    );
    let _ = writeln!(text, "{f} = {}", sum_of_cubes(d.terms()));
    Outcome::ok(report, text)
}

fn load_catalog(path: Option<&Path>) -> Result<Vec<OrbitRecord>, CatalogFileError> {
    match path {
        Some(p) => catalog_file::load(p),
        None => catalog_file::bundled(),
    }
}

pub fn verify_catalog_cmd(path: Option<&Path>) -> Outcome {
    let mut report = Report::default();
    let records = match load_catalog(path) {
        Ok(r) => r,
        Err(e) => {
            report.error(e.code(), e.to_string());
            return Outcome { text: format!("error: {e}\n"), report, exit: EXIT_USAGE };
        }
    };
    let summary = catalog::verify_catalog(&records);
    let mut text = String::new();
    let mut rows = Vec::new();
    for (id, res) in &summary.reports {
        let rec = catalog::find(&records, *id).expect("reported ids come from the file");
        match res {
            Ok(v) => {
                let mut line = format!("PASS {id}");
                let mut notes = Vec::new();
                match v.terms {
                    Some(n) => notes.push(format!("{n} terms")),
                    None => notes.push("no stored decomposition".into()),
                }
                if let Some(t) = &v.tower {
                    notes.push(format!("over Q(sqrt({t}))"));
                }
                if v.repaired {
                    let orig = match catalog::verify_original(rec) {
                        Ok(()) => "displayed constants also expand".to_string(),
                        Err(_) => "displayed constants do not expand, repaired".to_string(),
                    };
                    notes.push(orig);
                }
                let _ = write!(line, " ({})", notes.join(", "));
                let _ = writeln!(text, "{line}");
                let clauses: Vec<_> = v
                    .clauses
                    .iter()
                    .map(|(c, o)| match o {
                        ClauseOutcome::Passed(d) => json!({ "clause": c.to_string(), "status": "passed", "detail": d }),
                        ClauseOutcome::Skipped(d) => json!({ "clause": c.to_string(), "status": "skipped", "detail": d }),
                    })
                    .collect();
                rows.push(json!({
                    "id": id.to_string(),
                    "status": "PASS",
                    "terms": v.terms,
                    "tower": v.tower.as_ref().map(|t| t.to_string()),
                    "repaired": v.repaired,
                    "clauses": clauses,
                }));
            }
            Err(e) => {
                let _ = writeln!(text, "FAIL {id}: {e}");
                report.error(error_code(e), e.to_string());
                rows.push(json!({ "id": id.to_string(), "status": "FAIL", "error": e.to_string() }));
            }
        }
    }
    let mut checks = Vec::new();
    for c in &summary.cross_checks {
        let _ = writeln!(text, "check {}: {} ({})", c.name, if c.passed { "ok" } else { "FAILED" }, c.detail);
        checks.push(json!({ "name": c.name, "passed": c.passed, "detail": c.detail }));
        if !c.passed {
            report.error("cross-check-failed", format!("{}: {}", c.name, c.detail));
        }
    }
    let _ = writeln!(text, "{}/{} records verified", summary.pass_count(), summary.reports.len());
    report.set("records", rows);
    report.set("cross_checks", checks);
    let exit = if summary.passed() { EXIT_OK } else { EXIT_FAILURE };
    Outcome { report, text, exit }
}

pub fn sample_cmd(count: usize, seed: u64, bound: i64) -> Outcome {
    let start = std::time::Instant::now();
    let s = sample::run(count, seed, bound);
    let elapsed = start.elapsed();
    let mut report = Report::default();
    report.set("sample", &s);
    let mut text = format!("{count} cubics, seed {seed}, coefficients in [-{bound}, {bound}]\n");
    for (k, v) in &s.by_orbit {
        let _ = writeln!(text, "  orbit {k}: {v}");
    }
    let _ = writeln!(
        text,
        "row 11 with rank 4: {} ({:.1}%)\nsmooth: {}, undetermined: {} ({} smooth)\nelapsed: {:.2?}",
        s.typical,
        100.0 * s.typical_fraction(),
        s.smooth,
        s.undetermined,
        s.smooth_undetermined,
        elapsed
    );
    if s.undetermined > 0 {
        report.error("undetermined", format!("{} inputs undetermined", s.undetermined));
    }
    if s.bad_certificates > 0 {
        report.error("expansion-mismatch", format!("{} certificates failed", s.bad_certificates));
    }
    let exit = if s.undetermined == 0 && s.bad_certificates == 0 { EXIT_OK } else { EXIT_FAILURE };
    Outcome { report, text, exit }
}

pub fn export_catalog_cmd() -> String {
    catalog_file::to_toml(&catalog::builtin())
}
