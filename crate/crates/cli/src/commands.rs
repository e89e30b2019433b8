use std::fmt::Write as _;

use polar_words::bijection::{build_table, verify_bijection};
use polar_words::gf2::Gf2Subspace;
use polar_words::language::{classify_word, count_words, enumerate_words, g};
use polar_words::nset::{classify_subspace, enumerate_n};
use polar_words::polar::{build_geometry, ExportFormat};
use polar_words::{verify, Error};
use serde_json::{json, Value};

use crate::{Command, Format};

#[derive(Debug)]
pub enum Failure {
    /// Bad flag combination; exit 2.
    Usage(String),
    /// Size guard; exit 3.
    Guard(String),
    /// A check failed; the document is still printed, then exit 1.
    Verification(String),
    /// Anything else; exit 1.
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn guard(name: &str, n: usize, min: usize, max: usize) -> Result<(), Failure> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Failure::Guard(format!(
            "guard `{name}: {min} <= n <= {max}` violated: n = {n}"
        )))
    }
}

fn formats(command: &str, format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{command} does not support --format {}",
            format!("{format:?}").to_lowercase()
        )))
    }
}

/// Ensures exactly one trailing newline.
pub fn terminate(mut doc: String) -> String {
    while doc.ends_with('\n') {
        doc.pop();
    }
    doc.push('\n');
    doc
}

/// Text form of a subspace; the zero subspace prints as `0`.
fn subspace_text(v: &Gf2Subspace) -> String {
    if v.is_zero() {
        "0".to_string()
    } else {
        v.to_string()
    }
}

fn basis_json(v: &Gf2Subspace) -> Value {
    json!(v.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>())
}

/// A JSON number when it fits in `u64`, otherwise a decimal string.
fn big(v: u128) -> Value {
    u64::try_from(v).map_or_else(|_| json!(v.to_string()), |x| json!(x))
}

fn scalar(command: &str, format: Format, key: &str, n: usize, value: Value) -> Outcome {
    formats(command, format, &[Format::Text, Format::Json])?;
    Ok(match format {
        Format::Json => json!({ "n": n, key: value }).to_string(),
        _ => match value {
            Value::String(s) => s,
            other => other.to_string(),
        },
    })
}

pub fn run(command: &Command, format: Format) -> Outcome {
    use Format::*;
    match *command {
        Command::G { n } => {
            guard("g", n, 0, 63)?;
            scalar("g", format, "g", n, big(g(n)))
        }
        Command::CountWords { n } => {
            guard("count-words", n, 1, 60)?;
            scalar("count-words", format, "count", n, big(count_words(n)?))
        }
        Command::EnumerateWords { n, case } => {
            guard("enumerate-words", n, 1, 14)?;
            formats("enumerate-words", format, &[Text, Json, Csv])?;
            let rows: Vec<(String, u8)> = enumerate_words(n)?
                .iter()
                .map(|w| (w.to_string(), classify_word(w).case))
                .filter(|(_, c)| case.is_none_or(|want| want == *c))
                .collect();
            Ok(match format {
                Json => {
                    let words: Vec<Value> = rows
                        .iter()
                        .map(|(w, c)| json!({ "word": w, "case": c }))
                        .collect();
                    json!({ "n": n, "words": words }).to_string()
                }
                Csv => rows
                    .iter()
                    .fold("word,case\n".to_string(), |mut out, (w, c)| {
                        let _ = writeln!(out, "{w},{c}");
                        out
                    }),
                _ => rows
                    .iter()
                    .map(|(w, _)| w.as_str())
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Command::EnumerateSubspaces { n, case } => {
            guard("enumerate-subspaces", n, 1, 8)?;
            formats("enumerate-subspaces", format, &[Text, Json, Csv])?;
            let mut rows = Vec::new();
            for v in enumerate_n(n)? {
                let label = classify_subspace(&v)?;
                if case.is_none_or(|want| want == label.case) {
                    rows.push((v, label));
                }
            }
            Ok(match format {
                Json => {
                    let items: Vec<Value> = rows
                        .iter()
                        .map(|(v, l)| {
                            json!({
                                "basis": basis_json(v),
                                "dim": v.dim(),
                                "case": l.case,
                                "subcase": l.subcase.map(|s| s.to_string()),
                            })
                        })
                        .collect();
                    json!({ "n": n, "subspaces": items }).to_string()
                }
                Csv => {
                    let mut out = "subspace,dim,case,subcase\n".to_string();
                    for (v, l) in &rows {
                        let sub = l.subcase.map(|s| s.to_string()).unwrap_or_default();
                        let _ = writeln!(out, "{v},{},{},{sub}", v.dim(), l.case);
                    }
                    out
                }
                _ => rows
                    .iter()
                    .map(|(v, _)| subspace_text(v))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Command::Udim { n } => {
            guard("udim", n, 1, 4)?;
            formats("udim", format, &[Text, Json])?;
            let geo = build_geometry(n)?;
            Ok(match format {
                Json => json!({
                    "n": n,
                    "udim": geo.udim(),
                    "points": geo.points().len(),
                    "lines": geo.lines().len(),
                    "rank": geo.sigma_rank(),
                })
                .to_string(),
                _ => geo.udim().to_string(),
            })
        }
        Command::Strata { n, base } => {
            guard("strata", n, 1, 4)?;
            formats("strata", format, &[Text, Json])?;
            let geo = build_geometry(n)?;
            let report = geo.strata(base)?;
            let doc = match format {
                Json => {
                    let layers: Vec<Value> = report
                        .strata
                        .iter()
                        .zip(&report.components)
                        .enumerate()
                        .map(|(k, (pts, comps))| json!({ "k": k, "points": pts, "components": comps }))
                        .collect();
                    json!({
                        "n": n,
                        "base": base,
                        "strata": layers,
                        "distances_match": report.distances_match,
                        "lines_straddle": report.lines_straddle,
                        "components_match_subspaces": report.components_match_subspaces,
                    })
                    .to_string()
                }
                _ => {
                    let mut out = format!("base {base} [{}]\n", geo.points()[base]);
                    for (k, (pts, comps)) in
                        report.strata.iter().zip(&report.components).enumerate()
                    {
                        let _ =
                            writeln!(out, "k={k} points={} components={}", pts.len(), comps.len());
                    }
                    let _ = writeln!(out, "distances_match {}", report.distances_match);
                    let _ = writeln!(out, "lines_straddle {}", report.lines_straddle);
                    let _ = write!(
                        out,
                        "components_match_subspaces {}",
                        report.components_match_subspaces
                    );
                    out
                }
            };
            if report.all_hold() {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
        Command::Bijection { n, case } => {
            guard("bijection", n, 1, 7)?;
            formats("bijection", format, &[Text, Json, Csv])?;
            let report = verify_bijection(n)?;
            if !report.passed() {
                return Err(Failure::Verification(format!(
                    "bijection check failed for n = {n}: {:?}",
                    report.counterexamples
                )));
            }
            let rows: Vec<_> = build_table(n)?
                .forward
                .into_iter()
                .map(|(w, v)| (w, classify_word(&w).case, v))
                .filter(|(_, c, _)| case.is_none_or(|want| want == *c))
                .collect();
            Ok(match format {
                Json => {
                    let items: Vec<Value> = rows
                        .iter()
                        .map(|(w, c, v)| json!({ "word": w.to_string(), "case": c, "subspace": basis_json(v) }))
                        .collect();
                    json!({ "n": n, "rows": items }).to_string()
                }
                Csv => {
                    let mut out = "word,case,subspace_basis\n".to_string();
                    for (w, c, v) in &rows {
                        let _ = writeln!(out, "{w},{c},{v}");
                    }
                    out
                }
                _ => rows
                    .iter()
                    .map(|(w, c, v)| format!("{w} {c} {}", subspace_text(v)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Command::ExportIncidence { n } => {
            guard("export-incidence", n, 1, 4)?;
            let export = match format {
                Text | Dot => ExportFormat::Dot,
                Json => ExportFormat::Json,
                Csv => ExportFormat::Csv,
            };
            Ok(build_geometry(n)?.export(export))
        }
        Command::VerifyAll => {
            formats("verify-all", format, &[Text, Json])?;
            let outcomes = verify::run_all();
            let all = outcomes.iter().all(|o| o.passed);
            let doc = match format {
                Json => {
                    let items: Vec<Value> = outcomes
                        .iter()
                        .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail }))
                        .collect();
                    json!({ "passed": all, "criteria": items }).to_string()
                }
                _ => outcomes
                    .iter()
                    .map(|o| {
                        let verdict = if o.passed { "PASS" } else { "FAIL" };
                        format!("{verdict} {} {}: {}", o.id, o.name, o.detail)
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            if all {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
    }
}
